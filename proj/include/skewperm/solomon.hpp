#pragma once

// Compositions, the descent-algebra basis B_p and membership in its span.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewperm/groupalg.hpp"
#include "skewperm/linalg.hpp"
#include "skewperm/perm.hpp"
#include "skewperm/rational.hpp"

namespace skewperm {

class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Bit k-1 of `mask` set means k is a partial sum (1 <= k <= n-1).
    static Composition from_mask(std::uint32_t mask, int n) {
        if (n < 1 || n > 31) throw std::invalid_argument("composition degree out of range");
        if (mask >> (n - 1)) throw std::invalid_argument("mask has bits beyond n-1");
        std::vector<int> parts;
        int last = 0;
        for (int k = 1; k < n; ++k)
            if (mask >> (k - 1) & 1u) {
                parts.push_back(k - last);
                last = k;
            }
        parts.push_back(n - last);
        return Composition(std::move(parts));
    }

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }

    /// Partial sums below n.
    std::set<int> partial_sums() const {
        std::set<int> out;
        int s = 0;
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) out.insert(s += parts_[i]);
        return out;
    }

    std::uint32_t mask() const {
        std::uint32_t m = 0;
        for (int k : partial_sums()) m |= 1u << (k - 1);
        return m;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All 2^{n-1} compositions of n, ordered by partial-sum mask.
inline std::vector<Composition> compositions(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("compositions: n out of range");
    std::vector<Composition> out;
    for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m) out.push_back(Composition::from_mask(m, n));
    return out;
}

/// (1,...,1,2,1,...,1) with the 2 in position k: every partial sum except k.
inline Composition p_composition(int k, int n) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("p_composition: k out of range");
    const std::uint32_t full = (1u << (n - 1)) - 1;
    return Composition::from_mask(full & ~(1u << (k - 1)), n);
}

inline std::uint32_t descent_mask(const std::uint8_t* word, int n) {
    std::uint32_t m = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (word[i] > word[i + 1]) m |= 1u << i;
    return m;
}

inline GAElement b_element(const Composition& p) {
    const int n = p.n();
    check_degree(n);
    auto table = PermutationTable::get(n);
    const auto mask = p.mask();
    std::vector<Rational> c(table->size(), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        if ((descent_mask(table->row(k), n) & ~mask) == 0) c[k] = 1;
    return GAElement(n, std::move(c));
}

struct MembershipResult {
    bool member = false;
    std::vector<std::pair<Composition, Rational>> coefficients;  // in compositions(n) order
    GAElement residual{1};  // zero when member
};

namespace detail {

struct SolomonBasis {
    std::vector<Composition> comps;
    std::vector<std::uint32_t> desc;  // descent mask of every permutation
    linalg::RatMatrix gram;           // |{s : Des(s) within S_p and S_q}|
};

inline std::shared_ptr<const SolomonBasis> solomon_basis(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const SolomonBasis>> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    auto b = std::make_shared<SolomonBasis>();
    b->comps = compositions(n);
    auto table = PermutationTable::get(n);
    b->desc.resize(table->size());
    std::vector<std::uint64_t> count(std::size_t{1} << (n - 1), 0);
    for (std::size_t k = 0; k < table->size(); ++k) ++count[b->desc[k] = descent_mask(table->row(k), n)];
    const std::size_t sz = b->comps.size();
    b->gram.assign(sz, std::vector<Rational>(sz));
    for (std::size_t p = 0; p < sz; ++p)
        for (std::size_t q = 0; q < sz; ++q) {
            const auto both = b->comps[p].mask() & b->comps[q].mask();
            std::uint64_t c = 0;
            for (std::size_t d = 0; d < count.size(); ++d)
                if ((d & ~both) == 0) c += count[d];
            b->gram[p][q] = Rational(Integer(static_cast<unsigned long>(c)));
        }
    cache.emplace(n, b);
    return b;
}

}  // namespace detail

/// Solves the normal equations against {B_p}, then checks the residual exactly.
inline MembershipResult solomon_membership(const GAElement& u) {
    const int n = u.degree();
    if (n < 1) throw std::invalid_argument("solomon_membership: empty element");
    check_degree(n);
    const auto basis = detail::solomon_basis(n);
    const std::size_t sz = basis->comps.size();
    std::vector<std::uint32_t> masks(sz);
    for (std::size_t p = 0; p < sz; ++p) masks[p] = basis->comps[p].mask();

    std::vector<Rational> rhs(sz, Rational(0));
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] == 0) continue;
        for (std::size_t p = 0; p < sz; ++p)
            if ((basis->desc[k] & ~masks[p]) == 0) rhs[p] += u[k];
    }
    auto x = linalg::solve(basis->gram, std::move(rhs));
    if (!x) throw std::logic_error("normal equations inconsistent");

    // Coefficient of s in sum c_p B_p is the sum of c_p over masks containing Des(s).
    std::vector<Rational> by_mask(std::size_t{1} << (n - 1), Rational(0));
    for (std::size_t p = 0; p < sz; ++p) by_mask[masks[p]] = (*x)[p];
    for (std::size_t bit = 0; bit + 1 < static_cast<std::size_t>(n); ++bit)  // superset sums
        for (std::size_t m = 0; m < by_mask.size(); ++m)
            if (!(m >> bit & 1)) by_mask[m] += by_mask[m | (std::size_t{1} << bit)];
    std::vector<Rational> res(u.size());
    bool zero = true;
    for (std::size_t k = 0; k < u.size(); ++k) {
        res[k] = u[k] - by_mask[basis->desc[k]];
        zero = zero && res[k] == 0;
    }
    MembershipResult out;
    out.member = zero;
    for (std::size_t p = 0; p < sz; ++p) out.coefficients.emplace_back(basis->comps[p], (*x)[p]);
    out.residual = GAElement(n, std::move(res));
    return out;
}

/// Closed-form expansion of u_des (n-1 on (1^n), -1 on p_k) or u_maj
/// (n(n-1)/2 on (1^n), -k on p_k), in compositions(n) order.
inline std::vector<Rational> descent_expansion(StatKind kind, int n) {
    if (kind != StatKind::des && kind != StatKind::maj) throw std::invalid_argument("expansion exists for des and maj only");
    if (n < 2) throw std::invalid_argument("descent_expansion requires n >= 2");
    std::vector<Rational> c(std::size_t{1} << (n - 1), Rational(0));
    const std::uint32_t full = (1u << (n - 1)) - 1;
    c[full] = kind == StatKind::des ? n - 1 : n * (n - 1) / 2;
    for (int k = 1; k < n; ++k) c[p_composition(k, n).mask()] = kind == StatKind::des ? -1 : -k;
    return c;
}

struct ClosureReport {
    int n = 0;
    std::size_t pairs_checked = 0;
    bool passed = false;
    std::vector<std::pair<Composition, Composition>> failures;
};

/// Checks B_p * B_q in span{B_r} for all ordered pairs.
inline ClosureReport closure_check(int n, Convention conv) {
    if (n < 1 || n > 6) throw std::invalid_argument("closure_check requires 1 <= n <= 6");
    const auto comps = compositions(n);
    std::vector<GAElement> b;
    for (const auto& p : comps) b.push_back(b_element(p));
    ClosureReport rep;
    rep.n = n;
    for (std::size_t p = 0; p < b.size(); ++p)
        for (std::size_t q = 0; q < b.size(); ++q) {
            ++rep.pairs_checked;
            if (!solomon_membership(convolve(b[p], b[q], conv)).member) rep.failures.emplace_back(comps[p], comps[q]);
        }
    rep.passed = rep.failures.empty();
    return rep;
}

inline ClosureReport closure_check(int n) { return closure_check(n, convention()); }

}  // namespace skewperm
