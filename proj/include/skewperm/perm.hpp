#pragma once

// Permutations of {1..n}, their product under the configured convention,
// the statistics maj/des/inv/exc/fix/comaj, and the two characters used to
// build the isotypic projections.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewperm/config.hpp"

namespace skewperm {

inline constexpr int kMaxTableDegree = 12;

inline std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

class Permutation {
public:
    /// One-line notation, values 1..n.
    explicit Permutation(std::span<const int> one_line) {
        const auto n = one_line.size();
        if (n == 0 || n > 255) throw std::invalid_argument("permutation degree must be in 1..255");
        std::vector<bool> seen(n + 1, false);
        images_.reserve(n);
        for (int v : one_line) {
            if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[v] = true;
            images_.push_back(static_cast<std::uint8_t>(v));
        }
    }
    Permutation(std::initializer_list<int> one_line)
        : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(v);
    }

    static Permutation reversal(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return Permutation(v);
    }

    int degree() const { return static_cast<int>(images_.size()); }

    /// sigma(i) for 1-based i.
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

    std::span<const std::uint8_t> images() const { return images_; }

    std::vector<int> one_line() const { return {images_.begin(), images_.end()}; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i + 1);
        return Permutation(inv);
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i + 1) return false;
        return true;
    }

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(images_[i]);
        }
        return s + "]";
    }

private:
    std::vector<std::uint8_t> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

/// Point-wise composition (outer ∘ inner)(i) = outer(inner(i)).
inline Permutation apply_after(const Permutation& outer, const Permutation& inner) {
    if (outer.degree() != inner.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> r(inner.degree());
    for (int i = 1; i <= inner.degree(); ++i) r[i - 1] = outer(inner(i));
    return Permutation(r);
}

/// Group product a·b under the given convention.
inline Permutation compose(const Permutation& a, const Permutation& b, Convention c) {
    return c == Convention::variant_a ? apply_after(a, b) : apply_after(b, a);
}

inline Permutation compose(const Permutation& a, const Permutation& b) { return compose(a, b, convention()); }

// ---------------------------------------------------------------------------
// Statistics

enum class StatKind { maj, des, inv, exc, fix, comaj };

inline constexpr std::array<StatKind, 6> kAllStats{StatKind::maj, StatKind::des, StatKind::inv,
                                                   StatKind::exc, StatKind::fix, StatKind::comaj};

inline std::string_view name(StatKind k) {
    switch (k) {
        case StatKind::maj: return "maj";
        case StatKind::des: return "des";
        case StatKind::inv: return "inv";
        case StatKind::exc: return "exc";
        case StatKind::fix: return "fix";
        case StatKind::comaj: return "comaj";
    }
    return "?";
}

inline StatKind parse_stat(std::string_view s) {
    for (auto k : kAllStats)
        if (name(k) == s) return k;
    throw std::invalid_argument("unknown statistic: " + std::string(s));
}

inline std::ostream& operator<<(std::ostream& os, StatKind k) { return os << name(k); }

/// Des(sigma) = { i in 1..n-1 : sigma(i) > sigma(i+1) }.
inline std::set<int> descent_set(const Permutation& s) {
    std::set<int> d;
    for (int i = 1; i < s.degree(); ++i)
        if (s(i) > s(i + 1)) d.insert(i);
    return d;
}

inline int stat(StatKind kind, const Permutation& s) {
    const int n = s.degree();
    const auto img = s.images();
    int r = 0;
    switch (kind) {
        case StatKind::des:
            for (int i = 0; i + 1 < n; ++i) r += img[i] > img[i + 1];
            return r;
        case StatKind::maj:
            for (int i = 0; i + 1 < n; ++i)
                if (img[i] > img[i + 1]) r += i + 1;
            return r;
        case StatKind::inv:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) r += img[i] > img[j];
            return r;
        case StatKind::exc:
            // i ranges over 1..n-1; sigma(n) > n is impossible so this equals
            // the usual count over 1..n.
            for (int i = 0; i + 1 < n; ++i) r += img[i] > i + 1;
            return r;
        case StatKind::fix:
            for (int i = 0; i < n; ++i) r += img[i] == i + 1;
            return r;
        case StatKind::comaj:
            for (int i = 0; i + 1 < n; ++i)
                if (img[i] > img[i + 1]) r += n - (i + 1);
            return r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Enumeration, rank, unrank (lexicographic on one-line notation)

inline void check_degree(int n) {
    if (n < 1) throw std::invalid_argument("degree must be at least 1");
    if (n > degree_cap())
        throw std::out_of_range("degree " + std::to_string(n) + " exceeds cap " + std::to_string(degree_cap()));
}

/// Lexicographic index of a 0-based one-line word of length n <= 32.
inline std::uint64_t rank_zero_based(const std::uint8_t* word, int n) {
    std::uint32_t used = 0;
    std::uint64_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const unsigned v = word[i];
        const unsigned smaller_unused = v - static_cast<unsigned>(std::popcount(used & ((1u << v) - 1u)));
        idx = idx * static_cast<std::uint64_t>(n - i) + smaller_unused;
        used |= 1u << v;
    }
    return idx;
}

inline std::uint64_t rank(const Permutation& s) {
    std::array<std::uint8_t, 32> w{};
    const int n = s.degree();
    if (n > 20) throw std::out_of_range("rank: degree too large");
    for (int i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>(s.images()[i] - 1);
    return rank_zero_based(w.data(), n);
}

/// Lehmer-code unranking.
inline Permutation unrank(std::uint64_t index, int n) {
    check_degree(n);
    if (index >= factorial(n)) throw std::out_of_range("unrank: index out of range");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = factorial(i);
        const auto digit = static_cast<std::size_t>(index / f);
        index %= f;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return Permutation(out);
}

/// Flat table of all n! one-line words (0-based values) in lexicographic
/// order. Shared, immutable, built once per degree.
class PermutationTable {
public:
    explicit PermutationTable(int n) : n_(n), size_(static_cast<std::size_t>(factorial(n))) {
        if (n < 1 || n > kMaxTableDegree) throw std::out_of_range("table degree out of range");
        words_.resize(size_ * static_cast<std::size_t>(n));
        std::vector<std::uint8_t> w(n);
        std::iota(w.begin(), w.end(), std::uint8_t{0});
        std::size_t k = 0;
        do {
            std::copy(w.begin(), w.end(), words_.begin() + static_cast<std::ptrdiff_t>(k * n));
            ++k;
        } while (std::next_permutation(w.begin(), w.end()));
        inverse_index_.resize(size_);
        std::vector<std::uint8_t> inv(n);
        for (std::size_t i = 0; i < size_; ++i) {
            const auto* r = row(i);
            for (int j = 0; j < n; ++j) inv[r[j]] = static_cast<std::uint8_t>(j);
            inverse_index_[i] = static_cast<std::uint32_t>(rank_zero_based(inv.data(), n));
        }
    }

    static std::shared_ptr<const PermutationTable> get(int n) {
        check_degree(n);
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const PermutationTable>> cache;
        std::lock_guard lock(mu);
        auto& slot = cache[n];
        if (!slot) slot = std::make_shared<const PermutationTable>(n);
        return slot;
    }

    int degree() const { return n_; }
    std::size_t size() const { return size_; }
    const std::uint8_t* row(std::size_t k) const { return words_.data() + k * static_cast<std::size_t>(n_); }
    std::size_t inverse_index(std::size_t k) const { return inverse_index_[k]; }

    /// Index of the product of elements g and h under convention c.
    std::size_t product_index(std::size_t g, std::size_t h, Convention c) const {
        std::array<std::uint8_t, 32> w{};
        const auto* a = row(g);
        const auto* b = row(h);
        if (c == Convention::variant_a)
            for (int i = 0; i < n_; ++i) w[i] = a[b[i]];
        else
            for (int i = 0; i < n_; ++i) w[i] = b[a[i]];
        return static_cast<std::size_t>(rank_zero_based(w.data(), n_));
    }

    Permutation at(std::size_t k) const {
        std::vector<int> v(n_);
        for (int i = 0; i < n_; ++i) v[i] = row(k)[i] + 1;
        return Permutation(v);
    }

private:
    int n_;
    std::size_t size_;
    std::vector<std::uint8_t> words_;
    std::vector<std::uint32_t> inverse_index_;
};

inline std::vector<Permutation> all_permutations(int n) {
    check_degree(n);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Aggregates over S_n

/// c[k] = #{ sigma : stat(sigma) = k }.
inline std::vector<std::uint64_t> generating_polynomial(StatKind kind, int n) {
    std::vector<std::uint64_t> c;
    for (const auto& s : all_permutations(n)) {
        const auto v = static_cast<std::size_t>(stat(kind, s));
        if (v >= c.size()) c.resize(v + 1, 0);
        ++c[v];
    }
    return c;
}

inline std::int64_t stat_sum(StatKind kind, int n) {
    std::int64_t total = 0;
    for (const auto& s : all_permutations(n)) total += stat(kind, s);
    return total;
}

/// Character of the natural representation pi_(n-1,1).
inline int chi_nat(const Permutation& s) {
    if (s.degree() < 2) throw std::invalid_argument("chi_nat requires n >= 2");
    return stat(StatKind::fix, s) - 1;
}

/// Character of pi_(n-2,1,1), the exterior square of pi_(n-1,1).
inline int chi_wedge2(const Permutation& s) {
    if (s.degree() < 3) throw std::invalid_argument("chi_wedge2 requires n >= 3");
    const int a = stat(StatKind::fix, s) - 1;
    const int b = stat(StatKind::fix, apply_after(s, s)) - 1;
    return (a * a - b) / 2;
}

}  // namespace skewperm
