#pragma once

// The space M of n x n skew-symmetric matrices with the S_n action by
// simultaneous row/column relabelling, its isotypic projections, the
// h-matrices of des/maj/inv, and the intertwiner W : H -> M with
// W(u_ij) = E_ij.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewperm/groupalg.hpp"
#include "skewperm/linalg.hpp"
#include "skewperm/perm.hpp"
#include "skewperm/rational.hpp"

namespace skewperm {

class SkewMatrix {
public:
    explicit SkewMatrix(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("matrix size must be positive");
        upper_.assign(static_cast<std::size_t>(n * (n - 1) / 2), Rational(0));
    }

    /// Entries a_ij, i < j, in row-major order.
    SkewMatrix(int n, std::vector<Rational> upper) : n_(n), upper_(std::move(upper)) {
        if (n < 1 || upper_.size() != static_cast<std::size_t>(n * (n - 1) / 2))
            throw std::invalid_argument("upper triangle must have n(n-1)/2 entries");
        for (auto& x : upper_) x.canonicalize();
    }

    int size() const { return n_; }
    std::span<const Rational> upper() const { return upper_; }

    /// Full-matrix entry (i, j), 1-based.
    Rational operator()(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("matrix index out of range");
        if (i == j) return 0;
        return i < j ? upper_[pair_index(i, j, n_)] : Rational(-upper_[pair_index(j, i, n_)]);
    }

    const Rational& upper_at(int i, int j) const { return upper_[pair_index(i, j, n_)]; }

    bool is_zero() const {
        for (const auto& x : upper_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const SkewMatrix&) const = default;

    friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) {
        check(a, b);
        std::vector<Rational> u(a.upper_.size());
        for (std::size_t k = 0; k < u.size(); ++k) u[k] = a.upper_[k] + b.upper_[k];
        return SkewMatrix(a.n_, std::move(u));
    }
    friend SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b) { return a + Rational(-1) * b; }
    friend SkewMatrix operator*(const Rational& s, const SkewMatrix& a) {
        std::vector<Rational> u(a.upper_.size());
        for (std::size_t k = 0; k < u.size(); ++k) u[k] = s * a.upper_[k];
        return SkewMatrix(a.n_, std::move(u));
    }

    static void check(const SkewMatrix& a, const SkewMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    }

private:
    int n_;
    std::vector<Rational> upper_;
};

inline SkewMatrix unit_matrix(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("unit_matrix requires 1 <= i < j <= n");
    std::vector<Rational> u(static_cast<std::size_t>(n * (n - 1) / 2), Rational(0));
    u[pair_index(i, j, n)] = 1;
    return SkewMatrix(n, std::move(u));
}

/// sum_{i<j} a_ij b_ij. Positive definite; the E_ij are orthonormal.
inline Rational inner(const SkewMatrix& a, const SkewMatrix& b) {
    SkewMatrix::check(a, b);
    Rational s = 0;
    for (std::size_t k = 0; k < a.upper().size(); ++k) s += a.upper()[k] * b.upper()[k];
    return s;
}

/// Relabels rows and columns: the result R has R_ij = A_{s(i), s(j)}, so
/// act(s, E_ij) = +-E_{s^-1(i), s^-1(j)}. With this direction the map is a
/// homomorphism for the pinned product and the coefficient formula
/// c_s = <act(s) h_inv, W f> holds.
inline SkewMatrix act(const Permutation& s, const SkewMatrix& a) {
    const int n = a.size();
    if (s.degree() != n) throw std::invalid_argument("degree mismatch");
    std::vector<Rational> u;
    u.reserve(a.upper().size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) u.push_back(a(s(i), s(j)));
    return SkewMatrix(n, std::move(u));
}

/// h_des = sum E_{k,k+1}, h_maj = sum k E_{k,k+1}, h_inv = sum_{i<j} E_ij.
inline SkewMatrix h_matrix(StatKind kind, int n) {
    if (n < 2) throw std::invalid_argument("h_matrix requires n >= 2");
    if (kind != StatKind::des && kind != StatKind::maj && kind != StatKind::inv)
        throw std::invalid_argument("h_matrix is defined for des, maj and inv only");
    SkewMatrix h(n);
    std::vector<Rational> u(h.upper().begin(), h.upper().end());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto& x = u[pair_index(i, j, n)];
            if (kind == StatKind::inv) x = 1;
            else if (j == i + 1) x = kind == StatKind::des ? 1 : i;
        }
    return SkewMatrix(n, std::move(u));
}

/// Upper-triangular Toeplitz matrix with a_{i,i+k} = diag(k).
template <class F>
SkewMatrix toeplitz(int n, F diag) {
    std::vector<Rational> u;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) u.push_back(diag(j - i));
    return SkewMatrix(n, std::move(u));
}

/// P1 h_inv: a_{i,i+k} = 2k/n.
inline SkewMatrix toeplitz_a(int n) {
    return toeplitz(n, [n](int k) { return ratio(2 * k, n); });
}

/// P2 h_inv: b_{i,i+k} = 1 - 2k/n.
inline SkewMatrix toeplitz_b(int n) {
    return toeplitz(n, [n](int k) { return Rational(1 - ratio(2 * k, n)); });
}

/// Projection onto the (n-1,1) component: entries alpha_i - alpha_j with
/// alpha_i the i-th row sum divided by n.
inline SkewMatrix p1(const SkewMatrix& a) {
    const int n = a.size();
    std::vector<Rational> alpha(n + 1, Rational(0));
    for (int i = 1; i <= n; ++i) {
        Rational s = 0;
        for (int j = 1; j <= n; ++j) s += a(i, j);
        alpha[i] = s / n;
    }
    std::vector<Rational> u;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) u.push_back(alpha[i] - alpha[j]);
    return SkewMatrix(n, std::move(u));
}

/// Projection onto the (n-2,1,1) component (all row sums zero).
inline SkewMatrix p2(const SkewMatrix& a) { return a - p1(a); }

// ---------------------------------------------------------------------------
// Intertwiner between H = span{u_ij} and M

/// Thrown when an element is outside the span it was required to lie in.
class NotInSubspace : public std::domain_error {
public:
    NotInSubspace(const std::string& what, GAElement residual)
        : std::domain_error(what), residual_(std::move(residual)) {}
    const GAElement& residual() const { return residual_; }

private:
    GAElement residual_;
};

namespace detail {

inline std::shared_ptr<const linalg::RatMatrix> cached_pseudounit_gram(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const linalg::RatMatrix>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto g = std::make_shared<const linalg::RatMatrix>(pseudounit_inner_products(n));
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(g)).first->second;
}

}  // namespace detail

/// sum_{i<j} a_ij u_ij.
inline GAElement W_inv(const SkewMatrix& a) {
    const int n = a.size();
    auto table = PermutationTable::get(n);
    const auto up = a.upper();
    std::vector<Rational> c(table->size(), Rational(0));
    if (auto sa = detail::to_scaled_ints(up)) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            const auto* w = table->row(k);
            std::int64_t s = 0;
            std::size_t p = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++p) s += w[i] < w[j] ? sa->nums[p] : -sa->nums[p];
            if (s != 0) c[k] = ratio(Integer(static_cast<long>(s)), sa->den);
        }
        return GAElement(n, std::move(c));
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto* w = table->row(k);
        Rational s = 0;
        std::size_t p = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++p) {
                if (up[p] == 0) continue;
                if (w[i] < w[j]) s += up[p];
                else s -= up[p];
            }
        c[k] = s;
    }
    return GAElement(n, std::move(c));
}

/// Coordinates of u in the pseudounit basis. Throws NotInSubspace with the
/// residual when u is not in H.
inline SkewMatrix W(const GAElement& u) {
    const int n = u.degree();
    if (n < 2) throw std::invalid_argument("W requires n >= 2");
    auto table = PermutationTable::get(n);
    const std::size_t m = static_cast<std::size_t>(n * (n - 1) / 2);
    // <u_ij, u> for every pair, without materializing the pseudounits.
    std::vector<Rational> rhs(m, Rational(0));
    auto su = detail::to_scaled_ints(u.coeffs());
    if (su) {
        std::vector<__int128> acc(m, 0);
        for (std::size_t k = 0; k < table->size(); ++k) {
            const std::int64_t x = su->nums[k];
            if (x == 0) continue;
            const auto* w = table->row(k);
            std::size_t p = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++p) acc[p] += w[i] < w[j] ? x : -x;
        }
        for (std::size_t p = 0; p < m; ++p) rhs[p] = ratio(detail::from_int128(acc[p]), su->den);
    } else {
        for (std::size_t k = 0; k < table->size(); ++k) {
            const auto* w = table->row(k);
            std::size_t p = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++p) rhs[p] += w[i] < w[j] ? u[k] : Rational(-u[k]);
        }
    }
    auto x = linalg::solve(*detail::cached_pseudounit_gram(n), std::move(rhs));
    if (!x) throw std::logic_error("pseudounit Gram system inconsistent");
    SkewMatrix a(n, std::move(*x));
    const GAElement residual = u - W_inv(a);
    if (!residual.is_zero()) throw NotInSubspace("element is not in the span of the pseudounits", residual);
    return a;
}

/// c_s = <act(s) h_inv, A>; for f in H with W(f) = A this is f's coefficient at s.
inline Rational coefficient_recover(const SkewMatrix& a, const Permutation& s) {
    return inner(act(s, h_matrix(StatKind::inv, a.size())), a);
}

/// stat(s) = const - <act(s) h_inv, h_kind> / 2 with const = n(n-1)/4 for
/// maj and inv, (n-1)/2 for des.
inline int stat_via_matrix(StatKind kind, const Permutation& s) {
    const int n = s.degree();
    const SkewMatrix h = h_matrix(kind, n);
    const Rational c = kind == StatKind::des ? ratio(n - 1, 2) : ratio(n * (n - 1), 4);
    const Rational v = c - inner(act(s, h_matrix(StatKind::inv, n)), h) / 2;
    if (!is_integer(v)) throw std::logic_error("matrix formula produced a non-integer");
    return static_cast<int>(v.get_num().get_si());
}

/// W of the orthogonal projection of delta_e onto H, by exact solve.
inline SkewMatrix projected_delta(int n) {
    if (n < 3) throw std::invalid_argument("projected_delta requires n >= 3");
    const std::size_t m = static_cast<std::size_t>(n * (n - 1) / 2);
    // <delta_e, u_ij> = u_ij(e) = 1 for every pair.
    std::vector<Rational> rhs(m, Rational(1));
    auto x = linalg::solve(*detail::cached_pseudounit_gram(n), std::move(rhs));
    if (!x) throw std::logic_error("pseudounit Gram system inconsistent");
    return SkewMatrix(n, std::move(*x));
}

/// (3/n!) (A/(n+1) + B) with A, B the Toeplitz projections of h_inv.
inline SkewMatrix projected_delta_closed_form(int n) {
    const Rational scale = ratio(3, static_cast<unsigned long>(factorial(n)));
    return scale * (ratio(1, n + 1) * toeplitz_a(n) + toeplitz_b(n));
}

inline std::vector<std::vector<Rational>> full_matrix(const SkewMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = a(i, j);
    return m;
}

}  // namespace skewperm
