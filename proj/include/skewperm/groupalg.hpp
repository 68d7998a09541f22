#pragma once

// Dense exact-rational elements of the group algebra Q[S_n]: convolution,
// translations, inner product, pseudomatrix units u_ij, character-built
// central idempotents, and the rank of translate spans.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewperm/config.hpp"
#include "skewperm/linalg.hpp"
#include "skewperm/perm.hpp"
#include "skewperm/rational.hpp"

namespace skewperm {

/// Coefficient vector over S_n; index k holds the coefficient of unrank(k, n).
class GAElement {
public:
    explicit GAElement(int n) : n_(n) {
        check_degree(n);
        coeffs_.assign(static_cast<std::size_t>(factorial(n)), Rational(0));
    }

    GAElement(int n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
        check_degree(n);
        if (coeffs_.size() != factorial(n)) throw std::invalid_argument("coefficient count must be n!");
        for (auto& c : coeffs_) c.canonicalize();
    }

    static GAElement delta(const Permutation& s) {
        GAElement e(s.degree());
        e.coeffs_[static_cast<std::size_t>(rank(s))] = 1;
        return e;
    }
    static GAElement identity(int n) { return delta(Permutation::identity(n)); }
    static GAElement ones(int n) {
        GAElement e(n);
        for (auto& c : e.coeffs_) c = 1;
        return e;
    }

    int degree() const { return n_; }
    std::size_t size() const { return coeffs_.size(); }
    std::span<const Rational> coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    const Rational& at(const Permutation& s) const {
        if (s.degree() != n_) throw std::invalid_argument("degree mismatch");
        return coeffs_[static_cast<std::size_t>(rank(s))];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    Rational sum() const {
        Rational s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    bool operator==(const GAElement&) const = default;

    friend GAElement operator+(const GAElement& a, const GAElement& b) { return zip(a, b, [](auto& x, auto& y) { return Rational(x + y); }); }
    friend GAElement operator-(const GAElement& a, const GAElement& b) { return zip(a, b, [](auto& x, auto& y) { return Rational(x - y); }); }
    friend GAElement operator-(const GAElement& a) { return Rational(-1) * a; }
    friend GAElement operator*(const Rational& s, const GAElement& a) {
        std::vector<Rational> c(a.coeffs_.size());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a.coeffs_[k];
        return GAElement(a.n_, std::move(c));
    }

private:
    template <class F>
    static GAElement zip(const GAElement& a, const GAElement& b, F f) {
        if (a.n_ != b.n_) throw std::invalid_argument("degree mismatch");
        std::vector<Rational> c(a.coeffs_.size());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = f(a.coeffs_[k], b.coeffs_[k]);
        return GAElement(a.n_, std::move(c));
    }

    int n_;
    std::vector<Rational> coeffs_;
};

inline void require_same_degree(const GAElement& a, const GAElement& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
}

// ---------------------------------------------------------------------------
// Elements built from statistics

inline GAElement from_stat(StatKind kind, int n, bool centered) {
    if (n < 2) throw std::invalid_argument("from_stat requires n >= 2");
    auto table = PermutationTable::get(n);
    std::vector<Rational> c(table->size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = stat(kind, table->at(k));
    if (centered) {
        // Mean of the statistic: (n-1)/2 for des and exc, n(n-1)/4 for
        // maj, inv and comaj, 1 for fix.
        const Rational mean = ratio(stat_sum(kind, n), static_cast<unsigned long>(factorial(n)));
        for (auto& x : c) x -= mean;
    }
    return GAElement(n, std::move(c));
}

// ---------------------------------------------------------------------------
// Products

/// (u * v)(s) = sum_g u(g) v(g^-1 s), i.e. the group-algebra product u·v.
inline GAElement convolve(const GAElement& u, const GAElement& v, Convention conv) {
    require_same_degree(u, v);
    const int n = u.degree();
    auto table = PermutationTable::get(n);
    const std::size_t size = table->size();
    auto su = detail::to_scaled_ints(u.coeffs());
    auto sv = detail::to_scaled_ints(v.coeffs());
    std::vector<Rational> out(size, Rational(0));
    if (su && sv) {
        std::vector<__int128> acc(size, 0);
        for (std::size_t g = 0; g < size; ++g) {
            const std::int64_t a = su->nums[g];
            if (a == 0) continue;
            for (std::size_t h = 0; h < size; ++h) {
                const std::int64_t b = sv->nums[h];
                if (b == 0) continue;
                acc[table->product_index(g, h, conv)] += static_cast<__int128>(a) * b;
            }
        }
        const Integer den = su->den * sv->den;
        for (std::size_t k = 0; k < size; ++k) {
            if (acc[k] == 0) continue;
            out[k] = ratio(detail::from_int128(acc[k]), den);
        }
    } else {
        for (std::size_t g = 0; g < size; ++g) {
            if (u[g] == 0) continue;
            for (std::size_t h = 0; h < size; ++h) {
                if (v[h] == 0) continue;
                out[table->product_index(g, h, conv)] += u[g] * v[h];
            }
        }
    }
    return GAElement(n, std::move(out));
}

inline GAElement convolve(const GAElement& u, const GAElement& v) { return convolve(u, v, convention()); }

/// Multiplication by `by` on the side that commutes with translations on the
/// ideal side: f·by when the ideal side is left, by·f otherwise.
inline GAElement apply_multiplier(const GAElement& by, const GAElement& f) {
    return ideal_side() == Side::left ? convolve(f, by) : convolve(by, f);
}

inline Rational inner(const GAElement& u, const GAElement& v) {
    require_same_degree(u, v);
    auto su = detail::to_scaled_ints(u.coeffs());
    auto sv = detail::to_scaled_ints(v.coeffs());
    if (su && sv) {
        __int128 acc = 0;
        for (std::size_t k = 0; k < u.size(); ++k) acc += static_cast<__int128>(su->nums[k]) * sv->nums[k];
        return ratio(detail::from_int128(acc), su->den * sv->den);
    }
    Rational s = 0;
    for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
    return s;
}

/// s·u (left) or u·s (right) for the basis element s.
inline GAElement translate(const GAElement& u, const Permutation& s, Side side, Convention conv) {
    if (s.degree() != u.degree()) throw std::invalid_argument("degree mismatch");
    auto table = PermutationTable::get(u.degree());
    const auto si = static_cast<std::size_t>(rank(s));
    std::vector<Rational> out(u.size());
    for (std::size_t t = 0; t < u.size(); ++t) {
        const std::size_t k = side == Side::left ? table->product_index(si, t, conv) : table->product_index(t, si, conv);
        out[k] = u[t];
    }
    return GAElement(u.degree(), std::move(out));
}

inline GAElement translate(const GAElement& u, const Permutation& s, Side side) {
    return translate(u, s, side, convention());
}

// ---------------------------------------------------------------------------
// Dual complexity

/// Integer rows holding every one-sided translate of each generator.
inline linalg::IntMatrix translate_rows(std::span<const GAElement> generators, Side side, Convention conv) {
    linalg::IntMatrix rows;
    if (generators.empty()) return rows;
    const int n = generators.front().degree();
    auto table = PermutationTable::get(n);
    const std::size_t size = table->size();
    for (const auto& u : generators) {
        if (u.degree() != n) throw std::invalid_argument("degree mismatch");
        const Integer den = detail::common_denominator(u.coeffs());
        std::vector<Integer> base(size);
        for (std::size_t t = 0; t < size; ++t) base[t] = u[t].get_num() * (den / u[t].get_den());
        for (std::size_t s = 0; s < size; ++s) {
            std::vector<Integer> row(size);
            for (std::size_t t = 0; t < size; ++t) {
                const std::size_t k = side == Side::left ? table->product_index(s, t, conv) : table->product_index(t, s, conv);
                row[k] = base[t];
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

/// Dimension of the span of all translates of all generators.
inline std::size_t span_dimension(std::span<const GAElement> generators, Side side,
                                  linalg::RankMethod method = linalg::RankMethod::automatic) {
    return linalg::rank(translate_rows(generators, side, convention()), method);
}

/// Dual complexity: dimension of the cyclic subspace spanned by translates.
inline std::size_t ideal_dimension(const GAElement& u, Side side,
                                   linalg::RankMethod method = linalg::RankMethod::automatic) {
    return span_dimension(std::span<const GAElement>(&u, 1), side, method);
}

inline std::size_t ideal_dimension(const GAElement& u) { return ideal_dimension(u, ideal_side()); }

// ---------------------------------------------------------------------------
// Pseudomatrix units

/// Position of the pair (i, j), 1 <= i < j <= n, in row-major upper order.
inline std::size_t pair_index(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("pair index requires 1 <= i < j <= n");
    return static_cast<std::size_t>((i - 1) * (2 * n - i) / 2 + (j - i - 1));
}

inline std::vector<std::pair<int, int>> upper_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    return out;
}

/// u_ij = sum_s eps_ij(s) s with eps_ij(s) = +1 if s(i) < s(j), -1 if
/// s(i) > s(j). Unnormalized: u_ij = sqrt(n!) e_ij.
inline GAElement pseudounit(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("pseudounit index out of range");
    auto table = PermutationTable::get(n);
    std::vector<Rational> c(table->size(), Rational(0));
    if (i != j) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            const auto* w = table->row(k);
            c[k] = w[i - 1] < w[j - 1] ? 1 : -1;
        }
    }
    return GAElement(n, std::move(c));
}

/// All u_ij with i < j, in pair_index order.
inline std::vector<GAElement> pseudounits(int n) {
    std::vector<GAElement> out;
    for (auto [i, j] : upper_pairs(n)) out.push_back(pseudounit(i, j, n));
    return out;
}

inline linalg::RatMatrix as_rows(std::span<const GAElement> elems) {
    linalg::RatMatrix rows;
    rows.reserve(elems.size());
    for (const auto& e : elems) rows.emplace_back(e.coeffs().begin(), e.coeffs().end());
    return rows;
}

/// Unnormalized Gram matrix <u_ij, u_kl>.
inline linalg::RatMatrix pseudounit_inner_products(int n) {
    const auto units = pseudounits(n);
    const auto m = units.size();
    linalg::RatMatrix g(m, std::vector<Rational>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            g[a][b] = inner(units[a], units[b]);
            g[b][a] = g[a][b];
        }
    return g;
}

/// <u_ij, u_kl> / n!, indexed by pair_index.
inline linalg::RatMatrix gram_pseudounits(int n) {
    if (n < 2) throw std::invalid_argument("gram_pseudounits requires n >= 2");
    auto g = pseudounit_inner_products(n);
    const Rational scale = ratio(1, static_cast<unsigned long>(factorial(n)));
    for (auto& row : g)
        for (auto& x : row) x *= scale;
    return g;
}

// ---------------------------------------------------------------------------
// Central idempotents for (n-1,1) and (n-2,1,1)

enum class DiagramLabel { row, hook };

inline std::string_view name(DiagramLabel l) { return l == DiagramLabel::row ? "(n-1,1)" : "(n-2,1,1)"; }

inline int representation_dimension(DiagramLabel l, int n) {
    return l == DiagramLabel::row ? n - 1 : (n - 1) * (n - 2) / 2;
}

/// C = (dim / n!) sum_g chi(g) g.
inline GAElement central_idempotent(DiagramLabel l, int n) {
    if (n < 3) throw std::invalid_argument("central idempotents require n >= 3");
    auto table = PermutationTable::get(n);
    const Rational scale = ratio(representation_dimension(l, n), static_cast<unsigned long>(factorial(n)));
    std::vector<Rational> c(table->size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto s = table->at(k);
        c[k] = scale * (l == DiagramLabel::row ? chi_nat(s) : chi_wedge2(s));
    }
    return GAElement(n, std::move(c));
}

inline GAElement central_idempotent_apply(DiagramLabel l, const GAElement& u) {
    return convolve(central_idempotent(l, u.degree()), u);
}

/// <e'_ij, e'_kl> where e' = sqrt(3/(n+1)) (C1 + sqrt(n+1) C2) e. Cross
/// terms vanish because the two isotypic components are orthogonal, leaving
/// (3/(n+1)) <C1 e, C1 e'> + 3 <C2 e, C2 e'>, which is rational.
inline Rational primed_inner(std::pair<int, int> a, std::pair<int, int> b, int n) {
    if (!(a.first < a.second) || !(b.first < b.second)) throw std::invalid_argument("primed_inner requires i < j");
    const auto ua = pseudounit(a.first, a.second, n);
    const auto ub = pseudounit(b.first, b.second, n);
    const auto c1 = central_idempotent(DiagramLabel::row, n);
    const auto c2 = central_idempotent(DiagramLabel::hook, n);
    const auto a1 = convolve(c1, ua), b1 = convolve(c1, ub);
    const auto a2 = convolve(c2, ua), b2 = convolve(c2, ub);
    const Rational nf(static_cast<unsigned long>(factorial(n)));
    return (ratio(3, n + 1) * inner(a1, b1) + 3 * inner(a2, b2)) / nf;
}

}  // namespace skewperm
