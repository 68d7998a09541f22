#pragma once

// Exact rank and span-membership over the rationals.
//
// Rank: fraction-free (Bareiss) elimination on integer rows, or rank modulo
// two independent 62-bit primes with agreement required and an exact
// fallback when they disagree. Span membership: normal equations solved by
// rational Gauss-Jordan, then an exact residual check.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skewperm/rational.hpp"

namespace skewperm::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline constexpr std::uint64_t kPrimeA = 4611686018427387847ULL;  // largest prime below 2^62
inline constexpr std::uint64_t kPrimeB = 4611686018427387817ULL;  // next prime below that

enum class RankMethod { automatic, exact, modular };

/// Column count up to which `automatic` uses exact elimination (|S_5| = 120).
inline constexpr std::size_t kExactColumnLimit = 120;

/// Scales each row by the lcm of its denominators. Rank is unchanged.
inline IntMatrix to_integer_rows(const RatMatrix& rows) {
    IntMatrix out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        const Integer den = detail::common_denominator(r);
        std::vector<Integer> ir;
        ir.reserve(r.size());
        for (const auto& x : r) ir.push_back(x.get_num() * (den / x.get_den()));
        out.push_back(std::move(ir));
    }
    return out;
}

inline std::size_t bareiss_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    Integer prev = 1;
    Integer t;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Integer& piv = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = piv * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t reduce(const Integer& x, std::uint64_t p) {
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

}  // namespace detail

inline std::size_t modular_rank(const IntMatrix& m, std::uint64_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = detail::reduce(m[i][j], p);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const std::uint64_t inv = detail::powmod(a[r][c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = detail::mulmod(a[r][j], inv, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t sub = detail::mulmod(f, a[r][j], p);
                a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
            }
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& m, RankMethod method = RankMethod::automatic) {
    if (m.empty()) return 0;
    if (method == RankMethod::automatic)
        method = m.front().size() <= kExactColumnLimit ? RankMethod::exact : RankMethod::modular;
    if (method == RankMethod::exact) return bareiss_rank(m);
    const auto ra = modular_rank(m, kPrimeA);
    const auto rb = modular_rank(m, kPrimeB);
    if (ra == rb) return ra;
    return bareiss_rank(m);
}

inline std::size_t rank(const RatMatrix& m, RankMethod method = RankMethod::automatic) {
    return rank(to_integer_rows(m), method);
}

/// Solves a * x = b by Gauss-Jordan over the rationals. Returns a particular
/// solution (free variables zero) or nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t cols = rows ? a.front().size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

struct SpanSolution {
    bool member = false;
    std::vector<Rational> coefficients;  // one per basis vector
    std::vector<Rational> residual;      // target minus its reconstruction
};

/// Writes `target` in terms of `basis` (rows) when possible. The normal
/// equations are always consistent, so membership is decided by the residual.
inline SpanSolution solve_in_span(const RatMatrix& basis, std::span<const Rational> target,
                                  const RatMatrix* gram = nullptr) {
    const std::size_t k = basis.size();
    RatMatrix g;
    if (gram) {
        g = *gram;
    } else {
        g.assign(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j) {
                Rational s = 0;
                for (std::size_t t = 0; t < target.size(); ++t) s += basis[i][t] * basis[j][t];
                g[i][j] = s;
                g[j][i] = s;
            }
    }
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rational s = 0;
        for (std::size_t t = 0; t < target.size(); ++t)
            if (basis[i][t] != 0) s += basis[i][t] * target[t];
        rhs[i] = s;
    }
    auto x = solve(std::move(g), std::move(rhs));
    if (!x) throw std::logic_error("normal equations inconsistent");
    SpanSolution out;
    out.coefficients = std::move(*x);
    out.residual.assign(target.begin(), target.end());
    for (std::size_t i = 0; i < k; ++i) {
        if (out.coefficients[i] == 0) continue;
        for (std::size_t t = 0; t < target.size(); ++t) out.residual[t] -= out.coefficients[i] * basis[i][t];
    }
    out.member = true;
    for (const auto& r : out.residual)
        if (r != 0) {
            out.member = false;
            break;
        }
    return out;
}

}  // namespace skewperm::linalg
