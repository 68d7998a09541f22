#pragma once

// Spectra of multiplication by u_maj, u_des, u_inv, the convolution
// identities among their centered versions, the nonpositivity of the inv
// kernel on sum-zero vectors, the fix-point averages, and a structured
// multiplication path for elements of const + H.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewperm/groupalg.hpp"
#include "skewperm/linalg.hpp"
#include "skewperm/perm.hpp"
#include "skewperm/rational.hpp"
#include "skewperm/skewrep.hpp"

namespace skewperm {

inline void require_matrix_stat(StatKind kind) {
    if (kind != StatKind::des && kind != StatKind::maj && kind != StatKind::inv)
        throw std::invalid_argument("statistic must be des, maj or inv");
}

/// -(n! / (2 dim pi_k)) <P_k h_inv, P_k h_kind> for component k in {1, 2}.
inline Rational predicted_eigenvalue(StatKind kind, int component, int n) {
    require_matrix_stat(kind);
    if (component != 1 && component != 2) throw std::invalid_argument("component must be 1 or 2");
    if (n < 2 || (component == 2 && n < 3)) throw std::invalid_argument("degree too small for component");
    const auto hinv = h_matrix(StatKind::inv, n);
    const auto h = h_matrix(kind, n);
    const auto label = component == 1 ? DiagramLabel::row : DiagramLabel::hook;
    const Rational ip = component == 1 ? inner(p1(hinv), p1(h)) : inner(p2(hinv), p2(h));
    const Rational nf(Integer(static_cast<unsigned long>(factorial(n))));
    return -nf / (2 * representation_dimension(label, n)) * ip;
}

struct EigenRecord {
    Rational value;
    std::size_t predicted_multiplicity = 0;
    std::size_t verified_multiplicity = 0;
    std::string subspace;  // "const", "H1", "H2" or "H"
};

struct SpectrumReport {
    StatKind stat = StatKind::inv;
    int n = 0;
    std::vector<EigenRecord> eigenvalues;
    std::size_t kernel_dim = 0;
    std::size_t predicted_kernel_dim = 0;
    bool passed = false;
    std::string witness;  // first failure, empty when passed
};

namespace detail {

inline std::string first_difference(const GAElement& lhs, const GAElement& rhs) {
    auto table = PermutationTable::get(lhs.degree());
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (lhs[k] != rhs[k])
            return "at " + table->at(k).str() + ": " + to_string(lhs[k]) + " != " + to_string(rhs[k]);
    return {};
}

/// Spanning sets {C_k u_ij} of H1 and H2 (n >= 3); at n = 2, H1 = H.
inline std::array<std::vector<GAElement>, 2> isotypic_spanning_sets(int n) {
    std::array<std::vector<GAElement>, 2> sets;
    if (n == 2) {
        sets[0].push_back(pseudounit(1, 2, 2));
        return sets;
    }
    const auto c1 = central_idempotent(DiagramLabel::row, n);
    const auto c2 = central_idempotent(DiagramLabel::hook, n);
    for (const auto& u : pseudounits(n)) {
        sets[0].push_back(convolve(c1, u));
        sets[1].push_back(convolve(c2, u));
    }
    return sets;
}

}  // namespace detail

/// Verifies the full spectrum of multiplication by u_kind on the side that
/// commutes with the ideal's translations. Eigen-equations are checked
/// exactly on spanning sets of const, H1 and H2; the zero eigenspace is
/// certified by the operator's rank, which equals the dual complexity of
/// u_kind. No dense eigen-solver is involved.
inline SpectrumReport verify_spectrum(StatKind kind, int n) {
    require_matrix_stat(kind);
    if (n < 2) throw std::invalid_argument("verify_spectrum requires n >= 2");
    check_degree(n);
    SpectrumReport rep;
    rep.stat = kind;
    rep.n = n;
    const auto nf = static_cast<std::size_t>(factorial(n));
    const std::size_t m = static_cast<std::size_t>(n * (n - 1) / 2);
    const auto u = from_stat(kind, n, false);
    auto fail = [&](std::string w) {
        if (rep.witness.empty()) rep.witness = std::move(w);
    };

    // Constants.
    const Rational s0(Integer(static_cast<long>(stat_sum(kind, n))));
    const auto one = GAElement::ones(n);
    const auto m_one = apply_multiplier(u, one);
    if (m_one != s0 * one) fail("constants: " + detail::first_difference(m_one, s0 * one));
    rep.eigenvalues.push_back({s0, 1, linalg::rank(as_rows(std::span(&one, 1))), "const"});

    // H1 and H2.
    const auto sets = detail::isotypic_spanning_sets(n);
    std::array<Rational, 2> s{predicted_eigenvalue(kind, 1, n), n >= 3 ? predicted_eigenvalue(kind, 2, n) : Rational(0)};
    const std::array<std::size_t, 2> dims{static_cast<std::size_t>(n - 1), static_cast<std::size_t>((n - 1) * (n - 2) / 2)};
    const auto pairs = upper_pairs(n);
    for (int k = 0; k < 2; ++k)
        for (std::size_t p = 0; p < sets[k].size(); ++p) {
            const auto& v = sets[k][p];
            const auto mv = apply_multiplier(u, v);
            if (mv != s[k] * v)
                fail("H" + std::to_string(k + 1) + " vector from pair (" + std::to_string(pairs[p].first) + "," +
                     std::to_string(pairs[p].second) + ") " + detail::first_difference(mv, s[k] * v));
        }
    const auto r1 = linalg::rank(as_rows(sets[0]));
    const auto r2 = linalg::rank(as_rows(sets[1]));
    std::vector<GAElement> both(sets[0]);
    both.insert(both.end(), sets[1].begin(), sets[1].end());
    const auto r12 = linalg::rank(as_rows(both));
    if (r12 != m) fail("H1 + H2 has dimension " + std::to_string(r12) + ", expected " + std::to_string(m));
    if (n >= 3 && s[0] == s[1]) {
        rep.eigenvalues.push_back({s[0], m, r12, "H"});
    } else {
        rep.eigenvalues.push_back({s[0], dims[0], r1, "H1"});
        if (n >= 3) rep.eigenvalues.push_back({s[1], dims[1], r2, "H2"});
    }

    // Zero eigenspace: image of the operator is spanned by the ideal-side
    // translates of u, so rank(M) = ideal_dimension(u).
    const auto op_rank = ideal_dimension(u);
    rep.kernel_dim = nf - op_rank;
    rep.predicted_kernel_dim = nf - m - 1;
    if (rep.kernel_dim != rep.predicted_kernel_dim)
        fail("kernel dimension " + std::to_string(rep.kernel_dim) + ", expected " + std::to_string(rep.predicted_kernel_dim));

    for (const auto& e : rep.eigenvalues) {
        if (e.value == 0) fail("predicted eigenvalue is zero");
        if (e.predicted_multiplicity != e.verified_multiplicity)
            fail(e.subspace + " multiplicity " + std::to_string(e.verified_multiplicity) + ", expected " +
                 std::to_string(e.predicted_multiplicity));
    }
    rep.passed = rep.witness.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Convolution identities among the centered statistics

struct IdentityResult {
    std::string name;
    bool passed = false;
    std::string witness;
};

/// The six identities u~a * u~b = s^b u~a with s^des = -(n-1)!, s^maj = -n!/2.
inline std::vector<IdentityResult> convolution_identities(int n, Convention conv) {
    if (n < 3) throw std::invalid_argument("convolution_identities requires n >= 3");
    check_degree(n);
    const Rational fact_n(Integer(static_cast<unsigned long>(factorial(n))));
    const Rational fact_n1(Integer(static_cast<unsigned long>(factorial(n - 1))));
    const Rational s_des = -fact_n1;
    const Rational s_maj = -fact_n / 2;
    const auto d = from_stat(StatKind::des, n, true);
    const auto mj = from_stat(StatKind::maj, n, true);
    const auto iv = from_stat(StatKind::inv, n, true);
    struct Case {
        const char* name;
        const GAElement* lhs;
        const GAElement* rhs;
        Rational scale;
    };
    const std::array<Case, 6> cases{{
        {"maj~ * des~ = -(n-1)! maj~", &mj, &d, s_des},
        {"maj~ * maj~ = -(n!/2) maj~", &mj, &mj, s_maj},
        {"des~ * des~ = -(n-1)! des~", &d, &d, s_des},
        {"des~ * maj~ = -(n!/2) des~", &d, &mj, s_maj},
        {"inv~ * des~ = -(n-1)! inv~", &iv, &d, s_des},
        {"inv~ * maj~ = -(n!/2) inv~", &iv, &mj, s_maj},
    }};
    std::vector<IdentityResult> out;
    for (const auto& c : cases) {
        const auto prod = convolve(*c.lhs, *c.rhs, conv);
        const auto want = c.scale * *c.lhs;
        IdentityResult r{c.name, prod == want, {}};
        if (!r.passed) r.witness = detail::first_difference(prod, want);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<IdentityResult> convolution_identities(int n) { return convolution_identities(n, convention()); }

// ---------------------------------------------------------------------------
// Conditional nonpositivity

/// sum_{g,h} stat(g^-1 h) x_g x_h = <x, x * u_stat>.
inline Rational kernel_form(StatKind kind, const GAElement& x) {
    return inner(x, convolve(x, from_stat(kind, x.degree(), false)));
}

struct CpdReport {
    StatKind stat = StatKind::inv;
    int n = 0;
    bool symmetric_kernel = false;  // stat(s) == stat(s^-1) for all s
    bool deterministic_passed = false;
    std::size_t random_trials = 0;
    bool passed = false;
    Rational worst;  // largest form value seen on a sum-zero vector
    std::string witness;
};

/// Deterministic part: the form on the exact eigenvectors spanning H1 and H2
/// (and, for a symmetric kernel, the certificate that every nonzero
/// eigenvalue on the sum-zero subspace is negative). Randomized part: seeded
/// integer vectors with zero sum.
inline CpdReport cpd_check(int n, std::size_t trials, std::uint64_t seed, StatKind kind = StatKind::inv) {
    require_matrix_stat(kind);
    if (n < 2 || n > 6) throw std::invalid_argument("cpd_check requires 2 <= n <= 6");
    check_degree(n);
    CpdReport rep;
    rep.stat = kind;
    rep.n = n;
    rep.worst = Rational(0);
    bool have_worst = false;
    auto record = [&](const Rational& q, const std::string& where) {
        if (!have_worst || q > rep.worst) {
            rep.worst = q;
            have_worst = true;
            if (q > 0 && rep.witness.empty()) rep.witness = where + ": form value " + to_string(q);
        }
    };

    auto table = PermutationTable::get(n);
    rep.symmetric_kernel = true;
    for (std::size_t k = 0; k < table->size(); ++k)
        if (stat(kind, table->at(k)) != stat(kind, table->at(table->inverse_index(k)))) {
            rep.symmetric_kernel = false;
            break;
        }

    const auto u = from_stat(kind, n, false);
    const auto sets = detail::isotypic_spanning_sets(n);
    bool eig_ok = true;
    for (int k = 0; k < 2; ++k)
        for (std::size_t p = 0; p < sets[k].size(); ++p) {
            const auto q = inner(sets[k][p], convolve(sets[k][p], u));
            record(q, "eigenvector H" + std::to_string(k + 1) + "#" + std::to_string(p));
            if (q > 0) eig_ok = false;
        }
    bool certificate = eig_ok;
    if (rep.symmetric_kernel) {
        const auto sp = verify_spectrum(kind, n);
        certificate = certificate && sp.passed;
        for (std::size_t e = 1; e < sp.eigenvalues.size(); ++e)
            certificate = certificate && sp.eigenvalues[e].value < 0;
    }
    rep.deterministic_passed = certificate;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-5, 5);
    bool random_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rational> x(table->size());
        long total = 0;
        for (std::size_t k = 0; k + 1 < x.size(); ++k) {
            const int v = dist(rng);
            x[k] = v;
            total += v;
        }
        x.back() = -total;
        const GAElement xv(n, std::move(x));
        const auto q = kernel_form(kind, xv);
        record(q, "random trial " + std::to_string(t));
        if (q > 0) random_ok = false;
    }
    rep.random_trials = trials;
    rep.passed = rep.deterministic_passed && random_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// Fix-point averages

/// (1/n!) sum_g stat(g) (fix(g) - 1) for maj, des, inv (in that order).
inline std::array<Rational, 3> fix_identity(int n) {
    if (n < 3) throw std::invalid_argument("fix_identity requires n >= 3");
    std::array<std::int64_t, 3> sums{0, 0, 0};
    for (const auto& s : all_permutations(n)) {
        const int c = chi_nat(s);
        sums[0] += static_cast<std::int64_t>(stat(StatKind::maj, s)) * c;
        sums[1] += static_cast<std::int64_t>(stat(StatKind::des, s)) * c;
        sums[2] += static_cast<std::int64_t>(stat(StatKind::inv, s)) * c;
    }
    const Integer nf(static_cast<unsigned long>(factorial(n)));
    return {ratio(Integer(static_cast<long>(sums[0])), nf), ratio(Integer(static_cast<long>(sums[1])), nf),
            ratio(Integer(static_cast<long>(sums[2])), nf)};
}

// ---------------------------------------------------------------------------
// Structured multiplication

/// Multiplication by the centered u_kind for f in const + H, in O(n! n^2):
/// f is stored as (mean, W(f - mean)); the H1 and H2 parts are scaled by
/// their eigenvalues and the coefficients recovered with c_s = <act(s)h_inv, B>
/// (evaluated for all s at once by W_inv). The constant part is annihilated
/// because the centered statistic sums to zero.
inline GAElement structured_multiply(const GAElement& f, StatKind kind) {
    require_matrix_stat(kind);
    const int n = f.degree();
    if (n < 2) throw std::invalid_argument("structured_multiply requires n >= 2");
    const Rational mean = f.sum() / Rational(Integer(static_cast<unsigned long>(factorial(n))));
    const auto h = f - mean * GAElement::ones(n);
    SkewMatrix a(n);
    try {
        a = W(h);
    } catch (const NotInSubspace& e) {
        throw NotInSubspace("element is outside const + H", e.residual());
    }
    const auto a1 = p1(a);
    const SkewMatrix scaled = n >= 3 ? predicted_eigenvalue(kind, 1, n) * a1 + predicted_eigenvalue(kind, 2, n) * (a - a1)
                                     : predicted_eigenvalue(kind, 1, n) * a;
    return W_inv(scaled);
}

/// Random element c·1 + sum r_ij u_ij with small integer coefficients.
inline GAElement random_ideal_element(int n, std::mt19937_64& rng, bool with_constant = true) {
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<Rational> a;
    for (std::size_t p = 0; p < static_cast<std::size_t>(n * (n - 1) / 2); ++p) a.emplace_back(dist(rng));
    auto f = W_inv(SkewMatrix(n, std::move(a)));
    if (with_constant) f = f + Rational(dist(rng)) * GAElement::ones(n);
    return f;
}

struct BenchRecord {
    StatKind stat = StatKind::maj;
    int n = 0;
    std::int64_t naive_ns = 0;
    std::int64_t structured_ns = 0;
    double speedup = 0;
    Rational op_ratio;  // (n!)^2 / (n! (m + 1)) with m = n(n-1)/2 coordinates
};

/// Median wall time of the naive convolution and the structured path on one
/// seeded input. Outputs are compared exactly before any timing.
inline BenchRecord benchmark(StatKind kind, int n, int repetitions, std::uint64_t seed = 1) {
    require_matrix_stat(kind);
    if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
    check_degree(n);
    std::mt19937_64 rng(seed);
    const auto f = random_ideal_element(n, rng);
    const auto ut = from_stat(kind, n, true);
    const auto naive = apply_multiplier(ut, f);
    const auto fast = structured_multiply(f, kind);
    if (naive != fast) throw std::logic_error("structured and naive products differ");

    auto time_it = [&](auto&& fn) {
        std::vector<std::int64_t> samples;
        for (int r = 0; r < repetitions; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            auto out = fn();
            const auto t1 = std::chrono::steady_clock::now();
            if (out.size() == 0) throw std::logic_error("empty output");
            samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        }
        std::sort(samples.begin(), samples.end());
        return samples[samples.size() / 2];
    };
    BenchRecord rec;
    rec.stat = kind;
    rec.n = n;
    rec.naive_ns = time_it([&] { return apply_multiplier(ut, f); });
    rec.structured_ns = time_it([&] { return structured_multiply(f, kind); });
    rec.speedup = rec.structured_ns > 0 ? static_cast<double>(rec.naive_ns) / static_cast<double>(rec.structured_ns) : 0.0;
    rec.op_ratio = ratio(Integer(static_cast<unsigned long>(factorial(n))), n * (n - 1) / 2 + 1);
    return rec;
}

}  // namespace skewperm
