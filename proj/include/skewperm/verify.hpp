#pragma once

// Verification suites: each produces claim records with exact expected and
// computed values. Suites fan out over std::async; claims are sorted by id.

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewperm/groupalg.hpp"
#include "skewperm/linalg.hpp"
#include "skewperm/perm.hpp"
#include "skewperm/skewrep.hpp"
#include "skewperm/solomon.hpp"
#include "skewperm/spectra.hpp"

namespace skewperm {

struct Claim {
    std::string id;
    std::string anchor;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct Skipped {
    std::string suite;
    int n = 0;
    std::string reason;
};

struct VerificationReport {
    std::vector<std::string> suites;
    std::vector<Claim> claims;
    std::vector<Skipped> skipped;
    bool passed() const {
        return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
    }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t cpd_trials = 1000;
};

namespace detail {

inline std::string pad_n(int n) { return (n < 10 ? "n0" : "n") + std::to_string(n); }

class ClaimSink {
public:
    ClaimSink(std::string suite, int n) : prefix_(suite + "/" + pad_n(n) + "/") {}

    void add(const std::string& key, const std::string& anchor, const std::string& expected, const std::string& computed) {
        claims_.push_back({prefix_ + key, anchor, expected, computed, expected == computed});
    }
    void add(const std::string& key, const std::string& anchor, const Rational& expected, const Rational& computed) {
        add(key, anchor, to_string(expected), to_string(computed));
    }
    void add(const std::string& key, const std::string& anchor, long expected, long computed) {
        add(key, anchor, std::to_string(expected), std::to_string(computed));
    }
    std::vector<Claim> take() { return std::move(claims_); }

private:
    std::string prefix_;
    std::vector<Claim> claims_;
};

inline std::string join_values(const std::set<Rational>& vals) {
    std::string s = "{";
    bool first = true;
    for (const auto& v : vals) {
        s += (first ? "" : ",") + to_string(v);
        first = false;
    }
    return s + "}";
}

inline std::string pair_str(std::pair<int, int> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace detail

/// The entrywise patterns of the displayed projections of h_des, h_maj and h_inv.
inline SkewMatrix displayed_projection(StatKind kind, int component, int n) {
    require_matrix_stat(kind);
    if (n < 3) throw std::invalid_argument("displayed_projection requires n >= 3");
    if (kind == StatKind::inv) return component == 1 ? toeplitz_a(n) : toeplitz_b(n);
    std::vector<Rational> u;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rational x = 0;
            if (kind == StatKind::des && component == 1) {
                if (i == 1 && j == n) x = ratio(2, n);
                else if (i == 1 || j == n) x = ratio(1, n);
            } else if (kind == StatKind::des) {
                if (i == 1 && j == n) x = ratio(-2, n);
                else if ((i == 1 && j == 2) || (i == n - 1 && j == n)) x = ratio(n - 1, n);
                else if (j == i + 1) x = 1;
                else if (i == 1 || j == n) x = ratio(-1, n);
            } else if (component == 1) {
                if (j == n) x = 1;
            } else {
                if (i == n - 1 && j == n) x = n - 2;
                else if (j == i + 1) x = i;
                else if (j == n) x = -1;
            }
            u.push_back(x);
        }
    return SkewMatrix(n, std::move(u));
}

// ---------------------------------------------------------------------------
// Suites

inline std::vector<Claim> suite_stats(int n, const SuiteOptions&) {
    detail::ClaimSink out("stats", n);
    const Integer nf(static_cast<unsigned long>(factorial(n)));
    const long half = static_cast<long>(factorial(n)) * n * (n - 1) / 4;
    out.add("sum-maj", "sum of maj over S_n", half, stat_sum(StatKind::maj, n));
    out.add("sum-inv", "sum of inv over S_n", half, stat_sum(StatKind::inv, n));
    out.add("sum-des", "sum of des over S_n", static_cast<long>(factorial(n)) * (n - 1) / 2, stat_sum(StatKind::des, n));
    auto poly = [](std::vector<std::uint64_t> p) {
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        return s;
    };
    out.add("maj-equals-inv", "maj and inv equidistributed", poly(generating_polynomial(StatKind::inv, n)),
            poly(generating_polynomial(StatKind::maj, n)));
    out.add("des-equals-exc", "des and exc equidistributed", poly(generating_polynomial(StatKind::des, n)),
            poly(generating_polynomial(StatKind::exc, n)));
    return out.take();
}

inline std::vector<Claim> suite_gram(int n, const SuiteOptions&) {
    detail::ClaimSink out("gram", n);
    const auto g = gram_pseudounits(n);
    const auto pairs = upper_pairs(n);
    std::map<std::string, std::set<Rational>> seen;
    std::set<Rational> all;
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            const auto [i, j] = pairs[a];
            const auto [k, l] = pairs[b];
            std::string cat;
            if (a == b) cat = "equal";
            else if (i == k || j == l) cat = "shared-end";
            else if (j == k || i == l) cat = "chained";
            else cat = "disjoint";
            seen[cat].insert(g[a][b]);
            all.insert(g[a][b]);
        }
    const std::map<std::string, Rational> want{
        {"equal", Rational(1)}, {"shared-end", ratio(1, 3)}, {"chained", ratio(-1, 3)}, {"disjoint", Rational(0)}};
    for (const auto& [cat, v] : want) {
        if (!seen.count(cat)) continue;
        out.add("case-" + cat, "pseudounit Gram relations", "{" + to_string(v) + "}", detail::join_values(seen[cat]));
    }
    std::set<Rational> allowed{Rational(1), ratio(1, 3), ratio(-1, 3), Rational(0)};
    if (n == 3) allowed.erase(Rational(0));
    out.add("value-set", "pseudounit Gram relations", detail::join_values(allowed), detail::join_values(all));
    return out.take();
}

inline std::vector<Claim> suite_isomorphism(int n, const SuiteOptions&) {
    detail::ClaimSink out("isomorphism", n);
    const auto pairs = upper_pairs(n);
    std::size_t c1_bad = 0;
    std::string first_bad = "none";
    for (const auto& [i, j] : pairs) {
        const auto lhs = central_idempotent_apply(DiagramLabel::row, pseudounit(i, j, n));
        GAElement rhs(n);
        for (int k = 1; k <= n; ++k) rhs = rhs + pseudounit(i, k, n) + pseudounit(k, j, n);
        rhs = ratio(1, n) * rhs;
        if (lhs != rhs) {
            if (!c1_bad) first_bad = detail::pair_str({i, j});
            ++c1_bad;
        }
    }
    out.add("c1-average-mismatches", "C1 u_ij as an average of pseudounits", "0 (first failing pair: none)",
            std::to_string(c1_bad) + " (first failing pair: " + first_bad + ")");

    std::size_t ortho_bad = 0;
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a; b < pairs.size(); ++b)
            if (primed_inner(pairs[a], pairs[b], n) != Rational(a == b ? 1 : 0)) ++ortho_bad;
    out.add("primed-orthonormal-mismatches", "unitary isomorphism H to M", 0L, static_cast<long>(ortho_bad));

    for (auto kind : {StatKind::des, StatKind::maj, StatKind::inv}) {
        const auto w = W(from_stat(kind, n, true));
        const auto want = Rational(-1, 2) * h_matrix(kind, n);
        auto render = [](const SkewMatrix& m) {
            std::string s;
            for (const auto& x : m.upper()) s += (s.empty() ? "" : " ") + to_string(x);
            return s;
        };
        out.add("W-centered-" + std::string(name(kind)), "centered statistics lie in H", render(want), render(w));
    }
    return out.take();
}

inline std::vector<Claim> suite_matrix_formulas(int n, const SuiteOptions&) {
    detail::ClaimSink out("matrix-formulas", n);
    const auto all = all_permutations(n);
    for (auto kind : {StatKind::des, StatKind::maj, StatKind::inv}) {
        long bad = 0;
        for (const auto& s : all)
            if (stat_via_matrix(kind, s) != stat(kind, s)) ++bad;
        out.add(std::string(name(kind)) + "-mismatches", "matrix formulas for the statistics", 0L, bad);
    }
    return out.take();
}

inline std::vector<Claim> suite_projections(int n, const SuiteOptions&) {
    detail::ClaimSink out("projections", n);
    auto render = [](const SkewMatrix& m) {
        std::string s;
        for (const auto& x : m.upper()) s += (s.empty() ? "" : " ") + to_string(x);
        return s;
    };
    for (auto kind : {StatKind::des, StatKind::maj, StatKind::inv}) {
        const auto h = h_matrix(kind, n);
        out.add("p1-h" + std::string(name(kind)), "displayed projections", render(displayed_projection(kind, 1, n)), render(p1(h)));
        out.add("p2-h" + std::string(name(kind)), "displayed projections", render(displayed_projection(kind, 2, n)), render(p2(h)));
    }
    return out.take();
}

/// Closed-form eigenvalue on component k (1 or 2).
inline Rational closed_form_eigenvalue(StatKind kind, int component, int n) {
    const Rational nf(Integer(static_cast<unsigned long>(factorial(n))));
    switch (kind) {
        case StatKind::maj: return -nf / 2;
        case StatKind::des: return -nf / n;
        case StatKind::inv: return component == 1 ? Rational(-nf * (n + 1) / 6) : Rational(-nf / 6);
        default: throw std::invalid_argument("no closed form");
    }
}

inline std::vector<Claim> suite_spectra(int n, const SuiteOptions&) {
    detail::ClaimSink out("spectra", n);
    for (auto kind : {StatKind::maj, StatKind::des, StatKind::inv}) {
        const std::string k(name(kind));
        const auto rep = verify_spectrum(kind, n);
        out.add(k + "-verified", "spectrum of multiplication by u_stat", "pass", rep.passed ? "pass" : "fail: " + rep.witness);
        for (const auto& e : rep.eigenvalues) {
            Rational want;
            if (e.subspace == "const") want = Rational(Integer(static_cast<long>(stat_sum(kind, n))));
            else if (e.subspace == "H2") want = closed_form_eigenvalue(kind, 2, n);
            else want = closed_form_eigenvalue(kind, 1, n);
            out.add(k + "-eigenvalue-" + e.subspace, "closed-form eigenvalues", want, e.value);
            out.add(k + "-multiplicity-" + e.subspace, "eigenspace dimensions", static_cast<long>(e.predicted_multiplicity),
                    static_cast<long>(e.verified_multiplicity));
        }
        out.add(k + "-kernel", "dimension of the zero eigenspace", static_cast<long>(rep.predicted_kernel_dim),
                static_cast<long>(rep.kernel_dim));
    }
    return out.take();
}

inline std::vector<Claim> suite_identities(int n, const SuiteOptions&) {
    detail::ClaimSink out("identities", n);
    int idx = 1;
    for (const auto& r : convolution_identities(n))
        out.add("identity-" + std::to_string(idx++), r.name, "holds", r.passed ? "holds" : "fails " + r.witness);
    return out.take();
}

inline std::vector<Claim> suite_cpd(int n, const SuiteOptions& opt) {
    detail::ClaimSink out("cpd", n);
    const auto rep = cpd_check(n, opt.cpd_trials, opt.seed, StatKind::inv);
    out.add("inv-form-nonpositive", "inv is conditionally nonpositive definite", "max <= 0",
            rep.passed ? "max <= 0" : "max " + to_string(rep.worst) + " at " + rep.witness);
    out.add("inv-symmetric", "inv(s^-1) = inv(s)", "yes", rep.symmetric_kernel ? "yes" : "no");
    // For maj and des only the eigenvector part is claimed: their symmetrized
    // kernels take positive values on some sum-zero vectors.
    for (auto kind : {StatKind::maj, StatKind::des}) {
        const std::string k(name(kind));
        const auto r = cpd_check(n, 0, opt.seed, kind);
        out.add(k + "-eigenvector-form-nonpositive", "form on the eigenvectors in H", "max <= 0",
                r.deterministic_passed ? "max <= 0" : "max " + to_string(r.worst) + " at " + r.witness);
        if (n >= 4) out.add(k + "-symmetric", "maj and des are not symmetric", "no", r.symmetric_kernel ? "yes" : "no");
    }
    return out.take();
}

inline std::vector<Claim> suite_fix(int n, const SuiteOptions&) {
    detail::ClaimSink out("fix", n);
    const auto t = fix_identity(n);
    out.add("maj", "average of stat times fix-1", Rational(-1, 2), t[0]);
    out.add("des", "average of stat times fix-1", ratio(-1, n), t[1]);
    out.add("inv", "average of stat times fix-1", ratio(-(n + 1), 6), t[2]);
    return out.take();
}

inline std::vector<Claim> suite_solomon(int n, const SuiteOptions&) {
    detail::ClaimSink out("solomon", n);
    auto render = [](std::span<const Rational> v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + to_string(x);
        return s;
    };
    const auto comps = compositions(n);
    std::vector<GAElement> bs;
    for (const auto& p : comps) bs.push_back(b_element(p));
    out.add("basis-rank", "B_p are independent", static_cast<long>(comps.size()), static_cast<long>(linalg::rank(as_rows(bs))));
    for (auto kind : {StatKind::des, StatKind::maj}) {
        const auto m = solomon_membership(from_stat(kind, n, false));
        std::vector<Rational> c;
        for (const auto& [p, x] : m.coefficients) c.push_back(x);
        const auto want = descent_expansion(kind, n);
        out.add("u" + std::string(name(kind)) + "-expansion", "expansion of u_stat in the B basis", "member: " + render(want),
                m.member ? "member: " + render(c) : "not a member");
    }
    if (n >= 3) {
        const auto m = solomon_membership(from_stat(StatKind::inv, n, false));
        out.add("uinv-member", "u_inv lies outside the descent algebra", "no", m.member ? "yes" : "no");
    }
    const auto cl = closure_check(n);
    out.add("closure", "descent algebra closed under convolution", "0 failing pairs of " + std::to_string(cl.pairs_checked),
            std::to_string(cl.failures.size()) + " failing pairs of " + std::to_string(cl.pairs_checked));
    return out.take();
}

inline std::vector<Claim> suite_complexity(int n, const SuiteOptions&) {
    detail::ClaimSink out("complexity", n);
    const long m1 = n * (n - 1) / 2 + 1;
    std::vector<GAElement> mdi;
    for (auto kind : {StatKind::maj, StatKind::des, StatKind::inv}) {
        mdi.push_back(from_stat(kind, n, false));
        out.add("dim-" + std::string(name(kind)), "dual complexity of u_stat", m1, static_cast<long>(ideal_dimension(mdi.back())));
    }
    const Side side = ideal_side();
    out.add("span-maj-des-inv", "maj, des and inv generate one ideal", m1, static_cast<long>(span_dimension(mdi, side)));
    const long e1 = static_cast<long>(n - 1) * (n - 1) + 1;
    std::vector<GAElement> ef{from_stat(StatKind::exc, n, false), from_stat(StatKind::fix, n, false)};
    out.add("dim-exc", "dual complexity of u_exc", e1, static_cast<long>(ideal_dimension(ef[0])));
    out.add("dim-fix", "dual complexity of u_fix", e1, static_cast<long>(ideal_dimension(ef[1])));
    out.add("span-exc-fix", "exc and fix generate one ideal", e1, static_cast<long>(span_dimension(ef, side)));
    return out.take();
}

struct SuiteInfo {
    std::string name;
    int min_n;
    int max_n;
    std::function<std::vector<Claim>(int, const SuiteOptions&)> run;
};

inline const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> reg{
        {"stats", 1, 8, suite_stats},
        {"gram", 3, 7, suite_gram},
        {"isomorphism", 3, 6, suite_isomorphism},
        {"matrix-formulas", 2, 8, suite_matrix_formulas},
        {"projections", 3, 12, suite_projections},
        {"spectra", 2, 6, suite_spectra},
        {"identities", 3, 7, suite_identities},
        {"cpd", 2, 6, suite_cpd},
        {"fix", 3, 8, suite_fix},
        {"solomon", 2, 6, suite_solomon},
        {"complexity", 2, 6, suite_complexity},
    };
    return reg;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suite_registry()) out.push_back(s.name);
    return out;
}

inline const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : suite_registry())
        if (s.name == name) return &s;
    return nullptr;
}

/// Runs every (suite, n) pair concurrently. "all" expands to every suite.
inline VerificationReport run_suites(std::vector<std::string> suites, const std::vector<int>& degrees,
                                     const SuiteOptions& opt = {}) {
    if (std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = suite_names();
    VerificationReport rep;
    rep.suites = suites;
    std::vector<std::future<std::vector<Claim>>> jobs;
    for (const auto& name : suites) {
        const auto* info = find_suite(name);
        if (!info) throw std::invalid_argument("unknown suite: " + name);
        for (int n : degrees) {
            if (n < info->min_n || n > info->max_n || n > degree_cap()) {
                rep.skipped.push_back({name, n,
                                       "supported degrees " + std::to_string(info->min_n) + ".." +
                                           std::to_string(std::min(info->max_n, degree_cap()))});
                continue;
            }
            jobs.push_back(std::async(std::launch::async, info->run, n, opt));
        }
    }
    for (auto& j : jobs) {
        auto c = j.get();
        rep.claims.insert(rep.claims.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    }
    std::sort(rep.claims.begin(), rep.claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return rep;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"id", c.id}, {"anchor", c.anchor}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"suite", s.suite}, {"n", s.n}, {"reason", s.reason}});
    return {{"suites", r.suites}, {"claims", claims}, {"skipped", skipped}, {"passed", r.passed()}};
}

inline std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    for (const auto& c : r.claims) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]\n";
        if (!c.pass) os << "     expected: " << c.expected << "\n     computed: " << c.computed << '\n';
    }
    for (const auto& s : r.skipped) os << "SKIP " << s.suite << " n=" << s.n << " (" << s.reason << ")\n";
    const auto failed = std::count_if(r.claims.begin(), r.claims.end(), [](const Claim& c) { return !c.pass; });
    os << (r.passed() ? "OK" : "FAILED") << ": " << r.claims.size() - failed << "/" << r.claims.size() << " claims passed\n";
    return os.str();
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "id,anchor,expected,computed,pass\n";
    for (const auto& c : r.claims)
        os << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << csv_field(c.expected) << ',' << csv_field(c.computed)
           << ',' << (c.pass ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace skewperm
