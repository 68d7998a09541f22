// skewperm: statistics tables, verification suites, spectra, benchmarks and
// object export.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skewperm/skewperm.hpp"

namespace {

using namespace skewperm;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int> n;
    std::string n_range;
    std::vector<std::string> stats;
    std::vector<std::string> suites;
    std::string format;  // per-command default when empty
    std::uint64_t seed = 1;
    std::string convention;  // empty: cached pinning or oracle
    int cap = kDefaultDegreeCap;
    std::string out;
    bool sums = false;
    int reps = 5;
    std::size_t trials = 1000;
    std::string object;
};

std::vector<std::string> split_commas(const std::vector<std::string>& in) {
    std::vector<std::string> out;
    for (const auto& s : in) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
    }
    return out;
}

/// --n or --n-range A..B; `min_n` is the smallest degree the command accepts.
std::vector<int> degrees(const Options& o, int min_n) {
    std::vector<int> out;
    if (o.n && !o.n_range.empty()) throw UsageError("--n and --n-range are exclusive");
    if (o.n) {
        out.push_back(*o.n);
    } else if (!o.n_range.empty()) {
        const auto dots = o.n_range.find("..");
        if (dots == std::string::npos) throw UsageError("--n-range must look like A..B");
        int a = 0, b = 0;
        try {
            std::size_t pa = 0, pb = 0;
            const auto sa = o.n_range.substr(0, dots), sb = o.n_range.substr(dots + 2);
            a = std::stoi(sa, &pa);
            b = std::stoi(sb, &pb);
            if (pa != sa.size() || pb != sb.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw UsageError("--n-range must look like A..B");
        }
        if (a > b) throw UsageError("--n-range is empty");
        for (int n = a; n <= b; ++n) out.push_back(n);
    } else {
        throw UsageError("one of --n or --n-range is required");
    }
    for (int n : out)
        if (n < min_n || n > degree_cap())
            throw UsageError("n = " + std::to_string(n) + " outside " + std::to_string(min_n) + ".." + std::to_string(degree_cap()));
    return out;
}

std::vector<StatKind> stat_list(const Options& o, std::vector<StatKind> fallback, bool matrix_only) {
    const auto names = split_commas(o.stats);
    if (names.empty()) return fallback;
    std::vector<StatKind> out;
    for (const auto& s : names) {
        if (s == "all") return fallback;
        StatKind k;
        try {
            k = parse_stat(s);
        } catch (const std::exception&) {
            throw UsageError("unknown statistic: " + s);
        }
        if (matrix_only && k != StatKind::des && k != StatKind::maj && k != StatKind::inv)
            throw UsageError("statistic must be des, maj or inv: " + s);
        out.push_back(k);
    }
    return out;
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a) return;
    throw UsageError("unsupported --format " + o.format);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot open --out file " + o.out);
    f << text;
}

void apply_convention(const Options& o) {
    Pinning p;
    std::string source;
    if (o.convention.empty()) {
        const auto r = resolve_pinning(false);
        p = r.pinning;
        source = r.from_cache ? "cache " + convention_cache_path().string() : "oracle";
    } else if (o.convention == "auto") {
        p = resolve_pinning(true).pinning;
        source = "oracle";
    } else {
        Convention c;
        try {
            c = parse_convention(o.convention);
        } catch (const std::exception&) {
            throw UsageError("--convention must be auto, variantA or variantB");
        }
        const auto outcome = evaluate_variant(c);
        p = {c, outcome.invariant_side.value_or(Side::left)};
        source = "flag";
    }
    set_pinning(p);
    std::cerr << "pinned convention: " << name(p.convention) << ", ideal side " << name(p.ideal_side) << " (" << source << ")\n";
}

// ---------------------------------------------------------------------------

int cmd_stats(const Options& o) {
    check_format(o, {"text", "json", "csv"});
    const auto ns = degrees(o, 1);
    const auto kinds = stat_list(o, {kAllStats.begin(), kAllStats.end()}, false);
    std::ostringstream os;
    Json doc = Json::array();
    if (o.format == "csv") {
        os << (o.sums ? "n,stat,sum,distribution" : "n,index,permutation");
        if (!o.sums)
            for (auto k : kinds) os << ',' << name(k);
        os << '\n';
    }
    for (int n : ns) {
        if (o.sums) {
            for (auto k : kinds) {
                const auto poly = generating_polynomial(k, n);
                const auto sum = stat_sum(k, n);
                std::string dist;
                for (std::size_t i = 0; i < poly.size(); ++i) dist += (i ? " " : "") + std::to_string(poly[i]);
                if (o.format == "json")
                    doc.push_back({{"n", n}, {"stat", std::string(name(k))}, {"sum", sum}, {"distribution", poly}});
                else if (o.format == "csv")
                    os << n << ',' << name(k) << ',' << sum << ',' << dist << '\n';
                else
                    os << "n=" << n << ' ' << name(k) << " sum " << sum << " distribution [" << dist << "]\n";
            }
            continue;
        }
        const auto perms = all_permutations(n);
        for (std::size_t idx = 0; idx < perms.size(); ++idx) {
            const auto& s = perms[idx];
            if (o.format == "json") {
                Json row = {{"n", n}, {"index", idx}, {"permutation", s.one_line()}};
                for (auto k : kinds) row[std::string(name(k))] = stat(k, s);
                doc.push_back(row);
            } else if (o.format == "csv") {
                std::string w;
                for (int i = 1; i <= n; ++i) w += (i > 1 ? "-" : "") + std::to_string(s(i));
                os << n << ',' << idx << ',' << w;
                for (auto k : kinds) os << ',' << stat(k, s);
                os << '\n';
            } else {
                os << s.str();
                for (auto k : kinds) os << ' ' << name(k) << '=' << stat(k, s);
                os << '\n';
            }
        }
    }
    emit(o, o.format == "json" ? doc.dump(2) + "\n" : os.str());
    return kExitOk;
}

int cmd_verify(const Options& o) {
    check_format(o, {"text", "json", "csv"});
    auto suites = split_commas(o.suites);
    if (suites.empty()) throw UsageError("--suite is required");
    for (const auto& s : suites)
        if (s != "all" && !find_suite(s)) throw UsageError("unknown suite: " + s);
    const auto ns = degrees(o, 1);
    SuiteOptions opt;
    opt.seed = o.seed;
    opt.cpd_trials = o.trials;
    const auto rep = run_suites(suites, ns, opt);
    if (o.format == "json") emit(o, to_json(rep).dump(2) + "\n");
    else if (o.format == "csv") emit(o, to_csv(rep));
    else emit(o, to_text(rep));
    return rep.passed() ? kExitOk : kExitFail;
}

int cmd_spectrum(const Options& o) {
    check_format(o, {"text", "json"});
    const auto ns = degrees(o, 2);
    for (int n : ns)
        if (n > 6) throw UsageError("spectrum supports n up to 6");
    const auto kinds = stat_list(o, {StatKind::maj, StatKind::des, StatKind::inv}, true);
    bool ok = true;
    Json doc = Json::array();
    std::ostringstream os;
    for (int n : ns)
        for (auto k : kinds) {
            const auto r = verify_spectrum(k, n);
            ok = ok && r.passed;
            doc.push_back(to_json(r));
            os << name(k) << " n=" << n << (r.passed ? " verified" : " FAILED: " + r.witness) << '\n';
            for (const auto& e : r.eigenvalues)
                os << "  " << to_string(e.value) << "  multiplicity " << e.verified_multiplicity << "  (" << e.subspace << ")\n";
            os << "  0/1  multiplicity " << r.kernel_dim << "  (kernel)\n";
        }
    emit(o, o.format == "json" ? doc.dump(2) + "\n" : os.str());
    return ok ? kExitOk : kExitFail;
}

int cmd_bench(const Options& o) {
    check_format(o, {"csv", "json", "text"});
    if (o.reps < 1) throw UsageError("--reps must be positive");
    const auto ns = degrees(o, 2);
    const auto kinds = stat_list(o, {StatKind::maj, StatKind::des, StatKind::inv}, true);
    std::ostringstream os;
    Json doc = Json::array();
    if (o.format != "json") os << kBenchCsvHeader << '\n';
    for (int n : ns)
        for (auto k : kinds) {
            const auto b = benchmark(k, n, o.reps, o.seed);
            doc.push_back(to_json(b));
            os << to_csv_row(b) << '\n';
        }
    emit(o, o.format == "json" ? doc.dump(2) + "\n" : os.str());
    return kExitOk;
}

int cmd_export(const Options& o) {
    check_format(o, {"json", "csv"});
    if (o.object.empty()) throw UsageError("--object is required");
    const auto ns = degrees(o, 2);
    if (ns.size() != 1) throw UsageError("export takes a single --n");
    const int n = ns.front();
    const auto& obj = o.object;
    std::optional<SkewMatrix> mat;
    std::optional<GAElement> elem;
    std::optional<Json> other;
    if (obj == "h_des" || obj == "h_maj" || obj == "h_inv") {
        mat = h_matrix(parse_stat(obj.substr(2)), n);
    } else if (obj == "projected_delta") {
        mat = projected_delta(n);
    } else if (obj.rfind("p1_h_", 0) == 0 || obj.rfind("p2_h_", 0) == 0) {
        const auto h = h_matrix(parse_stat(obj.substr(5)), n);
        mat = obj[1] == '1' ? p1(h) : p2(h);
    } else if (obj.rfind("u_", 0) == 0 || obj.rfind("ucentered_", 0) == 0) {
        const bool centered = obj[1] == 'c';
        elem = from_stat(parse_stat(obj.substr(centered ? 10 : 2)), n, centered);
    } else if (obj == "identities") {
        other = to_json(convolution_identities(n));
    } else if (obj.rfind("membership_", 0) == 0) {
        other = to_json(solomon_membership(from_stat(parse_stat(obj.substr(11)), n, false)));
    } else {
        throw UsageError("unknown --object " + obj);
    }
    if (o.format == "csv") {
        if (mat) emit(o, to_csv(*mat));
        else if (elem) emit(o, to_csv(*elem));
        else throw UsageError("object " + obj + " has no csv form");
    } else {
        const Json j = mat ? to_json(*mat) : elem ? to_json(*elem) : *other;
        emit(o, j.dump(2) + "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation statistics through skew-symmetric matrices"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--convention", o.convention, "auto, variantA or variantB (default: cached pinning)");
    app.add_option("--cap", o.cap, "largest degree accepted")->check(CLI::Range(1, kMaxTableDegree));
    app.add_option("--out", o.out, "write output to this file");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "degree");
        sub->add_option("--n-range", o.n_range, "degrees A..B");
        sub->add_option("--format", o.format, "text, json or csv");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--stat", o.stats, "statistic(s), comma separated");
        sub->add_option("--convention", o.convention, "auto, variantA or variantB");
        sub->add_option("--cap", o.cap, "largest degree accepted")->check(CLI::Range(1, kMaxTableDegree));
        sub->add_option("--out", o.out, "write output to this file");
    };
    auto* stats = app.add_subcommand("stats", "statistic values, sums and distributions");
    add_common(stats);
    stats->add_flag("--sums", o.sums, "print sums and distributions instead of values");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify->add_option("--suite", o.suites, "suite name(s) or all");
    verify->add_option("--trials", o.trials, "random vectors for the cpd suite");
    auto* spectrum = app.add_subcommand("spectrum", "verified spectrum of multiplication by u_stat");
    add_common(spectrum);
    auto* bench = app.add_subcommand("bench", "naive versus structured multiplication");
    add_common(bench);
    bench->add_option("--reps", o.reps, "timed repetitions");
    auto* exp = app.add_subcommand("export", "serialize an object");
    add_common(exp);
    exp->add_option("--object", o.object, "h_inv, p1_h_maj, u_des, ucentered_inv, projected_delta, identities, membership_des, ...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    if (o.format.empty()) o.format = bench->parsed() ? "csv" : exp->parsed() ? "json" : "text";
    try {
        set_degree_cap(o.cap);
        if (!stats->parsed()) apply_convention(o);
        if (stats->parsed()) return cmd_stats(o);
        if (verify->parsed()) return cmd_verify(o);
        if (spectrum->parsed()) return cmd_spectrum(o);
        if (bench->parsed()) return cmd_bench(o);
        return cmd_export(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
