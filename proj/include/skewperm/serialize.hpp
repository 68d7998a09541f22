#pragma once

// JSON and CSV forms of the library's values. Rationals are always "p/q".

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewperm/groupalg.hpp"
#include "skewperm/rational.hpp"
#include "skewperm/skewrep.hpp"
#include "skewperm/solomon.hpp"
#include "skewperm/spectra.hpp"

namespace skewperm {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
    return parse_rational(j.get<std::string>());
}

inline Json rationals_to_json(std::span<const Rational> v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

// {"n": 3, "coeffs": ["p/q", ...]} in lexicographic permutation order.
inline Json to_json(const GAElement& u) { return {{"n", u.degree()}, {"coeffs", rationals_to_json(u.coeffs())}}; }

inline GAElement ga_element_from_json(const Json& j) {
    return GAElement(j.at("n").get<int>(), rationals_from_json(j.at("coeffs")));
}

// {"n": 4, "upper": ["p/q", ...]} with entries (1,2), (1,3), ..., (n-1,n).
inline Json to_json(const SkewMatrix& a) { return {{"n", a.size()}, {"upper", rationals_to_json(a.upper())}}; }

inline SkewMatrix skew_matrix_from_json(const Json& j) {
    return SkewMatrix(j.at("n").get<int>(), rationals_from_json(j.at("upper")));
}

inline Json to_json(const SpectrumReport& r) {
    Json ev = Json::array();
    for (const auto& e : r.eigenvalues)
        ev.push_back({{"value", to_json(e.value)},
                      {"subspace", e.subspace},
                      {"predicted_multiplicity", e.predicted_multiplicity},
                      {"verified_multiplicity", e.verified_multiplicity}});
    return {{"stat", std::string(name(r.stat))},
            {"n", r.n},
            {"eigenvalues", ev},
            {"kernel_dim", r.kernel_dim},
            {"predicted_kernel_dim", r.predicted_kernel_dim},
            {"passed", r.passed},
            {"witness", r.witness}};
}

inline Json to_json(const std::vector<IdentityResult>& ids) {
    Json a = Json::array();
    for (const auto& r : ids) a.push_back({{"name", r.name}, {"passed", r.passed}, {"witness", r.witness}});
    return a;
}

inline Json to_json(const MembershipResult& m) {
    Json coeffs = Json::array();
    if (m.member)
        for (const auto& [p, c] : m.coefficients) coeffs.push_back({{"composition", p.parts()}, {"coefficient", to_json(c)}});
    Json j = {{"member", m.member}, {"coefficients", coeffs}};
    if (!m.member) j["residual"] = to_json(m.residual);
    return j;
}

inline Json to_json(const BenchRecord& b) {
    return {{"stat", std::string(name(b.stat))},
            {"n", b.n},
            {"naive_ns", b.naive_ns},
            {"structured_ns", b.structured_ns},
            {"op_ratio", to_json(b.op_ratio)}};
}

inline constexpr const char* kBenchCsvHeader = "stat,n,naive_ns,structured_ns,op_ratio";

inline std::string to_csv_row(const BenchRecord& b) {
    std::ostringstream os;
    os << name(b.stat) << ',' << b.n << ',' << b.naive_ns << ',' << b.structured_ns << ',' << to_string(b.op_ratio);
    return os.str();
}

/// Full n x n matrix, one row per line.
inline std::string to_csv(const SkewMatrix& a) {
    std::ostringstream os;
    const int n = a.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) os << (j > 1 ? "," : "") << to_string(a(i, j));
        os << '\n';
    }
    return os.str();
}

/// One "permutation,coefficient" line per element, permutation written as 1-2-3.
inline std::string to_csv(const GAElement& u) {
    std::ostringstream os;
    os << "permutation,coefficient\n";
    auto table = PermutationTable::get(u.degree());
    for (std::size_t k = 0; k < u.size(); ++k) {
        const auto* w = table->row(k);
        for (int i = 0; i < u.degree(); ++i) os << (i ? "-" : "") << int(w[i]) + 1;
        os << ',' << to_string(u[k]) << '\n';
    }
    return os.str();
}

}  // namespace skewperm
