#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewperm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Formats as "p/q" with q >= 1, always including the denominator.
inline std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

/// num/den in canonical form.
inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

namespace detail {

/// A rational vector rewritten as integer numerators over one common
/// denominator. Only produced when every numerator fits in 31 bits, so that
/// products of two entries summed over up to 2^64 terms fit in __int128.
struct ScaledInts {
    std::vector<std::int64_t> nums;
    Integer den;
};

inline Integer common_denominator(std::span<const Rational> v) {
    Integer den = 1;
    for (const auto& x : v) {
        if (x.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    }
    return den;
}

inline std::optional<ScaledInts> to_scaled_ints(std::span<const Rational> v) {
    constexpr std::int64_t kLimit = std::int64_t{1} << 31;
    ScaledInts out;
    out.den = common_denominator(v);
    out.nums.reserve(v.size());
    Integer t;
    for (const auto& x : v) {
        t = x.get_num() * (out.den / x.get_den());
        if (!t.fits_slong_p()) return std::nullopt;
        const long val = t.get_si();
        if (val >= kLimit || val <= -kLimit) return std::nullopt;
        out.nums.push_back(val);
    }
    return out;
}

inline Integer from_int128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

}  // namespace detail
}  // namespace skewperm
