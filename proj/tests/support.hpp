#pragma once

// Conversions between library values and the oracle's plain types.

#include "oracle.hpp"
#include "skewperm/skewperm.hpp"

namespace support {

inline skewperm::Permutation to_lib(const oracle::Perm& p) { return skewperm::Permutation(std::span<const int>(p)); }

inline oracle::Element to_map(const skewperm::GAElement& u) {
    oracle::Element m;
    auto table = skewperm::PermutationTable::get(u.degree());
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != 0) m[table->at(k).one_line()] = u[k];
    return m;
}

inline skewperm::GAElement from_map(const oracle::Element& m, int n) {
    skewperm::GAElement u(n);
    std::vector<skewperm::Rational> c(u.coeffs().begin(), u.coeffs().end());
    for (const auto& [p, x] : m) c[skewperm::rank(to_lib(p))] = x;
    return skewperm::GAElement(n, std::move(c));
}

/// Element with coefficient f(sigma) built from the oracle enumeration.
template <class F>
skewperm::GAElement tabulate(int n, F f) {
    oracle::Element m;
    for (const auto& p : oracle::perms(n)) m[p] = f(p);
    return from_map(m, n);
}

}  // namespace support
