#pragma once

#include <atomic>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skewperm {

/// How the product of two permutations acts on points.
///
/// variant_a: (s t)(i) = s(t(i)), right factor applied first.
/// variant_b: (s t)(i) = t(s(i)), left factor applied first.
///
/// The group-algebra identities this library checks hold under exactly one
/// of the two; the n = 3 oracle in bootstrap.hpp selects it. variant_b is
/// the pinned default and is asserted by a regression test.
enum class Convention { variant_a, variant_b };

/// Side on which basis elements multiply a group-algebra element.
enum class Side { left, right };

struct Pinning {
    Convention convention = Convention::variant_b;
    Side ideal_side = Side::left;

    bool operator==(const Pinning&) const = default;
};

inline constexpr Pinning kPinnedDefault{Convention::variant_b, Side::left};

/// Default degree cap: S_8 has 40320 elements; one dense group-algebra
/// element is then about 2.5 MB of GMP rationals.
inline constexpr int kDefaultDegreeCap = 8;

namespace detail {
inline std::atomic<Convention> g_convention{kPinnedDefault.convention};
inline std::atomic<Side> g_ideal_side{kPinnedDefault.ideal_side};
inline std::atomic<int> g_degree_cap{kDefaultDegreeCap};
}  // namespace detail

inline Convention convention() { return detail::g_convention.load(std::memory_order_relaxed); }
inline Side ideal_side() { return detail::g_ideal_side.load(std::memory_order_relaxed); }
inline Pinning pinning() { return {convention(), ideal_side()}; }

inline void set_pinning(Pinning p) {
    detail::g_convention.store(p.convention);
    detail::g_ideal_side.store(p.ideal_side);
}

inline int degree_cap() { return detail::g_degree_cap.load(std::memory_order_relaxed); }
inline void set_degree_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("degree cap must be positive");
    detail::g_degree_cap.store(cap);
}

/// Restores the previous pinning on scope exit. Not meant to be used while
/// other threads are computing.
class ScopedPinning {
public:
    explicit ScopedPinning(Pinning p) : saved_(pinning()) { set_pinning(p); }
    ~ScopedPinning() { set_pinning(saved_); }
    ScopedPinning(const ScopedPinning&) = delete;
    ScopedPinning& operator=(const ScopedPinning&) = delete;

private:
    Pinning saved_;
};

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

inline std::string_view name(Convention c) { return c == Convention::variant_a ? "variantA" : "variantB"; }
inline std::string_view name(Side s) { return s == Side::left ? "left" : "right"; }

inline Convention parse_convention(std::string_view s) {
    if (s == "variantA") return Convention::variant_a;
    if (s == "variantB") return Convention::variant_b;
    throw std::invalid_argument("unknown convention: " + std::string(s));
}

inline Side parse_side(std::string_view s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw std::invalid_argument("unknown side: " + std::string(s));
}

}  // namespace skewperm
