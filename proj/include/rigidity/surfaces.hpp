#pragma once

// Divisor classes aC0 + bf on the Hirzebruch surface X_e, and the integer
// bookkeeping that certifies a smooth curve degenerates to a singular
// stable curve C1 u C2 on a surface of minimal degree.
//
// Intersection pairing: C0^2 = -e, C0.f = 1, f^2 = 0.

#include <optional>
#include <set>

#include "rigidity/bounds.hpp"

namespace rigidity {

struct DivisorClass {
  integer a = 0;  // coefficient of C0
  integer b = 0;  // coefficient of the fiber f
  integer e = 0;  // invariant of X_e

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  detail::require(x.e == y.e, "DivisorClass: classes live on different surfaces");
  return {x.a + y.a, x.b + y.b, x.e};
}

inline DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  detail::require(x.e == y.e, "DivisorClass: classes live on different surfaces");
  return {x.a - y.a, x.b - y.b, x.e};
}

struct SplitCertificate {
  DivisorClass d1;
  DivisorClass d2;
  integer intersection = 0;

  friend bool operator==(const SplitCertificate&, const SplitCertificate&) = default;
};

struct ConeParameters {
  integer a = 0;
  integer eta = 0;

  friend bool operator==(const ConeParameters&, const ConeParameters&) = default;
};

inline integer intersect(const DivisorClass& x, const DivisorClass& y) {
  detail::require(x.e == y.e, "intersect: classes live on different surfaces");
  using detail::wide;
  return detail::narrow(-wide{x.e} * x.a * y.a + wide{x.a} * y.b + wide{y.a} * x.b);
}

/// p_a(aC0 + bf) = (a-1)(2b - ae - 2)/2. The product is always even.
inline integer arith_genus(const DivisorClass& c) {
  detail::require(c.a >= 1, "arith_genus: a must be at least 1");
  using detail::wide;
  return detail::narrow((wide{c.a} - 1) * (2 * wide{c.b} - wide{c.a} * c.e - 2) / 2);
}

/// Sufficient criterion for |aC0 + bf| to contain a smooth irreducible
/// member, restricted to the families the degeneration argument uses.
inline bool smooth_irreducible_exists(const DivisorClass& c) {
  if (c.e < 0 || c.a < 0 || c.b < 0) return false;
  if (c.a == 0) return c.b == 1;
  if (c.a == 1) return true;
  if (c.e == 0) return c.b >= 1;
  return c.b >= c.a * c.e;
}

namespace detail {

inline bool valid_split(const DivisorClass& d1, const DivisorClass& d2) {
  return smooth_irreducible_exists(d1) && smooth_irreducible_exists(d2) &&
         intersect(d1, d2) >= 3;
}

inline std::optional<SplitCertificate> make_split(const DivisorClass& d1,
                                                  const DivisorClass& d2) {
  if (!valid_split(d1, d2)) return std::nullopt;
  return SplitCertificate{d1, d2, intersect(d1, d2)};
}

}  // namespace detail

/// Finds D = D1 + D2 with both parts smooth irreducible classes meeting in
/// at least three points. The constructive choices come first:
///   a = 2:            C0 + (C0 + bf)
///   a >= 3, b > ae:   (D - f) + f          (also e = 0)
///   a >= 3, b = ae:   (C0 + ef) + (a-1)(C0 + ef)
/// then an exhaustive search over 0 <= a1 <= a, 0 <= b1 <= b in
/// lexicographic order. Returns nullopt if nothing qualifies.
inline std::optional<SplitCertificate> find_stable_split(const DivisorClass& c) {
  detail::require(smooth_irreducible_exists(c),
                  "find_stable_split: class has no smooth irreducible member");
  detail::require(c.a >= 2, "find_stable_split: a must be at least 2");
  detail::require(arith_genus(c) >= 2,
                  "find_stable_split: genus below stability threshold");

  const DivisorClass fiber{0, 1, c.e};
  if (c.a == 2) {
    if (auto s = detail::make_split({1, 0, c.e}, {1, c.b, c.e})) return s;
  } else {
    if (c.e == 0 || c.b > c.a * c.e) {
      if (auto s = detail::make_split(c - fiber, fiber)) return s;
    }
    if (c.e > 0 && c.b == c.a * c.e) {
      const DivisorClass section{1, c.e, c.e};
      if (auto s = detail::make_split(section, {c.a - 1, (c.a - 1) * c.e, c.e}))
        return s;
    }
  }

  for (integer a1 = 0; a1 <= c.a; ++a1) {
    for (integer b1 = 0; b1 <= c.b; ++b1) {
      const DivisorClass d1{a1, b1, c.e};
      if (auto s = detail::make_split(d1, c - d1)) return s;
    }
  }
  return std::nullopt;
}

/// Writes d = a * base + eta with eta in {0, 1} and a >= 1.
inline ConeParameters cone_parameters(integer d, integer base) {
  detail::require(d >= 1, "cone_parameters: d must be positive");
  detail::require(base >= 2, "cone_parameters: base must be at least 2");
  const integer a = d / base;
  const integer eta = d % base;
  if (eta > 1 || a < 1)
    throw precondition_error("cone_parameters: d is not a*base + eta with eta in {0,1}");
  return {a, eta};
}

/// h^0 of a line bundle of degree `deg` on an elliptic curve.
constexpr integer elliptic_h0(integer deg, bool trivial) {
  if (deg >= 1) return deg;
  if (deg == 0 && trivial) return 1;
  return 0;
}

/// h^0(E, M + M(-1) + ... + M(-a)) where deg M(-i) = degM - i*r and the
/// indices in `trivial_indices` are those where M(-i) is trivial.
inline integer cone_pushforward_h0(integer a, integer deg_m, integer r,
                                   const std::set<integer>& trivial_indices) {
  detail::require(a >= 1, "cone_pushforward_h0: a must be at least 1");
  detail::require(r >= 3, "cone_pushforward_h0: r must be at least 3");
  using detail::wide;
  wide total = 0;
  for (integer i = 0; i <= a; ++i) {
    const integer deg = detail::narrow(wide{deg_m} - wide{i} * r);
    total += elliptic_h0(deg, trivial_indices.contains(i));
  }
  return detail::narrow(total);
}

}  // namespace rigidity
