#pragma once

// Numerical invariants of Hilbert schemes of smooth curves in projective
// space: Brill-Noether number, normal-bundle Euler characteristic,
// Castelnuovo bounds, Accola-Griffiths-Harris cap and friends.
//
// Every function is pure and works over exact integers. Inputs are int64;
// intermediate products are formed in 128 bits and narrowed with a range
// check, so no function silently wraps.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigidity {

using integer = std::int64_t;

/// Thrown when an operation is called outside its domain.
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

using wide = __int128;

inline integer narrow(wide v) {
  if (v > std::numeric_limits<integer>::max() ||
      v < std::numeric_limits<integer>::min())
    throw std::overflow_error("result does not fit in a 64-bit integer");
  return static_cast<integer>(v);
}

/// Floor division for a positive divisor.
constexpr wide floor_div(wide num, wide den) {
  wide q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

constexpr wide choose2(wide n) { return n * (n - 1) / 2; }

inline void require(bool ok, const char* what) {
  if (!ok) throw precondition_error(what);
}

/// Largest s with s*s <= n, for n >= 0.
inline wide isqrt(wide n) {
  if (n < 2) return n;
  // Newton iteration from an upper bound.
  wide x = n;
  wide y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

}  // namespace detail

/// Degree, genus and ambient dimension of a family of smooth curves.
struct CurveClass {
  integer d = 1;
  integer g = 0;
  integer r = 3;

  /// Validating constructor: d >= 1, g >= 0, r >= 3.
  static CurveClass checked(integer d, integer g, integer r) {
    detail::require(d >= 1, "CurveClass: degree must be positive");
    detail::require(g >= 0, "CurveClass: genus must be non-negative");
    detail::require(r >= 3, "CurveClass: ambient dimension must be at least 3");
    return CurveClass{d, g, r};
  }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// Quotients, remainders and corrections behind the second and third
/// Castelnuovo bounds pi1(d, alpha), pi2(d, alpha).
struct CastelnuovoProfile {
  integer alpha = 0;
  integer m1 = 0;
  integer eps1 = 0;
  integer mu1 = 0;
  integer pi1 = 0;
  integer m2 = 0;
  integer eps2 = 0;
  integer mu2 = 0;
  integer pi2 = 0;

  friend bool operator==(const CastelnuovoProfile&,
                         const CastelnuovoProfile&) = default;
};

/// rho(d,g,r) = g - (r+1)(g-d+r). May be negative.
inline integer brill_noether(const CurveClass& c) {
  using detail::wide;
  return detail::narrow(wide{c.g} -
                        (wide{c.r} + 1) * (wide{c.g} - c.d + c.r));
}

/// lambda(d,g,r) = chi(N_C) = (r+1)d - (r-3)(g-1); equals 4d when r = 3.
inline integer euler_normal(const CurveClass& c) {
  using detail::wide;
  return detail::narrow((wide{c.r} + 1) * c.d - (wide{c.r} - 3) * (wide{c.g} - 1));
}

/// Castelnuovo's bound pi(d,r) on the arithmetic genus of a nondegenerate
/// irreducible curve of degree d in P^r.
inline integer max_genus_pi(integer d, integer r) {
  detail::require(r >= 2, "max_genus_pi: r must be at least 2");
  detail::require(d >= r, "max_genus_pi: d must be at least r");
  using detail::wide;
  const wide m = (wide{d} - 1) / (r - 1);
  const wide eps = wide{d} - 1 - m * (r - 1);
  return detail::narrow(detail::choose2(m) * (r - 1) + m * eps);
}

inline CastelnuovoProfile castelnuovo_profile(integer d, integer alpha) {
  detail::require(alpha >= 3, "castelnuovo_profile: alpha must be at least 3");
  detail::require(d >= alpha + 2, "castelnuovo_profile: d must be at least alpha + 2");
  using detail::wide;
  CastelnuovoProfile p;
  p.alpha = alpha;

  const wide m1 = (wide{d} - 1) / alpha;
  const wide eps1 = wide{d} - 1 - m1 * alpha;
  const wide mu1 = (eps1 == wide{alpha} - 1) ? 1 : 0;
  p.m1 = detail::narrow(m1);
  p.eps1 = detail::narrow(eps1);
  p.mu1 = detail::narrow(mu1);
  p.pi1 = detail::narrow(detail::choose2(m1) * alpha + m1 * (eps1 + 1) + mu1);

  const wide m2 = (wide{d} - 1) / (wide{alpha} + 1);
  const wide eps2 = wide{d} - 1 - m2 * (wide{alpha} + 1);
  wide mu2 = 0;
  if (eps2 == alpha)
    mu2 = 2;
  else if (eps2 >= wide{alpha} - 2)
    mu2 = 1;
  p.m2 = detail::narrow(m2);
  p.eps2 = detail::narrow(eps2);
  p.mu2 = detail::narrow(mu2);
  p.pi2 = detail::narrow(detail::choose2(m2) * (wide{alpha} + 1) +
                         m2 * (eps2 + 2) + mu2);
  return p;
}

/// Accola-Griffiths-Harris upper bound on dim W^r_d(C) for a birationally
/// very ample special g^r_d, where `series_dim` is that r. A value <= 0
/// means a positive-dimensional W is impossible.
inline integer agh_cap(integer d, integer g, integer series_dim) {
  using detail::wide;
  if (d <= g) return detail::narrow(wide{d} - 3 * wide{series_dim} + 1);
  return detail::narrow(2 * wide{d} - 3 * wide{series_dim} - g + 1);
}

/// Largest r admitting a smooth nondegenerate model of degree d, genus g.
inline integer embed_dim_cap(integer d, integer g) {
  using detail::wide;
  if (d <= g) return detail::narrow(detail::floor_div(wide{d} + 1, 3));
  return detail::narrow(detail::floor_div(2 * wide{d} - g + 1, 3));
}

struct QuadricType {
  integer a = 0;
  integer b = 0;
  friend bool operator==(const QuadricType&, const QuadricType&) = default;
};

/// Bidegrees (a,b), a >= b >= 0, of a curve of degree d and genus g on a
/// smooth quadric: a + b = d and (a-1)(b-1) = g. At most one pair exists;
/// solved through the discriminant of x^2 - (d-2)x + g.
inline std::vector<QuadricType> quadric_types(integer d, integer g) {
  using detail::wide;
  std::vector<QuadricType> out;
  const wide s = wide{d} - 2;  // (a-1) + (b-1)
  const wide disc = s * s - 4 * wide{g};
  if (disc < 0) return out;
  const wide root = detail::isqrt(disc);
  if (root * root != disc || ((s + root) % 2) != 0) return out;
  const wide a = (s + root) / 2 + 1;
  const wide b = (s - root) / 2 + 1;
  if (b < 0) return out;
  out.push_back({detail::narrow(a), detail::narrow(b)});
  return out;
}

/// dim pi(Z) = 4d - 15 + h^1(N_C) for r = 3; h^1(N_C) is supplied.
inline integer image_dim_r3(integer d, integer h1_normal) {
  detail::require(h1_normal >= 0, "image_dim_r3: h1 must be non-negative");
  using detail::wide;
  return detail::narrow(4 * wide{d} - 15 + h1_normal);
}

/// dim M^1_{g,k}, the locus of k-gonal curves: 2g + 2k - 5.
inline integer gonality_locus_dim(integer g, integer k) {
  detail::require(g >= 2, "gonality_locus_dim: g must be at least 2");
  detail::require(k >= 2, "gonality_locus_dim: k must be at least 2");
  using detail::wide;
  detail::require(2 * wide{k} <= wide{g} + 3,
                  "gonality_locus_dim: k exceeds (g+3)/2");
  return detail::narrow(2 * wide{g} + 2 * wide{k} - 5);
}

struct BundleDims {
  integer grassmann = 0;  // dim G(r, alpha)
  integer pgl = 0;        // dim PGL(r+1)
  friend bool operator==(const BundleDims&, const BundleDims&) = default;
};

inline BundleDims bundle_dims(integer r, integer alpha) {
  detail::require(r >= 3, "bundle_dims: r must be at least 3");
  detail::require(alpha >= r, "bundle_dims: alpha must be at least r");
  using detail::wide;
  return {detail::narrow((wide{r} + 1) * (wide{alpha} - r)),
          detail::narrow(wide{r} * r + 2 * wide{r})};
}

}  // namespace rigidity
