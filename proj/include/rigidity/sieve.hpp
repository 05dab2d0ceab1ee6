#pragma once

// The rigidity-exclusion sieve. A component of H_{d,g,r} rigid in moduli
// would force, for alpha = dim|O_C(1)|, one of four dimension-count
// inequalities together with the Castelnuovo genus caps. `scan` enumerates
// every alpha and reports the configurations no inequality rules out.
//
// Everything here is exact: rational thresholds are compared by
// cross-multiplication, never in floating point.

#include <algorithm>
#include <concepts>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rigidity/bounds.hpp"

namespace rigidity {

/// Source of the Castelnuovo bounds used by the caps. Test fixtures plug in
/// deliberately corrupted bounds to check that the harness notices.
template <class B>
concept GenusBounds = requires(integer d, integer a) {
  { B::profile(d, a) } -> std::same_as<CastelnuovoProfile>;
  { B::max_genus(d, a) } -> std::same_as<integer>;
};

struct ExactBounds {
  static CastelnuovoProfile profile(integer d, integer alpha) {
    return castelnuovo_profile(d, alpha);
  }
  static integer max_genus(integer d, integer r) { return max_genus_pi(d, r); }
};

// Case1/Case2: d < g with dim W = 0 / dim W >= 1.
// Case3/Case4: d >= g with dim W = 0 / dim W >= 1.
enum class SieveCase { Case1, Case2, Case3, Case4 };

constexpr std::string_view to_string(SieveCase c) {
  switch (c) {
    case SieveCase::Case1: return "Case1";
    case SieveCase::Case2: return "Case2";
    case SieveCase::Case3: return "Case3";
    case SieveCase::Case4: return "Case4";
  }
  return "?";
}

constexpr bool dim_w_positive(SieveCase c) {
  return c == SieveCase::Case2 || c == SieveCase::Case4;
}

constexpr bool needs_d_below_g(SieveCase c) {
  return c == SieveCase::Case1 || c == SieveCase::Case2;
}

/// RHS - LHS of the case inequality; the case is feasible iff >= 0.
inline integer case_slack(SieveCase c, integer d, integer g, integer r, integer alpha) {
  detail::require(r >= 3 && alpha >= r, "case_slack: need alpha >= r >= 3");
  using detail::wide;
  switch (c) {
    case SieveCase::Case1:
    case SieveCase::Case3:
      return detail::narrow((wide{r} - 3) * g - (wide{r} + 1) * (wide{d} - alpha) + 3);
    case SieveCase::Case2:
      return detail::narrow((wide{r} - 3) * g - wide{r} * d + (wide{r} - 2) * alpha + 4);
    case SieveCase::Case4:
      return detail::narrow((wide{r} - 4) * g - (wide{r} - 1) * d + (wide{r} - 2) * alpha + 4);
  }
  return 0;
}

/// Upper bound on alpha in each case (Castelnuovo-type for dim W = 0,
/// Accola-Griffiths-Harris for dim W >= 1).
inline integer alpha_cap(SieveCase c, integer d, integer g) {
  detail::require(needs_d_below_g(c) == (d < g),
                  "alpha_cap: case does not match the sign of d - g");
  using detail::floor_div;
  using detail::wide;
  switch (c) {
    case SieveCase::Case1: return detail::narrow(floor_div(wide{d} + 1, 3));
    case SieveCase::Case2: return detail::narrow(floor_div(wide{d}, 3));
    case SieveCase::Case3: return detail::narrow(floor_div(2 * wide{d} - g + 1, 3));
    case SieveCase::Case4: return detail::narrow(floor_div(2 * wide{d} - g, 3));
  }
  return 0;
}

/// Genus caps a curve with no stable degeneration must satisfy in P^alpha:
/// g <= pi(d,alpha); g <= pi1 once d >= 2alpha+1; g <= pi2 and g < pi1
/// once alpha >= 8 and d >= 2alpha+3.
template <GenusBounds B = ExactBounds>
bool genus_caps_ok(integer d, integer g, integer alpha) {
  const CastelnuovoProfile p = B::profile(d, alpha);
  if (g > B::max_genus(d, alpha)) return false;
  if (d >= 2 * alpha + 1 && g > p.pi1) return false;
  if (alpha >= 8 && d >= 2 * alpha + 3 && !(g <= p.pi2 && g < p.pi1)) return false;
  return true;
}

struct SieveWitness {
  integer alpha = 0;
  SieveCase sieve_case = SieveCase::Case1;
  integer i = 0;  // d + 1 - 3 alpha
  integer j = 0;  // d - 3 alpha
  CastelnuovoProfile profile;
  integer slack = 0;

  friend bool operator==(const SieveWitness&, const SieveWitness&) = default;
};

enum class ExclusionReason { NonSpecial, NoAlpha, AllCasesInfeasible };

constexpr std::string_view to_string(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::NonSpecial: return "NonSpecial";
    case ExclusionReason::NoAlpha: return "NoAlpha";
    case ExclusionReason::AllCasesInfeasible: return "AllCasesInfeasible";
  }
  return "?";
}

struct Excluded {
  std::vector<ExclusionReason> reasons;
  friend bool operator==(const Excluded&, const Excluded&) = default;
};

template <class Witness>
struct Survivors {
  std::vector<Witness> witnesses;
  friend bool operator==(const Survivors&, const Survivors&) = default;
};

struct OutOfScope {
  std::string reason;
  friend bool operator==(const OutOfScope&, const OutOfScope&) = default;
};

template <class Witness>
using BasicVerdict = std::variant<Excluded, Survivors<Witness>, OutOfScope>;

using Verdict = BasicVerdict<SieveWitness>;

template <class Witness>
bool is_survivor(const BasicVerdict<Witness>& v) {
  return std::holds_alternative<Survivors<Witness>>(v);
}

template <class Witness>
const std::vector<Witness>& witnesses_of(const BasicVerdict<Witness>& v) {
  static const std::vector<Witness> none;
  if (const auto* s = std::get_if<Survivors<Witness>>(&v)) return s->witnesses;
  return none;
}

template <class Witness>
void witnesses_of(const BasicVerdict<Witness>&&) = delete;

struct ScanOptions {
  bool genus_caps = true;
};

/// Runs the sieve on (d, g, r) for r >= 4. Witnesses come out sorted by
/// (alpha, case).
template <GenusBounds B = ExactBounds>
Verdict scan(integer d, integer g, integer r, ScanOptions opts = {}) {
  detail::require(r >= 4, "scan: r must be at least 4 (use r3_sieve for r = 3)");
  detail::require(d >= 1, "scan: d must be positive");
  if (g == 0) return OutOfScope{"g = 0: rational curves are outside the theorem"};
  if (g == 1 || d > 2 * g - 2) return Excluded{{ExclusionReason::NonSpecial}};

  const integer top = embed_dim_cap(d, g);
  if (top < r) return Excluded{{ExclusionReason::NoAlpha}};

  const bool below = d < g;
  const SieveCase cases[2] = {below ? SieveCase::Case1 : SieveCase::Case3,
                              below ? SieveCase::Case2 : SieveCase::Case4};
  std::vector<SieveWitness> found;
  for (integer alpha = r; alpha <= top; ++alpha) {
    for (SieveCase c : cases) {
      if (alpha > alpha_cap(c, d, g)) continue;
      const integer slack = case_slack(c, d, g, r, alpha);
      if (slack < 0) continue;
      if (opts.genus_caps && !genus_caps_ok<B>(d, g, alpha)) continue;
      found.push_back({alpha, c, d + 1 - 3 * alpha, d - 3 * alpha,
                       B::profile(d, alpha), slack});
    }
  }
  if (found.empty()) return Excluded{{ExclusionReason::AllCasesInfeasible}};
  return Survivors<SieveWitness>{std::move(found)};
}

// ---------------------------------------------------------------------------
// Expanded inequalities obtained by substituting g < pi1 (resp. g <= pi2)
// into the Case1 / Case2 bounds. Values are doubled so the (r-3)/2 factor
// stays integral.

enum class DerivedInequality { Ineq7, Ineq8, Ineq9, Ineq10 };

constexpr std::string_view to_string(DerivedInequality w) {
  switch (w) {
    case DerivedInequality::Ineq7: return "Ineq7";
    case DerivedInequality::Ineq8: return "Ineq8";
    case DerivedInequality::Ineq9: return "Ineq9";
    case DerivedInequality::Ineq10: return "Ineq10";
  }
  return "?";
}

/// Ineq8 and Ineq10 are stated in terms of (m2, eps2, mu2); the others use
/// (m1, eps1, mu1).
constexpr bool uses_second_profile(DerivedInequality w) {
  return w == DerivedInequality::Ineq8 || w == DerivedInequality::Ineq10;
}

/// Ineq7 and Ineq9 are strict (> 0), Ineq8 and Ineq10 are not (>= 0).
constexpr bool derived_holds(DerivedInequality w, integer doubled_value) {
  return uses_second_profile(w) ? doubled_value >= 0 : doubled_value > 0;
}

constexpr integer mu1_for(integer alpha, integer eps) { return eps == alpha - 1 ? 1 : 0; }

constexpr integer mu2_for(integer alpha, integer eps) {
  if (eps == alpha) return 2;
  if (eps >= alpha - 2) return 1;
  return 0;
}

/// Degree recovered from (alpha, m, eps) under the convention of `w`.
constexpr integer derived_degree(DerivedInequality w, integer alpha, integer m, integer eps) {
  return uses_second_profile(w) ? m * (alpha + 1) + eps + 1 : m * alpha + eps + 1;
}

inline integer derived_slack(DerivedInequality w, integer r, integer alpha, integer m,
                             integer eps, integer mu) {
  detail::require(alpha >= 8, "derived_slack: alpha must be at least 8");
  detail::require(m >= 1, "derived_slack: m must be at least 1");
  if (uses_second_profile(w)) {
    detail::require(eps >= 0 && eps <= alpha && mu == mu2_for(alpha, eps),
                    "derived_slack: inconsistent (eps2, mu2)");
  } else {
    detail::require(eps >= 0 && eps <= alpha - 1 && mu == mu1_for(alpha, eps),
                    "derived_slack: inconsistent (eps1, mu1)");
  }
  using detail::wide;
  const wide R = r, A = alpha, M = m, E = eps, U = mu;
  switch (w) {
    case DerivedInequality::Ineq7:
      return detail::narrow(A * (M - 1) * ((R - 3) * M - 2 * R - 2) +
                            2 * (E + 1) * ((R - 3) * M - R - 1) + 6 + 2 * U * (R - 3));
    case DerivedInequality::Ineq8:
      return detail::narrow((A + 1) * (M - 1) * ((R - 3) * M - 2 * R - 2) +
                            2 * (E + 1) * ((R - 3) * M - R - 1) + 2 * (2 - R) +
                            2 * (M + U) * (R - 3));
    case DerivedInequality::Ineq9:
      return detail::narrow(2 * A * ((R - 3) * detail::choose2(M) - M * R + R - 2) +
                            2 * (E + 1) * ((R - 3) * M - R) + 8 + 2 * U * (R - 3));
    case DerivedInequality::Ineq10:
      return detail::narrow(2 * (A + 1) * ((R - 3) * detail::choose2(M) - M * R + R - 2) +
                            2 * (E + 1) * ((R - 3) * M - R) + 2 * (6 - R) +
                            2 * (M + U) * (R - 3));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Hypothesis ranges under which no component is rigid in moduli.

namespace detail {

/// The open half-plane d > (coef_g * g + constant) / den, den > 0.
struct Threshold {
  integer coef_g;
  integer constant;
  integer den;

  bool exceeded_by(integer d, integer g) const {
    return wide{den} * d > wide{coef_g} * g + constant;
  }
};

}  // namespace detail

struct Thm41Options {
  bool r9_exception = true;  // exclude (d,g) = (30,34) at r = 9
  bool r5_window = true;     // extra clause 3d > g + 22 for 101 <= d <= 113 at r = 5
};

/// The inequality part of the hypothesis, without the r = 5 window clause
/// or the r = 9 exceptional point. Downward closed in g for fixed (d, r).
inline bool range_thm41_base(integer d, integer g, integer r) {
  detail::require(r >= 4, "range_thm41: r must be at least 4");
  using T = detail::Threshold;
  auto over = [d, g](T t) { return t.exceeded_by(d, g); };
  switch (r) {
    case 4:
      return over({17, 72, 64}) || over({4, 15, 15}) ||
             (over({1, 18, 4}) && over({17, 44, 64}));
    case 5:
      return over({9, 20, 20}) || over({10, 17, 22}) ||
             (over({2, 25, 5}) && over({9, 10, 20}));
    case 6:
      return over({13, 20, 22}) || over({3, 3, 5}) ||
             (over({1, 10, 2}) && over({13, 10, 22})) ||
             (over({1, 10, 2}) && over({3, -1, 5}));
    case 7:
      return over({19, 24, 27}) || (over({4, 39, 7}) && over({76, 71, 108}));
    case 8:
      return over({4, 1, 5}) || over({5, -4, 6});
    case 9:
      return over({9, -5, 10}) || over({29, 3, 33});
    case 10:
      return over({21, -4, 22}) || over({17, 12, 18});
    case 11:
      return d > g;
    default:
      return over({2 * (r - 5), 14 - r, r + 1});
  }
}

inline bool range_thm41(integer d, integer g, integer r, Thm41Options opts = {}) {
  detail::require(g >= 1, "range_thm41: g must be positive");
  if (!range_thm41_base(d, g, r)) return false;
  if (r == 5 && opts.r5_window && d >= 101 && d <= 113 && !(3 * d > g + 22)) return false;
  if (r == 9 && opts.r9_exception && d == 30 && g == 34) return false;
  return true;
}

// ---------------------------------------------------------------------------
// r = 3.

enum class R3Branch { DimW0, DimWPositive };

constexpr std::string_view to_string(R3Branch b) {
  return b == R3Branch::DimW0 ? "dimW=0" : "dimW>=1";
}

struct R3Witness {
  integer alpha = 0;
  R3Branch branch = R3Branch::DimW0;
  integer slack = 0;  // (dim W + dim G(3,alpha) + dim PGL(4) + 22) - 4d

  friend bool operator==(const R3Witness&, const R3Witness&) = default;
};

using R3Verdict = BasicVerdict<R3Witness>;

/// Largest image dimension the r = 3 count assumes before deriving a
/// contradiction; anything surviving must have dim pi(Z) >= 23 or be one of
/// the low-degree exceptions.
inline constexpr integer kAssumedImageCap = 22;

/// Dimension count 4d <= dim W + 4 alpha + 25 on both dim W branches.
/// Requires g >= 5 and d <= g.
inline R3Verdict r3_sieve(integer d, integer g) {
  detail::require(g >= 5, "r3_sieve: g must be at least 5");
  detail::require(d >= 1 && d <= g, "r3_sieve: requires 1 <= d <= g");
  const integer lambda = euler_normal(CurveClass{d, g, 3});
  const integer top0 = (d + 1) / 3;
  const integer top1 = d / 3;
  if (top0 < 3) return Excluded{{ExclusionReason::NoAlpha}};

  std::vector<R3Witness> found;
  for (integer alpha = 3; alpha <= top0; ++alpha) {
    const BundleDims dims = bundle_dims(3, alpha);
    const integer base = dims.grassmann + dims.pgl + kAssumedImageCap;
    const integer slack0 = base - lambda;
    if (slack0 >= 0) found.push_back({alpha, R3Branch::DimW0, slack0});
    if (alpha <= top1) {
      const integer w = agh_cap(d, g, alpha);
      if (w >= 1 && w + base - lambda >= 0)
        found.push_back({alpha, R3Branch::DimWPositive, w + base - lambda});
    }
  }
  if (found.empty()) return Excluded{{ExclusionReason::AllCasesInfeasible}};
  return Survivors<R3Witness>{std::move(found)};
}

enum class R3Kind { Empty, Dominates, ExactImage, MinImageIfNonempty, OutOfScope };

struct R3Outcome {
  R3Kind kind = R3Kind::OutOfScope;
  integer image_dim = 0;  // meaningful for ExactImage and MinImageIfNonempty

  friend bool operator==(const R3Outcome&, const R3Outcome&) = default;
};

inline std::string to_string(const R3Outcome& o) {
  switch (o.kind) {
    case R3Kind::Empty: return "empty";
    case R3Kind::Dominates: return "dominates";
    case R3Kind::ExactImage: return "exact-image(" + std::to_string(o.image_dim) + ")";
    case R3Kind::MinImageIfNonempty:
      return "min-image-if-nonempty(" + std::to_string(o.image_dim) + ")";
    case R3Kind::OutOfScope: return "out-of-scope";
  }
  return "?";
}

/// What is known about the image in M_g of the components of H_{d,g,3}.
inline R3Outcome r3_classify(integer d, integer g) {
  detail::require(d >= 1, "r3_classify: d must be positive");
  if (g == 0) return {R3Kind::OutOfScope, 0};
  if (d < 3 || g > max_genus_pi(d, 3)) return {R3Kind::Empty, 0};
  if (d == g + 1 && g <= 5) return {R3Kind::Empty, 0};
  if (d == 9 && g == 11) return {R3Kind::Empty, 0};

  struct Row {
    integer d, g, dim;
  };
  static constexpr Row kExact[] = {{7, 6, 13}, {8, 7, 17}, {8, 8, 17}, {8, 9, 18},
                                   {9, 9, 21}, {9, 10, 21}, {9, 12, 23}};
  for (const Row& row : kExact)
    if (row.d == d && row.g == g) return {R3Kind::ExactImage, row.dim};

  if (d == g + 1 && g >= 8) return {R3Kind::Dominates, 0};
  if (d >= g + 3 || (d == g + 2 && g >= 5) || g <= 4) return {R3Kind::Dominates, 0};
  return {R3Kind::MinImageIfNonempty, kAssumedImageCap + 1};
}

}  // namespace rigidity
