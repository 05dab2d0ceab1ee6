#include <gtest/gtest.h>

#include <cstdlib>

#include "mutants.hpp"
#include "rigidity/verify.hpp"

using namespace rigidity;

namespace {

bool has_point(const VerificationReport& rep, integer d, integer g) {
  for (const auto& v : rep.violations) {
    integer vd = -1, vg = -1;
    for (const auto& [k, x] : v.values) {
      if (k == "d") vd = x;
      if (k == "g") vg = x;
    }
    if (vd == d && vg == g) return true;
  }
  return false;
}

integer value_of(const Violation& v, const std::string& key) {
  for (const auto& [k, x] : v.values)
    if (k == key) return x;
  return -1;
}

}  // namespace

TEST(SpotValues, ExactBoundsVerify) {
  const auto rep = verify_spot_values();
  EXPECT_TRUE(rep.verified());
  EXPECT_GT(rep.cases_checked, 2500);
}

TEST(SpotValues, MutantsAreCaught) {
  EXPECT_FALSE(verify_spot_values<mutants::PiOneOffByOne>().verified());
  EXPECT_FALSE(verify_spot_values<mutants::DroppedMuTwo>().verified());
}

TEST(Case34Never, HoldsForSmallR) {
  const auto rep = verify_case34_never(4, 10, 160);
  EXPECT_TRUE(rep.verified());
}

TEST(Case34Never, FailsAtR11) {
  const auto rep = verify_case34_never(11, 11, 200);
  EXPECT_FALSE(rep.verified());
  for (const auto& v : rep.violations) EXPECT_EQ(v.what, "Case3/4 witness");
}

TEST(Case34Never, EmptyUniverseIsVacuous) {
  const auto rep = verify_case34_never(4, 4, 0);
  EXPECT_TRUE(rep.verified());
  EXPECT_EQ(rep.cases_checked, 0);
}

TEST(Thm41, R9AndR4) {
  EXPECT_TRUE(verify_thm41(9, 500).verified());
  EXPECT_TRUE(verify_thm41(4, 200).verified());
}

TEST(Thm41, R9WithoutExceptionFindsExactlyOnePoint) {
  const auto rep = verify_thm41(9, 200, Thm41Options{false, true});
  ASSERT_EQ(rep.violations.size(), 1u);
  const auto& v = rep.violations[0];
  EXPECT_EQ(value_of(v, "d"), 30);
  EXPECT_EQ(value_of(v, "g"), 34);
  EXPECT_EQ(value_of(v, "alpha"), 9);
  EXPECT_EQ(value_of(v, "case"), 2);
  EXPECT_EQ(value_of(v, "slack"), 1);
}

TEST(Thm41, AllSmallR) {
  for (integer r = 4; r <= 20; ++r) EXPECT_TRUE(verify_thm41(r, 150).verified()) << r;
}

TEST(Thm41, MutantsAreCaught) {
  EXPECT_TRUE(has_point(verify_thm41<mutants::PiOneOffByOne>(7, 100), 25, 34));
  bool caught = false;
  for (integer r = 4; r <= 10 && !caught; ++r)
    caught = !verify_thm41<mutants::DroppedMuTwo>(r, 200).verified();
  EXPECT_TRUE(caught);
}

TEST(DerivedClaims, HoldForMostR) {
  for (integer r : {4, 6, 7, 8, 9}) EXPECT_TRUE(verify_derived_claims(r, 60).verified()) << r;
}

TEST(DerivedClaims, R5BoundaryFamily) {
  const auto rep = verify_derived_claims(5, 60);
  ASSERT_EQ(rep.violations.size(), 53u);
  for (const auto& v : rep.violations) {
    const integer alpha = value_of(v, "alpha");
    EXPECT_EQ(value_of(v, "m"), 5);
    EXPECT_EQ(value_of(v, "eps"), alpha - 1);
    EXPECT_EQ(value_of(v, "i"), 3 * alpha + 1);
    EXPECT_EQ(value_of(v, "d"), 6 * alpha);
  }
}

TEST(DerivedClaims, R10SingleTuple) {
  const auto rep = verify_derived_claims(10, 60);
  ASSERT_EQ(rep.violations.size(), 1u);
  const auto& v = rep.violations[0];
  EXPECT_EQ(value_of(v, "alpha"), 10);
  EXPECT_EQ(value_of(v, "m"), 2);
  EXPECT_EQ(value_of(v, "eps"), 9);
  EXPECT_EQ(value_of(v, "d"), 30);
  EXPECT_EQ(value_of(v, "j"), 0);
}

TEST(DerivedClaims, CounterexamplesFailTheirCompanionInequality) {
  for (integer r : {5, 10}) {
    const auto rep = verify_derived_claims(r, 60);
    bool found = false;
    for (const auto& n : rep.notes)
      found = found || n == "counterexamples surviving the joint case check: 0";
    EXPECT_TRUE(found) << r;
  }
}

TEST(DerivedClaims, R9SecondQuotientTwoOnlyAtThirtyThirtyFour) {
  const auto rep = verify_derived_claims(9, 60);
  bool found = false;
  for (const auto& n : rep.notes)
    found = found || n == "r = 9: Case2 configurations with m2 = 2 occur at (30,34)";
  EXPECT_TRUE(found);
}

TEST(DerivedClaims, RejectsUnsupportedR) {
  EXPECT_THROW(verify_derived_claims(3, 60), precondition_error);
  EXPECT_THROW(verify_derived_claims(11, 60), precondition_error);
  EXPECT_THROW(verify_derived_claims(5, 7), precondition_error);
}

TEST(RGe11, Sweeps) {
  EXPECT_TRUE(verify_r_ge_11(11, 160).verified());
  EXPECT_TRUE(verify_r_ge_11(12, 160).verified());
  EXPECT_TRUE(verify_r_ge_11(20, 120).verified());
  EXPECT_THROW(verify_r_ge_11(10, 100), precondition_error);
}

TEST(R5Window, PassesAndDiagnosticNeverFails) {
  EXPECT_TRUE(verify_r5_window().verified());
  EXPECT_TRUE(verify_r5_window(101, 120, true).verified());
  const auto empty = verify_r5_window(113, 101);
  EXPECT_TRUE(empty.verified());
  EXPECT_EQ(empty.cases_checked, 0);
}

TEST(ThmR3, FullSweep) {
  const auto rep = verify_thm_r3(200);
  EXPECT_TRUE(rep.verified());
  EXPECT_THROW(verify_thm_r3(9), precondition_error);
}

TEST(Splits, GridAndCanonical) {
  const auto rep = verify_splits();
  EXPECT_TRUE(rep.verified());
  EXPECT_THROW(verify_splits(SplitGrid{1, 10, 1}), precondition_error);
}

TEST(Reports, DeterministicAcrossWorkerCounts) {
  ::setenv("RIGIDITY_SIEVE_THREADS", "1", 1);
  const auto one = verify_case34_never(11, 12, 120);
  ::setenv("RIGIDITY_SIEVE_THREADS", "4", 1);
  const auto four = verify_case34_never(11, 12, 120);
  ::unsetenv("RIGIDITY_SIEVE_THREADS");
  EXPECT_EQ(one.violations, four.violations);
  EXPECT_EQ(one.cases_checked, four.cases_checked);
  EXPECT_EQ(one.notes, four.notes);
  EXPECT_FALSE(one.violations.empty());
}

TEST(Reports, WorkerCountFromEnvironment) {
  ::setenv("RIGIDITY_SIEVE_THREADS", "3", 1);
  EXPECT_EQ(detail::worker_count(), 3u);
  ::setenv("RIGIDITY_SIEVE_THREADS", "zero", 1);
  EXPECT_GE(detail::worker_count(), 1u);
  ::setenv("RIGIDITY_SIEVE_THREADS", "-2", 1);
  EXPECT_GE(detail::worker_count(), 1u);
  ::unsetenv("RIGIDITY_SIEVE_THREADS");
}

TEST(Reports, ParallelMapPropagatesExceptions) {
  ::setenv("RIGIDITY_SIEVE_THREADS", "2", 1);
  EXPECT_THROW(detail::parallel_map(0, 50,
                                    [](integer k) {
                                      if (k == 17) throw std::overflow_error("boom");
                                      return k;
                                    }),
               std::overflow_error);
  const auto squares = detail::parallel_map(1, 100, [](integer k) { return k * k; });
  ::unsetenv("RIGIDITY_SIEVE_THREADS");
  for (integer k = 1; k <= 100; ++k) EXPECT_EQ(squares[k - 1], k * k);
}
