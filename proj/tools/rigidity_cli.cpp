// rigidity: query invariants, sweep grids, run verification suites and
// produce stable-split certificates.
//
// Exit codes: 0 success / verified, 1 violations or no certificate,
// 2 usage error or arithmetic overflow.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rigidity/report.hpp"
#include "rigidity/surfaces.hpp"
#include "rigidity/verify.hpp"

namespace {

using namespace rigidity;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

/// Exhaustive scans above this many alpha values are refused.
constexpr integer kMaxAlphaSpan = 100'000'000;

std::string tuple_text(const DivisorClass& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.e) + ")";
}

template <class W>
void print_verdict_text(std::ostream& os, const BasicVerdict<W>& v) {
  std::visit(
      [&os](const auto& alt) {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, Excluded>) {
          os << "verdict: Excluded(";
          for (std::size_t k = 0; k < alt.reasons.size(); ++k)
            os << (k ? ", " : "") << to_string(alt.reasons[k]);
          os << ")\n";
        } else if constexpr (std::is_same_v<T, OutOfScope>) {
          os << "verdict: OutOfScope(" << alt.reason << ")\n";
        } else {
          os << "verdict: Survivors (" << alt.witnesses.size() << " witness"
             << (alt.witnesses.size() == 1 ? "" : "es") << ")\n";
          for (const auto& w : alt.witnesses) {
            if constexpr (std::is_same_v<W, SieveWitness>)
              os << "  alpha=" << w.alpha << " " << to_string(w.sieve_case) << " i=" << w.i
                 << " j=" << w.j << " slack=" << w.slack << " pi1=" << w.profile.pi1
                 << " pi2=" << w.profile.pi2 << "\n";
            else
              os << "  alpha=" << w.alpha << " " << to_string(w.branch) << " slack=" << w.slack
                 << "\n";
          }
        }
      },
      v);
}

void print_query_text(std::ostream& os, const QueryReport& q) {
  auto opt = [](const std::optional<integer>& v) { return v ? std::to_string(*v) : "n/a"; };
  os << "d=" << q.input.d << " g=" << q.input.g << " r=" << q.input.r << "\n";
  os << "rho=" << q.invariants.rho << " lambda=" << q.invariants.lambda
     << " pi=" << opt(q.invariants.pi) << " pi1=" << opt(q.invariants.pi1)
     << " pi2=" << opt(q.invariants.pi2) << " embed_cap=" << q.invariants.embed_cap << "\n";
  std::visit([&os](const auto& v) { print_verdict_text(os, v); }, q.verdict);
  if (q.range_thm41) os << "range_thm41: " << (*q.range_thm41 ? "true" : "false") << "\n";
  if (q.r3_outcome) os << "r3_outcome: " << to_string(*q.r3_outcome) << "\n";
}

void print_report_text(std::ostream& os, const VerificationReport& r, bool timing) {
  os << "[" << (r.verified() ? "VERIFIED" : "VIOLATED") << "] " << r.claim_id << " ("
     << r.universe << "): " << r.violations.size() << " violation(s), " << r.cases_checked
     << " case(s) checked";
  if (timing) os << ", " << r.elapsed.count() << " s";
  os << "\n";
  constexpr std::size_t kShown = 20;
  for (std::size_t k = 0; k < r.violations.size() && k < kShown; ++k) {
    const auto& v = r.violations[k];
    os << "  violation: " << v.what;
    for (const auto& [name, x] : v.values) os << " " << name << "=" << x;
    os << "\n";
  }
  if (r.violations.size() > kShown)
    os << "  ... " << (r.violations.size() - kShown) << " more\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

struct VerifyArgs {
  std::string suite;
  std::vector<integer> rs;
  integer d_max = -1;
  integer alpha_max = 60;
  integer r_lo = 4;
  integer r_hi = 10;
  integer d_lo = 101;
  integer d_hi = 113;
  bool no_exception = false;
  bool diagnostic = false;
  SplitGrid grid;
  std::string format = "text";
  bool timing = false;
};

std::vector<integer> span(integer lo, integer hi) {
  std::vector<integer> out;
  for (integer r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const VerifyArgs& a) {
  std::vector<VerificationReport> out;
  auto d_max_or = [&a](integer fallback) { return a.d_max >= 0 ? a.d_max : fallback; };
  if (suite == "spots") {
    out.push_back(verify_spot_values());
  } else if (suite == "r3") {
    out.push_back(verify_thm_r3(d_max_or(200)));
  } else if (suite == "thm41") {
    Thm41Options opts;
    opts.r9_exception = !a.no_exception;
    for (integer r : a.rs.empty() ? span(4, 20) : a.rs)
      out.push_back(verify_thm41(r, d_max_or(500), opts));
  } else if (suite == "derived") {
    for (integer r : a.rs.empty() ? span(4, 10) : a.rs)
      out.push_back(verify_derived_claims(r, a.alpha_max));
  } else if (suite == "case34") {
    out.push_back(verify_case34_never(a.r_lo, a.r_hi, d_max_or(400)));
  } else if (suite == "r11") {
    for (integer r : a.rs.empty() ? span(11, 20) : a.rs)
      out.push_back(verify_r_ge_11(r, d_max_or(300)));
  } else if (suite == "r5window") {
    out.push_back(verify_r5_window(a.d_lo, a.d_hi, a.diagnostic));
  } else if (suite == "splits") {
    out.push_back(verify_splits(a.grid));
  } else if (suite == "all") {
    for (const char* s : {"spots", "r3", "thm41", "derived", "case34", "r11", "r5window", "splits"}) {
      VerifyArgs defaults;
      defaults.no_exception = a.no_exception;
      for (auto& rep : run_suite(s, defaults)) out.push_back(std::move(rep));
    }
  }
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  const auto reports = run_suite(a.suite, a);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.verified();
  if (a.format == "json") {
    std::cout << verification_document(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(std::cout, r, a.timing);
    std::cout << (ok ? "all claims verified" : "violations found") << "\n";
  }
  return ok ? kOk : kViolations;
}

int cmd_query(integer d, integer g, integer r, const std::string& format) {
  const CurveClass c = CurveClass::checked(d, g, r);
  if (r >= 4 && g >= 2 && d <= 2 * g - 2 && embed_dim_cap(d, g) - r > kMaxAlphaSpan)
    throw precondition_error("query: alpha range too large for an exhaustive scan");
  const QueryReport q = run_query(c);
  if (format == "json")
    std::cout << to_json(q).dump(2) << "\n";
  else
    print_query_text(std::cout, q);
  return kOk;
}

int cmd_sweep(const SweepOptions& opts, const std::string& format) {
  const auto rows = run_sweep(opts);
  if (format == "json")
    std::cout << sweep_document(opts, rows).dump(2) << "\n";
  else
    write_csv(std::cout, rows);
  return kOk;
}

int cmd_split(integer a, integer b, integer e, const std::string& format) {
  if (e < 0 || a < 0) throw precondition_error("split: need a >= 0 and e >= 0");
  const DivisorClass c{a, b, e};
  std::string problem;
  if (!smooth_irreducible_exists(c))
    problem = "class " + tuple_text(c) + " has no smooth irreducible member";
  else if (a < 2)
    problem = "a = " + std::to_string(a) + " is below 2; the class is rational";
  else if (const integer genus = arith_genus(c); genus < 2)
    problem = "genus " + std::to_string(genus) + " below stability threshold";

  std::optional<SplitCertificate> cert;
  if (problem.empty()) {
    cert = find_stable_split(c);
    if (!cert) problem = "no split with intersection >= 3 exists in the searched range";
  }
  if (format == "json") {
    json j = {{"schema", kSchema}, {"kind", "split"}, {"class", {{"a", a}, {"b", b}, {"e", e}}}};
    if (cert) {
      j["certificate"] = {{"d1", {{"a", cert->d1.a}, {"b", cert->d1.b}, {"e", cert->d1.e}}},
                          {"d2", {{"a", cert->d2.a}, {"b", cert->d2.b}, {"e", cert->d2.e}}},
                          {"intersection", cert->intersection}};
    } else {
      j["certificate"] = nullptr;
      j["diagnostic"] = problem;
    }
    std::cout << j.dump(2) << "\n";
  } else if (cert) {
    std::cout << "(" << tuple_text(cert->d1) << "," << tuple_text(cert->d2)
              << "), intersection " << cert->intersection << "\n";
  } else {
    std::cout << "no certificate: " << problem << "\n";
  }
  return cert ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and rigidity-exclusion sieve for Hilbert schemes of curves"};
  app.require_subcommand(1);

  integer qd = 0, qg = 0, qr = 0;
  std::string qformat = "text";
  auto* query = app.add_subcommand("query", "Invariant panel and sieve verdict for (d, g, r)");
  query->add_option("--d", qd, "degree")->required();
  query->add_option("--g", qg, "genus")->required();
  query->add_option("--r", qr, "ambient dimension")->required();
  query->add_option("--format", qformat)->check(CLI::IsMember({"text", "json"}));

  SweepOptions sweep_opts;
  std::string sformat = "csv";
  auto* sweep = app.add_subcommand("sweep", "Sieve every (d, g) with d <= d-max, g <= pi(d, r)");
  sweep->add_option("--r", sweep_opts.r, "ambient dimension")->required();
  sweep->add_option("--d-max", sweep_opts.d_max, "largest degree")->check(CLI::NonNegativeNumber);
  sweep->add_flag("--in-range-only", sweep_opts.in_range_only,
                  "only rows inside the hypothesis range");
  sweep->add_option("--format", sformat)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", va.suite)
      ->required()
      ->check(CLI::IsMember(
          {"spots", "r3", "thm41", "derived", "case34", "r11", "r5window", "splits", "all"}));
  verify->add_option("--r", va.rs, "ambient dimension(s) for thm41, derived, r11");
  verify->add_option("--d-max", va.d_max, "largest degree")->check(CLI::NonNegativeNumber);
  verify->add_option("--alpha-max", va.alpha_max, "largest alpha for derived");
  verify->add_option("--r-lo", va.r_lo, "case34 lower r");
  verify->add_option("--r-hi", va.r_hi, "case34 upper r");
  verify->add_option("--d-lo", va.d_lo, "r5window lower degree");
  verify->add_option("--d-hi", va.d_hi, "r5window upper degree");
  verify->add_flag("--no-exception", va.no_exception, "thm41: drop the (30,34) exception at r = 9");
  verify->add_flag("--diagnostic", va.diagnostic, "r5window: list survivors, never fail");
  verify->add_option("--a-max", va.grid.a_max, "splits grid bound on a");
  verify->add_option("--b-max", va.grid.b_max, "splits grid bound on b");
  verify->add_option("--e-max", va.grid.e_max, "splits grid bound on e");
  verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", va.timing, "print elapsed time per report (text format)");

  integer sa = 0, sb = 0, se = 0;
  std::string spformat = "text";
  auto* split = app.add_subcommand("split", "Stable-split certificate for aC0 + bf on X_e");
  split->add_option("--a", sa)->required();
  split->add_option("--b", sb)->required();
  split->add_option("--e", se)->required();
  split->add_option("--format", spformat)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*query) return cmd_query(qd, qg, qr, qformat);
    if (*sweep) return cmd_sweep(sweep_opts, sformat);
    if (*verify) return cmd_verify(va);
    if (*split) return cmd_split(sa, sb, se, spformat);
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
