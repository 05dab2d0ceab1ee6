#pragma once

// Query panels, sweep rows and their JSON / CSV encodings.
// JSON documents carry "schema": "rigidity-sieve/1". Data payloads are
// deterministic; wall-clock timings appear only under "metadata".

#include <array>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rigidity/bounds.hpp"
#include "rigidity/sieve.hpp"
#include "rigidity/verify.hpp"

namespace rigidity {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "rigidity-sieve/1";

class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvariantPanel {
  integer rho = 0;
  integer lambda = 0;
  std::optional<integer> pi;   // d >= r
  std::optional<integer> pi1;  // at alpha = r, d >= r + 2
  std::optional<integer> pi2;
  integer embed_cap = 0;

  friend bool operator==(const InvariantPanel&, const InvariantPanel&) = default;
};

using AnyVerdict = std::variant<Verdict, R3Verdict>;

struct QueryReport {
  CurveClass input;
  InvariantPanel invariants;
  AnyVerdict verdict;
  std::optional<bool> range_thm41;     // r >= 4
  std::optional<R3Outcome> r3_outcome;  // r = 3

  friend bool operator==(const QueryReport&, const QueryReport&) = default;
};

inline QueryReport run_query(const CurveClass& c) {
  const CurveClass cc = CurveClass::checked(c.d, c.g, c.r);
  QueryReport q;
  q.input = cc;
  q.invariants.rho = brill_noether(cc);
  q.invariants.lambda = euler_normal(cc);
  if (cc.d >= cc.r) q.invariants.pi = max_genus_pi(cc.d, cc.r);
  if (cc.d >= cc.r + 2) {
    const CastelnuovoProfile p = castelnuovo_profile(cc.d, cc.r);
    q.invariants.pi1 = p.pi1;
    q.invariants.pi2 = p.pi2;
  }
  q.invariants.embed_cap = embed_dim_cap(cc.d, cc.g);

  if (cc.r == 3) {
    if (cc.g >= 5 && cc.d <= cc.g)
      q.verdict = r3_sieve(cc.d, cc.g);
    else
      q.verdict = R3Verdict{OutOfScope{"r = 3 sieve applies to g >= 5 and d <= g"}};
    q.r3_outcome = r3_classify(cc.d, cc.g);
  } else {
    q.verdict = scan(cc.d, cc.g, cc.r);
    if (cc.g >= 1) q.range_thm41 = range_thm41(cc.d, cc.g, cc.r);
  }
  return q;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

template <class E, std::size_t N>
E enum_from(const std::string& s, const std::array<E, N>& all) {
  for (E e : all)
    if (to_string(e) == s) return e;
  throw format_error("unknown label: " + s);
}

inline const std::array<SieveCase, 4> kAllCases = {SieveCase::Case1, SieveCase::Case2,
                                                   SieveCase::Case3, SieveCase::Case4};
inline const std::array<ExclusionReason, 3> kAllReasons = {
    ExclusionReason::NonSpecial, ExclusionReason::NoAlpha, ExclusionReason::AllCasesInfeasible};
inline const std::array<R3Branch, 2> kAllBranches = {R3Branch::DimW0, R3Branch::DimWPositive};

inline json optional_int(const std::optional<integer>& v) {
  return v ? json(*v) : json(nullptr);
}

inline std::optional<integer> optional_int_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<integer>();
}

}  // namespace detail

inline json to_json(const CastelnuovoProfile& p) {
  return {{"alpha", p.alpha}, {"m1", p.m1},     {"eps1", p.eps1}, {"mu1", p.mu1}, {"pi1", p.pi1},
          {"m2", p.m2},       {"eps2", p.eps2}, {"mu2", p.mu2},   {"pi2", p.pi2}};
}

inline CastelnuovoProfile profile_from_json(const json& j) {
  return {j.at("alpha").get<integer>(), j.at("m1").get<integer>(), j.at("eps1").get<integer>(),
          j.at("mu1").get<integer>(),   j.at("pi1").get<integer>(), j.at("m2").get<integer>(),
          j.at("eps2").get<integer>(),  j.at("mu2").get<integer>(), j.at("pi2").get<integer>()};
}

inline json to_json(const SieveWitness& w) {
  return {{"alpha", w.alpha}, {"case", std::string(to_string(w.sieve_case))},
          {"i", w.i},         {"j", w.j},
          {"slack", w.slack}, {"profile", to_json(w.profile)}};
}

inline json to_json(const R3Witness& w) {
  return {{"alpha", w.alpha}, {"branch", std::string(to_string(w.branch))}, {"slack", w.slack}};
}

inline SieveWitness sieve_witness_from_json(const json& j) {
  return {j.at("alpha").get<integer>(),
          detail::enum_from(j.at("case").get<std::string>(), detail::kAllCases),
          j.at("i").get<integer>(),
          j.at("j").get<integer>(),
          profile_from_json(j.at("profile")),
          j.at("slack").get<integer>()};
}

inline R3Witness r3_witness_from_json(const json& j) {
  return {j.at("alpha").get<integer>(),
          detail::enum_from(j.at("branch").get<std::string>(), detail::kAllBranches),
          j.at("slack").get<integer>()};
}

template <class W>
json to_json(const BasicVerdict<W>& v) {
  return std::visit(
      [](const auto& alt) -> json {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, Excluded>) {
          json reasons = json::array();
          for (auto r : alt.reasons) reasons.push_back(std::string(to_string(r)));
          return {{"outcome", "Excluded"}, {"reasons", reasons}};
        } else if constexpr (std::is_same_v<T, OutOfScope>) {
          return {{"outcome", "OutOfScope"}, {"reason", alt.reason}};
        } else {
          json ws = json::array();
          for (const auto& w : alt.witnesses) ws.push_back(to_json(w));
          return {{"outcome", "Survivors"}, {"witnesses", ws}};
        }
      },
      v);
}

template <class W, class Parse>
BasicVerdict<W> verdict_from_json(const json& j, Parse parse_witness) {
  const std::string outcome = j.at("outcome").get<std::string>();
  if (outcome == "Excluded") {
    Excluded e;
    for (const auto& r : j.at("reasons"))
      e.reasons.push_back(detail::enum_from(r.get<std::string>(), detail::kAllReasons));
    return e;
  }
  if (outcome == "OutOfScope") return OutOfScope{j.at("reason").get<std::string>()};
  if (outcome == "Survivors") {
    Survivors<W> s;
    for (const auto& w : j.at("witnesses")) s.witnesses.push_back(parse_witness(w));
    return s;
  }
  throw format_error("unknown verdict outcome: " + outcome);
}

inline json to_json(const R3Outcome& o) {
  static const char* names[] = {"Empty", "Dominates", "ExactImage", "MinImageIfNonempty",
                                "OutOfScope"};
  json j = {{"kind", names[static_cast<int>(o.kind)]}};
  if (o.kind == R3Kind::ExactImage || o.kind == R3Kind::MinImageIfNonempty)
    j["image_dim"] = o.image_dim;
  j["label"] = to_string(o);
  return j;
}

inline R3Outcome r3_outcome_from_json(const json& j) {
  static const std::pair<const char*, R3Kind> names[] = {
      {"Empty", R3Kind::Empty},
      {"Dominates", R3Kind::Dominates},
      {"ExactImage", R3Kind::ExactImage},
      {"MinImageIfNonempty", R3Kind::MinImageIfNonempty},
      {"OutOfScope", R3Kind::OutOfScope}};
  const std::string kind = j.at("kind").get<std::string>();
  for (const auto& [name, k] : names) {
    if (kind != name) continue;
    R3Outcome o{k, 0};
    if (j.contains("image_dim")) o.image_dim = j.at("image_dim").get<integer>();
    return o;
  }
  throw format_error("unknown r = 3 outcome: " + kind);
}

inline json to_json(const QueryReport& q) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "query";
  j["input"] = {{"d", q.input.d}, {"g", q.input.g}, {"r", q.input.r}};
  j["invariants"] = {{"rho", q.invariants.rho},
                     {"lambda", q.invariants.lambda},
                     {"pi", detail::optional_int(q.invariants.pi)},
                     {"pi1", detail::optional_int(q.invariants.pi1)},
                     {"pi2", detail::optional_int(q.invariants.pi2)},
                     {"embed_cap", q.invariants.embed_cap}};
  j["verdict"] = std::visit([](const auto& v) { return to_json(v); }, q.verdict);
  j["range_thm41"] = q.range_thm41 ? json(*q.range_thm41) : json(nullptr);
  j["r3_outcome"] = q.r3_outcome ? to_json(*q.r3_outcome) : json(nullptr);
  return j;
}

inline QueryReport query_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kSchema) throw format_error("unsupported schema");
  QueryReport q;
  const json& in = j.at("input");
  q.input = {in.at("d").get<integer>(), in.at("g").get<integer>(), in.at("r").get<integer>()};
  const json& inv = j.at("invariants");
  q.invariants.rho = inv.at("rho").get<integer>();
  q.invariants.lambda = inv.at("lambda").get<integer>();
  q.invariants.pi = detail::optional_int_from(inv.at("pi"));
  q.invariants.pi1 = detail::optional_int_from(inv.at("pi1"));
  q.invariants.pi2 = detail::optional_int_from(inv.at("pi2"));
  q.invariants.embed_cap = inv.at("embed_cap").get<integer>();
  if (q.input.r == 3)
    q.verdict = verdict_from_json<R3Witness>(j.at("verdict"), r3_witness_from_json);
  else
    q.verdict = verdict_from_json<SieveWitness>(j.at("verdict"), sieve_witness_from_json);
  if (!j.at("range_thm41").is_null()) q.range_thm41 = j.at("range_thm41").get<bool>();
  if (!j.at("r3_outcome").is_null()) q.r3_outcome = r3_outcome_from_json(j.at("r3_outcome"));
  return q;
}

inline json to_json(const Violation& v) {
  json values = json::object();
  for (const auto& [k, x] : v.values) values[k] = x;
  return {{"what", v.what}, {"values", values}};
}

inline json to_json(const VerificationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"claim_id", r.claim_id},   {"universe", r.universe},
          {"verified", r.verified()}, {"cases_checked", r.cases_checked},
          {"violations", violations}, {"notes", r.notes}};
}

inline json verification_document(const std::vector<VerificationReport>& reports) {
  json list = json::array();
  json timings = json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    all = all && r.verified();
    timings.push_back({{"claim_id", r.claim_id}, {"seconds", r.elapsed.count()}});
  }
  return {{"schema", kSchema},
          {"kind", "verify"},
          {"verified", all},
          {"reports", list},
          {"metadata", {{"elapsed_seconds", timings}}}};
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepRow {
  integer d = 0;
  integer g = 0;
  integer r = 0;
  std::string verdict;  // excluded | survivor | out-of-scope, or the r = 3 label
  integer witnesses = 0;
  std::vector<integer> alpha_list;  // distinct, increasing
  std::optional<bool> in_range;     // r >= 4 only

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

namespace detail {

template <class W>
std::vector<integer> distinct_alphas(const std::vector<W>& ws) {
  std::vector<integer> out;
  for (const auto& w : ws)
    if (out.empty() || out.back() != w.alpha) out.push_back(w.alpha);
  return out;
}

template <class W>
std::string verdict_label(const BasicVerdict<W>& v) {
  if (std::holds_alternative<Excluded>(v)) return "excluded";
  if (std::holds_alternative<OutOfScope>(v)) return "out-of-scope";
  return "survivor";
}

}  // namespace detail

inline SweepRow sweep_row(integer d, integer g, integer r) {
  SweepRow row{d, g, r, {}, 0, {}, std::nullopt};
  if (r == 3) {
    row.verdict = to_string(r3_classify(d, g));
    if (g >= 5 && d <= g) {
      const R3Verdict v = r3_sieve(d, g);
      const auto& ws = witnesses_of(v);
      row.witnesses = static_cast<integer>(ws.size());
      row.alpha_list = detail::distinct_alphas(ws);
    }
    return row;
  }
  const Verdict v = scan(d, g, r);
  row.verdict = detail::verdict_label(v);
  row.witnesses = static_cast<integer>(witnesses_of(v).size());
  row.alpha_list = detail::distinct_alphas(witnesses_of(v));
  row.in_range = range_thm41(d, g, r);
  return row;
}

struct SweepOptions {
  integer r = 4;
  integer d_max = 500;
  bool in_range_only = false;
};

/// Rows for d in [max(r, 1), d_max], g in [1, pi(d, r)], ordered by (d, g).
inline std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
  detail::require(opts.r >= 3, "sweep: r must be at least 3");
  detail::require(!(opts.in_range_only && opts.r == 3),
                  "sweep: --in-range-only needs r >= 4");
  auto per_d = detail::parallel_map(std::max<integer>(opts.r, 1), opts.d_max, [&](integer d) {
    std::vector<SweepRow> rows;
    const integer g_max = max_genus_pi(d, opts.r);
    for (integer g = 1; g <= g_max; ++g) {
      if (opts.in_range_only && !range_thm41(d, g, opts.r)) continue;
      rows.push_back(sweep_row(d, g, opts.r));
    }
    return rows;
  });
  std::vector<SweepRow> out;
  for (auto& rows : per_d)
    for (auto& row : rows) out.push_back(std::move(row));
  return out;
}

/// RFC 4180 field quoting: fields containing a comma, quote or line break
/// are wrapped in quotes with embedded quotes doubled.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string range_label(const std::optional<bool>& in_range) {
  if (!in_range) return "n/a";
  return *in_range ? "in-range" : "out-of-range";
}

inline constexpr const char* kCsvHeader = "d,g,r,verdict,witnesses,alpha_list,range_thm41";

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << "\n";
  for (const auto& row : rows) {
    std::string alphas;
    for (std::size_t k = 0; k < row.alpha_list.size(); ++k)
      alphas += (k ? ";" : "") + std::to_string(row.alpha_list[k]);
    os << row.d << ',' << row.g << ',' << row.r << ',' << csv_field(row.verdict) << ','
       << row.witnesses << ',' << csv_field(alphas) << ',' << range_label(row.in_range) << "\n";
  }
}

inline json sweep_document(const SweepOptions& opts, const std::vector<SweepRow>& rows) {
  json list = json::array();
  for (const auto& row : rows) {
    list.push_back({{"d", row.d},
                    {"g", row.g},
                    {"r", row.r},
                    {"verdict", row.verdict},
                    {"witnesses", row.witnesses},
                    {"alpha_list", row.alpha_list},
                    {"range_thm41", row.in_range ? json(*row.in_range) : json(nullptr)}});
  }
  return {{"schema", kSchema},
          {"kind", "sweep"},
          {"r", opts.r},
          {"d_max", opts.d_max},
          {"in_range_only", opts.in_range_only},
          {"rows", list}};
}

}  // namespace rigidity
