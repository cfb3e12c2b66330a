#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "caweave/caweave.hpp"
#include "reference_tables.hpp"

namespace caweave::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string poly;
  std::string seed;
  std::string shifts;
  std::string spec_file;
  std::optional<long long> t;
  std::string family = "102";
  std::string format = "text";
  bool render = false;
  std::optional<std::size_t> cap;
  std::string out_file;
  std::string table;
  std::string cells;
};

int max_degree_from_env() {
  const char* env = std::getenv("CAWEAVE_MAX_L");
  if (env == nullptr || *env == '\0') return kDefaultMaxDegree;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 2 || value > kHardMaxDegree) {
    throw Error(Errc::invalid_input,
                "CAWEAVE_MAX_L must be an integer in [2, " + std::to_string(kHardMaxDegree) + "]");
  }
  return static_cast<int>(value);
}

std::vector<std::uint64_t> parse_shifts(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw Error(Errc::invalid_input, "bad shift '" + item + "' in '" + text + "'");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw Error(Errc::invalid_input, "--shifts needs at least one value");
  return out;
}

std::string join_shifts(const std::vector<std::uint64_t>& shifts) {
  std::string out;
  for (std::size_t i = 0; i < shifts.size(); ++i) out += (i ? "," : "") + std::to_string(shifts[i]);
  return out;
}

// Fills poly/seed/shifts from --spec first, then lets explicit flags win.
InterleaveSpec load_spec(const Options& opt, int max_degree) {
  std::string poly = opt.poly;
  std::string seed = opt.seed;
  std::vector<std::uint64_t> shifts;
  if (!opt.spec_file.empty()) {
    std::ifstream in(opt.spec_file);
    if (!in) throw Error(Errc::invalid_input, "cannot open spec file " + opt.spec_file);
    Json j;
    try {
      j = Json::parse(in);
      if (poly.empty()) poly = j.at("poly").get<std::string>();
      if (seed.empty() && j.contains("seed")) seed = j.at("seed").get<std::string>();
      shifts = j.at("shifts").get<std::vector<std::uint64_t>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::invalid_input, std::string("bad spec file: ") + e.what());
    }
  }
  if (!opt.shifts.empty()) shifts = parse_shifts(opt.shifts);
  if (poly.empty()) throw Error(Errc::invalid_input, "--poly is required");
  if (shifts.empty()) throw Error(Errc::invalid_input, "--shifts is required");
  const PrimitivePolynomial p = PrimitivePolynomial::parse(poly, max_degree);
  BitVector seed_bits = seed.empty() ? BitVector(static_cast<std::size_t>(p.degree()), true) : BitVector::from_string(seed);
  InterleaveSpec spec{p, std::move(seed_bits), std::move(shifts)};
  spec.validate();
  return spec;
}

Json spec_json(const InterleaveSpec& spec) {
  Json j;
  j["poly"] = spec.poly.to_string();
  j["seed"] = spec.seed.to_string();
  j["shifts"] = spec.shifts;
  return j;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

// ---- zech ----------------------------------------------------------------

int cmd_zech(const Options& opt, std::ostream& out) {
  const ZechTable zech = ZechTable::build(PrimitivePolynomial::parse(opt.poly, max_degree_from_env()));
  const auto period = static_cast<long long>(zech.period());
  if (opt.t) {
    const ZechLog z = zech(*opt.t);
    if (opt.format == "json") {
      Json j;
      j["poly"] = zech.poly().to_string();
      j["t"] = *opt.t;
      j["zech"] = z.to_string();
      out << j.dump() << '\n';
    } else {
      out << z.to_string() << '\n';
    }
    return kOk;
  }
  if (opt.format == "json") {
    Json j;
    j["poly"] = zech.poly().to_string();
    j["period"] = period;
    Json values = Json::array();
    for (long long t = 0; t < period; ++t) values.push_back(zech(t).to_string());
    j["zech"] = values;
    out << j.dump() << '\n';
  } else if (opt.format == "csv") {
    out << "t,zech\n";
    for (long long t = 0; t < period; ++t) out << t << ',' << zech(t).to_string() << '\n';
  } else {
    for (long long t = 0; t < period; ++t) out << "Z(" << t << ") = " << zech(t).to_string() << '\n';
  }
  return kOk;
}

// ---- interleave ----------------------------------------------------------

int cmd_interleave(const Options& opt, std::ostream& out) {
  const InterleaveSpec spec = load_spec(opt, max_degree_from_env());
  const PeriodicSequence seq = build_from_spec(spec);
  const InterleaveReport report = analyze(spec);
  const std::string minpoly = describe_minimal_polynomial(report, spec.poly);
  if (opt.format == "json") {
    Json j = spec_json(spec);
    j["period"] = report.period;
    j["bits"] = seq.to_string();
    j["lc"] = report.lc;
    j["minpoly"] = minpoly;
    j["max_lc"] = report.is_max_lc;
    out << j.dump() << '\n';
  } else if (opt.format == "csv") {
    out << "period,lc,max_lc,minpoly,bits\n"
        << report.period << ',' << report.lc << ',' << bool_word(report.is_max_lc) << ",\"" << minpoly << "\","
        << seq.to_string() << '\n';
  } else {
    out << seq.to_string() << '\n';
    out << "period=" << report.period << " lc=" << report.lc << " max_lc=" << bool_word(report.is_max_lc) << '\n';
    out << "minpoly=" << minpoly << '\n';
  }
  return kOk;
}

// ---- synth ---------------------------------------------------------------

Json ledger_json(const std::vector<ColumnLedgerEntry>& ledger) {
  Json rows = Json::array();
  for (const auto& entry : ledger) {
    Json parts = Json::array();
    for (const auto& p : entry.parts) {
      if (p.is_zero()) {
        parts.push_back(nullptr);
      } else {
        parts.push_back(p.value());
      }
    }
    rows.push_back(parts);
  }
  return rows;
}

int synth_102(const InterleaveSpec& spec, const Options& opt, std::ostream& out) {
  const Ca102Synthesis s = synthesize_102(spec, opt.cap);
  if (opt.format == "json") {
    Json j = spec_json(spec);
    j["family"] = "102";
    j["length"] = s.minimal_length;
    if (spec.power_of_two()) j["predicted_length"] = s.predicted_length;
    j["closure"] = s.cyclic_closure;
    j["engine_agrees"] = s.engine_agrees;
    j["ledger"] = ledger_json(s.ledger);
    Json rec = Json::array();
    for (const auto& r : s.recurrence_shifts) rec.push_back({{"column", r.column}, {"shift", r.shift}});
    j["recurrence_shifts"] = rec;
    if (!s.predicted.empty()) j["predicted_matches"] = s.predicted == s.ledger;
    out << j.dump() << '\n';
  } else if (opt.format == "csv") {
    out << ledger_csv(s.ledger);
  } else {
    out << "length=" << s.minimal_length;
    if (spec.power_of_two()) out << " predicted=" << s.predicted_length;
    out << " closure=" << bool_word(s.cyclic_closure) << " engine=" << bool_word(s.engine_agrees) << '\n';
    out << "recurrence:";
    for (const auto& r : s.recurrence_shifts) out << ' ' << r.column << ':' << r.shift;
    out << '\n';
    if (!s.predicted.empty()) out << "predicted_ledger_matches=" << bool_word(s.predicted == s.ledger) << '\n';
    out << ledger_csv(s.ledger);
  }
  if (opt.render) out << render(s.grid) << '\n';
  return kOk;
}

int synth_9150(const InterleaveSpec& spec, const Options& opt, std::ostream& out) {
  const Ca9150Synthesis s = synthesize_9150(spec, max_degree_from_env());
  if (opt.format == "json") {
    Json j = spec_json(spec);
    j["family"] = "90150";
    j["t"] = s.t_exp;
    j["rules"] = {s.pair[0].to_string(), s.pair[1].to_string()};
    j["verified"] = {s.verified[0], s.verified[1]};
    j["lengths"] = {s.pair[0].size(), s.pair[1].size()};
    out << j.dump() << '\n';
  } else {
    out << "rules=" << s.pair[0].to_string() << ',' << s.pair[1].to_string() << " verified="
        << bool_word(s.verified[0]) << ',' << bool_word(s.verified[1]) << '\n';
    if (opt.format == "csv") {
      for (std::size_t i = 0; i < 2; ++i) {
        if (s.verified[i]) out << ledger_csv(s.ledgers[i]);
      }
    }
  }
  if (opt.render) {
    for (std::size_t i = 0; i < 2; ++i) out << s.pair[i].to_string() << '\n' << render(s.grids[i]) << '\n';
  }
  return kOk;
}

int cmd_synth(const Options& opt, std::ostream& out) {
  const InterleaveSpec spec = load_spec(opt, max_degree_from_env());
  if (opt.family == "102") return synth_102(spec, opt, out);
  if (opt.family == "90150") return synth_9150(spec, opt, out);
  throw Error(Errc::invalid_input, "--family must be 102 or 90150");
}

// ---- reproduce -----------------------------------------------------------

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << '\n';
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

template <std::size_t N>
CaGrid golden_grid(const std::array<std::string_view, N>& rows) {
  std::vector<BitVector> out;
  for (auto r : rows) out.push_back(BitVector::from_string(r));
  return CaGrid::from_rows(std::move(out));
}

void reproduce_table2(Report& rep) {
  const CaGrid a = golden_grid(reference::kTable2a);
  const CaGrid b = golden_grid(reference::kTable2b);
  const CaGrid fwd = run(RuleVector::uniform(Rule::r102, 7, Boundary::cyclic), a.row(0), 6);
  rep.check("table2a forward rule 102", fwd == a);
  const CaGrid left = run(RuleVector::uniform(Rule::r60, 7, Boundary::cyclic), a.row(0).reversed(), 6);
  rep.check("table2b forward rule 60", left == b);
  rep.check("table2b is table2a mirrored", a.mirrored() == b);
  const auto cols = derive_grid(a.column_bits(0), 7);
  rep.check("table2a derived from column 0", CaGrid::from_columns(cols) == a);
}

void reproduce_table3(Report& rep) {
  const PeriodicSequence target = PeriodicSequence::parse("1001110");
  const std::pair<std::string_view, CaGrid> cases[] = {{"001", golden_grid(reference::kTable3a)},
                                                       {"100", golden_grid(reference::kTable3b)}};
  for (const auto& [rules, grid] : cases) {
    const HybridRuleString rs = HybridRuleString::parse(rules);
    rep.check("table3 forward " + std::string(rules), run(rs.to_rule_vector(), grid.row(0), 6) == grid);
    const auto v = verify_column0(rs, grid.column_bits(0));
    rep.check("table3 column 0 " + std::string(rules), v.verified && v.grid == grid);
  }
  const auto v = verify_column0(HybridRuleString::parse("001"), target);
  rep.check("table3a from 1001110", v.verified && v.grid == golden_grid(reference::kTable3a));
}

std::string ledger_row(const std::vector<ColumnLedgerEntry>& ledger, std::size_t part) {
  std::string out;
  for (const auto& e : ledger) out += (out.empty() ? "" : " ") + e.parts[part].to_string();
  return out;
}

void reproduce_table4(Report& rep) {
  const PrimitivePolynomial p3 = PrimitivePolynomial::parse("1+x^2+x^3");
  const InterleaveSpec spec{p3, BitVector::from_string("111"), {0, 1}};
  const Ca102Synthesis s = synthesize_102(spec);
  std::vector<ColumnLedgerEntry> expected;
  for (std::size_t j = 0; j < reference::kTable4First.size(); ++j) {
    auto part = [](int v) { return v < 0 ? ShiftOrZero::zero() : ShiftOrZero::shift(static_cast<std::uint64_t>(v)); };
    expected.push_back({j, {part(reference::kTable4First[j]), part(reference::kTable4Second[j])}});
  }
  rep.check("table4 observed ledger", s.ledger == expected, ledger_row(s.ledger, 0) + " | " + ledger_row(s.ledger, 1));
  rep.check("table4 predicted ledger", s.predicted == expected,
            ledger_row(s.predicted, 0) + " | " + ledger_row(s.predicted, 1));
  rep.check("table4 grid", s.grid == golden_grid(reference::kGrid102Len14));

  const PrimitivePolynomial p4 = PrimitivePolynomial::parse("1+x^3+x^4");
  const PeriodicSequence base4 = pn_sequence(p4, BitVector::from_string("1111"));
  const auto k = shift_between(base4, PeriodicSequence::parse("010110010001111"));
  const Ca102Synthesis s4 = synthesize_102({p4, BitVector::from_string("1111"), {0, k.value_or(0)}});
  std::vector<std::uint64_t> circled;
  for (const auto& r : s4.recurrence_shifts) circled.push_back(r.shift);
  rep.check("width-10 circled shifts",
            k && std::equal(circled.begin(), circled.end(), reference::kCircledLen10.begin(),
                            reference::kCircledLen10.end()),
            join_shifts(circled));
  rep.check("width-10 grid", s4.grid == golden_grid(reference::kGrid102Len10));

  const Ca102Synthesis s28 = synthesize_102({p3, BitVector::from_string("100"), {0, 5, 4, 1}});
  circled.clear();
  for (const auto& r : s28.recurrence_shifts) circled.push_back(r.shift);
  rep.check("width-28 circled shifts",
            std::equal(circled.begin(), circled.end(), reference::kCircledLen28.begin(),
                       reference::kCircledLen28.end()),
            join_shifts(circled));
  rep.check("width-28 grid", s28.grid == golden_grid(reference::kGrid102Len28));
}

// Minimal 102-CA widths of a few max-LC tuples over one polynomial per degree,
// checked for divisibility into the tabulated bound.
void reproduce_table5(Report& rep, const std::string& cells) {
  std::set<std::string> wanted;
  if (!cells.empty()) {
    std::stringstream ss(cells);
    std::string item;
    while (std::getline(ss, item, ',')) wanted.insert(item);
  }
  for (const auto& cell : reference::kTable5) {
    if (!wanted.empty() && !wanted.count(std::string(cell.id))) continue;
    const PrimitivePolynomial p = primitive_polynomials(cell.degree).front();
    const std::uint64_t period = p.period();
    std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(cell.t * 100 + cell.degree));
    std::uniform_int_distribution<std::uint64_t> pick(0, period - 1);
    std::set<std::uint64_t> lengths;
    std::size_t tried = 0;
    std::size_t accepted = 0;
    bool all_divide = true;
    while (accepted < 8 && tried < 1000) {
      ++tried;
      std::vector<std::uint64_t> shifts(static_cast<std::size_t>(cell.t));
      for (auto& s : shifts) s = pick(rng);
      const InterleaveSpec spec{p, BitVector(static_cast<std::size_t>(p.degree()), true), shifts};
      if (!analyze(spec).is_max_lc) continue;
      ++accepted;
      const auto len = minimal_length(build_cycle(spec), std::size_t{1} << (cell.t * cell.degree));
      if (!len) {
        all_divide = false;
        continue;
      }
      lengths.insert(*len);
      all_divide = all_divide && cell.bound % *len == 0;
    }
    std::string observed;
    for (auto l : lengths) observed += (observed.empty() ? "" : ",") + std::to_string(l);
    rep.check("table5 " + std::string(cell.id) + " divides " + std::to_string(cell.bound),
              accepted > 0 && all_divide,
              p.to_string() + " observed " + observed + " over " + std::to_string(accepted) + " tuples");
  }
}

void reproduce_table6(Report& rep) {
  auto check_pair = [&](const reference::RulePair& row) {
    const PrimitivePolynomial p = PrimitivePolynomial::parse(row.poly);
    const auto [a, b] = synthesize_pn_ca(p);
    const std::set<std::string> got{a.to_string(), b.to_string()};
    const std::set<std::string> want{std::string(row.first), std::string(row.second)};
    rep.check("table6 " + std::string(row.poly), got == want, a.to_string() + "," + b.to_string());
  };
  for (const auto& row : reference::kTable6) check_pair(row);
  check_pair(reference::kDegree3Pair);
}

void reproduce_table7(Report& rep) {
  const PrimitivePolynomial p = PrimitivePolynomial::parse("1+x^2+x^5");
  const Ca9150Synthesis s = synthesize_9150({p, BitVector::from_string("11111"), {0, 17}});
  const std::pair<std::string_view, CaGrid> cases[] = {{"0111001110", golden_grid(reference::kTable7a)},
                                                       {"1111111111", golden_grid(reference::kTable7b)}};
  for (const auto& [rules, grid] : cases) {
    bool ok = false;
    for (std::size_t i = 0; i < 2; ++i) {
      if (s.pair[i].to_string() == rules) ok = s.verified[i] && s.grids[i] == grid;
    }
    rep.check("table7 " + std::string(rules), ok);
  }
}

int cmd_reproduce(const Options& opt, std::ostream& out) {
  Report rep(out);
  const std::string& t = opt.table;
  const bool all = t == "all";
  bool known = false;
  if (all || t == "table2") known = true, reproduce_table2(rep);
  if (all || t == "table3") known = true, reproduce_table3(rep);
  if (all || t == "table4") known = true, reproduce_table4(rep);
  if (all || t == "table5") known = true, reproduce_table5(rep, opt.cells);
  if (all || t == "table6") known = true, reproduce_table6(rep);
  if (all || t == "table7") known = true, reproduce_table7(rep);
  if (!known) throw Error(Errc::invalid_input, "unknown table '" + t + "'");
  return rep.failed() ? kMismatch : kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"caweave: interleaved PN-sequences and the linear cellular automata that generate them"};
  app.require_subcommand(1);
  Options opt;

  auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->add_option("--poly", opt.poly, "primitive polynomial, e.g. 1+x^2+x^5 or 101001");
    cmd->add_option("--seed", opt.seed, "LFSR seed a_0..a_(L-1) (default all ones)");
    cmd->add_option("--shifts", opt.shifts, "comma-separated shifts, one per stream");
    cmd->add_option("--spec", opt.spec_file, "JSON file {\"poly\",\"seed\",\"shifts\"}");
  };
  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", opt.out_file, "write output to FILE");
  };

  auto* zech = app.add_subcommand("zech", "Zech logarithm table or single value");
  zech->add_option("--poly", opt.poly, "primitive polynomial")->required();
  zech->add_option("--t", opt.t, "single exponent");
  add_output_flags(zech);

  auto* inter = app.add_subcommand("interleave", "build an interleaving and report period, LC, minimal polynomial");
  add_spec_flags(inter);
  add_output_flags(inter);

  auto* synth = app.add_subcommand("synth", "synthesize the 102-CA or the 150/90-CA pair for a spec");
  add_spec_flags(synth);
  add_output_flags(synth);
  synth->add_option("--family", opt.family, "102 | 90150")->check(CLI::IsMember({"102", "90150"}));
  synth->add_option("--cap", opt.cap, "largest 102-CA width searched (default streams*T)")
      ->check(CLI::PositiveNumber);
  synth->add_flag("--render", opt.render, "draw the time-space diagram");

  auto* repro = app.add_subcommand("reproduce", "check against embedded golden tables");
  repro->add_option("table", opt.table, "table2 ... table7 | all")->required();
  repro->add_option("--cells", opt.cells, "table5 cells, e.g. t3L3,t5L4");
  repro->add_option("--out", opt.out_file, "write output to FILE");

  app.footer(
      "Exit codes: 0 ok, 1 reproduce mismatch, 2 invalid input, 3 internal invariant breach.\n"
      "CAWEAVE_MAX_L overrides the polynomial degree cap (default " +
      std::to_string(kDefaultMaxDegree) + ").");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    std::ostringstream msg;
    const int code = app.exit(e, help, msg);
    out << help.str();
    err << msg.str();
    return code == 0 ? kOk : kInvalidInput;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*zech) code = cmd_zech(opt, buffer);
    if (*inter) code = cmd_interleave(opt, buffer);
    if (*synth) code = cmd_synth(opt, buffer);
    if (*repro) code = cmd_reproduce(opt, buffer);
  } catch (const Error& e) {
    out << buffer.str();
    err << "error: " << e.what() << '\n';
    return is_invariant_breach(e.code()) ? kInvariantBreach : kInvalidInput;
  }

  if (opt.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.out_file);
    if (!file) {
      err << "error: cannot write " << opt.out_file << '\n';
      return kInvalidInput;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace caweave::cli
