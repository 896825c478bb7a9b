#include "weylwords/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

#include <CLI11.hpp>

#include "weylwords/error.hpp"
#include "weylwords/export.hpp"
#include "weylwords/formulas.hpp"
#include "weylwords/verify.hpp"

namespace weylwords {

Root parse_root_spec(const RootSystem& sys, std::string_view spec) {
  const std::string text(spec);
  Root root;
  if (text.find('e') == std::string::npos) {
    root = parse_root(text, sys.rank());
  } else {
    if (sys.label().exceptional()) {
      throw Error(ErrorCode::Parse, "exceptional roots are given as simple-root coefficients");
    }
    const int dim = sys.label().family == Family::A ? sys.rank() + 1 : sys.rank();
    EuclideanVector v{std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0))};
    static const std::regex term(R"(([+-]?)(\d*)e(\d+))");
    std::size_t consumed = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator();
         ++it) {
      const auto& m = *it;
      if (static_cast<std::size_t>(m.position()) != consumed || (consumed > 0 && m[1].length() == 0)) {
        throw Error(ErrorCode::Parse, "bad symbolic root '" + text + "'");
      }
      consumed += static_cast<std::size_t>(m.length());
      const int k = std::stoi(m[3]);
      if (k < 1 || k > dim) throw Error(ErrorCode::Parse, "index out of range in '" + text + "'");
      int c = m[2].length() ? std::stoi(m[2]) : 1;
      if (m[1] == "-") c = -c;
      v.coords[static_cast<std::size_t>(k - 1)] += c;
    }
    if (consumed != text.size() || consumed == 0) {
      throw Error(ErrorCode::Parse, "bad symbolic root '" + text + "'");
    }
    auto r = sys.from_euclidean(v);
    if (!r) throw Error(ErrorCode::NotARoot, text + " is not a positive root of " + sys.label().str());
    root = *r;
  }
  if (!sys.is_positive_root(root)) {
    throw Error(ErrorCode::NotARoot, render_root(root) + " is not a positive root of " + sys.label().str());
  }
  return root;
}

namespace {

struct Options {
  std::string type;
  std::string root;
  std::string format = "text";
  std::string report;
  std::string input;
  unsigned long long max_group_order = kDefaultMaxGroupOrder;
  bool serial = false;
};

int cmd_word(const Options& o, std::ostream& out) {
  const RootSystem sys = RootSystem::build(TypeLabel::parse(o.type));
  const Root a = parse_root_spec(sys, o.root);
  const Word w = reflection_word(sys, a);
  out << render_word(w) << "  (length " << w.size() << ")\n";
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const RootSystem sys = RootSystem::build(TypeLabel::parse(o.type));
  const ExportRecord rec = make_export(sys);
  if (o.format == "json") {
    out << to_json(rec).dump(2) << '\n';
  } else if (o.format == "csv") {
    out << render_csv(rec);
  } else {
    out << render_text(rec);
  }
  return kExitOk;
}

int cmd_corrections(std::ostream& out) {
  for (const auto& c : bourbaki_corrections()) {
    out << c.plate << " | " << c.location << " | " << c.note << " | " << c.erroneous << " -> "
        << c.corrected << '\n';
  }
  return kExitOk;
}

// Verifies one type and the applicable independent checks; returns the report
// fragment and whether everything passed.
std::pair<nlohmann::json, bool> verify_one(TypeLabel label, const Options& o, std::ostream& out) {
  const RootSystem sys = RootSystem::build(label);
  const auto report = verify_all(sys, o.serial ? Execution::Serial : Execution::Parallel);
  nlohmann::json j = to_json(report);
  bool ok = report.ok();
  out << label.str() << ": " << report.checked << "/" << report.total << (report.ok() ? " ok" : " FAILED")
      << '\n';
  for (const auto& f : report.failures) {
    out << "  " << to_string(f.reason) << " root " << render_root(f.root) << ": " << f.detail << '\n';
  }

  const auto order = weyl_group_order(label);
  if (order != 0 && order <= o.max_group_order) {
    const auto oracle = small_group_oracle(sys, o.max_group_order);
    int agree = 0;
    for (const auto& [root, len] : oracle)
      if (len == reflection_length(sys, root)) ++agree;
    const bool oracle_ok = agree == static_cast<int>(oracle.size());
    ok = ok && oracle_ok;
    j["oracle"] = {{"group_order", order}, {"agree", agree}, {"ok", oracle_ok}};
    out << "  group enumeration (|W| = " << order << "): " << agree << "/" << oracle.size()
        << " lengths agree\n";
  } else {
    j["oracle"] = nullptr;
  }
  if (label.simply_laced()) {
    const bool sl = check_simply_laced_lengths(label);
    ok = ok && sl;
    j["simply_laced_lengths"] = sl;
    out << "  l(s_a) = 2 ht(a^vee) - 1: " << (sl ? "ok" : "FAILED") << '\n';
  }
  if (label.family == Family::B || label.family == Family::C) {
    const bool inv = check_inversion_characterizations(label);
    ok = ok && inv;
    j["inversion_sets"] = inv;
    out << "  explicit inversion sets: " << (inv ? "ok" : "FAILED") << '\n';
  }
  j["ok"] = ok;
  return {j, ok};
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<TypeLabel> labels;
  if (o.type == "all" || o.type == "ALL") {
    labels = standard_labels();
  } else {
    labels.push_back(TypeLabel::parse(o.type));
  }
  nlohmann::json reports = nlohmann::json::array();
  bool ok = true;
  for (const auto& l : labels) {
    auto [j, good] = verify_one(l, o, out);
    reports.push_back(std::move(j));
    ok = ok && good;
  }
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) throw Error(ErrorCode::Parse, "cannot write " + o.report);
    f << (labels.size() == 1 ? reports.front() : reports).dump(2) << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::ifstream f(o.input);
  if (!f) throw Error(ErrorCode::Parse, "cannot read " + o.input);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Parse, ex.what());
  }
  const ExportRecord rec = export_from_json(j);
  const RootSystem sys = RootSystem::build(rec.type);
  std::map<Root, Word> words;
  for (const auto& e : rec.entries) words.emplace(e.root, e.word);
  auto report = verify_table(sys, words);
  if (rec.entries.size() != sys.positives().size()) {
    report.failures.push_back({Root{}, ReasonCode::WrongElement,
                               "expected " + std::to_string(sys.positives().size()) + " entries"});
  }
  out << rec.type.str() << ": " << report.checked << "/" << report.total
      << (report.ok() ? " ok" : " FAILED") << '\n';
  for (const auto& fl : report.failures) {
    out << "  " << to_string(fl.reason) << " root " << render_root(fl.root) << ": " << fl.detail << '\n';
  }
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindromic reduced words for reflections in finite Weyl groups", "weylwords"};
  app.require_subcommand(1);
  Options o;

  auto* word = app.add_subcommand("word", "Print the reflection word for a positive root");
  word->add_option("type", o.type, "Cartan type, e.g. C4")->required();
  word->add_option("root", o.root, "Coefficients '1,2,1' or classical form 'e1+e3', '2e2'")->required();

  auto* table = app.add_subcommand("table", "Print every reflection of a type");
  table->add_option("type", o.type, "Cartan type")->required();
  table->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Verify all reflection words of a type (or 'all')");
  verify->add_option("type", o.type, "Cartan type or 'all'")->required();
  verify->add_option("--report", o.report, "Write a JSON report to this path");
  verify->add_option("--max-group-order", o.max_group_order,
                     "Largest group enumerated by the brute-force length oracle");
  verify->add_flag("--serial", o.serial, "Disable the parallel kernels");

  auto* check = app.add_subcommand("check", "Re-verify a JSON table produced by 'table --format json'");
  check->add_option("file", o.input, "JSON export")->required();

  auto* corrections = app.add_subcommand("corrections", "List the corrections to the Bourbaki plates");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*word) return cmd_word(o, out);
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*check) return cmd_check(o, out);
    if (*corrections) return cmd_corrections(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace weylwords
