#include "weylwords/export.hpp"

#include <algorithm>
#include <sstream>

#include "weylwords/error.hpp"

namespace weylwords {

ExportRecord make_export(const RootSystem& sys) {
  ExportRecord rec{sys.label(), {}};
  for (auto& e : reflection_table(sys)) {
    const bool pal = is_palindrome(e.word);
    rec.entries.push_back({std::move(e.root), std::move(e.coroot), std::move(e.euclid),
                           std::move(e.word), e.length, pal, std::move(e.label),
                           std::move(e.conjugator)});
  }
  return rec;
}

std::string render_expansion(const Root& a) {
  std::string out;
  for (int i = 0; i < a.rank(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += a[i] > 0 ? "+" : "";
    if (a[i] == -1) out += "-";
    else if (a[i] != 1) out += std::to_string(a[i]);
    out += "α" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const ExportRecord& record) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : record.entries) {
    nlohmann::json row;
    row["root_coeffs"] = e.root.coeffs;
    row["coroot_coeffs"] = e.coroot.coeffs;
    std::vector<std::string> euclid;
    for (const auto& x : e.euclid.coords) euclid.push_back(to_string(x));
    row["euclid"] = euclid;
    row["word"] = render_word(e.word);
    row["length"] = e.length;
    row["palindrome"] = e.palindrome;
    row["label"] = e.label;
    if (!e.conjugator.empty()) row["conjugator"] = render_word(e.conjugator);
    entries.push_back(std::move(row));
  }
  return {{"type", record.type.str()}, {"rank", record.type.rank}, {"entries", std::move(entries)}};
}

namespace {

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
  }
}

}  // namespace

ExportRecord export_from_json(const nlohmann::json& j) {
  try {
    ExportRecord rec{TypeLabel::parse(j.at("type").get<std::string>()), {}};
    if (j.at("rank").get<int>() != rec.type.rank) throw Error(ErrorCode::Parse, "rank mismatch");
    for (const auto& row : j.at("entries")) {
      ExportEntry e;
      e.root = Root(row.at("root_coeffs").get<std::vector<int>>());
      e.coroot = Coroot(row.at("coroot_coeffs").get<std::vector<int>>());
      for (const auto& x : row.at("euclid")) e.euclid.coords.push_back(parse_rational(x.get<std::string>()));
      e.word = parse_word(row.at("word").get<std::string>());
      e.length = row.at("length").get<int>();
      e.palindrome = row.at("palindrome").get<bool>();
      e.label = row.value("label", std::string{});
      if (row.contains("conjugator")) e.conjugator = parse_word(row.at("conjugator").get<std::string>());
      rec.entries.push_back(std::move(e));
    }
    return rec;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Parse, ex.what());
  }
}

std::string render_csv(const ExportRecord& record) {
  std::ostringstream out;
  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  out << "label,euclidean,expansion,coroot,length,palindrome,conjugator,word\n";
  for (const auto& e : record.entries) {
    out << quoted(e.label) << ',' << quoted(render_euclidean(e.euclid)) << ','
        << quoted(render_root(e.root)) << ',' << quoted(render_root(Root(e.coroot.coeffs))) << ','
        << e.length << ',' << (e.palindrome ? "true" : "false") << ','
        << (e.conjugator.empty() ? "" : render_word(e.conjugator)) << ',' << render_word(e.word)
        << '\n';
  }
  return out.str();
}

namespace {

// Display width in code points; the expansion column contains α.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > display_width(s) ? width - display_width(s) : 0, ' ');
}

}  // namespace

std::string render_text(const ExportRecord& record) {
  const bool has_conj = std::any_of(record.entries.begin(), record.entries.end(),
                                    [](const ExportEntry& e) { return !e.conjugator.empty(); });
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"root", "expansion", "length"};
  if (has_conj) header.emplace_back("w");
  header.emplace_back("reflection");
  rows.push_back(header);
  for (const auto& e : record.entries) {
    std::vector<std::string> r{e.label, render_expansion(e.root), std::to_string(e.length)};
    if (has_conj) r.push_back(e.conjugator.empty() ? "" : render_word(e.conjugator));
    r.push_back(render_word(e.word));
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));

  std::ostringstream out;
  out << "# " << record.type.str() << ": " << record.entries.size() << " reflections\n";
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c + 1 < r.size(); ++c) line += pad(r[c], width[c] + 2);
    line += r.back();
    out << line << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"root", f.root.coeffs},
                        {"reason", std::string(to_string(f.reason))},
                        {"detail", f.detail}});
  }
  return {{"type", report.label.str()}, {"total", report.total},
          {"checked", report.checked},  {"ok", report.ok()},
          {"failures", std::move(failures)}};
}

}  // namespace weylwords
