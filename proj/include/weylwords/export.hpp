#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weylwords/formulas.hpp"
#include "weylwords/verify.hpp"

namespace weylwords {

/// One exported reflection.
struct ExportEntry {
  Root root;
  Coroot coroot;
  EuclideanVector euclid;
  Word word;
  int length = 0;
  bool palindrome = false;
  std::string label;
  Word conjugator;
};

/// A full reflection table, the unit of JSON/CSV export.
struct ExportRecord {
  TypeLabel type;
  std::vector<ExportEntry> entries;
};

ExportRecord make_export(const RootSystem& sys);

/// "3α1+2α2".
std::string render_expansion(const Root& a);

nlohmann::json to_json(const ExportRecord& record);
/// Throws Parse on schema violations.
ExportRecord export_from_json(const nlohmann::json& j);

std::string render_csv(const ExportRecord& record);
std::string render_text(const ExportRecord& record);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace weylwords
