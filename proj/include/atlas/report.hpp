#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "atlas/engine.hpp"

namespace atlas {

nlohmann::json report_json(const VerificationReport& r);
std::string report_markdown(const VerificationReport& r);
/// One line per check: name, pass, detail.
std::string report_csv(const VerificationReport& r);

/// One regenerated table row next to its transcription.
struct TableEntry {
  std::string table;  // "1" or "2"
  std::string case_id;
  std::string pair;
  VerificationReport report;
  GoldenValues golden;
  /// Cells whose computed value differs from the transcription.
  std::vector<std::string> diffs;
};

std::vector<TableEntry> regenerate_tables(const RunOptions& opts);

/// Both tables followed by a DIFF section (empty on a correct build).
std::string tables_markdown(const std::vector<TableEntry>& entries);
std::string tables_csv(const std::vector<TableEntry>& entries);
nlohmann::json tables_json(const std::vector<TableEntry>& entries);

/// The transcribed rows at the default parameters, with a provenance column.
std::string golden_source_csv();

}  // namespace atlas
