#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spellfix/error.hpp"
#include "spellfix/errorgen.hpp"
#include "spellfix/suggestion.hpp"

namespace spellfix {

// Records file: sentence_id, corrupted sentence, error_index, original,
// corrupted, category, etype. Empty strings for the fields of unchanged rows.
void write_records(std::ostream& out, const std::vector<ErrorRecord>& records);
void write_records(const std::filesystem::path& path, const std::vector<ErrorRecord>& records);

// Checks the field count and the record invariants; errors name path:line.
std::vector<ErrorRecord> read_records(const std::filesystem::path& path);
ErrorRecord parse_record_line(std::string_view line);  // throws DataError

struct PredictionRow {
  std::int64_t sentence_id = 0;
  Suggestion suggestion;

  bool operator==(const PredictionRow& o) const;
};

// Shortest round-trip form; empty for no score.
std::string format_score(const std::optional<double>& score);

void write_predictions(std::ostream& out, const std::vector<PredictionRow>& rows);
void write_predictions(const std::filesystem::path& path, const std::vector<PredictionRow>& rows);
std::vector<PredictionRow> read_predictions(const std::filesystem::path& path);
PredictionRow parse_prediction_line(std::string_view line);  // throws DataError

// Splits on TAB. Empty fields are kept.
std::vector<std::string_view> split_tabs(std::string_view line);

// Calls fn(line_number, line) for each line, CR stripped. Exceptions of
// type DataError are rethrown prefixed with path:line.
template <class Fn>
void for_each_line(const std::filesystem::path& path, Fn&& fn);

std::string read_text_file(const std::filesystem::path& path);  // throws IoError
void write_text_file(const std::filesystem::path& path, std::string_view content);

template <class Fn>
void for_each_line(const std::filesystem::path& path, Fn&& fn) {
  const std::string text = read_text_file(path);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    try {
      fn(line_no, line);
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace spellfix
