#include "spellfix/records.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spellfix/error.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

namespace {

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw DataError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::u32string decode(std::string_view s) {
  return utf8_decode(s);
}

std::string join_tokens(const std::vector<std::u32string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += utf8_encode(tokens[i]);
  }
  return out;
}

std::vector<std::u32string> split_tokens(std::string_view s) {
  std::vector<std::u32string> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t sp = s.find(' ', pos);
    std::string_view tok = s.substr(pos, sp == std::string_view::npos ? s.npos : sp - pos);
    if (tok.empty()) throw DataError("empty token in sentence");
    out.push_back(decode(tok));
    if (sp == std::string_view::npos) break;
    pos = sp + 1;
  }
  return out;
}

}  // namespace

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

void write_records(std::ostream& out, const std::vector<ErrorRecord>& records) {
  for (const auto& r : records) {
    out << r.sentence_id << '\t' << join_tokens(r.corrupted_tokens) << '\t' << r.error_index
        << '\t' << utf8_encode(r.original_word) << '\t' << utf8_encode(r.corrupted_word) << '\t'
        << to_string(r.category) << '\t' << to_string(r.etype) << '\n';
  }
}

void write_records(const std::filesystem::path& path, const std::vector<ErrorRecord>& records) {
  std::ostringstream buf;
  write_records(buf, records);
  write_text_file(path, buf.str());
}

ErrorRecord parse_record_line(std::string_view line) {
  const auto f = split_tabs(line);
  if (f.size() != 7) {
    throw DataError("expected 7 fields, got " + std::to_string(f.size()));
  }
  ErrorRecord r;
  r.sentence_id = parse_int(f[0], "sentence_id");
  r.corrupted_tokens = split_tokens(f[1]);
  r.error_index = parse_int(f[2], "error_index");
  r.original_word = decode(f[3]);
  r.corrupted_word = decode(f[4]);
  r.category = parse_category(f[5]);
  r.etype = parse_error_type(f[6]);

  const bool none = r.category == Category::none;
  if (none != (r.etype == ErrorType::none) || none != (r.error_index == -1) ||
      none != r.original_word.empty() || none != r.corrupted_word.empty()) {
    throw DataError("inconsistent none fields");
  }
  if (!none) {
    if (r.error_index < 0 ||
        static_cast<std::size_t>(r.error_index) >= r.corrupted_tokens.size()) {
      throw DataError("error_index " + std::to_string(r.error_index) + " out of range");
    }
    if (r.corrupted_tokens[static_cast<std::size_t>(r.error_index)] != r.corrupted_word) {
      throw DataError("corrupted word does not match the token at error_index");
    }
  }
  return r;
}

std::vector<ErrorRecord> read_records(const std::filesystem::path& path) {
  std::vector<ErrorRecord> out;
  for_each_line(path, [&](std::size_t, std::string_view line) {
    if (line.empty()) return;
    out.push_back(parse_record_line(line));
  });
  return out;
}

bool PredictionRow::operator==(const PredictionRow& o) const {
  const auto& a = suggestion;
  const auto& b = o.suggestion;
  return sentence_id == o.sentence_id && a.token_index == b.token_index &&
         a.original == b.original && a.replacement == b.replacement && a.action == b.action &&
         a.score == b.score && a.reason == b.reason;
}

std::string format_score(const std::optional<double>& score) {
  if (!score) return {};
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, *score);
  return std::string(buf, p);
}

void write_predictions(std::ostream& out, const std::vector<PredictionRow>& rows) {
  for (const auto& row : rows) {
    const Suggestion& s = row.suggestion;
    out << row.sentence_id << '\t' << s.token_index << '\t' << utf8_encode(s.original) << '\t'
        << utf8_encode(s.replacement) << '\t' << to_string(s.action) << '\t'
        << format_score(s.score) << '\t' << to_string(s.reason) << '\n';
  }
}

void write_predictions(const std::filesystem::path& path,
                       const std::vector<PredictionRow>& rows) {
  std::ostringstream buf;
  write_predictions(buf, rows);
  write_text_file(path, buf.str());
}

PredictionRow parse_prediction_line(std::string_view line) {
  const auto f = split_tabs(line);
  if (f.size() != 7) {
    throw DataError("expected 7 fields, got " + std::to_string(f.size()));
  }
  PredictionRow row;
  row.sentence_id = parse_int(f[0], "sentence_id");
  const std::int64_t idx = parse_int(f[1], "token_index");
  if (idx < 0) throw DataError("negative token_index");
  Suggestion& s = row.suggestion;
  s.token_index = static_cast<std::size_t>(idx);
  s.original = decode(f[2]);
  s.replacement = decode(f[3]);
  s.action = parse_action(f[4]);
  if (!f[5].empty()) {
    double v = 0;
    auto [p, ec] = std::from_chars(f[5].data(), f[5].data() + f[5].size(), v);
    if (ec != std::errc() || p != f[5].data() + f[5].size() || !std::isfinite(v)) {
      throw DataError("bad score '" + std::string(f[5]) + "'");
    }
    s.score = v;
  }
  s.reason = parse_reason(f[6]);
  if ((s.action == Action::kept) != (s.replacement == s.original)) {
    throw DataError("action does not match replacement");
  }
  if (s.action == Action::replaced && (!s.score || s.reason != Reason::ok)) {
    throw DataError("replaced row needs a score and reason ok");
  }
  if (s.score && (*s.score < 0.0 || *s.score > 1.0)) {
    throw DataError("score outside [0, 1]");
  }
  return row;
}

std::vector<PredictionRow> read_predictions(const std::filesystem::path& path) {
  std::vector<PredictionRow> out;
  for_each_line(path, [&](std::size_t, std::string_view line) {
    if (line.empty()) return;
    out.push_back(parse_prediction_line(line));
  });
  return out;
}

}  // namespace spellfix
