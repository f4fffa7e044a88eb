#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotcx/rational.hpp"
#include "knotcx/seifert.hpp"
#include "knotcx/seifert_json.hpp"

namespace knotcx::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, invalid_input = 2, uncertified = 3 };

inline int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::internal_inconsistency ? verify_failed : invalid_input;
}

/// "unknot", "torus2:<n>", "jn:<n>" or "file:<path>".
struct KnotSpec {
  std::string text;
  KnotFamilyId id;
  std::string path;  // custom only

  static KnotSpec parse(std::string_view s) {
    KnotSpec out;
    out.text = std::string(s);
    auto bad = [&](std::size_t pos, const std::string& why) {
      fail(ErrorKind::parse_error, "knot spec '" + out.text + "' at position " + std::to_string(pos) + ": " + why);
    };
    if (s == "unknot") return out;
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) bad(0, "expected unknot, torus2:<n>, jn:<n> or file:<path>");
    const auto head = s.substr(0, colon), tail = s.substr(colon + 1);
    if (head == "file") {
      if (tail.empty()) bad(colon + 1, "empty path");
      out.id.family = KnotFamily::custom;
      out.path = std::string(tail);
      return out;
    }
    if (head == "torus2")
      out.id.family = KnotFamily::torus2;
    else if (head == "jn")
      out.id.family = KnotFamily::jn;
    else
      bad(0, "unknown family '" + std::string(head) + "'");
    if (tail.empty()) bad(colon + 1, "missing parameter");
    long value = 0;
    const auto [end, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
    if (ec != std::errc() || end != tail.data() + tail.size())
      bad(colon + 1 + static_cast<std::size_t>(end - tail.data()), "parameter must be an integer");
    out.id.parameter = value;
    return out;
  }

  SeifertMatrix load() const {
    if (id.family == KnotFamily::custom) return load_seifert_json(path);
    return make_seifert(id);
  }
};

/// Flat key/value row. Rationals keep their exact text; decimals are advisory.
class Record {
 public:
  using Value = std::variant<std::string, long long, Rational, bool, double>;

  Record& set(std::string key, Value v) {
    for (auto& [k, old] : fields_)
      if (k == key) {
        old = std::move(v);
        return *this;
      }
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  Record& set(std::string key, const char* v) { return set(std::move(key), Value(std::string(v))); }
  Record& set(std::string key, long v) { return set(std::move(key), Value(static_cast<long long>(v))); }
  Record& set(std::string key, bool v) { return set(std::move(key), Value(v)); }
  Record& set(std::string key, double v) { return set(std::move(key), Value(v)); }
  Record& set(std::string key, int v) { return set(std::move(key), Value(static_cast<long long>(v))); }
  Record& set(std::string key, std::size_t v) { return set(std::move(key), Value(static_cast<long long>(v))); }
  Record& set(std::string key, const Integer& v) { return set(std::move(key), Value(Rational(v))); }

  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }

  std::vector<std::string> keys() const {
    std::vector<std::string> out;
    for (const auto& f : fields_) out.push_back(f.first);
    return out;
  }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

inline std::string exact_text(const Record::Value& v) {
  struct {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(const Rational& q) const { return to_string(q); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(double x) const {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", x);
      return buf;
    }
  } visit;
  return std::visit(visit, v);
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

enum class Format { table, csv, json };

inline Format parse_format(std::string_view s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  fail(ErrorKind::parse_error, "format must be table, csv or json, got '" + std::string(s) + "'");
}

/// CSV carries exact values only, one header row; JSON lines add
/// "<key>_decimal" next to each rational; the table shows both.
class Emitter {
 public:
  Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}
  Emitter(const Emitter&) = delete;
  Emitter& operator=(const Emitter&) = delete;
  ~Emitter() { finish(); }

  void emit(const Record& r) {
    switch (format_) {
      case Format::json: emit_json(r); break;
      case Format::csv: emit_csv(r); break;
      case Format::table: rows_.push_back(r); break;
    }
  }

  void finish() {
    if (format_ != Format::table || rows_.empty()) return;
    if (rows_.size() == 1)
      print_vertical(rows_.front());
    else
      print_columns();
    rows_.clear();
    out_.flush();
  }

 private:
  void emit_json(const Record& r) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields()) {
      if (const auto* q = std::get_if<Rational>(&v)) {
        o[k] = to_string(*q);
        o[k + "_decimal"] = to_decimal(*q);
      } else if (const auto* b = std::get_if<bool>(&v)) {
        o[k] = *b;
      } else if (const auto* i = std::get_if<long long>(&v)) {
        o[k] = *i;
      } else {
        o[k] = exact_text(v);
      }
    }
    out_ << o.dump() << '\n';
    out_.flush();
  }

  void emit_csv(const Record& r) {
    const auto keys = r.keys();
    if (!header_) {
      header_ = keys;
      write_csv_row(keys);
    } else {
      require(*header_ == keys, ErrorKind::internal_inconsistency, "CSV rows must share one header");
    }
    std::vector<std::string> cells;
    for (const auto& f : r.fields()) cells.push_back(exact_text(f.second));
    write_csv_row(cells);
  }

  void write_csv_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_cell(cells[i]);
    out_ << "\r\n";
  }

  static std::string table_text(const Record::Value& v) {
    if (const auto* q = std::get_if<Rational>(&v); q && q->get_den() != 1) return to_string(*q) + " (" + to_decimal(*q) + ")";
    return exact_text(v);
  }

  void print_vertical(const Record& r) {
    std::size_t w = 0;
    for (const auto& f : r.fields()) w = std::max(w, f.first.size());
    for (const auto& [k, v] : r.fields()) out_ << k << std::string(w - k.size() + 2, ' ') << table_text(v) << '\n';
  }

  void print_columns() {
    const auto keys = rows_.front().keys();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> w;
    for (const auto& k : keys) w.push_back(k.size());
    for (const auto& r : rows_) {
      std::vector<std::string> row;
      for (std::size_t i = 0; i < r.fields().size() && i < keys.size(); ++i) {
        row.push_back(exact_text(r.fields()[i].second));
        w[i] = std::max(w[i], row.back().size());
      }
      cells.push_back(std::move(row));
    }
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out_ << row[i];
        if (i + 1 < row.size()) out_ << std::string(w[i] - row[i].size() + 2, ' ');
      }
      out_ << '\n';
    };
    line(keys);
    for (const auto& row : cells) line(row);
  }

  Format format_;
  std::ostream& out_;
  std::optional<std::vector<std::string>> header_;
  std::vector<Record> rows_;
};

}  // namespace knotcx::cli
