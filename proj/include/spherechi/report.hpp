#pragma once

/**
 * @file report.hpp
 * @brief Flat result records and their table / CSV / JSON renderings.
 *
 * Doubles are printed in shortest round-trip form, so parsing an emitted
 * CSV or JSON reproduces the reported values bit for bit. Exact integers
 * travel as decimal strings in JSON.
 */

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace spherechi::report {

using Value = std::variant<std::string, double, std::int64_t, bool>;

struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  Record& add(std::string key, Value value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

enum class Format { Table, Csv, Json };

struct Report {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<Record> results;
  std::vector<std::string> warnings;
  std::string version = "0.1.0";
};

inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string to_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return std::to_string(x);
        }
      },
      v);
}

/// Integers become decimal strings in JSON, like the big ones that never fit a double.
inline nlohmann::ordered_json to_json(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

inline std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Columns are the union of record keys in first-seen order; missing cells are empty.
inline std::vector<std::string> columns(const Report& r) {
  std::vector<std::string> cols;
  for (const Record& rec : r.results) {
    for (const auto& [k, v] : rec.fields) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  return cols;
}

inline std::string cell(const Record& rec, const std::string& key) {
  for (const auto& [k, v] : rec.fields) {
    if (k == key) return to_text(v);
  }
  return {};
}

inline void write_csv(const Report& r, std::ostream& os) {
  const auto cols = columns(r);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
  os << '\n';
  for (const Record& rec : r.results) {
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cell(rec, cols[i]));
    os << '\n';
  }
}

inline void write_table(const Report& r, std::ostream& os) {
  const auto cols = columns(r);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const Record& rec : r.results) width[i] = std::max(width[i], cell(rec, cols[i]).size());
  }
  auto line = [&](auto get) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string text = get(i);
      os << (i ? "  " : "") << text << std::string(width[i] - text.size(), ' ');
    }
    os << '\n';
  };
  line([&](std::size_t i) { return cols[i]; });
  line([&](std::size_t i) { return std::string(width[i], '-'); });
  for (const Record& rec : r.results) line([&](std::size_t i) { return cell(rec, cols[i]); });
  for (const std::string& w : r.warnings) os << "warning: " << w << '\n';
}

inline void write_json(const Report& r, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["config"] = r.config;
  doc["results"] = nlohmann::ordered_json::array();
  for (const Record& rec : r.results) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.fields) obj[k] = to_json(v);
    doc["results"].push_back(std::move(obj));
  }
  doc["warnings"] = r.warnings;
  doc["version"] = r.version;
  os << doc.dump(2) << '\n';
}

inline void emit(const Report& r, Format f, std::ostream& os) {
  switch (f) {
    case Format::Table: write_table(r, os); break;
    case Format::Csv: write_csv(r, os); break;
    case Format::Json: write_json(r, os); break;
  }
}

/// Splits one CSV line, honouring double-quoted cells.
inline std::vector<std::string> parse_csv_line(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace spherechi::report
