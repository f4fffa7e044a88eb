#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "knotcx/seifert.hpp"

namespace knotcx {

// {"kind": "knot"|"link", "size": m, "entries": [[...], ...]}, row-major.
// Malformed JSON or a wrong shape is a parse error; a well-formed matrix
// violating the knot invariants is a validation error.

inline SeifertMatrix seifert_from_json(const nlohmann::json& doc) {
  auto bad = [](const std::string& why) { fail(ErrorKind::parse_error, "Seifert JSON: " + why); };
  if (!doc.is_object()) bad("top level must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) bad("missing string field 'kind'");
  if (!doc.contains("size") || !doc["size"].is_number_integer()) bad("missing integer field 'size'");
  if (!doc.contains("entries") || !doc["entries"].is_array()) bad("missing array field 'entries'");

  const auto kind_text = doc["kind"].get<std::string>();
  SurfaceKind kind;
  if (kind_text == "knot")
    kind = SurfaceKind::knot;
  else if (kind_text == "link")
    kind = SurfaceKind::link;
  else
    bad("kind must be \"knot\" or \"link\", got \"" + kind_text + "\"");

  const auto size = doc["size"].get<long long>();
  if (size < 0) bad("size must be nonnegative");
  const auto& rows = doc["entries"];
  if (rows.size() != static_cast<std::size_t>(size)) bad("entries has " + std::to_string(rows.size()) + " rows, size says " + std::to_string(size));

  std::vector<SeifertMatrix::Entry> flat;
  flat.reserve(static_cast<std::size_t>(size * size));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(size))
      bad("row " + std::to_string(i) + " must be an array of " + std::to_string(size) + " integers");
    for (const auto& v : row) {
      if (!v.is_number_integer()) bad("row " + std::to_string(i) + " contains a non-integer entry");
      flat.push_back(v.get<SeifertMatrix::Entry>());
    }
  }
  return SeifertMatrix(kind, static_cast<std::size_t>(size), std::move(flat));
}

inline SeifertMatrix parse_seifert_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse_error, std::string("Seifert JSON: ") + e.what());
  }
  return seifert_from_json(doc);
}

inline SeifertMatrix load_seifert_json(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::parse_error, "cannot open Seifert matrix file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_seifert_json(buf.str());
}

inline nlohmann::json seifert_to_json(const SeifertMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return {{"kind", a.kind() == SurfaceKind::knot ? "knot" : "link"}, {"size", a.size()}, {"entries", rows}};
}

}  // namespace knotcx
