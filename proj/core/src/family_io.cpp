#include "pftop/family_io.hpp"

#include <algorithm>
#include <optional>

#include <json.hpp>

#include "pftop/error.hpp"

namespace pftop {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorKind::SchemaError, msg); }

void require_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> keys) {
  if (!obj.is_object()) schema_error(std::string(where) + " must be an object");
  for (auto k : keys) {
    if (!obj.contains(std::string(k))) schema_error(std::string(where) + " is missing field '" + std::string(k) + "'");
  }
  for (const auto& [key, value] : obj.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      schema_error(std::string(where) + " has unknown field '" + key + "'");
    }
  }
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Grade read_grade(const json& obj, const char* key, const std::string& set, const std::string& element) {
  const json& v = obj.at(key);
  if (!v.is_string()) {
    schema_error("set '" + set + "', element '" + element + "': " + key + " must be a decimal string");
  }
  try {
    return grade_from_decimal(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.kind(),
                "set '" + set + "', element '" + element + "': " + key + ": " + e.message());
  }
}

PictureFuzzySet read_set(const json& values, const Universe& universe, const std::string& name) {
  if (!values.is_object()) schema_error("set '" + name + "': values must be an object");
  for (const auto& [label, value] : values.items()) {
    if (!universe.index_of(label)) {
      throw Error(ErrorKind::ValidationError, ErrorKind::UnknownElement,
                  "set '" + name + "', element '" + label + "': not in the universe");
    }
  }
  std::vector<MembershipTriple> triples;
  for (const auto& label : universe.labels()) {
    if (!values.contains(label)) {
      throw Error(ErrorKind::ValidationError, ErrorKind::LengthMismatch,
                  "set '" + name + "', element '" + label + "': no grades given");
    }
    const json& t = values.at(label);
    require_keys(t, "set '" + name + "', element '" + label + "'", {"mu", "rho", "sigma"});
    triples.push_back({read_grade(t, "mu", name, label), read_grade(t, "rho", name, label),
                       read_grade(t, "sigma", name, label)});
  }
  try {
    return PictureFuzzySet(universe, std::move(triples));
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.kind(), "set '" + name + "': " + e.message());
  }
}

}  // namespace

Family load_family(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    // drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix
    if (const auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw Error(ErrorKind::ParseError, location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + what);
  }

  require_keys(doc, "document", {"format_version", "universe", "sets"});
  if (doc["format_version"] != kFormatVersion) {
    schema_error("format_version must be \"" + std::string(kFormatVersion) + "\"");
  }

  const json& labels = doc["universe"];
  if (!labels.is_array() || !std::all_of(labels.begin(), labels.end(), [](const json& l) { return l.is_string(); })) {
    schema_error("universe must be an array of strings");
  }
  std::vector<std::string> names;
  for (const auto& l : labels) names.push_back(l.get<std::string>());
  std::optional<Universe> universe;
  try {
    universe.emplace(std::move(names));
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.kind(), "universe: " + e.message());
  }

  const json& sets = doc["sets"];
  if (!sets.is_array()) schema_error("sets must be an array");
  Family family(*universe);
  for (const auto& entry : sets) {
    require_keys(entry, "set entry", {"name", "values"});
    if (!entry["name"].is_string()) schema_error("set name must be a string");
    const auto name = entry["name"].get<std::string>();
    auto set = read_set(entry["values"], *universe, name);
    try {
      family.add(name, std::move(set));
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidationError, e.kind(), "set '" + name + "': " + e.message());
    }
  }
  return family;
}

std::string save_family(const Family& family) {
  json doc;
  doc["format_version"] = kFormatVersion;
  const auto labels = family.universe().labels();
  doc["universe"] = std::vector<std::string>(labels.begin(), labels.end());
  json sets = json::array();
  const Family sorted = family.sorted();
  for (const auto& m : sorted.members()) {
    json values = json::object();
    for (std::size_t i = 0; i < m.set.size(); ++i) {
      const auto& t = m.set[i];
      values[family.universe().label(i)] = {
          {"mu", to_decimal(t.mu)}, {"rho", to_decimal(t.rho)}, {"sigma", to_decimal(t.sigma)}};
    }
    sets.push_back({{"name", m.name}, {"values", std::move(values)}});
  }
  doc["sets"] = std::move(sets);
  return doc.dump(2) + "\n";
}

}  // namespace pftop
