#include "css/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "css/error.hpp"

namespace css {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedDocument, what);
}

const json& field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

UnitRational value_at(const json& v, const std::string& what, const std::string& param,
                      const std::string& element) {
  if (!v.is_string()) {
    throw Error(ErrorKind::MalformedDocument, what + " must be a decimal or n/m string", param,
                element);
  }
  try {
    return parse_unit_value(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.kind(), what + " '" + v.get<std::string>() + "'", param, element);
  }
}

CubicGrade grade_at(const json& cell, const std::string& param, const std::string& element) {
  if (!cell.is_object()) throw Error(ErrorKind::MalformedDocument, "grade must be an object", param, element);
  const auto ivf = cell.find("ivf");
  const auto fuzzy = cell.find("fuzzy");
  if (ivf == cell.end() || fuzzy == cell.end() || cell.size() != 2) {
    throw Error(ErrorKind::MalformedDocument, "grade needs exactly 'ivf' and 'fuzzy'", param, element);
  }
  if (!ivf->is_array() || ivf->size() != 2) {
    throw Error(ErrorKind::MalformedDocument, "ivf must be a two-element array", param, element);
  }
  const auto lo = value_at((*ivf)[0], "ivf lower bound", param, element);
  const auto hi = value_at((*ivf)[1], "ivf upper bound", param, element);
  const auto d = value_at(*fuzzy, "fuzzy degree", param, element);
  try {
    return make_grade(lo, hi, d);
  } catch (const Error& e) {
    throw Error(e.kind(), "[" + lo.to_string() + "," + hi.to_string() + "] has lo > hi", param,
                element);
  }
}

}  // namespace

CubicSoftSet from_json(const json& doc) {
  if (!doc.is_object()) malformed("document must be an object");
  const auto& version = field(doc, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    malformed("schema_version must be \"1\"");
  }
  for (const auto& [k, v] : doc.items()) {
    if (k != "schema_version" && k != "universe" && k != "parameters" && k != "grades") {
      malformed("unexpected field '" + k + "'");
    }
  }

  const auto& uni = field(doc, "universe");
  if (!uni.is_array()) malformed("universe must be an array");
  std::vector<std::string> universe;
  for (const auto& x : uni) {
    if (!x.is_string()) malformed("universe entries must be strings");
    universe.push_back(x.get<std::string>());
  }

  const auto& ps = field(doc, "parameters");
  if (!ps.is_array()) malformed("parameters must be an array");
  std::vector<ParameterId> params;
  for (const auto& p : ps) {
    if (!p.is_object()) malformed("parameter must be an object");
    const auto& name = field(p, "name");
    const auto& neg = field(p, "negated");
    if (!name.is_string() || !neg.is_boolean() || p.size() != 2) {
      malformed("parameter must be {name: string, negated: boolean}");
    }
    params.push_back(ParameterId{name.get<std::string>(), neg.get<bool>()});
  }

  const auto& gs = field(doc, "grades");
  if (!gs.is_object()) malformed("grades must be an object");

  // duplicate labels are reported before anything in the table
  CubicSoftSet(universe, params,
               std::vector<CubicGrade>(universe.size() * params.size(),
                                       make_grade(UnitRational::zero(), UnitRational::zero(),
                                                  UnitRational::zero())));

  std::map<std::string, std::size_t> param_index;
  for (std::size_t i = 0; i < params.size(); ++i) param_index.emplace(params[i].key(), i);
  std::map<std::string, std::size_t> element_index;
  for (std::size_t i = 0; i < universe.size(); ++i) element_index.emplace(universe[i], i);

  for (const auto& [key, row] : gs.items()) {
    if (!param_index.contains(key)) {
      throw Error(ErrorKind::UnknownParameter, "grades name parameter '" + key + "' not in parameters");
    }
    if (!row.is_object()) malformed("grades['" + key + "'] must be an object");
    for (const auto& [x, cell] : row.items()) {
      if (!element_index.contains(x)) {
        throw Error(ErrorKind::UnknownElement, "element not in universe", key, x);
      }
    }
  }

  std::vector<CubicGrade> grades;
  grades.reserve(universe.size() * params.size());
  for (const auto& p : params) {
    const auto key = p.key();
    const auto row = gs.find(key);
    for (const auto& x : universe) {
      if (row == gs.end() || !row->contains(x)) {
        throw Error(ErrorKind::MissingGrade, "no grade", key, x);
      }
      grades.push_back(grade_at(row->at(x), key, x));
    }
  }
  return CubicSoftSet(std::move(universe), std::move(params), std::move(grades));
}

CubicSoftSet load_cubic_soft_set(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedJson, e.what());
  }
  return from_json(doc);
}

json to_json(const CubicSoftSet& set) {
  json doc = json::object();
  doc["schema_version"] = std::string(kSchemaVersion);
  doc["universe"] = json::array();
  for (const auto& x : set.universe()) doc["universe"].push_back(x);
  doc["parameters"] = json::array();
  json grades = json::object();
  for (std::size_t p = 0; p < set.parameter_count(); ++p) {
    const auto& id = set.parameters()[p];
    doc["parameters"].push_back({{"name", id.name}, {"negated", id.negated}});
    json row = json::object();
    for (std::size_t x = 0; x < set.universe_size(); ++x) {
      const auto& g = set.at(p, x);
      row[set.universe()[x]] = {{"ivf", {g.ivf.lo().to_string(), g.ivf.hi().to_string()}},
                                {"fuzzy", g.fuzzy.to_string()}};
    }
    grades[id.key()] = std::move(row);
  }
  doc["grades"] = std::move(grades);
  return doc;
}

std::string serialize(const CubicSoftSet& set) { return to_json(set).dump(2) + "\n"; }

CubicSoftSet load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_cubic_soft_set(buf.str());
}

void save_file(const CubicSoftSet& set, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize(set);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace css
