#include "braceforge/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace braceforge::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  fail(Errc::schema_error, path + ": " + msg);
}

const json& need(const json& j, const char* key, const std::string& at) {
  if (!j.is_object() || !j.contains(key)) schema(at + "/" + key, "missing");
  return j.at(key);
}

std::vector<Elem> elem_array(const json& j, const std::string& at) {
  if (!j.is_array()) schema(at, "expected an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& v = j[i];
    if (!v.is_number_integer() || v.get<long long>() < 0)
      schema(at + "/" + std::to_string(i), "expected a nonnegative integer");
    out.push_back(v.get<Elem>());
  }
  return out;
}

} // namespace

std::string canon(const json& j) { return j.dump() + "\n"; }

json parse(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) schema(what, "not valid JSON");
  return j;
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema(path, "cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse(text, path);
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) schema(path, "cannot open file for writing");
  out << canon(j);
}

// ---- groups ---------------------------------------------------------------

json group_json(const FiniteGroup& g) {
  const std::size_t n = g.order();
  json table = json::array();
  for (Elem a = 0; a < n; ++a) {
    json row = json::array();
    for (Elem b = 0; b < n; ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  json out{{"order", n}, {"identity", 0}, {"table", std::move(table)}};
  if (g.has_names()) out["names"] = g.names();
  return out;
}

GroupPtr group_from_json(const json& j, const std::string& base_dir) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    return load_group(p.string());
  }
  const std::size_t n = need(j, "order", "group").get<std::size_t>();
  const auto& table = need(j, "table", "group");
  if (!table.is_array() || table.size() != n) schema("group/table", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Elem>> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) rows.push_back(elem_array(table[r], "group/table/" + std::to_string(r)));
  std::vector<std::string> names;
  if (j.contains("names")) {
    const auto& jn = j.at("names");
    if (!jn.is_array() || jn.size() != n) schema("group/names", "expected " + std::to_string(n) + " strings");
    for (const auto& s : jn) names.push_back(s.get<std::string>());
  }
  if (j.contains("identity") && need(j, "identity", "group").get<Elem>() != 0)
    schema("group/identity", "identity must be element 0 in files");
  return build_group(rows, std::move(names));
}

GroupPtr load_group(const std::string& path) {
  const json j = read_file(path);
  const std::string dir = std::filesystem::path(path).parent_path().string();
  return group_from_json(j, dir);
}

// ---- maps -------------------------------------------------------------------

json map_json(const GroupMap& m) {
  return json{{"group", group_json(*m.source)}, {"images", m.images}};
}

GroupMap map_from_json(const json& j, const std::string& base_dir) {
  GroupPtr g = group_from_json(need(j, "group", "map"), base_dir);
  std::vector<Elem> images = elem_array(need(j, "images", "map"), "map/images");
  if (images.size() != g->order()) schema("map/images", "length differs from the group order");
  for (Elem v : images)
    if (v >= g->order()) schema("map/images", "image out of range");
  return {g, g, std::move(images)};
}

json rb_json(const RotaBaxterOperator& b) {
  return json{{"group", group_json(*b.group)}, {"images", b.images}};
}

// ---- gamma ------------------------------------------------------------------

json gamma_json(const GammaFunction& gamma) {
  return json{{"group", group_json(*gamma.group)}, {"action", gamma.action}};
}

GammaFunction gamma_from_json(const json& j, const std::string& base_dir) {
  GroupPtr g = group_from_json(need(j, "group", "gamma"), base_dir);
  const auto& ja = need(j, "action", "gamma");
  if (!ja.is_array() || ja.size() != g->order()) schema("gamma/action", "wrong number of rows");
  GammaFunction gamma{g, {}, false};
  gamma.action.reserve(g->order());
  for (std::size_t r = 0; r < ja.size(); ++r) {
    auto row = elem_array(ja[r], "gamma/action/" + std::to_string(r));
    if (row.size() != g->order()) schema("gamma/action/" + std::to_string(r), "wrong row length");
    gamma.action.push_back(std::move(row));
  }
  return gamma;
}

// ---- cocycles -----------------------------------------------------------------

json cocycle_json(const TwoCocycle& theta) {
  const std::size_t n = theta.base->order();
  json values = json::array();
  for (Elem a = 0; a < n; ++a) {
    json row = json::array();
    for (Elem b = 0; b < n; ++b) row.push_back(theta.at(a, b));
    values.push_back(std::move(row));
  }
  json coeff{{"prime", theta.coeff->prime}, {"rank", theta.coeff->rank},
             {"basis", theta.coeff->basis}};
  return json{{"base", group_json(*theta.base)}, {"coeff", std::move(coeff)},
              {"values", std::move(values)}};
}

TwoCocycle cocycle_from_json(const json& j, const std::string& base_dir) {
  GroupPtr base = group_from_json(need(j, "base", "cocycle"), base_dir);
  const auto& jc = need(j, "coeff", "cocycle");
  const unsigned prime = need(jc, "prime", "cocycle/coeff").get<unsigned>();
  unsigned rank = 0;
  if (jc.contains("rank")) {
    rank = jc.at("rank").get<unsigned>();
  } else {
    rank = static_cast<unsigned>(need(jc, "basis", "cocycle/coeff").size());
  }
  CoeffPtr coeff = make_abstract_coefficient_group(prime, rank);
  const auto& jv = need(j, "values", "cocycle");
  const std::size_t n = base->order();
  if (!jv.is_array() || jv.size() != n) schema("cocycle/values", "wrong number of rows");
  TwoCocycle theta{base, coeff, {}};
  theta.values.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = elem_array(jv[r], "cocycle/values/" + std::to_string(r));
    if (row.size() != n) schema("cocycle/values/" + std::to_string(r), "wrong row length");
    for (Elem v : row) {
      if (v >= coeff->size()) schema("cocycle/values", "value outside the coefficient group");
      theta.values.push_back(v);
    }
  }
  const TripleVerdict v = check_cocycle(theta);
  if (!v.holds)
    fail(Errc::not_associative, "cocycle identity fails at (" + std::to_string(v.g) + "," +
                                    std::to_string(v.h) + "," + std::to_string(v.k) + ")");
  return theta;
}

LoadedObject load_object(const std::string& path) {
  const json j = read_file(path);
  const std::string dir = std::filesystem::path(path).parent_path().string();
  LoadedObject out;
  if (j.is_object() && j.contains("table")) {
    out.kind = LoadedObject::Kind::group;
    out.group = group_from_json(j, dir);
  } else if (j.is_object() && j.contains("action")) {
    out.kind = LoadedObject::Kind::gamma;
    out.gamma = gamma_from_json(j, dir);
  } else if (j.is_object() && j.contains("values")) {
    out.kind = LoadedObject::Kind::cocycle;
    out.cocycle = cocycle_from_json(j, dir);
  } else if (j.is_object() && j.contains("images")) {
    out.kind = LoadedObject::Kind::map;
    out.map = map_from_json(j, dir);
  } else {
    schema(path, "no recognized object shape (table/action/values/images)");
  }
  return out;
}

// ---- verdicts -----------------------------------------------------------------

json brace_report_json(const TripleVerdict& v) {
  json out{{"skew_brace", v.holds}};
  if (v.holds)
    out["witness"] = nullptr;
  else
    out["witness"] = json::array({v.g, v.h, v.k});
  return out;
}

json certificate_json(const CoboundarySolve& solve, const Obstruction* obstruction) {
  json out;
  out["trivial"] = solve.solvable;
  if (solve.solvable) {
    out["sigma"] = solve.sigma.sigma;
    out["witness_row"] = nullptr;
    out["row_combination"] = nullptr;
    out["residual"] = nullptr;
  } else {
    out["sigma"] = nullptr;
    out["witness_row"] = json::array({solve.row_g, solve.row_h});
    json combo = json::array();
    for (const auto& [row, coeff] : solve.certificate.rows)
      combo.push_back(json::array({row, coeff}));
    out["row_combination"] = std::move(combo);
    out["residual"] = solve.certificate.residual;
  }
  if (obstruction && obstruction->nontrivial)
    out["obstruction_witness"] = obstruction->witness;
  else
    out["obstruction_witness"] = nullptr;
  return out;
}

} // namespace braceforge::io
