#include "mtcm/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mtcm/error.hpp"

namespace mtcm::io {

namespace {

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("field '") + what + "': " + e.what());
  }
}

std::size_t non_negative(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(ErrorCode::ParseError, std::string("field '") + what + "' must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string("field '") + what + "' must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(non_negative(x, what));
  return out;
}

}  // namespace

GroupSpec parse_group_spec(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "group spec must be an object");
  GroupSpec spec;
  std::size_t kinds = 0;
  for (const auto& [key, value] : j.items()) {
    if (key == "name") {
      spec.name = get_as<std::string>(value, "name");
      continue;
    }
    ++kinds;
    if (key == "cyclic") {
      spec.kind = CyclicSpec{non_negative(value, "cyclic")};
    } else if (key == "dihedral") {
      GroupSpec d = dihedral(non_negative(value, "dihedral"));
      spec.kind = d.kind;
      if (spec.name.empty()) spec.name = d.name;
    } else if (key == "dicyclic") {
      GroupSpec d = dicyclic(non_negative(value, "dicyclic"));
      spec.kind = d.kind;
      if (spec.name.empty()) spec.name = d.name;
    } else if (key == "product") {
      if (!value.is_array()) fail(ErrorCode::ParseError, "'product' must be an array of group specs");
      ProductSpec p;
      for (const auto& f : value) p.factors.push_back(parse_group_spec(f));
      spec.kind = std::move(p);
    } else if (key == "perms") {
      if (!value.is_array()) fail(ErrorCode::ParseError, "'perms' must be an array of permutations");
      PermutationSpec p;
      for (const auto& g : value) p.generators.push_back(index_list(g, "perms"));
      spec.kind = std::move(p);
    } else if (key == "table") {
      if (!value.is_array()) fail(ErrorCode::ParseError, "'table' must be an array of rows");
      TableSpec t;
      for (const auto& row : value) t.table.push_back(index_list(row, "table"));
      spec.kind = std::move(t);
    } else {
      fail(ErrorCode::ParseError, "unknown group spec key '" + key + "'");
    }
  }
  if (kinds != 1)
    fail(ErrorCode::ParseError, "group spec must have exactly one of cyclic, product, perms, "
                                "table, dihedral, dicyclic");
  return spec;
}

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) fail(ErrorCode::ParseError, "input must be a JSON object");
  if (!j.contains("group")) fail(ErrorCode::ParseError, "missing field 'group'");

  InputDocument doc;
  doc.group = parse_group_spec(j.at("group"));
  if (j.contains("H")) {
    const Json& h = j.at("H");
    if (h.is_array()) {
      auto elems = index_list(h, "H");
      std::sort(elems.begin(), elems.end());
      doc.h_elements = std::move(elems);
    } else if (h.is_object() && h.contains("generators")) {
      doc.h_generators = index_list(h.at("generators"), "H.generators");
    } else {
      fail(ErrorCode::ParseError, "'H' must be an element list or {\"generators\": [...]}");
    }
  }
  if (j.contains("c")) doc.c = non_negative(j.at("c"), "c");
  if (j.contains("phi")) doc.phi = index_list(j.at("phi"), "phi");
  for (const auto& [key, value] : j.items())
    if (key != "group" && key != "H" && key != "c" && key != "phi")
      fail(ErrorCode::ParseError, "unknown field '" + key + "'");
  return doc;
}

InputDocument load_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

ResolvedInput resolve(const InputDocument& doc, std::size_t order_cap) {
  ResolvedInput out;
  out.group = make_group(doc.group, order_cap);
  const GroupPtr& g = out.group;
  std::optional<Subgroup> h;
  if (doc.h_elements) {
    h.emplace(g, *doc.h_elements);
  } else if (doc.h_generators) {
    h.emplace(subgroup_closure(g, *doc.h_generators));
  } else {
    h.emplace(g, std::vector<Element>{g->identity()});
  }
  if (!doc.c) {
    if (doc.phi) fail(ErrorCode::ParseError, "'phi' given without complex conjugation 'c'");
    return out;
  }
  out.datum = validate_cm_datum(g, *h, *doc.c);
  if (doc.phi) out.type = validate_cm_type(*out.datum, *doc.phi);
  return out;
}

std::size_t order_cap_from_env() {
  const char* v = std::getenv("MTCM_ORDER_CAP");
  if (v == nullptr || *v == '\0') return kDefaultOrderCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0)
    fail(ErrorCode::ParseError, std::string("MTCM_ORDER_CAP must be a positive integer, got '") +
                                    v + "'");
  return static_cast<std::size_t>(cap);
}

Json lattice_json(const IntegerLattice& lattice) {
  Json rows = Json::array();
  for (const auto& r : lattice.basis().to_rows()) rows.push_back(r);
  return rows;
}

Json datum_json(const CmFieldDatum& datum) {
  Json j;
  j["group"] = datum.group->description();
  j["order"] = datum.group->order();
  j["H"] = datum.h.elements();
  j["c"] = datum.c;
  j["g"] = datum.g_dim;
  j["coset_reps"] = datum.sigma.reps();
  return j;
}

Json reflex_json(const ReflexData& reflex) {
  Json j;
  j["H_E"] = reflex.h_e.elements();
  j["reflex_degree"] = reflex.reflex_degree;
  j["phi_E"] = reflex.phi_e.phi;
  j["phi_E_coset_reps"] = reflex.phi_e.datum.sigma.reps();
  j["phi_k"] = reflex.phi_k;
  j["phi_k_inverse"] = reflex.phi_k_inverse;
  return j;
}

Json mt_json(const CmType& t) {
  const IntegerLattice mt = mt_lattice(t);
  const auto descent = primitive_descent(t);
  Json j = datum_json(t.datum);
  j["phi"] = t.phi;
  j["mu"] = hodge_cocharacter(t);
  j["mt_rank"] = mt.rank();
  j["mt_lattice"] = lattice_json(mt);
  j["degenerate"] = mt.rank() < t.datum.g_dim + 1;
  j["degeneracy_convention"] = "mt_rank < g + 1";
  j["primitive"] = !descent.has_value();
  if (descent) {
    j["descent"] = Json{{"H", descent->h_prime.elements()}, {"phi", descent->type.phi}};
  } else {
    j["descent"] = nullptr;
  }
  return j;
}

Json report_json(const MtReport& report) {
  Json j = datum_json(report.cm_type.datum);
  j["phi"] = report.cm_type.phi;
  j["mu"] = hodge_cocharacter(report.cm_type);
  j["mt_rank"] = report.mt_rank;
  j["degenerate"] = report.degenerate;
  j["degeneracy_convention"] = "mt_rank < g + 1";
  j["mt_lattice"] = lattice_json(report.mt_lattice);
  j["t0_lattice"] = lattice_json(report.t0_lattice);
  j["reflex"] = reflex_json(report.reflex);
  j["theorem_holds"] = report.theorem_holds;
  j["factorization_holds"] = report.factorization_holds;
  j["column_identity_holds"] = report.column_identity_holds;
  j["violations"] = report.violations;
  return j;
}

Json weights_json(const WeightMultiset& weights) {
  Json j;
  j["m"] = weights.m;
  j["n"] = weights.n;
  j["r"] = weights.r;
  j["total"] = weights.total();
  Json entries = Json::array();
  for (const auto& [w, mult] : weights.entries)
    entries.push_back(Json{{"weight", w}, {"multiplicity", mult}});
  j["entries"] = std::move(entries);
  return j;
}

Json records_json(const std::vector<AtlasRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    Json j;
    j["group"] = r.group;
    j["order"] = r.order;
    j["g"] = r.g;
    j["phi"] = r.phi;
    j["mt_rank"] = r.mt_rank;
    j["degenerate"] = r.degenerate;
    j["reflex_degree"] = r.reflex_degree;
    j["primitive"] = r.primitive;
    j["theorem"] = r.theorem;
    j["factorization"] = r.factorization;
    j["error"] = r.error;
    out.push_back(std::move(j));
  }
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mtcm::io
