#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtcm/atlas.hpp"
#include "mtcm/cm_structures.hpp"
#include "mtcm/finite_group.hpp"
#include "mtcm/mumford_tate.hpp"

namespace mtcm::io {

using Json = nlohmann::ordered_json;

// Parsed but unvalidated input file:
//   {"group": <spec>, "H": [elements] | {"generators": [...]}, "c": 3, "phi": [0, 1]}
// where <spec> is {"cyclic": n}, {"product": [<spec>...]}, {"perms": [[...]]},
// {"table": [[...]]}, {"dihedral": n} or {"dicyclic": n}, optionally with "name".
struct InputDocument {
  GroupSpec group;
  std::optional<std::vector<Element>> h_elements;
  std::optional<std::vector<Element>> h_generators;
  std::optional<Element> c;
  std::optional<std::vector<std::size_t>> phi;
};

GroupSpec parse_group_spec(const Json& j);
InputDocument parse_input(const std::string& text);
InputDocument load_input(const std::filesystem::path& path);

struct ResolvedInput {
  GroupPtr group;
  std::optional<CmFieldDatum> datum;  // present when "c" was given
  std::optional<CmType> type;         // present when "phi" was given
};

// Validates in order: group, H, datum, type. Throws the first failure.
ResolvedInput resolve(const InputDocument& doc, std::size_t order_cap);

std::size_t order_cap_from_env();

Json lattice_json(const IntegerLattice& lattice);
Json datum_json(const CmFieldDatum& datum);
Json reflex_json(const ReflexData& reflex);
Json mt_json(const CmType& t);
Json report_json(const MtReport& report);
Json weights_json(const WeightMultiset& weights);
Json records_json(const std::vector<AtlasRecord>& records);

// Stable text rendering shared by every --json output.
std::string render(const Json& j);

}  // namespace mtcm::io
