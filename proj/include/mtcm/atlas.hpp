#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "mtcm/cm_structures.hpp"
#include "mtcm/finite_group.hpp"

namespace mtcm {

inline constexpr std::size_t kMaxEnumerationGDim = 20;

// All CM types on the datum in lexicographic order of phi; with dedupe, only the
// lexicographically least member of each left-translation orbit.
std::vector<CmType> enumerate_cm_types(const CmFieldDatum& datum, bool dedupe);

enum class Family { Cyclic, AbelianProducts, Dihedral, Dicyclic };

Family parse_family(const std::string& name);
std::string family_name(Family family);

// Group specs of the family with order <= bound, in ascending order.
std::vector<GroupSpec> family_members(Family family, std::size_t order_bound);

struct AtlasOptions {
  bool dedupe = false;
  bool all_subfields = false;  // H over all subgroups instead of the trivial one
  std::size_t threads = 0;     // 0 = hardware concurrency
  std::size_t order_cap = kDefaultOrderCap;
};

// Every admissible (G, H, c) for G under the subgroup policy.
std::vector<CmFieldDatum> admissible_data(const GroupPtr& group, bool all_subfields);

std::string datum_description(const CmFieldDatum& datum);

struct AtlasRecord {
  std::string group;
  std::size_t order = 0;
  std::size_t g = 0;
  std::vector<std::size_t> phi;
  std::size_t mt_rank = 0;
  bool degenerate = false;
  std::size_t reflex_degree = 0;
  bool primitive = false;
  bool theorem = false;
  bool factorization = false;
  std::string error;  // empty when the record computed cleanly
};

AtlasRecord atlas_record(const CmType& t);

std::vector<AtlasRecord> tabulate_data(const std::vector<CmFieldDatum>& data,
                                       const AtlasOptions& options);
std::vector<AtlasRecord> tabulate_family(Family family, std::size_t order_bound,
                                         const AtlasOptions& options);

std::string encode_phi(const std::vector<std::size_t>& phi);
std::string atlas_csv(const std::vector<AtlasRecord>& records);

// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace mtcm
