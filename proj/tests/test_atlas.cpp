#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"

#include "mtcm/atlas.hpp"
#include "mtcm/error.hpp"
#include "mtcm/mumford_tate.hpp"
#include "support/fixtures.hpp"

using namespace mtcm;

namespace {

std::vector<std::size_t> translate_phi(const CmType& t, Element s) {
  std::vector<std::size_t> out;
  for (std::size_t j : t.phi) out.push_back(t.datum.sigma.act(s, j));
  std::sort(out.begin(), out.end());
  return out;
}

CmFieldDatum cyclic_datum(std::size_t n) {
  auto g = make_group(cyclic(n));
  return validate_cm_datum(g, Subgroup(g, {0}), n / 2);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_cm_types(fixtures::iq().datum, false).size() == 2);
  CHECK(enumerate_cm_types(fixtures::iq().datum, true).size() == 1);
  CHECK(enumerate_cm_types(fixtures::c4().datum, false).size() == 4);
  CHECK(enumerate_cm_types(fixtures::c4().datum, true).size() == 1);
  CHECK(enumerate_cm_types(fixtures::c2xc4().datum, false).size() == 16);
  for (std::size_t g = 1; g <= 8; ++g)
    CHECK(enumerate_cm_types(cyclic_datum(2 * g), false).size() == (std::size_t{1} << g));
}

TEST_CASE("enumeration is sorted and valid") {
  const auto types = enumerate_cm_types(fixtures::d4().datum, false);
  for (std::size_t i = 1; i < types.size(); ++i) CHECK(types[i - 1].phi < types[i].phi);
  for (const auto& t : types) CHECK_NOTHROW(validate_cm_type(t.datum, t.phi));
}

TEST_CASE("enumeration cap on g") {
  try {
    enumerate_cm_types(cyclic_datum(2 * (kMaxEnumerationGDim + 1)), false);
    FAIL("no cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("dedupe keeps one representative per translation orbit") {
  for (const auto& d : fixtures::corpus_data(12)) {
    const auto all = enumerate_cm_types(d, false);
    const auto reps = enumerate_cm_types(d, true);
    std::set<std::vector<std::size_t>> rep_set;
    for (const auto& t : reps) rep_set.insert(t.phi);
    REQUIRE(rep_set.size() == reps.size());
    for (const auto& t : reps)
      for (Element s = 0; s < d.group->order(); ++s) {
        const auto moved = translate_phi(t, s);
        REQUIRE((moved == t.phi || !rep_set.contains(moved)));
      }
    for (const auto& t : all) {
      bool found = false;
      const std::size_t rank = mt_lattice(t).rank();
      for (Element s = 0; s < d.group->order() && !found; ++s) {
        const auto moved = translate_phi(t, s);
        if (rep_set.contains(moved)) {
          found = true;
          REQUIRE(mt_lattice(validate_cm_type(d, moved)).rank() == rank);
        }
      }
      REQUIRE(found);
    }
  }
}

TEST_CASE("family members") {
  CHECK(family_members(Family::Cyclic, 4).size() == 4);
  std::set<std::size_t> orders;
  for (const auto& s : family_members(Family::AbelianProducts, 16))
    orders.insert(make_group(s)->order());
  // C2xC2, C2xC4, C2^3, C3xC3, C2xC6, C2xC8, C4xC4, C2xC2xC4, C2^4
  CHECK(orders == std::set<std::size_t>{4, 8, 9, 12, 16});
  CHECK(family_members(Family::AbelianProducts, 16).size() == 9);
  CHECK(family_members(Family::Dihedral, 16).size() == 6);
  CHECK(family_members(Family::Dicyclic, 16).size() == 3);
  CHECK(parse_family("dihedral") == Family::Dihedral);
  CHECK(family_name(parse_family("abelian")) == "abelian-products");
  CHECK_THROWS_AS(parse_family("sporadic"), Error);
}

TEST_CASE("cyclic atlas up to order four") {
  AtlasOptions opt;
  opt.threads = 2;
  const auto records = tabulate_family(Family::Cyclic, 4, opt);
  REQUIRE(records.size() == 6);
  for (const auto& r : records) {
    CHECK(r.theorem);
    CHECK(r.factorization);
    CHECK(r.error.empty());
  }
  CHECK(records[0].group == "C2|H=0|c=1");
  CHECK(records[0].mt_rank == 2);
  CHECK(records[2].group == "C4|H=0|c=2");
  CHECK(records[2].phi == std::vector<std::size_t>{0, 1});
  CHECK(records[2].mt_rank == 3);
  CHECK(records[2].reflex_degree == 4);
}

TEST_CASE("dihedral atlas contains the D4 quartic") {
  AtlasOptions opt;
  opt.all_subfields = true;
  const auto records = tabulate_family(Family::Dihedral, 8, opt);
  bool seen = false;
  for (const auto& r : records) {
    CHECK(r.theorem);
    if (r.group == "D4|H=0+2|c=3" && r.phi == std::vector<std::size_t>{0, 1}) {
      seen = true;
      CHECK(r.mt_rank == 3);
      CHECK(r.reflex_degree == 4);
      CHECK(r.primitive);
      CHECK_FALSE(r.degenerate);
    }
  }
  CHECK(seen);
}

TEST_CASE("degenerate record") {
  const auto r = atlas_record(fixtures::c2xc4());
  CHECK(r.degenerate);
  CHECK_FALSE(r.primitive);
  CHECK(r.mt_rank == 2);
  CHECK(r.theorem);
}

TEST_CASE("csv is deterministic across thread counts") {
  AtlasOptions one;
  one.threads = 1;
  one.all_subfields = true;
  AtlasOptions many = one;
  many.threads = 8;
  const std::string a = atlas_csv(tabulate_family(Family::AbelianProducts, 12, one));
  const std::string b = atlas_csv(tabulate_family(Family::AbelianProducts, 12, many));
  CHECK(a == b);
  CHECK(a.starts_with(
      "group,order,g,phi,mt_rank,degenerate,reflex_degree,primitive,theorem,factorization,error\n"));
}

TEST_CASE("order bound above the cap") {
  AtlasOptions opt;
  opt.order_cap = 16;
  CHECK_THROWS_AS(tabulate_family(Family::Cyclic, 32, opt), Error);
}

TEST_CASE("encode_phi and csv escaping") {
  CHECK(encode_phi({0, 2, 5}) == "0+2+5");
  AtlasRecord r;
  r.group = "X";
  r.error = "a, b";
  const std::string csv = atlas_csv({r});
  CHECK(csv.find("a; b") != std::string::npos);
}

TEST_CASE("atomic file writes") {
  const auto dir = std::filesystem::temp_directory_path() / "mtcm_atlas_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  CHECK(slurp(path) == "second\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  try {
    write_file_atomic(dir / "missing" / "out.csv", "x");
    FAIL("wrote into a missing directory");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
  std::filesystem::remove_all(dir);
}
