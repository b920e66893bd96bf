#include "doctest.h"

#include "mtcm/error.hpp"
#include "mtcm/io.hpp"
#include "support/fixtures.hpp"

using namespace mtcm;
using io::Json;

namespace {

const std::filesystem::path kData = MTCM_TEST_DATA_DIR;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mtcm::Error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("group spec variants") {
  CHECK(make_group(io::parse_group_spec(Json::parse(R"({"cyclic": 6})")))->order() == 6);
  CHECK(make_group(io::parse_group_spec(Json::parse(R"({"dihedral": 4})")))->order() == 8);
  CHECK(make_group(io::parse_group_spec(Json::parse(R"({"dicyclic": 2})")))->description() ==
        "Q8");
  auto p = make_group(io::parse_group_spec(Json::parse(R"({"product": [{"cyclic": 2}, {"cyclic": 4}]})")));
  CHECK(p->order() == 8);
  CHECK(p->description() == "C2xC4");
  auto perms = make_group(
      io::parse_group_spec(Json::parse(R"({"perms": [[1,2,3,0],[0,3,2,1]], "name": "D4"})")));
  CHECK(*perms == *fixtures::d4_group());
  CHECK(perms->description() == "D4");
  auto tbl = make_group(io::parse_group_spec(Json::parse(R"({"table": [[0,1],[1,0]]})")));
  CHECK(tbl->order() == 2);
}

TEST_CASE("parse errors") {
  const auto parse_err = [](const std::string& text) {
    return code_of([&] { io::parse_input(text); });
  };
  CHECK(parse_err("{") == ErrorCode::ParseError);
  CHECK(parse_err("[]") == ErrorCode::ParseError);
  CHECK(parse_err(R"({"c": 1})") == ErrorCode::ParseError);
  CHECK(parse_err(R"({"group": {"cyclic": 2}, "extra": 1})") == ErrorCode::ParseError);
  CHECK(parse_err(R"({"group": {"cyclic": 2, "dihedral": 3}})") == ErrorCode::ParseError);
  CHECK(parse_err(R"({"group": {"cyclic": -2}})") == ErrorCode::ParseError);
  CHECK(parse_err(R"({"group": {"cyclic": 2}, "phi": "0"})") == ErrorCode::ParseError);
  CHECK(parse_err(R"({"group": {"cyclic": 2}, "H": {"gens": [0]}})") == ErrorCode::ParseError);
  CHECK(code_of([] { io::load_input(kData / "does_not_exist.json"); }) == ErrorCode::IoError);
}

TEST_CASE("H given by generators") {
  const auto doc = io::parse_input(
      R"({"group": {"dihedral": 4}, "H": {"generators": [2]}, "c": 3, "phi": [0, 1]})");
  const auto in = io::resolve(doc, kDefaultOrderCap);
  REQUIRE(in.type.has_value());
  CHECK(in.datum->h.elements() == std::vector<Element>{0, 2});
  CHECK(check_main_theorem(*in.type).mt_rank == 3);
}

TEST_CASE("H defaults to the trivial subgroup") {
  const auto in = io::resolve(io::parse_input(R"({"group": {"cyclic": 4}, "c": 2})"),
                              kDefaultOrderCap);
  REQUIRE(in.datum.has_value());
  CHECK(in.datum->h.size() == 1);
  CHECK_FALSE(in.type.has_value());
}

TEST_CASE("fixture files resolve") {
  struct Case {
    const char* file;
    std::size_t rank;
  };
  for (const auto& [file, rank] :
       {Case{"iq.json", 2}, Case{"c4.json", 3}, Case{"c2xc4.json", 2}, Case{"d4.json", 3}}) {
    const auto in = io::resolve(io::load_input(kData / file), kDefaultOrderCap);
    REQUIRE(in.type.has_value());
    CHECK(check_main_theorem(*in.type).mt_rank == rank);
  }
  CHECK(code_of([] { io::resolve(io::load_input(kData / "bad_involution.json"), kDefaultOrderCap); }) ==
        ErrorCode::NotInvolution);
  CHECK(code_of([] { io::resolve(io::load_input(kData / "bad_phi.json"), kDefaultOrderCap); }) ==
        ErrorCode::NotDisjointFromConjugate);
  CHECK(code_of([] {
          io::resolve(io::parse_input(R"({"group": {"cyclic": 600}})"), kDefaultOrderCap);
        }) == ErrorCode::OrderCapExceeded);
}

TEST_CASE("report json shape and round trip") {
  const Json j = io::report_json(check_main_theorem(fixtures::d4()));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"group", "order", "H", "c", "g", "coset_reps", "phi",
                                         "mu", "mt_rank", "degenerate", "degeneracy_convention",
                                         "mt_lattice", "t0_lattice", "reflex", "theorem_holds",
                                         "factorization_holds", "column_identity_holds",
                                         "violations"});
  CHECK(j["reflex"]["H_E"] == Json::parse("[0, 4]"));
  CHECK(j["theorem_holds"] == true);
  const std::string text = io::render(j);
  CHECK(io::render(Json::parse(text)) == text);
  CHECK(text == io::render(io::report_json(check_main_theorem(fixtures::d4()))));
}

TEST_CASE("weights and records json") {
  const Json w = io::weights_json(motive_weights(fixtures::iq(), 1, 1, 0));
  CHECK(w["total"] == 4);
  CHECK(w["entries"].size() == 3);
  const Json r = io::records_json({atlas_record(fixtures::c4())});
  REQUIRE(r.size() == 1);
  CHECK(r[0]["mt_rank"] == 3);
  CHECK(r[0]["error"] == "");
}
