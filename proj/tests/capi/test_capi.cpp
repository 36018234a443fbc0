// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <memory>
#include <string>

#include "pcskit/pcskit.h"

using nlohmann::json;

namespace {

  struct Destroy {
    void operator()(pcs_semigroup* s) const { pcs_semigroup_destroy(s); }
  };
  using Handle = std::unique_ptr<pcs_semigroup, Destroy>;

  Handle make(std::size_t n, std::initializer_list<uint32_t> table) {
    pcs_semigroup* s = nullptr;
    REQUIRE(pcs_semigroup_create(n, std::data(table), &s) == PCS_OK);
    return Handle(s);
  }

  // Takes ownership of a library string.
  std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    pcs_string_free(s);
    return out;
  }

  json take_json(char* s) { return json::parse(take(s)); }

  Handle rz2() { return make(2, {0, 1, 0, 1}); }

  Handle rz2_mon() {
    pcs_semigroup* s = nullptr;
    REQUIRE(pcs_semigroup_parse_sg("3\n0 1 2\n1 1 2\n2 1 2\nlabels: 1 e f\n", &s)
            == PCS_OK);
    return Handle(s);
  }

}  // namespace

TEST_CASE("handles and products") {
  Handle s = rz2();
  CHECK(pcs_semigroup_order(s.get()) == 2);
  uint32_t p = 9;
  CHECK(pcs_semigroup_multiply(s.get(), 0, 1, &p) == PCS_OK);
  CHECK(p == 1);
  CHECK(pcs_semigroup_multiply(s.get(), 2, 0, &p) == PCS_INDEX_OUT_OF_RANGE);
  CHECK(std::strlen(pcs_last_error()) > 0);

  char* text = nullptr;
  REQUIRE(pcs_semigroup_write_sg(s.get(), &text) == PCS_OK);
  std::string sg = take(text);
  pcs_semigroup* back = nullptr;
  REQUIRE(pcs_semigroup_parse_sg(sg.c_str(), &back) == PCS_OK);
  Handle b(back);
  CHECK(pcs_semigroup_order(b.get()) == 2);
}

TEST_CASE("errors map to status codes") {
  pcs_semigroup* s = nullptr;
  uint32_t bad[] = {0, 0, 1, 0};
  CHECK(pcs_semigroup_create(2, bad, &s) == PCS_NOT_ASSOCIATIVE);
  CHECK(s == nullptr);
  CHECK(std::string(pcs_status_name(PCS_NOT_ASSOCIATIVE)) == "NotAssociative");

  CHECK(pcs_semigroup_parse_sg("2\n0 1\n0", &s) == PCS_SYNTAX_ERROR);
  CHECK(std::string(pcs_last_error()).find("line") != std::string::npos);
  CHECK(pcs_semigroup_load("/nonexistent/file.sg", &s) == PCS_INVALID_ARGUMENT);
  CHECK(pcs_semigroup_create(2, nullptr, &s) == PCS_INVALID_ARGUMENT);

  Handle r = rz2();
  char*  out = nullptr;
  CHECK(pcs_check(r.get(), "XYZ", nullptr, 1, &out) == PCS_UNKNOWN_VARIETY);
  CHECK(pcs_check(r.get(), "pcs", "basis:iv", 1, &out) == PCS_UNKNOWN_NAME);
  CHECK(pcs_identity_builtin("nope", &out) == PCS_UNKNOWN_NAME);
  CHECK(pcs_identity_format("x^", &out) == PCS_SYNTAX_ERROR);
  CHECK(pcs_division_witness(rz2_mon().get(), 0, &out) == PCS_NOT_IN_PCS);
  CHECK(pcs_verify_power_theorem(rz2_mon().get(), 0, &out)
        == PCS_NOT_COMPLETELY_SIMPLE);
  CHECK(out == nullptr);
}

TEST_CASE("pcs verdicts as JSON") {
  char* out = nullptr;
  REQUIRE(pcs_check(rz2().get(), "pcs", "all", 2, &out) == PCS_OK);
  json j = take_json(out);
  CHECK(j["member"] == true);
  CHECK(j["methods"].size() == 7);

  Handle m = rz2_mon();
  REQUIRE(pcs_check(m.get(), "PCS", "all", 1, &out) == PCS_OK);
  j = take_json(out);
  CHECK(j["member"] == false);
  json asb;
  for (auto const& r : j["methods"]) {
    CHECK(r["member"] == false);
    CHECK_FALSE(r["witness"].is_null());
    if (r["method"] == "asb") {
      asb = r["witness"];
    }
  }
  REQUIRE(asb.is_object());
  CHECK(asb["anchor_labels"] == json::array({"1", "1"}));

  // Witnesses survive a trip through JSON.
  for (auto const& r : j["methods"]) {
    std::string method = r["method"];
    REQUIRE(pcs_replay_witness(m.get(), method.c_str(), r["witness"].dump().c_str(),
                               &out)
            == PCS_OK);
    CHECK(take_json(out)["reproduced"] == true);
  }
  REQUIRE(pcs_replay_witness(rz2().get(), "asb", asb.dump().c_str(), &out) == PCS_OK);
  CHECK(take_json(out)["reproduced"] == false);
}

TEST_CASE("other varieties and identities") {
  char* out = nullptr;
  REQUIRE(pcs_check(rz2().get(), "BG", nullptr, 1, &out) == PCS_OK);
  json j = take_json(out);
  CHECK(j["member"] == false);
  CHECK(j["engine"] == "structural");

  REQUIRE(pcs_eval_identity(rz2().get(), "(x^w y^w)^w = (y^w x^w)^w", &out) == PCS_OK);
  j = take_json(out);
  CHECK(j["satisfied"] == false);
  CHECK(j["counterexample"]["assignment"] == json{{"x", 0}, {"y", 1}});

  REQUIRE(pcs_identity_builtin("bg", &out) == PCS_OK);
  CHECK(take(out) == "(x^w y^w)^w = (y^w x^w)^w");
  REQUIRE(pcs_transform_star_rz("(x^w y^w)^w = (y^w x^w)^w", &out) == PCS_OK);
  CHECK(take_json(out)["count"] == 4);
}

TEST_CASE("constructions") {
  pcs_semigroup* g = nullptr;
  REQUIRE(pcs_cyclic_group(2, &g) == PCS_OK);
  Handle z2(g);

  pcs_semigroup* r = nullptr;
  REQUIRE(pcs_rees_matrix(z2.get(), "0,0;0,1", &r) == PCS_OK);
  Handle rees(r);
  CHECK(pcs_semigroup_order(rees.get()) == 8);
  CHECK(pcs_rees_matrix(z2.get(), "0,0;0", &r) == PCS_INVALID_MATRIX);
  CHECK(pcs_rees_matrix(rz2().get(), "0", &r) == PCS_NOT_A_GROUP);

  pcs_semigroup* p = nullptr;
  REQUIRE(pcs_power_semigroup(z2.get(), 1, 0, &p) == PCS_OK);
  Handle power(p);
  CHECK(pcs_semigroup_order(power.get()) == 4);
  CHECK(pcs_power_semigroup(rees.get(), 0, 6, &p) == PCS_TOO_LARGE);

  pcs_semigroup* c = nullptr;
  REQUIRE(pcs_consolidate(rz2().get(), 0, &c) == PCS_OK);
  Handle cons(c);
  CHECK(pcs_semigroup_order(cons.get()) == 7);

  char* out = nullptr;
  REQUIRE(pcs_division_witness(rz2().get(), 0, &out) == PCS_OK);
  json j = take_json(out);
  CHECK(j["u_order"] == 2);
  CHECK(j["verified"] == true);

  REQUIRE(pcs_verify_power_theorem(rz2().get(), 0, &out) == PCS_OK);
  j = take_json(out);
  CHECK(j["triples_examined"] == 6);
  CHECK(j["passed"] == true);
}

TEST_CASE("Green's relations and ideals") {
  char* out = nullptr;
  REQUIRE(pcs_green(rz2().get(), &out) == PCS_OK);
  json j = take_json(out);
  CHECK(j["L"].size() == 2);
  CHECK(j["R"].size() == 1);

  REQUIRE(pcs_ideal(rz2_mon().get(), 0, "left", &out) == PCS_OK);
  CHECK(take_json(out)["members"] == json::array({0, 1, 2}));
  CHECK(pcs_ideal(rz2().get(), 5, "left", &out) == PCS_INDEX_OUT_OF_RANGE);
  CHECK(pcs_ideal(rz2().get(), 0, "up", &out) == PCS_INVALID_ARGUMENT);
}

TEST_CASE("census") {
  pcs_population p{};
  p.kind  = PCS_POPULATION_EXHAUSTIVE;
  p.order = 3;
  char* out = nullptr;
  REQUIRE(pcs_census(&p, 0, 0, 1, &out) == PCS_OK);
  CHECK(take_json(out)["count"] == 113);
  REQUIRE(pcs_census(&p, 1, 0, 1, &out) == PCS_OK);
  CHECK(take_json(out)["count"] == 24);

  p.order = 2;
  REQUIRE(pcs_census(&p, 0, 1, 2, &out) == PCS_OK);
  json j = take_json(out);
  CHECK(j["count_examined"] == 8);
  CHECK(j["disagreements"].empty());
  CHECK(j["failures"].empty());

  p.kind   = PCS_POPULATION_TRANSFORMATION;
  p.degree = 3;
  p.gens   = 2;
  p.count  = 3;
  CHECK(pcs_census(&p, 0, 0, 1, &out) == PCS_INVALID_ARGUMENT);
  REQUIRE(pcs_census(&p, 0, 1, 1, &out) == PCS_OK);
  CHECK(take_json(out)["count_examined"] == 3);
}
