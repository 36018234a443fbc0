// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "pcskit/census.hpp"
#include "pcskit/error.hpp"
#include "pcskit/pcs.hpp"

using namespace pcs;
using namespace fixtures;

namespace {

  MethodResult const& result_for(Verdict const& v, Method m) {
    for (auto const& r : v.per_method) {
      if (r.method == m) {
        return r;
      }
    }
    FAIL("method missing");
    return v.per_method.front();
  }

}  // namespace

TEST_CASE("method names") {
  CHECK(all_methods().size() == 7);
  for (Method m : all_methods()) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK(to_string(Method::basis_i_prime) == "basis:i-prime");
  CHECK_THROWS_AS(parse_method("basis:iv"), Error);
}

TEST_CASE("named verdicts") {
  CHECK(decide(rz2()).member);
  CHECK(decide(b2()).member);

  Verdict v = decide(rz2_mon());
  CHECK_FALSE(v.member);
  CHECK(v.per_method.size() == 7);

  auto const& asb = result_for(v, Method::asb);
  REQUIRE(asb.witness);
  CHECK(asb.witness->anchors == std::vector<Element>{0, 0});
  CHECK(rz2_mon().label(0) == "1");

  auto const& ideals = result_for(v, Method::ideals);
  REQUIRE(ideals.witness);
  CHECK(ideals.witness->anchors == std::vector<Element>{0});
  CHECK(ideals.witness->side == Side::left);

  auto const& regrep = result_for(v, Method::regrep);
  REQUIRE(regrep.witness);
  CHECK(regrep.witness->anchors == std::vector<Element>{0});

  auto const& iii = result_for(v, Method::basis_iii);
  REQUIRE(iii.witness);
  REQUIRE(iii.witness->counterexample);
  CHECK(iii.witness->identity == "pcs-iii");
}

TEST_CASE("single methods and threaded evaluation") {
  Verdict one = decide(rz2_mon(), {Method::basis_ii});
  CHECK(one.per_method.size() == 1);
  CHECK_FALSE(one.member);

  Verdict threaded = decide(b2(), {}, 4);
  Verdict serial   = decide(b2(), {}, 1);
  REQUIRE(threaded.per_method.size() == serial.per_method.size());
  for (std::size_t k = 0; k < serial.per_method.size(); ++k) {
    CHECK(threaded.per_method[k].method == serial.per_method[k].method);
    CHECK(threaded.per_method[k].member == serial.per_method[k].member);
  }
}

TEST_CASE("witnesses replay") {
  for_each_semigroup(3, false, [](Semigroup const& s) {
    Verdict v = decide(s);
    for (auto const& r : v.per_method) {
      if (r.witness) {
        REQUIRE(replay_witness(s, r.method, *r.witness));
      }
    }
  });
  MethodWitness bogus;
  bogus.anchors = {0, 0};
  CHECK_FALSE(replay_witness(rz2(), Method::asb, bogus));
  bogus.anchors = {7, 0};
  CHECK_FALSE(replay_witness(rz2(), Method::asb, bogus));
}

TEST_CASE("closure under products, subsemigroups and images at desk scale") {
  std::vector<Semigroup> members, all;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_semigroup(n, false, [&](Semigroup const& s) {
      all.push_back(s);
      if (decide(s).member) {
        members.push_back(s);
      }
    });
  }
  for (std::size_t i = 0; i < members.size(); i += 13) {
    for (std::size_t j = 0; j < members.size(); j += 17) {
      CHECK(decide(direct_product(members[i], members[j])).member);
    }
  }
  for (std::size_t i = 0; i < members.size(); i += 5) {
    Semigroup const& s = members[i];
    for (Element x = 0; x < s.order(); ++x) {
      for (Element y = 0; y < s.order(); ++y) {
        std::vector<Element> gens{x, y};
        CHECK(decide(closure(s, gens).local).member);
      }
    }
  }
  // A homomorphic image of a member is a member.
  Semigroup rz2_b2 = direct_product(rz2(), b2());
  for (Semigroup const& t : all) {
    if (t.order() <= 2 && divides(t, rz2_b2).kind == DivisionAnswer::Kind::yes) {
      CHECK(decide(t).member);
    }
  }
}

TEST_CASE("power semigroups of completely simple semigroups are members") {
  for (Semigroup const& s :
       {rz2(), cyclic_group(3), rees_matrix(cyclic_group(2), 2, 2, {0, 0, 0, 1})}) {
    if (s.order() > 6) {
      // 255 elements: the identity methods would take too long here.
      CHECK(decide(power_semigroup(s, false).result,
                   {Method::asb, Method::ideals, Method::regrep})
                .member);
      continue;
    }
    CHECK(decide(power_semigroup(s, false).result).member);
    CHECK(decide(power_semigroup(s, true).result).member);
  }
}

TEST_CASE("preimages of the relational morphism") {
  PowerTheoremReport r = verify_power_theorem(rz2());
  CHECK(r.power_order == 3);
  CHECK(r.triples_examined == 6);
  CHECK(r.passed());
  for (auto const& p : r.preimages) {
    CHECK(p.members.size() <= 1);
  }

  r = verify_power_theorem(free_constant_band(BandKind::rectangular, 2, 2));
  CHECK(r.power_order == 15);
  CHECK(r.passed());
  for (auto const& p : r.preimages) {
    CHECK(p.j_trivial);
  }

  r = verify_power_theorem(cyclic_group(2));
  CHECK(r.passed());
  for (auto const& p : r.preimages) {
    // Idempotent members contain the subgroup generated by the idempotents.
    for (auto x : p.members) {
      if (subset_product(cyclic_group(2), x, x) == x) {
        CHECK((x & p.base_i) == p.base_i);
      }
    }
  }

  try {
    verify_power_theorem(b2());
    FAIL("expected NotCompletelySimple");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotCompletelySimple);
  }
  try {
    verify_power_theorem(rees_matrix(cyclic_group(2), 2, 2, {0, 0, 0, 1}));
    FAIL("expected TooLarge");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("preimage checks against a direct computation") {
  // Recompute each preimage from the definition for a 2x2 Rees sample.
  Semigroup          s = rees_matrix(cyclic_group(1), 2, 1, {0, 0});
  PowerTheoremReport r = verify_power_theorem(s);
  GreenData          g = green_classes(s);
  std::size_t        total = 0;
  for (auto const& p : r.preimages) {
    for (auto x : p.members) {
      std::uint64_t rc = 0, lc = 0;
      for (Element a : bits(x)) {
        rc |= std::uint64_t{1} << g.r.class_of[a];
        lc |= std::uint64_t{1} << g.l.class_of[a];
      }
      CHECK(rc == p.r_classes);
      CHECK(lc == p.l_classes);
      CHECK((x >> p.idempotent & 1U) == 1U);
    }
    total += p.members.size();
  }
  // Each subset X lies in one preimage per idempotent it contains.
  std::size_t expected = 0;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << s.order()); ++x) {
    for (Element e : bits(x)) {
      expected += s.is_idempotent(e) ? 1 : 0;
    }
  }
  CHECK(total == expected);
}

TEST_CASE("consolidation") {
  Consolidation c = consolidate(trivial());
  CHECK(c.result.order() == 3);

  c = consolidate(rz2());
  CHECK(c.result.order() == 7);
  CHECK(is_member(c.result, Variety::BG).member);
  std::size_t from_one = 0;
  for (auto const& d : c.descriptors) {
    from_one += d.source == c.one() ? 1 : 0;
  }
  CHECK(from_one == 2);

  c = consolidate(rz2_mon());
  CHECK_FALSE(is_member(c.result, Variety::BG).member);

  // Zero absorbs and non-composable products vanish.
  c = consolidate(b2());
  for (Element x = 0; x < c.result.order(); ++x) {
    CHECK(c.result.product(0, x) == 0);
    CHECK(c.result.product(x, 0) == 0);
  }
  for (Element x = 1; x < c.result.order(); ++x) {
    for (Element y = 1; y < c.result.order(); ++y) {
      auto const& dx = c.descriptors[x - 1];
      auto const& dy = c.descriptors[y - 1];
      CHECK((c.result.product(x, y) != 0) == (dx.target == dy.source));
    }
  }
  CHECK_THROWS_AS(consolidate(free_constant_band(BandKind::left_zero, 9)), Error);
}

TEST_CASE("division into the wreath product") {
  DivisionReport r = division_witness(rz2());
  CHECK(r.u.order() == 2);
  CHECK(r.verified());
  CHECK(r.cover == std::vector<Element>{0, 1});

  r = division_witness(trivial());
  CHECK(r.u.order() == 1);
  CHECK(r.verified());

  // g_1 g_1 has its descriptors ending at 1, g_0 at 0, so U is Z2 x RZ2
  // rather than Z2.
  r = division_witness(cyclic_group(2));
  CHECK(r.u.order() == 4);
  CHECK(r.verified());
  Semigroup z2_rz2 = direct_product(cyclic_group(2), rz2());
  CHECK(find_surjective_homomorphism(r.u, z2_rz2).has_value());

  r = division_witness(b2());
  CHECK(r.verified());

  try {
    division_witness(rz2_mon());
    FAIL("expected NotInPCS");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotInPCS);
  }
}

TEST_CASE("power semigroups of groups are block groups") {
  CHECK(check_pg_equals_bg(trivial()));
  CHECK(check_pg_equals_bg(cyclic_group(2)));
  CHECK(check_pg_equals_bg(cyclic_group(3)));
  try {
    check_pg_equals_bg(rz2());
    FAIL("expected NotAGroup");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotAGroup);
  }
}
