// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "pcskit/census.hpp"
#include "pcskit/error.hpp"

using namespace pcs;
using namespace fixtures;

namespace {

  std::vector<Element> members_of(SubSemigroup const& sub) {
    return sub.to_parent;
  }

  std::set<Element> as_set(ElementMask const& m) {
    std::set<Element> out;
    for (Element x = 0; x < m.size(); ++x) {
      if (m[x]) {
        out.insert(x);
      }
    }
    return out;
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::InvalidArgument;
  }

}  // namespace

TEST_CASE("building semigroups from tables") {
  Semigroup t = trivial();
  CHECK(t.order() == 1);
  CHECK(t.idempotents() == std::vector<Element>{0});

  Semigroup r = rz2();
  CHECK(r.is_idempotent(0));
  CHECK(r.is_idempotent(1));
  CHECK(r.label(1) == "b");

  CHECK(code_of([] { Semigroup::from_rows({{0, 2}, {0, 1}}); })
        == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { Semigroup::from_rows({{0, 1}}); })
        == ErrorCode::InvalidArgument);
}

TEST_CASE("the first non-associative 2x2 table is rejected") {
  std::vector<Element> t(4, 0);
  std::optional<std::vector<Element>> found;
  for (unsigned code = 0; code < 16 && !found; ++code) {
    for (unsigned k = 0; k < 4; ++k) {
      t[k] = code >> (3 - k) & 1U;
    }
    if (!associative(2, t)) {
      found = t;
    }
  }
  REQUIRE(found);
  // 0 0 / 1 0 by lexicographic scan.
  CHECK(*found == std::vector<Element>{0, 0, 1, 0});
  auto triple = find_non_associative_triple(2, *found);
  REQUIRE(triple);
  auto [i, j, k] = *triple;
  CHECK((*found)[(*found)[i * 2 + j] * 2 + k] != (*found)[i * 2 + (*found)[j * 2 + k]]);
  CHECK(code_of([&] { Semigroup::from_table(2, *found); })
        == ErrorCode::NotAssociative);
}

TEST_CASE("validation accepts exactly the associative tables of order 2 and 3") {
  for (std::size_t n : {2U, 3U}) {
    std::size_t          accepted = 0;
    std::vector<Element> t(n * n, 0);
    std::size_t          total = 1;
    for (std::size_t k = 0; k < n * n; ++k) {
      total *= n;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t k = n * n; k-- > 0;) {
        t[k] = static_cast<Element>(c % n);
        c /= n;
      }
      bool ok = true;
      try {
        Semigroup::from_table(n, t);
      } catch (Error const& e) {
        CHECK(e.code() == ErrorCode::NotAssociative);
        ok = false;
      }
      CHECK(ok == associative(n, t));
      accepted += ok ? 1 : 0;
    }
    CHECK(accepted == (n == 2 ? 8U : 113U));
  }
}

TEST_CASE("closure") {
  Element a = 0;
  CHECK(members_of(closure(rz2(), std::span(&a, 1))) == std::vector<Element>{0});

  Semigroup z3 = cyclic_group(3);
  Element   g  = 1;
  CHECK(closure(z3, std::span(&g, 1)).size() == 3);

  std::vector<Element> ab{1, 2};
  CHECK(closure(b2(), ab).size() == 5);
}

TEST_CASE("index, period and omega powers") {
  auto ip = index_period(rz2(), 0);
  CHECK(ip.index == 1);
  CHECK(ip.period == 1);

  Semigroup z3 = cyclic_group(3);
  ip           = index_period(z3, 1);
  CHECK(ip.index == 1);
  CHECK(ip.period == 3);

  ip = index_period(nilpotent_monogenic(), 0);
  CHECK(ip.index == 2);
  CHECK(ip.period == 1);

  CHECK(omega_power(z3, 1, 0) == 0);
  CHECK(omega_power(z3, 1, -1) == 2);
  CHECK(z3.product(omega_power(z3, 1, -1), 1) == omega_power(z3, 1, 0));
  CHECK(omega_power(rz2(), 0, 5) == 0);
}

TEST_CASE("omega power laws hold on every semigroup of order at most 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (Semigroup const& s : enumerate_semigroups(n, false)) {
      for (Element x = 0; x < n; ++x) {
        Element w = omega_power(s, x, 0);
        CHECK(s.is_idempotent(w));
        CHECK(w == idempotent_power(s, x));
        for (long k = -3; k <= 3; ++k) {
          CHECK(s.product(omega_power(s, x, k), x) == omega_power(s, x, k + 1));
        }
        // Brute-force index and period.
        auto ip = index_period(s, x);
        CHECK(power(s, x, ip.index + ip.period) == power(s, x, ip.index));
        for (std::size_t i = 1; i <= ip.index; ++i) {
          for (std::size_t p = 1; p <= n; ++p) {
            if (i < ip.index || p < ip.period) {
              CHECK(power(s, x, i + p) != power(s, x, i));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Green's relations") {
  GreenData g = green_classes(rz2());
  CHECK(g.r.count() == 1);
  CHECK(g.l.count() == 2);
  CHECK(g.j.count() == 1);

  g = green_classes(cyclic_group(3));
  CHECK(g.r.count() == 1);
  CHECK(g.l.count() == 1);
  CHECK(g.h.count() == 1);
  CHECK(g.j.count() == 1);

  g = green_classes(b2());
  CHECK(g.j.count() == 2);
  CHECK(g.j.members(0) == std::vector<Element>{0});
  CHECK(g.j.members(1) == std::vector<Element>{1, 2, 3, 4});
  CHECK(g.r.count() == 3);
  CHECK(g.r.members(1) == std::vector<Element>{1, 3});
  CHECK(g.r.members(2) == std::vector<Element>{2, 4});
  CHECK(g.h.count() == 5);
}

TEST_CASE("Green's relations agree with ideal equality on order <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_semigroup(n, false, [&](Semigroup const& s) {
      GreenData g = green_classes(s);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          bool r = right_ideal(s, x) == right_ideal(s, y);
          bool l = left_ideal(s, x) == left_ideal(s, y);
          bool j = two_sided_ideal(s, x) == two_sided_ideal(s, y);
          REQUIRE((g.r.class_of[x] == g.r.class_of[y]) == r);
          REQUIRE((g.l.class_of[x] == g.l.class_of[y]) == l);
          REQUIRE((g.j.class_of[x] == g.j.class_of[y]) == j);
          REQUIRE((g.h.class_of[x] == g.h.class_of[y]) == (r && l));
        }
      }
      // Class ids follow the smallest member.
      CHECK(g.j.class_of[0] == 0);
    });
  }
}

TEST_CASE("principal one-sided ideals") {
  Semigroup m = rz2_mon();
  CHECK(members_of(principal_ideal(m, 0, Side::left))
        == std::vector<Element>{0, 1, 2});
  CHECK(members_of(principal_ideal(m, 1, Side::left)) == std::vector<Element>{1});
  CHECK(members_of(principal_ideal(rz2(), 0, Side::right))
        == std::vector<Element>{0, 1});
  CHECK(as_set(left_ideal_mask(b2(), 1)) == left_ideal(b2(), 1));
  CHECK(as_set(two_sided_ideal_mask(b2(), 1)) == two_sided_ideal(b2(), 1));
}

TEST_CASE("division search") {
  Semigroup rz3 = free_constant_band(BandKind::right_zero, 3);
  auto      yes = divides(rz2(), rz3);
  REQUIRE(yes.kind == DivisionAnswer::Kind::yes);
  REQUIRE(yes.witness);
  ElementMask const& sub = yes.witness->subsemigroup;
  std::vector<Element> local;
  for (Element x = 0; x < rz3.order(); ++x) {
    if (sub[x]) {
      local.push_back(x);
    }
  }
  CHECK(local.size() == 2);

  CHECK(divides(cyclic_group(2), rz3).kind == DivisionAnswer::Kind::no);
  CHECK(divides(trivial(), cyclic_group(4), 3).kind
        == DivisionAnswer::Kind::too_large);
  CHECK(divides(cyclic_group(2), cyclic_group(4)).kind
        == DivisionAnswer::Kind::yes);
  CHECK(divides(cyclic_group(3), cyclic_group(4)).kind
        == DivisionAnswer::Kind::no);
}
