// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>

#include "pcskit/constructions.hpp"
#include "pcskit/error.hpp"
#include "pcskit/pcs.hpp"

namespace pcs {

  bool PowerTheoremReport::passed() const noexcept {
    return std::all_of(preimages.begin(), preimages.end(),
                       [](auto const& p) { return p.passed(); });
  }

  namespace {

    std::uint64_t idempotents_of(Semigroup const& s, std::uint64_t mask) {
      std::uint64_t out = 0;
      for (Element x = 0; x < s.order(); ++x) {
        if ((mask >> x & 1U) && s.is_idempotent(x)) {
          out |= std::uint64_t{1} << x;
        }
      }
      return out;
    }

    std::uint64_t generated(Semigroup const& s, std::uint64_t mask) {
      std::vector<Element> gens;
      for (Element x = 0; x < s.order(); ++x) {
        if (mask >> x & 1U) {
          gens.push_back(x);
        }
      }
      if (gens.empty()) {
        return 0;
      }
      ElementMask   m   = closure_mask(s, gens);
      std::uint64_t out = 0;
      for (Element x = 0; x < s.order(); ++x) {
        if (m[x]) {
          out |= std::uint64_t{1} << x;
        }
      }
      return out;
    }

    void examine(Semigroup const& s, PowerSemigroup const& power,
                 IdempotentPreimage& pre) {
      auto const& members = pre.members;
      auto in_preimage = [&](std::uint64_t x) {
        return std::binary_search(members.begin(), members.end(), x);
      };
      pre.closed = true;
      for (auto x : members) {
        for (auto y : members) {
          if (!in_preimage(subset_product(s, x, y))) {
            pre.closed = false;
          }
        }
      }
      if (pre.closed) {
        ElementMask mask(power.result.order(), false);
        for (auto x : members) {
          mask[power.element_of(x)] = true;
        }
        pre.j_trivial
            = is_member(restrict_to(power.result, mask).local, Variety::J)
                  .member;
      }
      std::uint64_t const e_i = idempotents_of(s, pre.base_i);
      pre.idempotents_cover_i = true;
      for (auto f : members) {
        if (subset_product(s, f, f) != f) {
          continue;
        }
        if ((f & pre.base_i) != pre.base_i || idempotents_of(s, f) != e_i) {
          pre.idempotents_cover_i = false;
        }
      }
      pre.contains_base_i = in_preimage(pre.base_i)
                            && subset_product(s, pre.base_i, pre.base_i)
                                   == pre.base_i;
    }

  }  // namespace

  PowerTheoremReport verify_power_theorem(Semigroup const& s, std::size_t cap) {
    if (!is_member(s, Variety::CS).member) {
      throw Error(ErrorCode::NotCompletelySimple,
                  "input is not completely simple");
    }
    if (s.order() > cap) {
      throw Error(ErrorCode::TooLarge,
                  "order " + std::to_string(s.order()) + " exceeds cap "
                      + std::to_string(cap));
    }
    PowerSemigroup power = power_semigroup(s, false, cap);
    GreenData      green = green_classes(s);

    PowerTheoremReport report;
    report.power_order   = power.result.order();
    report.r_class_count = green.r.count();
    report.l_class_count = green.l.count();

    auto r_of = [&](std::uint64_t x) {
      std::uint64_t out = 0;
      for (Element a = 0; a < s.order(); ++a) {
        if (x >> a & 1U) {
          out |= std::uint64_t{1} << green.r.class_of[a];
        }
      }
      return out;
    };
    auto l_of = [&](std::uint64_t x) {
      std::uint64_t out = 0;
      for (Element a = 0; a < s.order(); ++a) {
        if (x >> a & 1U) {
          out |= std::uint64_t{1} << green.l.class_of[a];
        }
      }
      return out;
    };

    // Subsets grouped by (XR, XL); preimages are then read off per e.
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint64_t>>
        by_key;
    for (auto x : power.subset_of) {
      by_key[{r_of(x), l_of(x)}].push_back(x);
    }

    auto const    idempotents = s.idempotents();
    std::uint64_t r_full = (std::uint64_t{1} << green.r.count()) - 1;
    std::uint64_t l_full = (std::uint64_t{1} << green.l.count()) - 1;
    for (std::uint64_t a_set = 1; a_set <= r_full; ++a_set) {
      for (Element e : idempotents) {
        for (std::uint64_t b_set = 1; b_set <= l_full; ++b_set) {
          ++report.triples_examined;
          auto it = by_key.find({a_set, b_set});
          if (it == by_key.end()) {
            continue;
          }
          IdempotentPreimage pre;
          pre.r_classes  = a_set;
          pre.idempotent = e;
          pre.l_classes  = b_set;
          for (auto x : it->second) {
            if (x >> e & 1U) {
              pre.members.push_back(x);
            }
          }
          if (pre.members.empty()) {
            continue;
          }
          for (Element y = 0; y < s.order(); ++y) {
            if ((a_set >> green.r.class_of[y] & 1U)
                && (b_set >> green.l.class_of[y] & 1U)) {
              pre.s_ab |= std::uint64_t{1} << y;
            }
          }
          pre.base_i = generated(s, idempotents_of(s, pre.s_ab));
          examine(s, power, pre);
          report.preimages.push_back(std::move(pre));
        }
      }
    }
    return report;
  }

}  // namespace pcs
