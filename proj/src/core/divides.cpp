// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>

#include "pcskit/error.hpp"
#include "pcskit/semigroup.hpp"

namespace pcs {

  bool is_homomorphism(Semigroup const& from, Semigroup const& to,
                       std::span<Element const> map) {
    if (map.size() != from.order()) {
      return false;
    }
    for (Element a = 0; a < from.order(); ++a) {
      for (Element b = 0; b < from.order(); ++b) {
        if (map[from.product(a, b)] != to.product(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    constexpr Element unset = static_cast<Element>(-1);

    // Greedy generating set: each generator lies outside the closure of the
    // previous ones.
    std::vector<Element> greedy_generators(Semigroup const& u) {
      std::vector<Element> gens;
      ElementMask          covered(u.order(), false);
      for (Element x = 0; x < u.order(); ++x) {
        if (!covered[x]) {
          gens.push_back(x);
          covered = closure_mask(u, gens);
        }
      }
      return gens;
    }

    // Extends the images of gens[0..k) to the subsemigroup they generate.
    // Returns false on an inconsistency, i.e. the assignment is not the
    // restriction of any homomorphism.
    bool propagate(Semigroup const& u, Semigroup const& s,
                   std::span<Element const> gens, std::span<Element const> img,
                   std::size_t k, std::vector<Element>& phi) {
      std::fill(phi.begin(), phi.end(), unset);
      std::vector<Element> queue;
      for (std::size_t i = 0; i < k; ++i) {
        phi[gens[i]] = img[i];
        queue.push_back(gens[i]);
      }
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Element x = queue[q];
        for (std::size_t i = 0; i < k; ++i) {
          Element y     = u.product(x, gens[i]);
          Element value = s.product(phi[x], img[i]);
          if (phi[y] == unset) {
            phi[y] = value;
            queue.push_back(y);
          } else if (phi[y] != value) {
            return false;
          }
        }
      }
      return true;
    }

    bool search(Semigroup const& u, Semigroup const& s,
                std::span<Element const> gens, std::vector<Element>& img,
                std::size_t k, std::vector<Element>& phi) {
      if (!propagate(u, s, gens, img, k, phi)) {
        return false;
      }
      if (k == gens.size()) {
        std::vector<bool> hit(s.order(), false);
        for (Element v : phi) {
          hit[v] = true;
        }
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      }
      for (Element v = 0; v < s.order(); ++v) {
        if (u.is_idempotent(gens[k]) && !s.is_idempotent(v)) {
          continue;
        }
        img[k] = v;
        if (search(u, s, gens, img, k + 1, phi)) {
          return true;
        }
      }
      return false;
    }

  }  // namespace

  std::optional<std::vector<Element>>
  find_surjective_homomorphism(Semigroup const& u, Semigroup const& s) {
    if (u.order() < s.order()) {
      return std::nullopt;
    }
    auto                 gens = greedy_generators(u);
    std::vector<Element> img(gens.size(), 0);
    std::vector<Element> phi(u.order(), unset);
    if (search(u, s, gens, img, 0, phi)) {
      return phi;
    }
    return std::nullopt;
  }

  DivisionAnswer divides(Semigroup const& s, Semigroup const& t,
                         std::size_t cap) {
    DivisionAnswer answer;
    if (t.order() > cap) {
      answer.kind = DivisionAnswer::Kind::too_large;
      return answer;
    }
    // All subsemigroups of T: every one is reachable from a smaller one by
    // adjoining a single element and closing.
    std::set<ElementMask>    seen;
    std::vector<ElementMask> subs;
    for (Element x = 0; x < t.order(); ++x) {
      Element     g[1] = {x};
      ElementMask m    = closure_mask(t, g);
      if (seen.insert(m).second) {
        subs.push_back(m);
      }
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      for (Element x = 0; x < t.order(); ++x) {
        if (subs[i][x]) {
          continue;
        }
        std::vector<Element> gens;
        for (Element y = 0; y < t.order(); ++y) {
          if (subs[i][y]) {
            gens.push_back(y);
          }
        }
        gens.push_back(x);
        ElementMask m = closure_mask(t, gens);
        if (seen.insert(m).second) {
          subs.push_back(m);
        }
      }
    }
    auto size_of = [](ElementMask const& m) {
      return std::count(m.begin(), m.end(), true);
    };
    std::stable_sort(subs.begin(), subs.end(),
                     [&](ElementMask const& a, ElementMask const& b) {
                       return size_of(a) < size_of(b);
                     });
    for (auto const& m : subs) {
      if (static_cast<std::size_t>(size_of(m)) < s.order()) {
        continue;
      }
      SubSemigroup sub = restrict_to(t, m);
      if (auto phi = find_surjective_homomorphism(sub.local, s)) {
        Division d;
        d.subsemigroup = m;
        d.map.assign(t.order(), 0);
        for (std::size_t k = 0; k < sub.size(); ++k) {
          d.map[sub.to_parent[k]] = (*phi)[k];
        }
        answer.kind    = DivisionAnswer::Kind::yes;
        answer.witness = std::move(d);
        return answer;
      }
    }
    answer.kind = DivisionAnswer::Kind::no;
    return answer;
  }

}  // namespace pcs
