// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// Named semigroups and brute-force reference implementations. The oracles
// here deliberately avoid the library's own algorithms: they work from the
// definitions by exhaustive search over small tables.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "pcskit/constructions.hpp"
#include "pcskit/semigroup.hpp"

namespace fixtures {

  using pcs::Element;
  using pcs::Semigroup;

  inline Semigroup rz2() {
    return Semigroup::from_rows({{0, 1}, {0, 1}}, {"a", "b"});
  }

  // RZ2 with an identity adjoined; the identity is element 0.
  inline Semigroup rz2_mon() {
    return Semigroup::from_rows({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}},
                                {"1", "e", "f"});
  }

  // 0, a, b, ab, ba with a = E12, b = E21.
  inline Semigroup b2() {
    return Semigroup::from_rows({{0, 0, 0, 0, 0},
                                 {0, 0, 3, 0, 1},
                                 {0, 4, 0, 2, 0},
                                 {0, 1, 0, 3, 0},
                                 {0, 0, 2, 0, 4}},
                                {"0", "a", "b", "ab", "ba"});
  }

  inline Semigroup trivial() {
    return Semigroup::from_rows({{0}});
  }

  // <x | x^3 = x^2>: elements x, x^2.
  inline Semigroup nilpotent_monogenic() {
    return Semigroup::from_rows({{1, 1}, {1, 1}});
  }

  // Relabeling by a permutation: element i becomes perm[i].
  inline Semigroup relabel(Semigroup const& s, std::vector<Element> const& perm) {
    std::size_t          n = s.order();
    std::vector<Element> t(n * n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        t[perm[i] * n + perm[j]] = perm[s.product(i, j)];
      }
    }
    return Semigroup::from_table(n, t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracles
  ////////////////////////////////////////////////////////////////////////

  inline bool associative(std::size_t n, std::vector<Element> const& t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every associative n x n table, by counting through all n^(n*n) tables.
  inline std::set<std::vector<Element>> all_associative_tables(std::size_t n) {
    std::set<std::vector<Element>> out;
    std::vector<Element>           t(n * n, 0);
    while (true) {
      if (associative(n, t)) {
        out.insert(t);
      }
      std::size_t k = t.size();
      while (k > 0 && t[k - 1] == n - 1) {
        t[--k] = 0;
      }
      if (k == 0) {
        break;
      }
      ++t[k - 1];
    }
    return out;
  }

  // x^k by repeated multiplication.
  inline Element power(Semigroup const& s, Element x, std::size_t k) {
    Element y = x;
    for (std::size_t i = 1; i < k; ++i) {
      y = s.product(y, x);
    }
    return y;
  }

  // The idempotent power found by trying exponents 1..n!.
  inline Element idempotent_power(Semigroup const& s, Element x) {
    for (std::size_t k = 1;; ++k) {
      Element y = power(s, x, k);
      if (s.product(y, y) == y) {
        return y;
      }
    }
  }

  // S^1 x S^1 style ideals as sets, straight from the definition.
  inline std::set<Element> right_ideal(Semigroup const& s, Element x) {
    std::set<Element> out{x};
    for (Element y = 0; y < s.order(); ++y) {
      out.insert(s.product(x, y));
    }
    return out;
  }

  inline std::set<Element> left_ideal(Semigroup const& s, Element x) {
    std::set<Element> out{x};
    for (Element y = 0; y < s.order(); ++y) {
      out.insert(s.product(y, x));
    }
    return out;
  }

  inline std::set<Element> two_sided_ideal(Semigroup const& s, Element x) {
    std::set<Element> out;
    for (Element l : left_ideal(s, x)) {
      for (Element r : right_ideal(s, l)) {
        out.insert(r);
      }
    }
    return out;
  }

  // Two-element right zero subsemigroup {e, f}: any pair with ef = f and
  // fe = e (such elements are automatically idempotent).
  inline bool has_right_zero_pair(Semigroup const& s) {
    for (Element e = 0; e < s.order(); ++e) {
      for (Element f = 0; f < s.order(); ++f) {
        if (e != f && s.product(e, e) == e && s.product(f, f) == f
            && s.product(e, f) == f && s.product(f, e) == e) {
          return true;
        }
      }
    }
    return false;
  }

  inline bool has_left_zero_pair(Semigroup const& s) {
    for (Element e = 0; e < s.order(); ++e) {
      for (Element f = 0; f < s.order(); ++f) {
        if (e != f && s.product(e, e) == e && s.product(f, f) == f
            && s.product(e, f) == e && s.product(f, e) == f) {
          return true;
        }
      }
    }
    return false;
  }

  inline bool block_group(Semigroup const& s) {
    return !has_right_zero_pair(s) && !has_left_zero_pair(s);
  }

  // Completely simple: every element lies in the two-sided ideal of every
  // other element.
  inline bool completely_simple(Semigroup const& s) {
    for (Element x = 0; x < s.order(); ++x) {
      if (two_sided_ideal(s, x).size() != s.order()) {
        return false;
      }
    }
    return true;
  }

  // Subset product by definition.
  inline std::set<Element> set_product(Semigroup const& s,
                                       std::set<Element> const& x,
                                       std::set<Element> const& y) {
    std::set<Element> out;
    for (Element a : x) {
      for (Element b : y) {
        out.insert(s.product(a, b));
      }
    }
    return out;
  }

  inline std::set<Element> bits(std::uint64_t mask) {
    std::set<Element> out;
    for (Element k = 0; k < 64; ++k) {
      if (mask >> k & 1U) {
        out.insert(k);
      }
    }
    return out;
  }

}  // namespace fixtures
