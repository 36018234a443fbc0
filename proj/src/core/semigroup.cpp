// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pcskit/semigroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pcskit/error.hpp"

namespace pcs {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::InvalidArgument: return "InvalidArgument";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::SyntaxError: return "SyntaxError";
      case ErrorCode::EmptyTerm: return "EmptyTerm";
      case ErrorCode::UnboundVariable: return "UnboundVariable";
      case ErrorCode::UnknownName: return "UnknownName";
      case ErrorCode::UnknownVariety: return "UnknownVariety";
      case ErrorCode::TooLarge: return "TooLarge";
      case ErrorCode::NotAGroup: return "NotAGroup";
      case ErrorCode::InvalidMatrix: return "InvalidMatrix";
      case ErrorCode::NotCompletelySimple: return "NotCompletelySimple";
      case ErrorCode::NotInPCS: return "NotInPCS";
      case ErrorCode::FreshVariableExhausted: return "FreshVariableExhausted";
      case ErrorCode::MethodDisagreement: return "MethodDisagreement";
      case ErrorCode::CoverNotFunctional: return "CoverNotFunctional";
    }
    return "Unknown";
  }

  namespace {

    void check_range(std::size_t order, std::span<Element const> table) {
      if (order == 0) {
        throw Error(ErrorCode::InvalidArgument, "semigroup order must be >= 1");
      }
      if (table.size() != order * order) {
        std::ostringstream os;
        os << "table has " << table.size() << " entries, expected "
           << order * order;
        throw Error(ErrorCode::InvalidArgument, os.str());
      }
      for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k] >= order) {
          std::ostringstream os;
          os << "entry " << table[k] << " at (" << k / order << ", "
             << k % order << ") is outside [0, " << order << ")";
          throw Error(ErrorCode::IndexOutOfRange, os.str());
        }
      }
    }

    OmegaRecord compute_omega(std::size_t order, std::span<Element const> t,
                              Element x) {
      // powers[k] = x^(k+1); first repeat determines index and period.
      std::vector<Element>     powers;
      std::vector<std::size_t> seen_at(order, SIZE_MAX);
      Element                  p = x;
      while (seen_at[p] == SIZE_MAX) {
        seen_at[p] = powers.size();
        powers.push_back(p);
        p = t[p * order + x];
      }
      OmegaRecord rec;
      rec.index  = seen_at[p] + 1;
      rec.period = powers.size() - seen_at[p];
      // The idempotent power is x^m, m the least multiple of the period that
      // is >= index.
      std::size_t m = ((rec.index + rec.period - 1) / rec.period) * rec.period;
      rec.cycle.reserve(rec.period);
      for (std::size_t j = 0; j < rec.period; ++j) {
        std::size_t e = m + j;  // exponent, >= index
        std::size_t k = rec.index + (e - rec.index) % rec.period;
        rec.cycle.push_back(powers[k - 1]);
      }
      return rec;
    }

  }  // namespace

  std::optional<std::array<Element, 3>>
  find_non_associative_triple(std::size_t order,
                              std::span<Element const> table) {
    for (Element i = 0; i < order; ++i) {
      for (Element j = 0; j < order; ++j) {
        Element ij = table[i * order + j];
        for (Element k = 0; k < order; ++k) {
          if (table[ij * order + k] != table[i * order + table[j * order + k]]) {
            return std::array<Element, 3>{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  Semigroup::Semigroup(std::size_t order, std::vector<Element> table,
                       std::vector<std::string> labels)
      : order_(order),
        table_(std::move(table)),
        labels_(std::move(labels)),
        idempotent_(order),
        omega_() {
    omega_.reserve(order_);
    for (Element x = 0; x < order_; ++x) {
      idempotent_[x] = product(x, x) == x;
      omega_.push_back(compute_omega(order_, table_, x));
    }
  }

  Semigroup Semigroup::from_trusted_table(std::size_t          order,
                                          std::vector<Element> table,
                                          std::vector<std::string> labels) {
    check_range(order, table);
    if (!labels.empty() && labels.size() != order) {
      throw Error(ErrorCode::InvalidArgument,
                  "label count does not match the order");
    }
    return Semigroup(order, std::move(table), std::move(labels));
  }

  Semigroup Semigroup::from_table(std::size_t          order,
                                  std::vector<Element> table,
                                  std::vector<std::string> labels) {
    check_range(order, table);
    if (auto bad = find_non_associative_triple(order, table)) {
      auto [i, j, k] = *bad;
      std::ostringstream os;
      os << "not associative: (" << i << "*" << j << ")*" << k
         << " != " << i << "*(" << j << "*" << k << ")";
      throw Error(ErrorCode::NotAssociative, os.str());
    }
    return from_trusted_table(order, std::move(table), std::move(labels));
  }

  Semigroup Semigroup::from_rows(std::vector<std::vector<Element>> const& rows,
                                 std::vector<std::string>                 labels) {
    std::size_t          n = rows.size();
    std::vector<Element> table;
    table.reserve(n * n);
    for (auto const& r : rows) {
      if (r.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "Cayley table must be square");
      }
      table.insert(table.end(), r.begin(), r.end());
    }
    return from_table(n, std::move(table), std::move(labels));
  }

  std::vector<Element> Semigroup::idempotents() const {
    std::vector<Element> out;
    for (Element x = 0; x < order_; ++x) {
      if (idempotent_[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::string Semigroup::label(Element x) const {
    return labels_.empty() ? std::to_string(x) : labels_[x];
  }

  bool Semigroup::is_commutative() const noexcept {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = a + 1; b < order_; ++b) {
        if (product(a, b) != product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  SubSemigroup restrict_to(Semigroup const& parent, ElementMask const& members) {
    std::size_t          n = parent.order();
    std::vector<Element> to_parent;
    std::vector<Element> to_local(n, 0);
    for (Element x = 0; x < n; ++x) {
      if (members[x]) {
        to_local[x] = static_cast<Element>(to_parent.size());
        to_parent.push_back(x);
      }
    }
    if (to_parent.empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty subsemigroup");
    }
    std::size_t          m = to_parent.size();
    std::vector<Element> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Element p = parent.product(to_parent[i], to_parent[j]);
        if (!members[p]) {
          throw Error(ErrorCode::InvalidArgument,
                      "subset is not closed under multiplication");
        }
        table[i * m + j] = to_local[p];
      }
    }
    std::vector<std::string> labels;
    if (parent.has_labels()) {
      for (Element x : to_parent) {
        labels.push_back(parent.label(x));
      }
    }
    return SubSemigroup{members, std::move(to_parent),
                        Semigroup::from_trusted_table(m, std::move(table),
                                                      std::move(labels))};
  }

  ElementMask closure_mask(Semigroup const& s, std::span<Element const> gens) {
    ElementMask          mask(s.order(), false);
    std::vector<Element> found;
    std::vector<Element> g;
    for (Element x : gens) {
      if (x >= s.order()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "generator " + std::to_string(x) + " out of range");
      }
      if (!mask[x]) {
        mask[x] = true;
        found.push_back(x);
        g.push_back(x);
      }
    }
    // Right multiplication by generators reaches every product of generators.
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (Element y : g) {
        Element p = s.product(found[i], y);
        if (!mask[p]) {
          mask[p] = true;
          found.push_back(p);
        }
      }
    }
    return mask;
  }

  SubSemigroup closure(Semigroup const& s, std::span<Element const> gens) {
    if (gens.empty()) {
      throw Error(ErrorCode::InvalidArgument, "closure needs a generator");
    }
    return restrict_to(s, closure_mask(s, gens));
  }

  IndexPeriod index_period(Semigroup const& s, Element x) {
    if (x >= s.order()) {
      throw Error(ErrorCode::IndexOutOfRange, "element out of range");
    }
    auto const& rec = s.omega(x);
    return {rec.index, rec.period};
  }

  Element omega_power(Semigroup const& s, Element x, long k) {
    auto const& rec = s.omega(x);
    long        p   = static_cast<long>(rec.period);
    long        r   = ((k % p) + p) % p;
    return rec.cycle[static_cast<std::size_t>(r)];
  }

  std::vector<Element> Partition::members(std::size_t id) const {
    std::vector<Element> out;
    for (Element x = 0; x < class_of.size(); ++x) {
      if (class_of[x] == id) {
        out.push_back(x);
      }
    }
    return out;
  }

  ElementMask right_ideal_mask(Semigroup const& s, Element x) {
    ElementMask m(s.order(), false);
    m[x] = true;
    for (Element y : s.row(x)) {
      m[y] = true;
    }
    return m;
  }

  ElementMask left_ideal_mask(Semigroup const& s, Element x) {
    ElementMask m(s.order(), false);
    m[x] = true;
    for (Element y = 0; y < s.order(); ++y) {
      m[s.product(y, x)] = true;
    }
    return m;
  }

  ElementMask two_sided_ideal_mask(Semigroup const& s, Element x) {
    ElementMask left = left_ideal_mask(s, x);
    ElementMask m    = left;
    for (Element y = 0; y < s.order(); ++y) {
      if (left[y]) {
        for (Element z : s.row(y)) {
          m[z] = true;
        }
      }
    }
    return m;
  }

  namespace {

    template <typename Key>
    Partition partition_by(std::vector<Key> const& keys) {
      Partition                  p;
      std::map<Key, std::size_t> ids;
      p.class_of.assign(keys.size(), 0);
      for (Element x = 0; x < keys.size(); ++x) {
        auto [it, inserted] = ids.try_emplace(keys[x], p.reps.size());
        if (inserted) {
          p.reps.push_back(x);
        }
        p.class_of[x] = it->second;
      }
      return p;
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

  }  // namespace

  GreenData green_classes(Semigroup const& s) {
    std::size_t              n = s.order();
    std::vector<ElementMask> r(n), l(n);
    for (Element x = 0; x < n; ++x) {
      r[x] = right_ideal_mask(s, x);
      l[x] = left_ideal_mask(s, x);
    }
    GreenData g;
    g.r = partition_by(r);
    g.l = partition_by(l);
    std::vector<std::pair<std::size_t, std::size_t>> h(n);
    for (Element x = 0; x < n; ++x) {
      h[x] = {g.r.class_of[x], g.l.class_of[x]};
    }
    g.h = partition_by(h);
    // In a finite semigroup J = D = R o L: join R- and L-classes.
    std::vector<std::size_t> parent(n);
    for (std::size_t x = 0; x < n; ++x) {
      parent[x] = x;
    }
    auto join = [&](std::size_t a, std::size_t b) {
      parent[find_root(parent, a)] = find_root(parent, b);
    };
    for (Element x = 0; x < n; ++x) {
      join(x, g.r.reps[g.r.class_of[x]]);
      join(x, g.l.reps[g.l.class_of[x]]);
    }
    std::vector<std::size_t> root(n);
    for (std::size_t x = 0; x < n; ++x) {
      root[x] = find_root(parent, x);
    }
    g.j = partition_by(root);
    return g;
  }

  SubSemigroup principal_ideal(Semigroup const& s, Element a, Side side) {
    if (a >= s.order()) {
      throw Error(ErrorCode::IndexOutOfRange, "element out of range");
    }
    ElementMask m = side == Side::left ? left_ideal_mask(s, a)
                                       : right_ideal_mask(s, a);
    return restrict_to(s, m);
  }

}  // namespace pcs
