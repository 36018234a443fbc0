// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// Finite semigroups given by Cayley tables, and the primitive algebra on
// them: generated subsemigroups, omega powers, Green's relations, principal
// one-sided ideals and a bounded division search.
//
// Elements are 0-based indices and table(i, j) is the product i*j with the
// left factor indexing the row. Adjoined identities (S^1) are never
// materialised; the functions below treat them implicitly.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcs {

  using Element     = std::uint32_t;
  using ElementMask = std::vector<bool>;

  // Powers x, x^2, ... of an element eventually cycle: x^(index + period) =
  // x^index with both values minimal. `cycle[j]` is x^(w + j) where x^w is
  // the unique idempotent power.
  struct OmegaRecord {
    std::size_t          index  = 1;
    std::size_t          period = 1;
    std::vector<Element> cycle;
  };

  class Semigroup {
   public:
    // The trivial semigroup.
    Semigroup() : Semigroup(1, {0}, {}) {}

    // Validates range and associativity; throws Error(IndexOutOfRange) or
    // Error(NotAssociative) naming the first violating triple.
    static Semigroup from_rows(std::vector<std::vector<Element>> const& rows,
                               std::vector<std::string> labels = {});
    static Semigroup from_table(std::size_t          order,
                                std::vector<Element> table,
                                std::vector<std::string> labels = {});

    // For constructions whose associativity is guaranteed by the way the
    // table was produced. Range is still checked.
    static Semigroup from_trusted_table(std::size_t          order,
                                        std::vector<Element> table,
                                        std::vector<std::string> labels = {});

    std::size_t order() const noexcept {
      return order_;
    }

    Element product(Element a, Element b) const noexcept {
      return table_[a * order_ + b];
    }

    std::span<Element const> row(Element a) const noexcept {
      return {table_.data() + a * order_, order_};
    }

    std::vector<Element> const& table() const noexcept {
      return table_;
    }

    bool is_idempotent(Element x) const noexcept {
      return idempotent_[x];
    }

    std::vector<Element> idempotents() const;

    OmegaRecord const& omega(Element x) const noexcept {
      return omega_[x];
    }

    bool has_labels() const noexcept {
      return !labels_.empty();
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    // Label if present, otherwise the decimal index.
    std::string label(Element x) const;

    bool is_commutative() const noexcept;

    bool operator==(Semigroup const& that) const noexcept {
      return order_ == that.order_ && table_ == that.table_;
    }

   private:
    Semigroup(std::size_t order, std::vector<Element> table,
              std::vector<std::string> labels);

    std::size_t              order_;
    std::vector<Element>     table_;
    std::vector<std::string> labels_;
    std::vector<bool>        idempotent_;
    std::vector<OmegaRecord> omega_;
  };

  // First (i, j, k) in lexicographic order with (ij)k != i(jk), if any.
  std::optional<std::array<Element, 3>>
  find_non_associative_triple(std::size_t order,
                              std::span<Element const> table);

  // A multiplicatively closed subset of a parent semigroup, together with
  // its own re-indexed Cayley table. Local index k corresponds to the k-th
  // smallest member of the parent.
  struct SubSemigroup {
    ElementMask          members;
    std::vector<Element> to_parent;
    Semigroup            local;

    std::size_t size() const noexcept {
      return to_parent.size();
    }
    bool contains(Element parent_element) const {
      return members[parent_element];
    }
  };

  // Restriction of `parent` to `members`. Throws InvalidArgument when the
  // mask is empty or not closed.
  SubSemigroup restrict_to(Semigroup const& parent, ElementMask const& members);

  ElementMask closure_mask(Semigroup const& s, std::span<Element const> gens);
  SubSemigroup closure(Semigroup const& s, std::span<Element const> gens);

  struct IndexPeriod {
    std::size_t index;
    std::size_t period;
  };
  IndexPeriod index_period(Semigroup const& s, Element x);

  // x^(w + k), with k reduced modulo the period of x.
  Element omega_power(Semigroup const& s, Element x, long k = 0);

  // Partition of the elements into classes; class ids are assigned in order
  // of the smallest member, so class 0 always contains element 0.
  struct Partition {
    std::vector<std::size_t> class_of;
    std::vector<Element>     reps;

    std::size_t count() const noexcept {
      return reps.size();
    }
    std::vector<Element> members(std::size_t id) const;
  };

  struct GreenData {
    Partition r;
    Partition l;
    Partition j;
    Partition h;
  };

  GreenData green_classes(Semigroup const& s);

  // x S^1 and S^1 x, S^1 x S^1 as element masks.
  ElementMask right_ideal_mask(Semigroup const& s, Element x);
  ElementMask left_ideal_mask(Semigroup const& s, Element x);
  ElementMask two_sided_ideal_mask(Semigroup const& s, Element x);

  enum class Side { left, right };

  // left: Sa u {a}; right: aS u {a}.
  SubSemigroup principal_ideal(Semigroup const& s, Element a, Side side);

  // S is a homomorphic image of a subsemigroup of T.
  struct Division {
    ElementMask          subsemigroup;  // inside T
    std::vector<Element> map;           // T element -> S element; only
                                        // entries of members are meaningful
  };

  struct DivisionAnswer {
    enum class Kind { yes, no, too_large };
    Kind                    kind = Kind::no;
    std::optional<Division> witness;
  };

  inline constexpr std::size_t default_division_cap = 12;

  DivisionAnswer divides(Semigroup const& s, Semigroup const& t,
                         std::size_t cap = default_division_cap);

  // A surjective homomorphism from `u` onto `s` if one exists.
  std::optional<std::vector<Element>>
  find_surjective_homomorphism(Semigroup const& u, Semigroup const& s);

  bool is_homomorphism(Semigroup const& from, Semigroup const& to,
                       std::span<Element const> map);

}  // namespace pcs
