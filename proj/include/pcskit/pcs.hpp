// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// Membership in PCS, the pseudovariety generated by power semigroups of
// completely simple semigroups, by seven independent methods that must
// always agree:
//
//   asb           every aSb is a block group
//   ideals        every L(a) is in ER and every R(a) is in EL
//   regrep        the right regular representation of every L(a) is a
//                 block group
//   basis:*       the pseudoidentity bases i, i-prime, ii and iii
//
// plus witness objects: the preimage structure of the relational morphism
// from P(S) into P(S/R) x S x P(S/L), the consolidated semigroup BG(S),
// and an explicit division of S into a wreath product of BG(S) over RZ(S).

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcskit/constructions.hpp"
#include "pcskit/semigroup.hpp"
#include "pcskit/terms.hpp"
#include "pcskit/varieties.hpp"

namespace pcs {

  enum class Method {
    asb,
    ideals,
    regrep,
    basis_i,
    basis_i_prime,
    basis_ii,
    basis_iii,
  };

  std::string_view    to_string(Method m) noexcept;
  Method              parse_method(std::string_view name);
  std::vector<Method> all_methods();

  // The pseudoidentities a basis method checks.
  std::vector<Pseudoidentity> basis_identities(Method m);

  struct MethodWitness {
    // asb: (a, b); ideals: (a); regrep: (a)
    std::vector<Element> anchors;
    // ideals only: the ideal that failed.
    std::optional<Side> side;
    // Violating elements inside the failing subsemigroup, in S's indices.
    std::vector<Element> inner;
    // basis methods only.
    std::string                   identity;
    std::optional<Counterexample> counterexample;
  };

  struct MethodResult {
    Method                       method;
    bool                         member = true;
    std::optional<MethodWitness> witness;
    std::chrono::nanoseconds     elapsed{0};
  };

  struct Verdict {
    bool                      member = true;
    std::vector<MethodResult> per_method;

    bool unanimous() const noexcept;
  };

  MethodResult run_method(Semigroup const& s, Method m);

  // Runs the requested methods (all when empty) without judging agreement.
  // threads > 1 runs methods concurrently; results keep the request order.
  Verdict evaluate_methods(Semigroup const& s, std::vector<Method> methods = {},
                           unsigned threads = 1);

  // As evaluate_methods, but disagreement between methods throws
  // Error(MethodDisagreement): it can only mean a bug.
  Verdict decide(Semigroup const& s, std::vector<Method> methods = {},
                 unsigned threads = 1);

  // Re-runs the failing test named by a witness. True when the witness still
  // demonstrates non-membership.
  bool replay_witness(Semigroup const& s, Method m, MethodWitness const& w);

  ////////////////////////////////////////////////////////////////////////
  // Preimages of the relational morphism X -> {XR} x X x {XL}
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_power_theorem_cap = 6;

  struct IdempotentPreimage {
    std::uint64_t              r_classes = 0;  // A, bit per R-class id
    Element                    idempotent = 0;  // e
    std::uint64_t              l_classes = 0;  // B, bit per L-class id
    std::vector<std::uint64_t> members;         // subsets X of S as masks
    std::uint64_t              s_ab   = 0;      // union of U n V
    std::uint64_t              base_i = 0;      // <idempotents of s_ab>

    bool closed              = false;
    bool j_trivial           = false;
    bool idempotents_cover_i = false;  // every idempotent F: F >= I, E_F = E_I
    bool contains_base_i     = false;

    bool passed() const noexcept {
      return closed && j_trivial && idempotents_cover_i && contains_base_i;
    }
  };

  struct PowerTheoremReport {
    std::size_t                     power_order      = 0;
    std::size_t                     triples_examined = 0;
    std::size_t                     r_class_count    = 0;
    std::size_t                     l_class_count    = 0;
    std::vector<IdempotentPreimage> preimages;  // the non-empty ones

    bool passed() const noexcept;
  };

  // Throws NotCompletelySimple, TooLarge.
  PowerTheoremReport verify_power_theorem(
      Semigroup const& s, std::size_t cap = default_power_theorem_cap);

  ////////////////////////////////////////////////////////////////////////
  // Consolidation and division
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_consolidation_cap = 8;

  // A non-zero element (a, sigma, b) of BG(S). Object 1 is encoded as
  // a == |S|; sigma lists its values on L~(a) (L(a) in ascending order, or
  // the single point 1).
  struct ConsolidationDescriptor {
    Element              source = 0;
    Element              target = 0;
    std::vector<Element> values;

    bool operator==(ConsolidationDescriptor const&) const = default;
    auto operator<=>(ConsolidationDescriptor const&) const = default;
  };

  // Element 0 of `result` is the zero; element k > 0 is descriptors[k - 1].
  struct Consolidation {
    std::size_t                          source_order = 0;
    std::vector<ConsolidationDescriptor> descriptors;
    Semigroup                            result;

    Element one() const noexcept {
      return static_cast<Element>(source_order);
    }
  };

  Consolidation consolidate(Semigroup const& s,
                            std::size_t      cap = default_consolidation_cap);

  inline constexpr std::size_t default_division_element_cap = 200000;

  struct DivisionReport {
    std::size_t                consolidation_order = 0;
    std::vector<WreathElement> elements;  // U, generators first
    Semigroup                  u;
    std::vector<Element>       cover;  // U element -> S element

    bool functional     = true;
    bool homomorphism   = false;
    bool surjective     = false;

    bool verified() const noexcept {
      return functional && homomorphism && surjective;
    }
  };

  // Throws NotInPCS, TooLarge, CoverNotFunctional.
  DivisionReport division_witness(
      Semigroup const& s, std::size_t cap = default_consolidation_cap,
      std::size_t element_cap = default_division_element_cap);

  // P(G) is a block group. Throws NotAGroup, TooLarge.
  bool check_pg_equals_bg(Semigroup const& g, std::size_t cap = 12);

}  // namespace pcs
