// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// Membership oracles for the basic pseudovarieties, plus the generic tests
// for Mal'cev products with constant bands and for V * RZ with V local.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcskit/semigroup.hpp"

namespace pcs {

  enum class Variety { T, RZ, LZ, RB, G, CS, J, BG, ER, EL };

  std::string_view to_string(Variety v) noexcept;
  // Case-insensitive; throws Error(UnknownVariety).
  Variety parse_variety(std::string_view name);

  // Which test backs a verdict. Only BG/ER/EL have an identity engine and
  // only BG has the unique-inverse engine.
  enum class Engine { structural, identity, unique_inverse };

  std::string_view to_string(Engine e) noexcept;
  Engine           parse_engine(std::string_view name);
  bool             has_engine(Variety v, Engine e) noexcept;

  struct Membership {
    bool                 member = true;
    std::vector<Element> witness;  // violating element(s), empty on success
    std::string          reason;
  };

  Membership is_member(Semigroup const& s, Variety v,
                       Engine engine = Engine::structural);

  enum class BandVariety { RZ, LZ, RB };

  struct IdealMembership {
    bool                 member = true;
    std::vector<Element> anchors;  // the failing a, or (a, b)
    Membership           inner;    // verdict on the failing subsemigroup
  };

  // V m RZ: every L(a) in V. V m LZ: every R(a) in V. V m RB: every
  // {ab} u aSb (a != b) and every {a, a^2} u aSa in V. Pairs are scanned
  // lexicographically.
  IdealMembership malcev_with_band(Variety v, Semigroup const& s,
                                   BandVariety kind);

  // The subsemigroup {ab} u aSb for a != b, {a, a^2} u aSa for a == b.
  ElementMask malcev_rb_preimage(Semigroup const& s, Element a, Element b);

  // aSb.
  ElementMask sandwich_set(Semigroup const& s, Element a, Element b);

  // V * RZ for a local V: the right regular representation image of every
  // L(a) lies in V. Locality of V is the caller's responsibility.
  IdealMembership star_rz_membership(Variety v, Semigroup const& s);

}  // namespace pcs
