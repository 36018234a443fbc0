// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// Omega-terms and pseudoidentities over finite semigroups.
//
// Concrete syntax:
//   term     := factor+
//   factor   := atom exponent*
//   atom     := 'a'..'z' | '(' term ')'
//   exponent := '^w' | '^(w+K)' | '^(w-K)' | '^K'      (K >= 2 for '^K')
//   identity := term '=' term
// Whitespace is ignored. In a finite semigroup x^w is the idempotent power
// of x and x^(w+k) is x^w x^(k mod period).

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcskit/semigroup.hpp"

namespace pcs {

  class Term {
   public:
    enum class Kind { variable, concat, omega_power, int_power };

    static Term variable(char name);
    // Flattens nested concatenations; a single factor is returned as is.
    static Term concat(std::vector<Term> factors);
    static Term omega(Term base, long offset = 0);
    static Term power(Term base, long exponent);

    Kind kind() const noexcept {
      return kind_;
    }
    char name() const noexcept {
      return name_;
    }
    // omega offset k (exponent w + k) or integer exponent.
    long exponent() const noexcept {
      return exponent_;
    }
    std::vector<Term> const& children() const noexcept {
      return children_;
    }
    Term const& base() const noexcept {
      return children_.front();
    }

    bool operator==(Term const&) const = default;

   private:
    Term() = default;

    Kind              kind_     = Kind::variable;
    char              name_     = 0;
    long              exponent_ = 0;
    std::vector<Term> children_;
  };

  struct Pseudoidentity {
    Term        lhs;
    Term        rhs;
    std::string name;

    bool operator==(Pseudoidentity const& that) const {
      return lhs == that.lhs && rhs == that.rhs;
    }
  };

  Term           parse_term(std::string_view text);
  Pseudoidentity parse_identity(std::string_view text);

  std::string format(Term const& t);
  std::string format(Pseudoidentity const& id);

  // Variables in order of first occurrence (lhs before rhs).
  std::vector<char> variables(Term const& t);
  std::vector<char> variables(Pseudoidentity const& id);

  Term substitute(Term const& t, std::array<std::optional<Term>, 26> const& sub);

  // Consistent renaming of variables to a, b, c, ... by first occurrence.
  Pseudoidentity canonical_renaming(Pseudoidentity const& id);

  // Values indexed by letter - 'a'; unused slots are ignored.
  using Assignment = std::array<Element, 26>;
  inline constexpr Element unbound = static_cast<Element>(-1);

  Assignment empty_assignment();

  // Throws Error(UnboundVariable).
  Element evaluate(Semigroup const& s, Term const& t, Assignment const& alpha);

  struct Counterexample {
    std::vector<std::pair<char, Element>> assignment;
    Element                               lhs_value = 0;
    Element                               rhs_value = 0;
  };

  struct CheckResult {
    bool                          satisfied = true;
    std::optional<Counterexample> counterexample;
  };

  // Exhaustive over all |S|^v assignments; reports the first failing
  // assignment in lexicographic order (variables by first occurrence,
  // elements ascending).
  CheckResult check(Semigroup const& s, Pseudoidentity const& id);

  // The identities x pi(y1 x, ..., yn x) = x sigma(y1 x, ..., yn x) where
  // each yi is either xi or empty; empty positions substitute xi -> x. The
  // fresh x is the first letter not used by the input. The first result
  // keeps every position.
  std::vector<Pseudoidentity> transform_star_rz(Pseudoidentity const& id);

  std::vector<std::string> builtin_names();
  // Throws Error(UnknownName).
  Pseudoidentity builtin(std::string_view name);

}  // namespace pcs
