// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// Semigroup populations and the sweep that runs every PCS method over them.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcskit/pcs.hpp"
#include "pcskit/semigroup.hpp"

namespace pcs {

  inline constexpr std::size_t max_enumeration_order = 5;
  inline constexpr std::size_t max_dedup_order       = 4;

  // Calls `visit` on every associative table of the given order, in
  // lexicographic order of the row-major table. With dedup, only tables that
  // are minimal among all their relabelings are visited. Throws TooLarge.
  void for_each_semigroup(std::size_t order, bool dedup,
                          std::function<void(Semigroup const&)> const& visit);

  std::vector<Semigroup> enumerate_semigroups(std::size_t order, bool dedup);

  // The lexicographically least table among all relabelings of s.
  std::vector<Element> canonical_table(Semigroup const& s);

  // Self-maps of {0..d-1} as value lists; maps compose left to right,
  // so (fg)(i) = g(f(i)).
  using Transformation = std::vector<Element>;

  inline constexpr std::size_t default_transformation_cap = 3125;

  // Elements in order of discovery by breadth-first closure, generators
  // first. Throws InvalidArgument, TooLarge.
  Semigroup transformation_semigroup(std::size_t                        degree,
                                     std::vector<Transformation> const& gens,
                                     std::size_t cap = default_transformation_cap);

  // d <= 5, g <= 4; generators drawn from mt19937_64 seeded with `seed`.
  Semigroup random_transformation_semigroup(std::size_t degree, std::size_t gens,
                                            std::uint64_t seed);

  // Rees matrix semigroups over Z_k with |I|, |Lambda| <= max_side and every
  // sandwich matrix, in a fixed order.
  struct ReesSample {
    std::size_t          group_order = 1;
    std::size_t          i_size      = 1;
    std::size_t          lambda_size = 1;
    std::vector<Element> sandwich;
    std::string          name() const;
    Semigroup            build() const;
  };

  struct Population {
    enum class Kind { exhaustive, transformation, rees, power_of_cs };
    Kind          kind   = Kind::exhaustive;
    std::size_t   order  = 3;  // exhaustive: the order; power_of_cs: max |S|
    std::size_t   degree = 3;  // transformation
    std::size_t   gens   = 2;  // transformation
    std::size_t   count  = 10; // transformation, rees: samples drawn
    std::uint64_t seed   = 0;
    bool          with_empty = false;  // power_of_cs

    std::string describe() const;
  };

  struct CensusFailure {
    std::string          kind;  // "disagreement", "cs-not-member", ...
    std::size_t          order = 0;
    std::vector<Element> table;
    std::string          detail;

    auto operator<=>(CensusFailure const&) const = default;
  };

  struct CensusReport {
    std::string                              population;
    std::size_t                              count_examined = 0;
    std::size_t                              count_members  = 0;
    std::vector<CensusFailure>               disagreements;
    std::vector<CensusFailure>               failures;  // inclusion checks
    std::map<std::string, std::chrono::nanoseconds> timing;

    bool ok() const noexcept {
      return disagreements.empty() && failures.empty();
    }
  };

  // The semigroups a population describes, in a fixed order.
  std::vector<Semigroup> generate(Population const& p);

  // Runs all methods on every member of the population. Disagreements are
  // recorded, not thrown. Results do not depend on `threads`.
  CensusReport cross_validate(Population const& p, unsigned threads = 1);
  CensusReport cross_validate(std::vector<Semigroup> const& population,
                              std::string description, unsigned threads = 1);

}  // namespace pcs
