// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pcskit/semigroup.hpp"

namespace pcs {

  inline constexpr std::size_t default_power_cap   = 12;
  inline constexpr std::size_t default_product_cap = 4096;

  // Non-empty subsets of `base` (and the empty set when requested) under
  // set-wise multiplication. Element k of `result` is the subset
  // `subset_of[k]`, a bit mask over base elements; elements are ordered by
  // ascending mask, so with_empty puts the empty set at index 0.
  struct PowerSemigroup {
    bool                       with_empty = false;
    std::vector<std::uint64_t> subset_of;
    Semigroup                  result;

    Element element_of(std::uint64_t mask) const noexcept {
      return static_cast<Element>(with_empty ? mask : mask - 1);
    }
  };

  PowerSemigroup power_semigroup(Semigroup const& base, bool with_empty,
                                 std::size_t cap = default_power_cap);

  // Product of two subsets of `base`, as masks.
  std::uint64_t subset_product(Semigroup const& base, std::uint64_t x,
                               std::uint64_t y);

  enum class BandKind { right_zero, left_zero, rectangular };

  // right_zero/left_zero use `rows` as the size. rectangular is rows x cols
  // with (i, j) at index i * cols + j and (i, j)(p, q) = (i, q).
  Semigroup free_constant_band(BandKind kind, std::size_t rows,
                               std::size_t cols = 1);

  Semigroup cyclic_group(std::size_t n);

  // Elements (i, g, l) at index (i * |G| + g) * lambda + l, with
  // (i, g, l)(j, h, m) = (i, g P[l][j] h, m). `sandwich` is lambda x i,
  // row-major.
  Semigroup rees_matrix(Semigroup const& group, std::size_t i_size,
                        std::size_t lambda_size,
                        std::vector<Element> const& sandwich);

  // Translations of a principal one-sided ideal. For Side::right the ideal
  // is L(a) and s acts as x -> xs; for Side::left it is R(a) with x -> sx.
  // `maps[k]` is the k-th distinct translation given as values on the ideal
  // (in local indices); `projection[i]` is the image index of the i-th
  // ideal element.
  struct RegularRepresentation {
    Element                           anchor = 0;
    Side                              side   = Side::right;
    SubSemigroup                      ideal;
    std::vector<std::vector<Element>> maps;
    std::vector<Element>              projection;
    Semigroup                         image;
  };

  RegularRepresentation regular_representation_image(Semigroup const& s,
                                                     Element a, Side side);

  // (s, t) at index s * |T| + t.
  Semigroup direct_product(Semigroup const& s, Semigroup const& t,
                           std::size_t cap = default_product_cap);

  // Pairs (f, t): f maps each of `coordinates` coordinates into W, t is a
  // point of the right zero semigroup on m points; coordinates = m, plus
  // one when extra_coordinate is set (the extra one is never a base
  // point). (f, t)(g, u) = (h, u) with h(c) = f(c) g(t).
  struct WreathElement {
    std::vector<Element> f;
    Element              t = 0;

    bool operator==(WreathElement const&) const = default;
    auto operator<=>(WreathElement const&) const = default;
  };

  WreathElement wreath_product_rule(Semigroup const& w, WreathElement const& x,
                                    WreathElement const& y);

  // Full wreath product; elements indexed with f read as a base-|W| number
  // (coordinate 0 most significant), times m, plus t.
  Semigroup wreath_right_zero(Semigroup const& w, std::size_t m,
                              bool        extra_coordinate,
                              std::size_t cap = default_product_cap);

}  // namespace pcs
