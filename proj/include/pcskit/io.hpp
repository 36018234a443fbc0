// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// The .sg text format:
//
//   # optional comment lines
//   n
//   n lines of n whitespace-separated 0-based indices, row i = left factor i
//   labels: s0 s1 ...        (optional)

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pcskit/semigroup.hpp"

namespace pcs {

  // Throws SyntaxError (with the 1-based line as position), IndexOutOfRange,
  // NotAssociative.
  Semigroup read_sg(std::istream& in);
  Semigroup parse_sg(std::string_view text);
  Semigroup load_sg(std::string const& path);

  // Canonical form: no comments, single spaces, labels line when present.
  void        write_sg(std::ostream& out, Semigroup const& s);
  std::string format_sg(Semigroup const& s);

}  // namespace pcs
