// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "pcskit/error.hpp"
#include "pcskit/io.hpp"

using namespace pcs;
using namespace fixtures;

namespace {

  ErrorCode parse_error(std::string_view text) {
    try {
      parse_sg(text);
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
  }

}  // namespace

TEST_CASE("reading .sg text") {
  Semigroup s = parse_sg("# RZ2\n\n2\n0 1\n  0   1 \nlabels: a b\n");
  CHECK(s.table() == rz2().table());
  CHECK(s.labels() == std::vector<std::string>{"a", "b"});

  CHECK(parse_sg("1\n0\n").order() == 1);
  CHECK(parse_error("2\n0 1\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("2\n0 1\n0\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("two\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("") == ErrorCode::SyntaxError);
  CHECK(parse_error("2\n0 1\n0 1\nlabels: a\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("2\n0 5\n0 1\n") == ErrorCode::IndexOutOfRange);
  CHECK(parse_error("2\n0 0\n1 0\n") == ErrorCode::NotAssociative);
  try {
    parse_sg("# header\n2\n0 1\n0 x\n");
  } catch (Error const& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE(".sg round trip") {
  for (Semigroup const& s : {b2(), rz2_mon(), trivial()}) {
    std::string text = format_sg(s);
    Semigroup   back = parse_sg(text);
    CHECK(back == s);
    CHECK(back.labels() == s.labels());
    CHECK(format_sg(back) == text);
  }
  CHECK(format_sg(rz2()) == "2\n0 1\n0 1\nlabels: a b\n");
}
