// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcs {

  enum class ErrorCode {
    InvalidArgument,
    IndexOutOfRange,
    NotAssociative,
    SyntaxError,
    EmptyTerm,
    UnboundVariable,
    UnknownName,
    UnknownVariety,
    TooLarge,
    NotAGroup,
    InvalidMatrix,
    NotCompletelySimple,
    NotInPCS,
    FreshVariableExhausted,
    MethodDisagreement,
    CoverNotFunctional,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Every failure raised by the library. `position` carries the byte offset
  // for syntax errors and is -1 otherwise.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message, long position = -1)
        : std::runtime_error(message), code_(code), position_(position) {}

    ErrorCode code() const noexcept {
      return code_;
    }
    long position() const noexcept {
      return position_;
    }

   private:
    ErrorCode code_;
    long      position_;
  };

}  // namespace pcs
