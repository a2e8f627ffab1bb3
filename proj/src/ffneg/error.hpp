/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ffneg {

  enum class ErrorCode {
    kInvalidArgument = 1,
    kConfig = 2,
    kNumerical = 3,
    kSingularGammaA = 4,
    kSizeCap = 5,
    kDivergent = 6,
    kUnitCircleEigenvalue = 7,
    kSingularBlock = 8,
    kInvalidState = 9,
  };

  const char *error_code_name(ErrorCode code);

  /// Base exception of the library. Every error carries a code that the C API
  /// maps onto its status enum.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

  inline void require(bool ok, ErrorCode code, const std::string &what) {
    if (!ok) {
      throw Error(code, what);
    }
  }

}  // namespace ffneg
