/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/diagnostics.hpp"

#include <iostream>
#include <mutex>

#include "ffneg/error.hpp"

namespace ffneg {

  namespace {
    std::mutex sink_mutex;

    DiagnosticSink &sink_ref() {
      static DiagnosticSink sink = default_diagnostic_sink();
      return sink;
    }

    void emit(Severity severity, const std::string &message) {
      std::lock_guard lock(sink_mutex);
      if (auto &sink = sink_ref()) {
        sink(severity, message);
      }
    }
  }  // namespace

  const char *error_code_name(ErrorCode code) {
    switch (code) {
      case ErrorCode::kInvalidArgument:
        return "invalid_argument";
      case ErrorCode::kConfig:
        return "config_error";
      case ErrorCode::kNumerical:
        return "numerical_error";
      case ErrorCode::kSingularGammaA:
        return "singular_gamma_a";
      case ErrorCode::kSizeCap:
        return "size_cap_exceeded";
      case ErrorCode::kDivergent:
        return "divergent";
      case ErrorCode::kUnitCircleEigenvalue:
        return "unit_circle_eigenvalue";
      case ErrorCode::kSingularBlock:
        return "singular_block";
      case ErrorCode::kInvalidState:
        return "invalid_state";
    }
    return "unknown";
  }

  DiagnosticSink default_diagnostic_sink() {
    return [](Severity severity, const std::string &msg) {
      if (severity == Severity::kWarning) {
        std::cerr << "ffneg warning: " << msg << '\n';
      }
    };
  }

  void set_diagnostic_sink(DiagnosticSink sink) {
    std::lock_guard lock(sink_mutex);
    sink_ref() = std::move(sink);
  }

  void warn(const std::string &message) {
    emit(Severity::kWarning, message);
  }

  void debug(const std::string &message) {
    emit(Severity::kDebug, message);
  }

}  // namespace ffneg
