/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <functional>
#include <string>

namespace ffneg {

  enum class Severity { kDebug, kWarning };

  using DiagnosticSink = std::function<void(Severity, const std::string &)>;

  /// Replaces the process-wide diagnostic sink. The default sink prints
  /// warnings to stderr and drops debug messages. Passing an empty function
  /// silences everything.
  void set_diagnostic_sink(DiagnosticSink sink);
  DiagnosticSink default_diagnostic_sink();

  void warn(const std::string &message);
  void debug(const std::string &message);

}  // namespace ffneg
