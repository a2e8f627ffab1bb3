/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include "ffneg/bounds.hpp"
#include "ffneg/experiments.hpp"
#include "ffneg/gaussian.hpp"
#include "ffneg/negativity.hpp"

namespace ffneg {

  /// %.17g, with "inf", "-inf" and "nan" for non-finite values.
  std::string format_double(double v);

  /// {"n_modes": N, "m": [row-major 2N x 2N]}
  std::string covariance_to_json(const CovarianceMatrix &gamma);
  /// Rejects unknown keys and malformed shapes (ErrorCode::kConfig); the
  /// matrix itself goes through CovarianceMatrix::from_matrix.
  CovarianceMatrix covariance_from_json(const std::string &text);

  /// {"value", "roots": [{"re", "im"}], "infinite_count"}
  std::string negativity_to_json(const NegativityResult &result);

  std::string bound_report_to_json(const BoundReport &report);

  /// Header row plus one line per row, no trailing metadata.
  std::string table_to_csv(const Table &table);

  std::string format_cell(const Cell &cell);

}  // namespace ffneg
