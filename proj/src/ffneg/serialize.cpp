/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "ffneg/error.hpp"

namespace ffneg {

  namespace {
    using nlohmann::json;

    json number(double v) {
      if (std::isfinite(v)) {
        return v;
      }
      return format_double(v);
    }
  }  // namespace

  std::string format_double(double v) {
    if (std::isnan(v)) {
      return "nan";
    }
    if (std::isinf(v)) {
      return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

  std::string covariance_to_json(const CovarianceMatrix &gamma) {
    json j;
    j["n_modes"] = gamma.n_modes();
    const RealMatrix &m = gamma.m();
    json flat = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        flat.push_back(m(r, c));
      }
    }
    j["m"] = std::move(flat);
    return j.dump();
  }

  CovarianceMatrix covariance_from_json(const std::string &text) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error &e) {
      throw Error(ErrorCode::kConfig, std::string("covariance JSON: ") + e.what());
    }
    require(j.is_object(), ErrorCode::kConfig, "covariance JSON must be an object");
    for (const auto &item : j.items()) {
      require(item.key() == "n_modes" || item.key() == "m", ErrorCode::kConfig,
              "covariance JSON: unknown key '" + item.key() + "'");
    }
    require(j.contains("n_modes") && j["n_modes"].is_number_integer(), ErrorCode::kConfig,
            "covariance JSON: n_modes must be an integer");
    const int n = j["n_modes"].get<int>();
    require(n >= 1, ErrorCode::kConfig, "covariance JSON: n_modes must be positive");
    require(j.contains("m") && j["m"].is_array(), ErrorCode::kConfig, "covariance JSON: m must be an array");
    const json &flat = j["m"];
    const std::size_t dim = 2 * static_cast<std::size_t>(n);
    require(flat.size() == dim * dim, ErrorCode::kConfig,
            "covariance JSON: m must hold (2 n_modes)^2 = " + std::to_string(dim * dim) + " numbers");
    RealMatrix m(dim, dim);
    for (std::size_t i = 0; i < flat.size(); ++i) {
      require(flat[i].is_number(), ErrorCode::kConfig, "covariance JSON: m entries must be numbers");
      m(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) = flat[i].get<double>();
    }
    return CovarianceMatrix::from_matrix(m);
  }

  std::string negativity_to_json(const NegativityResult &result) {
    json j;
    j["value"] = number(result.value);
    json roots = json::array();
    for (const Complex &r : result.spectrum.roots) {
      roots.push_back({{"re", number(r.real() + 0.0)}, {"im", number(r.imag() + 0.0)}});
    }
    j["roots"] = std::move(roots);
    j["infinite_count"] = result.spectrum.infinite_count;
    return j.dump();
  }

  std::string bound_report_to_json(const BoundReport &r) {
    json j;
    j["upper"] = r.upper_applicable ? number(r.upper) : json(nullptr);
    j["upper_applicable"] = r.upper_applicable;
    j["upper_at_boundary"] = r.upper_at_boundary;
    j["lower"] = number(r.lower);
    j["improved_lower"] = number(r.improved_lower);
    j["simple_upper"] = r.simple_upper_applicable ? number(r.simple_upper) : json(nullptr);
    j["simple_lower"] = number(r.simple_lower);
    j["k_plus"] = number(r.k_plus);
    j["k_minus"] = number(r.k_minus);
    j["gamma_ab_opnorm"] = number(r.gamma_ab_opnorm);
    j["gamma_ab_frobenius"] = number(r.gamma_ab_frobenius);
    return j.dump();
  }

  std::string format_cell(const Cell &cell) {
    if (const auto *d = std::get_if<double>(&cell)) {
      return format_double(*d);
    }
    if (const auto *i = std::get_if<long long>(&cell)) {
      return std::to_string(*i);
    }
    return std::get<std::string>(cell);
  }

  std::string table_to_csv(const Table &table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out += (c ? "," : "") + table.columns[c];
    }
    out += '\n';
    for (const auto &row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) {
          out += ',';
        }
        out += format_cell(row[c]);
      }
      out += '\n';
    }
    return out;
  }

}  // namespace ffneg
