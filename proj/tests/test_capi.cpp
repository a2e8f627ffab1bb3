/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "ffneg/ffneg.h"

namespace {

  // tanh(beta J / 2) sigma_x (x) sigma_y, stored as Gamma = i m.
  std::vector<double> two_mode(double tau) {
    std::vector<double> m(16, 0.0);
    m[0 * 4 + 3] = -tau;
    m[3 * 4 + 0] = tau;
    m[1 * 4 + 2] = tau;
    m[2 * 4 + 1] = -tau;
    return m;
  }

  std::string take(char *s) {
    std::string out(s);
    ffneg_string_free(s);
    return out;
  }

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(ffneg_version(), "");
  EXPECT_STREQ(ffneg_status_name(FFNEG_OK), "ok");
  EXPECT_STREQ(ffneg_status_name(FFNEG_ERR_CONFIG), "config_error");
}

TEST(CApi, NegativityMethodsAgree) {
  ffneg_covariance *c = nullptr;
  const double bj = 1.0;
  ASSERT_EQ(ffneg_covariance_create(2, two_mode(std::tanh(0.5 * bj)).data(), &c), FFNEG_OK);
  const int a[] = {0};
  double pencil = 0.0, oracle = 0.0;
  ASSERT_EQ(ffneg_negativity(c, a, 1, FFNEG_METHOD_PENCIL, &pencil), FFNEG_OK);
  ASSERT_EQ(ffneg_negativity(c, a, 1, FFNEG_METHOD_ORACLE, &oracle), FFNEG_OK);
  const double expect = std::log(2.0 * std::cosh(bj) / (1.0 + std::cosh(bj)));
  EXPECT_NEAR(pencil, expect, 1e-12);
  EXPECT_NEAR(oracle, expect, 1e-12);
  double twisted = 0.0;
  EXPECT_EQ(ffneg_negativity(c, a, 1, FFNEG_METHOD_TWISTED, &twisted), FFNEG_ERR_SINGULAR_GAMMA_A);
  EXPECT_NE(std::string(ffneg_last_error()), "");
  ffneg_covariance_free(c);
}

TEST(CApi, InvalidInputs) {
  ffneg_covariance *c = nullptr;
  std::vector<double> bad(16, 0.0);
  bad[1] = 2.0;
  bad[4] = -2.0;
  EXPECT_EQ(ffneg_covariance_create(2, bad.data(), &c), FFNEG_ERR_INVALID_STATE);
  EXPECT_EQ(c, nullptr);
  EXPECT_EQ(ffneg_covariance_create(2, nullptr, &c), FFNEG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(ffneg_covariance_cdw(3, &c), FFNEG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(ffneg_covariance_from_json(R"({"n_modes":1,"m":[0,0,0,0],"x":0})", &c), FFNEG_ERR_CONFIG);
  ffneg_covariance_free(nullptr);
}

TEST(CApi, JsonRoundTrip) {
  ffneg_covariance *c = nullptr;
  ASSERT_EQ(ffneg_covariance_random(3, 17, 0.9, &c), FFNEG_OK);
  char *text = nullptr;
  ASSERT_EQ(ffneg_covariance_to_json(c, &text), FFNEG_OK);
  ffneg_covariance *back = nullptr;
  ASSERT_EQ(ffneg_covariance_from_json(text, &back), FFNEG_OK);
  ffneg_string_free(text);
  std::vector<double> m1(36), m2(36);
  ASSERT_EQ(ffneg_covariance_matrix(c, m1.data(), m1.size()), FFNEG_OK);
  ASSERT_EQ(ffneg_covariance_matrix(back, m2.data(), m2.size()), FFNEG_OK);
  EXPECT_EQ(m1, m2);
  EXPECT_EQ(ffneg_covariance_matrix(c, m1.data(), 5), FFNEG_ERR_INVALID_ARGUMENT);
  ffneg_covariance_free(c);
  ffneg_covariance_free(back);
}

TEST(CApi, BoundsAndJson) {
  ffneg_hamiltonian *h = nullptr;
  ASSERT_EQ(ffneg_hamiltonian_tight_binding(20, 1.0, &h), FFNEG_OK);
  ffneg_covariance *c = nullptr;
  ASSERT_EQ(ffneg_covariance_gibbs(h, 0.01, &c), FFNEG_OK);
  ffneg_bound_report r{};
  ASSERT_EQ(ffneg_bounds(c, nullptr, 0, 0.0, &r), FFNEG_OK);
  double e = 0.0;
  ASSERT_EQ(ffneg_negativity(c, nullptr, 0, FFNEG_METHOD_PENCIL, &e), FFNEG_OK);
  EXPECT_TRUE(r.upper_applicable);
  EXPECT_LE(r.lower, e);
  EXPECT_LE(e, r.upper);
  const std::string js = take([&] {
    char *s = nullptr;
    EXPECT_EQ(ffneg_bounds_json(c, nullptr, 0, &s), FFNEG_OK);
    return s;
  }());
  EXPECT_NE(js.find("\"k_minus\""), std::string::npos);
  ffneg_covariance_free(c);
  ffneg_hamiltonian_free(h);
}

TEST(CApi, DynamicsAndRate) {
  ffneg_hamiltonian *h = nullptr;
  ASSERT_EQ(ffneg_hamiltonian_create(2, std::vector<double>(16, 0.0).data(), &h), FFNEG_OK);
  ffneg_generator *g = nullptr;
  ASSERT_EQ(ffneg_generator_uniform_loss(h, 1.0, &g), FFNEG_OK);
  ffneg_covariance *c0 = nullptr;
  ASSERT_EQ(ffneg_covariance_create(2, two_mode(1.0).data(), &c0), FFNEG_OK);
  const int a[] = {0};
  ffneg_covariance *ct = nullptr;
  ASSERT_EQ(ffneg_evolve(c0, g, 0.3, FFNEG_EVOLVE_EXACT, 0.0, &ct), FFNEG_OK);
  double e = 0.0;
  ASSERT_EQ(ffneg_negativity(ct, a, 1, FFNEG_METHOD_PENCIL, &e), FFNEG_OK);
  const double x = std::exp(-0.3), d = (1 - x) * (1 - x);
  EXPECT_NEAR(e, 0.5 * std::log(2 * x * x + d + 2 * x * std::sqrt(x * x + d)), 1e-10);

  ffneg_rate_report rr{};
  ASSERT_EQ(ffneg_rate(ct, g, a, 1, &rr), FFNEG_OK);
  EXPECT_NEAR(rr.total, rr.local + rr.inter, 1e-12);
  EXPECT_NEAR(rr.magnitude_bound, 8.0, 1e-12);
  EXPECT_LE(std::abs(rr.total), rr.dgamma_trace_norm + 1e-12);

  ffneg_covariance *rk = nullptr;
  ASSERT_EQ(ffneg_evolve(c0, g, 0.3, FFNEG_EVOLVE_RK4, 1e-3, &rk), FFNEG_OK);
  double erk = 0.0;
  ASSERT_EQ(ffneg_negativity(rk, a, 1, FFNEG_METHOD_PENCIL, &erk), FFNEG_OK);
  EXPECT_NEAR(erk, e, 1e-9);

  std::vector<double> dm(16);
  ASSERT_EQ(ffneg_dgamma_dt(c0, g, dm.data(), dm.size()), FFNEG_OK);
  EXPECT_NEAR(dm[1] + dm[4], 0.0, 1e-15);

  ffneg_covariance_free(rk);
  ffneg_covariance_free(ct);
  ffneg_covariance_free(c0);
  ffneg_generator_free(g);
  ffneg_hamiltonian_free(h);
}

TEST(CApi, GeneratorFromOperators) {
  ffneg_hamiltonian *h = nullptr;
  ASSERT_EQ(ffneg_hamiltonian_kitaev(2, 1.0, &h), FFNEG_OK);
  EXPECT_EQ(ffneg_hamiltonian_n_modes(h), 2u);
  const double re[] = {0.5, 0, 0, 0};
  const double im[] = {0, 0.5, 0, 0};
  ffneg_generator *g = nullptr;
  ASSERT_EQ(ffneg_generator_create(h, 1, re, im, &g), FFNEG_OK);
  ffneg_generator_free(g);
  ffneg_hamiltonian *wrong = nullptr;
  std::vector<double> k(16, 0.0);
  k[1] = 1.0;
  EXPECT_EQ(ffneg_hamiltonian_create(2, k.data(), &wrong), FFNEG_ERR_INVALID_ARGUMENT);
  ffneg_hamiltonian_free(h);
}

TEST(CApi, Tables) {
  const double betas[] = {0.0, 0.1, 1.0};
  ffneg_temperature_sweep_config cfg{FFNEG_MODEL_TIGHT_BINDING, 8, 1.0, 0.0, betas, 3, nullptr, 0};
  ffneg_table *t = nullptr;
  ASSERT_EQ(ffneg_sweep_temperature(&cfg, 2, &t), FFNEG_OK);
  EXPECT_EQ(ffneg_table_rows(t), 3u);
  EXPECT_STREQ(ffneg_table_column_name(t, 0), "beta");
  double v = -1.0;
  ASSERT_EQ(ffneg_table_value(t, 0, 1, &v), FFNEG_OK);
  EXPECT_EQ(v, 0.0);
  EXPECT_EQ(ffneg_table_value(t, 9, 1, &v), FFNEG_ERR_INVALID_ARGUMENT);
  const std::string csv = take([&] {
    char *s = nullptr;
    EXPECT_EQ(ffneg_table_to_csv(t, &s), FFNEG_OK);
    return s;
  }());
  EXPECT_EQ(csv.rfind("beta,negativity,", 0), 0u);
  ffneg_table_free(t);

  ffneg_oracle_check_config oc{8, 2, 1, 0.9};
  EXPECT_EQ(ffneg_oracle_check(&oc, 1, &t), FFNEG_ERR_SIZE_CAP);
  oc.n_modes = 3;
  ASSERT_EQ(ffneg_oracle_check(&oc, 1, &t), FFNEG_OK);
  char *cell = nullptr;
  ASSERT_EQ(ffneg_table_cell_text(t, 0, 2, &cell), FFNEG_OK);
  EXPECT_NE(std::string(cell), "");
  ffneg_string_free(cell);
  EXPECT_EQ(ffneg_table_value(t, 0, 2, &v), FFNEG_ERR_INVALID_ARGUMENT);
  ffneg_table_free(t);

  ffneg_area_law_config al{nullptr, 0, 1.0, 0.8, 0.05};
  const int sizes[] = {10};
  al.sizes = sizes;
  al.n_sizes = 1;
  EXPECT_EQ(ffneg_sweep_area_law(&al, 1, &t), FFNEG_ERR_DIVERGENT);
}

TEST(CApi, AreaLawBound) {
  double v = 0.0;
  ASSERT_EQ(ffneg_area_law_bound(1.0, 2.0, 1, 1, 1.0, 1.0, &v), FFNEG_OK);
  EXPECT_NEAR(v, 0.25 / 6.0, 1e-15);
  EXPECT_EQ(ffneg_area_law_bound(1.0, 1.0, 1, 1, 1.0, 1.0, &v), FFNEG_ERR_DIVERGENT);
}
