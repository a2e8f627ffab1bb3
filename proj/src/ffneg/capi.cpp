/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/ffneg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "ffneg/bounds.hpp"
#include "ffneg/diagnostics.hpp"
#include "ffneg/dynamics.hpp"
#include "ffneg/error.hpp"
#include "ffneg/experiments.hpp"
#include "ffneg/models.hpp"
#include "ffneg/negativity.hpp"
#include "ffneg/oracle.hpp"
#include "ffneg/rate.hpp"
#include "ffneg/serialize.hpp"

struct ffneg_covariance {
  ffneg::CovarianceMatrix value;
};

struct ffneg_hamiltonian {
  ffneg::QuadraticHamiltonian value;
};

struct ffneg_generator {
  ffneg::LindbladGenerator value;
};

struct ffneg_table {
  ffneg::Table value;
};

namespace {

  using ffneg::ErrorCode;

  thread_local std::string last_error;

  void fail(ErrorCode code, const std::string &what) {
    throw ffneg::Error(code, what);
  }

  template <typename T>
  void need(const T *ptr, const char *name) {
    if (ptr == nullptr) {
      fail(ErrorCode::kInvalidArgument, std::string(name) + " must not be NULL");
    }
  }

  template <typename Fn>
  ffneg_status guarded(Fn &&fn) {
    try {
      fn();
      return FFNEG_OK;
    } catch (const ffneg::Error &e) {
      last_error = e.what();
      return static_cast<ffneg_status>(e.code());
    } catch (const std::bad_alloc &) {
      last_error = "out of memory";
    } catch (const std::exception &e) {
      last_error = e.what();
    } catch (...) {
      last_error = "unknown error";
    }
    return FFNEG_ERR_INTERNAL;
  }

  char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  ffneg::RealMatrix read_square(const double *data, size_t n_modes) {
    const auto dim = static_cast<Eigen::Index>(2 * n_modes);
    ffneg::RealMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        m(r, c) = data[r * dim + c];
      }
    }
    return m;
  }

  void write_square(const ffneg::RealMatrix &m, double *out, size_t len) {
    if (len != static_cast<size_t>(m.size())) {
      fail(ErrorCode::kInvalidArgument, "output buffer must hold " + std::to_string(m.size()) + " values");
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out[r * m.cols() + c] = m(r, c);
      }
    }
  }

  int checked_modes(size_t n) {
    if (n == 0 || n > 4096) {
      fail(ErrorCode::kInvalidArgument, "n_modes must lie in [1, 4096]");
    }
    return static_cast<int>(n);
  }

  ffneg::Bipartition make_part(int n_modes, const int *modes_a, size_t n_a) {
    if (n_a == 0) {
      return ffneg::Bipartition::half(n_modes);
    }
    need(modes_a, "modes_a");
    return ffneg::Bipartition(n_modes, std::vector<int>(modes_a, modes_a + n_a));
  }

  template <typename T>
  std::vector<T> read_array(const T *data, size_t count, const char *name) {
    if (count == 0) {
      return {};
    }
    need(data, name);
    return std::vector<T>(data, data + count);
  }

  const ffneg::Cell &cell_at(const ffneg_table *table, size_t row, size_t col) {
    need(table, "table");
    const auto &t = table->value;
    if (row >= t.rows.size() || col >= t.columns.size()) {
      fail(ErrorCode::kInvalidArgument, "table index out of range");
    }
    return t.rows[row][col];
  }

  template <typename T>
  void publish(T value, T **out) {
    *out = new T(std::move(value));
  }

}  // namespace

extern "C" {

const char *ffneg_version(void) {
  return FFNEG_VERSION_STRING;
}

const char *ffneg_last_error(void) {
  return last_error.c_str();
}

const char *ffneg_status_name(ffneg_status status) {
  if (status == FFNEG_OK) {
    return "ok";
  }
  if (status == FFNEG_ERR_INTERNAL) {
    return "internal_error";
  }
  return ffneg::error_code_name(static_cast<ErrorCode>(status));
}

void ffneg_string_free(char *text) {
  std::free(text);
}

void ffneg_set_warnings_enabled(int enabled) {
  ffneg::set_diagnostic_sink(enabled ? ffneg::default_diagnostic_sink() : ffneg::DiagnosticSink{});
}

ffneg_status ffneg_covariance_create(size_t n_modes, const double *m, ffneg_covariance **out) {
  return guarded([&] {
    need(m, "m");
    need(out, "out");
    const int n = checked_modes(n_modes);
    publish(ffneg_covariance{ffneg::CovarianceMatrix::from_matrix(read_square(m, static_cast<size_t>(n)))}, out);
  });
}

ffneg_status ffneg_covariance_zero(size_t n_modes, ffneg_covariance **out) {
  return guarded([&] {
    need(out, "out");
    publish(ffneg_covariance{ffneg::CovarianceMatrix::zero(checked_modes(n_modes))}, out);
  });
}

ffneg_status ffneg_covariance_vacuum(size_t n_modes, ffneg_covariance **out) {
  return guarded([&] {
    need(out, "out");
    publish(ffneg_covariance{ffneg::vacuum_covariance(checked_modes(n_modes))}, out);
  });
}

ffneg_status ffneg_covariance_cdw(size_t n_modes, ffneg_covariance **out) {
  return guarded([&] {
    need(out, "out");
    publish(ffneg_covariance{ffneg::cdw_covariance(checked_modes(n_modes))}, out);
  });
}

ffneg_status ffneg_covariance_random(size_t n_modes, uint64_t seed, double nu_max, ffneg_covariance **out) {
  return guarded([&] {
    need(out, "out");
    publish(ffneg_covariance{ffneg::random_mixed_covariance(checked_modes(n_modes), seed, nu_max)}, out);
  });
}

ffneg_status ffneg_covariance_gibbs(const ffneg_hamiltonian *h, double beta, ffneg_covariance **out) {
  return guarded([&] {
    need(h, "h");
    need(out, "out");
    publish(ffneg_covariance{ffneg::gibbs_covariance(h->value, beta)}, out);
  });
}

ffneg_status ffneg_covariance_from_json(const char *json, ffneg_covariance **out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    publish(ffneg_covariance{ffneg::covariance_from_json(json)}, out);
  });
}

ffneg_status ffneg_covariance_to_json(const ffneg_covariance *gamma, char **out) {
  return guarded([&] {
    need(gamma, "gamma");
    need(out, "out");
    *out = dup_string(ffneg::covariance_to_json(gamma->value));
  });
}

size_t ffneg_covariance_n_modes(const ffneg_covariance *gamma) {
  return gamma ? static_cast<size_t>(gamma->value.n_modes()) : 0;
}

ffneg_status ffneg_covariance_matrix(const ffneg_covariance *gamma, double *out, size_t len) {
  return guarded([&] {
    need(gamma, "gamma");
    need(out, "out");
    write_square(gamma->value.m(), out, len);
  });
}

ffneg_status ffneg_covariance_purity(const ffneg_covariance *gamma, double *out) {
  return guarded([&] {
    need(gamma, "gamma");
    need(out, "out");
    *out = ffneg::purity(gamma->value);
  });
}

void ffneg_covariance_free(ffneg_covariance *gamma) {
  delete gamma;
}

ffneg_status ffneg_negativity(const ffneg_covariance *gamma, const int *modes_a, size_t n_a, ffneg_method method,
                              double *out) {
  return guarded([&] {
    need(gamma, "gamma");
    need(out, "out");
    const ffneg::Bipartition part = make_part(gamma->value.n_modes(), modes_a, n_a);
    switch (method) {
      case FFNEG_METHOD_PENCIL:
        *out = ffneg::negativity(gamma->value, part).value;
        return;
      case FFNEG_METHOD_TWISTED:
        *out = ffneg::negativity_via_twisted(gamma->value, part);
        return;
      case FFNEG_METHOD_ORACLE:
        *out = ffneg::oracle_negativity(gamma->value, part);
        return;
    }
    fail(ErrorCode::kInvalidArgument, "unknown negativity method");
  });
}

ffneg_status ffneg_negativity_json(const ffneg_covariance *gamma, const int *modes_a, size_t n_a, char **out) {
  return guarded([&] {
    need(gamma, "gamma");
    need(out, "out");
    const ffneg::Bipartition part = make_part(gamma->value.n_modes(), modes_a, n_a);
    *out = dup_string(ffneg::negativity_to_json(ffneg::negativity(gamma->value, part)));
  });
}

ffneg_status ffneg_bounds(const ffneg_covariance *gamma, const int *modes_a, size_t n_a, double k_override,
                          ffneg_bound_report *out) {
  return guarded([&] {
    need(gamma, "gamma");
    need(out, "out");
    const ffneg::Bipartition part = make_part(gamma->value.n_modes(), modes_a, n_a);
    const std::optional<double> k = k_override > 0.0 ? std::optional<double>(k_override) : std::nullopt;
    const ffneg::BoundReport r = ffneg::bound_report(gamma->value, part, k);
    *out = ffneg_bound_report{r.upper,        r.upper_applicable, r.upper_at_boundary, r.lower,
                              r.improved_lower, r.simple_upper,   r.simple_lower,      r.k_plus,
                              r.k_minus,      r.gamma_ab_opnorm,  r.gamma_ab_frobenius};
  });
}

ffneg_status ffneg_bounds_json(const ffneg_covariance *gamma, const int *modes_a, size_t n_a, char **out) {
  return guarded([&] {
    need(gamma, "gamma");
    need(out, "out");
    const ffneg::Bipartition part = make_part(gamma->value.n_modes(), modes_a, n_a);
    *out = dup_string(ffneg::bound_report_to_json(ffneg::bound_report(gamma->value, part)));
  });
}

ffneg_status ffneg_hamiltonian_create(size_t n_modes, const double *k, ffneg_hamiltonian **out) {
  return guarded([&] {
    need(k, "k");
    need(out, "out");
    const int n = checked_modes(n_modes);
    publish(ffneg_hamiltonian{ffneg::QuadraticHamiltonian(read_square(k, static_cast<size_t>(n)))}, out);
  });
}

ffneg_status ffneg_hamiltonian_tight_binding(size_t n_modes, double t, ffneg_hamiltonian **out) {
  return guarded([&] {
    need(out, "out");
    publish(ffneg_hamiltonian{ffneg::tight_binding(checked_modes(n_modes), t)}, out);
  });
}

ffneg_status ffneg_hamiltonian_kitaev(size_t n_modes, double t, ffneg_hamiltonian **out) {
  return guarded([&] {
    need(out, "out");
    publish(ffneg_hamiltonian{ffneg::kitaev_chain(checked_modes(n_modes), t)}, out);
  });
}

ffneg_status ffneg_hamiltonian_long_range(size_t n_modes, double t, double alpha, ffneg_hamiltonian **out) {
  return guarded([&] {
    need(out, "out");
    publish(ffneg_hamiltonian{ffneg::long_range_hopping(checked_modes(n_modes), t, alpha)}, out);
  });
}

size_t ffneg_hamiltonian_n_modes(const ffneg_hamiltonian *h) {
  return h ? static_cast<size_t>(h->value.n_modes()) : 0;
}

ffneg_status ffneg_hamiltonian_matrix(const ffneg_hamiltonian *h, double *out, size_t len) {
  return guarded([&] {
    need(h, "h");
    need(out, "out");
    write_square(h->value.k(), out, len);
  });
}

void ffneg_hamiltonian_free(ffneg_hamiltonian *h) {
  delete h;
}

ffneg_status ffneg_generator_create(const ffneg_hamiltonian *h, size_t n_ops, const double *l_re, const double *l_im,
                                    ffneg_generator **out) {
  return guarded([&] {
    need(h, "h");
    need(out, "out");
    const Eigen::Index cols = h->value.k().rows();
    ffneg::ComplexMatrix l = ffneg::ComplexMatrix::Zero(static_cast<Eigen::Index>(n_ops), cols);
    if (n_ops > 0) {
      need(l_re, "l_re");
    }
    for (Eigen::Index r = 0; r < l.rows(); ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        const double im = l_im ? l_im[r * cols + c] : 0.0;
        l(r, c) = ffneg::Complex(l_re[r * cols + c], im);
      }
    }
    publish(ffneg_generator{ffneg::LindbladGenerator(h->value, l)}, out);
  });
}

ffneg_status ffneg_generator_uniform_loss(const ffneg_hamiltonian *h, double gamma, ffneg_generator **out) {
  return guarded([&] {
    need(h, "h");
    need(out, "out");
    publish(ffneg_generator{ffneg::uniform_loss(h->value, gamma)}, out);
  });
}

void ffneg_generator_free(ffneg_generator *gen) {
  delete gen;
}

ffneg_status ffneg_evolve(const ffneg_covariance *gamma0, const ffneg_generator *gen, double t,
                          ffneg_evolve_method method, double dt, ffneg_covariance **out) {
  return guarded([&] {
    need(gamma0, "gamma0");
    need(gen, "gen");
    need(out, "out");
    if (gamma0->value.n_modes() != gen->value.n_modes()) {
      fail(ErrorCode::kInvalidArgument, "state and generator sizes differ");
    }
    if (method == FFNEG_EVOLVE_EXACT) {
      publish(ffneg_covariance{ffneg::evolve_exact(gamma0->value, gen->value, t)}, out);
    } else if (method == FFNEG_EVOLVE_RK4) {
      const std::optional<double> step = dt > 0.0 ? std::optional<double>(dt) : std::nullopt;
      publish(ffneg_covariance{ffneg::evolve_rk4(gamma0->value, gen->value, t, step)}, out);
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown evolution method");
    }
  });
}

ffneg_status ffneg_dgamma_dt(const ffneg_covariance *gamma, const ffneg_generator *gen, double *out, size_t len) {
  return guarded([&] {
    need(gamma, "gamma");
    need(gen, "gen");
    need(out, "out");
    write_square(ffneg::dgamma_dt(gamma->value, gen->value), out, len);
  });
}

ffneg_status ffneg_rate(const ffneg_covariance *gamma, const ffneg_generator *gen, const int *modes_a, size_t n_a,
                        ffneg_rate_report *out) {
  return guarded([&] {
    need(gamma, "gamma");
    need(gen, "gen");
    need(out, "out");
    if (gamma->value.n_modes() != gen->value.n_modes()) {
      fail(ErrorCode::kInvalidArgument, "state and generator sizes differ");
    }
    const ffneg::Bipartition part = make_part(gamma->value.n_modes(), modes_a, n_a);
    const ffneg::RateDecomposition dec = ffneg::rate_decomposition(gamma->value, gen->value.matrices(), part);
    const ffneg::RateBounds b = ffneg::rate_bounds(gen->value.matrices(), part);
    *out = ffneg_rate_report{dec.total,
                             dec.local,
                             dec.inter,
                             b.increase,
                             b.magnitude,
                             dec.dgamma_trace_norm,
                             dec.method == ffneg::PabMethod::kQuadrature,
                             dec.singularity_flag};
  });
}

ffneg_status ffneg_area_law_bound(double c, double alpha, int dimension, int internal_dof, double boundary_size,
                                  double dist, double *out) {
  return guarded([&] {
    need(out, "out");
    *out = ffneg::area_law_bound(c, alpha, ffneg::LatticeSpec{dimension, internal_dof}, boundary_size, dist);
  });
}

ffneg_status ffneg_trajectory(const ffneg_covariance *gamma0, const ffneg_generator *gen, const double *times,
                              size_t n_times, const int *modes_a, size_t n_a, ffneg_table **out) {
  return guarded([&] {
    need(gamma0, "gamma0");
    need(gen, "gen");
    need(out, "out");
    const ffneg::Bipartition part = make_part(gamma0->value.n_modes(), modes_a, n_a);
    publish(ffneg_table{ffneg::trajectory_table(gamma0->value, gen->value, read_array(times, n_times, "times"), part)},
            out);
  });
}

ffneg_status ffneg_sweep_temperature(const ffneg_temperature_sweep_config *config, int workers, ffneg_table **out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    ffneg::TemperatureSweepConfig c;
    switch (config->model) {
      case FFNEG_MODEL_TIGHT_BINDING:
        c.model.kind = ffneg::ModelKind::kTightBinding;
        break;
      case FFNEG_MODEL_KITAEV:
        c.model.kind = ffneg::ModelKind::kKitaev;
        break;
      case FFNEG_MODEL_LONG_RANGE:
        c.model.kind = ffneg::ModelKind::kLongRange;
        break;
      default:
        fail(ErrorCode::kInvalidArgument, "unknown model");
    }
    c.model.n = checked_modes(config->n_modes);
    c.model.t = config->t;
    c.model.alpha = config->alpha;
    c.betas = read_array(config->betas, config->n_betas, "betas");
    c.modes_a = read_array(config->modes_a, config->n_a, "modes_a");
    publish(ffneg_table{ffneg::temperature_sweep(c, workers)}, out);
  });
}

ffneg_status ffneg_sweep_area_law(const ffneg_area_law_config *config, int workers, ffneg_table **out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    ffneg::AreaLawSweepConfig c;
    c.sizes = read_array(config->sizes, config->n_sizes, "sizes");
    c.t = config->t;
    c.alpha = config->alpha;
    c.beta = config->beta;
    publish(ffneg_table{ffneg::static_area_law_sweep(c, workers)}, out);
  });
}

ffneg_status ffneg_sweep_dynamic(const ffneg_dynamic_sweep_config *config, int workers, ffneg_table **out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    ffneg::DynamicSweepConfig c;
    c.sizes = read_array(config->sizes, config->n_sizes, "sizes");
    c.t = config->t;
    c.alpha = config->alpha;
    c.gamma_rate = config->gamma;
    c.init = config->random_init ? ffneg::InitialState::kRandom : ffneg::InitialState::kCdw;
    c.samples = config->samples;
    c.seed = config->seed;
    c.t_eval = config->t_eval;
    c.nu_max = config->nu_max;
    publish(ffneg_table{config->per_sample ? ffneg::dynamic_samples(c, workers) : ffneg::dynamic_sweep(c, workers)},
            out);
  });
}

ffneg_status ffneg_oracle_check(const ffneg_oracle_check_config *config, int workers, ffneg_table **out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    ffneg::OracleCheckConfig c;
    c.n = checked_modes(config->n_modes);
    c.samples = config->samples;
    c.seed = config->seed;
    c.nu_max = config->nu_max;
    publish(ffneg_table{ffneg::oracle_check(c, workers)}, out);
  });
}

ffneg_status ffneg_rate_vs_cut(const ffneg_covariance *gamma, const ffneg_generator *gen, const int *cuts,
                               size_t n_cuts, int workers, ffneg_table **out) {
  return guarded([&] {
    need(gamma, "gamma");
    need(gen, "gen");
    need(out, "out");
    publish(ffneg_table{ffneg::rate_vs_cut(gamma->value, gen->value, read_array(cuts, n_cuts, "cuts"), workers)}, out);
  });
}

size_t ffneg_table_columns(const ffneg_table *table) {
  return table ? table->value.columns.size() : 0;
}

size_t ffneg_table_rows(const ffneg_table *table) {
  return table ? table->value.rows.size() : 0;
}

const char *ffneg_table_column_name(const ffneg_table *table, size_t col) {
  if (table == nullptr || col >= table->value.columns.size()) {
    return nullptr;
  }
  return table->value.columns[col].c_str();
}

ffneg_status ffneg_table_value(const ffneg_table *table, size_t row, size_t col, double *out) {
  return guarded([&] {
    need(out, "out");
    const ffneg::Cell &cell = cell_at(table, row, col);
    if (const auto *d = std::get_if<double>(&cell)) {
      *out = *d;
    } else if (const auto *i = std::get_if<long long>(&cell)) {
      *out = static_cast<double>(*i);
    } else {
      fail(ErrorCode::kInvalidArgument, "cell holds text");
    }
  });
}

ffneg_status ffneg_table_cell_text(const ffneg_table *table, size_t row, size_t col, char **out) {
  return guarded([&] {
    need(out, "out");
    *out = dup_string(ffneg::format_cell(cell_at(table, row, col)));
  });
}

ffneg_status ffneg_table_to_csv(const ffneg_table *table, char **out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    *out = dup_string(ffneg::table_to_csv(table->value));
  });
}

void ffneg_table_free(ffneg_table *table) {
  delete table;
}

}  // extern "C"
