/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

// Command-line driver. Talks to the library only through the C interface.

#include <CLI11.hpp>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ffneg/ffneg.h"

namespace {

  using nlohmann::json;

  constexpr int kExitOk = 0;
  constexpr int kExitConfig = 2;
  constexpr int kExitNumerical = 3;

  struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct ApiError : std::runtime_error {
    ApiError(ffneg_status s, const std::string &what) : std::runtime_error(what), status(s) {}
    ffneg_status status;
  };

  void check(ffneg_status s) {
    if (s != FFNEG_OK) {
      throw ApiError(s, ffneg_last_error());
    }
  }

  struct CovDeleter {
    void operator()(ffneg_covariance *p) const {
      ffneg_covariance_free(p);
    }
  };
  struct HamDeleter {
    void operator()(ffneg_hamiltonian *p) const {
      ffneg_hamiltonian_free(p);
    }
  };
  struct GenDeleter {
    void operator()(ffneg_generator *p) const {
      ffneg_generator_free(p);
    }
  };
  struct TableDeleter {
    void operator()(ffneg_table *p) const {
      ffneg_table_free(p);
    }
  };
  using Covariance = std::unique_ptr<ffneg_covariance, CovDeleter>;
  using Hamiltonian = std::unique_ptr<ffneg_hamiltonian, HamDeleter>;
  using Generator = std::unique_ptr<ffneg_generator, GenDeleter>;
  using Table = std::unique_ptr<ffneg_table, TableDeleter>;

  std::string take_string(char *raw) {
    std::string out(raw);
    ffneg_string_free(raw);
    return out;
  }

  // Strict view of a JSON object: every key must be consumed before done().
  class Object {
   public:
    Object(const json &j, std::string path) : j_(j), path_(std::move(path)) {
      if (!j_.is_object()) {
        throw ConfigError(where() + " must be a JSON object");
      }
    }

    bool has(const std::string &key) const {
      return j_.contains(key);
    }

    const json &raw(const std::string &key) {
      if (!has(key)) {
        throw ConfigError(where() + " is missing required key '" + key + "'");
      }
      used_.insert(key);
      return j_.at(key);
    }

    Object child(const std::string &key) {
      return Object(raw(key), path_ + "." + key);
    }

    double number(const std::string &key) {
      const json &v = raw(key);
      if (!v.is_number()) {
        throw ConfigError(where(key) + " must be a number");
      }
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        throw ConfigError(where(key) + " must be finite");
      }
      return d;
    }

    double number_or(const std::string &key, double fallback) {
      return has(key) ? number(key) : fallback;
    }

    long long integer(const std::string &key) {
      const json &v = raw(key);
      if (!v.is_number_integer()) {
        throw ConfigError(where(key) + " must be an integer");
      }
      return v.get<long long>();
    }

    long long integer_or(const std::string &key, long long fallback) {
      return has(key) ? integer(key) : fallback;
    }

    std::string string(const std::string &key) {
      const json &v = raw(key);
      if (!v.is_string()) {
        throw ConfigError(where(key) + " must be a string");
      }
      return v.get<std::string>();
    }

    std::string string_or(const std::string &key, const std::string &fallback) {
      return has(key) ? string(key) : fallback;
    }

    bool boolean_or(const std::string &key, bool fallback) {
      if (!has(key)) {
        return fallback;
      }
      const json &v = raw(key);
      if (!v.is_boolean()) {
        throw ConfigError(where(key) + " must be true or false");
      }
      return v.get<bool>();
    }

    std::vector<int> int_list(const std::string &key) {
      const json &v = raw(key);
      if (!v.is_array()) {
        throw ConfigError(where(key) + " must be an array of integers");
      }
      std::vector<int> out;
      for (const json &e : v) {
        if (!e.is_number_integer()) {
          throw ConfigError(where(key) + " must be an array of integers");
        }
        out.push_back(e.get<int>());
      }
      return out;
    }

    std::vector<double> number_list(const std::string &key) {
      const json &v = raw(key);
      if (!v.is_array()) {
        throw ConfigError(where(key) + " must be an array of numbers");
      }
      std::vector<double> out;
      for (const json &e : v) {
        if (!e.is_number()) {
          throw ConfigError(where(key) + " must be an array of numbers");
        }
        out.push_back(e.get<double>());
      }
      return out;
    }

    void done() const {
      for (const auto &item : j_.items()) {
        if (!used_.count(item.key())) {
          throw ConfigError(where() + ": unknown key '" + item.key() + "'");
        }
      }
    }

    std::string where(const std::string &key = "") const {
      return key.empty() ? path_ : path_ + "." + key;
    }

   private:
    const json &j_;
    std::string path_;
    std::set<std::string> used_;
  };

  void require_config(bool ok, const std::string &msg) {
    if (!ok) {
      throw ConfigError(msg);
    }
  }

  size_t positive_modes(Object &o, const std::string &key = "n_modes") {
    const long long n = o.integer(key);
    require_config(n >= 1 && n <= 4096, o.where(key) + " must lie in [1, 4096]");
    return static_cast<size_t>(n);
  }

  std::vector<double> flat_matrix(Object &o, const std::string &key, size_t n_modes) {
    std::vector<double> m = o.number_list(key);
    require_config(m.size() == 4 * n_modes * n_modes,
                   o.where(key) + " must hold (2 n_modes)^2 = " + std::to_string(4 * n_modes * n_modes) + " numbers");
    return m;
  }

  // Either an explicit list or {"start", "stop", "num", "spacing": "linear" | "log"}.
  std::vector<double> parse_grid(Object &parent, const std::string &key) {
    const json &v = parent.raw(key);
    if (v.is_array()) {
      std::vector<double> out;
      for (const json &e : v) {
        require_config(e.is_number(), parent.where(key) + " must hold numbers");
        out.push_back(e.get<double>());
      }
      require_config(!out.empty(), parent.where(key) + " is empty");
      return out;
    }
    Object g(v, parent.where(key));
    const double start = g.number("start");
    const double stop = g.number("stop");
    const long long num = g.integer("num");
    const std::string spacing = g.string_or("spacing", "linear");
    g.done();
    require_config(num >= 1, g.where("num") + " must be positive");
    require_config(spacing == "linear" || spacing == "log", g.where("spacing") + " must be 'linear' or 'log'");
    require_config(spacing == "linear" || (start > 0 && stop > 0), g.where() + ": log spacing needs positive ends");
    std::vector<double> out;
    for (long long i = 0; i < num; ++i) {
      const double f = num == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(num - 1);
      out.push_back(spacing == "linear" ? start + f * (stop - start) : start * std::pow(stop / start, f));
    }
    out.back() = stop;
    return out;
  }

  ffneg_model model_kind(const std::string &type, const std::string &where) {
    if (type == "tight_binding") {
      return FFNEG_MODEL_TIGHT_BINDING;
    }
    if (type == "kitaev") {
      return FFNEG_MODEL_KITAEV;
    }
    if (type == "long_range") {
      return FFNEG_MODEL_LONG_RANGE;
    }
    throw ConfigError(where + " must be one of tight_binding, kitaev, long_range");
  }

  Hamiltonian parse_model(Object o) {
    const std::string type = o.string("type");
    const size_t n = positive_modes(o);
    ffneg_hamiltonian *h = nullptr;
    if (type == "matrix") {
      const std::vector<double> k = flat_matrix(o, "k", n);
      o.done();
      check(ffneg_hamiltonian_create(n, k.data(), &h));
      return Hamiltonian(h);
    }
    const ffneg_model kind = model_kind(type, o.where("type"));
    const double t = o.number_or("t", 1.0);
    const double alpha = kind == FFNEG_MODEL_LONG_RANGE ? o.number_or("alpha", 2.1) : 0.0;
    o.done();
    if (kind == FFNEG_MODEL_TIGHT_BINDING) {
      check(ffneg_hamiltonian_tight_binding(n, t, &h));
    } else if (kind == FFNEG_MODEL_KITAEV) {
      check(ffneg_hamiltonian_kitaev(n, t, &h));
    } else {
      check(ffneg_hamiltonian_long_range(n, t, alpha, &h));
    }
    return Hamiltonian(h);
  }

  Covariance parse_state(Object o, std::optional<std::uint64_t> &seed) {
    const std::string type = o.string("type");
    ffneg_covariance *c = nullptr;
    if (type == "gibbs") {
      Hamiltonian h = parse_model(o.child("model"));
      const double beta = o.number("beta");
      o.done();
      check(ffneg_covariance_gibbs(h.get(), beta, &c));
      return Covariance(c);
    }
    const size_t n = positive_modes(o);
    if (type == "matrix") {
      const std::vector<double> m = flat_matrix(o, "m", n);
      o.done();
      check(ffneg_covariance_create(n, m.data(), &c));
    } else if (type == "zero") {
      o.done();
      check(ffneg_covariance_zero(n, &c));
    } else if (type == "vacuum") {
      o.done();
      check(ffneg_covariance_vacuum(n, &c));
    } else if (type == "cdw") {
      o.done();
      check(ffneg_covariance_cdw(n, &c));
    } else if (type == "random") {
      const long long s = o.integer_or("seed", 0);
      require_config(s >= 0, o.where("seed") + " must be nonnegative");
      const double nu_max = o.number_or("nu_max", 0.95);
      o.done();
      seed = static_cast<std::uint64_t>(s);
      check(ffneg_covariance_random(n, seed.value(), nu_max, &c));
    } else {
      throw ConfigError(o.where("type") + " must be one of zero, vacuum, cdw, random, gibbs, matrix");
    }
    return Covariance(c);
  }

  std::vector<double> matrix_rows(const json &v, const std::string &where, size_t cols, size_t &rows) {
    require_config(v.is_array(), where + " must be an array of rows");
    std::vector<double> out;
    rows = v.size();
    for (const json &row : v) {
      require_config(row.is_array() && row.size() == cols, where + " rows must hold " + std::to_string(cols) + " numbers");
      for (const json &e : row) {
        require_config(e.is_number(), where + " entries must be numbers");
        out.push_back(e.get<double>());
      }
    }
    return out;
  }

  Generator parse_generator(Object o, size_t n_modes) {
    Hamiltonian h;
    if (o.has("model")) {
      h = parse_model(o.child("model"));
      require_config(ffneg_hamiltonian_n_modes(h.get()) == n_modes, o.where("model") + " size differs from the state");
    } else {
      const std::vector<double> zeros(4 * n_modes * n_modes, 0.0);
      ffneg_hamiltonian *raw = nullptr;
      check(ffneg_hamiltonian_create(n_modes, zeros.data(), &raw));
      h.reset(raw);
    }
    ffneg_generator *g = nullptr;
    const bool has_loss = o.has("loss_rate");
    const bool has_ops = o.has("operators");
    require_config(!(has_loss && has_ops), o.where() + ": give either loss_rate or operators, not both");
    if (has_ops) {
      Object ops = o.child("operators");
      size_t rows_re = 0;
      const std::vector<double> re = matrix_rows(ops.raw("re"), ops.where("re"), 2 * n_modes, rows_re);
      std::vector<double> im(re.size(), 0.0);
      if (ops.has("im")) {
        size_t rows_im = 0;
        im = matrix_rows(ops.raw("im"), ops.where("im"), 2 * n_modes, rows_im);
        require_config(rows_im == rows_re, ops.where() + ": re and im must have the same number of rows");
      }
      ops.done();
      o.done();
      check(ffneg_generator_create(h.get(), rows_re, re.data(), im.data(), &g));
    } else {
      const double rate = o.number_or("loss_rate", 0.0);
      o.done();
      check(ffneg_generator_uniform_loss(h.get(), rate, &g));
    }
    return Generator(g);
  }

  std::vector<int> parse_modes_a(Object &o) {
    return o.has("modes_a") ? o.int_list("modes_a") : std::vector<int>{};
  }

  std::uint64_t parse_seed(Object &o) {
    const long long s = o.integer_or("seed", 0);
    require_config(s >= 0, o.where("seed") + " must be nonnegative");
    return static_cast<std::uint64_t>(s);
  }

  struct Output {
    std::string body;
    bool csv = true;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> comments;
  };

  std::string table_csv(const Table &t) {
    char *raw = nullptr;
    check(ffneg_table_to_csv(t.get(), &raw));
    return take_string(raw);
  }

  std::string cell(const Table &t, size_t row, size_t col) {
    char *raw = nullptr;
    check(ffneg_table_cell_text(t.get(), row, col, &raw));
    return take_string(raw);
  }

  size_t column(const Table &t, const std::string &name) {
    for (size_t c = 0; c < ffneg_table_columns(t.get()); ++c) {
      if (name == ffneg_table_column_name(t.get(), c)) {
        return c;
      }
    }
    throw ApiError(FFNEG_ERR_INTERNAL, "missing column " + name);
  }

  std::string fmt(double v) {
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

  struct Options {
    std::string method;
    int workers = 1;
  };

  ffneg_method negativity_method(const std::string &name) {
    if (name.empty() || name == "pencil") {
      return FFNEG_METHOD_PENCIL;
    }
    if (name == "twisted") {
      return FFNEG_METHOD_TWISTED;
    }
    return FFNEG_METHOD_ORACLE;
  }

  Output cmd_negativity(Object o, const Options &opt) {
    Output out;
    out.csv = false;
    Covariance c = parse_state(o.child("state"), out.seed);
    const std::vector<int> a = parse_modes_a(o);
    const bool with_bounds = o.boolean_or("bounds", true);
    o.done();
    json result;
    const ffneg_method method = negativity_method(opt.method);
    if (method == FFNEG_METHOD_PENCIL) {
      char *raw = nullptr;
      check(ffneg_negativity_json(c.get(), a.data(), a.size(), &raw));
      result = json::parse(take_string(raw));
    } else {
      double e = 0.0;
      check(ffneg_negativity(c.get(), a.data(), a.size(), method, &e));
      result["value"] = e;
    }
    result["method"] = opt.method.empty() ? "pencil" : opt.method;
    if (with_bounds) {
      char *raw = nullptr;
      check(ffneg_bounds_json(c.get(), a.data(), a.size(), &raw));
      result["bounds"] = json::parse(take_string(raw));
    }
    out.body = result.dump(2) + "\n";
    return out;
  }

  ffneg_temperature_sweep_config temperature_config(Object &o, std::vector<double> &betas, std::vector<int> &modes_a) {
    Object m = o.child("model");
    ffneg_temperature_sweep_config cfg{};
    cfg.model = model_kind(m.string("type"), m.where("type"));
    cfg.n_modes = positive_modes(m);
    cfg.t = m.number_or("t", 1.0);
    cfg.alpha = cfg.model == FFNEG_MODEL_LONG_RANGE ? m.number_or("alpha", 2.1) : 0.0;
    m.done();
    betas = parse_grid(o, "betas");
    modes_a = parse_modes_a(o);
    cfg.betas = betas.data();
    cfg.n_betas = betas.size();
    cfg.modes_a = modes_a.data();
    cfg.n_a = modes_a.size();
    return cfg;
  }

  Output cmd_bounds(Object o, const Options &opt) {
    std::vector<double> betas;
    std::vector<int> modes;
    const ffneg_temperature_sweep_config cfg = temperature_config(o, betas, modes);
    o.done();
    ffneg_table *raw = nullptr;
    check(ffneg_sweep_temperature(&cfg, opt.workers, &raw));
    Table t(raw);
    const size_t cols[] = {column(t, "beta"), column(t, "lower"), column(t, "negativity"), column(t, "upper"),
                           column(t, "upper_applicable")};
    Output out;
    out.body = "beta,lower,exact,upper,applicable\n";
    for (size_t r = 0; r < ffneg_table_rows(t.get()); ++r) {
      for (size_t i = 0; i < 5; ++i) {
        out.body += (i ? "," : "") + cell(t, r, cols[i]);
      }
      out.body += "\n";
    }
    return out;
  }

  Output cmd_sweep_temperature(Object o, const Options &opt) {
    std::vector<double> betas;
    std::vector<int> modes;
    const ffneg_temperature_sweep_config cfg = temperature_config(o, betas, modes);
    o.done();
    ffneg_table *raw = nullptr;
    check(ffneg_sweep_temperature(&cfg, opt.workers, &raw));
    Output out;
    out.body = table_csv(Table(raw));
    return out;
  }

  Output cmd_evolve(Object o, const Options &opt) {
    (void)opt;
    Output out;
    Covariance c = parse_state(o.child("state"), out.seed);
    const size_t n = ffneg_covariance_n_modes(c.get());
    Generator g = parse_generator(o.child("generator"), n);
    const std::vector<double> times = parse_grid(o, "times");
    const std::vector<int> a = parse_modes_a(o);
    const std::string integrator = o.string_or("integrator", "exact");
    const double dt = o.number_or("dt", 0.0);
    o.done();
    require_config(integrator == "exact" || integrator == "rk4", "$.integrator must be 'exact' or 'rk4'");
    if (integrator == "exact") {
      ffneg_table *raw = nullptr;
      check(ffneg_trajectory(c.get(), g.get(), times.data(), times.size(), a.data(), a.size(), &raw));
      out.body = table_csv(Table(raw));
      return out;
    }
    out.body = "t,negativity,purity,gamma_ab_frobenius\n";
    for (double t : times) {
      ffneg_covariance *raw = nullptr;
      check(ffneg_evolve(c.get(), g.get(), t, FFNEG_EVOLVE_RK4, dt, &raw));
      Covariance ct(raw);
      double e = 0.0;
      double p = 0.0;
      ffneg_bound_report b{};
      check(ffneg_negativity(ct.get(), a.data(), a.size(), FFNEG_METHOD_PENCIL, &e));
      check(ffneg_covariance_purity(ct.get(), &p));
      check(ffneg_bounds(ct.get(), a.data(), a.size(), 0.0, &b));
      out.body += fmt(t) + "," + fmt(e) + "," + fmt(p) + "," + fmt(b.gamma_ab_frobenius) + "\n";
    }
    return out;
  }

  Output cmd_rate(Object o, const Options &opt) {
    Output out;
    Covariance c = parse_state(o.child("state"), out.seed);
    const size_t n = ffneg_covariance_n_modes(c.get());
    Generator g = parse_generator(o.child("generator"), n);
    const double t_eval = o.number_or("t_eval", 1e-8);
    std::vector<int> cuts;
    if (o.has("cuts")) {
      cuts = o.int_list("cuts");
    } else {
      for (size_t k = 1; k < n; ++k) {
        cuts.push_back(static_cast<int>(k));
      }
    }
    o.done();
    require_config(t_eval >= 0.0, "$.t_eval must be nonnegative");
    ffneg_covariance *evolved = nullptr;
    check(ffneg_evolve(c.get(), g.get(), t_eval, FFNEG_EVOLVE_EXACT, 0.0, &evolved));
    Covariance ce(evolved);
    ffneg_table *raw = nullptr;
    check(ffneg_rate_vs_cut(ce.get(), g.get(), cuts.data(), cuts.size(), opt.workers, &raw));
    out.body = table_csv(Table(raw));
    return out;
  }

  Output cmd_sweep_area_law(Object o, const Options &opt) {
    std::vector<int> sizes = o.int_list("sizes");
    ffneg_area_law_config cfg{};
    cfg.sizes = sizes.data();
    cfg.n_sizes = sizes.size();
    cfg.t = o.number_or("t", 1.0);
    cfg.alpha = o.number_or("alpha", 1.5);
    cfg.beta = o.number_or("beta", 0.05);
    o.done();
    ffneg_table *raw = nullptr;
    check(ffneg_sweep_area_law(&cfg, opt.workers, &raw));
    Output out;
    out.body = table_csv(Table(raw));
    return out;
  }

  Output cmd_sweep_dynamic(Object o, const Options &opt) {
    std::vector<int> sizes = o.int_list("sizes");
    ffneg_dynamic_sweep_config cfg{};
    cfg.sizes = sizes.data();
    cfg.n_sizes = sizes.size();
    cfg.t = o.number_or("t", 1.0);
    cfg.alpha = o.number_or("alpha", 2.1);
    cfg.gamma = o.number_or("loss_rate", 0.5);
    const std::string init = o.string_or("init", "cdw");
    require_config(init == "cdw" || init == "random", "$.init must be 'cdw' or 'random'");
    cfg.random_init = init == "random";
    cfg.samples = static_cast<int>(o.integer_or("samples", cfg.random_init ? 100 : 1));
    cfg.seed = parse_seed(o);
    cfg.t_eval = o.number_or("t_eval", 1e-8);
    cfg.nu_max = o.number_or("nu_max", 0.99);
    cfg.per_sample = o.boolean_or("per_sample", false);
    o.done();
    ffneg_table *raw = nullptr;
    check(ffneg_sweep_dynamic(&cfg, opt.workers, &raw));
    Output out;
    if (cfg.random_init) {
      out.seed = cfg.seed;
    }
    out.body = table_csv(Table(raw));
    return out;
  }

  Output cmd_oracle_check(Object o, const Options &opt) {
    ffneg_oracle_check_config cfg{};
    cfg.n_modes = positive_modes(o);
    cfg.samples = static_cast<int>(o.integer_or("samples", 50));
    cfg.seed = parse_seed(o);
    cfg.nu_max = o.number_or("nu_max", 0.95);
    o.done();
    ffneg_table *raw = nullptr;
    check(ffneg_oracle_check(&cfg, opt.workers, &raw));
    Table t(raw);
    const size_t col = column(t, "abs_diff");
    double worst = 0.0;
    for (size_t r = 0; r < ffneg_table_rows(t.get()); ++r) {
      double v = 0.0;
      check(ffneg_table_value(t.get(), r, col, &v));
      worst = std::max(worst, v);
    }
    Output out;
    out.seed = cfg.seed;
    out.comments.push_back("max_abs_diff=" + fmt(worst));
    out.body = table_csv(t);
    return out;
  }

  // 64-bit FNV-1a of the canonical (key-sorted, compact) config text.
  std::string config_hash(const json &config) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : config.dump()) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
  }

  std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  std::string render(const Output &out, const std::string &command, const json &config, bool timestamp) {
    const std::string seed = out.seed ? std::to_string(*out.seed) : "none";
    if (!out.csv) {
      json doc = json::parse(out.body);
      doc["metadata"] = {{"version", ffneg_version()},
                         {"command", command},
                         {"seed", seed},
                         {"config_hash", config_hash(config)}};
      if (timestamp) {
        doc["metadata"]["generated"] = utc_timestamp();
      }
      return doc.dump(2) + "\n";
    }
    std::string text = "# version=" + std::string(ffneg_version()) + " command=" + command + " seed=" + seed +
                       " config_hash=" + config_hash(config) + "\n";
    for (const std::string &c : out.comments) {
      text += "# " + c + "\n";
    }
    if (timestamp) {
      text += "# generated=" + utc_timestamp() + "\n";
    }
    return text + out.body;
  }

  void print_error(const char *status, const std::string &message) {
    json err = {{"error", {{"status", status}, {"message", message}}}};
    std::cerr << err.dump() << std::endl;
  }

  int exit_code_for(ffneg_status s) {
    switch (s) {
      case FFNEG_ERR_INVALID_ARGUMENT:
      case FFNEG_ERR_CONFIG:
      case FFNEG_ERR_SIZE_CAP:
      case FFNEG_ERR_DIVERGENT:
      case FFNEG_ERR_INVALID_STATE:
        return kExitConfig;
      default:
        return kExitNumerical;
    }
  }

  using Command = Output (*)(Object, const Options &);

  struct CommandSpec {
    const char *name;
    const char *help;
    Command run;
    bool takes_method;
  };

  const CommandSpec kCommands[] = {
      {"negativity", "Negativity and bounds of one state (JSON output)", cmd_negativity, true},
      {"bounds", "Bounds versus exact negativity over a beta grid", cmd_bounds, false},
      {"evolve", "Negativity along Lindblad dynamics", cmd_evolve, false},
      {"rate", "Negativity rate, its split and bounds per cut", cmd_rate, false},
      {"sweep-temperature", "Full temperature sweep of a Gibbs state", cmd_sweep_temperature, false},
      {"sweep-area-law", "Static area law for long-range Gibbs states", cmd_sweep_area_law, false},
      {"sweep-dynamic", "Rate at early times versus system size", cmd_sweep_dynamic, false},
      {"oracle-check", "Pencil against dense partial transpose", cmd_oracle_check, false},
  };

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Logarithmic negativity of fermionic Gaussian states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ffneg_version()));

  std::string config_path;
  std::string out_path;
  Options opt;
  bool no_timestamp = false;
  bool quiet = false;
  for (const CommandSpec &spec : kCommands) {
    CLI::App *sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--out", out_path, "Output file (default: stdout)");
    sub->add_option("--workers", opt.workers, "Worker threads")->check(CLI::Range(1, 1024));
    sub->add_option("--method", opt.method, "Negativity method")
        ->check(CLI::IsMember({"pencil", "twisted", "oracle"}));
    sub->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp metadata line");
    sub->add_flag("--quiet", quiet, "Suppress numerical warnings");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitConfig;
  }

  const CommandSpec *spec = nullptr;
  for (const CommandSpec &s : kCommands) {
    if (app.got_subcommand(s.name)) {
      spec = &s;
    }
  }
  if (!spec->takes_method && !opt.method.empty()) {
    print_error("config_error", std::string("--method does not apply to ") + spec->name);
    return kExitConfig;
  }
  if (quiet) {
    ffneg_set_warnings_enabled(0);
  }

  try {
    std::ifstream in(config_path);
    if (!in) {
      throw ConfigError("cannot open config file " + config_path);
    }
    json config;
    try {
      config = json::parse(in);
    } catch (const json::parse_error &e) {
      throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    const Output output = spec->run(Object(config, "$"), opt);
    const std::string text = render(output, spec->name, config, !no_timestamp);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file || !(file << text)) {
        throw ConfigError("cannot write " + out_path);
      }
    }
    return kExitOk;
  } catch (const ConfigError &e) {
    print_error("config_error", e.what());
    return kExitConfig;
  } catch (const ApiError &e) {
    print_error(ffneg_status_name(e.status), e.what());
    return exit_code_for(e.status);
  } catch (const std::exception &e) {
    print_error("internal_error", e.what());
    return kExitNumerical;
  }
}
