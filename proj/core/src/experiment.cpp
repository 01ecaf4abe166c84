// SPDX-License-Identifier: Apache-2.0
#include <folm/experiment.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

namespace folm {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where.empty() ? what : where + ": " + what);
}

void check_keys(const ordered_json& j, const std::string& block,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return item.key() == k; }) == allowed.end())
      fail(block, "unknown field '" + item.key() + "'");
  }
}

double require_number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double number_or(const ordered_json& j, const char* key, const std::string& block, double dflt) {
  if (!j.contains(key) || j[key].is_null()) return dflt;
  return require_number(j[key], block + "." + key);
}

Complex parse_complex(const ordered_json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    fail(path, "expected an object {\"re\": ..., \"im\": ...}");
  check_keys(j, path, {"re", "im"});
  return Complex(require_number(j["re"], path + ".re"), require_number(j["im"], path + ".im"));
}

void exclusive(const ordered_json& j, const std::string& block,
               std::initializer_list<const char*> keys) {
  int present = 0;
  std::string names;
  for (const char* k : keys) {
    if (j.contains(k) && !j[k].is_null()) ++present;
    names += names.empty() ? k : std::string(", ") + k;
  }
  if (present > 1) fail(block, "at most one of {" + names + "} may be given");
}

MaterialParams parse_material(const ordered_json& j) {
  MaterialParams m;
  if (j.is_null()) return m;
  check_keys(j, "material", {"Q_s", "n_0", "lambda_0", "lambda_0_nm", "l_A"});
  exclusive(j, "material", {"lambda_0", "lambda_0_nm"});
  m.Q_s = number_or(j, "Q_s", "material", m.Q_s);
  m.n_0 = number_or(j, "n_0", "material", m.n_0);
  if (j.contains("lambda_0_nm"))
    m.lambda_0 = require_number(j["lambda_0_nm"], "material.lambda_0_nm") * 1e-9;
  else
    m.lambda_0 = number_or(j, "lambda_0", "material", m.lambda_0);
  m.l_A = number_or(j, "l_A", "material", m.l_A);
  return m;
}

SphereParams parse_sphere(const ordered_json& j) {
  SphereParams s;
  if (j.is_null()) return s;
  check_keys(j, "sphere", {"R_s", "R_s_um", "M_s"});
  exclusive(j, "sphere", {"R_s", "R_s_um"});
  if (j.contains("R_s_um")) s.R_s = require_number(j["R_s_um"], "sphere.R_s_um") * 1e-6;
  else s.R_s = number_or(j, "R_s", "sphere", s.R_s);
  s.M_s = number_or(j, "M_s", "sphere", s.M_s);
  return s;
}

FieldParams parse_field(const ordered_json& j) {
  FieldParams f;
  if (j.is_null()) return f;
  check_keys(j, "field", {"omega_m", "frequency_GHz", "gamma_e", "gamma_e_GHz_per_T"});
  exclusive(j, "field", {"omega_m", "frequency_GHz"});
  exclusive(j, "field", {"gamma_e", "gamma_e_GHz_per_T"});
  if (j.contains("frequency_GHz"))
    f.omega_m = two_pi * require_number(j["frequency_GHz"], "field.frequency_GHz") * 1e9;
  else
    f.omega_m = number_or(j, "omega_m", "field", f.omega_m);
  if (j.contains("gamma_e_GHz_per_T"))
    f.gamma_e = two_pi * require_number(j["gamma_e_GHz_per_T"], "field.gamma_e_GHz_per_T") * 1e9;
  else
    f.gamma_e = number_or(j, "gamma_e", "field", f.gamma_e);
  return f;
}

TimingParams parse_timing(const ordered_json& j, const FieldParams& f) {
  TimingParams t;
  // null behaves like {}: the t2 default of half a precession period must
  // track the configured field frequency
  check_keys(j, "timing", {"t1", "t2", "delta_t", "delta_t_periods", "n_F", "t_p"});
  exclusive(j, "timing", {"t2", "delta_t", "delta_t_periods"});
  t.t1 = number_or(j, "t1", "timing", t.t1);
  if (j.contains("delta_t"))
    t.t2 = t.t1 + require_number(j["delta_t"], "timing.delta_t");
  else if (j.contains("delta_t_periods"))
    t.t2 = t.t1 + require_number(j["delta_t_periods"], "timing.delta_t_periods") * f.period();
  else if (j.contains("t2"))
    t.t2 = require_number(j["t2"], "timing.t2");
  else
    t.t2 = t.t1 + 0.5 * f.period();
  t.n_F = number_or(j, "n_F", "timing", t.n_F);
  t.t_p = number_or(j, "t_p", "timing", t.t_p);
  return t;
}

CouplerParams parse_coupler(const ordered_json& j) {
  if (j.is_null()) return CouplerParams::three_db();
  check_keys(j, "coupler", {"upsilon", "t_mag", "r_mag"});
  exclusive(j, "coupler", {"upsilon", "t_mag"});
  if (j.contains("upsilon"))
    return CouplerParams::from_ratio(require_number(j["upsilon"], "coupler.upsilon"));
  if (j.contains("t_mag")) {
    const double tm = require_number(j["t_mag"], "coupler.t_mag");
    if (j.contains("r_mag")) {
      try {
        return CouplerParams::from_magnitudes(tm, require_number(j["r_mag"], "coupler.r_mag"));
      } catch (const std::invalid_argument& e) {
        fail("coupler", e.what());
      }
    }
    return CouplerParams::from_t_mag(tm);
  }
  if (j.contains("r_mag")) fail("coupler", "r_mag without t_mag");
  return CouplerParams::three_db();
}

ParallelSettings parse_parallel(const ordered_json& j) {
  ParallelSettings p;
  if (j.is_null()) return p;
  check_keys(j, "parallel", {"sop", "theta_m1", "phi_m1", "delta_theta_m", "precess"});
  if (j.contains("sop")) {
    const std::string s = j["sop"].get<std::string>();
    if (s.size() != 1) fail("parallel.sop", "expected a single SOP label");
    p.sop = s[0];
  }
  p.theta_m1 = number_or(j, "theta_m1", "parallel", p.theta_m1);
  p.phi_m1 = number_or(j, "phi_m1", "parallel", p.phi_m1);
  if (j.contains("delta_theta_m") && !j["delta_theta_m"].is_null())
    p.delta_theta_m = require_number(j["delta_theta_m"], "parallel.delta_theta_m");
  if (j.contains("precess")) {
    if (!j["precess"].is_boolean()) fail("parallel.precess", "expected a boolean");
    p.precess = j["precess"].get<bool>();
  }
  return p;
}

PerpendicularSettings parse_perpendicular(const ordered_json& j) {
  PerpendicularSettings p;
  if (j.is_null()) return p;
  check_keys(j, "perpendicular", {"alpha", "alpha_i", "ife_enhancement"});
  if (j.contains("alpha") && !j["alpha"].is_null())
    p.alpha = parse_complex(j["alpha"], "perpendicular.alpha");
  if (j.contains("alpha_i") && !j["alpha_i"].is_null())
    p.alpha_i = parse_complex(j["alpha_i"], "perpendicular.alpha_i");
  p.ife_enhancement = number_or(j, "ife_enhancement", "perpendicular", p.ife_enhancement);
  return p;
}

SweepAxis parse_axis(const ordered_json& j, const std::string& block) {
  SweepAxis a;
  check_keys(j, block, {"parameter", "start", "stop", "count", "scale", "inner"});
  if (!j.contains("parameter") || !j["parameter"].is_string())
    fail(block, "missing string field 'parameter'");
  a.parameter = j["parameter"].get<std::string>();
  const auto& names = sweepable_parameters();
  if (std::find(names.begin(), names.end(), a.parameter) == names.end()) {
    std::string valid;
    for (const auto& n : names) valid += valid.empty() ? n : ", " + n;
    fail(block + ".parameter", "unknown parameter '" + a.parameter + "'; valid names: " + valid);
  }
  if (!j.contains("start") || !j.contains("stop"))
    fail(block, "sweep needs numeric 'start' and 'stop'");
  a.start = require_number(j["start"], block + ".start");
  a.stop = require_number(j["stop"], block + ".stop");
  if (!j.contains("count")) fail(block, "sweep needs integer 'count' >= 2");
  if (!j["count"].is_number_integer()) fail(block + ".count", "expected an integer");
  a.count = j["count"].get<int>();
  if (a.count < 2) fail(block + ".count", "sweep count must be >= 2");
  if (j.contains("scale")) {
    const std::string s = j["scale"].get<std::string>();
    if (s == "log") a.log_scale = true;
    else if (s != "linear") fail(block + ".scale", "expected 'linear' or 'log'");
  }
  if (a.log_scale && (a.start <= 0.0 || a.stop <= 0.0))
    fail(block, "log sweeps need positive start and stop");
  return a;
}

}  // namespace

std::vector<double> SweepAxis::values() const {
  std::vector<double> v(count);
  if (log_scale) {
    const double la = std::log(start), lb = std::log(stop);
    for (int i = 0; i < count; ++i)
      v[i] = std::exp(la + (lb - la) * static_cast<double>(i) / (count - 1));
  } else {
    for (int i = 0; i < count; ++i)
      v[i] = start + (stop - start) * static_cast<double>(i) / (count - 1);
  }
  return v;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  check_keys(j, "config",
             {"configuration", "material", "sphere", "field", "timing", "coupler", "parallel",
              "perpendicular", "collapse_d", "oracle", "fock_dim", "sweep", "output", "seed"});

  ExperimentConfig cfg;
  Scenario& sc = cfg.scenario;

  if (!j.contains("configuration") || !j["configuration"].is_string())
    fail("config", "missing string field 'configuration' (parallel | perpendicular)");
  const std::string which = j["configuration"].get<std::string>();
  if (which == "parallel") sc.configuration = Configuration::parallel;
  else if (which == "perpendicular") sc.configuration = Configuration::perpendicular;
  else fail("configuration", "expected 'parallel' or 'perpendicular', got '" + which + "'");

  sc.material = parse_material(j.value("material", ordered_json()));
  sc.sphere = parse_sphere(j.value("sphere", ordered_json()));
  sc.field = parse_field(j.value("field", ordered_json()));
  sc.timing = parse_timing(j.value("timing", ordered_json()), sc.field);
  sc.coupler = parse_coupler(j.value("coupler", ordered_json()));
  sc.parallel = parse_parallel(j.value("parallel", ordered_json()));
  sc.perpendicular = parse_perpendicular(j.value("perpendicular", ordered_json()));
  sc.collapse.d = number_or(j, "collapse_d", "config", 1.0);
  if (j.contains("oracle") && !j["oracle"].is_null()) {
    if (!j["oracle"].is_boolean()) fail("oracle", "expected a boolean");
    sc.oracle = j["oracle"].get<bool>();
  }
  if (j.contains("fock_dim") && !j["fock_dim"].is_null()) {
    if (!j["fock_dim"].is_number_integer()) fail("fock_dim", "expected an integer");
    sc.fock_dim = j["fock_dim"].get<int>();
  }

  if (j.contains("sweep") && !j["sweep"].is_null()) {
    cfg.sweep = parse_axis(j["sweep"], "sweep");
    if (j["sweep"].contains("inner") && !j["sweep"]["inner"].is_null()) {
      cfg.inner = parse_axis(j["sweep"]["inner"], "sweep.inner");
      if (j["sweep"]["inner"].contains("inner"))
        fail("sweep.inner", "at most two nested sweep axes are supported");
    }
  }

  if (j.contains("output") && !j["output"].is_null()) {
    const auto& out = j["output"];
    check_keys(out, "output", {"path", "format"});
    if (out.contains("path")) cfg.output.path = out["path"].get<std::string>();
    if (out.contains("format")) {
      const std::string f = out["format"].get<std::string>();
      if (f == "csv") cfg.output.format = OutputFormat::csv;
      else if (f == "json") cfg.output.format = OutputFormat::json;
      else fail("output.format", "expected 'csv' or 'json'");
    }
  }
  if (j.contains("seed") && !j["seed"].is_null()) {
    if (!j["seed"].is_number_integer()) fail("seed", "expected an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }

  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config validation failed: ") + e.what());
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string default_config_text() {
  const Scenario sc;  // library defaults
  ordered_json j;
  j["configuration"] = "perpendicular";
  j["material"] = {{"Q_s", sc.material.Q_s},
                   {"n_0", sc.material.n_0},
                   {"lambda_0", sc.material.lambda_0},
                   {"l_A", sc.material.l_A}};
  j["sphere"] = {{"R_s", sc.sphere.R_s}, {"M_s", sc.sphere.M_s}};
  j["field"] = {{"omega_m", sc.field.omega_m}, {"gamma_e", sc.field.gamma_e}};
  j["timing"] = {{"t1", sc.timing.t1},
                 {"t2", sc.timing.t2},
                 {"n_F", sc.timing.n_F},
                 {"t_p", sc.timing.t_p}};
  j["coupler"] = {{"upsilon", sc.coupler.upsilon}};
  j["parallel"] = {{"sop", std::string(1, sc.parallel.sop)},
                   {"theta_m1", sc.parallel.theta_m1},
                   {"phi_m1", sc.parallel.phi_m1},
                   {"delta_theta_m", nullptr},
                   {"precess", sc.parallel.precess}};
  j["perpendicular"] = {
      {"alpha", {{"re", sc.perpendicular.alpha.real()}, {"im", sc.perpendicular.alpha.imag()}}},
      {"alpha_i", nullptr},
      {"ife_enhancement", sc.perpendicular.ife_enhancement}};
  j["collapse_d"] = sc.collapse.d;
  j["oracle"] = false;
  j["fock_dim"] = nullptr;
  j["sweep"] = nullptr;
  j["output"] = {{"path", "results.csv"}, {"format", "csv"}};
  j["seed"] = ExperimentConfig{}.seed;
  return j.dump(2) + "\n";
}

namespace {

using Setter = std::function<void(Scenario&, double)>;

const std::map<std::string, Setter>& parameter_registry() {
  static const std::map<std::string, Setter> reg = {
      {"material.Q_s", [](Scenario& s, double v) { s.material.Q_s = v; }},
      {"material.n_0", [](Scenario& s, double v) { s.material.n_0 = v; }},
      {"material.lambda_0", [](Scenario& s, double v) { s.material.lambda_0 = v; }},
      {"material.l_A", [](Scenario& s, double v) { s.material.l_A = v; }},
      {"sphere.R_s", [](Scenario& s, double v) { s.sphere.R_s = v; }},
      {"sphere.M_s", [](Scenario& s, double v) { s.sphere.M_s = v; }},
      {"field.omega_m", [](Scenario& s, double v) { s.field.omega_m = v; }},
      {"field.gamma_e", [](Scenario& s, double v) { s.field.gamma_e = v; }},
      {"timing.t1", [](Scenario& s, double v) { s.timing.t1 = v; }},
      {"timing.t2", [](Scenario& s, double v) { s.timing.t2 = v; }},
      {"timing.delta_t", [](Scenario& s, double v) { s.timing.t2 = s.timing.t1 + v; }},
      {"timing.delta_t_periods",
       [](Scenario& s, double v) { s.timing.t2 = s.timing.t1 + v * s.field.period(); }},
      {"timing.n_F", [](Scenario& s, double v) { s.timing.n_F = v; }},
      {"timing.t_p", [](Scenario& s, double v) { s.timing.t_p = v; }},
      {"coupler.upsilon", [](Scenario& s, double v) { s.coupler = CouplerParams::from_ratio(v); }},
      {"coupler.t_mag", [](Scenario& s, double v) { s.coupler = CouplerParams::from_t_mag(v); }},
      {"collapse_d", [](Scenario& s, double v) { s.collapse.d = v; }},
      {"parallel.theta_m1", [](Scenario& s, double v) { s.parallel.theta_m1 = v; }},
      {"parallel.phi_m1", [](Scenario& s, double v) { s.parallel.phi_m1 = v; }},
      {"parallel.delta_theta_m", [](Scenario& s, double v) { s.parallel.delta_theta_m = v; }},
      {"perpendicular.alpha.re",
       [](Scenario& s, double v) { s.perpendicular.alpha.real(v); }},
      {"perpendicular.alpha.im",
       [](Scenario& s, double v) { s.perpendicular.alpha.imag(v); }},
      {"perpendicular.alpha_i.re",
       [](Scenario& s, double v) {
         Complex a = s.perpendicular.alpha_i.value_or(Complex(0, 0));
         a.real(v);
         s.perpendicular.alpha_i = a;
       }},
      {"perpendicular.alpha_i.im",
       [](Scenario& s, double v) {
         Complex a = s.perpendicular.alpha_i.value_or(Complex(0, 0));
         a.imag(v);
         s.perpendicular.alpha_i = a;
       }},
      {"perpendicular.alpha_i_mag",
       [](Scenario& s, double v) { s.perpendicular.alpha_i = Complex(v, 0.0); }},
      {"perpendicular.ife_enhancement",
       [](Scenario& s, double v) { s.perpendicular.ife_enhancement = v; }},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, setter] : parameter_registry()) v.push_back(name);
    return v;
  }();
  return names;
}

void apply_parameter(Scenario& s, const std::string& parameter, double value) {
  const auto& reg = parameter_registry();
  const auto it = reg.find(parameter);
  if (it == reg.end()) throw ConfigError("unknown sweep parameter '" + parameter + "'");
  it->second(s, value);
}

namespace {

std::string join_warnings(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

ResultRow make_row(int index, const Scenario& sc, const ScenarioResult& res) {
  ResultRow r;
  r.index = index;
  r.configuration =
      sc.configuration == Configuration::parallel ? "parallel" : "perpendicular";
  r.Q_s = sc.material.Q_s;
  r.n_0 = sc.material.n_0;
  r.lambda_0 = sc.material.lambda_0;
  r.l_A = sc.material.l_A;
  r.R_s = sc.sphere.R_s;
  r.M_s = sc.sphere.M_s;
  r.omega_m = sc.field.omega_m;
  r.gamma_e = sc.field.gamma_e;
  r.t1 = sc.timing.t1;
  r.t2 = sc.timing.t2;
  r.delta_t = sc.timing.delta_t();
  r.n_F = sc.timing.n_F;
  r.t_p = sc.timing.t_p;
  r.t_mag = sc.coupler.t_mag();
  r.r_mag = sc.coupler.r_mag();
  r.upsilon = sc.coupler.upsilon;
  r.collapse_d = sc.collapse.d;
  if (sc.configuration == Configuration::perpendicular) {
    r.alpha_re = sc.perpendicular.alpha.real();
    r.alpha_im = sc.perpendicular.alpha.imag();
    const Complex ai =
        sc.perpendicular.alpha_i.value_or(Complex(res.alpha_i_mag, 0.0));
    r.alpha_i_re = ai.real();
    r.alpha_i_im = ai.imag();
  } else {
    r.alpha_re = r.alpha_im = r.alpha_i_re = r.alpha_i_im = 0.0;
  }
  r.alpha_i_mag = res.alpha_i_mag;
  r.theta_m1 = sc.parallel.theta_m1;
  r.phi_m1 = sc.parallel.phi_m1;
  r.delta_theta_m = sc.configuration == Configuration::parallel
                        ? sc.parallel.delta_theta_m.value_or(res.theta_m0)
                        : 0.0;
  r.ife_enhancement = sc.perpendicular.ife_enhancement;
  r.chi_P_re = res.chi_P.real();
  r.chi_P_im = res.chi_P.imag();
  r.chi_M_re = res.chi_M.real();
  r.chi_M_im = res.chi_M.imag();
  r.eta = res.eta;
  r.p_T_unitary = res.p_T_unitary;
  r.p_R_unitary = res.p_R_unitary;
  r.p_T_collapsed = res.p_T_collapsed;
  r.p_R_collapsed = res.p_R_collapsed;
  r.purity_closed_form = res.purity_closed_form;
  r.purity_oracle = res.purity_oracle;
  r.intermediate_purity = res.intermediate_purity;
  r.L_F = res.L_F;
  r.theta_mz = res.theta_mz_value;
  r.theta_m0 = res.theta_m0;
  r.theta_IFE = res.theta_ife_value;
  r.omega_m_tp_ratio = res.omega_m_tp;
  r.l_P = res.beat_length_value;
  r.l_e_over_l_P = res.l_e_over_l_p;
  r.warnings = join_warnings(res.warnings);
  return r;
}

ResultRow evaluate_point(const ExperimentConfig& cfg, int index,
                         const std::vector<double>& outer_values,
                         const std::vector<double>& inner_values) {
  Scenario sc = cfg.scenario;
  if (cfg.sweep) {
    const int inner_count = cfg.inner ? cfg.inner->count : 1;
    const int i_outer = index / inner_count;
    apply_parameter(sc, cfg.sweep->parameter, outer_values[i_outer]);
    if (cfg.inner) apply_parameter(sc, cfg.inner->parameter, inner_values[index % inner_count]);
  }
  ScenarioResult res;
  try {
    res = run_configuration(sc);
  } catch (const TruncationError& e) {
    throw NumericalGuardError("sweep point " + std::to_string(index) + ": " + e.what());
  }
  ResultRow row = make_row(index, sc, res);
  const double sum_u = row.p_T_unitary + row.p_R_unitary;
  const double sum_c = row.p_T_collapsed + row.p_R_collapsed;
  if (std::abs(sum_u - 1.0) > 1e-12 || std::abs(sum_c - 1.0) > 1e-12)
    throw NumericalGuardError("sweep point " + std::to_string(index) +
                              ": p_T + p_R deviates from 1 by " +
                              std::to_string(std::max(std::abs(sum_u - 1.0),
                                                      std::abs(sum_c - 1.0))));
  return row;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, int threads) {
  const std::vector<double> outer = cfg.sweep ? cfg.sweep->values() : std::vector<double>{};
  const std::vector<double> inner = cfg.inner ? cfg.inner->values() : std::vector<double>{};
  const int total =
      cfg.sweep ? cfg.sweep->count * (cfg.inner ? cfg.inner->count : 1) : 1;

  std::vector<ResultRow> rows(total);
  if (threads <= 1 || total == 1) {
    for (int i = 0; i < total; ++i) rows[i] = evaluate_point(cfg, i, outer, inner);
    return rows;
  }

  // Points are independent; results land in index order no matter which
  // worker finishes first.
  std::vector<std::future<void>> futures;
  std::atomic<int> next{0};
  const int n_workers = std::min(threads, total);
  std::vector<std::exception_ptr> errors(total);
  for (int w = 0; w < n_workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&] {
      for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
        try {
          rows[i] = evaluate_point(cfg, i, outer, inner);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    }));
  }
  for (auto& f : futures) f.get();
  for (int i = 0; i < total; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  return rows;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::pair<const char*, double>> numeric_columns(const ResultRow& r) {
  return {{"Q_s", r.Q_s},
          {"n_0", r.n_0},
          {"lambda_0", r.lambda_0},
          {"l_A", r.l_A},
          {"R_s", r.R_s},
          {"M_s", r.M_s},
          {"omega_m", r.omega_m},
          {"gamma_e", r.gamma_e},
          {"t1", r.t1},
          {"t2", r.t2},
          {"delta_t", r.delta_t},
          {"n_F", r.n_F},
          {"t_p", r.t_p},
          {"t_mag", r.t_mag},
          {"r_mag", r.r_mag},
          {"upsilon", r.upsilon},
          {"collapse_d", r.collapse_d},
          {"alpha_re", r.alpha_re},
          {"alpha_im", r.alpha_im},
          {"alpha_i_re", r.alpha_i_re},
          {"alpha_i_im", r.alpha_i_im},
          {"alpha_i_mag", r.alpha_i_mag},
          {"theta_m1", r.theta_m1},
          {"phi_m1", r.phi_m1},
          {"delta_theta_m", r.delta_theta_m},
          {"ife_enhancement", r.ife_enhancement},
          {"chi_P_re", r.chi_P_re},
          {"chi_P_im", r.chi_P_im},
          {"chi_M_re", r.chi_M_re},
          {"chi_M_im", r.chi_M_im},
          {"eta", r.eta},
          {"p_T_unitary", r.p_T_unitary},
          {"p_R_unitary", r.p_R_unitary},
          {"p_T_collapsed", r.p_T_collapsed},
          {"p_R_collapsed", r.p_R_collapsed},
          {"purity_closed_form", r.purity_closed_form}};
}

std::vector<std::pair<const char*, double>> numeric_columns_tail(const ResultRow& r) {
  return {{"intermediate_purity", r.intermediate_purity},
          {"L_F", r.L_F},
          {"theta_mz", r.theta_mz},
          {"theta_m0", r.theta_m0},
          {"theta_IFE", r.theta_IFE},
          {"omega_m_tp_ratio", r.omega_m_tp_ratio},
          {"l_P", r.l_P},
          {"l_e_over_l_P", r.l_e_over_l_P}};
}

}  // namespace

std::string render_csv(const std::vector<ResultRow>& rows) {
  std::string out = "index,configuration";
  const ResultRow probe{};
  for (const auto& [name, v] : numeric_columns(probe)) (out += ',') += name;
  out += ",purity_oracle";
  for (const auto& [name, v] : numeric_columns_tail(probe)) (out += ',') += name;
  out += ",warnings\n";
  for (const auto& r : rows) {
    out += std::to_string(r.index);
    (out += ',') += r.configuration;
    for (const auto& [name, v] : numeric_columns(r)) (out += ',') += fmt17(v);
    (out += ',') += r.purity_oracle ? fmt17(*r.purity_oracle) : "";
    for (const auto& [name, v] : numeric_columns_tail(r)) (out += ',') += fmt17(v);
    (out += ',') += csv_quote(r.warnings);
    out += '\n';
  }
  return out;
}

std::string render_json(const std::vector<ResultRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json o;
    o["index"] = r.index;
    o["configuration"] = r.configuration;
    for (const auto& [name, v] : numeric_columns(r)) o[name] = v;
    if (r.purity_oracle) o["purity_oracle"] = *r.purity_oracle;
    else o["purity_oracle"] = nullptr;
    for (const auto& [name, v] : numeric_columns_tail(r)) o[name] = v;
    o["warnings"] = r.warnings;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string render_rows(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
  return cfg.output.format == OutputFormat::csv ? render_csv(rows) : render_json(rows);
}

}  // namespace folm
