// Copyright 2026 The glzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "glzi/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "glzi/error.hpp"
#include "glzi/metrics.hpp"
#include "glzi/oracle_check.hpp"
#include "glzi/svg.hpp"

#ifndef GLZI_VERSION
#define GLZI_VERSION "0.0.0"
#endif

namespace glzi {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Timings {
  double total = 0.0;
  std::size_t points = 0;
  double max_point = 0.0;

  void add(std::span<const ScanRecord> records) {
    for (const auto& r : records) max_point = std::max(max_point, r.wall_time);
    points += records.size();
  }
};

ordered_json sidecar(const ScanConfig& cfg, const Timings& t) {
  ordered_json j;
  ordered_json config = ordered_json::object();
  config["experiment"] = std::string(to_string(cfg.experiment));
  for (const auto& [k, v] : cfg.resolved) config[k] = v;
  j["config"] = config;
  j["units"] = {{"freq", "MHz (f)"}, {"time", "ns"}};
  j["version"] = std::string(version_string());
  j["timings"] = {{"total_s", t.total},
                  {"points", t.points},
                  {"mean_point_s", t.points ? t.total / static_cast<double>(t.points) : 0.0},
                  {"max_point_s", t.max_point},
                  {"workers", cfg.workers}};
  if (!cfg.warnings.empty()) j["warnings"] = cfg.warnings;
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IOError, "write failed for " + path.string());
}

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) text_ << (i ? "," : "") << header[i];
    text_ << '\n';
  }

  void row(std::initializer_list<std::string> cells) {
    if (cells.size() != columns_) throw Error(ErrorCode::DimensionMismatch, "CSV row has the wrong width");
    std::size_t i = 0;
    for (const auto& c : cells) text_ << (i++ ? "," : "") << c;
    text_ << '\n';
  }

  std::string str() const { return text_.str(); }

 private:
  std::size_t columns_;
  std::ostringstream text_;
};

std::string num(double x) { return format_csv_number(x); }

/// Writes `stem`.csv plus its `stem`.json sidecar; returns both paths.
void emit(ExperimentOutput& out, const ScanConfig& cfg, const std::string& stem, const CsvTable& table,
          const Timings& t, const ordered_json& extra = ordered_json::object()) {
  const auto csv = cfg.out_dir / (stem + ".csv");
  const auto json = cfg.out_dir / (stem + ".json");
  write_text(csv, table.str());
  ordered_json meta = sidecar(cfg, t);
  for (const auto& [k, v] : extra.items()) meta[k] = v;
  write_text(json, meta.dump(2) + "\n");
  out.files.push_back(csv);
  out.files.push_back(json);
}

ProtocolParams params_for(const ScanConfig& cfg, double nbar) {
  ProtocolParams p = cfg.protocol;
  p.nbar = nbar;
  return p;
}

std::vector<double> column(std::span<const ScanRecord> rs, double ScanRecord::*field) {
  std::vector<double> v;
  v.reserve(rs.size());
  for (const auto& r : rs) v.push_back(r.*field);
  return v;
}

double fringe_contrast(std::span<const ScanRecord> rs) {
  const auto pe = column(rs, &ScanRecord::p_e);
  return contrast(pe);
}

std::string fixed_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

ExperimentOutput run_fringe(const ScanConfig& cfg) {
  ExperimentOutput out;
  std::ostringstream summary;
  auto write = [&](const std::string& stem, const std::vector<ScanRecord>& rs, double seconds) {
    CsvTable table({"theta_geo", "P_e", "delta_n", "var_n_init", "eta_coh_init"});
    for (const auto& r : rs)
      table.row({num(r.theta_geo), num(r.p_e), num(r.delta_n), num(r.var_n_init), num(r.eta_coh_init)});
    Timings t;
    t.total = seconds;
    t.add(rs);
    emit(out, cfg, stem, table, t, {{"contrast", fringe_contrast(rs)}});
    summary << stem << ": C=" << num(fringe_contrast(rs)) << "\n";
  };

  std::vector<svg::Series> series;
  const auto theta = theta_points(cfg);
  for (double nbar : cfg.nbar_list) {
    const auto start = Clock::now();
    const BatteryStateSpec spec = Coherent{nbar, 0.0};
    const auto rs = scan_points(cfg, spec, nbar, theta);
    write("fringe_" + describe(spec), rs, seconds_since(start));
    series.push_back({"nbar=" + fixed_label(nbar), column(rs, &ScanRecord::theta_geo), column(rs, &ScanRecord::p_e), {}});
  }
  const auto start = Clock::now();
  const auto cl = scan_points(cfg, std::nullopt, cfg.protocol.nbar, theta);
  write("fringe_classical", cl, seconds_since(start));
  series.push_back({"classical", column(cl, &ScanRecord::theta_geo), column(cl, &ScanRecord::p_e), {}, true});

  if (cfg.svg) {
    const auto path = cfg.out_dir / "fringe.svg";
    svg::write_line_plot(path, "GLZI fringes", "theta_geo (rad)", "P_e", series);
    out.files.push_back(path);
  }
  out.summary = summary.str();
  return out;
}

ExperimentOutput run_heatmap(const ScanConfig& cfg) {
  ExperimentOutput out;
  std::ostringstream summary;
  const auto points = heatmap_points(cfg);
  const auto thetas = uniform_grid(0.0, 2.0 * std::numbers::pi, cfg.theta_count);
  const auto taus = uniform_grid(cfg.tau_p_min, cfg.tau_p_max, cfg.tau_p_count);

  auto table_for = [](const std::vector<ScanRecord>& rs) {
    CsvTable table({"theta_geo", "tau_p", "P_e"});
    for (const auto& r : rs) table.row({num(r.theta_geo), num(r.tau_p), num(r.p_e)});
    return table;
  };
  auto min_eig = [](const std::vector<ScanRecord>& rs) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& r : rs) m = std::min(m, r.min_eig);
    return m;
  };
  auto maybe_svg = [&](const std::string& stem, const std::vector<double>& values, const std::string& title) {
    if (!cfg.svg) return;
    const auto path = cfg.out_dir / (stem + ".svg");
    svg::write_heatmap(path, title, "theta_geo (rad)", "tau_p (ns)", thetas, taus, values);
    out.files.push_back(path);
  };

  auto start = Clock::now();
  const auto cl = scan_points(cfg, std::nullopt, cfg.protocol.nbar, points);
  Timings tcl;
  tcl.total = seconds_since(start);
  tcl.add(cl);
  emit(out, cfg, "heatmap_classical", table_for(cl), tcl, {{"min_eig", min_eig(cl)}});
  maybe_svg("heatmap_classical", column(cl, &ScanRecord::p_e), "P_e, classical drive");

  for (double nbar : cfg.nbar_list) {
    start = Clock::now();
    const BatteryStateSpec spec = Coherent{nbar, 0.0};
    const auto rs = scan_points(cfg, spec, nbar, points);
    Timings t;
    t.total = seconds_since(start);
    t.add(rs);
    std::vector<double> diff(rs.size());
    double max_abs = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      diff[i] = rs[i].p_e - cl[i].p_e;
      max_abs = std::max(max_abs, std::abs(diff[i]));
    }
    const std::string stem = "heatmap_" + describe(spec);
    emit(out, cfg, stem, table_for(rs), t,
         {{"max_abs_delta_p_e_vs_classical", max_abs}, {"min_eig", min_eig(rs)}});
    maybe_svg(stem, column(rs, &ScanRecord::p_e), "P_e, nbar=" + fixed_label(nbar));
    maybe_svg(stem + "_minus_classical", diff, "P_e(nbar=" + fixed_label(nbar) + ") - P_e(classical)");
    summary << stem << ": max|dP_e| vs classical=" << num(max_abs) << ", min_eig=" << num(min_eig(rs)) << "\n";
  }
  out.summary = summary.str();
  return out;
}

struct FringeSet {
  std::vector<double> nbar;
  std::vector<std::vector<ScanRecord>> fringes;
  double seconds = 0.0;
};

FringeSet coherent_fringes(const ScanConfig& cfg) {
  FringeSet set;
  const auto start = Clock::now();
  const auto theta = theta_points(cfg);
  for (double nbar : cfg.nbar_list) {
    set.nbar.push_back(nbar);
    set.fringes.push_back(scan_points(cfg, Coherent{nbar, 0.0}, nbar, theta));
  }
  set.seconds = seconds_since(start);
  return set;
}

ExperimentOutput run_contrast_scan(const ScanConfig& cfg) {
  ExperimentOutput out;
  const auto set = coherent_fringes(cfg);
  const auto start = Clock::now();
  const auto cl = scan_points(cfg, std::nullopt, cfg.protocol.nbar, theta_points(cfg));
  const double c_cl = fringe_contrast(cl);

  Timings t;
  t.total = set.seconds + seconds_since(start);
  t.add(cl);
  CsvTable table({"nbar", "C", "C_cl", "deficit", "inv_nbar"});
  std::vector<double> contrasts;
  std::vector<double> fit_n;
  std::vector<double> fit_c;
  for (std::size_t k = 0; k < set.nbar.size(); ++k) {
    t.add(set.fringes[k]);
    const double c = fringe_contrast(set.fringes[k]);
    contrasts.push_back(c);
    table.row({num(set.nbar[k]), num(c), num(c_cl), num(c_cl - c), num(1.0 / set.nbar[k])});
    if (set.nbar[k] >= cfg.fit_nbar_min) {
      fit_n.push_back(set.nbar[k]);
      fit_c.push_back(c);
    }
  }
  emit(out, cfg, "contrast_scan", table, t);

  ordered_json fit_json;
  fit_json["fit_nbar_min"] = cfg.fit_nbar_min;
  fit_json["points"] = fit_n.size();
  fit_json["C_cl"] = c_cl;
  std::ostringstream summary;
  summary << "C_cl=" << num(c_cl) << "\n";
  try {
    const auto fit = contrast_deficit_fit(fit_n, fit_c, c_cl);
    fit_json["slope"] = fit.slope;
    fit_json["intercept"] = fit.intercept;
    fit_json["r2"] = fit.r2;
    summary << "deficit fit over nbar >= " << num(cfg.fit_nbar_min) << ": slope=" << num(fit.slope)
            << " r2=" << num(fit.r2) << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateFit) throw;
    fit_json["slope"] = nullptr;
    fit_json["r2"] = nullptr;
    fit_json["error"] = e.what();
    summary << "deficit fit: " << e.what() << "\n";
  }
  const auto fit_path = cfg.out_dir / "contrast_scan_fit.json";
  write_text(fit_path, fit_json.dump(2) + "\n");
  out.files.push_back(fit_path);

  if (cfg.svg) {
    const auto path = cfg.out_dir / "contrast_scan.svg";
    svg::write_line_plot(path, "Fringe contrast", "nbar", "C",
                         {{"coherent", set.nbar, contrasts, {}},
                          {"classical", set.nbar, std::vector<double>(set.nbar.size(), c_cl), {}, true}});
    out.files.push_back(path);
  }
  for (std::size_t k = 0; k < set.nbar.size(); ++k)
    summary << "nbar=" << num(set.nbar[k]) << " C=" << num(contrasts[k]) << "\n";
  out.summary = summary.str();
  return out;
}

ExperimentOutput run_backaction(const ScanConfig& cfg) {
  ExperimentOutput out;
  const auto set = coherent_fringes(cfg);
  Timings t;
  t.total = set.seconds;
  CsvTable table({"nbar", "mean_delta_n", "std_delta_n", "rel_backaction"});
  std::vector<double> means;
  std::vector<double> stds;
  std::ostringstream summary;
  for (std::size_t k = 0; k < set.nbar.size(); ++k) {
    t.add(set.fringes[k]);
    const auto s = backaction(column(set.fringes[k], &ScanRecord::delta_n));
    means.push_back(s.mean);
    stds.push_back(s.std);
    table.row({num(set.nbar[k]), num(s.mean), num(s.std), num(s.mean / set.nbar[k])});
    summary << "nbar=" << num(set.nbar[k]) << " mean_delta_n=" << num(s.mean) << " std=" << num(s.std) << "\n";
  }
  emit(out, cfg, "backaction", table, t);
  if (cfg.svg) {
    const auto path = cfg.out_dir / "backaction.svg";
    svg::write_line_plot(path, "Battery back-action", "nbar", "delta n", {{"coherent", set.nbar, means, stds}});
    out.files.push_back(path);
  }
  out.summary = summary.str();
  return out;
}

ExperimentOutput run_squeeze_bench(const ScanConfig& cfg) {
  ExperimentOutput out;
  const auto start = Clock::now();
  const auto theta = theta_points(cfg);
  Timings t;
  CsvTable table({"state_kind", "nbar", "r_or_q", "C", "delta_C", "var_n_init", "eta_coh_init"});
  std::ostringstream summary;
  std::map<std::string, svg::Series> curves;
  std::vector<std::string> order;
  auto curve = [&](const std::string& name) -> svg::Series& {
    if (!curves.count(name)) {
      order.push_back(name);
      curves[name].name = name;
    }
    return curves[name];
  };

  for (double nbar : cfg.nbar_list) {
    const auto coh = scan_points(cfg, Coherent{nbar, 0.0}, nbar, theta);
    t.add(coh);
    const double c_coh = fringe_contrast(coh);
    auto add_row = [&](const std::string& kind, double param, const std::vector<ScanRecord>& rs,
                       const std::string& label) {
      const double c = fringe_contrast(rs);
      table.row({kind, num(nbar), num(param), num(c), num(c - c_coh), num(rs.front().var_n_init),
                 num(rs.front().eta_coh_init)});
      auto& s = curve(label);
      s.x.push_back(nbar);
      s.y.push_back(c);
      summary << kind << " nbar=" << num(nbar) << " param=" << num(param) << " C=" << num(c)
              << " delta_C=" << num(c - c_coh) << "\n";
    };
    add_row("coherent", 0.0, coh, "coherent");
    for (double r : cfg.r_list) {
      DisplacedSqueezed ds;
      ds.nbar = nbar;
      ds.r = r;
      ds.alignment = SqueezeAlignment::Amplitude;
      if (std::sinh(r) * std::sinh(r) >= nbar) {
        summary << "skip amp_squeezed nbar=" << num(nbar) << " r=" << num(r) << ": energy budget exceeded\n";
        continue;
      }
      const auto rs = scan_points(cfg, ds, nbar, theta);
      t.add(rs);
      add_row("amp_squeezed", r, rs, "amp r=" + fixed_label(r));
    }
    for (double q : cfg.q_list) {
      const auto rs = scan_points(cfg, NumberSqueezedGaussian{nbar, q, 0.0}, nbar, theta);
      t.add(rs);
      add_row("number_squeezed", q, rs, "number q=" + fixed_label(q));
    }
  }
  t.total = seconds_since(start);
  emit(out, cfg, "squeeze_bench", table, t);
  if (cfg.svg) {
    std::vector<svg::Series> series;
    for (const auto& name : order) series.push_back(curves[name]);
    const auto path = cfg.out_dir / "squeeze_bench.svg";
    svg::write_line_plot(path, "Contrast at fixed energy", "nbar", "C", series);
    out.files.push_back(path);
  }
  out.summary = summary.str();
  return out;
}

ExperimentOutput run_oracle(const ScanConfig& cfg) {
  ExperimentOutput out;
  const auto start = Clock::now();
  OracleCheckOptions opts;
  opts.inject_bn_sign_error = cfg.inject_bn_sign_error;
  const auto results = run_oracle_checks(opts);
  const auto path = cfg.out_dir / "oracle_check.json";
  auto report = ordered_json::parse(oracle_report_json(results));
  Timings t;
  t.total = seconds_since(start);
  report["meta"] = sidecar(cfg, t);
  write_text(path, report.dump(2) + "\n");
  out.files.push_back(path);
  std::ostringstream summary;
  int failed = 0;
  for (const auto& r : results) {
    summary << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << num(r.measured) << ' ' << r.relation << ' '
            << num(r.threshold) << "\n";
    failed += r.pass ? 0 : 1;
  }
  summary << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed\n";
  out.summary = summary.str();
  return out;
}

}  // namespace

std::string_view version_string() { return GLZI_VERSION; }

std::string format_csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<GridPoint> theta_points(const ScanConfig& cfg) {
  std::vector<GridPoint> pts;
  for (double th : uniform_grid(0.0, 2.0 * std::numbers::pi, cfg.theta_count))
    pts.push_back({th, cfg.protocol.tau_p});
  return pts;
}

std::vector<GridPoint> heatmap_points(const ScanConfig& cfg) {
  const auto taus = uniform_grid(cfg.tau_p_min, cfg.tau_p_max, cfg.tau_p_count);
  std::vector<GridPoint> pts;
  pts.reserve(static_cast<std::size_t>(cfg.theta_count) * taus.size());
  for (double th : uniform_grid(0.0, 2.0 * std::numbers::pi, cfg.theta_count))
    for (double tau : taus) pts.push_back({th, tau});
  return pts;
}

std::vector<ScanRecord> scan_points(const ScanConfig& cfg, const std::optional<BatteryStateSpec>& battery,
                                    double nbar, std::span<const GridPoint> points) {
  const ProtocolParams base = params_for(cfg, nbar);
  base.validate();
  std::optional<QuantumModel> model;
  if (battery) model.emplace(base.coupling(), compute_cutoff(*battery), cfg.noise);

  std::vector<ScanRecord> records(points.size());
  parallel_for(points.size(), cfg.workers, [&](std::size_t i) {
    const auto start = Clock::now();
    ProtocolParams p = base;
    p.theta_geo = points[i].theta_geo;
    p.tau_p = points[i].tau_p;
    ScanRecord& rec = records[i];
    rec.experiment = std::string(to_string(cfg.experiment));
    rec.theta_geo = p.theta_geo;
    rec.tau_p = p.tau_p;
    rec.nbar = nbar;
    RunResult res;
    if (battery) {
      const BatteryStateSpec phased = with_phase(*battery, p.battery_phase());
      rec.battery = describe(*battery);
      if (const auto* ds = std::get_if<DisplacedSqueezed>(&*battery)) rec.r = ds->r;
      if (const auto* ns = std::get_if<NumberSqueezedGaussian>(&*battery)) rec.q = ns->q;
      res = model->run(p, build_battery(phased, model->n_cut()), cfg.integrator);
    } else {
      rec.battery = "classical";
      res = run_classical(p, cfg.noise, cfg.integrator);
    }
    rec.p_e = res.p_e;
    rec.delta_n = res.has_battery ? res.delta_n() : std::numeric_limits<double>::quiet_NaN();
    rec.var_n_init = res.var_n_initial;
    rec.eta_coh_init = res.eta_coh_initial;
    rec.trace_defect = res.trace_defect;
    rec.min_eig = res.min_eig;
    rec.wall_time = seconds_since(start);
  });
  return records;
}

std::vector<ScanRecord> scan_fringe(const ScanConfig& cfg, const std::optional<BatteryStateSpec>& battery,
                                    double nbar) {
  return scan_points(cfg, battery, nbar, theta_points(cfg));
}

ExperimentOutput run_experiment(const ScanConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw Error(ErrorCode::IOError, "cannot create " + cfg.out_dir.string() + ": " + ec.message());
  switch (cfg.experiment) {
    case Experiment::Fringe:
      return run_fringe(cfg);
    case Experiment::Heatmap:
      return run_heatmap(cfg);
    case Experiment::ContrastScan:
      return run_contrast_scan(cfg);
    case Experiment::Backaction:
      return run_backaction(cfg);
    case Experiment::SqueezeBench:
      return run_squeeze_bench(cfg);
    case Experiment::OracleCheck:
      return run_oracle(cfg);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown experiment");
}

}  // namespace glzi
