// Command-line front end: single-point evaluation, parameter sweeps,
// extremum finding, and figure-data emission in CSV or JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "unruh/dirac_field.hpp"
#include "unruh/frames.hpp"
#include "unruh/scalar_field.hpp"
#include "unruh/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

constexpr double kQuarterPi = std::numbers::pi / 4.0;

// Alpha set of the five reference curves: 1/sqrt(2), 1/2, sqrt(3/4),
// 1/sqrt(8), sqrt(7/8).
const std::vector<double> kCurveAlphas = {
    0.7071067811865476, 0.5, 0.8660254037844386, 0.35355339059327373,
    0.9354143466934853};

struct RunConfig {
  std::string command;
  unruh::FieldKind field_kind = unruh::FieldKind::dirac;
  std::vector<double> alphas;
  std::optional<double> param;
  bool theta_limit = false;
  unruh::ParamGrid grid{0.0, 0.0, 0};
  double series_tol = 1e-12;
  std::int64_t max_terms = unruh::SeriesLimits{}.max_terms;
  double tol_x = 1e-8;
  std::string output_format = "csv";
  std::string output_path;  // empty: stdout ("figures": output directory)
  std::uint64_t seed = 0;   // reserved for randomized spot checks
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    os << (c ? "," : "") << t.columns[c];
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << fmt(row[c]);
    }
    os << "\n";
  }
}

void write_json(std::ostream& os, const Table& t, const RunConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["metadata"]["field_kind"] =
      cfg.field_kind == unruh::FieldKind::scalar ? "scalar" : "dirac";
  doc["metadata"]["series_tol"] = cfg.series_tol;
  doc["metadata"]["log_base"] = 2;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << "\n";
}

void emit(const Table& t, const RunConfig& cfg) {
  const bool json = cfg.output_format == "json";
  if (cfg.output_path.empty()) {
    if (json) {
      write_json(std::cout, t, cfg);
    } else {
      write_csv(std::cout, t);
    }
    return;
  }
  std::ofstream os(cfg.output_path, std::ios::binary);
  if (!os) throw std::ios_base::failure("cannot open " + cfg.output_path);
  if (json) {
    write_json(os, t, cfg);
  } else {
    write_csv(os, t);
  }
  if (!os.flush()) throw std::ios_base::failure("write failed: " + cfg.output_path);
}

Table sweep_table(const std::vector<unruh::CurvePoint>& pts) {
  Table t;
  t.columns = {"alpha", "param", "coherence", "tail_guarantee"};
  for (const auto& p : pts) {
    t.rows.push_back({p.alpha, p.param, p.coherence, p.tail_guarantee});
  }
  return t;
}

unruh::SweepSpec base_spec(const RunConfig& cfg) {
  unruh::SweepSpec spec;
  spec.field_kind = cfg.field_kind;
  spec.series_tol = cfg.series_tol;
  spec.limits.max_terms = cfg.max_terms;
  return spec;
}

int run_point(const RunConfig& cfg) {
  if (cfg.alphas.empty() || !cfg.param) {
    std::cerr << "point requires --alpha and a parameter value\n";
    return kExitUsage;
  }
  auto spec = base_spec(cfg);
  spec.alpha_values = cfg.alphas;
  spec.grid = {*cfg.param, *cfg.param, 1};
  emit(sweep_table(unruh::sweep(spec)), cfg);
  return 0;
}

int run_sweep(const RunConfig& cfg) {
  if (cfg.alphas.empty() || cfg.grid.count < 1) {
    std::cerr << "sweep requires --alpha and a parameter grid\n";
    return kExitUsage;
  }
  auto spec = base_spec(cfg);
  spec.alpha_values = cfg.alphas;
  spec.grid = cfg.grid;
  emit(sweep_table(unruh::sweep(spec)), cfg);
  return 0;
}

int run_maximize(const RunConfig& cfg) {
  double param = 0.0;
  if (cfg.theta_limit) {
    if (cfg.field_kind != unruh::FieldKind::dirac) {
      std::cerr << "--theta-limit applies to the dirac field only\n";
      return kExitUsage;
    }
    param = kQuarterPi;
  } else if (cfg.param) {
    param = *cfg.param;
  } else {
    std::cerr << "maximize requires a parameter value or --theta-limit\n";
    return kExitUsage;
  }
  const auto rp = unruh::maximize_alpha(cfg.field_kind, param, cfg.tol_x, cfg.series_tol,
                                        unruh::SeriesLimits{cfg.max_terms});
  Table t;
  t.columns = {"param", "alpha_star", "coherence_max"};
  t.rows.push_back({rp.param, rp.alpha_star, rp.coherence_max});
  emit(t, cfg);
  return 0;
}

int run_ridge(const RunConfig& cfg) {
  unruh::ParamGrid grid = cfg.grid;
  if (grid.count < 1) grid = {0.0, kQuarterPi - 1e-6, 101};
  Table t;
  t.columns = {"param", "alpha_star", "coherence_max"};
  for (const auto& rp : unruh::ridge(grid, cfg.tol_x)) {
    t.rows.push_back({rp.param, rp.alpha_star, rp.coherence_max});
  }
  emit(t, cfg);
  return 0;
}

Table loss_table(const std::vector<unruh::LossPoint>& pts) {
  Table t;
  t.columns = {"alpha", "c_at_zero", "c_at_limit", "delta"};
  for (const auto& p : pts) {
    t.rows.push_back({p.alpha, p.c_at_zero, p.c_at_limit, p.delta});
  }
  return t;
}

int run_loss(const RunConfig& cfg) {
  std::vector<unruh::LossPoint> pts;
  if (!cfg.alphas.empty()) {
    for (double a : cfg.alphas) {
      auto one = unruh::loss_curve(unruh::ParamGrid{a, a, 1});
      pts.insert(pts.end(), one.begin(), one.end());
    }
  } else if (cfg.grid.count >= 1) {
    pts = unruh::loss_curve(cfg.grid);
  } else {
    std::cerr << "loss requires --alpha or a grid\n";
    return kExitUsage;
  }
  emit(loss_table(pts), cfg);
  return 0;
}

int run_figures(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.output_path.empty() ? fs::path(".") : fs::path(cfg.output_path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::ios_base::failure("cannot create " + dir.string());

  auto to_file = [&](const std::string& name, const Table& t) {
    RunConfig sub = cfg;
    sub.output_format = "csv";
    sub.output_path = (dir / name).string();
    emit(t, sub);
  };

  // fig2: scalar curves vs r for the five reference alphas.
  {
    auto spec = base_spec(cfg);
    spec.field_kind = unruh::FieldKind::scalar;
    spec.alpha_values = kCurveAlphas;
    spec.grid = cfg.grid.count >= 1 ? cfg.grid : unruh::ParamGrid{0.0, 8.0, 33};
    to_file("fig2.csv", sweep_table(unruh::sweep(spec)));
  }
  // fig3: dirac curves vs theta, endpoint routed to the limit form.
  {
    auto spec = base_spec(cfg);
    spec.field_kind = unruh::FieldKind::dirac;
    spec.alpha_values = kCurveAlphas;
    spec.grid = {0.0, kQuarterPi, 101};
    to_file("fig3.csv", sweep_table(unruh::sweep(spec)));
  }
  // fig4: coherence at rest, in the limit, and the loss, vs alpha.
  to_file("fig4.csv", loss_table(unruh::loss_curve(unruh::ParamGrid{0.0, 1.0, 201})));
  // fig5: dirac coherence surface plus the maximal-coherence ridge.
  {
    Table t;
    t.columns = {"kind", "alpha", "theta", "coherence"};
    const unruh::ParamGrid alpha_grid{0.0, 1.0, 51};
    const unruh::ParamGrid theta_grid{0.0, kQuarterPi, 51};
    auto spec = base_spec(cfg);
    spec.field_kind = unruh::FieldKind::dirac;
    spec.grid = theta_grid;
    for (std::int64_t i = 0; i < alpha_grid.count; ++i) {
      spec.alpha_values = {alpha_grid.at(i)};
      for (const auto& p : unruh::sweep(spec)) {
        t.rows.push_back({0.0, p.alpha, p.param, p.coherence});
      }
    }
    for (const auto& rp : unruh::ridge(unruh::ParamGrid{0.0, kQuarterPi - 1e-6, 101},
                                       cfg.tol_x)) {
      t.rows.push_back({1.0, rp.alpha_star, rp.param, rp.coherence_max});
    }
    to_file("fig5.csv", t);
  }
  return 0;
}

int run(const RunConfig& cfg) {
  if (cfg.command == "point") return run_point(cfg);
  if (cfg.command == "sweep") return run_sweep(cfg);
  if (cfg.command == "maximize") return run_maximize(cfg);
  if (cfg.command == "ridge") return run_ridge(cfg);
  if (cfg.command == "loss") return run_loss(cfg);
  if (cfg.command == "figures") return run_figures(cfg);
  std::cerr << "unknown command: " << cfg.command << "\n";
  return kExitUsage;
}

unruh::FieldKind parse_field(const std::string& s) {
  if (s == "scalar") return unruh::FieldKind::scalar;
  if (s == "dirac") return unruh::FieldKind::dirac;
  throw CLI::ValidationError("--field", "must be 'scalar' or 'dirac'");
}

RunConfig config_from_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::ios_base::failure("cannot open config " + path);
  nlohmann::json doc = nlohmann::json::parse(is);

  RunConfig cfg;
  cfg.command = doc.at("command").get<std::string>();
  if (doc.contains("field_kind")) {
    cfg.field_kind = parse_field(doc["field_kind"].get<std::string>());
  }
  if (doc.contains("alpha")) {
    if (doc["alpha"].is_array()) {
      cfg.alphas = doc["alpha"].get<std::vector<double>>();
    } else {
      cfg.alphas = {doc["alpha"].get<double>()};
    }
  }
  if (doc.contains("param")) {
    if (doc["param"].is_object()) {
      const auto& g = doc["param"];
      cfg.grid = {g.at("start").get<double>(), g.at("stop").get<double>(),
                  g.at("count").get<std::int64_t>()};
    } else {
      cfg.param = doc["param"].get<double>();
    }
  }
  if (doc.contains("theta_limit")) cfg.theta_limit = doc["theta_limit"].get<bool>();
  if (doc.contains("series_tol")) cfg.series_tol = doc["series_tol"].get<double>();
  if (doc.contains("max_terms")) cfg.max_terms = doc["max_terms"].get<std::int64_t>();
  if (doc.contains("tol_x")) cfg.tol_x = doc["tol_x"].get<double>();
  if (doc.contains("output_format")) {
    cfg.output_format = doc["output_format"].get<std::string>();
  }
  if (doc.contains("output_path")) cfg.output_path = doc["output_path"].get<std::string>();
  if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative entropy of coherence of two-mode scalar/Dirac states "
               "under uniform acceleration"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  std::string field = "dirac";
  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration; overrides subcommands");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "scalar | dirac")->capture_default_str();
    sub->add_option("--series-tol", cfg.series_tol, "certified series tolerance (scalar)")
        ->capture_default_str();
    sub->add_option("--max-terms", cfg.max_terms, "series term cap")->capture_default_str();
    sub->add_option("--format", cfg.output_format, "csv | json")->capture_default_str();
    sub->add_option("--output", cfg.output_path, "output file (default: stdout)");
  };

  auto* point = app.add_subcommand("point", "evaluate one (alpha, parameter) pair");
  add_common(point);
  double point_param = 0.0;
  point->add_option("--alpha", cfg.alphas, "superposition amplitude(s)")->required();
  auto* popt = point->add_option("--param,--r,--theta", point_param, "acceleration parameter");

  auto* swp = app.add_subcommand("sweep", "coherence curves over a parameter grid");
  add_common(swp);
  swp->add_option("--alpha", cfg.alphas, "superposition amplitude(s)")->required();
  swp->add_option("--start", cfg.grid.start, "grid start")->capture_default_str();
  swp->add_option("--stop", cfg.grid.stop, "grid stop")->required();
  swp->add_option("--count", cfg.grid.count, "grid point count")->required();

  auto* maxi = app.add_subcommand("maximize", "maximize coherence over alpha");
  add_common(maxi);
  double maxi_param = 0.0;
  auto* mopt = maxi->add_option("--param,--r,--theta", maxi_param, "acceleration parameter");
  maxi->add_flag("--theta-limit", cfg.theta_limit, "use the theta -> pi/4 limit form");
  maxi->add_option("--tol-x", cfg.tol_x, "alpha resolution")->capture_default_str();

  auto* rdg = app.add_subcommand("ridge", "maximal-coherence trajectory over theta");
  add_common(rdg);
  rdg->add_option("--start", cfg.grid.start, "theta grid start")->capture_default_str();
  rdg->add_option("--stop", cfg.grid.stop, "theta grid stop");
  rdg->add_option("--count", cfg.grid.count, "theta grid point count");
  rdg->add_option("--tol-x", cfg.tol_x, "alpha resolution")->capture_default_str();

  auto* los = app.add_subcommand("loss", "coherence loss between rest and the limit");
  add_common(los);
  los->add_option("--alpha", cfg.alphas, "evaluate at specific alphas");
  los->add_option("--start", cfg.grid.start, "alpha grid start")->capture_default_str();
  los->add_option("--stop", cfg.grid.stop, "alpha grid stop");
  los->add_option("--count", cfg.grid.count, "alpha grid point count");

  auto* figs = app.add_subcommand("figures", "emit fig2-fig5 datasets");
  add_common(figs);
  figs->add_option("--output-dir", cfg.output_path, "target directory")
      ->capture_default_str();
  figs->add_option("--r-stop", cfg.grid.stop, "fig2 r-axis end");
  figs->add_option("--r-count", cfg.grid.count, "fig2 r-axis point count");
  figs->add_option("--tol-x", cfg.tol_x, "ridge alpha resolution")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      return run(config_from_json(config_path));
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kExitUsage;
    }
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    cfg.field_kind = parse_field(field);
    if (cfg.command == "point" && popt->count() > 0) cfg.param = point_param;
    if (cfg.command == "maximize" && mopt->count() > 0) cfg.param = maxi_param;
    if (cfg.command == "sweep") {
      if (cfg.grid.count < 1) {
        std::cerr << "sweep requires --count >= 1\n";
        return kExitUsage;
      }
    }
    if (cfg.command == "figures" && cfg.grid.count >= 1 && cfg.grid.stop <= 0.0) {
      cfg.grid.stop = 8.0;
    }
    return run(cfg);
  } catch (const unruh::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
