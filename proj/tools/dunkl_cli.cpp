#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "dunkl/grid.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/report.hpp"
#include "dunkl/specfn.hpp"
#include "dunkl/suites.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"
#include "dunkl/util.hpp"

namespace {

using namespace dunkl;

std::vector<double> parse_csv_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad number: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// MIN:MAX:STEP, inclusive endpoints up to rounding
std::vector<double> parse_step_grid(const std::string& s) {
  double lo, hi, step;
  char c1, c2;
  std::stringstream ss(s);
  if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(step > 0.0) || hi < lo)
    throw std::invalid_argument("grid spec must be MIN:MAX:STEP with STEP > 0: " + s);
  std::vector<double> out;
  long n = std::lround((hi - lo) / step);
  for (long i = 0; i <= n; ++i) out.push_back(lo + step * static_cast<double>(i));
  return out;
}

// MIN:MAX:COUNT, log-spaced
std::vector<double> parse_tgrid(const std::string& s) {
  double lo, hi;
  long count;
  char c1, c2;
  std::stringstream ss(s);
  if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' ||
      !(lo > 0.0) || hi < lo || count < 1)
    throw std::invalid_argument("tgrid must be MIN:MAX:COUNT with 0 < MIN <= MAX: " + s);
  return logspace(lo, hi, static_cast<std::size_t>(count));
}

std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

struct Options {
  std::string suite = "all";
  std::string k_csv;
  double c = 72.0;
  double tol = 1e-6;
  std::string tgrid;
  std::string grid;     // eval grid or grid_id for verify/pin
  std::string out;
  std::string xspec, yspec, fname = "gauss";
  double t = 1.0, y = 0.0;
  bool force = false;
};

SuiteConfig make_config(const Options& opt) {
  SuiteConfig cfg;
  if (!opt.k_csv.empty()) {
    std::vector<double> ks = parse_csv_doubles(opt.k_csv);
    MultiplicityVector check(ks);  // validates k_j >= 0
    cfg.k_configs = {ks};
  }
  if (!(opt.c > 0.0)) throw std::invalid_argument("--c must be > 0");
  if (!(opt.tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
  cfg.c = opt.c;
  cfg.tol = opt.tol;
  if (!opt.tgrid.empty()) {
    std::vector<double> ts = parse_tgrid(opt.tgrid);
    cfg.t_min = ts.front();
    cfg.t_max = ts.back();
    cfg.t_count = ts.size();
  }
  if (!opt.grid.empty()) cfg.grid_id = opt.grid;
  return cfg;
}

std::vector<EstimateReport> run_selected(const Options& opt, const SuiteConfig& cfg) {
  if (opt.suite == "all") return run_all_suites(cfg);
  return run_suite(opt.suite, cfg);
}

std::string config_echo(const char* cmd, const Options& opt, const SuiteConfig& cfg) {
  std::ostringstream ss;
  ss << "cmd=" << cmd << " suite=" << opt.suite << " k=";
  for (std::size_t i = 0; i < cfg.k_configs.size(); ++i) {
    if (i) ss << ";";
    ss << MultiplicityVector(cfg.k_configs[i]).label();
  }
  ss << " c=" << format_double(cfg.c) << " tol=" << format_double(cfg.tol)
     << " tgrid=" << format_double(cfg.t_min) << ":" << format_double(cfg.t_max) << ":"
     << cfg.t_count << " grid=" << cfg.grid_id;
  return ss.str();
}

int cmd_verify(const Options& opt, const std::string& frozen_path) {
  SuiteConfig cfg = make_config(opt);
  std::vector<EstimateReport> reports = run_selected(opt, cfg);
  FrozenTable table = FrozenTable::load(frozen_path);
  apply_frozen(reports, table);

  std::string json_path = opt.out.empty() ? "report.json" : opt.out;
  std::string csv_path = json_path;
  auto dot = csv_path.rfind('.');
  if (dot != std::string::npos) csv_path.resize(dot);
  csv_path += ".csv";
  write_report_json(json_path, config_echo("verify", opt, cfg), reports);
  write_report_csv(csv_path, reports);

  int nfail = 0, npin = 0;
  for (const auto& r : reports) {
    if (r.status == EstimateReport::Status::fail) ++nfail;
    if (r.status == EstimateReport::Status::pinning) ++npin;
  }
  std::printf("verify: %zu estimates, %d fail, %d unpinned -> %s\n", reports.size(),
              nfail, npin, json_path.c_str());
  if (nfail > 0) {
    for (const auto& r : reports)
      if (r.status == EstimateReport::Status::fail)
        std::printf("  FAIL %s k=%s grid=%s empirical=%s frozen=%s\n",
                    r.estimate_id.c_str(), r.k_config.c_str(), r.grid_id.c_str(),
                    format_double(r.empirical_constant).c_str(),
                    format_double(*r.frozen_constant).c_str());
    return 1;
  }
  if (npin > 0) {
    std::printf("  some estimates have no frozen constant; run `dunkl pin` first\n");
    return 1;
  }
  return 0;
}

int cmd_pin(const Options& opt, const std::string& frozen_path) {
  SuiteConfig cfg = make_config(opt);
  std::vector<EstimateReport> reports = run_selected(opt, cfg);
  FrozenTable table = FrozenTable::load(frozen_path);
  std::string ts = timestamp_utc();
  int refused = 0, added = 0;
  for (const auto& r : reports) {
    if (table.insert(r.estimate_id, r.k_config, r.grid_id, r.empirical_constant, ts,
                     opt.force)) {
      ++added;
    } else {
      ++refused;
      std::fprintf(stderr, "pin: row exists (use --force): %s %s %s\n",
                   r.estimate_id.c_str(), r.k_config.c_str(), r.grid_id.c_str());
    }
  }
  if (added > 0) table.save(frozen_path);
  std::printf("pin: %d rows written, %d refused -> %s\n", added, refused,
              frozen_path.c_str());
  return refused > 0 ? 1 : 0;
}

int cmd_eval(const std::string& what, const Options& opt) {
  std::vector<double> ks =
      opt.k_csv.empty() ? std::vector<double>{0.0} : parse_csv_doubles(opt.k_csv);
  MultiplicityVector mult(ks);
  if (mult.dim() != 1)
    throw std::invalid_argument("eval supports scalar --k only");
  double k = ks[0];

  std::string gspec = !opt.xspec.empty() ? opt.xspec : opt.grid;
  if (gspec.empty()) throw std::invalid_argument("eval requires --x or --grid");
  std::vector<double> xs = parse_step_grid(gspec);
  std::vector<double> ys;
  if (opt.yspec.empty()) {
    ys = {opt.y};
  } else if (opt.yspec.find(':') == std::string::npos) {
    ys = {std::stod(opt.yspec)};
  } else {
    ys = parse_step_grid(opt.yspec);
  }

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) throw std::runtime_error("cannot write " + opt.out);
    os = &file;
  }

  auto fn = [&](double x) -> Complex {
    if (opt.fname == "gauss") return std::exp(-0.5 * x * x);
    if (opt.fname == "bump") {
      double u = 1.0 - x * x;
      return u > 0.0 ? std::exp(-1.0 / u) : 0.0;
    }
    throw std::invalid_argument("--f must be gauss or bump");
  };

  if (what == "kernel") {
    *os << "x,y,value\n";
    for (double y : ys)
      for (double x : xs)
        *os << format_double(x) << "," << format_double(y) << ","
            << format_double(dunkl_kernel_1d(k, x, y)) << "\n";
  } else if (what == "heat") {
    if (!(opt.t > 0.0)) throw std::invalid_argument("--t must be > 0");
    CutoffSpec spec;
    *os << "t,x,y,h,H\n";
    for (double y : ys)
      for (double x : xs)
        *os << format_double(opt.t) << "," << format_double(x) << ","
            << format_double(y) << "," << format_double(heat_kernel_1d(k, opt.t, x, y))
            << "," << format_double(truncated_kernel_1d(k, spec, opt.t, x, y)) << "\n";
  } else if (what == "transform") {
    MuGrid1D xg = mu_grid_1d(k, -12.0, 12.0, 8, 16);
    GridFunction f = sample_1d(xg, fn);
    *os << "xi,re,im\n";
    for (double xi : xs) {
      Complex v = dunkl_transform_point(k, f, xi);
      *os << format_double(xi) << "," << format_double(v.real()) << ","
          << format_double(v.imag()) << "\n";
    }
  } else if (what == "translate") {
    *os << "x,re,im\n";
    for (double x : xs) {
      Complex v = translate_1d(k, fn, ys[0], x);
      *os << format_double(x) << "," << format_double(v.real()) << ","
          << format_double(v.imag()) << "\n";
    }
  } else {
    throw std::invalid_argument("eval target must be kernel|heat|transform|translate");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification suites for rational Dunkl analysis"};
  app.require_subcommand(1);

  Options opt;
  std::string frozen_path = "data/frozen_constants.txt";
  std::string eval_what;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--suite", opt.suite, "suite name or 'all'");
    sub->add_option("--k", opt.k_csv, "multiplicities v1,v2,...");
    sub->add_option("--c", opt.c, "Gaussian decay constant");
    sub->add_option("--tol", opt.tol, "tolerance");
    sub->add_option("--tgrid", opt.tgrid, "time grid MIN:MAX:COUNT (log-spaced)");
    sub->add_option("--grid", opt.grid, "grid id (verify/pin) or MIN:MAX:STEP (eval)");
    sub->add_option("--out", opt.out, "output path");
    sub->add_option("--frozen", frozen_path, "frozen-constants table path");
    sub->add_flag("--force", opt.force, "overwrite existing pinned rows");
  };

  CLI::App* verify = app.add_subcommand("verify", "run suites and judge against table");
  add_common(verify);
  CLI::App* pin = app.add_subcommand("pin", "run suites and freeze the constants");
  add_common(pin);
  CLI::App* ev = app.add_subcommand("eval", "tabulate kernels to CSV");
  ev->add_option("what", eval_what, "kernel|heat|transform|translate")->required();
  add_common(ev);
  ev->add_option("--x", opt.xspec, "x grid MIN:MAX:STEP");
  ev->add_option("--y", opt.yspec, "y value or grid MIN:MAX:STEP");
  ev->add_option("--t", opt.t, "time for eval heat");
  ev->add_option("--f", opt.fname, "profile gauss|bump");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, frozen_path);
    if (pin->parsed()) return cmd_pin(opt, frozen_path);
    return cmd_eval(eval_what, opt);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
