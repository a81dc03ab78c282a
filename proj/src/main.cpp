#include "aiet.hpp"
#include "classify.hpp"
#include "rauzy.hpp"
#include "schottky.hpp"
#include "surface.hpp"
#include "sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using affiet::Int;
using affiet::ProjPoint;
using affiet::Rational;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

Rational parse_rational(const std::string& text, const std::string& what) {
  auto r = Rational::parse(text);
  if (!r)
    throw std::runtime_error(what + ": expected an exact rational like 3/2, got '" +
                             text + "'");
  return *r;
}

ProjPoint parse_slope(const std::string& text) {
  auto p = ProjPoint::parse(text);
  if (!p)
    throw std::runtime_error(
        "--slope: expected an exact rational or 'inf', got '" + text + "'");
  return *p;
}

std::string coverage_table(long long k_max) {
  std::ostringstream os;
  os << "k,measure_num,measure_den,lower_bound\n";
  Rational decay(1);
  const Rational five_sixths(Int(5), Int(6));
  for (long long k = 0; k <= k_max; ++k) {
    Rational measure = affiet::rauzy::coverage_measure(k);
    Rational bound = Rational(1) - decay;
    os << k << ',' << measure.num() << ',' << measure.den() << ','
       << bound.str() << '\n';
    decay = decay * five_sixths;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tools for a piecewise dilation of the circle: direction "
      "classification, two-branch induction coverage, limit set arcs of the "
      "projective symmetry group, and parameter sweeps of its suspension."};
  app.set_config("--config", "", "INI file; one [section] per subcommand");
  app.require_subcommand(1);

  auto* cls = app.add_subcommand("classify", "Verdict for one direction, as JSON");
  cls->configurable();
  std::string cls_slope, cls_t;
  long long reduce_depth = 64, induction_steps = 64;
  CLI::Option* cls_slope_opt =
      cls->add_option("--slope", cls_slope, "direction as a rational or 'inf'");
  CLI::Option* cls_t_opt =
      cls->add_option("--t", cls_t, "family parameter, slope becomes 6t mod 1");
  cls_slope_opt->excludes(cls_t_opt);
  cls->add_option("--reduce-depth", reduce_depth, "projective reduction cap")
      ->capture_default_str();
  cls->add_option("--induction-steps", induction_steps, "induction step cap")
      ->capture_default_str();

  auto* swp = app.add_subcommand("sweep", "Orbit samples over a parameter grid");
  swp->configurable();
  affiet::cli::SweepConfig sweep_cfg;
  std::string sweep_t_min = sweep_cfg.t_min.str();
  std::string sweep_t_max = sweep_cfg.t_max.str();
  std::string sweep_output, sweep_format = "csv";
  swp->add_option("--t-min", sweep_t_min, "grid start")->capture_default_str();
  swp->add_option("--t-max", sweep_t_max, "grid end")->capture_default_str();
  swp->add_option("--steps", sweep_cfg.steps, "grid points")->capture_default_str();
  swp->add_option("--burn-in", sweep_cfg.burn_in, "discarded iterations")
      ->capture_default_str();
  swp->add_option("--samples", sweep_cfg.samples, "recorded points per grid value")
      ->capture_default_str();
  swp->add_option("--seed", sweep_cfg.seed, "base seed, row i uses seed + i")
      ->capture_default_str();
  swp->add_option("--output", sweep_output, "output file")->required();
  swp->add_option("--format", sweep_format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();

  auto* lim = app.add_subcommand("limitset", "Arc table around the limit set");
  lim->configurable();
  long long limit_depth = 1;
  std::string limit_output;
  lim->add_option("--depth", limit_depth, "deepest arc generation")
      ->required()
      ->check(CLI::Range(1, 14));
  lim->add_option("--output", limit_output, "output file, stdout when absent");

  auto* cov = app.add_subcommand("coverage",
                                 "Stop-window measure against its lower bound");
  cov->configurable();
  long long coverage_k = 0;
  cov->add_option("--k", coverage_k, "largest word length")
      ->required()
      ->check(CLI::Range(0, 20));

  auto* vee = app.add_subcommand("veech", "Self checks of the symmetry generators");

  auto* dmp = app.add_subcommand("dump-map", "Branch table of a return map");
  dmp->configurable();
  std::string dump_t, dump_slope;
  CLI::Option* dump_t_opt =
      dmp->add_option("--t", dump_t, "family parameter, taken mod 1");
  CLI::Option* dump_slope_opt =
      dmp->add_option("--slope", dump_slope, "direction as a rational or 'inf'");
  dump_t_opt->excludes(dump_slope_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cls->parsed()) {
      if (cls_slope_opt->count() + cls_t_opt->count() != 1)
        throw std::runtime_error("classify: give exactly one of --slope and --t");
      affiet::classify::Caps caps{reduce_depth, induction_steps};
      affiet::classify::Classification verdict =
          cls_slope_opt->count()
              ? affiet::classify::classify_direction(parse_slope(cls_slope), caps)
              : affiet::classify::classify_parameter_t(
                    parse_rational(cls_t, "--t"), caps);
      std::cout << affiet::classify::to_json(verdict) << '\n';
    } else if (swp->parsed()) {
      sweep_cfg.t_min = parse_rational(sweep_t_min, "--t-min");
      sweep_cfg.t_max = parse_rational(sweep_t_max, "--t-max");
      auto rows = affiet::cli::sweep_rows(sweep_cfg);
      write_output(sweep_output, sweep_format == "csv"
                                     ? affiet::cli::sweep_csv(rows)
                                     : affiet::cli::sweep_svg(rows));
    } else if (lim->parsed()) {
      write_output(limit_output, affiet::schottky::limit_set_csv(limit_depth));
    } else if (cov->parsed()) {
      std::cout << coverage_table(coverage_k);
    } else if (vee->parsed()) {
      affiet::schottky::CheckReport report = affiet::schottky::veech_checks();
      std::cout << report.str();
      if (!report.all_ok()) {
        std::cout << "some checks failed\n";
        return 1;
      }
      std::cout << "all checks passed\n";
    } else if (dmp->parsed()) {
      if (dump_t_opt->count() + dump_slope_opt->count() != 1)
        throw std::runtime_error("dump-map: give exactly one of --t and --slope");
      affiet::iet::Aiet map =
          dump_t_opt->count()
              ? affiet::iet::family_member(parse_rational(dump_t, "--t"))
              : affiet::surface::first_return_direction(parse_slope(dump_slope));
      std::cout << map.table();
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
