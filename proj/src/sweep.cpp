#include "sweep.hpp"

#include "aiet.hpp"

#include <cstdio>
#include <random>
#include <sstream>

namespace affiet::cli {

std::vector<SweepRow> sweep_rows(const SweepConfig& cfg) {
  if (cfg.steps < 1) throw std::domain_error("sweep: need at least one step");
  if (cfg.samples < 1) throw std::domain_error("sweep: need at least one sample");
  if (cfg.burn_in < 0) throw std::domain_error("sweep: negative burn in");
  if (cfg.t_max < cfg.t_min) throw std::domain_error("sweep: empty range");
  std::vector<SweepRow> rows;
  rows.reserve(cfg.steps);
  for (long long i = 0; i < cfg.steps; ++i) {
    Rational t = cfg.steps == 1
                     ? cfg.t_min
                     : cfg.t_min + (cfg.t_max - cfg.t_min) *
                                       Rational(Int(i), Int(cfg.steps - 1));
    std::mt19937_64 rng(cfg.seed + static_cast<unsigned long long>(i));
    double x0 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    rows.push_back({t, iet::omega_limit_estimate(iet::family_member(t), x0,
                                                 cfg.burn_in, cfg.samples)});
  }
  return rows;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "t,x\n";
  for (const SweepRow& row : rows) {
    std::string t = row.t.str();
    for (double x : row.xs) os << t << ',' << format_double(x) << '\n';
  }
  return os.str();
}

std::string sweep_svg(const std::vector<SweepRow>& rows) {
  const double width = 800, height = 600, margin = 40;
  double t_lo = 0, t_hi = 1;
  if (!rows.empty()) {
    t_lo = rows.front().t.to_double();
    t_hi = rows.back().t.to_double();
  }
  double span = t_hi - t_lo;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  for (const SweepRow& row : rows) {
    double tx = span > 0 ? (row.t.to_double() - t_lo) / span : 0.5;
    double cx = margin + tx * (width - 2 * margin);
    for (double x : row.xs) {
      double cy = height - margin - x * (height - 2 * margin);
      os << "<circle cx=\"" << format_double(cx) << "\" cy=\""
         << format_double(cy)
         << "\" r=\"0.6\" fill=\"black\" fill-opacity=\"0.35\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace affiet::cli
