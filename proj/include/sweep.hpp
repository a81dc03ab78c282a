#ifndef AFFIET_SWEEP_HPP
#define AFFIET_SWEEP_HPP

// Deterministic parameter sweep: sample long orbits of family members
// over a grid of drift parameters and export the visited points as CSV
// or a standalone SVG scatter plot.

#include "exactnum.hpp"

#include <string>
#include <vector>

namespace affiet::cli {

struct SweepConfig {
  Rational t_min = Rational(Int(11), Int(100));
  Rational t_max = Rational(Int(13), Int(100));
  long long steps = 200;      // grid points, endpoints included
  long long burn_in = 10000;  // iterations discarded before recording
  long long samples = 1000;   // points recorded per grid value
  unsigned long long seed = 1;
};

struct SweepRow {
  Rational t;
  std::vector<double> xs;  // sorted visited points
};

// One row per grid point. The start point of each orbit is drawn from a
// generator seeded with seed + grid index, so rows never depend on each
// other and reruns reproduce the output bit for bit.
std::vector<SweepRow> sweep_rows(const SweepConfig& cfg);

// "t,x" header; exact t, shortest round-trip double for x
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Self-contained scatter plot, 800 by 600
std::string sweep_svg(const std::vector<SweepRow>& rows);

}  // namespace affiet::cli

#endif
