#ifndef AFFIET_CLASSIFY_HPP
#define AFFIET_CLASSIFY_HPP

// End-to-end verdict for a flow direction: reduce the slope into the
// fundamental window, read off the band it lands in, and when the band
// calls for it run the two-branch induction to separate settling,
// saddle and never-settling behaviour.

#include "exactnum.hpp"
#include "rauzy.hpp"
#include "schottky.hpp"

#include <optional>
#include <string>

namespace affiet::classify {

enum class Verdict {
  CompletelyPeriodic,   // cusp direction, every leaf closes up
  TrivialAttractor,     // leaves settle onto finitely many closed leaves
  SaddleConnection,     // a leaf joins cone points
  CantorAttractor,      // induction never settles within the cap
  LimitSetDirection,    // reduction never reached the window
};

std::string to_string(Verdict v);

struct Caps {
  long long reduce_depth = 64;
  long long induction_steps = 64;
};

struct Classification {
  Verdict tag;
  schottky::ReductionResult reduction;
  std::optional<std::string> induction_word;
  std::optional<Rational> multiplier;  // attractor derivative once around
  std::optional<long long> period;     // from a probe orbit, when found
  Caps caps;
  std::string comment;
};

// Parameter of the two-branch window a reduced slope q in (2, 4) maps
// to: 2 - q/2. Throws outside that band.
Rational stable_band_parameter(const Rational& q);

Classification classify_direction(const ProjPoint& slope, Caps caps = {});

// Same verdict for the family parameter t, through the slope 6t (mod 1).
Classification classify_parameter_t(const Rational& t, Caps caps = {});

// One JSON object: tag, reduction_word, induction_word, multiplier,
// period, caps; comment only when nonempty.
std::string to_json(const Classification& c);

}  // namespace affiet::classify

#endif
