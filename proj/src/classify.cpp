#include "classify.hpp"

#include "aiet.hpp"

#include <json.hpp>

namespace affiet::classify {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CompletelyPeriodic:
      return "CompletelyPeriodic";
    case Verdict::TrivialAttractor:
      return "TrivialAttractor";
    case Verdict::SaddleConnection:
      return "SaddleConnection";
    case Verdict::CantorAttractor:
      return "CantorAttractor";
    case Verdict::LimitSetDirection:
      return "LimitSetDirection";
  }
  throw std::logic_error("to_string: unknown verdict");
}

Rational stable_band_parameter(const Rational& q) {
  if (!(Rational(2) < q && q < Rational(4)))
    throw std::domain_error("stable_band_parameter: slope outside (2, 4)");
  return Rational(2) - q / Rational(2);
}

namespace {

// forward orbit probe from a generic seed; reports the attractor's cycle
// data when the detector converges within its budget
std::optional<iet::PeriodicOrbit> probe(const ProjPoint& slope) {
  if (slope.is_infinity()) return std::nullopt;
  Rational t = (slope.slope() / Rational(6)).mod1();
  return iet::detect_periodic(iet::family_member(t),
                              Rational(Int(417), Int(991)), 2048);
}

bool constant_tail(const std::string& word, size_t len) {
  if (word.size() < len) return false;
  char last = word.back();
  for (size_t i = word.size() - len; i < word.size(); ++i)
    if (word[i] != last) return false;
  return true;
}

}  // namespace

Classification classify_direction(const ProjPoint& slope, Caps caps) {
  Classification out;
  out.caps = caps;
  out.reduction = schottky::reduce_to_fundamental(slope, caps.reduce_depth);
  if (out.reduction.status == schottky::ReduceStatus::Cusp) {
    out.tag = Verdict::CompletelyPeriodic;
    // Every leaf closes up with derivative 1, whether or not the probe can
    // reach this direction (the horizontal one has no return map to probe).
    out.multiplier = Rational(1);
    if (auto po = probe(slope)) out.period = po->period;
    return out;
  }
  if (out.reduction.status == schottky::ReduceStatus::DepthCapReached) {
    out.tag = Verdict::LimitSetDirection;
    out.comment = "conjecturally minimal";
    return out;
  }
  Rational q = out.reduction.point.slope();
  if (q == Rational(1) || q == Rational(2) || q == Rational(4)) {
    out.tag = Verdict::SaddleConnection;
    return out;
  }
  if (q < Rational(2)) {
    // the whole band (1, 2) carries one attracting leaf of derivative 1/2
    out.tag = Verdict::TrivialAttractor;
    out.multiplier = Rational(Int(1), Int(2));
    if (auto po = probe(slope)) out.period = po->period;
    return out;
  }
  rauzy::InductionOutcome io =
      rauzy::run(stable_band_parameter(q), caps.induction_steps);
  out.induction_word = io.word;
  switch (io.tag) {
    case rauzy::InductionOutcome::Tag::Stopped:
      out.tag = Verdict::TrivialAttractor;
      out.multiplier = io.multiplier;
      if (auto po = probe(slope)) out.period = po->period;
      break;
    case rauzy::InductionOutcome::Tag::Saddle:
      out.tag = Verdict::SaddleConnection;
      break;
    case rauzy::InductionOutcome::Tag::CapExceeded:
      out.tag = Verdict::CantorAttractor;
      if (constant_tail(io.word, 16))
        out.comment = "induction tail constant; possible boundary case";
      break;
  }
  return out;
}

Classification classify_parameter_t(const Rational& t, Caps caps) {
  return classify_direction(ProjPoint(Rational(6) * t.mod1()), caps);
}

std::string to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["tag"] = to_string(c.tag);
  j["reduction_word"] = c.reduction.word.str();
  if (c.induction_word)
    j["induction_word"] = *c.induction_word;
  else
    j["induction_word"] = nullptr;
  if (c.multiplier)
    j["multiplier"] = c.multiplier->str();
  else
    j["multiplier"] = nullptr;
  if (c.period)
    j["period"] = *c.period;
  else
    j["period"] = nullptr;
  j["caps"] = {{"reduce_depth", c.caps.reduce_depth},
               {"induction_steps", c.caps.induction_steps}};
  if (!c.comment.empty()) j["comment"] = c.comment;
  return j.dump(2);
}

}  // namespace affiet::classify
