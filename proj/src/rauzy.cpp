#include "rauzy.hpp"

#include <algorithm>

namespace affiet::rauzy {

InductionState initial_state(const Rational& s) {
  if (s.sign() <= 0 || s >= Rational(1))
    throw std::domain_error("initial_state: parameter must lie in (0, 1)");
  InductionState st;
  st.lambda_A = s;
  st.lambda_B = Rational(1) - s;
  return st;
}

Mat2 right_matrix(long long m, long long n) {
  (void)m;
  Rational p = pow2(n);
  return Mat2{Rational(1), -p, Rational(0), p};
}

Mat2 left_matrix(long long m, long long n) {
  (void)n;
  Rational p = pow2(m);
  return Mat2{p, Rational(0), -p, Rational(1)};
}

namespace {

InductionState advance(const InductionState& st, char letter) {
  InductionState nx = st;
  Mat2 step_m = letter == 'R' ? right_matrix(st.m, st.n) : left_matrix(st.m, st.n);
  nx.lambda_A = step_m.a * st.lambda_A + step_m.b * st.lambda_B;
  nx.lambda_B = step_m.c * st.lambda_A + step_m.d * st.lambda_B;
  nx.M = step_m * st.M;
  nx.word.push_back(letter);
  if (letter == 'R')
    nx.m = st.m + st.n;
  else
    nx.n = st.n + st.m;
  return nx;
}

}  // namespace

StepResult step(const InductionState& st) {
  if (st.lambda_A.sign() <= 0 || st.lambda_B.sign() <= 0)
    throw std::domain_error("step: branch lengths must be positive");
  Rational thr_r = pow2(-st.n) * st.lambda_A;  // right fires below this
  Rational thr_l = pow2(-st.m) * st.lambda_B;  // left fires below this
  if (st.lambda_B == thr_r || st.lambda_A == thr_l)
    return {StepKind::Saddle, st};
  if (st.lambda_B < thr_r) return {StepKind::Right, advance(st, 'R')};
  if (st.lambda_A < thr_l) return {StepKind::Left, advance(st, 'L')};
  return {StepKind::Stop, st};
}

InductionOutcome run(const Rational& s, long long max_steps) {
  InductionState st = initial_state(s);
  InductionOutcome out;
  for (long long i = 0; i < max_steps; ++i) {
    StepResult r = step(st);
    switch (r.kind) {
      case StepKind::Right:
      case StepKind::Left:
        st = std::move(r.next);
        continue;
      case StepKind::Stop:
        out.tag = InductionOutcome::Tag::Stopped;
        out.multiplier = pow2(-(st.m + st.n));
        break;
      case StepKind::Saddle:
        out.tag = InductionOutcome::Tag::Saddle;
        break;
    }
    out.word = st.word;
    out.final_m = st.m;
    out.final_n = st.n;
    out.final_state = st;
    return out;
  }
  out.tag = InductionOutcome::Tag::CapExceeded;
  out.word = st.word;
  out.final_m = st.m;
  out.final_n = st.n;
  out.final_state = st;
  return out;
}

WordData word_matrix(const std::string& w) {
  WordData d;
  d.M = Mat2::identity();
  for (char c : w) {
    if (c == 'R') {
      d.M = right_matrix(d.m, d.n) * d.M;
      d.m += d.n;
    } else if (c == 'L') {
      d.M = left_matrix(d.m, d.n) * d.M;
      d.n += d.m;
    } else {
      throw std::domain_error("word_matrix: letters must be L or R");
    }
  }
  return d;
}

namespace {

struct WindowData {
  Interval outer;  // parameters starting with the word
  Interval inner;  // parameters stopping right after it
  Rational ratio;  // (a-b)/(d-c)
};

WindowData windows_from(const Mat2& M, long long m, long long n) {
  Rational ab = M.a - M.b;
  Rational dc = M.d - M.c;
  // both stay positive along admissible words; guard for stray inputs
  if (ab.sign() <= 0 || dc.sign() <= 0)
    throw std::logic_error("windows_from: degenerate word matrix");
  WindowData w;
  w.outer = Interval{-M.b / ab, M.d / dc};
  Rational det = M.det();
  Rational alpha = det / dc;  // peak of the left length over the interval
  Rational beta = det / ab;   // peak of the right length
  Rational h1 = beta / (pow2(m) * alpha + beta);
  Rational h2 = pow2(n) * beta / (alpha + pow2(n) * beta);
  Rational len = w.outer.length();
  w.inner = Interval{w.outer.lo + len * h1, w.outer.lo + len * h2};
  w.ratio = ab / dc;
  return w;
}

}  // namespace

Interval interval_of_word(const std::string& w) {
  WordData d = word_matrix(w);
  return windows_from(d.M, d.m, d.n).outer;
}

Interval stop_window(const std::string& w) {
  WordData d = word_matrix(w);
  return windows_from(d.M, d.m, d.n).inner;
}

Rational ratio_bound_check(const std::string& w) {
  WordData d = word_matrix(w);
  Rational x = windows_from(d.M, d.m, d.n).ratio;
  if (x < Rational(Int(1), Int(2)) || x > Rational(2))
    throw std::logic_error("ratio_bound_check: aspect ratio left [1/2, 2]");
  return x;
}

Rational coverage_measure(long long k) {
  if (k < 0) throw std::domain_error("coverage_measure: negative depth");
  // walk the binary word tree, summing exact stop-window lengths
  struct Node {
    Mat2 M;
    long long m, n, depth;
  };
  std::vector<Node> stack{{Mat2::identity(), 1, 1, 0}};
  Rational total = 0;
  while (!stack.empty()) {
    Node nd = stack.back();
    stack.pop_back();
    total += windows_from(nd.M, nd.m, nd.n).inner.length();
    if (nd.depth == k) continue;
    stack.push_back({right_matrix(nd.m, nd.n) * nd.M, nd.m + nd.n, nd.n, nd.depth + 1});
    stack.push_back({left_matrix(nd.m, nd.n) * nd.M, nd.m, nd.n + nd.m, nd.depth + 1});
  }
  return total;
}

std::vector<Interval> cantor_attractor_approx(const Rational& s, long long depth) {
  if (depth < 0) throw std::domain_error("cantor_attractor_approx: negative depth");
  if (run(s, depth).tag != InductionOutcome::Tag::CapExceeded)
    throw std::domain_error(
        "cantor_attractor_approx: induction settles within the given depth");
  iet::Aiet t = iet::two_branch_map(1, 1, s, Rational(1) - s);
  // the gap between the two branch images
  Interval gap{t.branches[1].image_hi(), t.branches[0].image_lo()};
  std::vector<Interval> frontier{gap};
  std::vector<Interval> removed{gap};
  for (long long d = 0; d < depth; ++d) {
    std::vector<Interval> next;
    for (const Interval& piece : frontier) {
      // split at branch boundaries, then push each part through its branch
      std::vector<Rational> cuts{piece.lo};
      for (const iet::Branch& b : t.branches)
        if (piece.lo < b.lo && b.lo < piece.hi) cuts.push_back(b.lo);
      cuts.push_back(piece.hi);
      std::sort(cuts.begin(), cuts.end());
      for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        size_t bi = t.eval(cuts[i]).second;
        const iet::Branch& b = t.branches[bi];
        next.push_back(Interval{b.apply(cuts[i]), b.apply(cuts[i + 1])});
      }
    }
    frontier = std::move(next);
    removed.insert(removed.end(), frontier.begin(), frontier.end());
  }
  std::sort(removed.begin(), removed.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> survivors;
  Rational cursor = 0;
  for (const Interval& r : removed) {
    if (cursor < r.lo) survivors.push_back(Interval{cursor, r.lo});
    if (cursor < r.hi) cursor = r.hi;
  }
  if (cursor < Rational(1)) survivors.push_back(Interval{cursor, Rational(1)});
  return survivors;
}

}  // namespace affiet::rauzy
