#ifndef AFFIET_RAUZY_HPP
#define AFFIET_RAUZY_HPP

// Renormalization scheme for the two-branch contracting maps produced by
// aiet::two_branch_map. A state carries the branch exponents (m, n), the
// exact branch lengths, the letter history and the accumulated length
// matrix. Each step either induces on the left piece (R), on the right
// piece (L), stops in the attracting window, or hits a saddle transition
// where a branch length degenerates exactly.

#include "aiet.hpp"
#include "exactnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affiet::rauzy {

struct InductionState {
  long long m = 1, n = 1;
  Rational lambda_A, lambda_B;
  std::string word;           // letters applied so far, oldest first
  Mat2 M = Mat2::identity();  // maps the initial lengths to the current ones
};

InductionState initial_state(const Rational& s);

// Length transformation of one right induction at exponents (m, n).
Mat2 right_matrix(long long m, long long n);
// Same for one left induction.
Mat2 left_matrix(long long m, long long n);

enum class StepKind { Left, Right, Stop, Saddle };

struct StepResult {
  StepKind kind;
  InductionState next;  // advanced for Left/Right, unchanged otherwise
};

// Decides the step at the current state. Exactly one of the four kinds
// applies: Right when lambda_B < 2^-n lambda_A, Left when
// lambda_A < 2^-m lambda_B, Saddle when either comparison is an exact tie,
// Stop otherwise. Throws std::domain_error on nonpositive lengths.
StepResult step(const InductionState& st);

struct InductionOutcome {
  enum class Tag { Stopped, Saddle, CapExceeded };
  Tag tag;
  std::string word;
  long long final_m = 0, final_n = 0;
  std::optional<Rational> multiplier;  // 2^-(m+n), present iff Stopped
  InductionState final_state;
};

// Iterates step() from initial_state(s) for at most max_steps letters.
InductionOutcome run(const Rational& s, long long max_steps);

struct WordData {
  Mat2 M;
  long long m = 1, n = 1;
};

// Replays a word over {L, R} from the initial exponents, accumulating the
// length matrix by left multiplication. Throws on other letters.
WordData word_matrix(const std::string& w);

struct Interval {
  Rational lo, hi;
  Rational length() const { return hi - lo; }
};

// Parameter interval of s-values whose induction begins with the word w.
Interval interval_of_word(const std::string& w);

// Closed subinterval of interval_of_word(w) on which the induction stops
// right after w.
Interval stop_window(const std::string& w);

// Aspect ratio (a-b)/(d-c) of the word matrix. Throws std::logic_error
// if it leaves [1/2, 2].
Rational ratio_bound_check(const std::string& w);

// Exact total length of the stop windows over all words of length <= k.
Rational coverage_measure(long long k);

// Depth-limited complement construction for a parameter whose induction
// exceeds the cap: removes the forward images of the length-1/2 image gap
// from [0, 1) and returns the surviving intervals, sorted.
// Requires run(s, depth) to report CapExceeded.
std::vector<Interval> cantor_attractor_approx(const Rational& s, long long depth);

}  // namespace affiet::rauzy

#endif
