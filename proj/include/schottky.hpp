#ifndef AFFIET_SCHOTTKY_HPP
#define AFFIET_SCHOTTKY_HPP

// The projective action of the group generated by the two parabolic
// twists A = [[1,6],[0,1]] and B = [[1,0],[3/2,1]] (plus -Id). Points are
// driven into the fundamental interval [1, 4] by alternating generator
// powers; the complementary dynamics is captured by a shrinking family of
// arcs around the limit set.

#include "exactnum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace affiet::schottky {

struct Generators {
  Mat2 A;         // adds 6 to the slope
  Mat2 B;         // adds 3/2 to the reciprocal slope
  Mat2 minus_id;  // acts trivially
};

Generators generators();

enum class Gen { A, B };

// A^e or B^e in closed form (both generators are parabolic, so powers
// stay linear in e).
Mat2 gen_power(Gen g, long long e);

// Freely reduced group word. Stored as alternating runs of generator
// powers, letters left to right; `matrix` is the product in that order.
struct GroupWord {
  std::vector<std::pair<Gen, long long>> runs;  // exponents nonzero
  Mat2 matrix = Mat2::identity();

  // word := g^e * word, merging with the leading run when possible
  void push_left(Gen g, long long e);
  // word := word * g^e
  void push_right(Gen g, long long e);

  long long length() const;  // total letter count, sum of |exponent|
  bool freely_reduced() const;
  bool empty() const { return runs.empty(); }
  std::string str() const;  // "A^2 B^-1"; the empty word prints as "1"
};

enum class ReduceStatus { Reduced, Cusp, DepthCapReached };

struct ReductionResult {
  ReduceStatus status;
  ProjPoint point;  // where the input was driven
  GroupWord word;   // word.matrix applied to the input gives point
};

// Greedy macro reduction: while the point is outside [1, 4], apply the
// unique power of A (resp. B) that lands it back in the reference window
// for the other generator. Macros alternate generators, so the recorded
// word is freely reduced; each macro counts once against depth_cap.
// Landing exactly on 0 or infinity reports Cusp.
ReductionResult reduce_to_fundamental(const ProjPoint& p, long long depth_cap = 64);

// Closed arc of the projective line. Either both endpoints are finite
// with lo <= hi, or exactly one endpoint is the point at infinity:
// [lo, inf] covers slopes >= lo, [inf, hi] covers slopes <= hi. Arcs
// never contain infinity in their interior.
struct Arc {
  ProjPoint lo, hi;

  bool contains(const ProjPoint& p) const;
  bool subset_of(const Arc& outer) const;
  // length in the angular metric arctan(slope)
  double angle_length() const;
};

// The 4 * 3^(depth-1) arcs of generation `depth` around the limit set:
// images of the four generator windows under all freely reduced words of
// length depth - 1 that do not cancel into the window.
std::vector<Arc> limit_set_approx(long long depth);

double total_angle_length(const std::vector<Arc>& arcs);

// depth,lo_num,lo_den,hi_num,hi_den per arc, for every generation from 1
// up to depth; the infinite endpoint prints as numerator 1, denominator 0.
std::string limit_set_csv(long long depth);

// Sign of (r - q) where r is a root of a2 x^2 + a1 x + a0, picked by
// which = +1 (plus branch) or -1. Requires a2 != 0 and positive
// discriminant; everything is decided exactly.
int cmp_quad_root(const Rational& a2, const Rational& a1, const Rational& a0,
                  int which, const Rational& q);

// Whether the chosen fixed point of a hyperbolic matrix lies on the arc.
// Fixed slopes solve c p^2 + (d - a) p - b = 0.
bool arc_contains_fixed_point(const Arc& arc, const Mat2& m, int which);

// Exact Perron data of a nonnegative integer block matrix N: the leading
// eigenvalue mu of N N^t (or N^t N, whichever is smaller), which must be
// rational, plus the two parabolic twist representatives built from
// sqrt(mu). Throws std::domain_error for reducible or imprimitive
// configurations, irrational eigenvalues, or blocks larger than 2x2.
struct TwistRep {
  Rational mu;
  bool upper;  // [[1, sqrt(mu)], [0, 1]] if true, [[1, 0], [-sqrt(mu), 1]] if false

  Rational trace() const { return Rational(2); }
  Rational det() const { return Rational(1); }
  MatrixClass classify() const;
  std::string str() const;
};

struct ThurstonData {
  Rational mu;
  TwistRep horizontal, vertical;
};

ThurstonData thurston_mu(const std::vector<std::vector<long long>>& N);

// Named pass/fail facts about the generator pair: moduli slots, parabolic
// types, the hyperbolic combination, window endpoint images.
struct CheckItem {
  std::string name;
  bool ok;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_ok() const;
  std::string str() const;  // one line per item
};

CheckReport veech_checks();

}  // namespace affiet::schottky

#endif
