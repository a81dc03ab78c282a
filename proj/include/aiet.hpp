#ifndef AFFIET_AIET_HPP
#define AFFIET_AIET_HPP

// Affine interval exchange maps on a half-open interval: finitely many
// branches x -> slope * x + intercept with positive slopes, branch domains
// partitioning the domain and branch images pairwise disjoint.

#include "exactnum.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace affiet::iet {

struct Branch {
  Rational lo, hi;         // domain piece [lo, hi)
  Rational slope;          // > 0
  Rational intercept;
  long long return_time = 1;  // base-map iterations this branch represents

  Rational apply(const Rational& x) const { return slope * x + intercept; }
  Rational image_lo() const { return apply(lo); }
  Rational image_hi() const { return apply(hi); }

  bool same_map(const Branch& o) const {
    return lo == o.lo && hi == o.hi && slope == o.slope && intercept == o.intercept;
  }
};

struct Aiet {
  Rational dom_lo, dom_hi;
  std::vector<Branch> branches;  // sorted by lo

  // Exact image together with the branch index taken.
  // Throws std::domain_error when x is outside [dom_lo, dom_hi).
  std::pair<Rational, size_t> eval(const Rational& x) const;
  size_t branch_index(const Rational& x) const;

  Rational total_image_length() const;

  // Branch domains partition the domain, slopes are positive, images are
  // pairwise disjoint. Throws std::logic_error on violation.
  void validate() const;

  bool same_map(const Aiet& o) const;

  // One line per branch: "x_lo x_hi slope intercept", exact rationals.
  std::string table() const;
};

// The base 4-branch involution on [0, 1). Swaps [0,1/6) with [1/6,1/2) and
// [1/2,5/6) with [5/6,1); composing it with itself gives the identity.
Aiet base_map();

// Rotation x -> x + t (mod 1) on [0, 1) as a one- or two-branch map.
Aiet rotation(const Rational& t);

// Composition outer(inner(x)) on inner's domain. Requires the image of
// inner to lie inside outer's domain; adjacent pieces that end up carrying
// the same affine map are merged back together.
Aiet compose(const Aiet& outer, const Aiet& inner);

// Member of the rotated family: base_map after rotation by t (t taken
// mod 1). Has at most 5 branches; t == 0 reproduces base_map exactly.
Aiet family_member(const Rational& t);

// Two-branch map on [0, lambda_A + lambda_B): left piece [0, lambda_A)
// contracts by 2^-n into the top of the interval, right piece contracts
// by 2^-m onto the bottom. Lengths must be positive.
Aiet two_branch_map(long long m, long long n, const Rational& lambda_A,
                    const Rational& lambda_B);

// First-return map of `a` to [lo, hi). Every point must return within
// `cap` iterations, else std::domain_error. Branch return_time fields
// carry the per-branch return times and slopes the derivative products.
Aiet first_return(const Aiet& a, const Rational& lo, const Rational& hi,
                  long long cap = 4096);

struct OrbitRecord {
  std::vector<Rational> points;   // x0, a(x0), ..., a^k(x0)
  Rational derivative_product;    // product of branch slopes along the way
};

OrbitRecord orbit(const Aiet& a, const Rational& x0, long long steps);

struct PeriodicOrbit {
  long long period;      // primitive
  Rational multiplier;   // product of slopes once around the cycle
  Rational point;        // one exact cycle member
};

// Finds an exact periodic orbit that the forward orbit of x0 lands on or
// converges to, spending at most max_iter map evaluations. Detects both
// exact revisits and attracting cycles reached in the limit (via the
// branch itinerary turning periodic). Returns nothing if the budget runs
// out first.
std::optional<PeriodicOrbit> detect_periodic(const Aiet& a, const Rational& x0,
                                             long long max_iter);

// Same detector on a bare branch list (sorted by lo, need not cover an
// interval). Orbits that leave the covered set just end the search.
std::optional<PeriodicOrbit> detect_periodic_branches(
    const std::vector<Branch>& branches, const Rational& x0, long long max_iter);

// Floating-point orbit sampler: iterate burn_in times, then record
// `samples` further points. Returns them sorted.
std::vector<double> omega_limit_estimate(const Aiet& a, double x0,
                                         long long burn_in, long long samples);

}  // namespace affiet::iet

#endif
