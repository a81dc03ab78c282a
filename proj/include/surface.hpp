#ifndef AFFIET_SURFACE_HPP
#define AFFIET_SURFACE_HPP

// Geometry of the suspension: the strip [0,1) x [0, 1/6) with verticals
// identified mod 1 and the top edge glued to the bottom through the base
// interval map. Straight-line flows are parametrized by the horizontal
// displacement per unit of height ("slope"); slope 0 is the vertical
// flow, the horizontal flow sits at slope infinity.

#include "aiet.hpp"
#include "exactnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affiet::surface {

struct Model {
  Rational height;   // strip height
  iet::Aiet gluing;  // top edge -> bottom edge
};

Model standard();

// Horizontal shift picked up by one crossing of the strip: slope times
// height, mod 1. Throws std::domain_error for the horizontal direction.
Rational drift(const ProjPoint& slope);

// First-return map of the slope-direction flow to the bottom edge, built
// by cutting the edge at the pulled-back gluing breakpoints. Agrees with
// rotating first and then applying the gluing, but is assembled from the
// geometry directly.
iet::Aiet first_return_direction(const ProjPoint& slope);

struct FlowCrossing {
  Rational position;    // landing point on the bottom edge
  long long level;      // how many times the strip has been crossed
  size_t branch;        // gluing branch used at the top edge
  Rational derivative;  // accumulated expansion along the leaf
};

struct LeafTrace {
  std::vector<FlowCrossing> crossings;
  std::optional<long long> singular_hit;  // 1-based crossing that died on a vertex
  bool closed = false;
  long long closed_at = 0;  // crossings until the leaf first closed up
  Rational holonomy = Rational(1);  // derivative when it closed, else last value
};

// Follows the leaf of the slope-direction flow from (x0, 0) for at most
// max_crossings strip crossings. Stops early when the leaf runs into a
// cone point or closes up.
LeafTrace trace_leaf(const Rational& x0, const ProjPoint& slope,
                     long long max_crossings);

// step,x_num,x_den,level,deriv_num,deriv_den per crossing
std::string leaf_csv(const LeafTrace& trace);

// Maximal family of parallel closed leaves (multiplier 1) or an isolated
// closed leaf with nontrivial linear holonomy.
struct Cylinder {
  Rational multiplier;      // holonomy derivative once around
  Rational representative;  // smallest cycle point found
  long long period;         // strip crossings per loop
  std::string itinerary;    // gluing branches once around, comma separated
};

// Closed leaves of the slope-direction flow, found by running the
// periodic-orbit detector forward and backward from sample_count seed
// points. Cylinders are merged by period, multiplier and itinerary and
// sorted by representative.
std::vector<Cylinder> find_cylinders(const ProjPoint& slope,
                                     long long sample_count,
                                     long long detect_cap = 512);

// Cone angles at the glued-up vertices, as multiples of pi, sorted.
// Corners live at the gluing breakpoints on both edges; the gluing
// identifies each top corner with the matching bottom corners.
std::vector<long long> vertex_angle_check();

}  // namespace affiet::surface

#endif
