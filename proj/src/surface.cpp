#include "surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace affiet::surface {

Model standard() { return Model{Rational(Int(1), Int(6)), iet::base_map()}; }

Rational drift(const ProjPoint& slope) {
  if (slope.is_infinity())
    throw std::domain_error("drift: horizontal direction never crosses the strip");
  return (slope.slope() * standard().height).mod1();
}

iet::Aiet first_return_direction(const ProjPoint& slope) {
  Rational t = drift(slope);
  iet::Aiet glue = standard().gluing;
  std::vector<Rational> cuts{Rational(0)};
  for (const iet::Branch& b : glue.branches) cuts.push_back((b.lo - t).mod1());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  iet::Aiet out{Rational(0), Rational(1), {}};
  for (size_t i = 0; i < cuts.size(); ++i) {
    Rational u = cuts[i];
    Rational v = i + 1 < cuts.size() ? cuts[i + 1] : Rational(1);
    Rational mid = (u + v) / Rational(2);
    Rational shifted = mid + t;
    Rational w = shifted >= Rational(1) ? Rational(1) : Rational(0);
    size_t bi = glue.branch_index(shifted - w);
    const iet::Branch& b = glue.branches[bi];
    out.branches.push_back(
        {u, v, b.slope, b.slope * (t - w) + b.intercept, 1});
  }
  out.validate();
  return out;
}

LeafTrace trace_leaf(const Rational& x0, const ProjPoint& slope,
                     long long max_crossings) {
  if (x0 < Rational(0) || x0 >= Rational(1))
    throw std::domain_error("trace_leaf: start point outside the bottom edge");
  Rational t = drift(slope);
  iet::Aiet glue = standard().gluing;
  LeafTrace out;
  Rational x = x0;
  Rational deriv(1);
  for (long long k = 1; k <= max_crossings; ++k) {
    Rational hit = (x + t).mod1();
    bool singular = false;
    for (const iet::Branch& b : glue.branches)
      if (hit == b.lo) singular = true;
    if (singular) {
      out.singular_hit = k;
      break;
    }
    auto [y, bi] = glue.eval(hit);
    deriv = deriv * glue.branches[bi].slope;
    x = y;
    out.crossings.push_back({x, k, bi, deriv});
    if (x == x0) {
      out.closed = true;
      out.closed_at = k;
      break;
    }
  }
  out.holonomy = deriv;
  return out;
}

std::string leaf_csv(const LeafTrace& trace) {
  std::ostringstream os;
  os << "step,x_num,x_den,level,deriv_num,deriv_den\n";
  for (size_t i = 0; i < trace.crossings.size(); ++i) {
    const FlowCrossing& c = trace.crossings[i];
    os << i + 1 << ',' << c.position.num() << ',' << c.position.den() << ','
       << c.level << ',' << c.derivative.num() << ',' << c.derivative.den()
       << '\n';
  }
  return os.str();
}

namespace {

// period, forward multiplier and branch itinerary read off by one exact
// loop through the cycle, starting from its smallest point
Cylinder canonical_cylinder(const iet::Aiet& map, const Rational& cycle_point,
                            long long period) {
  std::vector<Rational> cycle;
  Rational x = cycle_point;
  for (long long i = 0; i < period; ++i) {
    cycle.push_back(x);
    x = map.eval(x).first;
  }
  if (!(x == cycle_point))
    throw std::logic_error("canonical_cylinder: point is not on a cycle");
  Rational rep = *std::min_element(cycle.begin(), cycle.end());
  Cylinder cyl{Rational(1), rep, period, ""};
  x = rep;
  for (long long i = 0; i < period; ++i) {
    auto [y, bi] = map.eval(x);
    cyl.multiplier = cyl.multiplier * map.branches[bi].slope;
    if (i > 0) cyl.itinerary += ',';
    cyl.itinerary += std::to_string(bi);
    x = y;
  }
  return cyl;
}

}  // namespace

std::vector<Cylinder> find_cylinders(const ProjPoint& slope,
                                     long long sample_count,
                                     long long detect_cap) {
  if (sample_count < 1)
    throw std::domain_error("find_cylinders: need at least one sample");
  if (slope.is_infinity()) {
    // horizontal leaves never cross the glued edge; one closed family
    return {Cylinder{Rational(1), Rational(0), 1, ""}};
  }
  iet::Aiet fwd = first_return_direction(slope);
  std::vector<iet::Branch> bwd;
  for (const iet::Branch& b : fwd.branches)
    bwd.push_back({b.image_lo(), b.image_hi(), Rational(1) / b.slope,
                   -b.intercept / b.slope, 1});
  std::sort(bwd.begin(), bwd.end(),
            [](const iet::Branch& a, const iet::Branch& b) { return a.lo < b.lo; });

  std::map<std::tuple<long long, std::string, std::string>, Cylinder> found;
  auto record = [&](const iet::PeriodicOrbit& po) {
    Cylinder cyl = canonical_cylinder(fwd, po.point, po.period);
    auto key = std::make_tuple(cyl.period, cyl.multiplier.str(), cyl.itinerary);
    auto it = found.find(key);
    if (it == found.end())
      found.emplace(key, cyl);
    else if (cyl.representative < it->second.representative)
      it->second.representative = cyl.representative;
  };
  for (long long j = 0; j < sample_count; ++j) {
    Rational x(Int(2 * j + 1), Int(2 * sample_count));
    if (auto po = iet::detect_periodic_branches(fwd.branches, x, detect_cap))
      record(*po);
    if (auto po = iet::detect_periodic_branches(bwd, x, detect_cap))
      record(*po);
  }
  std::vector<Cylinder> out;
  for (const auto& [key, cyl] : found) out.push_back(cyl);
  std::sort(out.begin(), out.end(), [](const Cylinder& a, const Cylinder& b) {
    return a.representative < b.representative;
  });
  return out;
}

std::vector<long long> vertex_angle_check() {
  iet::Aiet glue = standard().gluing;
  size_t n = glue.branches.size();
  std::vector<Rational> tops, bottoms;
  for (const iet::Branch& b : glue.branches) tops.push_back(b.lo);
  for (const iet::Branch& b : glue.branches) bottoms.push_back(b.image_lo());
  std::sort(bottoms.begin(), bottoms.end());
  auto wrap = [](const Rational& x) { return x == Rational(1) ? Rational(0) : x; };
  auto index_in = [](const std::vector<Rational>& v, const Rational& x) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] == x) return i;
    throw std::logic_error("vertex_angle_check: corner not on the cut list");
  };
  // union-find over 2n corners: tops are 0..n-1, bottoms n..2n-1
  std::vector<size_t> parent(2 * n);
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> root = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](size_t a, size_t b) { parent[root(a)] = root(b); };
  for (const iet::Branch& b : glue.branches) {
    unite(index_in(tops, b.lo), n + index_in(bottoms, wrap(b.image_lo())));
    unite(index_in(tops, wrap(b.hi)), n + index_in(bottoms, wrap(b.image_hi())));
  }
  std::map<size_t, long long> corners_per_class;
  for (size_t i = 0; i < parent.size(); ++i) corners_per_class[root(i)] += 1;
  std::vector<long long> angles;
  for (const auto& [cls, count] : corners_per_class) angles.push_back(count);
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace affiet::surface
