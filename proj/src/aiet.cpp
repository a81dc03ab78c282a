#include "aiet.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace affiet::iet {

namespace {

size_t find_branch(const std::vector<Branch>& branches, const Rational& x) {
  // branches sorted by lo; pick the last one with lo <= x
  size_t lo = 0, hi = branches.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (branches[mid].lo <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::optional<std::pair<Rational, size_t>> eval_branches(
    const std::vector<Branch>& branches, const Rational& x) {
  if (branches.empty()) return std::nullopt;
  size_t i = find_branch(branches, x);
  if (x < branches[i].lo || x >= branches[i].hi) return std::nullopt;
  return std::make_pair(branches[i].apply(x), i);
}

}  // namespace

std::pair<Rational, size_t> Aiet::eval(const Rational& x) const {
  if (x < dom_lo || x >= dom_hi)
    throw std::domain_error("Aiet::eval: point outside domain");
  auto r = eval_branches(branches, x);
  if (!r) throw std::logic_error("Aiet::eval: branch lookup failed");
  return *r;
}

size_t Aiet::branch_index(const Rational& x) const {
  return eval(x).second;
}

Rational Aiet::total_image_length() const {
  Rational total = 0;
  for (const Branch& b : branches) total += b.image_hi() - b.image_lo();
  return total;
}

void Aiet::validate() const {
  if (branches.empty()) throw std::logic_error("Aiet: no branches");
  if (branches.front().lo != dom_lo || branches.back().hi != dom_hi)
    throw std::logic_error("Aiet: branches do not span the domain");
  for (size_t i = 0; i < branches.size(); ++i) {
    const Branch& b = branches[i];
    if (b.slope.sign() <= 0) throw std::logic_error("Aiet: nonpositive slope");
    if (!(b.lo < b.hi)) throw std::logic_error("Aiet: empty branch");
    if (i + 1 < branches.size() && b.hi != branches[i + 1].lo)
      throw std::logic_error("Aiet: branch gap or overlap");
  }
  // image disjointness: sort image intervals and look at neighbours
  std::vector<std::pair<Rational, Rational>> imgs;
  imgs.reserve(branches.size());
  for (const Branch& b : branches) imgs.emplace_back(b.image_lo(), b.image_hi());
  std::sort(imgs.begin(), imgs.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  for (size_t i = 0; i + 1 < imgs.size(); ++i)
    if (imgs[i + 1].first < imgs[i].second)
      throw std::logic_error("Aiet: branch images overlap");
}

bool Aiet::same_map(const Aiet& o) const {
  if (dom_lo != o.dom_lo || dom_hi != o.dom_hi) return false;
  if (branches.size() != o.branches.size()) return false;
  for (size_t i = 0; i < branches.size(); ++i)
    if (!branches[i].same_map(o.branches[i])) return false;
  return true;
}

std::string Aiet::table() const {
  std::ostringstream os;
  for (const Branch& b : branches)
    os << b.lo << ' ' << b.hi << ' ' << b.slope << ' ' << b.intercept << '\n';
  return os.str();
}

Aiet base_map() {
  Aiet a;
  a.dom_lo = 0;
  a.dom_hi = 1;
  Rational r16(Int(1), Int(6)), r12(Int(1), Int(2)), r56(Int(5), Int(6));
  a.branches = {
      {Rational(0), r16, Rational(2), r16, 1},
      {r16, r12, r12, Rational(Int(-1), Int(12)), 1},
      {r12, r56, r12, Rational(Int(7), Int(12)), 1},
      {r56, Rational(1), Rational(2), Rational(Int(-7), Int(6)), 1},
  };
  a.validate();
  return a;
}

Aiet rotation(const Rational& t) {
  Rational tm = t.mod1();
  Aiet a;
  a.dom_lo = 0;
  a.dom_hi = 1;
  if (tm.is_zero()) {
    a.branches = {{Rational(0), Rational(1), Rational(1), Rational(0), 1}};
  } else {
    Rational cut = Rational(1) - tm;
    a.branches = {
        {Rational(0), cut, Rational(1), tm, 1},
        {cut, Rational(1), Rational(1), tm - Rational(1), 1},
    };
  }
  a.validate();
  return a;
}

Aiet compose(const Aiet& outer, const Aiet& inner) {
  std::vector<Branch> out;
  for (const Branch& ib : inner.branches) {
    if (ib.image_lo() < outer.dom_lo || ib.image_hi() > outer.dom_hi)
      throw std::domain_error("compose: inner image leaves outer domain");
    // pull outer's breakpoints back through the inner branch
    std::vector<Rational> cuts{ib.lo};
    for (const Branch& ob : outer.branches) {
      Rational pre = (ob.lo - ib.intercept) / ib.slope;
      if (ib.lo < pre && pre < ib.hi) cuts.push_back(pre);
    }
    cuts.push_back(ib.hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
      auto [y, oi] = outer.eval(ib.apply(mid));
      (void)y;
      const Branch& ob = outer.branches[oi];
      out.push_back({cuts[i], cuts[i + 1], ib.slope * ob.slope,
                     ob.slope * ib.intercept + ob.intercept,
                     ib.return_time + ob.return_time});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Branch& p, const Branch& q) { return p.lo < q.lo; });
  // merge neighbours that carry the same affine map (cuts that turned out
  // to be spurious)
  std::vector<Branch> merged;
  for (const Branch& b : out) {
    if (!merged.empty() && merged.back().hi == b.lo &&
        merged.back().slope == b.slope && merged.back().intercept == b.intercept)
      merged.back().hi = b.hi;
    else
      merged.push_back(b);
  }
  Aiet r;
  r.dom_lo = inner.dom_lo;
  r.dom_hi = inner.dom_hi;
  r.branches = std::move(merged);
  r.validate();
  return r;
}

Aiet family_member(const Rational& t) {
  Aiet a = compose(base_map(), rotation(t));
  // one application of the rotated map counts as a single step
  for (Branch& b : a.branches) b.return_time = 1;
  return a;
}

Aiet two_branch_map(long long m, long long n, const Rational& lambda_A,
                    const Rational& lambda_B) {
  if (lambda_A.sign() <= 0 || lambda_B.sign() <= 0)
    throw std::domain_error("two_branch_map: lengths must be positive");
  Rational total = lambda_A + lambda_B;
  Rational sa = pow2(-n), sb = pow2(-m);
  Aiet a;
  a.dom_lo = 0;
  a.dom_hi = total;
  a.branches = {
      {Rational(0), lambda_A, sa, total - sa * lambda_A, 1},
      {lambda_A, total, sb, -sb * lambda_A, 1},
  };
  a.validate();
  return a;
}

Aiet first_return(const Aiet& a, const Rational& lo, const Rational& hi,
                  long long cap) {
  if (!(a.dom_lo <= lo && lo < hi && hi <= a.dom_hi))
    throw std::domain_error("first_return: window not inside domain");
  struct Piece {
    Rational lo, hi;     // subinterval of [lo, hi)
    Rational slope, c;   // composed map so far
    long long time;
  };
  std::deque<Piece> work;
  // seed with one application of the map
  {
    std::vector<Rational> cuts{lo};
    for (const Branch& b : a.branches)
      if (lo < b.lo && b.lo < hi) cuts.push_back(b.lo);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
      size_t bi = find_branch(a.branches, mid);
      const Branch& b = a.branches[bi];
      work.push_back({cuts[i], cuts[i + 1], b.slope, b.intercept, 1});
    }
  }
  std::vector<Branch> out;
  size_t expansions = 0;
  while (!work.empty()) {
    Piece p = work.front();
    work.pop_front();
    if (++expansions > 2000000)
      throw std::domain_error("first_return: piece budget exceeded");
    Rational ilo = p.slope * p.lo + p.c;
    Rational ihi = p.slope * p.hi + p.c;
    if (lo <= ilo && ihi <= hi) {
      out.push_back({p.lo, p.hi, p.slope, p.c, p.time});
      continue;
    }
    if (ihi <= lo || hi <= ilo) {
      // entirely outside the window: continue iterating
      if (p.time >= cap)
        throw std::domain_error("first_return: return-time cap exceeded");
      std::vector<Rational> cuts{p.lo};
      for (const Branch& b : a.branches) {
        Rational pre = (b.lo - p.c) / p.slope;
        if (p.lo < pre && pre < p.hi) cuts.push_back(pre);
      }
      cuts.push_back(p.hi);
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
        size_t bi = find_branch(a.branches, p.slope * mid + p.c);
        const Branch& b = a.branches[bi];
        work.push_back({cuts[i], cuts[i + 1], b.slope * p.slope,
                        b.slope * p.c + b.intercept, p.time + 1});
      }
      continue;
    }
    // straddles a window edge: split at the exact preimages
    std::vector<Rational> cuts{p.lo};
    for (const Rational& edge : {lo, hi}) {
      Rational pre = (edge - p.c) / p.slope;
      if (p.lo < pre && pre < p.hi) cuts.push_back(pre);
    }
    cuts.push_back(p.hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
      work.push_back({cuts[i], cuts[i + 1], p.slope, p.c, p.time});
  }
  std::sort(out.begin(), out.end(),
            [](const Branch& p, const Branch& q) { return p.lo < q.lo; });
  Aiet r;
  r.dom_lo = lo;
  r.dom_hi = hi;
  r.branches = std::move(out);
  r.validate();
  return r;
}

OrbitRecord orbit(const Aiet& a, const Rational& x0, long long steps) {
  OrbitRecord rec;
  rec.derivative_product = 1;
  rec.points.reserve(static_cast<size_t>(steps) + 1);
  rec.points.push_back(x0);
  Rational x = x0;
  for (long long i = 0; i < steps; ++i) {
    auto [nx, bi] = a.eval(x);
    rec.derivative_product *= a.branches[bi].slope;
    rec.points.push_back(nx);
    x = nx;
  }
  return rec;
}

namespace {

long long double_key(const Rational& x) {
  double d = x.to_double();
  long long k;
  static_assert(sizeof(k) == sizeof(d));
  std::memcpy(&k, &d, sizeof(k));
  return k;
}

// smallest p with s[i] == s[i + p] for the whole window, by the classic
// prefix-function identity
size_t smallest_period(const std::vector<size_t>& s, size_t from) {
  size_t n = s.size() - from;
  if (n == 0) return 0;
  std::vector<size_t> pi(n, 0);
  for (size_t i = 1; i < n; ++i) {
    size_t k = pi[i - 1];
    while (k > 0 && s[from + i] != s[from + k]) k = pi[k - 1];
    if (s[from + i] == s[from + k]) ++k;
    pi[i] = k;
  }
  return n - pi[n - 1];
}

// Walk forward from a candidate fixed point of the composed window map and
// report the primitive cycle through it, if the orbit really closes up.
std::optional<PeriodicOrbit> confirm_cycle(const std::vector<Branch>& branches,
                                           const Rational& start,
                                           size_t max_period) {
  Rational x = start;
  Rational mult = 1;
  for (size_t d = 1; d <= max_period; ++d) {
    auto step = eval_branches(branches, x);
    if (!step) return std::nullopt;
    mult *= branches[step->second].slope;
    x = step->first;
    if (x == start)
      return PeriodicOrbit{static_cast<long long>(d), mult, start};
  }
  return std::nullopt;
}

}  // namespace

std::optional<PeriodicOrbit> detect_periodic_branches(
    const std::vector<Branch>& branches, const Rational& x0, long long max_iter) {
  std::vector<Rational> xs;
  std::vector<size_t> itinerary;
  std::vector<Rational> slopes;
  std::unordered_map<long long, std::vector<size_t>> buckets;
  Rational x = x0;
  long long next_scan = 64;
  for (long long k = 0; k <= max_iter; ++k) {
    // detector 1: exact revisit of an earlier point
    auto& bucket = buckets[double_key(x)];
    for (size_t j : bucket) {
      if (xs[j] == x) {
        Rational mult = 1;
        for (size_t i = j; i < xs.size(); ++i) mult *= slopes[i];
        return PeriodicOrbit{static_cast<long long>(xs.size() - j), mult, x};
      }
    }
    bucket.push_back(xs.size());
    xs.push_back(x);
    if (k == max_iter) break;
    auto step = eval_branches(branches, x);
    if (!step) return std::nullopt;  // orbit left the covered set
    itinerary.push_back(step->second);
    slopes.push_back(branches[step->second].slope);
    x = step->first;
    // detector 2: the branch itinerary has turned periodic; if the map
    // composed over one period contracts, chase its fixed point
    long long len = static_cast<long long>(itinerary.size());
    if (len == next_scan || k + 1 == max_iter) {
      if (len == next_scan) next_scan *= 2;
      size_t from = static_cast<size_t>(len / 2);
      size_t p = smallest_period(itinerary, from);
      if (p > 0 && p <= static_cast<size_t>(len) - from - p) {
        Rational sigma = 1, c = 0;
        for (size_t i = itinerary.size() - p; i < itinerary.size(); ++i) {
          const Branch& b = branches[itinerary[i]];
          sigma *= b.slope;
          c = b.slope * c + b.intercept;
        }
        if (sigma < Rational(1)) {
          Rational fixed = c / (Rational(1) - sigma);
          auto cyc = confirm_cycle(branches, fixed, p);
          if (cyc) return cyc;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PeriodicOrbit> detect_periodic(const Aiet& a, const Rational& x0,
                                             long long max_iter) {
  if (x0 < a.dom_lo || x0 >= a.dom_hi)
    throw std::domain_error("detect_periodic: point outside domain");
  return detect_periodic_branches(a.branches, x0, max_iter);
}

std::vector<double> omega_limit_estimate(const Aiet& a, double x0,
                                         long long burn_in, long long samples) {
  struct DBranch {
    double lo, hi, slope, intercept;
  };
  std::vector<DBranch> bs;
  bs.reserve(a.branches.size());
  for (const Branch& b : a.branches)
    bs.push_back({b.lo.to_double(), b.hi.to_double(), b.slope.to_double(),
                  b.intercept.to_double()});
  double dlo = a.dom_lo.to_double();
  double dhi = a.dom_hi.to_double();
  double top = std::nextafter(dhi, dlo);
  auto clamp = [&](double v) { return std::min(std::max(v, dlo), top); };
  auto step = [&](double v) {
    size_t lo = 0, hi = bs.size();
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      if (bs[mid].lo <= v)
        lo = mid;
      else
        hi = mid;
    }
    return clamp(bs[lo].slope * v + bs[lo].intercept);
  };
  double x = clamp(x0);
  for (long long i = 0; i < burn_in; ++i) x = step(x);
  std::vector<double> out;
  out.reserve(static_cast<size_t>(samples));
  for (long long i = 0; i < samples; ++i) {
    out.push_back(x);
    x = step(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affiet::iet
