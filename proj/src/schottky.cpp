#include "schottky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace affiet::schottky {

Generators generators() {
  return Generators{
      Mat2{1, 6, 0, 1},
      Mat2{1, 0, Rational(Int(3), Int(2)), 1},
      Mat2{-1, 0, 0, -1},
  };
}

Mat2 gen_power(Gen g, long long e) {
  Rational re(e);
  if (g == Gen::A) return Mat2{1, Rational(6) * re, 0, 1};
  return Mat2{1, 0, Rational(Int(3), Int(2)) * re, 1};
}

void GroupWord::push_left(Gen g, long long e) {
  if (e == 0) return;
  matrix = gen_power(g, e) * matrix;
  if (!runs.empty() && runs.front().first == g) {
    runs.front().second += e;
    if (runs.front().second == 0) runs.erase(runs.begin());
    return;
  }
  runs.insert(runs.begin(), {g, e});
}

void GroupWord::push_right(Gen g, long long e) {
  if (e == 0) return;
  matrix = matrix * gen_power(g, e);
  if (!runs.empty() && runs.back().first == g) {
    runs.back().second += e;
    if (runs.back().second == 0) runs.pop_back();
    return;
  }
  runs.push_back({g, e});
}

long long GroupWord::length() const {
  long long n = 0;
  for (const auto& [g, e] : runs) n += e < 0 ? -e : e;
  return n;
}

bool GroupWord::freely_reduced() const {
  for (size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].second == 0) return false;
    if (i + 1 < runs.size() && runs[i].first == runs[i + 1].first) return false;
  }
  return true;
}

std::string GroupWord::str() const {
  if (runs.empty()) return "1";
  std::string s;
  for (const auto& [g, e] : runs) {
    if (!s.empty()) s += ' ';
    s += g == Gen::A ? 'A' : 'B';
    if (e != 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s;
}

namespace {

long long to_exponent(const Int& k) {
  if (k > std::numeric_limits<long long>::max() ||
      k < std::numeric_limits<long long>::min())
    throw std::overflow_error("reduce_to_fundamental: generator power too large");
  return k.convert_to<long long>();
}

}  // namespace

ReductionResult reduce_to_fundamental(const ProjPoint& p, long long depth_cap) {
  ReductionResult res;
  res.point = p;
  for (long long used = 0; used < depth_cap; ++used) {
    if (res.point.is_infinity() || res.point == ProjPoint(Rational(0))) {
      res.status = ReduceStatus::Cusp;
      return res;
    }
    Rational q = res.point.slope();
    if (Rational(1) <= q && q <= Rational(4)) {
      res.status = ReduceStatus::Reduced;
      return res;
    }
    if (q <= Rational(-2) || q > Rational(4)) {
      // slide by 6 until the slope lands in (-2, 4]
      Int k = ((Rational(4) - q) / Rational(6)).floor_int();
      res.point = ProjPoint(q + Rational(6) * Rational(k));
      res.word.push_left(Gen::A, to_exponent(k));
    } else {
      // slope in (-2, 1) minus 0: slide the reciprocal by 3/2 into (-1/2, 1]
      Rational u = Rational(1) / q;
      Int k = ((Rational(1) - u) / Rational(Int(3), Int(2))).floor_int();
      Rational u2 = u + Rational(Int(3), Int(2)) * Rational(k);
      res.point = u2.is_zero() ? ProjPoint::infinity() : ProjPoint(Rational(1) / u2);
      res.word.push_left(Gen::B, to_exponent(k));
    }
  }
  res.status = ReduceStatus::DepthCapReached;
  return res;
}

bool Arc::contains(const ProjPoint& p) const {
  bool lo_inf = lo.is_infinity(), hi_inf = hi.is_infinity();
  if (p.is_infinity()) return lo_inf || hi_inf;
  if (lo_inf && hi_inf) return true;
  if (lo_inf) return p.slope() <= hi.slope();
  if (hi_inf) return p.slope() >= lo.slope();
  return lo.slope() <= p.slope() && p.slope() <= hi.slope();
}

bool Arc::subset_of(const Arc& outer) const {
  if (lo.is_infinity() || hi.is_infinity()) {
    // an unbounded arc fits only in an unbounded arc on the same side
    if (lo.is_infinity())
      return outer.lo.is_infinity() && outer.contains(hi);
    return outer.hi.is_infinity() && outer.contains(lo);
  }
  if (outer.lo.is_infinity() || outer.hi.is_infinity())
    return outer.contains(lo) && outer.contains(hi);
  // both arcs are bounded intervals of slopes
  return outer.lo.slope() <= lo.slope() && hi.slope() <= outer.hi.slope();
}

double Arc::angle_length() const {
  const double half_pi = std::acos(0.0);
  if (lo.is_infinity()) return std::atan(hi.slope().to_double()) + half_pi;
  if (hi.is_infinity()) return half_pi - std::atan(lo.slope().to_double());
  return std::atan(hi.slope().to_double()) - std::atan(lo.slope().to_double());
}

namespace {

struct Letter {
  Gen g;
  int e;  // +1 or -1
};

const Letter kLetters[4] = {
    {Gen::A, 1}, {Gen::A, -1}, {Gen::B, 1}, {Gen::B, -1}};

bool cancels(const Letter& x, const Letter& y) {
  return x.g == y.g && x.e == -y.e;
}

Arc letter_window(const Letter& l) {
  if (l.g == Gen::A)
    return l.e > 0 ? Arc{ProjPoint(Rational(3)), ProjPoint::infinity()}
                   : Arc{ProjPoint::infinity(), ProjPoint(Rational(-3))};
  return l.e > 0 ? Arc{ProjPoint(Rational(0)), ProjPoint(Rational(2))}
                 : Arc{ProjPoint(Rational(-1)), ProjPoint(Rational(0))};
}

ProjPoint arc_sample(const Arc& a) {
  if (a.lo.is_infinity()) return ProjPoint(a.hi.slope() - Rational(1));
  if (a.hi.is_infinity()) return ProjPoint(a.lo.slope() + Rational(1));
  return ProjPoint((a.lo.slope() + a.hi.slope()) / Rational(2));
}

Arc arc_image(const Mat2& m, const Arc& a) {
  ProjPoint e1 = mat_act(m, a.lo);
  ProjPoint e2 = mat_act(m, a.hi);
  ProjPoint mid = mat_act(m, arc_sample(a));
  if (!e1.is_infinity() && !e2.is_infinity()) {
    Arc out = e1.slope() <= e2.slope() ? Arc{e1, e2} : Arc{e2, e1};
    if (!out.contains(mid))
      throw std::logic_error("arc_image: image wraps through infinity");
    return out;
  }
  if (e1.is_infinity() && e2.is_infinity())
    throw std::logic_error("arc_image: degenerate arc");
  ProjPoint fin = e1.is_infinity() ? e2 : e1;
  if (mid.is_infinity())
    throw std::logic_error("arc_image: sample at infinity");
  if (mid.slope() >= fin.slope()) return Arc{fin, ProjPoint::infinity()};
  return Arc{ProjPoint::infinity(), fin};
}

void enumerate_arcs(const Mat2& prefix, int prev, long long left,
                    std::vector<Arc>& out) {
  for (int i = 0; i < 4; ++i) {
    if (prev >= 0 && cancels(kLetters[prev], kLetters[i])) continue;
    if (left == 1) {
      out.push_back(arc_image(prefix, letter_window(kLetters[i])));
    } else {
      enumerate_arcs(prefix * gen_power(kLetters[i].g, kLetters[i].e), i,
                     left - 1, out);
    }
  }
}

}  // namespace

std::vector<Arc> limit_set_approx(long long depth) {
  if (depth < 1) throw std::domain_error("limit_set_approx: depth must be >= 1");
  std::vector<Arc> out;
  enumerate_arcs(Mat2::identity(), -1, depth, out);
  return out;
}

double total_angle_length(const std::vector<Arc>& arcs) {
  double t = 0;
  for (const Arc& a : arcs) t += a.angle_length();
  return t;
}

namespace {

std::string endpoint_csv(const ProjPoint& p) {
  if (p.is_infinity()) return "1,0";
  return p.slope().num().str() + "," + p.slope().den().str();
}

}  // namespace

std::string limit_set_csv(long long depth) {
  std::ostringstream os;
  os << "depth,lo_num,lo_den,hi_num,hi_den\n";
  for (long long d = 1; d <= depth; ++d)
    for (const Arc& a : limit_set_approx(d))
      os << d << ',' << endpoint_csv(a.lo) << ',' << endpoint_csv(a.hi) << '\n';
  return os.str();
}

int cmp_quad_root(const Rational& a2, const Rational& a1, const Rational& a0,
                  int which, const Rational& q) {
  if (a2.is_zero()) throw std::domain_error("cmp_quad_root: not a quadratic");
  Rational disc = a1 * a1 - Rational(4) * a2 * a0;
  if (disc.sign() <= 0)
    throw std::domain_error("cmp_quad_root: needs two distinct real roots");
  // sign of (-a1 + which*sqrt(disc))/(2 a2) - q, decided without radicals
  Rational s = a1 + Rational(2) * a2 * q;
  int num_sign;
  if (which > 0)
    num_sign = s.sign() <= 0 ? 1 : (disc - s * s).sign();
  else
    num_sign = s.sign() >= 0 ? -1 : (s * s - disc).sign();
  return num_sign * a2.sign();
}

bool arc_contains_fixed_point(const Arc& arc, const Mat2& m, int which) {
  if (classify_matrix(m) != MatrixClass::Hyperbolic)
    throw std::domain_error("arc_contains_fixed_point: matrix not hyperbolic");
  if (m.c.is_zero()) {
    // fixed slopes are infinity and b/(d-a)
    ProjPoint fin(m.b / (m.d - m.a));
    return arc.contains(which > 0 ? ProjPoint::infinity() : fin);
  }
  Rational a2 = m.c, a1 = m.d - m.a, a0 = -m.b;
  if (!arc.lo.is_infinity() &&
      cmp_quad_root(a2, a1, a0, which, arc.lo.slope()) < 0)
    return false;
  if (!arc.hi.is_infinity() &&
      cmp_quad_root(a2, a1, a0, which, arc.hi.slope()) > 0)
    return false;
  return true;
}

MatrixClass TwistRep::classify() const {
  Rational disc = trace() * trace() - Rational(4) * det();
  if (disc.sign() < 0) return MatrixClass::Elliptic;
  if (disc.sign() == 0) return MatrixClass::Parabolic;
  return MatrixClass::Hyperbolic;
}

std::string TwistRep::str() const {
  std::string root = "sqrt(" + mu.str() + ")";
  if (upper) return "[[1, " + root + "], [0, 1]]";
  return "[[1, 0], [-" + root + ", 1]]";
}

ThurstonData thurston_mu(const std::vector<std::vector<long long>>& N) {
  size_t rows = N.size();
  if (rows == 0) throw std::domain_error("thurston_mu: empty matrix");
  size_t cols = N[0].size();
  if (cols == 0) throw std::domain_error("thurston_mu: empty matrix");
  for (const auto& row : N) {
    if (row.size() != cols) throw std::domain_error("thurston_mu: ragged matrix");
    for (long long v : row)
      if (v < 0) throw std::domain_error("thurston_mu: negative entry");
  }
  // symmetrized block matrix on the smaller side
  size_t dim = std::min(rows, cols);
  bool use_rows = rows <= cols;
  std::vector<std::vector<Int>> G(dim, std::vector<Int>(dim, 0));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      Int acc = 0;
      size_t inner = use_rows ? cols : rows;
      for (size_t k = 0; k < inner; ++k) {
        Int x = use_rows ? Int(N[i][k]) : Int(N[k][i]);
        Int y = use_rows ? Int(N[j][k]) : Int(N[k][j]);
        acc += x * y;
      }
      G[i][j] = acc;
    }
  // primitivity: some power of the support pattern must be all positive
  {
    std::vector<std::vector<bool>> p(dim, std::vector<bool>(dim)), q;
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) p[i][j] = G[i][j] > 0;
    q = p;
    bool primitive = false;
    for (size_t it = 0; it < dim * dim + 1 && !primitive; ++it) {
      primitive = true;
      for (size_t i = 0; i < dim && primitive; ++i)
        for (size_t j = 0; j < dim && primitive; ++j)
          if (!q[i][j]) primitive = false;
      if (primitive) break;
      std::vector<std::vector<bool>> nq(dim, std::vector<bool>(dim, false));
      for (size_t i = 0; i < dim; ++i)
        for (size_t k = 0; k < dim; ++k)
          if (q[i][k])
            for (size_t j = 0; j < dim; ++j)
              if (p[k][j]) nq[i][j] = true;
      q = std::move(nq);
    }
    if (!primitive)
      throw std::domain_error("thurston_mu: block configuration is reducible");
  }
  Rational mu;
  if (dim == 1) {
    mu = Rational(G[0][0]);
  } else if (dim == 2) {
    Int tr = G[0][0] + G[1][1];
    Int dt = G[0][0] * G[1][1] - G[0][1] * G[1][0];
    Int disc = tr * tr - 4 * dt;
    Int root = boost::multiprecision::sqrt(disc);
    if (root * root != disc)
      throw std::domain_error("thurston_mu: leading eigenvalue is irrational");
    mu = Rational(tr + root, Int(2));
  } else {
    throw std::domain_error("thurston_mu: blocks larger than 2x2 unsupported");
  }
  return ThurstonData{mu, TwistRep{mu, true}, TwistRep{mu, false}};
}

bool CheckReport::all_ok() const {
  for (const CheckItem& it : items)
    if (!it.ok) return false;
  return true;
}

std::string CheckReport::str() const {
  std::string s;
  for (const CheckItem& it : items) {
    s += it.ok ? "ok   " : "FAIL ";
    s += it.name;
    s += '\n';
  }
  return s;
}

CheckReport veech_checks() {
  Generators g = generators();
  CheckReport rep;
  auto add = [&](const std::string& name, bool ok) {
    rep.items.push_back({name, ok});
  };
  add("horizontal twist matrix carries modulus slot 6",
      g.A == Mat2{1, 6, 0, 1});
  add("vertical twist matrix carries modulus slot 3/2",
      g.B == Mat2{1, 0, Rational(Int(3), Int(2)), 1});
  add("horizontal twist is parabolic",
      classify_matrix(g.A) == MatrixClass::Parabolic);
  add("vertical twist is parabolic",
      classify_matrix(g.B) == MatrixClass::Parabolic);
  add("-Id is present and acts trivially",
      g.minus_id == Mat2{-1, 0, 0, -1} &&
          classify_matrix(g.minus_id) == MatrixClass::Identity);
  Mat2 ab = g.A * g.B.inverse();
  add("A B^-1 equals [[-8, 6], [-3/2, 1]]",
      ab == Mat2{-8, 6, Rational(Int(-3), Int(2)), 1});
  add("A B^-1 is hyperbolic", classify_matrix(ab) == MatrixClass::Hyperbolic);
  add("A maps -3 to 3",
      mat_act(g.A, ProjPoint(Rational(-3))) == ProjPoint(Rational(3)));
  add("B maps -1 to 2",
      mat_act(g.B, ProjPoint(Rational(-1))) == ProjPoint(Rational(2)));
  add("A B^-1 maps 1 to 4",
      mat_act(ab, ProjPoint(Rational(1))) == ProjPoint(Rational(4)));
  add("generators are unimodular",
      g.A.det() == Rational(1) && g.B.det() == Rational(1) &&
          g.minus_id.det() == Rational(1));
  return rep;
}

}  // namespace affiet::schottky
