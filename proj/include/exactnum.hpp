#ifndef AFFIET_EXACTNUM_HPP
#define AFFIET_EXACTNUM_HPP

// Exact rational arithmetic, 2x2 rational matrices and points of the
// projective line in slope coordinates. Everything here is exact; doubles
// appear only through explicit conversion.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace affiet {

using Int = boost::multiprecision::cpp_int;

// Reduced fraction num/den with den > 0 and gcd(|num|, den) == 1.
// Canonical form is restored after every operation, so == is structural.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(const Int& n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    reduce();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    r.check();
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const {
    Int l = num_ * o.den_;
    Int r = o.num_ * den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Largest integer <= value.
  Int floor_int() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }
  // Value reduced into [0, 1).
  Rational mod1() const { return *this - Rational(floor_int()); }

  double to_double() const;

  // Renders "num/den", or just "num" for integers.
  std::string str() const;
  // Accepts "p/q" or "p" with optional leading minus; returns nothing on
  // malformed input or zero denominator.
  static std::optional<Rational> parse(const std::string& text);

  // Invariant check; active in debug builds.
  void check() const {
    assert(den_ > 0);
    assert(boost::multiprecision::gcd(num_, den_) == 1);
  }

private:
  Int num_, den_;

  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    check();
  }
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// 2^e for any integer e (possibly negative).
Rational pow2(long long e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Row-major 2x2 rational matrix [[a, b], [c, d]].
struct Mat2 {
  Rational a, b, c, d;

  static Mat2 identity() { return Mat2{1, 0, 0, 1}; }

  Rational det() const { return a * d - b * c; }
  Rational trace() const { return a + d; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mat2 inverse() const {
    Rational dt = det();
    if (dt.is_zero()) throw std::domain_error("Mat2: singular matrix");
    return Mat2{d / dt, -b / dt, -c / dt, a / dt};
  }
  Mat2 scaled(const Rational& s) const { return Mat2{a * s, b * s, c * s, d * s}; }

  bool operator==(const Mat2& o) const = default;
  std::string str() const;
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) { return x * y; }

// Point of the projective line: a finite slope or the point at infinity.
class ProjPoint {
public:
  ProjPoint() : inf_(false), slope_(0) {}
  ProjPoint(const Rational& s) : inf_(false), slope_(s) {}
  ProjPoint(long long s) : inf_(false), slope_(s) {}
  static ProjPoint infinity() {
    ProjPoint p;
    p.inf_ = true;
    return p;
  }

  bool is_infinity() const { return inf_; }
  const Rational& slope() const {
    if (inf_) throw std::domain_error("ProjPoint: infinite point has no slope");
    return slope_;
  }

  bool operator==(const ProjPoint& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || slope_ == o.slope_;
  }

  std::string str() const { return inf_ ? "inf" : slope_.str(); }
  // Accepts whatever Rational::parse accepts, plus "inf".
  static std::optional<ProjPoint> parse(const std::string& text);

private:
  bool inf_;
  Rational slope_;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

// Projective action [x : y] -> [a x + b y : c x + d y] in slope coords
// p = x / y. Poles map to infinity; infinity maps to a/c (or stays put
// when c == 0).
ProjPoint mat_act(const Mat2& m, const ProjPoint& p);

enum class MatrixClass { Identity, Elliptic, Parabolic, Hyperbolic };

const char* to_string(MatrixClass c);

// Conjugacy type of a positive-determinant matrix acting projectively.
// Scalar multiples of the identity (including -Id) act trivially and
// classify as Identity; otherwise the sign of trace^2 - 4 det decides.
// Throws std::domain_error when det <= 0.
MatrixClass classify_matrix(const Mat2& m);

}  // namespace affiet

#endif
