#include "exactnum.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <sstream>

namespace affiet {

double Rational::to_double() const {
  // Direct conversion overflows for very long operands, so rescale both
  // sides by a common power of two first; the ratio is preserved up to
  // the final rounding.
  const Int& n = num_;
  const Int& d = den_;
  auto bits = [](const Int& v) -> long {
    if (v == 0) return 0;
    return static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(v)));
  };
  long top = std::max(bits(n), bits(d));
  if (top <= 900) return n.convert_to<double>() / d.convert_to<double>();
  long shift = top - 512;
  Int ns = n >> shift;
  Int ds = d >> shift;
  if (ds == 0) return n < 0 ? -HUGE_VAL : HUGE_VAL;
  return ns.convert_to<double>() / ds.convert_to<double>();
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::optional<Rational> Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return std::nullopt;
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rational(Int(s));
    }
    std::string a = s.substr(0, slash);
    std::string b = s.substr(slash + 1);
    if (!is_int(a) || !is_int(b)) return std::nullopt;
    Int den(b);
    if (den == 0) return std::nullopt;
    return Rational(Int(a), den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Rational pow2(long long e) {
  if (e > 10000000 || e < -10000000)
    throw std::domain_error("pow2: exponent out of supported range");
  if (e >= 0) return Rational(Int(1) << static_cast<unsigned>(e));
  return Rational(Int(1), Int(1) << static_cast<unsigned>(-e));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
  return os.str();
}

std::optional<ProjPoint> ProjPoint::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "inf") return ProjPoint::infinity();
  auto r = Rational::parse(s);
  if (!r) return std::nullopt;
  return ProjPoint(*r);
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
  return os << p.str();
}

ProjPoint mat_act(const Mat2& m, const ProjPoint& p) {
  if (p.is_infinity()) {
    if (m.c.is_zero()) return ProjPoint::infinity();
    return ProjPoint(m.a / m.c);
  }
  const Rational& x = p.slope();
  Rational denom = m.c * x + m.d;
  if (denom.is_zero()) return ProjPoint::infinity();
  return ProjPoint((m.a * x + m.b) / denom);
}

const char* to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::Identity: return "Identity";
    case MatrixClass::Elliptic: return "Elliptic";
    case MatrixClass::Parabolic: return "Parabolic";
    case MatrixClass::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

MatrixClass classify_matrix(const Mat2& m) {
  Rational dt = m.det();
  if (dt.sign() <= 0)
    throw std::domain_error("classify_matrix: determinant must be positive");
  if (m.b.is_zero() && m.c.is_zero() && m.a == m.d) return MatrixClass::Identity;
  Rational disc = m.trace() * m.trace() - Rational(4) * dt;
  int s = disc.sign();
  if (s < 0) return MatrixClass::Elliptic;
  if (s == 0) return MatrixClass::Parabolic;
  return MatrixClass::Hyperbolic;
}

}  // namespace affiet
