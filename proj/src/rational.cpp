#include "satogr/rational.hpp"

#include <cctype>

#include "satogr/error.hpp"

namespace satogr {

Rational::Rational(long n, long d) {
  if (d == 0) fail(ErrorKind::ZeroInput, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

namespace {

bool all_digits(const std::string& s, size_t from) {
  if (from >= s.size()) return false;
  for (size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  std::string n = s.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
  size_t start = (!n.empty() && (n[0] == '-' || n[0] == '+')) ? 1 : 0;
  if (!all_digits(n, start) || !all_digits(d, 0))
    fail(ErrorKind::ParseError, "malformed rational \"" + s + "\"");
  mpz_class nz(n[0] == '+' ? n.substr(1) : n, 10);
  mpz_class dz(d, 10);
  if (dz == 0) fail(ErrorKind::ParseError, "zero denominator in \"" + s + "\"");
  return Rational(mpq_class(nz, dz));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroInput, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::ZeroInput, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(int e) const {
  Rational base = e < 0 ? inverse() : *this;
  Rational r(1);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

}  // namespace satogr
