#include "satogr/series.hpp"

#include <sstream>

namespace satogr {

Series constant_part(const PolySeries& s) {
  std::map<int, Rational> c;
  for (auto& [e, x] : s.coeffs()) c.emplace(e, x.constant_term());
  return Series(c, s.trunc());
}

SubstitutionMap::SubstitutionMap(const Series& image) : image_(image) {
  auto v = image.valuation();
  if (!v || *v != 1) fail(ErrorKind::NotNormalizable, "substitution image must have valuation 1");
}

SubstitutionMap SubstitutionMap::sigma0() { return SubstitutionMap(Series::monomial(1, Rational(-1))); }
SubstitutionMap SubstitutionMap::identity() { return SubstitutionMap(Series::monomial(1, Rational(1))); }

bool SubstitutionMap::is_linear() const { return image_.is_exact() && image_.coeffs().size() == 1; }

SubstitutionMap SubstitutionMap::after(const SubstitutionMap& t, int want) const {
  return SubstitutionMap(substitute(image_, t, want));
}

Series invert(const Series& f, std::optional<int> want) {
  if (f.is_zero()) {
    if (f.is_exact()) fail(ErrorKind::ZeroInput, "inverse of zero series");
    fail(ErrorKind::InsufficientPrecision, "no known nonzero coefficient below trunc " + std::to_string(f.trunc()));
  }
  int v = *f.valuation();
  if (f.is_exact() && f.coeffs().size() == 1) return Series::monomial(-v, f.coeff(v).inverse());
  int achievable = f.is_exact() ? kExactTrunc : f.trunc() - 2 * v;
  int target;
  if (want) {
    if (*want > achievable) fail(ErrorKind::InsufficientPrecision, "inverse known only below z^" + std::to_string(achievable));
    target = *want;
  } else {
    target = std::min(achievable, kDefaultWindow);
  }
  if (target <= -v) fail(ErrorKind::InsufficientPrecision, "inverse window is empty");
  int n = target + v;
  std::vector<Rational> a(n, Rational(0)), b(n, Rational(0));
  for (auto& [e, x] : f.coeffs())
    if (e - v < n) a[e - v] = x;
  Rational a0inv = a[0].inverse();
  b[0] = a0inv;
  for (int k = 1; k < n; ++k) {
    Rational s(0);
    for (int i = 1; i <= k; ++i)
      if (!a[i].is_zero()) s += a[i] * b[k - i];
    b[k] = -(s * a0inv);
  }
  std::map<int, Rational> out;
  for (int k = 0; k < n; ++k) out.emplace(k - v, b[k]);
  return Series(out, target);
}

std::string series_str(const Series& s) {
  std::ostringstream os;
  bool first = true;
  for (auto& [e, x] : s.coeffs()) {
    if (!first) os << " + ";
    first = false;
    os << x.str() << "*z^" << e;
  }
  if (first) os << "0";
  if (!s.is_exact()) os << " + O(z^" << s.trunc() << ")";
  return os.str();
}

}  // namespace satogr
