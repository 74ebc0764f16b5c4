#include "smz/scalar.hpp"

#include <cstdio>

namespace smz {

Real to_real(const Rational& q) {
  if (sgn(q) == 0) return 0;
  Integer n = abs(q.get_num()), d = q.get_den();
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  long sh = 72 - e;
  if (sh >= 0)
    n <<= static_cast<unsigned long>(sh);
  else
    d <<= static_cast<unsigned long>(-sh);
  Integer quo = n / d;
  Real r = 0;
  std::size_t limbs = mpz_size(quo.get_mpz_t());
  for (std::size_t k = limbs; k-- > 0;) r = r * 18446744073709551616.0L + static_cast<Real>(mpz_getlimbn(quo.get_mpz_t(), k));
  r = std::ldexp(r, static_cast<int>(-sh));
  return sgn(q) < 0 ? -r : r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(Real x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

}  // namespace smz
