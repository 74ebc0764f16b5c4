#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <type_traits>
#include <variant>

namespace smz {

using Integer = mpz_class;
using Rational = mpq_class;
using Real = long double;

enum class Backend { exact, approx };

inline Integer ipow(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

// m^{-s}
inline Rational inv_pow(long m, int s, Rational*) {
  if (s >= 0) return Rational(Integer(1), ipow(m, static_cast<unsigned long>(s)));
  return Rational(ipow(m, static_cast<unsigned long>(-s)));
}
inline Real inv_pow(long m, Real s, Real*) { return std::pow(static_cast<Real>(m), -s); }
inline Real inv_pow(long m, int s, Real*) { return std::pow(static_cast<Real>(m), static_cast<Real>(-s)); }

template <class T, class E>
T inv_pow(long m, const E& s) {
  return inv_pow(m, s, static_cast<T*>(nullptr));
}

Real to_real(const Rational& q);
inline Real to_real(Real x) { return x; }

std::string to_string(const Rational& q);
std::string to_string(Real x, int digits = 18);

// Exact big rational or extended float; mixed arithmetic promotes to float.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational q) : v_(std::move(q)) {}
  Scalar(Real x) : v_(x) {}
  Scalar(int x) : v_(Rational(x)) {}

  bool exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  Real real() const { return exact() ? to_real(rational()) : std::get<Real>(v_); }
  std::string str() const { return exact() ? to_string(rational()) : to_string(std::get<Real>(v_)); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x + y; }); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x - y; }); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x * y; }); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x / y; }); }
  // Exact equality for two exact values; otherwise compares the float images.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return a.rational() == b.rational();
    return a.real() == b.real();
  }

 private:
  template <class F>
  static Scalar combine(const Scalar& a, const Scalar& b, F f) {
    if (a.exact() && b.exact()) return Scalar(Rational(f(a.rational(), b.rational())));
    return Scalar(static_cast<Real>(f(a.real(), b.real())));
  }
  std::variant<Rational, Real> v_;
};

}  // namespace smz
