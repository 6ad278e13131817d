#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace pfdimers {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Accepts "p/q", integers and finite decimals ("1.25", "-3e-2" is not
// accepted). The result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

// Exact element of Q[i]. Kept deliberately small: the exact backend only
// needs field operations and a few predicates.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(int value) : re(value), im(0) {}
  GaussRational(const Rational& real, const Rational& imag = 0) : re(real), im(imag) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return Rational(re * re + im * im); }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
};

inline GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
inline GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
inline GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
inline GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
inline GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
inline bool operator==(const GaussRational& a, const GaussRational& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

std::string to_string(const GaussRational& value);

// i^k for integer k.
GaussRational i_power(int k);

// Per-backend glue for the generic elimination code.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex from(const Rational& w) { return Complex(w.get_d(), 0.0); }
  static Complex i_power(int k) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
  }
  static double magnitude(const Complex& z) { return std::abs(z); }
  static bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
  static Complex to_complex(const Complex& z) { return z; }
};

template <>
struct ScalarTraits<GaussRational> {
  static constexpr bool exact = true;
  static GaussRational from(const Rational& w) { return GaussRational(w); }
  static GaussRational i_power(int k) { return pfdimers::i_power(k); }
  static double magnitude(const GaussRational& z) { return std::abs(Complex(z.re.get_d(), z.im.get_d())); }
  static bool is_zero(const GaussRational& z) { return z.is_zero(); }
  static Complex to_complex(const GaussRational& z) { return {z.re.get_d(), z.im.get_d()}; }
};

}  // namespace pfdimers

namespace Eigen {

template <>
struct NumTraits<pfdimers::GaussRational> : GenericNumTraits<pfdimers::GaussRational> {
  using Real = pfdimers::GaussRational;
  using NonInteger = pfdimers::GaussRational;
  using Nested = pfdimers::GaussRational;
  using Literal = pfdimers::GaussRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64,
  };
};

}  // namespace Eigen
