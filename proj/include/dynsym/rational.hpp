#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace dynsym {

// Exact rational number with canonical form: reduced fraction, positive
// denominator.  Intermediate products use 128-bit arithmetic; results that do
// not fit back into 64 bits throw instead of wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Renders "p" for integers and "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = g ? n / g : 0;
    den_ = g ? d / g : 1;
  }

  static Rational from128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n < 0 ? -n : n, d);
    if (g != 0) {
      n /= g;
      d /= g;
    } else {
      d = 1;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_, den_;
};

// Gaussian rational a + b*i.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(re) {}
  GaussianRational(std::int64_t re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }

  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re_, -a.im_};
  }
  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    const Rational n2 = b.re_ * b.re_ + b.im_ * b.im_;
    if (n2.is_zero()) throw std::domain_error("gaussian division by zero");
    const GaussianRational num = a * b.conj();
    return {num.re_ / n2, num.im_ / n2};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    return *this = *this + o;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    return *this = *this - o;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    return *this = *this * o;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  std::complex<double> to_complex() const {
    return {re_.to_double(), im_.to_double()};
  }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return im_.str() + "*i";
    return re_.str() + (im_.sign() > 0 ? "+" : "") + im_.str() + "*i";
  }

 private:
  Rational re_, im_;
};

// Element a + b*sqrt(2) of the field Q(i, sqrt(2)); a, b Gaussian rational.
// Closed under division because a^2 - 2 b^2 = 0 has no nonzero solution in
// Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v) : a_(Rational(v)) {}
  Scalar(Rational v) : a_(v) {}
  Scalar(GaussianRational v) : a_(v) {}
  Scalar(GaussianRational a, GaussianRational b) : a_(a), b_(b) {}

  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar sqrt2() { return {GaussianRational(0), GaussianRational(1)}; }
  // 1/sqrt(2) = sqrt(2)/2.
  static Scalar inv_sqrt2() {
    return {GaussianRational(0), GaussianRational(Rational(1, 2))};
  }

  const GaussianRational& rat_part() const { return a_; }
  const GaussianRational& surd_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero() && a_.im().is_zero(); }
  Scalar conj() const { return {a_.conj(), b_.conj()}; }

  friend Scalar operator-(const Scalar& x) { return {-x.a_, -x.b_}; }
  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    return {x.a_ * y.a_ + GaussianRational(2) * x.b_ * y.b_,
            x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    const GaussianRational n2 =
        y.a_ * y.a_ - GaussianRational(2) * y.b_ * y.b_;
    if (n2.is_zero()) throw std::domain_error("scalar division by zero");
    const Scalar num = x * Scalar{y.a_, -y.b_};
    return {num.a_ / n2, num.b_ / n2};
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  std::complex<double> to_complex() const {
    constexpr double kSqrt2 = 1.4142135623730951;
    return a_.to_complex() + kSqrt2 * b_.to_complex();
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    const std::string surd = "(" + b_.str() + ")*sqrt2";
    if (a_.is_zero()) return surd;
    return "(" + a_.str() + ")+" + surd;
  }

 private:
  GaussianRational a_, b_;
};

inline Scalar operator*(std::int64_t c, const Scalar& x) {
  return Scalar(c) * x;
}
inline Scalar operator*(const Rational& c, const Scalar& x) {
  return Scalar(c) * x;
}

}  // namespace dynsym

namespace Eigen {

template <>
struct NumTraits<dynsym::Rational> : GenericNumTraits<dynsym::Rational> {
  using Real = dynsym::Rational;
  using NonInteger = dynsym::Rational;
  using Nested = dynsym::Rational;
  using Literal = std::int64_t;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10
  };
  static Real epsilon() { return dynsym::Rational(0); }
  static Real dummy_precision() { return dynsym::Rational(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<dynsym::GaussianRational>
    : GenericNumTraits<dynsym::GaussianRational> {
  using Real = dynsym::GaussianRational;
  using NonInteger = dynsym::GaussianRational;
  using Nested = dynsym::GaussianRational;
  using Literal = std::int64_t;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 40
  };
  static Real epsilon() { return dynsym::GaussianRational(0); }
  static Real dummy_precision() { return dynsym::GaussianRational(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<dynsym::Scalar> : GenericNumTraits<dynsym::Scalar> {
  using Real = dynsym::Scalar;
  using NonInteger = dynsym::Scalar;
  using Nested = dynsym::Scalar;
  using Literal = std::int64_t;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };
  static Real epsilon() { return dynsym::Scalar(0); }
  static Real dummy_precision() { return dynsym::Scalar(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
