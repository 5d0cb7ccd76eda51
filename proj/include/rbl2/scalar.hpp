#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rbl2 {

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT: integers convert implicitly
  Scalar(long numerator, long denominator);

  /// Parses "p" or "p/q". The denominator must be positive and the fraction
  /// already reduced; anything else raises BadRational.
  static Scalar parse(std::string_view text);

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  const mpq_class& raw() const { return value_; }

  Scalar& operator+=(const Scalar& o) {
    value_ += o.value_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    value_ -= o.value_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    value_ *= o.value_;
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) {
    Scalar r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  explicit Scalar(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

}  // namespace rbl2
