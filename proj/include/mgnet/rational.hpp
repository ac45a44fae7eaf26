#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mgnet {

// Exact rational with int64 storage. Arithmetic goes through __int128 and
// throws std::overflow_error when a reduced result does not fit.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT implicit by design
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p" or "p/q"
  std::string str() const;
  // True when den = 2^i 5^j, i.e. the value has a finite decimal expansion.
  bool has_finite_decimal() const;
  // Exact decimal when finite, otherwise 12 significant digits.
  std::string decimal() const;

  // Accepts "p", "p/q", and finite decimals such as "0.125" or "-2.5".
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(__int128 n, __int128 d);
  int64_t num_ = 0;
  int64_t den_ = 1;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mgnet
