#include "mgnet/rational.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

namespace mgnet {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<int64_t>(n);
  r.den_ = static_cast<int64_t>(d);
  return r;
}

Rational::Rational(int64_t n, int64_t d) { *this = from_wide(n, d); }

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  __int128 g1 = gcd128(num_, o.den_);
  __int128 g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  __int128 n = (num_ / g1) * (o.num_ / g2);
  __int128 d = (den_ / g2) * (o.den_ / g1);
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= from_wide(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::has_finite_decimal() const {
  int64_t d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string Rational::decimal() const {
  if (!has_finite_decimal()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double());
    return buf;
  }
  int twos = 0, fives = 0;
  for (int64_t d = den_; d % 2 == 0; d /= 2) ++twos;
  for (int64_t d = den_; d % 5 == 0; d /= 5) ++fives;
  int digits = twos > fives ? twos : fives;
  __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  __int128 scaled = static_cast<__int128>(num_) * (scale / den_);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  __int128 ip = scaled / scale;
  __int128 fp = scaled % scale;
  std::string out = neg ? "-" : "";
  std::string ipart;
  if (ip == 0) ipart = "0";
  while (ip > 0) {
    ipart.insert(ipart.begin(), static_cast<char>('0' + static_cast<int>(ip % 10)));
    ip /= 10;
  }
  out += ipart;
  if (digits > 0) {
    std::string frac(digits, '0');
    for (int i = digits - 1; i >= 0; --i) {
      frac[i] = static_cast<char>('0' + static_cast<int>(fp % 10));
      fp /= 10;
    }
    out += "." + frac;
  }
  return out;
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto parse_int = [&](const std::string& t) -> int64_t {
    if (t.empty()) throw std::invalid_argument("malformed rational '" + text + "'");
    size_t pos = 0;
    if (t[0] == '-' || t[0] == '+') pos = 1;
    if (pos == t.size()) throw std::invalid_argument("malformed rational '" + text + "'");
    for (size_t i = pos; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("malformed rational '" + text + "'");
    return std::stoll(t);
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    int64_t d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_int(s.substr(0, slash)), d);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_int(s));
  std::string ip = s.substr(0, dot);
  std::string fp = s.substr(dot + 1);
  bool neg = !ip.empty() && ip[0] == '-';
  if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
  if (ip.empty()) ip = "0";
  if (fp.empty() || fp.size() > 17) throw std::invalid_argument("malformed rational '" + text + "'");
  int64_t scale = 1;
  for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
  Rational r = Rational(parse_int(ip)) + Rational(parse_int(fp), scale);
  return neg ? -r : r;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mgnet
