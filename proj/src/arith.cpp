#include "realtight/arith.hpp"

#include <charconv>
#include <cstdlib>

namespace rt {

namespace {

[[noreturn]] void overflow() { throw DomainError("integer overflow"); }

Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) overflow();
  return static_cast<Int>(v);
}

Int parse_int(std::string_view s) {
  Int v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  if (b != e && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || b == e)
    throw DomainError("malformed integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int gcd(Int a, Int b) {
  __int128 x = a < 0 ? -static_cast<__int128>(a) : a;
  __int128 y = b < 0 ? -static_cast<__int128>(b) : b;
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  return narrow(x);
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw DomainError("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  if (b == 0) throw DomainError("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
  return {old_r, old_s, old_t};
}

Rational::Rational(Int n, Int d) {
  if (d == 0) throw DomainError("zero denominator");
  __int128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  Int g = gcd(narrow(nn), narrow(dd));
  num_ = narrow(nn / g);
  den_ = narrow(dd / g);
}

Rational Rational::operator-() const { return Rational(checked_neg(num_), den_); }

Rational Rational::inverse() const {
  if (num_ == 0) throw DomainError("inverse of zero");
  return Rational(den_, num_);
}

namespace {

Rational make(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 x = n < 0 ? -n : n, y = d;
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  if (x > 1) {
    n /= x;
    d /= x;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero");
  return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational frac(const Rational& x) { return x - Rational(x.floor()); }

Count catalan(int n) {
  if (n < 0) throw DomainError("negative Catalan index");
  Count c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::string to_string(const Count& c) { return c.str(); }

}  // namespace rt
