#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rt {

using Int = std::int64_t;
using Count = boost::multiprecision::cpp_int;

// Raised for inputs outside an operation's domain. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

Int gcd(Int a, Int b);  // nonnegative; gcd(0, 0) = 0
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

struct ExtGcd {
  Int g, x, y;  // a*x + b*y = g
};
ExtGcd ext_gcd(Int a, Int b);

// Exact rational with positive denominator in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(Int n) : num_(n) {}  // NOLINT: integers convert implicitly
  Rational(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational inverse() const;
  Int floor() const { return floor_div(num_, den_); }
  Int ceil() const { return ceil_div(num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

// Fractional part in [0, 1).
Rational frac(const Rational& x);

Count catalan(int n);
std::string to_string(const Count& c);

}  // namespace rt
