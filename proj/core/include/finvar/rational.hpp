#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finvar {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational. Values whose numerator and denominator fit in int64 are
// stored inline; anything larger lives in an immutable shared GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(int v) : Rational(static_cast<long long>(v)) {}  // NOLINT
  Rational(long v) : Rational(static_cast<long long>(v)) {}  // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  // Only valid when is_small().
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }
  double to_double() const;

  std::string str() const;
  std::size_t hash() const;

  Rational operator-() const;
  Rational inverse() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // a + b*c, the inner step of every dot product.
  static Rational fma(const Rational& a, const Rational& b, const Rational& c);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;

  void assign(mpq_class&& q);
  void assign_i128(__int128 n, __int128 d);
};

inline Rational operator+(const Rational& a, const Rational& b) { Rational r = a; r += b; return r; }
inline Rational operator-(const Rational& a, const Rational& b) { Rational r = a; r -= b; return r; }
inline Rational operator*(const Rational& a, const Rational& b) { Rational r = a; r *= b; return r; }
inline Rational operator/(const Rational& a, const Rational& b) { Rational r = a; r /= b; return r; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Binomial coefficient as an exact rational.
Rational binomial(int n, int k);

}  // namespace finvar

template <>
struct std::hash<finvar::Rational> {
  std::size_t operator()(const finvar::Rational& r) const { return r.hash(); }
};
