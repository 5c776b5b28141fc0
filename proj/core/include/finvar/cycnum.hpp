#pragma once

#include <boost/container/small_vector.hpp>

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finvar/rational.hpp"

namespace finvar {

struct ConductorMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Cached data for Q(zeta_n): Euler phi and the cyclotomic polynomial.
struct CycloContext {
  int n = 1;
  int phi = 1;
  std::vector<long long> poly;                      // monic, length phi+1, low degree first
  std::vector<std::pair<int, long long>> low_terms;  // nonzero (i, poly[i]) for i < phi
};

const CycloContext& cyclo_context(int n);
int euler_phi(int n);
long long lcm_ll(long long a, long long b);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1}, normal form
// modulo the n-th cyclotomic polynomial.
class CycNum {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  CycNum() : n_(1), c_(1) {}
  CycNum(const Rational& r, int n = 1);  // NOLINT(google-explicit-constructor)
  CycNum(long long v) : CycNum(Rational(v)) {}  // NOLINT
  CycNum(int v) : CycNum(Rational(v)) {}        // NOLINT
  CycNum(long v) : CycNum(Rational(v)) {}       // NOLINT
  // Coefficients by exponent; any length, reduced modulo z^n - 1 and Phi_n.
  static CycNum from_exponents(int n, const std::vector<Rational>& by_exponent);
  static CycNum zeta(int n, long long k = 1);
  static CycNum parse(std::string_view text);

  int conductor() const { return n_; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws unless is_rational().
  Rational to_rational() const;

  // Same value in Q(zeta_target); throws ConductorMismatch if n does not divide target.
  CycNum embed(int target) const;
  // Inverse of embed: the same value expressed in Q(zeta_m), if it lies there.
  std::optional<CycNum> restrict_to(int m) const;
  CycNum minimized() const;

  std::optional<int> root_of_unity_order() const;

  CycNum inverse() const;
  CycNum conj() const;
  CycNum galois(int k) const;  // zeta -> zeta^k, gcd(k, n) = 1
  CycNum pow(long long e) const;
  std::complex<double> to_complex() const;

  std::string str() const;
  std::size_t hash() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  CycNum scaled(const Rational& r) const;

 private:
  int n_;
  Coeffs c_;
  CycNum(int n, Coeffs c) : n_(n), c_(std::move(c)) {}
  friend class CycAccumulator;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

// Accumulates a sum of products in unreduced form, reducing once at the end.
class CycAccumulator {
 public:
  explicit CycAccumulator(int n);
  void add_product(const CycNum& a, const CycNum& b);  // both must have conductor n
  void add(const CycNum& a);
  CycNum take();

 private:
  const CycloContext* ctx_;
  std::vector<Rational> buf_;
  bool dirty_ = false;
};

// Named constants.
CycNum sqrt_minus1();
CycNum sqrt2();
CycNum inv_sqrt2();
CycNum sqrt_minus3();
CycNum sqrt5();
CycNum sqrt_minus7();
CycNum omega();  // primitive cube root of unity
// Square root of a rational inside a cyclotomic field, via Gauss sums.
CycNum sqrt_rational(const Rational& q);

}  // namespace finvar

template <>
struct std::hash<finvar::CycNum> {
  std::size_t operator()(const finvar::CycNum& a) const { return a.hash(); }
};
