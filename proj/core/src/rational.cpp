#include "finvar/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace finvar {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();
constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
  }
  int shift = 0;
  while (((a | b) & 1) == 0) { a >>= 1; b >>= 1; ++shift; }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_class(static_cast<long>(kMin));
}

uint64_t mix(uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

Rational::Rational(long long v) {
  if (v == kMin) {
    assign(mpq_class(mpz_from_i128(v)));
  } else {
    num_ = v;
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  assign_i128(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  assign(std::move(c));
}

Rational::Rational(const mpz_class& z) { assign(mpq_class(z)); }

void Rational::assign(mpq_class&& q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

void Rational::assign_i128(i128 n, i128 d) {
  if (d < 0) { n = -n; d = -d; }
  if (n == 0) { num_ = 0; den_ = 1; big_.reset(); return; }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) { n /= static_cast<i128>(g); d /= static_cast<i128>(g); }
  if (n > kMin && n <= kMax && d <= kMax) {
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  assign(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& t) {
    std::size_t b = t.find_first_not_of(" \t");
    std::size_t e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  strip(s);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t slash = s.find('/');
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  strip(ns);
  strip(ds);
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (!valid(ns) || !valid(ds)) throw ParseError("malformed rational '" + s + "'");
  if (ns[0] == '+') ns.erase(0, 1);
  if (ds[0] == '+') ds.erase(0, 1);
  mpz_class n(ns), d(ds);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i128(num_), mpz_from_i128(den_));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_from_i128(num_); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_from_i128(den_); }

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (!big_) {
    return mix(static_cast<uint64_t>(num_) * 0x9e3779b97f4a7c15ULL ^ mix(static_cast<uint64_t>(den_)));
  }
  uint64_t h = 0x12345;
  mpz_srcptr n = big_->get_num_mpz_t();
  mpz_srcptr d = big_->get_den_mpz_t();
  for (std::size_t i = 0; i < mpz_size(n); ++i) h = mix(h ^ mpz_getlimbn(n, i));
  h = mix(h ^ static_cast<uint64_t>(mpz_sgn(n)));
  for (std::size_t i = 0; i < mpz_size(d); ++i) h = mix(h ^ mpz_getlimbn(d, i));
  return h;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(mpq_class(-*big_));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  if (big_) {
    mpq_class q;
    mpq_inv(q.get_mpq_t(), big_->get_mpq_t());
    r.assign(std::move(q));
  } else if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!big_ && !o.big_) {
    if (den_ == o.den_) {
      i128 n = static_cast<i128>(num_) + o.num_;
      if (den_ == 1) {
        if (n > kMin && n <= kMax) { num_ = static_cast<int64_t>(n); return *this; }
      }
      assign_i128(n, den_);
      return *this;
    }
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    assign_i128(n, d);
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (!big_ && !o.big_ && o.num_ != kMin) {
    Rational neg;
    neg.num_ = -o.num_;
    neg.den_ = o.den_;
    return *this += neg;
  }
  return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Rational();
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t p;
      if (!__builtin_mul_overflow(num_, o.num_, &p) && p != kMin) { num_ = p; return *this; }
    }
    int64_t g1 = std::gcd(num_, o.den_);
    int64_t g2 = std::gcd(o.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (n > kMin && n <= kMax && d <= kMax) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    assign_i128(n, d);
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this *= o.inverse();
}

Rational Rational::fma(const Rational& a, const Rational& b, const Rational& c) {
  if (b.is_zero() || c.is_zero()) return a;
  Rational r = b * c;
  r += a;
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value that fits is never stored big
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(z);
}

}  // namespace finvar
