#include "finvar/cycnum.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

namespace finvar {
namespace {

constexpr int kMaxConductor = 1 << 16;

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long long> cyclotomic_poly(int n) {
  std::vector<long long> p{1};
  auto mul_xd_minus_1 = [&](int d) {
    std::vector<long long> r(p.size() + d, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i + d] += p[i];
      r[i] -= p[i];
    }
    p = std::move(r);
  };
  auto div_xd_minus_1 = [&](int d) {
    // p = q * (x^d - 1): q[i] = -p[i] + q[i-d] read from the bottom.
    std::vector<long long> q(p.size() - d, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      long long prev = i >= static_cast<std::size_t>(d) ? q[i - d] : 0;
      q[i] = prev - p[i];
    }
    p = std::move(q);
  };
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) divs.push_back(d);
  }
  for (int d : divs) {
    if (mobius(n / d) == 1) mul_xd_minus_1(d);
  }
  for (int d : divs) {
    if (mobius(n / d) == -1) div_xd_minus_1(d);
  }
  return p;
}

std::unique_ptr<CycloContext> make_context(int n) {
  auto ctx = std::make_unique<CycloContext>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  ctx->poly = cyclotomic_poly(n);
  for (int i = 0; i < ctx->phi; ++i) {
    if (ctx->poly[i] != 0) ctx->low_terms.emplace_back(i, ctx->poly[i]);
  }
  return ctx;
}

std::array<std::atomic<const CycloContext*>, kMaxConductor>& registry() {
  static std::array<std::atomic<const CycloContext*>, kMaxConductor> slots{};
  return slots;
}

// Reduce an exponent-indexed buffer modulo z^n - 1 and Phi_n, in place.
void reduce_buffer(const CycloContext& ctx, std::vector<Rational>& buf) {
  const int n = ctx.n;
  if (static_cast<int>(buf.size()) > n) {
    for (std::size_t k = n; k < buf.size(); ++k) {
      if (!buf[k].is_zero()) buf[k % n] += buf[k];
    }
    buf.resize(n);
  }
  const int phi = ctx.phi;
  for (int k = static_cast<int>(buf.size()) - 1; k >= phi; --k) {
    if (buf[k].is_zero()) continue;
    const Rational c = buf[k];
    for (const auto& [i, pi] : ctx.low_terms) {
      buf[k - phi + i] -= c * Rational(pi);
    }
  }
  buf.resize(phi);
}

CycNum::Coeffs to_coeffs(std::vector<Rational>&& v) {
  return CycNum::Coeffs(std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i) {
    if (n % i == 0) d.push_back(i);
  }
  return d;
}

int legendre(long long a, long long p) {
  long long r = 1, b = ((a % p) + p) % p, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

// Gauss sum over F_p: squares to (-1)^((p-1)/2) p.
CycNum gauss_sum(int p) {
  std::vector<Rational> e(p);
  for (int a = 1; a < p; ++a) e[a] = Rational(legendre(a, p));
  return CycNum::from_exponents(p, e);
}

// sqrt of a positive prime or 2, or -1.
CycNum sqrt_prime(long long p) {
  if (p == -1) return CycNum::zeta(4);
  if (p == 2) return CycNum::zeta(8) + CycNum::zeta(8, 7);
  CycNum g = gauss_sum(static_cast<int>(p));
  if (p % 4 == 1) return g;
  return -(CycNum::zeta(4) * g);
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

const CycloContext& cyclo_context(int n) {
  if (n < 1 || n >= kMaxConductor) throw std::invalid_argument("conductor out of range");
  auto& slot = registry()[n];
  const CycloContext* p = slot.load(std::memory_order_acquire);
  if (p) return *p;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  p = slot.load(std::memory_order_acquire);
  if (!p) {
    p = make_context(n).release();  // lives for the program's lifetime
    slot.store(p, std::memory_order_release);
  }
  return *p;
}

CycNum::CycNum(const Rational& r, int n) : n_(n), c_(cyclo_context(n).phi) { c_[0] = r; }

CycNum CycNum::from_exponents(int n, const std::vector<Rational>& by_exponent) {
  const CycloContext& ctx = cyclo_context(n);
  std::vector<Rational> buf = by_exponent;
  if (static_cast<int>(buf.size()) < ctx.phi) buf.resize(ctx.phi);
  reduce_buffer(ctx, buf);
  return CycNum(n, to_coeffs(std::move(buf)));
}

CycNum CycNum::zeta(int n, long long k) {
  long long e = ((k % n) + n) % n;
  std::vector<Rational> buf(static_cast<std::size_t>(e) + 1);
  buf[e] = Rational(1);
  return from_exponents(n, buf);
}

bool CycNum::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycNum::is_one() const { return c_[0].is_one() && is_rational(); }

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
  return c_[0];
}

CycNum CycNum::embed(int target) const {
  if (target % n_ != 0) {
    throw ConductorMismatch("conductor " + std::to_string(n_) + " does not divide " +
                            std::to_string(target));
  }
  if (target == n_) return *this;
  const int step = target / n_;
  std::vector<Rational> buf(static_cast<std::size_t>(c_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) buf[i * step] = c_[i];
  return from_exponents(target, buf);
}

std::optional<CycNum> CycNum::restrict_to(int m) const {
  if (n_ % m != 0) return std::nullopt;
  if (m == n_) return *this;
  if (is_rational()) return CycNum(c_[0], m);
  const int phi_m = cyclo_context(m).phi;
  const int phi_n = static_cast<int>(c_.size());
  // Columns: images of zeta_m^j in Q(zeta_n). Solve for the coordinates.
  std::vector<std::vector<Rational>> rows(phi_n, std::vector<Rational>(phi_m + 1));
  for (int j = 0; j < phi_m; ++j) {
    CycNum col = CycNum::zeta(n_, static_cast<long long>(j) * (n_ / m));
    for (int i = 0; i < phi_n; ++i) rows[i][j] = col.c_[i];
  }
  for (int i = 0; i < phi_n; ++i) rows[i][phi_m] = c_[i];
  int r = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < phi_m && r < phi_n; ++col) {
    int piv = -1;
    for (int i = r; i < phi_n; ++i) {
      if (!rows[i][col].is_zero()) { piv = i; break; }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    Rational inv = rows[r][col].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (int i = 0; i < phi_n; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (int k = col; k <= phi_m; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < phi_n; ++i) {
    if (!rows[i][phi_m].is_zero()) return std::nullopt;
  }
  Coeffs out(phi_m);
  for (int i = 0; i < r; ++i) out[pivot_col[i]] = rows[i][phi_m];
  return CycNum(m, std::move(out));
}

CycNum CycNum::minimized() const {
  if (is_rational()) return CycNum(c_[0]);
  for (int d : divisors(n_)) {
    if (auto r = restrict_to(d)) return *r;
  }
  return *this;
}

std::optional<int> CycNum::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  const int m = n_ % 2 == 1 ? 2 * n_ : n_;
  if (!pow(m).is_one()) return std::nullopt;
  for (int d : divisors(m)) {
    if (pow(d).is_one()) return d;
  }
  return m;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycNum(c_[0].inverse(), n_);
  const int phi = static_cast<int>(c_.size());
  // Solve (multiplication-by-this) x = 1.
  std::vector<std::vector<Rational>> rows(phi, std::vector<Rational>(phi + 1));
  CycNum col = *this;
  const CycNum z = CycNum::zeta(n_);
  for (int j = 0; j < phi; ++j) {
    for (int i = 0; i < phi; ++i) rows[i][j] = col.c_[i];
    if (j + 1 < phi) col *= z;
  }
  rows[0][phi] = Rational(1);
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (rows[piv][c].is_zero()) ++piv;
    std::swap(rows[piv], rows[c]);
    Rational inv = rows[c][c].inverse();
    for (int k = c; k <= phi; ++k) rows[c][k] *= inv;
    for (int i = 0; i < phi; ++i) {
      if (i == c || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (int k = c; k <= phi; ++k) rows[i][k] -= f * rows[c][k];
    }
  }
  Coeffs out(phi);
  for (int i = 0; i < phi; ++i) out[i] = rows[i][phi];
  return CycNum(n_, std::move(out));
}

CycNum CycNum::galois(int k) const {
  if (std::gcd(k, n_) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
  const long long kk = ((k % n_) + n_) % n_;
  std::vector<Rational> buf(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) buf[(i * kk) % n_] += c_[i];
  }
  return from_exponents(n_, buf);
}

CycNum CycNum::conj() const { return n_ <= 2 ? *this : galois(n_ - 1); }

CycNum CycNum::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(Rational(1), n_);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    s += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string CycNum::str() const {
  std::string s = "cyc(" + std::to_string(n_) + ")[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  return s + "]";
}

std::size_t CycNum::hash() const {
  // Conductor-dependent; containers hash values of one common conductor.
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& c : c_) h = (h ^ c.hash()) * 0x100000001b3ULL + (h >> 29);
  return h;
}

CycNum CycNum::parse(std::string_view text) {
  std::string s(text);
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty cyclotomic value");
  s = s.substr(b, e - b + 1);
  if (s.rfind("cyc(", 0) != 0) return CycNum(Rational::parse(s));
  std::size_t close = s.find(')');
  if (close == std::string::npos) throw ParseError("missing ')' in '" + s + "'");
  int n = 0;
  try {
    n = std::stoi(s.substr(4, close - 4));
  } catch (const std::exception&) {
    throw ParseError("bad conductor in '" + s + "'");
  }
  if (n < 1 || n >= kMaxConductor) throw ParseError("conductor out of range in '" + s + "'");
  std::size_t lb = s.find('[', close);
  std::size_t rb = s.rfind(']');
  if (lb != close + 1 || rb != s.size() - 1) throw ParseError("malformed coefficient list in '" + s + "'");
  std::vector<Rational> coeffs;
  std::string body = s.substr(lb + 1, rb - lb - 1);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(Rational::parse(item));
  const int phi = cyclo_context(n).phi;
  if (static_cast<int>(coeffs.size()) != phi) {
    throw ParseError("expected " + std::to_string(phi) + " coefficients in '" + s + "'");
  }
  return CycNum(n, to_coeffs(std::move(coeffs)));
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.n_ != n_) {
    int m = static_cast<int>(lcm_ll(n_, o.n_));
    *this = embed(m);
    return *this += o.embed(m);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (o.n_ != n_) {
    int m = static_cast<int>(lcm_ll(n_, o.n_));
    *this = embed(m);
    return *this -= o.embed(m);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) {
    int m = static_cast<int>(lcm_ll(a.n_, b.n_));
    return a.embed(m) * b.embed(m);
  }
  if (b.is_rational()) return a.scaled(b.c_[0]);
  if (a.is_rational()) return b.scaled(a.c_[0]);
  CycAccumulator acc(a.n_);
  acc.add_product(a, b);
  return acc.take();
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator/=(const CycNum& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this = *this * o.inverse();
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  int m = static_cast<int>(lcm_ll(a.n_, b.n_));
  return a.embed(m).c_ == b.embed(m).c_;
}

CycNum CycNum::scaled(const Rational& r) const {
  CycNum out = *this;
  if (r.is_one()) return out;
  for (auto& c : out.c_) c *= r;
  return out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

CycAccumulator::CycAccumulator(int n) : ctx_(&cyclo_context(n)), buf_(2 * ctx_->phi - 1) {}

void CycAccumulator::add_product(const CycNum& a, const CycNum& b) {
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j].is_zero()) continue;
      buf_[i + j] += ac[i] * bc[j];
    }
  }
  dirty_ = true;
}

void CycAccumulator::add(const CycNum& a) {
  const auto& ac = a.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) buf_[i] += ac[i];
  dirty_ = true;
}

CycNum CycAccumulator::take() {
  std::vector<Rational> out(std::move(buf_));
  reduce_buffer(*ctx_, out);
  buf_.assign(2 * ctx_->phi - 1, Rational());
  dirty_ = false;
  return CycNum(ctx_->n, to_coeffs(std::move(out)));
}

CycNum sqrt_minus1() { return CycNum::zeta(4); }
CycNum sqrt2() { return sqrt_prime(2); }
CycNum inv_sqrt2() { return sqrt2().scaled(Rational(1, 2)); }
CycNum sqrt_minus3() { return gauss_sum(3); }
CycNum sqrt5() { return gauss_sum(5); }
CycNum sqrt_minus7() { return gauss_sum(7); }
CycNum omega() { return CycNum::zeta(3); }

CycNum sqrt_rational(const Rational& q) {
  if (q.is_zero()) return CycNum();
  if (!q.is_small()) throw std::domain_error("sqrt_rational: value too large");
  // sqrt(p/q) = sqrt(p*q)/q
  __int128 m = static_cast<__int128>(q.small_num()) * q.small_den();
  CycNum result(Rational(1));
  if (m < 0) {
    result = sqrt_prime(-1);
    m = -m;
  }
  long long rest = static_cast<long long>(m);
  long long outside = 1;
  for (long long p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) { rest /= p; ++e; }
    for (int i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2 == 1) result *= sqrt_prime(p);
  }
  if (rest > 1) result *= sqrt_prime(rest);
  return result.scaled(Rational(outside, q.small_den()));
}

}  // namespace finvar
