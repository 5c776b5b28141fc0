#include "finvar/modp.hpp"

#include <stdexcept>

namespace finvar {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
  if (a % p == 0) throw std::domain_error("no inverse modulo p");
  return powmod(a, p - 2, p);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> f;
  for (uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      f.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

ModField::ModField(int n) : n_(n) {
  // Largest prime below 2^61 congruent to 1 mod 2n (odd, and = 1 mod n).
  const uint64_t step = 2 * static_cast<uint64_t>(n);
  uint64_t k = ((1ULL << 61) - 1) / step;
  p_ = 0;
  for (; k > 0; --k) {
    if (is_prime_u64(k * step + 1)) {
      p_ = k * step + 1;
      break;
    }
  }
  const auto factors = prime_factors(static_cast<uint64_t>(n));
  uint64_t root = 1;
  for (uint64_t g = 2;; ++g) {
    root = powmod(g, (p_ - 1) / n, p_);
    bool primitive = true;
    for (uint64_t q : factors) {
      if (powmod(root, n / q, p_) == 1) { primitive = false; break; }
    }
    if (primitive) break;
  }
  root_pows_.resize(n);
  uint64_t x = 1;
  for (int i = 0; i < n; ++i) {
    root_pows_[i] = x;
    x = mulmod(x, root, p_);
  }
}

uint64_t ModField::reduce(const Rational& r) const {
  if (r.is_small()) {
    int64_t num = r.small_num();
    uint64_t a = num >= 0 ? static_cast<uint64_t>(num) % p_ : (p_ - (static_cast<uint64_t>(-(num + 1)) + 1) % p_) % p_;
    uint64_t d = static_cast<uint64_t>(r.small_den()) % p_;
    if (d == 0) throw std::domain_error("prime divides a denominator");
    return mulmod(a, invmod(d, p_), p_);
  }
  mpz_class pz(std::to_string(p_));
  mpz_class a = r.numerator() % pz;
  if (a < 0) a += pz;
  mpz_class d = r.denominator() % pz;
  if (d == 0) throw std::domain_error("prime divides a denominator");
  uint64_t av = std::stoull(a.get_str()), dv = std::stoull(d.get_str());
  return mulmod(av, invmod(dv, p_), p_);
}

uint64_t ModField::reduce(const CycNum& a) const {
  if (n_ % a.conductor() != 0) throw ConductorMismatch("value conductor does not divide modular field conductor");
  const int step = n_ / a.conductor();
  uint64_t s = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    s = (s + mulmod(reduce(c[i]), root_pows_[(i * step) % n_], p_)) % p_;
  }
  return s;
}

}  // namespace finvar
