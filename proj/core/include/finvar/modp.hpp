#pragma once

#include <cstdint>
#include <vector>

#include "finvar/cycnum.hpp"

namespace finvar {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod(uint64_t a, uint64_t p);
bool is_prime_u64(uint64_t n);

// Reduction Z[zeta_n][1/m] -> F_p for a prime p = 1 mod n, sending zeta_n to a
// fixed primitive n-th root of unity.
class ModField {
 public:
  explicit ModField(int n);
  uint64_t p() const { return p_; }
  int conductor() const { return n_; }
  // Throws std::domain_error if p divides a denominator.
  uint64_t reduce(const Rational& r) const;
  uint64_t reduce(const CycNum& a) const;

 private:
  int n_;
  uint64_t p_;
  std::vector<uint64_t> root_pows_;
};

}  // namespace finvar
