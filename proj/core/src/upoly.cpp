#include "finvar/upoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace finvar {

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int upoly_degree(const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (!p[i].is_zero()) return i;
  }
  return -1;
}

UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i].scaled(Rational(static_cast<long long>(i))));
  upoly_trim(d);
  return d;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, CycNum(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  upoly_trim(r);
  return r;
}

std::pair<UPoly, UPoly> upoly_divmod(UPoly a, const UPoly& b) {
  const int db = upoly_degree(b);
  if (db < 0) throw DivisionByZero();
  upoly_trim(a);
  const CycNum lead_inv = b[db].inverse();
  UPoly q(std::max<int>(0, upoly_degree(a) - db + 1), CycNum(0));
  for (int k = upoly_degree(a); k >= db; k = upoly_degree(a)) {
    CycNum c = a[k] * lead_inv;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) {
      if (!b[i].is_zero()) a[k - db + i] -= c * b[i];
    }
    a[k] = CycNum(0);
    upoly_trim(a);
    if (a.empty()) break;
  }
  upoly_trim(q);
  return {q, a};
}

UPoly upoly_monic(const UPoly& p) {
  int d = upoly_degree(p);
  if (d < 0) return {};
  CycNum inv = p[d].inverse();
  UPoly r(p.begin(), p.begin() + d + 1);
  for (auto& c : r) c *= inv;
  return r;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_monic(a);
}

UPoly upoly_squarefree(const UPoly& p) {
  UPoly g = upoly_gcd(p, upoly_derivative(p));
  return upoly_monic(upoly_divmod(p, g).first);
}

CycNum upoly_eval(const UPoly& p, const CycNum& x) {
  CycNum r(0);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
  return r;
}

namespace {

using cd = std::complex<double>;

std::vector<cd> numeric_roots(const std::vector<cd>& c) {
  // c low degree first, c.back() != 0
  const int d = static_cast<int>(c.size()) - 1;
  if (d <= 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cd> roots;
  for (int i = 0; i < d; ++i) {
    cd z = es.eigenvalues()[i];
    for (int it = 0; it < 20; ++it) {
      cd f = 0, fp = 0;
      for (int k = d; k >= 0; --k) {
        fp = fp * z + f;
        f = f * z + c[k];
      }
      if (std::abs(fp) < 1e-300) break;
      z -= f / fp;
    }
    roots.push_back(z);
  }
  return roots;
}

std::optional<Rational> rationalize(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(r);
    long long ai = static_cast<long long>(a);
    long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > 1000000) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / k1) < 1e-9 * std::max(1.0, std::abs(x))) {
      return Rational(h1, k1);
    }
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (k1 != 0 && std::abs(x - static_cast<double>(h1) / k1) < 1e-9 * std::max(1.0, std::abs(x))) {
    return Rational(h1, k1);
  }
  return std::nullopt;
}

}  // namespace

std::vector<CycNum> roots_in_field(const UPoly& p_in, int n) {
  UPoly p = upoly_squarefree(p_in);
  const int d = upoly_degree(p);
  std::vector<CycNum> found;
  if (d <= 0) return found;
  auto add_if_root = [&](const CycNum& c) {
    if (!upoly_eval(p, c).is_zero()) return;
    for (const auto& f : found) {
      if (f == c) return;
    }
    found.push_back(c);
  };
  if (d == 1) {
    add_if_root(-(p[0] / p[1]));
    return found;
  }
  long long nn = n;
  for (const auto& c : p) {
    if (!c.is_rational()) nn = lcm_ll(nn, c.conductor());
  }
  const int m = static_cast<int>(nn);
  std::vector<int> units;
  for (int j = 1; j < std::max(m, 2); ++j) {
    if (std::gcd(j, m) == 1) units.push_back(j);
  }
  const int phi = euler_phi(m);
  std::vector<int> half;  // one representative of each pair {j, -j}
  for (int j : units) {
    if (m <= 2 || j < m - j) half.push_back(j);
  }
  std::vector<std::vector<cd>> rootsets;
  for (int j : half) {
    std::vector<cd> coeffs;
    for (const auto& c : p) {
      CycNum e = c.is_rational() ? c : c.embed(m);
      coeffs.push_back(m <= 2 ? e.to_complex() : e.galois(j).to_complex());
    }
    rootsets.push_back(numeric_roots(coeffs));
  }
  // Vandermonde V[j][k] = zeta^(j k) over all units j, k < phi.
  Eigen::MatrixXcd v(phi, phi);
  for (int r = 0; r < phi; ++r) {
    for (int k = 0; k < phi; ++k) {
      double ang = 2.0 * std::numbers::pi * static_cast<double>(static_cast<long long>(units[r]) * k % m) / m;
      v(r, k) = cd(std::cos(ang), std::sin(ang));
    }
  }
  Eigen::MatrixXcd vinv = v.inverse();
  std::vector<int> choice(half.size(), 0);
  long long combos = 1;
  for (const auto& rs : rootsets) {
    combos *= static_cast<long long>(rs.size());
    if (combos > 200000) return found;
  }
  for (long long t = 0; t < combos && static_cast<int>(found.size()) < d; ++t) {
    long long rem = t;
    for (std::size_t h = 0; h < half.size(); ++h) {
      choice[h] = static_cast<int>(rem % static_cast<long long>(rootsets[h].size()));
      rem /= static_cast<long long>(rootsets[h].size());
    }
    Eigen::VectorXcd z(phi);
    for (int r = 0; r < phi; ++r) {
      int j = units[r];
      std::size_t h = 0;
      bool conj = false;
      for (; h < half.size(); ++h) {
        if (half[h] == j) break;
        if (m - half[h] == j) { conj = true; break; }
      }
      cd val = rootsets[h][choice[h]];
      z(r) = conj ? std::conj(val) : val;
    }
    Eigen::VectorXcd a = vinv * z;
    std::vector<Rational> coeffs;
    bool ok = true;
    for (int k = 0; k < phi && ok; ++k) {
      if (std::abs(a(k).imag()) > 1e-6) { ok = false; break; }
      auto q = rationalize(a(k).real());
      if (!q) ok = false; else coeffs.push_back(*q);
    }
    if (!ok) continue;
    add_if_root(CycNum::from_exponents(m, coeffs));
  }
  std::sort(found.begin(), found.end(), [](const CycNum& a, const CycNum& b) { return a.str() < b.str(); });
  return found;
}

}  // namespace finvar
