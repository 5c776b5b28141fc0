#include "finvar/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "finvar/catalog.hpp"
#include "finvar/split.hpp"

namespace finvar {
namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Upper-triangular row basis with positive pivots, entries above pivots reduced.
IntMatrix hermite_rows(IntMatrix a) {
  if (a.empty()) return a;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][c] != 0 && (best == rows || std::llabs(a[i][c]) < std::llabs(a[best][c]))) best = i;
      }
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        long long q = a[i][c] / a[r][c];
        for (std::size_t k = 0; k < cols; ++k) a[i][k] -= q * a[r][k];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& v : a[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      long long q = floor_div(a[i][c], a[r][c]);
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= q * a[r][k];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

long long root_exponent(const CycNum& c, int e) {
  for (int k = 0; k < e; ++k) {
    if (c == CycNum::zeta(e, k)) return k;
  }
  throw std::invalid_argument("diagonal entry is not a root of unity of the expected order");
}

Mat to_mat(const IntMatrix& a) { return Mat::from_ints(a); }

std::optional<IntMatrix> to_int(const Mat& m) {
  IntMatrix out(m.dim(), std::vector<long long>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      const CycNum& c = m.at(i, j);
      if (!c.is_rational()) return std::nullopt;
      Rational q = c.to_rational();
      if (!q.is_integer() || !q.is_small()) return std::nullopt;
      out[i][j] = q.small_num();
    }
  }
  return out;
}

long long int_trace(const IntMatrix& a) {
  long long t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

std::size_t int_group_order(const std::vector<IntMatrix>& gens, std::size_t cap) {
  const int n = static_cast<int>(gens.at(0).size());
  std::set<IntMatrix> seen{int_identity(n)};
  std::vector<IntMatrix> frontier{int_identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        IntMatrix y = int_mul(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) return seen.size();
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

IntMatrix int_identity(int n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

long long int_det(const IntMatrix& a) {
  Rational d = to_mat(a).det().to_rational();
  return d.small_num();
}

std::string int_str(const IntMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix integer_kernel(const IntMatrix& m) {
  if (m.empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  // Column operations on [M ; I]: M U = H in column echelon form.
  IntMatrix a(rows + cols, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) a[i] = m[i];
  for (std::size_t j = 0; j < cols; ++j) a[rows + j][j] = 1;
  auto col_sub = [&](std::size_t dst, std::size_t src, long long q) {
    for (auto& row : a) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows && c < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] != 0 && (best == cols || std::llabs(a[r][j]) < std::llabs(a[r][best]))) best = j;
      }
      if (best == cols) break;
      col_swap(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        col_sub(j, c, a[r][j] / a[r][c]);
        if (a[r][j] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] != 0) ++c;
  }
  IntMatrix kernel;
  for (std::size_t j = c; j < cols; ++j) {
    std::vector<long long> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = a[rows + i][j];
    kernel.push_back(std::move(v));
  }
  return hermite_rows(kernel);
}

std::vector<long long> smith_divisors(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<long long> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t) and clear.
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (bi == rows || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return out;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long long q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        long long q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      // Divisibility: fold in any trailing entry not divisible by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.push_back(std::llabs(a[t][t]));
  }
  return out;
}

MonomialLattice invariant_monomial_lattice(const DiagAction& act) {
  const int n = act.n;
  MonomialLattice out;
  long long e = 1;
  for (const auto& el : act.elements) {
    for (const auto& c : el) {
      auto o = c.root_of_unity_order();
      if (!o) throw std::invalid_argument("diagonal entries must be roots of unity");
      e = std::lcm(e, static_cast<long long>(*o));
    }
  }
  const std::size_t r = act.elements.size();
  IntMatrix m(r, std::vector<long long>(n + r, 0));
  for (std::size_t k = 0; k < r; ++k) {
    for (int i = 0; i < n; ++i) m[k][i] = root_exponent(act.elements[k][i], static_cast<int>(e));
    m[k][n + k] = e;
  }
  IntMatrix basis;
  if (r == 0) {
    basis = int_identity(n);
  } else {
    for (const auto& v : integer_kernel(m)) basis.emplace_back(v.begin(), v.begin() + n);
    basis = hermite_rows(basis);
  }
  out.basis = basis;
  out.index_det = std::llabs(int_det(basis));
  long long prod = 1;
  for (long long d : smith_divisors(basis)) prod *= d;
  out.index_smith = prod;

  // Order of the group of y-actions, by closure of the generators.
  std::set<std::vector<long long>> seen{std::vector<long long>(n, 0)};
  std::vector<std::vector<long long>> frontier{std::vector<long long>(n, 0)};
  std::vector<std::vector<long long>> gens;
  for (std::size_t k = 0; k < r; ++k) gens.emplace_back(m[k].begin(), m[k].begin() + n);
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        std::vector<long long> y(n);
        for (int i = 0; i < n; ++i) y[i] = (x[i] + g[i]) % e;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  out.character_group_order = static_cast<long long>(seen.size());
  return out;
}

IntMatrix pi0_of_perm(const Perm& sigma) {
  const int n = sigma.degree() - 1;
  IntMatrix m(n, std::vector<long long>(n, 0));
  const int last = sigma(n + 1);
  for (int i = 1; i <= n; ++i) {
    if (sigma(i) <= n) m[i - 1][sigma(i) - 1] += 1;
    if (last <= n) m[i - 1][last - 1] -= 1;
  }
  return m;
}

Perm monomial_permutation(const Mat& g) {
  if (!g.is_monomial()) throw std::invalid_argument("matrix is not monomial");
  std::vector<int> img(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) {
      if (!g.at(i, j).is_zero()) img[i] = j + 1;
    }
  }
  return Perm(img);
}

ImprimitiveReduction induced_integer_rep(const MatGroup& g) {
  ImprimitiveReduction out;
  const int dim = g.dim();
  std::set<Perm> gamma;
  out.a.n = dim - 1;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Mat el = g.element(i);
    Perm s = monomial_permutation(el);
    gamma.insert(s);
    if (s.is_identity()) {
      ++out.a_order;
      std::vector<CycNum> ys;
      const CycNum last_inv = el.at(dim - 1, dim - 1).inverse();
      for (int k = 0; k < dim - 1; ++k) ys.push_back(el.at(k, k) * last_inv);
      out.a.elements.push_back(std::move(ys));
    }
  }
  out.gamma.assign(gamma.begin(), gamma.end());
  out.lattice = invariant_monomial_lattice(out.a);

  auto conj = [&](const IntMatrix& p0) { return restrict_to_lattice(p0, out.lattice.basis); };
  out.lattice_stable = true;
  out.traces_agree = true;
  for (const auto& s : out.gamma) {
    IntMatrix p0 = pi0_of_perm(s);
    auto p = conj(p0);
    if (!p) {
      out.lattice_stable = false;
      continue;
    }
    out.traces_agree = out.traces_agree && int_trace(*p) == int_trace(p0);
  }
  if (!out.lattice_stable) throw std::logic_error("invariant-monomial lattice is not stable under the permutations");
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const std::string name = "g" + std::to_string(k + 1);
    IntMatrix p0 = pi0_of_perm(monomial_permutation(g.generators()[k]));
    out.pi0.generator_names.push_back(name);
    out.pi0.matrices.push_back(p0);
    out.pi.generator_names.push_back(name);
    out.pi.matrices.push_back(*conj(p0));
  }
  return out;
}

std::optional<IntMatrix> restrict_to_lattice(const IntMatrix& pi0, const IntMatrix& basis) {
  const Mat b = to_mat(basis);
  return to_int(b * to_mat(pi0) * b.inverse());
}

std::optional<A4Reduction> a4_reduction(const ImprimitiveReduction& r, int entry_bound) {
  if (r.gamma.size() != 12 || r.a.n != 3) return std::nullopt;
  const Perm theta = Perm::from_cycles(4, {{1, 2, 3}});
  const Perm delta = Perm::from_cycles(4, {{1, 2}, {3, 4}});
  if (!std::binary_search(r.gamma.begin(), r.gamma.end(), theta) ||
      !std::binary_search(r.gamma.begin(), r.gamma.end(), delta)) {
    return std::nullopt;
  }
  A4Reduction out;
  out.pi0_theta = pi0_of_perm(theta);
  out.pi0_delta = pi0_of_perm(delta);
  out.pi_theta = *restrict_to_lattice(out.pi0_theta, r.lattice.basis);
  out.pi_delta = *restrict_to_lattice(out.pi0_delta, r.lattice.basis);
  out.pi0_presentation = a4_presentation_check(out.pi0_theta, out.pi0_delta);
  out.pi_presentation = a4_presentation_check(out.pi_theta, out.pi_delta);
  out.pi_class = classify_gl3z(out.pi_theta, out.pi_delta, gamma_candidates(), entry_bound);
  out.pi0_class = classify_gl3z(out.pi0_theta, out.pi0_delta, gamma_candidates(), entry_bound);
  return out;
}

bool a4_presentation_check(const IntMatrix& theta, const IntMatrix& delta) {
  const IntMatrix id = int_identity(static_cast<int>(theta.size()));
  const IntMatrix t3 = int_mul(int_mul(theta, theta), theta);
  const IntMatrix d2 = int_mul(delta, delta);
  const IntMatrix td = int_mul(theta, delta);
  const IntMatrix td3 = int_mul(int_mul(td, td), td);
  if (!(t3 == id && d2 == id && td3 == id)) return false;
  return int_group_order({theta, delta}, 100) == 12;
}

std::vector<GammaCandidate> gamma_candidates() {
  const IntMatrix theta{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  return {
      {"Gamma9", theta, {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}},
      {"Gamma10", theta, {{0, -1, 1}, {0, -1, 0}, {1, -1, 0}}},
      {"Gamma11", theta, {{-1, -1, -1}, {0, 0, 1}, {0, 1, 0}}},
  };
}

Classification classify_gl3z(const IntMatrix& theta, const IntMatrix& delta,
                             const std::vector<GammaCandidate>& candidates, int entry_bound) {
  Classification out;
  const int n = static_cast<int>(theta.size());
  const int nn = n * n;
  for (const auto& cand : candidates) {
    // Linear conditions U P = C U on the n*n entries of U.
    Rows eqs;
    for (const auto& [p, c] : {std::pair{theta, cand.theta}, std::pair{delta, cand.delta}}) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Vec row(nn, CycNum(0));
          for (int k = 0; k < n; ++k) {
            row[i * n + k] += CycNum(p[k][j]);
            row[k * n + j] -= CycNum(c[i][k]);
          }
          eqs.push_back(std::move(row));
        }
      }
    }
    Echelon kernel = rref(nullspace(eqs, nn));
    const std::size_t dims = kernel.rows.size();
    if (dims == 0) continue;
    // Enumerate the entries at the pivot positions; the rest are determined.
    std::vector<long long> coeff(dims, -entry_bound);
    while (true) {
      IntMatrix u(n, std::vector<long long>(n));
      bool ok = true;
      for (int idx = 0; idx < nn && ok; ++idx) {
        CycNum v(0);
        for (std::size_t k = 0; k < dims; ++k) v += kernel.rows[k][idx] * CycNum(coeff[k]);
        Rational q = v.to_rational();
        ok = q.is_integer() && q.is_small() && std::llabs(q.small_num()) <= entry_bound;
        if (ok) u[idx / n][idx % n] = q.small_num();
      }
      if (ok && std::llabs(int_det(u)) == 1) {
        out.label = cand.label;
        out.conjugator = u;
        return out;
      }
      std::size_t k = dims;
      while (k > 0 && coeff[k - 1] == entry_bound) coeff[--k] = -entry_bound;
      if (k == 0) break;
      ++coeff[k - 1];
    }
  }
  return out;
}

RatFunc RatFunc::poly(const SparsePoly& p) {
  return RatFunc{p, SparsePoly::constant(p.nvars(), CycNum(1))};
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return {num * o.den + o.num * den, den * o.den}; }
RatFunc RatFunc::operator-(const RatFunc& o) const { return {num * o.den - o.num * den, den * o.den}; }
RatFunc RatFunc::operator*(const RatFunc& o) const { return {num * o.num, den * o.den}; }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num.terms().empty()) throw std::domain_error("division by the zero rational function");
  return {num * o.den, den * o.num};
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
  const int nv = images.at(0).num.nvars();
  auto eval_poly = [&](const SparsePoly& p) {
    RatFunc acc{SparsePoly(nv), SparsePoly::constant(nv, CycNum(1))};
    for (const auto& [m, c] : p.terms()) {
      RatFunc t = poly(SparsePoly::constant(nv, c));
      for (int i = 0; i < p.nvars(); ++i) {
        for (int e = mono_exp(m, i); e > 0; --e) t = t * images[i];
      }
      acc = acc + t;
    }
    return acc;
  };
  return eval_poly(num) / eval_poly(den);
}

bool RatFunc::equals(const RatFunc& o) const { return num * o.den == o.num * den; }

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  RationalMap out;
  for (const auto& f : outer) out.push_back(f.substitute(inner));
  return out;
}

bool is_identity_map(const RationalMap& m) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    if (!m[i].equals(RatFunc::poly(SparsePoly::variable(n, i)))) return false;
  }
  return true;
}

namespace {

RatFunc zvar(int i) { return RatFunc::poly(SparsePoly::variable(3, i)); }
RatFunc zconst(const CycNum& c) { return RatFunc::poly(SparsePoly::constant(3, c)); }

// z' = (z + 1) / (z - 1), coordinatewise.
RationalMap cayley(const RationalMap& z) {
  RationalMap out;
  for (const auto& f : z) out.push_back((f + zconst(CycNum(1))) / (f - zconst(CycNum(1))));
  return out;
}

}  // namespace

RationalMap gamma9_theta() { return {zvar(1), zvar(2), zvar(0)}; }

RationalMap gamma9_delta(const CycNum& b, const CycNum& c) {
  return {zconst(b) / zvar(0), zconst(c) * zvar(1), zconst(CycNum(1)) / zvar(2)};
}

bool gamma9_relations_hold(int b, int c) {
  const RationalMap t = gamma9_theta();
  const RationalMap d = gamma9_delta(CycNum(b), CycNum(c));
  const RationalMap td = compose(t, d);
  return is_identity_map(compose(t, compose(t, t))) && is_identity_map(compose(d, d)) &&
         is_identity_map(compose(td, compose(td, td)));
}

Gamma9Normalization normalize_gamma9(const CycNum& a1, const CycNum& a2, const CycNum& a3, const CycNum& b,
                                     const CycNum& c, const CycNum& b_prime) {
  Gamma9Normalization out;
  if (!(a1 * a2 * a3).is_one()) {
    out.obstruction = "a1 a2 a3 != 1 (theta does not have order 3)";
    return out;
  }
  // lambda3^2 b' = 1 with lambda3 a root of unity.
  auto ord = b_prime.root_of_unity_order();
  if (!ord) {
    out.obstruction = "b' is not a root of unity";
    return out;
  }
  const CycNum inv = b_prime.inverse();
  std::optional<CycNum> l3;
  for (int k = 0; k < 2 * *ord && !l3; ++k) {
    CycNum r = CycNum::zeta(2 * *ord, k);
    if (r * r == inv) l3 = r;
  }
  if (!l3) {
    out.obstruction = "no square root of 1/b'";
    return out;
  }
  // w_i = lambda_i z_i: theta gives w1 -> (lambda1 a1 / lambda2) w2, etc.
  const CycNum l1 = *l3 * (a1 * a2).inverse();
  const CycNum l2 = l1 * a1;
  out.lambda = {l1.minimized(), l2.minimized(), l3->minimized()};
  out.b = (l1 * l1 * b).minimized();
  out.c = c.minimized();
  out.ok = true;
  return out;
}

std::vector<Check> verify_case_gamma9(int b) {
  std::vector<Check> out;
  const std::string p = "gamma9_b" + std::string(b > 0 ? "plus" : "minus") + ".";
  if (b == 1) {
    bool rule = true;
    for (int bb : {1, -1}) {
      for (int cc : {1, -1}) rule = rule && gamma9_relations_hold(bb, cc) == (bb == cc);
    }
    out.push_back(bool_check(p + "relations_iff_b_eq_c", "A4 relations hold exactly when b = c, for b, c = +-1", rule));

    const RationalMap z{zvar(0), zvar(1), zvar(2)};
    const RationalMap zp = cayley(z);
    const RationalMap theta_img = cayley(gamma9_theta());
    const RationalMap delta_img = cayley(gamma9_delta(CycNum(1), CycNum(1)));
    const RationalMap theta_want{zp[1], zp[2], zp[0]};
    const RatFunc minus = zconst(CycNum(-1));
    const RationalMap delta_want{minus * zp[0], zp[1], minus * zp[2]};
    bool theta_ok = true, delta_ok = true;
    for (int i = 0; i < 3; ++i) {
      theta_ok = theta_ok && theta_img[i].equals(theta_want[i]);
      delta_ok = delta_ok && delta_img[i].equals(delta_want[i]);
    }
    out.push_back(bool_check(p + "theta_linear", "after z' = (z+1)/(z-1), theta acts as (z2', z3', z1')", theta_ok));
    out.push_back(bool_check(p + "delta_linear", "after z' = (z+1)/(z-1), delta acts as (-z1', z2', -z3')", delta_ok));
    return out;
  }

  auto [theta, delta] = gamma9_segre_generators();
  // The matrices must reproduce the action on the Segre monomials, up to a common factor.
  const RatFunc one = zconst(CycNum(1));
  const std::vector<RatFunc> segre{zvar(0) * zvar(1) * zvar(2), zvar(0), zvar(1), zvar(2),
                                   zvar(1) * zvar(2), zvar(0) * zvar(2), zvar(0) * zvar(1), one};
  bool matches = true;
  for (const auto& [mat, map] : {std::pair{theta, gamma9_theta()}, std::pair{delta, gamma9_delta(CycNum(-1), CycNum(-1))}}) {
    std::vector<RatFunc> moved, linear;
    for (int i = 0; i < 8; ++i) {
      moved.push_back(segre[i].substitute(map));
      RatFunc acc = zconst(CycNum(0));
      for (int j = 0; j < 8; ++j) {
        if (!mat.at(i, j).is_zero()) acc = acc + zconst(mat.at(i, j)) * segre[j];
      }
      linear.push_back(acc);
    }
    for (int i = 0; i < 8; ++i) {
      for (int k = i + 1; k < 8; ++k) matches = matches && (moved[i] * linear[k]).equals(moved[k] * linear[i]);
    }
  }
  out.push_back(bool_check(p + "segre_matrices", "the 8x8 matrices induce the b = -1 action on the Segre coordinates",
                           matches));
  MatGroup g = MatGroup::closure({theta, delta});
  out.push_back(make_check(p + "order", "order of the group generated by the 8x8 matrices", "24",
                           std::to_string(g.order())));
  SplitOptions sopt;
  sopt.field_conductor = 12;
  std::string dims;
  bool faithful = true;
  try {
    auto parts = equivariant_split(g, sopt);
    std::vector<int> ds;
    for (const auto& s : parts) {
      ds.push_back(s.dim());
      faithful = faithful && acts_faithfully(g, s.basis);
    }
    std::sort(ds.begin(), ds.end());
    for (std::size_t i = 0; i < ds.size(); ++i) dims += (i ? "+" : "") + std::to_string(ds[i]);
  } catch (const std::exception& e) {
    dims = std::string("split failed: ") + e.what();
    faithful = false;
  }
  out.push_back(make_check(p + "split", "decomposition of the 8-dimensional representation", "2+2+2+2", dims));
  out.push_back(bool_check(p + "split_faithful", "every summand is faithful", faithful));
  return out;
}

std::vector<Check> monomial_checks(int entry_bound) {
  CheckRecorder rec;
  const CycNum i = CycNum::zeta(4);
  const MonomialLattice sign = invariant_monomial_lattice({3, {{CycNum(-1), CycNum(-1), CycNum(1)}}});
  rec.push(make_check("monomial.lattice_sign", "invariant lattice of diag(-1,-1,1)", "[[1,1,0],[0,2,0],[0,0,1]] index 2",
                      int_str(sign.basis) + " index " + std::to_string(sign.index_det)));
  const MonomialLattice four = invariant_monomial_lattice({3, {{i, i, CycNum(1)}}});
  rec.push(make_check("monomial.lattice_order4", "index of the invariant lattice of diag(i,i,1)", "4",
                      std::to_string(four.index_det)));
  rec.push(bool_check("monomial.lattice_indices_agree",
                      "determinant index, Smith index and character group order agree",
                      sign.indices_agree() && four.indices_agree()));

  bool gammas = true;
  for (const auto& c : gamma_candidates()) gammas = gammas && a4_presentation_check(c.theta, c.delta);
  rec.push(bool_check("monomial.gamma_presentations", "Gamma9, Gamma10, Gamma11 satisfy the A4 presentation", gammas));

  const CatalogEntry* witness = nullptr;
  const auto examples = imprimitive_examples();
  for (const auto& e : examples) {
    if (e.name == "imprimitive_a4_1_4") witness = &e;
  }
  if (witness == nullptr) throw std::logic_error("imprimitive_a4_1_4 missing from the catalog");
  const ImprimitiveReduction r = induced_integer_rep(witness->group);
  rec.push(make_check("monomial.a4_line_group", "order of the line permutation group", "12",
                      std::to_string(r.gamma.size())));
  rec.push(bool_check("monomial.a4_lattice_stable", "the invariant lattice is stable under pi0", r.lattice_stable));
  rec.push(make_check("monomial.a4_lattice_index", "lattice index vs order of the diagonal kernel's character group",
                      std::to_string(r.lattice.character_group_order), std::to_string(r.lattice.index_det)));
  rec.push(bool_check("monomial.a4_indices_agree", "three index computations agree", r.lattice.indices_agree()));
  rec.push(bool_check("monomial.a4_traces", "pi and pi0 have equal traces on every element", r.traces_agree));
  const auto a4 = a4_reduction(r, entry_bound);
  rec.push(bool_check("monomial.a4_reduction", "theta = (1,2,3) and delta = (1,2)(3,4) found", a4.has_value()));
  if (a4) {
    rec.push(make_check("monomial.pi0_theta", "pi0 of the 3-cycle", "[[0,1,0],[0,0,1],[1,0,0]]", int_str(a4->pi0_theta)));
    rec.push(make_check("monomial.pi0_delta", "pi0 of the double transposition", "[[0,1,-1],[1,0,-1],[0,0,-1]]",
                        int_str(a4->pi0_delta)));
    rec.push(bool_check("monomial.pi0_presentation", "pi0 satisfies the A4 presentation", a4->pi0_presentation));
    rec.push(bool_check("monomial.pi_presentation", "pi satisfies the A4 presentation", a4->pi_presentation));
    rec.push(make_check("monomial.pi0_class", "GL(3,Z) class of pi0", "Gamma10", a4->pi0_class.label));
    rec.push(make_check("monomial.pi_class", "GL(3,Z) class of pi", "classified",
                        a4->pi_class.label == "unclassified" ? "unclassified" : "classified"));
  }
  for (int b : {1, -1}) {
    for (auto& c : verify_case_gamma9(b)) {
      c.id = "monomial." + c.id;
      rec.push(std::move(c));
    }
  }
  return rec.take();
}

}  // namespace finvar
