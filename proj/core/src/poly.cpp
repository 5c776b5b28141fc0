#include "finvar/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace finvar {
namespace {

constexpr int kDegShift = 56;

int var_shift(int var) { return 48 - 8 * var; }

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("polynomials support at most 7 variables");
}

void gen_monos(int nvars, int var, int left, std::vector<int>& exps, std::vector<Mono>& out) {
  if (var == nvars - 1) {
    exps[var] = left;
    out.push_back(mono_make(exps));
    return;
  }
  for (int e = left; e >= 0; --e) {
    exps[var] = e;
    gen_monos(nvars, var + 1, left - e, exps, out);
  }
}

}  // namespace

Mono mono_make(const std::vector<int>& exps) {
  check_nvars(static_cast<int>(exps.size()));
  Mono m = 0;
  int deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxDegree) throw std::invalid_argument("exponent out of range");
    deg += exps[i];
    m |= static_cast<Mono>(exps[i]) << var_shift(static_cast<int>(i));
  }
  if (deg > kMaxDegree) throw std::invalid_argument("degree out of range");
  return m | (static_cast<Mono>(deg) << kDegShift);
}

std::vector<int> mono_exps(Mono m, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = mono_exp(m, i);
  return e;
}

int mono_degree(Mono m) { return static_cast<int>(m >> kDegShift); }
int mono_exp(Mono m, int var) { return static_cast<int>((m >> var_shift(var)) & 0xff); }
Mono mono_var(int var) { return (Mono{1} << kDegShift) | (Mono{1} << var_shift(var)); }

std::vector<Mono> monomials_of_degree(int nvars, int d) {
  check_nvars(nvars);
  std::vector<Mono> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(0);
    return out;
  }
  std::vector<int> exps(nvars, 0);
  gen_monos(nvars, 0, d, exps, out);
  return out;
}

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

SparsePoly SparsePoly::constant(int nvars, const CycNum& c) {
  SparsePoly p(nvars);
  p.add_term(0, c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int var) {
  SparsePoly p(nvars);
  p.add_term(mono_var(var), CycNum(1));
  return p;
}

SparsePoly SparsePoly::monomial(int nvars, Mono m, const CycNum& c) {
  SparsePoly p(nvars);
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::power_sum(int nvars, int k) {
  SparsePoly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = k;
    p.add_term(mono_make(e), CycNum(1));
  }
  return p;
}

int SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.begin()->first);
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  for (const auto& [m, c] : terms_) {
    if (mono_degree(m) != d) return false;
  }
  return true;
}

CycNum SparsePoly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum(0) : it->second;
}

void SparsePoly::add_term(Mono m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (mono_degree(ma) + mono_degree(mb) > kMaxDegree) throw std::overflow_error("degree out of range");
      r.add_term(ma + mb, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::operator-() const { return scaled(CycNum(-1)); }

SparsePoly SparsePoly::scaled(const CycNum& c) const {
  SparsePoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

SparsePoly SparsePoly::pow(int e) const {
  SparsePoly r = constant(nvars_, CycNum(1));
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

SparsePoly SparsePoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.begin()->second.inverse());
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images) const {
  const int out_vars = images.empty() ? 0 : images[0].nvars();
  std::vector<std::vector<SparsePoly>> powers(nvars_);
  SparsePoly r(out_vars);
  for (const auto& [m, c] : terms_) {
    SparsePoly t = constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i) {
      int e = mono_exp(m, i);
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(out_vars, CycNum(1)));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      t = t * pw[e];
    }
    r += t;
  }
  return r;
}

SparsePoly SparsePoly::substitute_linear(const Mat& g) const {
  LinearSubstitution sub(g);
  return sub.apply(*this);
}

CycNum SparsePoly::eval(const Vec& point) const {
  CycNum r(0);
  for (const auto& [m, c] : terms_) {
    CycNum t = c;
    for (int i = 0; i < nvars_; ++i) {
      int e = mono_exp(m, i);
      if (e) t *= point[i].pow(e);
    }
    r += t;
  }
  return r;
}

SparsePoly SparsePoly::derivative(int var) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = mono_exp(m, var);
    if (e == 0) continue;
    r.add_term(m - mono_var(var), c.scaled(Rational(e)));
  }
  return r;
}

std::string SparsePoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << (c.is_rational() ? c.to_rational().str() : c.minimized().str());
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      int e = mono_exp(m, i);
      if (e == 0) continue;
      os << (first_var ? " * " : "*");
      first_var = false;
      os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1));
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

LinearSubstitution::LinearSubstitution(const Mat& g) : g_(g), n_(g.dim()), monomial_(g.is_monomial()) {
  if (monomial_) {
    target_.assign(n_, 0);
    scale_.assign(n_, CycNum(0));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (!g.at(i, j).is_zero()) {
          target_[i] = j;
          scale_[i] = g.at(i, j);
        }
      }
    }
  } else {
    for (int i = 0; i < n_; ++i) {
      SparsePoly f(n_);
      for (int j = 0; j < n_; ++j) f.add_term(mono_var(j), g.at(i, j));
      forms_.push_back(std::move(f));
    }
  }
}

SparsePoly LinearSubstitution::image(Mono m) {
  if (monomial_) {
    CycNum c(1);
    Mono out = m & (Mono{0xff} << kDegShift);
    for (int i = 0; i < n_; ++i) {
      int e = mono_exp(m, i);
      if (e == 0) continue;
      if (!scale_[i].is_one()) c *= scale_[i].pow(e);
      out += static_cast<Mono>(e) << var_shift(target_[i]);
    }
    return SparsePoly::monomial(n_, out, c);
  }
  if (m == 0) return SparsePoly::constant(n_, CycNum(1));
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  int k = 0;
  while (mono_exp(m, k) == 0) ++k;
  SparsePoly r = image(m - mono_var(k)) * forms_[k];
  memo_.emplace(m, r);
  return r;
}

SparsePoly LinearSubstitution::apply(const SparsePoly& f) {
  SparsePoly r(n_);
  for (const auto& [m, c] : f.terms()) {
    SparsePoly t = image(m);
    if (!c.is_one()) t = t.scaled(c);
    r += t;
  }
  return r;
}

PolyMatrix poly_matrix(const std::vector<SparsePoly>& polys) {
  std::set<Mono, std::greater<>> cols;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) cols.insert(m);
  }
  PolyMatrix pm;
  pm.columns.assign(cols.begin(), cols.end());
  std::map<Mono, int, std::greater<>> index;
  for (std::size_t i = 0; i < pm.columns.size(); ++i) index[pm.columns[i]] = static_cast<int>(i);
  for (const auto& p : polys) {
    Vec row(pm.columns.size(), CycNum(0));
    for (const auto& [m, c] : p.terms()) row[index[m]] = c;
    pm.rows.push_back(std::move(row));
  }
  return pm;
}

int poly_rank(const std::vector<SparsePoly>& polys) {
  if (polys.empty()) return 0;
  return rank(poly_matrix(polys).rows);
}

std::vector<SparsePoly> poly_echelon_basis(const std::vector<SparsePoly>& polys, int nvars) {
  std::vector<SparsePoly> out;
  if (polys.empty()) return out;
  PolyMatrix pm = poly_matrix(polys);
  Echelon e = rref(pm.rows);
  for (const auto& row : e.rows) {
    SparsePoly p(nvars);
    for (std::size_t j = 0; j < row.size(); ++j) p.add_term(pm.columns[j], row[j]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace finvar
