#include "finvar/invariants.hpp"

#include <map>
#include <set>
#include <sstream>

#include "parallel.hpp"

namespace finvar {
namespace {

// Action of a monomial matrix x_i -> c_i x_target(i) on monomials.
struct MonoAction {
  std::vector<int> target;
  std::vector<CycNum> scale;

  explicit MonoAction(const Mat& g) : target(g.dim()), scale(g.dim(), CycNum(0)) {
    for (int i = 0; i < g.dim(); ++i) {
      for (int j = 0; j < g.dim(); ++j) {
        if (!g.at(i, j).is_zero()) {
          target[i] = j;
          scale[i] = g.at(i, j);
        }
      }
    }
  }

  Mono shape(Mono m) const {
    std::vector<int> out(target.size(), 0);
    for (std::size_t i = 0; i < target.size(); ++i) out[target[i]] += mono_exp(m, static_cast<int>(i));
    return mono_make(out);
  }

  CycNum factor(Mono m) const {
    CycNum c(1);
    for (std::size_t i = 0; i < target.size(); ++i) {
      int e = mono_exp(m, static_cast<int>(i));
      if (e && !scale[i].is_one()) c *= scale[i].pow(e);
    }
    return c;
  }
};

bool is_monomial_group(const MatGroup& g) {
  for (const auto& m : g.generators()) {
    if (!m.is_monomial()) return false;
  }
  return true;
}

std::vector<MonoAction> mono_actions(const MatGroup& g) {
  std::vector<MonoAction> acts;
  for (std::size_t i = 0; i < g.order(); ++i) acts.emplace_back(g.element(i));
  return acts;
}

SparsePoly reynolds_monomial(const std::vector<MonoAction>& acts, int nvars, const SparsePoly& f) {
  SparsePoly r(nvars);
  for (const auto& a : acts) {
    for (const auto& [m, c] : f.terms()) r.add_term(a.shape(m), c * a.factor(m));
  }
  return r.scaled(CycNum(Rational(1, static_cast<long long>(acts.size()))));
}

std::string poly_key(const std::vector<CycNum>& p) {
  std::string k;
  for (const auto& c : p) {
    k += c.str();
    k += ';';
  }
  return k;
}

void weighted_exponents(const std::vector<int>& w, std::size_t i, int left, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (i == w.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int e = left / w[i]; e >= 0; --e) {
    cur[i] = e;
    weighted_exponents(w, i + 1, left - e * w[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::string TruncSeries::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i].str();
  os << ']';
  return os.str();
}

TruncSeries TruncSeries::weighted_hilbert(const std::vector<int>& degrees, int bound) {
  TruncSeries s;
  s.coeffs.assign(bound + 1, Rational(0));
  s.coeffs[0] = Rational(1);
  for (int d : degrees) {
    for (int k = d; k <= bound; ++k) s.coeffs[k] += s.coeffs[k - d];
  }
  return s;
}

std::vector<std::vector<CycNum>> element_char_polys(const MatGroup& g, int jobs) {
  std::vector<std::vector<CycNum>> out(g.order());
  detail::parallel_for(jobs, g.order(), [&](std::size_t i) { out[i] = g.element(i).char_poly(); });
  return out;
}

TruncSeries molien_from_char_polys(const std::vector<std::vector<CycNum>>& polys, int bound) {
  std::map<std::string, std::pair<const std::vector<CycNum>*, long long>> classes;
  for (const auto& p : polys) {
    auto [it, fresh] = classes.try_emplace(poly_key(p), &p, 0);
    ++it->second.second;
  }
  std::vector<CycNum> sum(bound + 1, CycNum(0));
  for (const auto& [key, entry] : classes) {
    const auto& c = *entry.first;
    const int n = static_cast<int>(c.size()) - 1;
    // det(1 - t g) has coefficient c[n - k] at t^k.
    std::vector<CycNum> s(bound + 1, CycNum(0));
    s[0] = CycNum(1);
    for (int k = 1; k <= bound; ++k) {
      CycNum acc(0);
      for (int j = 1; j <= std::min(k, n); ++j) {
        if (!c[n - j].is_zero() && !s[k - j].is_zero()) acc += c[n - j] * s[k - j];
      }
      s[k] = -acc;
    }
    for (int k = 0; k <= bound; ++k) sum[k] += s[k].scaled(Rational(entry.second));
  }
  TruncSeries out;
  const Rational inv_order(1, static_cast<long long>(polys.size()));
  for (int k = 0; k <= bound; ++k) {
    CycNum v = sum[k].scaled(inv_order);
    if (!v.is_rational()) throw std::logic_error("Molien coefficient is not rational");
    out.coeffs.push_back(v.to_rational());
  }
  return out;
}

TruncSeries molien(const MatGroup& g, int bound, int jobs) {
  return molien_from_char_polys(element_char_polys(g, jobs), bound);
}

SparsePoly reynolds(const MatGroup& g, const SparsePoly& f) {
  const int n = g.dim();
  if (is_monomial_group(g)) return reynolds_monomial(mono_actions(g), n, f);
  SparsePoly r(n);
  for (std::size_t i = 0; i < g.order(); ++i) {
    LinearSubstitution sub(g.element(i));
    r += sub.apply(f);
  }
  return r.scaled(CycNum(Rational(1, static_cast<long long>(g.order()))));
}

std::vector<SparsePoly> invariant_basis(const MatGroup& g, int d) {
  const int n = g.dim();
  const std::vector<Mono> monos = monomials_of_degree(n, d);
  if (is_monomial_group(g)) {
    std::vector<MonoAction> gens;
    for (const auto& m : g.generators()) gens.emplace_back(m);
    const std::vector<MonoAction> acts = mono_actions(g);
    std::set<Mono> seen;
    std::vector<SparsePoly> out;
    for (Mono m : monos) {
      if (seen.count(m)) continue;
      std::vector<Mono> orbit{m};
      seen.insert(m);
      for (std::size_t h = 0; h < orbit.size(); ++h) {
        for (const auto& a : gens) {
          Mono img = a.shape(orbit[h]);
          if (seen.insert(img).second) orbit.push_back(img);
        }
      }
      SparsePoly r = reynolds_monomial(acts, n, SparsePoly::monomial(n, m));
      if (!r.is_zero()) out.push_back(r.monic());
    }
    return out;
  }
  std::vector<SparsePoly> rows(monos.size(), SparsePoly(n));
  for (std::size_t i = 0; i < g.order(); ++i) {
    LinearSubstitution sub(g.element(i));
    for (std::size_t j = 0; j < monos.size(); ++j) rows[j] += sub.image(monos[j]);
  }
  std::vector<SparsePoly> nonzero;
  for (auto& r : rows) {
    if (!r.is_zero()) nonzero.push_back(std::move(r));
  }
  return poly_echelon_basis(nonzero, n);
}

WeightedMonomials weighted_products(const std::vector<WeightedPoly>& gens, int d) {
  WeightedMonomials out;
  if (gens.empty()) return out;
  std::vector<int> w;
  for (const auto& g : gens) w.push_back(g.degree);
  std::vector<int> cur(gens.size(), 0);
  weighted_exponents(w, 0, d, cur, out.exponents);
  const int nvars = gens[0].poly.nvars();
  std::vector<std::vector<SparsePoly>> powers(gens.size());
  for (const auto& e : out.exponents) {
    SparsePoly p = SparsePoly::constant(nvars, CycNum(1));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(SparsePoly::constant(nvars, CycNum(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * gens[i].poly);
      p = p * pw[e[i]];
    }
    out.products.push_back(std::move(p));
  }
  return out;
}

GeneratorSearch algebra_generators(const MatGroup& g, int dmax, int check_until) {
  if (check_until < 0) check_until = 2 * dmax;
  GeneratorSearch res;
  for (int d = 1; d <= dmax; ++d) {
    std::vector<SparsePoly> basis = invariant_basis(g, d);
    if (basis.empty()) continue;
    std::vector<SparsePoly> span = weighted_products(res.generators, d).products;
    int r = poly_rank(span);
    for (const auto& b : basis) {
      span.push_back(b);
      int r2 = poly_rank(span);
      if (r2 > r) {
        res.generators.push_back({d, b});
        r = r2;
      } else {
        span.pop_back();
      }
    }
  }
  if (check_until > dmax) {
    TruncSeries ms = molien(g, check_until);
    for (int d = dmax + 1; d <= check_until; ++d) {
      const Rational want = ms.coeffs[d];
      int have = res.generators.empty() ? (d == 0 ? 1 : 0) : poly_rank(weighted_products(res.generators, d).products);
      if (Rational(have) != want) {
        res.exhausted = false;
        res.warning = "Molien coefficient " + want.str() + " at degree " + std::to_string(d) +
                      " exceeds the span of generator products (" + std::to_string(have) + ")";
        break;
      }
    }
  }
  return res;
}

std::vector<SparsePoly> relation_space(const std::vector<WeightedPoly>& gens, int d) {
  WeightedMonomials wm = weighted_products(gens, d);
  std::vector<SparsePoly> out;
  if (wm.products.empty()) return out;
  PolyMatrix pm = poly_matrix(wm.products);
  const int k = static_cast<int>(gens.size());
  const int ncols = static_cast<int>(wm.products.size());
  Rows kernel;
  if (pm.columns.empty()) {
    for (int j = 0; j < ncols; ++j) {
      Vec v(ncols, CycNum(0));
      v[j] = CycNum(1);
      kernel.push_back(v);
    }
  } else {
    kernel = nullspace(transpose(pm.rows, static_cast<int>(pm.columns.size())), ncols);
  }
  std::vector<SparsePoly> rel;
  for (const auto& v : kernel) {
    SparsePoly p(k);
    for (int j = 0; j < ncols; ++j) p.add_term(mono_make(wm.exponents[j]), v[j]);
    rel.push_back(std::move(p));
  }
  return poly_echelon_basis(rel, k);
}

bool is_reflection(const Mat& g) { return (g - Mat::identity(g.dim(), g.conductor())).rank() == 1; }

std::size_t count_reflections(const MatGroup& g) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < g.order(); ++i) c += is_reflection(g.element(i)) ? 1 : 0;
  return c;
}

StDegreeReport verify_st_degrees(const MatGroup& g, const std::vector<int>& degrees, int bound, int jobs) {
  StDegreeReport rep;
  rep.order = g.order();
  rep.molien = molien(g, bound, jobs);
  rep.checks.push_back(make_check("molien", "Molien series equals the product of 1/(1-t^d) to degree " +
                                                std::to_string(bound),
                                  TruncSeries::weighted_hilbert(degrees, bound).str(), rep.molien.str()));
  unsigned long long prod = 1;
  long long refl_expected = 0;
  for (int d : degrees) {
    prod *= static_cast<unsigned long long>(d);
    refl_expected += d - 1;
  }
  rep.checks.push_back(make_check("degree_product", "product of degrees equals the group order",
                                  std::to_string(prod), std::to_string(g.order())));

  std::vector<uint8_t> refl(g.order(), 0);
  detail::parallel_for(jobs, g.order(), [&](std::size_t i) { refl[i] = is_reflection(g.element(i)) ? 1 : 0; });
  std::vector<Mat> reflections;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (refl[i]) reflections.push_back(g.element(i));
  }
  rep.reflections = reflections.size();
  rep.checks.push_back(make_check("reflection_count", "sum of (degree - 1) equals the number of reflections",
                                  std::to_string(refl_expected), std::to_string(rep.reflections)));

  std::size_t generated = reflections.empty() ? 1 : 0;
  std::vector<Mat> chosen;
  std::optional<MatGroup> h;
  ClosureOptions opts;
  opts.jobs = jobs;
  for (const auto& r : reflections) {
    if (h && h->contains(r)) continue;
    chosen.push_back(r);
    h = MatGroup::closure(chosen, opts);
    generated = h->order();
    if (generated == g.order()) break;
  }
  rep.checks.push_back(make_check("reflection_generated", "the reflections generate the whole group",
                                  std::to_string(g.order()), std::to_string(generated)));
  return rep;
}

int quotient_invariant_dims(const MatGroup& g, const std::vector<SparsePoly>& modded, int d) {
  const int total = static_cast<int>(invariant_basis(g, d).size());
  std::vector<SparsePoly> ideal_part;
  for (const auto& s : modded) {
    const int k = s.degree();
    if (k < 0 || k > d) continue;
    for (const auto& b : invariant_basis(g, d - k)) ideal_part.push_back(b * s);
  }
  return total - poly_rank(ideal_part);
}

}  // namespace finvar
