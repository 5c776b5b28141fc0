#include "finvar/binaryforms.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "finvar/catalog.hpp"

namespace finvar {
namespace {

Rational binom_coeff(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

}  // namespace

BinaryForm::BinaryForm(int n, std::vector<CycNum> c) : degree(n), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != n + 1) throw std::invalid_argument("binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::from_poly(const SparsePoly& p) {
  if (p.nvars() != 2 || !p.is_homogeneous()) throw std::invalid_argument("not a binary form");
  const int n = std::max(p.degree(), 0);
  std::vector<CycNum> c(n + 1, CycNum(0));
  for (const auto& [m, v] : p.terms()) c[mono_exp(m, 1)] = v;
  return BinaryForm(n, std::move(c));
}

SparsePoly BinaryForm::to_poly() const {
  SparsePoly p(2);
  for (int i = 0; i <= degree; ++i) p.add_term(mono_make({degree - i, i}), coeffs[i]);
  return p;
}

std::string BinaryForm::str() const { return to_poly().str({"t1", "t2"}); }

BinaryForm BinaryForm::scaled(const CycNum& c) const {
  BinaryForm r = *this;
  for (auto& v : r.coeffs) v *= c;
  return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.degree == b.degree && a.coeffs == b.coeffs; }

BinaryForm tetrahedral_quartic(int sign) {
  CycNum mid = sqrt_minus3().scaled(Rational(2 * (sign < 0 ? -1 : 1)));
  return BinaryForm(4, {CycNum(1), CycNum(0), mid, CycNum(0), CycNum(1)});
}

BinaryForm octahedral_sextic() {
  std::vector<CycNum> c(7, CycNum(0));
  c[1] = CycNum(1);
  c[5] = CycNum(-1);
  return BinaryForm(6, std::move(c));
}

BinaryForm icosahedral_form() {
  std::vector<CycNum> c(13, CycNum(0));
  c[1] = CycNum(1);
  c[6] = CycNum(11);
  c[11] = CycNum(-1);
  return BinaryForm(12, std::move(c));
}

BinaryForm sl2_act(const Mat& g, const BinaryForm& f) {
  if (g.dim() != 2) throw std::invalid_argument("sl2_act needs a 2x2 matrix");
  return BinaryForm::from_poly(f.to_poly().substitute_linear(g.inverse()));
}

SemiInvariance semi_invariant_character(const MatGroup& g, const BinaryForm& f) {
  SemiInvariance out;
  std::size_t lead = 0;
  while (lead < f.coeffs.size() && f.coeffs[lead].is_zero()) ++lead;
  if (lead == f.coeffs.size()) throw std::invalid_argument("zero form");
  int order = 1;
  for (std::size_t i = 0; i < g.order(); ++i) {
    BinaryForm h = sl2_act(g.element(i), f);
    CycNum chi = h.coeffs[lead] / f.coeffs[lead];
    if (!(h == f.scaled(chi))) {
      out.violating_element = i;
      out.values.clear();
      return out;
    }
    auto o = chi.root_of_unity_order();
    if (!o) {
      out.violating_element = i;
      out.values.clear();
      return out;
    }
    order = std::lcm(order, *o);
    out.values.push_back(chi);
  }
  out.ok = true;
  out.order = order;
  return out;
}

CycNum apolar_pairing(const BinaryForm& f, const BinaryForm& h) {
  if (f.degree != h.degree) throw std::invalid_argument("pairing needs forms of equal degree");
  const int n = f.degree;
  CycNum r(0);
  for (int i = 0; i <= n; ++i) {
    Rational w = Rational(i % 2 ? -1 : 1) / binom_coeff(n, i);
    r += (f.coeffs[i] * h.coeffs[n - i]).scaled(w);
  }
  return r;
}

std::vector<Check> binaryforms_checks(int trials, std::uint64_t seed) {
  CheckRecorder rec;
  const CatalogEntry t = binary_polyhedral(Polyhedral::Tetrahedral);
  const CatalogEntry o = binary_polyhedral(Polyhedral::Octahedral);
  const CatalogEntry ico = binary_polyhedral(Polyhedral::Icosahedral);
  auto order_of = [](const MatGroup& g, const BinaryForm& f) {
    const SemiInvariance s = semi_invariant_character(g, f);
    return s.ok ? std::to_string(s.order) : std::string("not semi-invariant");
  };
  rec.push(make_check("binaryforms.tetrahedral_character", "character order of the quartic under T", "3",
                      order_of(t.group, tetrahedral_quartic(1))));
  rec.push(make_check("binaryforms.octahedral_character", "character order of the sextic under O", "2",
                      order_of(o.group, octahedral_sextic())));
  rec.push(make_check("binaryforms.icosahedral_character", "character order of the degree-12 form under I", "1",
                      order_of(ico.group, icosahedral_form())));
  const CycNum z8 = CycNum::zeta(8);
  rec.push(bool_check("binaryforms.sextic_sign", "diag(zeta8, zeta8^-1) multiplies the sextic by -1",
                      sl2_act(Mat::diag({z8, z8.inverse()}), octahedral_sextic()) ==
                          octahedral_sextic().scaled(CycNum(-1))));
  const CycNum self = apolar_pairing(tetrahedral_quartic(1), tetrahedral_quartic(1));
  rec.push(make_check("binaryforms.quartic_self_pairing", "pairing of the quartic with itself", "0",
                      self.is_zero() ? "0" : self.minimized().str()));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  const MatGroup* groups[] = {&t.group, &o.group, &ico.group};
  int failures = 0;
  for (int k = 0; k < trials; ++k) {
    const MatGroup& g = *groups[k % 3];
    const int n = 2 + 2 * (k % 4);
    std::vector<CycNum> a, b;
    for (int j = 0; j <= n; ++j) {
      a.emplace_back(Rational(coef(rng)));
      b.emplace_back(Rational(coef(rng)));
    }
    const BinaryForm f(n, a), h(n, b);
    const Mat& m = g.element(std::uniform_int_distribution<std::size_t>(0, g.order() - 1)(rng));
    if (!(apolar_pairing(sl2_act(m, f), sl2_act(m, h)) == apolar_pairing(f, h))) ++failures;
  }
  rec.push(make_check("binaryforms.pairing_invariant",
                      "random triples on which the pairing changes (of " + std::to_string(trials) + ")", "0",
                      std::to_string(failures)));
  return rec.take();
}

}  // namespace finvar
