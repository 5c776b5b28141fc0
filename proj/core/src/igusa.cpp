#include "finvar/igusa.hpp"

#include <set>
#include <stdexcept>

#include "finvar/invariants.hpp"
#include "finvar/matgroup.hpp"

namespace finvar {
namespace {

constexpr int kFour = 4;
constexpr int kFive = 5;

SparsePoly var(int n, int i) { return SparsePoly::variable(n, i); }

std::string diag_str(const Mat& a) {
  if (!a.is_diagonal()) return "not diagonal";
  std::string s = "(";
  for (int i = 0; i < a.dim(); ++i) {
    const CycNum& c = a.at(i, i);
    s += (i ? "," : "") + (c.is_rational() ? c.to_rational().str() : c.minimized().str());
  }
  return s + ")";
}

// Matrices in the row-major vec basis of 2x2 matrices, where v -> a v b^{-1}
// is a (x) transpose(b^{-1}).
Mat vec_to_quaternion_basis() {
  const CycNum i = CycNum::zeta(4);
  const CycNum z(0), one(1);
  // Columns: vec(E), vec(I), vec(J), vec(K) with K = I J.
  return Mat::from_rows({{one, i, z, z}, {z, z, i, -one}, {z, z, i, one}, {one, -i, z, z}});
}

Mat det_one(const Mat& g) {
  const CycNum d = g.det();
  for (int k = 0; k < 8; ++k) {
    CycNum c = CycNum::zeta(8, k);
    if ((c.pow(kFour) * d).is_one()) return g.scaled(c);
  }
  throw std::logic_error("determinant is not an eighth root of unity");
}

// The quartic vanishes with its gradient on the span of a and b.
bool quartic_singular_on_line(const SparsePoly& rel, const Vec& a, const Vec& b) {
  std::vector<SparsePoly> pt;
  for (int k = 0; k < kFive; ++k) {
    SparsePoly p(2);
    p.add_term(mono_var(0), a[k]);
    p.add_term(mono_var(1), b[k]);
    pt.push_back(std::move(p));
  }
  if (!rel.substitute(pt).terms().empty()) return false;
  for (int k = 0; k < kFive; ++k) {
    if (!rel.derivative(k).substitute(pt).terms().empty()) return false;
  }
  return true;
}

}  // namespace

std::vector<SparsePoly> igusa_forms() {
  const SparsePoly x = var(kFour, 0), y = var(kFour, 1), z = var(kFour, 2), u = var(kFour, 3);
  auto sq = [](const SparsePoly& p) { return p * p; };
  return {sq(x) * sq(u) + sq(y) * sq(z), sq(x) * sq(z) + sq(y) * sq(u), sq(x) * sq(y) + sq(z) * sq(u),
          x.pow(4) + y.pow(4) + z.pow(4) + u.pow(4), x * y * z * u};
}

SparsePoly igusa_relation() {
  const SparsePoly f1 = var(kFive, 0), f2 = var(kFive, 1), f3 = var(kFive, 2), f4 = var(kFive, 3),
                   f5 = var(kFive, 4);
  const CycNum two(2), four(4);
  const SparsePoly f55 = f5 * f5;
  SparsePoly a = f4 + (f1 + f2 + f3).scaled(two);
  SparsePoly b = f1 * f2 * f3 - f4 * f55 + (f55 * (f1 + f2 + f3)).scaled(two);
  SparsePoly c = f1 * f2 + f2 * f3 + f3 * f1 + f55.scaled(four);
  return a * b - c * c;
}

Mat induced_form_action(const Mat& g, const std::vector<SparsePoly>& forms) {
  const int n = static_cast<int>(forms.size());
  std::vector<SparsePoly> all = forms;
  std::vector<SparsePoly> moved;
  for (const auto& f : forms) moved.push_back(f.substitute_linear(g));
  all.insert(all.end(), moved.begin(), moved.end());
  PolyMatrix pm = poly_matrix(all);
  Rows basis_t = transpose(Rows(pm.rows.begin(), pm.rows.begin() + n), static_cast<int>(pm.columns.size()));
  Mat a(n, g.conductor());
  for (int i = 0; i < n; ++i) {
    auto sol = solve(basis_t, pm.rows[n + i]);
    if (!sol) throw std::invalid_argument("the matrix does not preserve the span of the forms");
    for (int j = 0; j < n; ++j) a.set(i, j, (*sol)[j]);
  }
  return a;
}

std::vector<Mat> normalizer_generators() {
  const CycNum z(0), one(1), i = CycNum::zeta(4);
  const Mat e = Mat::identity(2);
  const Mat h = Mat::from_rows({{one, one}, {one, -one}}).scaled(inv_sqrt2());
  const Mat phase = Mat::diag({one, i});
  const Mat cnot = Mat::from_rows({{one, z, z, z}, {z, one, z, z}, {z, z, z, one}, {z, z, one, z}});
  const Mat p = vec_to_quaternion_basis();
  const Mat pinv = p.inverse();
  std::vector<Mat> out;
  for (const Mat& v : {h.kron(e), e.kron(h), phase.kron(e), e.kron(phase), cnot}) {
    out.push_back(det_one(pinv * v * p));
  }
  return out;
}

std::vector<Check> igusa_checks(const IgusaOptions& opts) {
  CheckRecorder rec;
  auto push = [&](Check c) { rec.push(std::move(c)); };

  GroupN gn = group_n_and_friends(opts.catalog);
  const MatGroup& n = gn.n.group;
  push(make_check("igusa.n_order", "order of N", "64", std::to_string(n.order())));

  const auto forms = igusa_forms();
  bool forms_invariant = true;
  for (const auto& f : forms) {
    for (const auto& g : n.generators()) forms_invariant = forms_invariant && f.substitute_linear(g) == f;
  }
  push(bool_check("igusa.forms_invariant", "f1..f5 are fixed by the generators of N", forms_invariant));

  const TruncSeries series = molien(n, opts.spanning_bound, opts.catalog.jobs);
  const auto basis4 = invariant_basis(n, 4);
  push(make_check("igusa.degree4_dim", "dimension of degree-4 invariants", "5",
                  std::to_string(basis4.size()) + (series.coeffs[4] == Rational(5) ? "" : " (molien disagrees)")));
  push(bool_check("igusa.degree4_span", "degree-4 invariants are spanned by f1..f5",
                  poly_echelon_basis(forms, kFour) == basis4));

  std::vector<WeightedPoly> gens;
  for (const auto& f : forms) gens.push_back({4, f});
  std::string spanning = "true";
  for (int d = 0; d <= opts.spanning_bound; ++d) {
    std::size_t span = 0;
    if (d % 4 == 0) span = static_cast<std::size_t>(poly_rank(weighted_products(gens, d).products));
    if (d == 0) span = 1;
    if (Rational(static_cast<long long>(span)) != series.coeffs[d]) {
      spanning = "degree " + std::to_string(d) + ": products " + std::to_string(span) + " vs molien " +
                 series.coeffs[d].str();
      break;
    }
  }
  push(make_check("igusa.molien_spanning", "products of f1..f5 span the invariants up to degree " +
                                               std::to_string(opts.spanning_bound),
                  "true", spanning));

  push(make_check("igusa.relation_degree8", "relations of weighted degree 8", "0",
                  std::to_string(relation_space(gens, 8).size())));
  push(make_check("igusa.relation_degree12_unique", "relation degree 12 unique", "1",
                  std::to_string(relation_space(gens, 12).size())));
  // The relation is quartic in the f's, so it lives in x-degree 16.
  const auto rel16 = relation_space(gens, 16);
  push(make_check("igusa.relation_degree16_unique", "relations of weighted degree 16", "1",
                  std::to_string(rel16.size())));
  const SparsePoly rel = igusa_relation();
  bool proportional = rel16.size() == 1 && poly_rank({rel16[0], rel}) == 1;
  push(bool_check("igusa.relation_matches", "the unique relation is proportional to the quartic relation",
                  proportional));
  push(bool_check("igusa.substitution_identity", "the relation vanishes identically in x, y, z, u",
                  rel.substitute(forms).terms().empty()));

  Rows jac;
  const Vec point{CycNum(1), CycNum(2), CycNum(3), CycNum(5)};
  for (int k = 0; k < 4; ++k) {
    Vec row;
    for (int v = 0; v < kFour; ++v) row.push_back(forms[k].derivative(v).eval(point));
    jac.push_back(std::move(row));
  }
  push(make_check("igusa.jacobian_rank", "rank of the Jacobian of f1..f4 at (1,2,3,5)", "4",
                  std::to_string(rank(jac))));

  const Mat s_action = induced_form_action(gn.s, forms);
  push(make_check("igusa.s_action", "S acts on f1..f5 diagonally", "(1,1,-1,-1,1)", diag_str(s_action)));

  const Vec e3{CycNum(0), CycNum(0), CycNum(1), CycNum(0), CycNum(0)};
  const Vec e4{CycNum(0), CycNum(0), CycNum(0), CycNum(1), CycNum(0)};
  {
    std::vector<SparsePoly> pt(kFive, SparsePoly(2));
    pt[2] = var(2, 0);
    pt[3] = var(2, 1);
    push(bool_check("igusa.line_on_quartic", "the line f1 = f2 = f5 = 0 lies on the quartic",
                    rel.substitute(pt).terms().empty()));
  }
  push(bool_check("igusa.line_singular", "the quartic's gradient vanishes identically on that line",
                  quartic_singular_on_line(rel, e3, e4)));

  {
    // x = (a, a, b, b, -a-b, -a-b); alpha s4 + beta s2^2 must vanish identically.
    const SparsePoly a = var(2, 0), b = var(2, 1);
    const SparsePoly c = -(a + b);
    std::vector<SparsePoly> x{a, a, b, b, c, c};
    const SparsePoly s4 = SparsePoly::power_sum(6, 4).substitute(x);
    const SparsePoly s2 = SparsePoly::power_sum(6, 2).substitute(x);
    PolyMatrix pm = poly_matrix({s4, s2 * s2});
    Rows sols = nullspace(transpose(pm.rows, static_cast<int>(pm.columns.size())), 2);
    push(make_check("igusa.pencil_unique", "quartics alpha s4 + beta s2^2 containing the fixed line", "1",
                    std::to_string(sols.size())));
  }

  {
    MatGroup sb = MatGroup::closure({gn.s, gn.b});
    PermHom hom = line_permutation_hom(sb);
    push(make_check("igusa.s_transposition", "S on the exterior-square lines", "(1,2)",
                    hom.images[*sb.index_of(gn.s)].str()));
    push(make_check("igusa.b_involution", "B on the exterior-square lines", "(1,2)(3,4)(5,6)",
                    hom.images[*sb.index_of(gn.b)].str()));
  }

  std::vector<Mat> mgens = n.generators();
  for (const auto& g : normalizer_generators()) mgens.push_back(g);
  bool all_normalize = true;
  for (const auto& g : normalizer_generators()) all_normalize = all_normalize && normalizes(g, n);
  push(bool_check("igusa.clifford_normalizes", "the Clifford-type generators normalize N", all_normalize));

  ClosureOptions copt;
  copt.cap = opts.catalog.cap;
  copt.jobs = opts.catalog.jobs;
  MatGroup m = MatGroup::closure(mgens, copt);
  push(make_check("igusa.normalizer_order", "order of the normalizer built from N and Clifford-type generators",
                  "46080", std::to_string(m.order())));
  PermHom mhom = line_permutation_hom(m);
  push(make_check("igusa.normalizer_image", "image and kernel of the map to S6", "720 / 64",
                  std::to_string(mhom.image_order) + " / " + std::to_string(mhom.kernel.order())));
  std::vector<Mat> mhom_kernel;
  for (std::size_t i = 0; i < mhom.kernel.order(); ++i) mhom_kernel.push_back(mhom.kernel.element(i));
  bool kernel_is_n = mhom.kernel.order() == n.order();
  for (const auto& g : mhom_kernel) kernel_is_n = kernel_is_n && n.contains(g);
  push(bool_check("igusa.kernel_is_n", "the kernel of the map to S6 is N", kernel_is_n));

  std::vector<Mat> induced;
  for (const auto& g : m.generators()) induced.push_back(induced_form_action(g, forms));
  MatGroup on_forms = MatGroup::closure(induced, copt);
  push(make_check("igusa.induced_group", "order of the induced action on f1..f5", "720",
                  std::to_string(on_forms.order())));

  // Orbit of the line spanned by e3, e4 under the induced action.
  std::set<std::string> lines;
  bool singular = true;
  for (std::size_t k = 0; k < on_forms.order(); ++k) {
    const Mat& g = on_forms.element(k);
    Vec a = g.apply(e3), b = g.apply(e4);
    Rows span = rref(Rows{a, b}).rows;
    std::string key;
    for (const auto& row : span) {
      for (const auto& c : row) key += c.minimized().str() + ";";
    }
    if (lines.insert(key).second) singular = singular && quartic_singular_on_line(rel, span[0], span[1]);
  }
  push(make_check("igusa.singular_lines", "orbit of the line f1 = f2 = f5 = 0", "15",
                  std::to_string(lines.size())));
  push(bool_check("igusa.singular_lines_checked", "the quartic is singular along every line of the orbit", singular));
  return rec.take();
}

}  // namespace finvar
