#include "finvar/catalog.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <unordered_map>

#include "finvar_embedded_data.hpp"

namespace finvar {
namespace {

const CycNum kI = CycNum::zeta(4);

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Mat e2() { return Mat::identity(2); }

bool all_true(const std::vector<bool>& v) {
  for (bool b : v) {
    if (!b) return false;
  }
  return true;
}

// Coordinates of a 2x2 matrix in the basis E, I, J, K.
Vec quat_coords(const Mat& v) {
  const CycNum half(Rational(1, 2));
  CycNum p = v.at(0, 0), q = v.at(0, 1), r = v.at(1, 0), s = v.at(1, 1);
  CycNum inv_2i = (CycNum(2) * kI).inverse();
  return {(p + s) * half, (p - s) * inv_2i, (q + r) * inv_2i, (r - q) * half};
}

// c * m for a scalar c, or nullopt.
std::optional<CycNum> scalar_ratio(const Mat& a, const Mat& b) {
  int pi = -1, pj = -1;
  for (int i = 0; i < b.dim() && pi < 0; ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      if (!b.at(i, j).is_zero()) {
        pi = i;
        pj = j;
        break;
      }
    }
  }
  if (pi < 0) return std::nullopt;
  CycNum c = a.at(pi, pj) / b.at(pi, pj);
  if (!(a == b.scaled(c))) return std::nullopt;
  return c;
}

// x -> M(x) along a breadth-first tree of the Cayley graph of <s, w> in S7;
// every edge x -> x g must satisfy M(x) M(g) = c M(x g).
struct CayleyCheck {
  std::size_t group_order = 0;
  bool consistent = true;
};

CayleyCheck cayley_consistency(const Perm& s, const Perm& w, const Mat& ms, const Mat& mw) {
  const Perm gens[2] = {s, w};
  const Mat mats[2] = {ms, mw};
  std::unordered_map<Perm, std::size_t> index;
  std::vector<Perm> perms{Perm::identity(s.degree())};
  std::vector<Mat> lifts{Mat::identity(ms.dim())};
  index.emplace(perms[0], 0);
  CayleyCheck out;
  for (std::size_t i = 0; i < perms.size() && out.consistent; ++i) {
    for (int g = 0; g < 2; ++g) {
      Perm y = perms[i] * gens[g];
      Mat my = lifts[i] * mats[g];
      auto it = index.find(y);
      if (it == index.end()) {
        index.emplace(y, perms.size());
        perms.push_back(y);
        lifts.push_back(my);
      } else if (!scalar_ratio(my, lifts[it->second])) {
        out.consistent = false;
      }
    }
  }
  if (out.consistent) {
    out.group_order = perms.size();
  } else {
    out.group_order = perm_closure({s, w}, s.degree()).size();
  }
  return out;
}

}  // namespace

CatalogEntry make_entry(std::string name, std::vector<Mat> gens, std::size_t expected_order,
                        std::size_t expected_scalar_quotient, bool special_linear, std::string provenance,
                        const CatalogOptions& opts, ClosureOptions closure) {
  CatalogEntry e;
  e.name = std::move(name);
  e.provenance = std::move(provenance);
  e.generators = std::move(gens);
  e.expected_order = expected_order;
  e.expected_scalar_quotient = expected_scalar_quotient;
  e.special_linear = special_linear;
  closure.cap = opts.cap;
  closure.jobs = opts.jobs;
  auto t0 = std::chrono::steady_clock::now();
  e.group = MatGroup::closure(e.generators, closure);
  Check order = make_check(e.name + ".order", "order of the closure", std::to_string(expected_order),
                           std::to_string(e.group.order()));
  order.seconds = seconds_since(t0);
  if (expected_order == 0) order.status = Status::Skipped;
  e.checks.push_back(order);
  e.scalar_quotient = scalar_subgroup(e.group).quotient_order;
  if (expected_scalar_quotient) {
    e.checks.push_back(make_check(e.name + ".scalar_quotient", "order modulo scalar matrices",
                                  std::to_string(expected_scalar_quotient), std::to_string(e.scalar_quotient)));
  }
  if (special_linear) {
    bool ok = true;
    for (const auto& g : e.generators) ok = ok && g.det().is_one();
    e.checks.push_back(bool_check(e.name + ".det_one", "every generator has determinant 1", ok));
  }
  return e;
}

GroupFile to_group_file(const CatalogEntry& e) {
  GroupFile f;
  f.dim = e.group.dim();
  f.conductor = e.group.conductor();
  f.generators = e.generators;
  f.comments = {"catalog entry " + e.name + ", order " + std::to_string(e.group.order())};
  if (!e.provenance.empty()) f.comments.push_back(e.provenance);
  return f;
}

Mat quaternion_i() { return Mat::diag({kI, -kI}); }
Mat quaternion_j() { return Mat::from_rows({{CycNum(0), kI}, {kI, CycNum(0)}}); }

CatalogEntry quaternion_q8(const CatalogOptions& opts) {
  return make_entry("quaternion_q8", {quaternion_i(), quaternion_j()}, 8, 4, true,
                    "quaternion units I = diag(i,-i), J = [[0,i],[i,0]]", opts);
}

CatalogEntry binary_polyhedral(Polyhedral kind, const CatalogOptions& opts) {
  const CycNum half(Rational(1, 2));
  // Order-3 element (-1 + I + J + K)/2 in matrix form.
  Mat a = Mat::from_rows({{CycNum(-1) + kI, CycNum(-1) + kI}, {CycNum(1) + kI, CycNum(-1) - kI}}).scaled(half);
  std::vector<Mat> t_gens{quaternion_i(), quaternion_j(), a};
  switch (kind) {
    case Polyhedral::Tetrahedral:
      return make_entry("binary_tetrahedral", t_gens, 24, 12, true, "Q8 and the order-3 unit (-1+I+J+K)/2", opts);
    case Polyhedral::Octahedral: {
      CycNum z8 = CycNum::zeta(8);
      t_gens.push_back(Mat::diag({z8, z8.inverse()}));
      return make_entry("binary_octahedral", t_gens, 48, 24, true, "binary tetrahedral group and diag(z8, z8^-1)",
                        opts);
    }
    case Polyhedral::Icosahedral: {
      CycNum e = CycNum::zeta(5);
      Mat s = Mat::diag({e.pow(3), e.pow(2)});
      CycNum u = e - e.pow(4), v = e.pow(2) - e.pow(3);
      Mat t = Mat::from_rows({{-u, v}, {v, u}}).scaled(sqrt5().inverse());
      return make_entry("binary_icosahedral", {s, t}, 120, 60, true,
                        "diag(e^3, e^2) and (1/sqrt5)[[-(e-e^4), e^2-e^3], [e^2-e^3, e-e^4]], e = z5 (Klein)", opts);
    }
  }
  throw std::invalid_argument("unknown polyhedral kind");
}

Mat psi_matrix(const Mat& a, const Mat& b) { return a.kron(b.inverse().transpose()); }

CatalogEntry psi(const CatalogEntry& a, const CatalogEntry& b, const std::string& name, const CatalogOptions& opts) {
  std::vector<Mat> gens;
  for (const auto& g : a.generators) gens.push_back(psi_matrix(g, e2()));
  for (const auto& g : b.generators) gens.push_back(psi_matrix(e2(), g));
  const std::size_t order = a.expected_order * b.expected_order / 2;
  const std::size_t quotient = a.expected_scalar_quotient * b.expected_scalar_quotient;
  return make_entry(name, gens, order, quotient, true,
                    "v -> a v b^-1 on 2x2 matrices, a in " + a.name + ", b in " + b.name, opts);
}

Mat quaternion_rho(const Mat& a, const Mat& b) {
  const Mat basis[4] = {Mat::identity(2, 4), quaternion_i(), quaternion_j(), quaternion_i() * quaternion_j()};
  Mat out(4, 4);
  Mat binv = b.inverse();
  for (int c = 0; c < 4; ++c) {
    Vec col = quat_coords(a * basis[c] * binv);
    for (int r = 0; r < 4; ++r) out.set(r, c, col[r]);
  }
  return out;
}

namespace {

std::vector<Mat> rho_generators() {
  return {quaternion_rho(quaternion_i(), e2()), quaternion_rho(quaternion_j(), e2()),
          quaternion_rho(e2(), quaternion_i()), quaternion_rho(e2(), quaternion_j())};
}

}  // namespace

CatalogEntry rho_q8xq8(const CatalogOptions& opts) {
  return make_entry("rho_q8xq8", rho_generators(), 32, 16, true,
                    "v -> a v b^-1 on the quaternions, (a, b) in Q8 x Q8, basis E, I, J, K", opts);
}

GroupN group_n_and_friends(const CatalogOptions& opts) {
  GroupN out;
  auto gens = rho_generators();
  gens.push_back(Mat::scalar(4, kI));
  out.n = make_entry("group_n", gens, 64, 16, true, "rho(Q8 x Q8) and i*E", opts);
  CycNum z8 = CycNum::zeta(8);
  out.s = Mat::diag({kI, kI, CycNum(1), CycNum(1)}).scaled(z8);
  out.b = Mat::diag({CycNum(1), CycNum(1), CycNum(1), CycNum(-1)}).scaled(z8);
  const MatGroup& n = out.n.group;
  bool squares_central = true;
  for (std::size_t i = 0; i < n.order(); ++i) {
    Mat g = n.element(i);
    squares_central = squares_central && (g * g).is_scalar();
  }
  out.n.checks.push_back(bool_check("group_n.squares_scalar", "every element squares to a scalar", squares_central));
  out.n.checks.push_back(bool_check("group_n.s_normalizes", "S normalizes N", normalizes(out.s, n)));
  out.n.checks.push_back(bool_check("group_n.b_normalizes", "B normalizes N", normalizes(out.b, n)));
  out.n.checks.push_back(
      bool_check("group_n.s_b_det_one", "det S = det B = 1", out.s.det().is_one() && out.b.det().is_one()));
  return out;
}

SchurCover schur_cover(SchurKind kind, const CatalogOptions& opts) {
  SchurCover out;
  const Mat a = Mat::from_rows({{CycNum(0), kI}, {kI, CycNum(0)}});
  const Mat b = Mat::from_ints({{0, -1}, {1, 0}});
  const Mat c = Mat::from_ints({{1, 0}, {0, -1}});
  const Mat e = e2();
  const bool s6 = kind == SchurKind::S6_4dim;
  if (s6) {
    out.m = {c.kron(a), c.kron(b), a.kron(e), b.kron(e), c.kron(c).scaled(kI)};
  } else {
    Mat cc = c.kron(c);
    out.m = {cc.kron(a), cc.kron(b), c.kron(a).kron(e), c.kron(b).kron(e),
             a.kron(e).kron(e), b.kron(e).kron(e), cc.kron(c).scaled(kI)};
  }
  const int nm = static_cast<int>(out.m.size());
  const int dim = out.m[0].dim();
  for (int k = 1; k <= nm; ++k) {
    Mat t = out.m[k - 1].scaled(sqrt_rational(Rational(k + 1, 2 * k)));
    if (k > 1) t = t - out.m[k - 2].scaled(sqrt_rational(Rational(k - 1, 2 * k)));
    out.t.push_back(t);
  }
  const Mat minus_e = Mat::scalar(dim, CycNum(-1));
  std::vector<bool> m_sq, m_anti, t_sq, t_braid, t_far;
  for (int j = 0; j < nm; ++j) {
    m_sq.push_back(out.m[j] * out.m[j] == minus_e);
    t_sq.push_back(out.t[j] * out.t[j] == minus_e);
    if (j + 1 < nm) t_braid.push_back((out.t[j] * out.t[j + 1]).pow(3) == minus_e);
    for (int k = j + 1; k < nm; ++k) {
      m_anti.push_back(out.m[j] * out.m[k] == -(out.m[k] * out.m[j]));
      if (k > j + 1) t_far.push_back(out.t[j] * out.t[k] == -(out.t[k] * out.t[j]));
    }
  }
  const std::string tag = s6 ? "schur_s6_4dim" : "schur_a7_8dim";
  std::vector<Check> rel{
      bool_check(tag + ".m_squares", "M_j^2 = -E", all_true(m_sq)),
      bool_check(tag + ".m_anticommute", "M_j M_k = -M_k M_j for j != k", all_true(m_anti)),
      bool_check(tag + ".t_squares", "T_k^2 = -E", all_true(t_sq)),
      bool_check(tag + ".t_braid", "(T_k T_k+1)^3 = -E", all_true(t_braid)),
      bool_check(tag + ".t_far_anticommute", "T_j T_k = -T_k T_j for k > j + 1", all_true(t_far)),
  };
  if (s6) {
    out.entry = make_entry(tag, out.t, 1440, 720, true, "T_1..T_5 from Kronecker products of 2x2 Pauli-type matrices",
                           opts);
  } else {
    std::vector<Mat> gens;
    for (int k = 0; k + 1 < 6; ++k) gens.push_back(out.t[k] * out.t[k + 1]);
    out.entry = make_entry(tag, gens, 5040, 2520, true, "products T_k T_k+1, k = 1..5, of the 8-dim spin lifts", opts);
    // The full double cover generated by T_1..T_6, with word parity tracked.
    ClosureOptions co;
    co.cap = opts.cap;
    co.jobs = opts.jobs;
    std::vector<Mat> t6(out.t.begin(), out.t.begin() + 6);
    auto t0 = std::chrono::steady_clock::now();
    MatGroup full = MatGroup::closure(t6, co);
    std::size_t even = 0;
    for (std::size_t i = 0; i < full.order(); ++i) even += full.parity(i) == 0;
    Check fc = make_check(tag + ".double_cover_s7", "order of the group generated by T_1..T_6", "10080",
                          std::to_string(full.order()));
    fc.seconds = seconds_since(t0);
    rel.push_back(fc);
    rel.push_back(bool_check(tag + ".parity_consistent", "word parity is well defined", full.parity_consistent()));
    rel.push_back(make_check(tag + ".even_elements", "even-parity elements of the double cover", "5040",
                             std::to_string(even)));
  }
  out.entry.checks.insert(out.entry.checks.end(), rel.begin(), rel.end());
  return out;
}

A7Projective a7_projective_generators(const CatalogOptions& opts) {
  A7Projective out;
  const CycNum beta = CycNum::zeta(7);
  const CycNum p = beta + beta.pow(2) + beta.pow(4);
  const CycNum q = beta.pow(3) + beta.pow(5) + beta.pow(6);
  const CycNum o(1);
  out.s = Mat::diag({o, beta, beta.pow(4), beta.pow(2)});
  out.w = Mat::from_rows({{p * p, o, o, o}, {o, -p, -q, -p}, {o, -p, -p, -q}, {o, -q, -p, -p}})
              .scaled(sqrt_minus7().inverse());
  out.entry = make_entry("a7_projective", {out.s, out.w}, 5040, 2520, true,
                         "S = diag(1, b, b^4, b^2), W = (1/sqrt(-7))[[p^2,1,1,1],[1,-p,-q,-p],[1,-p,-p,-q],[1,-q,-p,-p]]",
                         opts);
  auto& checks = out.entry.checks;
  checks.push_back(bool_check("a7_projective.s7_scalar", "S^7 is scalar", out.s.pow(7).is_scalar()));
  checks.push_back(bool_check("a7_projective.w3_scalar", "W^3 is scalar", out.w.pow(3).is_scalar()));

  const Perm s = Perm::from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}});
  const Perm w = Perm::from_cycles(7, {{2, 3, 5}, {4, 6, 7}});
  CayleyCheck stated = cayley_consistency(s, w, out.s, out.w);
  checks.push_back(make_check("a7_projective.permutation_group", "order of <(1..7), (2,3,5)(4,6,7)> in S7", "2520",
                              std::to_string(stated.group_order)));
  checks.push_back(bool_check("a7_projective.correspondence",
                              "S -> (1,2,3,4,5,6,7), W -> (2,3,5)(4,6,7) is multiplicative modulo scalars",
                              stated.consistent));
  // First even permutation of order 3 (lexicographic) that W does correspond to.
  std::string found = "none";
  for (const Perm& cand : all_perms(7)) {
    if (cand.order() != 3 || cand.sign() != 1) continue;
    CayleyCheck c = cayley_consistency(s, cand, out.s, out.w);
    if (c.consistent && c.group_order == 2520) {
      found = cand.str();
      break;
    }
  }
  Check search = make_check("a7_projective.correspondence_search",
                            "first order-3 permutation w with S -> (1,2,3,4,5,6,7), W -> w multiplicative", found, found);
  if (found == "none") search.status = Status::Fail;
  checks.push_back(search);
  return out;
}

CatalogEntry sl2_f7_via_functions(const CatalogOptions& opts, bool split) {
  constexpr int p = 7;
  auto mod = [](int v) { return ((v % p) + p) % p; };
  auto inv = [&](int v) {
    for (int u = 1; u < p; ++u) {
      if (mod(u * v) == 1) return u;
    }
    throw std::logic_error("no inverse");
  };
  auto chi = [&](int v) {
    for (int u = 1; u < p; ++u) {
      if (mod(u * u) == mod(v)) return 1;
    }
    return -1;
  };
  // Line representatives: (a, 1) for a = 0..6 and (1, 0).
  auto rep = [](int r) { return r < p ? std::pair<int, int>{r, 1} : std::pair<int, int>{1, 0}; };
  auto normalize = [&](int x, int y) {  // (line index, lambda) with (x, y) = lambda * rep
    x = mod(x);
    y = mod(y);
    if (y != 0) return std::pair<int, int>{mod(x * inv(y)), y};
    return std::pair<int, int>{p, x};
  };
  auto action = [&](int a, int b, int c, int d) {
    Mat m(p + 1, 1);
    for (int r = 0; r <= p; ++r) {
      auto [x, y] = rep(r);
      auto [s, lambda] = normalize(a * x + b * y, c * x + d * y);
      m.set(s, r, CycNum(chi(lambda)));
    }
    return m;
  };
  CatalogEntry e = make_entry("sl2_f7_8dim", {action(1, 1, 0, 1), action(0, -1, 1, 0)}, 336, 168, true,
                              "SL(2,F7) on functions f(l x) = chi(l) f(x), chi the quadratic character, "
                              "basis of delta functions on line representatives",
                              opts);
  if (split) {
    auto t0 = std::chrono::steady_clock::now();
    SplitOptions so;
    so.field_conductor = 7;
    std::vector<InvariantSubspace> pieces;
    std::string dims;
    bool faithful = true;
    try {
      pieces = equivariant_split(e.group, so);
      for (const auto& piece : pieces) {
        dims += (dims.empty() ? "" : "+") + std::to_string(piece.dim());
        faithful = faithful && acts_faithfully(e.group, piece.basis);
      }
    } catch (const SplitNotFound& ex) {
      dims = ex.what();
      faithful = false;
    }
    Check c = make_check("sl2_f7_8dim.split", "invariant decomposition over Q(z7)", "4+4", dims);
    c.seconds = seconds_since(t0);
    e.checks.push_back(c);
    e.checks.push_back(bool_check("sl2_f7_8dim.split_faithful", "each piece is faithful", faithful && !pieces.empty()));
  }
  return e;
}

std::string embedded_group_text(const std::string& file_name) {
  for (const auto& [name, text] : embedded::kFiles) {
    if (name == file_name) return std::string(text);
  }
  throw std::invalid_argument("no embedded data file " + file_name);
}

std::vector<int> reflection_degrees(const std::string& name) {
  if (name == "st32") return {12, 18, 24, 30};
  if (name == "a5_pm_e_3dim") return {2, 6, 10};
  if (name == "klein_pm_e_3dim") return {4, 6, 14};
  throw UnknownCatalogName(name);
}

namespace {

std::string provenance_of(const GroupFile& f) {
  std::string s;
  for (const auto& c : f.comments) s += (s.empty() ? "" : " ") + c;
  return s;
}

}  // namespace

std::vector<CatalogEntry> reflection_groups_3d_4d(const CatalogOptions& opts) {
  std::vector<CatalogEntry> out;
  GroupFile st = parse_group_text(embedded_group_text("st32.group"));
  ClosureOptions exact;
  exact.storage = Storage::Exact;
  out.push_back(make_entry("st32", st.generators, 155520, 25920, false, provenance_of(st), opts, exact));
  std::vector<Mat> sl;
  for (const auto& g : out[0].group.elements()) {
    if (g.det().is_one()) sl.push_back(g);
  }
  CatalogEntry sl4;
  sl4.name = "st32_sl4";
  sl4.provenance = "determinant-one elements of st32";
  sl4.expected_order = 51840;
  sl4.expected_scalar_quotient = 25920;
  sl4.group = MatGroup::from_closed_elements(sl);
  sl4.scalar_quotient = scalar_subgroup(sl4.group).quotient_order;
  sl4.checks.push_back(make_check("st32_sl4.order", "order of the determinant-one subgroup", "51840",
                                  std::to_string(sl4.group.order())));
  sl4.checks.push_back(make_check("st32_sl4.scalar_quotient", "order modulo scalar matrices", "25920",
                                  std::to_string(sl4.scalar_quotient)));
  out.push_back(std::move(sl4));
  GroupFile a5 = parse_group_text(embedded_group_text("a5_pm_e_3dim.group"));
  out.push_back(make_entry("a5_pm_e_3dim", a5.generators, 120, 60, false, provenance_of(a5), opts));
  GroupFile kl = parse_group_text(embedded_group_text("klein_pm_e_3dim.group"));
  out.push_back(make_entry("klein_pm_e_3dim", kl.generators, 336, 168, false, provenance_of(kl), opts));
  return out;
}

std::pair<Mat, Mat> gamma9_segre_generators() {
  // Coordinates t1..t8 = z1z2z3, z1, z2, z3, z2z3, z1z3, z1z2, 1; row i holds the image of t_i.
  auto from_images = [](const std::vector<int>& signed_targets) {
    Mat m(8, 1);
    for (int i = 0; i < 8; ++i) {
      int t = signed_targets[i];
      m.set(i, std::abs(t) - 1, CycNum(t > 0 ? 1 : -1));
    }
    return m;
  };
  Mat theta = from_images({1, 3, 4, 2, 6, 7, 5, 8});
  Mat delta = from_images({3, -4, -1, 2, -7, -8, 5, 6});
  return {theta, delta};
}

Mat permutation_matrix(const Perm& p) {
  Mat m(p.degree(), 1);
  for (int i = 1; i <= p.degree(); ++i) m.set(i - 1, p(i) - 1, CycNum(1));
  return m;
}

Mat standard_sn_matrix(const Perm& p) {
  const int n = p.degree();
  Mat m(n - 1, 1);
  for (int i = 0; i < n - 1; ++i) {
    int a = p(i + 1) - 1, b = p(n) - 1;
    if (a < n - 1) m.set(a, i, m.at(a, i) + CycNum(1));
    if (b < n - 1) m.set(b, i, m.at(b, i) - CycNum(1));
  }
  return m;
}

std::vector<CatalogEntry> imprimitive_examples(const CatalogOptions& opts) {
  std::vector<CatalogEntry> out;
  // Type (1^4): sign changes of even weight extended by A4 permuting coordinates.
  Mat theta = permutation_matrix(Perm::from_cycles(4, {{1, 2, 3}}));
  Mat delta = permutation_matrix(Perm::from_cycles(4, {{1, 2}, {3, 4}}));
  Mat sign = Mat::diag({CycNum(-1), CycNum(-1), CycNum(1), CycNum(1)});
  CatalogEntry a4 = make_entry("imprimitive_a4_1_4", {theta, delta, sign}, 96, 48, true,
                               "diagonal sign changes of determinant 1 extended by A4 = <(1,2,3), (1,2)(3,4)>", opts);
  std::vector<Vec> lines;
  for (int i = 0; i < 4; ++i) {
    Vec v(4, CycNum(0));
    v[i] = CycNum(1);
    lines.push_back(v);
  }
  PermHom hom = line_permutation_hom(a4.group, lines, false);
  a4.checks.push_back(make_check("imprimitive_a4_1_4.gamma_order", "image in S4 of the coordinate-line action", "12",
                                 std::to_string(hom.image_order)));
  a4.checks.push_back(make_check("imprimitive_a4_1_4.diagonal_kernel", "order of the diagonal kernel", "8",
                                 std::to_string(hom.kernel.order())));
  out.push_back(std::move(a4));

  // Type (2^2): Q8 x Q8 on V1 + V2 and the swap.
  auto block = [](const Mat& x, const Mat& y) {
    Mat m(4, 4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        m.set(i, j, x.at(i, j));
        m.set(i + 2, j + 2, y.at(i, j));
      }
    }
    return m;
  };
  Mat swap = permutation_matrix(Perm::from_cycles(4, {{1, 3}, {2, 4}}));
  CatalogEntry t22 = make_entry("imprimitive_2_2",
                                {block(quaternion_i(), e2()), block(quaternion_j(), e2()), swap}, 128, 64, true,
                                "Q8 x Q8 acting blockwise on V1 + V2, and the swap of V1 and V2", opts);
  // Every element preserves or exchanges the two planes; the swap exchanges them.
  auto block_kind = [](const Mat& g) {
    bool diag_zero = true, off_zero = true;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        bool same = (i < 2) == (j < 2);
        if (!g.at(i, j).is_zero()) (same ? diag_zero : off_zero) = false;
      }
    }
    return off_zero ? 0 : (diag_zero ? 1 : -1);
  };
  bool preserved = true;
  std::size_t exchanging = 0;
  for (std::size_t i = 0; i < t22.group.order(); ++i) {
    int k = block_kind(t22.group.element(i));
    preserved = preserved && k >= 0;
    exchanging += k == 1;
  }
  t22.checks.push_back(bool_check("imprimitive_2_2.blocks", "every element preserves or exchanges V1, V2", preserved));
  t22.checks.push_back(bool_check("imprimitive_2_2.swap", "the swap exchanges V1 and V2", block_kind(swap) == 1));
  t22.checks.push_back(make_check("imprimitive_2_2.stabilizer_index", "elements exchanging the planes", "64",
                                  std::to_string(exchanging)));
  out.push_back(std::move(t22));

  auto [gt, gd] = gamma9_segre_generators();
  out.push_back(make_entry("gamma9_bminus1_8dim", {gt, gd}, 24, 12, false,
                           "Segre-coordinate action of the A4 generators for the case b = -1", opts));
  return out;
}

CatalogEntry standard_s5_4dim(const CatalogOptions& opts) {
  return make_entry("standard_s5_4dim",
                    {standard_sn_matrix(Perm::from_cycles(5, {{1, 2}})),
                     standard_sn_matrix(Perm::from_cycles(5, {{1, 2, 3, 4, 5}}))},
                    120, 120, false, "S5 on the hyperplane x1 + ... + x5 = 0, basis e_i - e_5", opts);
}

CatalogEntry s6_perm_6dim(const CatalogOptions& opts) {
  return make_entry("s6_perm_6dim",
                    {permutation_matrix(Perm::from_cycles(6, {{1, 2}})),
                     permutation_matrix(Perm::from_cycles(6, {{1, 2, 3, 4, 5, 6}}))},
                    720, 720, false, "S6 permuting six coordinates", opts);
}

namespace {

using Builder = std::function<CatalogEntry(const CatalogOptions&)>;

struct Registered {
  CatalogInfo info;
  Builder build;
};

CatalogEntry pick(std::vector<CatalogEntry> v, const std::string& name) {
  for (auto& e : v) {
    if (e.name == name) return std::move(e);
  }
  throw UnknownCatalogName(name);
}

const std::vector<Registered>& registry() {
  static const std::vector<Registered> reg = [] {
    std::vector<Registered> r;
    auto add = [&](std::string name, std::size_t order, std::size_t quotient, std::string summary, Builder b) {
      r.push_back({{std::move(name), order, quotient, std::move(summary)}, std::move(b)});
    };
    auto poly = [](Polyhedral k) { return [k](const CatalogOptions& o) { return binary_polyhedral(k, o); }; };
    auto psi_of = [](Polyhedral a, Polyhedral b, std::string name) {
      return [a, b, name](const CatalogOptions& o) {
        return psi(binary_polyhedral(a, o), binary_polyhedral(b, o), name, o);
      };
    };
    add("quaternion_q8", 8, 4, "quaternion group in SL(2)", quaternion_q8);
    add("binary_tetrahedral", 24, 12, "binary tetrahedral group T in SL(2)", poly(Polyhedral::Tetrahedral));
    add("binary_octahedral", 48, 24, "binary octahedral group O in SL(2)", poly(Polyhedral::Octahedral));
    add("binary_icosahedral", 120, 60, "binary icosahedral group I in SL(2)", poly(Polyhedral::Icosahedral));
    add("psi_tt", 288, 144, "T x T acting on 2x2 matrices", psi_of(Polyhedral::Tetrahedral, Polyhedral::Tetrahedral, "psi_tt"));
    add("psi_to", 576, 288, "T x O acting on 2x2 matrices", psi_of(Polyhedral::Tetrahedral, Polyhedral::Octahedral, "psi_to"));
    add("psi_ii", 7200, 3600, "I x I acting on 2x2 matrices", psi_of(Polyhedral::Icosahedral, Polyhedral::Icosahedral, "psi_ii"));
    add("rho_q8xq8", 32, 16, "Q8 x Q8 acting on the quaternions", rho_q8xq8);
    add("group_n", 64, 16, "Q8 x Q8 on the quaternions with i*E", [](const CatalogOptions& o) {
      return group_n_and_friends(o).n;
    });
    add("schur_s6_4dim", 1440, 720, "4-dim spin lift of S6", [](const CatalogOptions& o) {
      return schur_cover(SchurKind::S6_4dim, o).entry;
    });
    add("schur_a7_8dim", 5040, 2520, "even part of the 8-dim spin lift of S7", [](const CatalogOptions& o) {
      return schur_cover(SchurKind::A7_8dim, o).entry;
    });
    add("a7_projective", 5040, 2520, "A7 in PGL(4) from a diagonal and a Gauss-sum matrix", [](const CatalogOptions& o) {
      return a7_projective_generators(o).entry;
    });
    add("sl2_f7_8dim", 336, 168, "SL(2,F7) on an 8-dim space of functions", [](const CatalogOptions& o) {
      return sl2_f7_via_functions(o);
    });
    add("st32", 155520, 25920, "Shephard-Todd group No. 32", [](const CatalogOptions& o) {
      return pick(reflection_groups_3d_4d(o), "st32");
    });
    add("st32_sl4", 51840, 25920, "determinant-one part of No. 32", [](const CatalogOptions& o) {
      return pick(reflection_groups_3d_4d(o), "st32_sl4");
    });
    add("a5_pm_e_3dim", 120, 60, "icosahedral rotations times -E in dim 3", [](const CatalogOptions& o) {
      GroupFile f = parse_group_text(embedded_group_text("a5_pm_e_3dim.group"));
      return make_entry("a5_pm_e_3dim", f.generators, 120, 60, false, provenance_of(f), o);
    });
    add("klein_pm_e_3dim", 336, 168, "Klein's simple group times -E in dim 3", [](const CatalogOptions& o) {
      GroupFile f = parse_group_text(embedded_group_text("klein_pm_e_3dim.group"));
      return make_entry("klein_pm_e_3dim", f.generators, 336, 168, false, provenance_of(f), o);
    });
    add("standard_s5_4dim", 120, 120, "S5 on the sum-zero hyperplane", standard_s5_4dim);
    add("s6_perm_6dim", 720, 720, "S6 permuting coordinates", s6_perm_6dim);
    add("imprimitive_a4_1_4", 96, 48, "type (1^4) imprimitive group over A4", [](const CatalogOptions& o) {
      return pick(imprimitive_examples(o), "imprimitive_a4_1_4");
    });
    add("imprimitive_2_2", 128, 64, "type (2^2) imprimitive group", [](const CatalogOptions& o) {
      return pick(imprimitive_examples(o), "imprimitive_2_2");
    });
    add("gamma9_bminus1_8dim", 24, 12, "A4 cover acting in Segre coordinates", [](const CatalogOptions& o) {
      return pick(imprimitive_examples(o), "gamma9_bminus1_8dim");
    });
    return r;
  }();
  return reg;
}

}  // namespace

const std::vector<CatalogInfo>& catalog_index() {
  static const std::vector<CatalogInfo> idx = [] {
    std::vector<CatalogInfo> v;
    for (const auto& r : registry()) v.push_back(r.info);
    return v;
  }();
  return idx;
}

CatalogEntry build_catalog_entry(const std::string& name, const CatalogOptions& opts) {
  for (const auto& r : registry()) {
    if (r.info.name == name) return r.build(opts);
  }
  throw UnknownCatalogName(name);
}

}  // namespace finvar
