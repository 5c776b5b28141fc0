#include "finvar/segre.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace finvar {
namespace {

constexpr int kPoints = 6;

bool contains(const std::array<int, 3>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

int fixed_points(const Perm& p) {
  int n = 0;
  for (int i = 1; i <= p.degree(); ++i) n += p(i) == i;
  return n;
}

bool is_plane_label(const Perm& p) { return p.cycle_type() == std::vector<int>{2, 2, 2}; }

std::size_t perm_index(const std::vector<Perm>& sorted, const Perm& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
  if (it == sorted.end() || !(*it == p)) throw std::logic_error("permutation not in list");
  return static_cast<std::size_t>(it - sorted.begin());
}

// Coordinates permuted by g: y_{g(i)} = x_i.
Vec permute(const Vec& x, const Perm& g) {
  Vec y(x.size());
  for (int i = 1; i <= static_cast<int>(x.size()); ++i) y[g(i) - 1] = x[i - 1];
  return y;
}

bool same_row_space(const Rows& a, const Rows& b) { return rref(a).rows == rref(b).rows; }

int intersection_dim(const Rows& a, const Rows& b) {
  Rows stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  return kPoints - rank(stacked) - 1;
}

bool proportional(const Vec& a, const Vec& b) {
  Rows m{a, b};
  return rank(m) == 1;
}

std::vector<std::vector<int>> orbits_of(const std::vector<Perm>& group, int n) {
  std::vector<int> seen(n + 1, 0);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::set<int> orbit;
    for (const auto& g : group) orbit.insert(g(s));
    for (int v : orbit) seen[v] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

NodeLabel label_from_orbits(const std::vector<std::vector<int>>& orbits) {
  if (orbits.size() != 2 || orbits[0].size() != 3) throw std::logic_error("not a (3,3) orbit partition");
  return NodeLabel::from_sets({orbits[0][0], orbits[0][1], orbits[0][2]},
                              {orbits[1][0], orbits[1][1], orbits[1][2]});
}

std::vector<std::pair<int, int>> transpositions(const Perm& sigma) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= sigma.degree(); ++i) {
    if (sigma(i) > i) out.emplace_back(i, sigma(i));
  }
  return out;
}

// Determinant by cofactor expansion over a polynomial ring.
SparsePoly poly_det(const std::vector<std::vector<SparsePoly>>& m, int nvars) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  SparsePoly out(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].terms().empty()) continue;
    std::vector<std::vector<SparsePoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<SparsePoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    SparsePoly term = m[0][c] * poly_det(minor, nvars);
    if (c % 2) out -= term;
    else out += term;
  }
  return out;
}

}  // namespace

NodeLabel NodeLabel::from_sets(std::array<int, 3> a, std::array<int, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::array<int, 6> all{};
  std::copy(a.begin(), a.end(), all.begin());
  std::copy(b.begin(), b.end(), all.begin() + 3);
  std::sort(all.begin(), all.end());
  for (int i = 0; i < 6; ++i) {
    if (all[i] != i + 1) throw std::invalid_argument("node label must partition {1..6}");
  }
  if (!contains(a, 1)) std::swap(a, b);
  return NodeLabel{a, b};
}

NodeLabel NodeLabel::moved(const Perm& g) const {
  return from_sets({g(first[0]), g(first[1]), g(first[2])}, {g(second[0]), g(second[1]), g(second[2])});
}

std::string NodeLabel::str() const {
  std::string s = "<";
  for (int v : first) s += std::to_string(v);
  s += "|";
  for (int v : second) s += std::to_string(v);
  return s + ">";
}

Vec node_point(const NodeLabel& n) {
  Vec p(kPoints, CycNum(-1));
  for (int v : n.first) p[v - 1] = CycNum(1);
  return p;
}

Rows plane_equations(const Perm& sigma) {
  if (!is_plane_label(sigma)) throw std::invalid_argument("plane label must be a fixed-point-free involution");
  Rows out;
  for (auto [i, j] : transpositions(sigma)) {
    Vec row(kPoints, CycNum(0));
    row[i - 1] = CycNum(1);
    row[j - 1] = CycNum(1);
    out.push_back(std::move(row));
  }
  return out;
}

bool point_on_plane(const Vec& p, const Rows& plane) {
  for (const auto& row : plane) {
    CycNum s(0);
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * p[i];
    if (!s.is_zero()) return false;
  }
  return true;
}

SparsePoly segre_cubic() { return SparsePoly::power_sum(kPoints, 3); }

bool plane_on_cubic(const Rows& plane) {
  Rows basis = nullspace(plane, kPoints);
  const int k = static_cast<int>(basis.size());
  std::vector<SparsePoly> x(kPoints, SparsePoly(k));
  for (int i = 0; i < kPoints; ++i) {
    for (int j = 0; j < k; ++j) x[i].add_term(mono_var(j), basis[j][i]);
  }
  return SparsePoly::power_sum(kPoints, 1).substitute(x).terms().empty() &&
         segre_cubic().substitute(x).terms().empty();
}

bool node_is_singular(const Vec& p) {
  const SparsePoly s1 = SparsePoly::power_sum(kPoints, 1);
  const SparsePoly s3 = segre_cubic();
  if (!s1.eval(p).is_zero() || !s3.eval(p).is_zero()) return false;
  Vec grad3, grad1;
  for (int i = 0; i < kPoints; ++i) {
    grad3.push_back(s3.derivative(i).eval(p));
    grad1.push_back(s1.derivative(i).eval(p));
  }
  return rank(Rows{grad3, grad1}) <= 1;
}

SegreGeometry enumerate_geometry() {
  SegreGeometry geo;
  // +-1 vectors with zero sum, normalized by x1 = 1.
  for (int mask = 0; mask < (1 << kPoints); ++mask) {
    if (!(mask & 1) || __builtin_popcount(static_cast<unsigned>(mask)) != 3) continue;
    std::array<int, 3> a{}, b{};
    int ia = 0, ib = 0;
    Vec p(kPoints);
    for (int i = 0; i < kPoints; ++i) {
      bool plus = (mask >> i) & 1;
      p[i] = CycNum(plus ? 1 : -1);
      if (plus) a[ia++] = i + 1;
      else b[ib++] = i + 1;
    }
    geo.node_labels.push_back(NodeLabel::from_sets(a, b));
    geo.nodes.push_back(std::move(p));
  }
  std::vector<std::size_t> order(geo.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return geo.node_labels[x].first < geo.node_labels[y].first;
  });
  SegreGeometry sorted;
  for (std::size_t i : order) {
    sorted.node_labels.push_back(geo.node_labels[i]);
    sorted.nodes.push_back(geo.nodes[i]);
  }
  for (const auto& p : all_perms(kPoints)) {
    if (!is_plane_label(p)) continue;
    sorted.plane_labels.push_back(p);
    sorted.planes.push_back(plane_equations(p));
  }
  return sorted;
}

Incidence incidence(const SegreGeometry& geo) {
  Incidence inc;
  const int np = static_cast<int>(geo.planes.size());
  const int nn = static_cast<int>(geo.nodes.size());
  inc.nodes_on_plane.assign(np, {});
  inc.planes_through_node.assign(nn, {});
  for (int p = 0; p < np; ++p) {
    for (int n = 0; n < nn; ++n) {
      if (point_on_plane(geo.nodes[n], geo.planes[p])) {
        inc.nodes_on_plane[p].push_back(n);
        inc.planes_through_node[n].push_back(p);
      }
    }
  }
  for (int a = 0; a < np; ++a) {
    for (int b = a + 1; b < np; ++b) {
      PlanePair pair{a, b, intersection_dim(geo.planes[a], geo.planes[b]), false};
      const Perm& s1 = geo.plane_labels[a];
      const Perm& s2 = geo.plane_labels[b];
      Perm prod = s1 * s2;
      bool point_rule = false;
      if (prod.cycle_type() == std::vector<int>{3, 3}) {
        auto cyc = prod.cycles();
        NodeLabel expect = NodeLabel::from_sets({cyc[0][0], cyc[0][1], cyc[0][2]}, {cyc[1][0], cyc[1][1], cyc[1][2]});
        // The intersection point must be exactly the node named by the 3-cycles.
        Rows stacked = geo.planes[a];
        stacked.insert(stacked.end(), geo.planes[b].begin(), geo.planes[b].end());
        Rows ker = nullspace(stacked, kPoints);
        point_rule = ker.size() == 1 && proportional(ker[0], node_point(expect));
      }
      auto ta = transpositions(s1);
      auto tb = transpositions(s2);
      bool common = false;
      for (const auto& t : ta) common = common || std::find(tb.begin(), tb.end(), t) != tb.end();
      pair.criteria_hold = (pair.intersection_dim == 0) == point_rule && (pair.intersection_dim == 1) == common &&
                           (pair.intersection_dim == 0 || pair.intersection_dim == 1);
      inc.pairs.push_back(pair);
    }
  }
  return inc;
}

Sylow3Report sylow3_correspondence(const SegreGeometry& geo) {
  Sylow3Report rep;
  const auto s6 = all_perms(kPoints);
  std::vector<Perm> threes;
  for (const auto& g : s6) {
    if (g.order() == 3) threes.push_back(g);
  }
  std::set<std::vector<Perm>> sylows;
  for (std::size_t i = 0; i < threes.size(); ++i) {
    for (std::size_t j = i + 1; j < threes.size(); ++j) {
      if (!(threes[i] * threes[j] == threes[j] * threes[i])) continue;
      auto h = perm_closure({threes[i], threes[j]}, kPoints);
      if (h.size() == 9) sylows.insert(std::move(h));
    }
  }
  rep.sylow_count = sylows.size();
  std::vector<std::vector<Perm>> syl(sylows.begin(), sylows.end());

  // Node label -> the Sylow subgroup with the same two orbits.
  std::map<std::array<int, 3>, std::size_t> by_first;
  bool orbit_ok = true;
  for (std::size_t k = 0; k < syl.size(); ++k) {
    auto orbits = orbits_of(syl[k], kPoints);
    if (orbits.size() != 2 || orbits[0].size() != 3) {
      orbit_ok = false;
      continue;
    }
    by_first[label_from_orbits(orbits).first] = k;
  }
  std::set<std::size_t> hit;
  bool each_node_once = orbit_ok;
  for (const auto& n : geo.node_labels) {
    auto it = by_first.find(n.first);
    if (it == by_first.end()) {
      each_node_once = false;
      continue;
    }
    hit.insert(it->second);
  }
  rep.bijective = each_node_once && hit.size() == geo.node_labels.size() && syl.size() == geo.node_labels.size();

  auto sylow_of = [&](const NodeLabel& n) -> const std::vector<Perm>& { return syl[by_first.at(n.first)]; };

  rep.equivariant = rep.bijective;
  rep.geometry_equivariant = true;
  std::size_t node_stab = 0, plane_stab = 0;
  const NodeLabel& n0 = geo.node_labels[0];
  const Perm& sigma0 = geo.plane_labels[0];
  std::set<std::size_t> centralizer, geometric_stab;
  for (std::size_t gi = 0; gi < s6.size(); ++gi) {
    const Perm& g = s6[gi];
    const Perm ginv = g.inverse();
    for (std::size_t k = 0; k < geo.node_labels.size() && rep.bijective; ++k) {
      const NodeLabel moved = geo.node_labels[k].moved(g);
      std::vector<Perm> conj;
      for (const auto& h : sylow_of(geo.node_labels[k])) conj.push_back(g * h * ginv);
      std::sort(conj.begin(), conj.end());
      rep.equivariant = rep.equivariant && conj == sylow_of(moved);
      rep.geometry_equivariant =
          rep.geometry_equivariant && proportional(node_point(moved), permute(geo.nodes[k], g));
    }
    for (std::size_t p = 0; p < geo.planes.size(); ++p) {
      Rows moved_eq;
      for (const auto& row : geo.planes[p]) moved_eq.push_back(permute(row, g));
      rep.geometry_equivariant =
          rep.geometry_equivariant && same_row_space(moved_eq, plane_equations(geo.plane_labels[p].conjugate_by(g)));
    }
    if (n0.moved(g) == n0) ++node_stab;
    if (sigma0.conjugate_by(g) == sigma0) centralizer.insert(gi);
    Rows moved0;
    for (const auto& row : geo.planes[0]) moved0.push_back(permute(row, g));
    if (same_row_space(moved0, geo.planes[0])) {
      geometric_stab.insert(gi);
      ++plane_stab;
    }
  }
  rep.node_stabilizer = node_stab;
  rep.plane_stabilizer = plane_stab;
  rep.plane_stabilizer_is_centralizer = centralizer == geometric_stab;
  return rep;
}

Perm OuterAutomorphism::operator()(const Perm& g) const { return image[perm_index(domain, g)]; }

OuterAutomorphism outer_automorphism() {
  OuterAutomorphism out;
  out.domain = all_perms(kPoints);
  const auto& s6 = out.domain;
  bool found = false;
  for (std::size_t i = 0; i < s6.size() && !found; ++i) {
    const Perm& a = s6[i];
    if (fixed_points(a) > 2) continue;
    for (std::size_t j = i + 1; j < s6.size() && !found; ++j) {
      const Perm& b = s6[j];
      // Nontrivial elements of a transitive S5 fix at most two points.
      if (fixed_points(b) > 2) continue;
      auto h = perm_closure({a, b}, kPoints);
      if (h.size() != 120 || orbits_of(h, kPoints).size() != 1) continue;
      out.transitive_s5 = std::move(h);
      out.generators = {a, b};
      found = true;
    }
  }
  if (!found) throw std::logic_error("no transitive S5 found");

  // Label the left cosets gH in order of first appearance.
  std::vector<int> coset(s6.size(), -1);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < s6.size(); ++i) {
    if (coset[i] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(s6[i]);
    for (const auto& h : out.transitive_s5) coset[perm_index(s6, s6[i] * h)] = id;
  }
  out.image.reserve(s6.size());
  for (const auto& g : s6) {
    std::vector<int> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = coset[perm_index(s6, g * reps[c])] + 1;
    out.image.emplace_back(std::move(img));
  }
  return out;
}

OuterChecks check_outer_automorphism(const OuterAutomorphism& lambda) {
  OuterChecks out;
  const auto& s6 = lambda.domain;
  const std::size_t n = s6.size();
  std::vector<std::size_t> img_index(n);
  for (std::size_t i = 0; i < n; ++i) img_index[i] = perm_index(s6, lambda.image[i]);
  std::set<std::size_t> distinct(img_index.begin(), img_index.end());
  out.bijective = distinct.size() == n;

  out.homomorphism = true;
  for (std::size_t i = 0; i < n && out.homomorphism; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = perm_index(s6, s6[i] * s6[j]);
      if (!(lambda.image[k] == lambda.image[i] * lambda.image[j])) {
        out.homomorphism = false;
        break;
      }
    }
  }
  out.transposition_image_type = lambda(Perm::from_cycles(kPoints, {{1, 2}})).cycle_type();

  for (const auto& c : s6) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = lambda.image[img_index[i]] == s6[i].conjugate_by(c);
    }
    if (ok) {
      out.square_inner = true;
      break;
    }
  }
  return out;
}

std::vector<Perm> standard_s5() {
  return perm_closure({Perm::from_cycles(kPoints, {{1, 2}}), Perm::from_cycles(kPoints, {{1, 2, 3, 4, 5}})}, kPoints);
}

std::vector<Perm> image_under(const OuterAutomorphism& lambda, const std::vector<Perm>& h) {
  std::vector<Perm> out;
  out.reserve(h.size());
  for (const auto& g : h) out.push_back(lambda(g));
  std::sort(out.begin(), out.end());
  return out;
}

OrbitAnalysis s5_orbit_analysis(const SegreGeometry& geo, const std::vector<Perm>& h) {
  if (h.size() != 120) throw std::invalid_argument("subgroup must have order 120");
  OrbitAnalysis out;
  out.transitive = orbits_of(h, kPoints).size() == 1;
  const auto& labels = geo.plane_labels;
  std::vector<int> orbit_id(labels.size(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (orbit_id[p] >= 0) continue;
    std::set<std::size_t> members;
    for (const auto& g : h) members.insert(perm_index(labels, labels[p].conjugate_by(g)));
    for (std::size_t m : members) orbit_id[m] = static_cast<int>(orbits.size());
    orbits.emplace_back(members.begin(), members.end());
  }
  for (const auto& o : orbits) out.orbit_sizes.push_back(o.size());
  std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
  for (const auto& g : h) {
    if (labels[0].conjugate_by(g) == labels[0]) ++out.plane_stabilizer;
  }
  if (out.transitive && orbits.size() == 2) {
    const auto& big = orbits[0].size() >= orbits[1].size() ? orbits[0] : orbits[1];
    const auto& small = orbits[0].size() >= orbits[1].size() ? orbits[1] : orbits[0];
    out.membership_rule = true;
    for (std::size_t p = 0; p < labels.size(); ++p) {
      bool in_big = std::find(big.begin(), big.end(), p) != big.end();
      bool in_h = std::binary_search(h.begin(), h.end(), labels[p]);
      out.membership_rule = out.membership_rule && in_big == in_h;
    }
    out.small_orbit_meets_in_nodes = true;
    for (std::size_t i = 0; i < small.size(); ++i) {
      for (std::size_t j = i + 1; j < small.size(); ++j) {
        const Rows& a = geo.planes[small[i]];
        const Rows& b = geo.planes[small[j]];
        if (intersection_dim(a, b) != 0) {
          out.small_orbit_meets_in_nodes = false;
          continue;
        }
        Rows stacked = a;
        stacked.insert(stacked.end(), b.begin(), b.end());
        Vec p = nullspace(stacked, kPoints)[0];
        bool is_node = false;
        for (const auto& n : geo.nodes) is_node = is_node || proportional(p, n);
        out.small_orbit_meets_in_nodes = out.small_orbit_meets_in_nodes && is_node;
      }
    }
  }
  return out;
}

PencilReport residue_pencil_check(const Perm& sigma) {
  PencilReport out;
  const auto pairs = transpositions(sigma);
  if (pairs.size() != 3 || !is_plane_label(sigma)) throw std::invalid_argument("plane label must be a fixed-point-free involution");
  // Variables: t, w, y1, y2, y3. Sums u_k = x_p + x_q are (t w, w, -(t+1) w); y_k = x_p - x_q.
  constexpr int kVars = 5;
  const SparsePoly t = SparsePoly::variable(kVars, 0);
  const SparsePoly w = SparsePoly::variable(kVars, 1);
  const SparsePoly one = SparsePoly::constant(kVars, CycNum(1));
  const SparsePoly u[3] = {t * w, w, -((t + one) * w)};
  const CycNum half(Rational(1, 2));
  std::vector<SparsePoly> x(kPoints, SparsePoly(kVars));
  for (int k = 0; k < 3; ++k) {
    const SparsePoly y = SparsePoly::variable(kVars, 2 + k);
    x[pairs[k].first - 1] = (u[k] + y).scaled(half);
    x[pairs[k].second - 1] = (u[k] - y).scaled(half);
  }
  const bool on_hyperplane = SparsePoly::power_sum(kPoints, 1).substitute(x).terms().empty();
  const SparsePoly restricted = segre_cubic().substitute(x);

  SparsePoly residual(kVars);
  out.plane_in_every_member = on_hyperplane;
  for (const auto& [m, c] : restricted.terms()) {
    if (mono_exp(m, 1) == 0) {
      out.plane_in_every_member = false;
      break;
    }
    residual.add_term(m - mono_var(1), c);
  }
  if (!out.plane_in_every_member) return out;

  // Symmetric matrix of the residual quadric in (w, y1, y2, y3), entries in Q[t].
  std::vector<std::vector<SparsePoly>> q(4, std::vector<SparsePoly>(4, SparsePoly(1)));
  std::map<int, SparsePoly> by_t_power;
  for (const auto& [m, c] : residual.terms()) {
    std::vector<int> e = mono_exps(m, kVars);
    std::vector<int> idx;
    for (int v = 0; v < 4; ++v) {
      for (int r = 0; r < e[1 + v]; ++r) idx.push_back(v);
    }
    if (idx.size() != 2) throw std::logic_error("residual is not a quadric");
    const SparsePoly tp = SparsePoly::monomial(1, mono_make({e[0]}), CycNum(1));
    if (idx[0] == idx[1]) {
      q[idx[0]][idx[0]] += tp.scaled(c);
    } else {
      q[idx[0]][idx[1]] += tp.scaled(c * half);
      q[idx[1]][idx[0]] += tp.scaled(c * half);
    }
    std::vector<int> qe(e.begin() + 1, e.end());
    auto it = by_t_power.try_emplace(e[0], SparsePoly(4)).first;
    it->second.add_term(mono_make(qe), c);
  }
  out.discriminant = poly_det(q, 1);
  out.discriminant_nonzero = !out.discriminant.terms().empty();

  // Base locus: the conics multiplying powers of t must span <w^2, y1^2 - y3^2, y2^2 - y3^2>.
  std::vector<SparsePoly> coeffs;
  for (const auto& [k, p] : by_t_power) coeffs.push_back(p);
  auto var4 = [](int v) { return SparsePoly::variable(4, v); };
  std::vector<SparsePoly> expected{var4(0) * var4(0), var4(1) * var4(1) - var4(3) * var4(3),
                                   var4(2) * var4(2) - var4(3) * var4(3)};
  std::vector<SparsePoly> both = coeffs;
  both.insert(both.end(), expected.begin(), expected.end());
  const bool span_ok = poly_rank(coeffs) == 3 && poly_rank(both) == 3;
  if (!span_ok) return out;

  // w = 0, y1^2 = y2^2 = y3^2: the points (+-1, +-1, 1).
  const auto geo_nodes = enumerate_geometry().nodes;
  out.base_points_are_plane_nodes = true;
  const Rows plane = plane_equations(sigma);
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const int ys[3] = {s1, s2, 1};
      Vec pt(kPoints, CycNum(0));
      for (int k = 0; k < 3; ++k) {
        pt[pairs[k].first - 1] = CycNum(ys[k]);
        pt[pairs[k].second - 1] = CycNum(-ys[k]);
      }
      Vec conic_pt{CycNum(0), CycNum(s1), CycNum(s2), CycNum(1)};
      bool on_all = true;
      for (const auto& c : coeffs) on_all = on_all && c.eval(conic_pt).is_zero();
      bool is_node = false;
      for (const auto& n : geo_nodes) is_node = is_node || proportional(pt, n);
      out.base_points_are_plane_nodes = out.base_points_are_plane_nodes && on_all && is_node && point_on_plane(pt, plane);
      ++out.base_points;
    }
  }
  return out;
}

std::vector<Check> segre_checks() {
  CheckRecorder rec;
  const SegreGeometry geo = enumerate_geometry();
  rec.push(make_check("segre.nodes", "number of nodes", "10", std::to_string(geo.nodes.size())));
  rec.push(make_check("segre.planes", "number of planes", "15", std::to_string(geo.planes.size())));
  bool singular = true;
  for (const auto& p : geo.nodes) singular = singular && node_is_singular(p);
  rec.push(bool_check("segre.nodes_singular", "every node is a singular point of s1 = s3 = 0", singular));
  bool on_cubic = true;
  for (const auto& pl : geo.planes) on_cubic = on_cubic && plane_on_cubic(pl);
  rec.push(bool_check("segre.planes_on_cubic", "every plane lies on s1 = s3 = 0", on_cubic));
  const bool label_ok = node_point(NodeLabel::from_sets({1, 2, 3}, {4, 5, 6})) == geo.nodes.front();
  rec.push(bool_check("segre.misprint_label",
                      std::string("printed label ") + kMisprintedNodeLabel + " is not a node; <123|456> = (1,1,1,-1,-1,-1) is",
                      label_ok));

  const Incidence inc = incidence(geo);
  std::set<std::size_t> per_plane, per_node;
  for (const auto& v : inc.nodes_on_plane) per_plane.insert(v.size());
  for (const auto& v : inc.planes_through_node) per_node.insert(v.size());
  rec.push(make_check("segre.nodes_per_plane", "nodes on each plane", "4",
                      per_plane.size() == 1 ? std::to_string(*per_plane.begin()) : "varies"));
  rec.push(make_check("segre.planes_per_node", "planes through each node", "6",
                      per_node.size() == 1 ? std::to_string(*per_node.begin()) : "varies"));
  int points = 0, lines = 0, bad = 0;
  for (const auto& pr : inc.pairs) {
    points += pr.intersection_dim == 0;
    lines += pr.intersection_dim == 1;
    bad += !pr.criteria_hold;
  }
  rec.push(make_check("segre.plane_pairs", "unordered plane pairs examined", "105", std::to_string(inc.pairs.size())));
  rec.push(make_check("segre.incidence_criteria",
                      "pairs violating: point iff sharing no transposition, line iff sharing one", "0",
                      std::to_string(bad)));
  rec.push(make_check("segre.pair_types", "pairs meeting in a point / in a line", "60/45",
                      std::to_string(points) + "/" + std::to_string(lines)));

  const Sylow3Report syl = sylow3_correspondence(geo);
  rec.push(make_check("segre.sylow3_count", "Sylow 3-subgroups of S6", "10", std::to_string(syl.sylow_count)));
  rec.push(bool_check("segre.sylow3_bijective", "nodes correspond bijectively to Sylow 3-subgroups", syl.bijective));
  rec.push(bool_check("segre.sylow3_equivariant", "the correspondence commutes with all 720 elements",
                      syl.equivariant && syl.geometry_equivariant));
  rec.push(make_check("segre.node_stabilizer", "stabilizer order of a node", "72", std::to_string(syl.node_stabilizer)));
  rec.push(make_check("segre.plane_stabilizer", "stabilizer order of a plane", "48", std::to_string(syl.plane_stabilizer)));
  rec.push(bool_check("segre.plane_stabilizer_centralizer", "plane stabilizer is the centralizer of its involution",
                      syl.plane_stabilizer_is_centralizer));

  const OuterAutomorphism lambda = outer_automorphism();
  const OuterChecks oc = check_outer_automorphism(lambda);
  rec.push(bool_check("segre.lambda_automorphism", "lambda is a bijective homomorphism", oc.homomorphism && oc.bijective));
  std::string type;
  for (int k : oc.transposition_image_type) type += (type.empty() ? "" : ",") + std::to_string(k);
  rec.push(make_check("segre.lambda_outer", "cycle type of lambda((1,2))", "2,2,2", type));
  rec.push(bool_check("segre.lambda_square_inner", "lambda^2 is inner", oc.square_inner));

  auto sizes = [](const std::vector<std::size_t>& v) {
    std::string r;
    for (auto x : v) r += (r.empty() ? "" : ",") + std::to_string(x);
    return r;
  };
  const auto s5 = standard_s5();
  const OrbitAnalysis std_orbits = s5_orbit_analysis(geo, s5);
  rec.push(make_check("segre.s5_standard_orbits", "plane orbits of the point stabilizer S5", "15",
                      sizes(std_orbits.orbit_sizes)));
  rec.push(make_check("segre.s5_standard_stabilizer", "plane stabilizer inside the point stabilizer S5", "8",
                      std::to_string(std_orbits.plane_stabilizer)));
  const OrbitAnalysis tr = s5_orbit_analysis(geo, image_under(lambda, s5));
  rec.push(bool_check("segre.s5_transitive", "lambda(S5) is transitive on six letters", tr.transitive));
  rec.push(make_check("segre.s5_transitive_orbits", "plane orbits of the transitive S5", "10,5", sizes(tr.orbit_sizes)));
  rec.push(bool_check("segre.s5_membership_rule", "a plane is in the big orbit iff its involution lies in the S5",
                      tr.membership_rule));
  rec.push(bool_check("segre.small_orbit_nodes", "planes of the small orbit meet pairwise in nodes",
                      tr.small_orbit_meets_in_nodes));

  const PencilReport pen = residue_pencil_check(geo.plane_labels.front());
  rec.push(bool_check("segre.pencil_contains_plane", "the plane lies on every member of the residual pencil",
                      pen.plane_in_every_member));
  rec.push(make_check("segre.pencil_base_points", "base points of the residual conics", "4",
                      std::to_string(pen.base_points)));
  rec.push(bool_check("segre.pencil_base_nodes", "the base points are the nodes on the plane",
                      pen.base_points_are_plane_nodes));
  rec.push(bool_check("segre.pencil_discriminant", "the pencil discriminant is not identically zero",
                      pen.discriminant_nonzero));
  return rec.take();
}

}  // namespace finvar
