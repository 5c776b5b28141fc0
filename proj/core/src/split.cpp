#include "finvar/split.hpp"

#include <random>

#include "finvar/upoly.hpp"

namespace finvar {
namespace {

// Basis of an invariant subspace in reduced echelon form; coordinates of a
// member vector are its entries at the pivot columns.
struct Sub {
  Rows rows;
  std::vector<int> pivots;
  int dim() const { return static_cast<int>(rows.size()); }
};

Sub make_sub(const Rows& basis) {
  Echelon e = rref(basis);
  return {std::move(e.rows), std::move(e.pivots)};
}

Mat restrict_sub(const Mat& g, const Sub& s) {
  const int k = s.dim();
  Mat r(k, g.conductor());
  for (int j = 0; j < k; ++j) {
    Vec img = g.apply(s.rows[j]);
    for (int i = 0; i < k; ++i) r.set(i, j, img[s.pivots[i]]);
  }
  return r;
}

Rows columns_of(const Mat& m) { return transpose(m.rows(), m.dim()); }

// Ambient vectors for local coordinate vectors.
Rows to_ambient(const Sub& s, const Rows& local) {
  Rows out;
  const std::size_t d = s.rows.empty() ? 0 : s.rows[0].size();
  for (const auto& c : local) {
    Vec v(d, CycNum(0));
    for (int j = 0; j < s.dim(); ++j) {
      if (c[j].is_zero()) continue;
      for (std::size_t t = 0; t < d; ++t) {
        if (!s.rows[j][t].is_zero()) v[t] += c[j] * s.rows[j][t];
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

struct Action {
  std::vector<Mat> mats;  // restricted elements
  std::vector<Mat> invs;
  std::vector<Mat> gens;  // restricted generators
};

Mat average(const Action& act, const Mat& x) {
  Mat sum(x.dim(), x.conductor());
  for (std::size_t i = 0; i < act.mats.size(); ++i) sum = sum + act.mats[i] * x * act.invs[i];
  return sum.scaled(CycNum(Rational(1, static_cast<long long>(act.mats.size()))));
}

// Invariant complement of an invariant subspace w (local coordinates).
Rows invariant_complement(const Action& act, const Rows& w, int k, int field) {
  Rows q = w;
  Echelon e = rref(w);
  for (int i = 0; i < k && static_cast<int>(q.size()) < k; ++i) {
    Vec unit(k, CycNum(0));
    unit[i] = CycNum(1);
    if (!in_row_space(e, unit)) {
      q.push_back(unit);
      e = rref(q);
    }
  }
  Mat qm = Mat::from_rows(transpose(q, k)).embed(field);
  Mat keep(k, field);
  for (std::size_t i = 0; i < w.size(); ++i) keep.set(static_cast<int>(i), static_cast<int>(i), CycNum(1));
  Mat proj = qm * keep * qm.inverse();
  return nullspace(average(act, proj).rows(), k);
}

Rows spin(const Action& act, const Vec& v) {
  Rows span{v};
  Echelon e = rref(span);
  for (std::size_t head = 0; head < span.size(); ++head) {
    for (const auto& g : act.gens) {
      Vec w = g.apply(span[head]);
      if (!in_row_space(e, w)) {
        span.push_back(std::move(w));
        e = rref(span);
      }
    }
  }
  return e.rows;
}

struct Splitter {
  const MatGroup& group;
  const SplitOptions& opts;
  int field;
  std::mt19937_64 rng;

  Action restricted(const Sub& s) const {
    Action act;
    for (std::size_t i = 0; i < group.order(); ++i) {
      Mat r = restrict_sub(group.element(i), s).embed(field);
      act.invs.push_back(r.inverse());
      act.mats.push_back(std::move(r));
    }
    for (const auto& g : group.generators()) act.gens.push_back(restrict_sub(g, s).embed(field));
    return act;
  }

  Mat random_rational(int k) {
    std::uniform_int_distribution<int> dist(-5, 5);
    std::vector<std::vector<long long>> rows(k, std::vector<long long>(k));
    for (auto& r : rows) {
      for (auto& x : r) x = dist(rng);
    }
    return Mat::from_ints(rows).embed(field);
  }

  std::vector<InvariantSubspace> halves(const Sub& s, const Rows& w, const Rows& comp, const std::string& how) {
    std::vector<InvariantSubspace> out;
    for (const Rows* part : {&w, &comp}) {
      for (auto& piece : run(make_sub(to_ambient(s, *part)))) {
        if (piece.method.empty()) piece.method = how;
        out.push_back(std::move(piece));
      }
    }
    return out;
  }

  std::vector<InvariantSubspace> run(const Sub& s) {
    const int k = s.dim();
    if (k <= 1) return {{s.rows, ""}};
    Action act = restricted(s);

    bool nonscalar = false;
    for (int t = 0; t < std::max(1, opts.tries); ++t) {
      Mat a = average(act, random_rational(k));
      if (a.is_scalar()) continue;
      nonscalar = true;
      auto roots = roots_in_field(a.char_poly(), field);
      if (roots.empty()) continue;
      Mat m = a - Mat::scalar(k, roots[0].embed(field));
      Mat mk = m.pow(k);
      Rows ker = nullspace(mk.rows(), k);
      if (static_cast<int>(ker.size()) < k) {
        Rows img = rref(columns_of(mk)).rows;
        return halves(s, ker, img, "averaging");
      }
      Rows w = nullspace(m.rows(), k);
      return halves(s, w, invariant_complement(act, w, k, field), "averaging");
    }
    if (!nonscalar) return {{s.rows, ""}};

    // Isotypic with multiplicity: spin eigenvectors of single elements.
    const std::size_t limit = std::min(group.order(), opts.spin_elements);
    for (std::size_t i = 1; i < limit; ++i) {
      const Mat& r = act.mats[i];
      if (r.is_scalar()) continue;
      for (const auto& c : roots_in_field(r.char_poly(), field)) {
        Rows eig = nullspace((r - Mat::scalar(k, c.embed(field))).rows(), k);
        for (const auto& v : eig) {
          Rows w = spin(act, v);
          if (static_cast<int>(w.size()) < k) {
            return halves(s, w, invariant_complement(act, w, k, field), "spinning");
          }
        }
      }
    }
    return {{s.rows, ""}};
  }
};

}  // namespace

std::vector<InvariantSubspace> equivariant_split(const MatGroup& g, const SplitOptions& opts) {
  const int field = static_cast<int>(lcm_ll(g.conductor(), opts.field_conductor > 0 ? opts.field_conductor : 1));
  Splitter sp{g, opts, field, std::mt19937_64(opts.seed)};
  Rows id;
  for (int i = 0; i < g.dim(); ++i) {
    Vec v(g.dim(), CycNum(0));
    v[i] = CycNum(1);
    id.push_back(v);
  }
  auto pieces = sp.run(make_sub(id));
  if (pieces.size() < 2) throw SplitNotFound();
  for (auto& p : pieces) {
    if (p.method.empty()) p.method = "averaging";
    if (!is_invariant_subspace(g, p.basis)) throw std::logic_error("split produced a non-invariant subspace");
  }
  return pieces;
}

Mat restrict_to_subspace(const Mat& g, const Rows& basis) { return restrict_sub(g, make_sub(basis)); }

bool is_invariant_subspace(const MatGroup& g, const Rows& basis) {
  Echelon e = rref(basis);
  for (const auto& gen : g.generators()) {
    for (const auto& v : e.rows) {
      if (!in_row_space(e, gen.apply(v))) return false;
    }
  }
  return true;
}

bool acts_faithfully(const MatGroup& g, const Rows& basis) {
  Sub s = make_sub(basis);
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (restrict_sub(g.element(i), s).is_identity()) return false;
  }
  return true;
}

}  // namespace finvar
