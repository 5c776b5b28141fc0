#include "finvar/linalg.hpp"

namespace finvar {

int common_conductor(const Vec& v) {
  long long n = 1;
  for (const auto& x : v) {
    if (!x.is_rational()) n = lcm_ll(n, x.conductor());
  }
  return static_cast<int>(n);
}

int common_conductor(const Rows& rows) {
  long long n = 1;
  for (const auto& r : rows) n = lcm_ll(n, common_conductor(r));
  return static_cast<int>(n);
}

void embed_all(Vec& v, int conductor) {
  for (auto& x : v) {
    if (x.conductor() != conductor) {
      x = x.is_rational() ? CycNum(x.to_rational(), conductor) : x.embed(conductor);
    }
  }
}

void embed_all(Rows& rows, int conductor) {
  for (auto& r : rows) embed_all(r, conductor);
}

Echelon rref(Rows rows) {
  Echelon out;
  if (rows.empty()) return out;
  const int n = common_conductor(rows);
  embed_all(rows, n);
  const int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < ncols && r < nrows; ++col) {
    int piv = -1;
    for (int i = r; i < nrows; ++i) {
      if (!rows[i][col].is_zero()) { piv = i; break; }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    CycNum inv = rows[r][col].inverse();
    for (int k = col; k < ncols; ++k) {
      if (!rows[r][k].is_zero()) rows[r][k] *= inv;
    }
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      CycNum f = rows[i][col];
      for (int k = col; k < ncols; ++k) {
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
      }
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

int rank(const Rows& rows) { return static_cast<int>(rref(rows).rows.size()); }

Rows nullspace(const Rows& a, int ncols) {
  Echelon e = rref(a);
  const int n = e.rows.empty() ? 1 : e.rows[0][0].conductor();
  std::vector<bool> is_pivot(ncols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  Rows basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, CycNum(Rational(0), n));
    v[free] = CycNum(Rational(1), n);
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Rows& a, const Vec& b) {
  const int ncols = a.empty() ? 0 : static_cast<int>(a[0].size());
  Rows aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(std::move(aug));
  Vec x(ncols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == ncols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][ncols];
  }
  return x;
}

bool in_row_space(const Echelon& e, const Vec& v) {
  Vec w = v;
  if (!e.rows.empty()) embed_all(w, static_cast<int>(lcm_ll(common_conductor(w), e.rows[0][0].conductor())));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const CycNum f = w[e.pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!e.rows[i][k].is_zero()) w[k] -= f * e.rows[i][k];
    }
  }
  for (const auto& x : w) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rows transpose(const Rows& a, int ncols) {
  Rows t(ncols, Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < ncols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

}  // namespace finvar
