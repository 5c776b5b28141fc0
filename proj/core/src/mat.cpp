#include "finvar/mat.hpp"

#include <ostream>
#include <stdexcept>

namespace finvar {

Mat::Mat(int dim, int conductor) : dim_(dim), n_(conductor) {
  e_.assign(static_cast<std::size_t>(dim) * dim, CycNum(Rational(0), conductor));
}

Mat Mat::identity(int dim, int conductor) {
  Mat m(dim, conductor);
  for (int i = 0; i < dim; ++i) m.ref(i, i) = CycNum(Rational(1), conductor);
  return m;
}

Mat Mat::scalar(int dim, const CycNum& c) {
  Mat m(dim, c.conductor());
  for (int i = 0; i < dim; ++i) m.ref(i, i) = c;
  return m;
}

Mat Mat::diag(const std::vector<CycNum>& d) {
  Mat m(static_cast<int>(d.size()), common_conductor(d));
  for (int i = 0; i < m.dim_; ++i) m.set(i, i, d[i]);
  return m;
}

Mat Mat::from_rows(const Rows& rows) {
  const int d = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != d) throw std::invalid_argument("matrix is not square");
  }
  Mat m(d, common_conductor(rows));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::from_ints(const std::vector<std::vector<long long>>& rows) {
  Rows r;
  for (const auto& row : rows) {
    Vec v;
    for (long long x : row) v.emplace_back(Rational(x));
    r.push_back(std::move(v));
  }
  return from_rows(r);
}

void Mat::set(int i, int j, const CycNum& v) {
  if (v.is_rational()) {
    ref(i, j) = CycNum(v.to_rational(), n_);
    return;
  }
  if (n_ % v.conductor() != 0) {
    *this = embed(static_cast<int>(lcm_ll(n_, v.conductor())));
  }
  ref(i, j) = v.embed(n_);
}

Rows Mat::rows() const {
  Rows r(dim_, Vec(dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) r[i][j] = at(i, j);
  }
  return r;
}

Mat Mat::embed(int target) const {
  if (target == n_) return *this;
  Mat m(dim_, target);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].embed(target);
  return m;
}

Mat Mat::minimized() const {
  long long n = 1;
  for (const auto& x : e_) {
    if (!x.is_rational()) n = lcm_ll(n, x.minimized().conductor());
  }
  Mat m(dim_, static_cast<int>(n));
  for (std::size_t k = 0; k < e_.size(); ++k) {
    m.e_[k] = e_[k].is_rational() ? CycNum(e_[k].to_rational(), m.n_) : *e_[k].restrict_to(m.n_);
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch in product");
  if (n_ != o.n_) {
    int m = static_cast<int>(lcm_ll(n_, o.n_));
    return embed(m) * o.embed(m);
  }
  Mat r(dim_, n_);
  CycAccumulator acc(n_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      bool any = false;
      for (int k = 0; k < dim_; ++k) {
        const CycNum& a = at(i, k);
        if (a.is_zero()) continue;
        const CycNum& b = o.at(k, j);
        if (b.is_zero()) continue;
        acc.add_product(a, b);
        any = true;
      }
      if (any) r.ref(i, j) = acc.take();
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (n_ != o.n_) {
    int m = static_cast<int>(lcm_ll(n_, o.n_));
    return embed(m) + o.embed(m);
  }
  Mat r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Mat Mat::scaled(const CycNum& c) const {
  int m = static_cast<int>(lcm_ll(n_, c.is_rational() ? 1 : c.conductor()));
  Mat r = embed(m);
  CycNum cc = c.is_rational() ? CycNum(c.to_rational(), m) : c.embed(m);
  for (auto& x : r.e_) {
    if (!x.is_zero()) x = x * cc;
  }
  return r;
}

Mat Mat::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Mat result = identity(dim_, n_);
  Mat base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Mat Mat::inverse() const {
  Rows aug(dim_, Vec(2 * dim_, CycNum(Rational(0), n_)));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) aug[i][j] = at(i, j);
    aug[i][dim_ + i] = CycNum(Rational(1), n_);
  }
  Echelon e = rref(std::move(aug));
  if (static_cast<int>(e.rows.size()) < dim_ || e.pivots[dim_ - 1] != dim_ - 1) {
    throw std::domain_error("matrix is singular");
  }
  Mat r(dim_, n_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) r.set(i, j, e.rows[i][dim_ + j]);
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(dim_, n_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) r.ref(j, i) = at(i, j);
  }
  return r;
}

Mat Mat::conj_transpose() const {
  Mat r(dim_, n_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) r.ref(j, i) = at(i, j).conj();
  }
  return r;
}

Mat Mat::kron(const Mat& o) const {
  Rows r(dim_ * o.dim_, Vec(dim_ * o.dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < o.dim_; ++k) {
        for (int l = 0; l < o.dim_; ++l) r[i * o.dim_ + k][j * o.dim_ + l] = at(i, j) * o.at(k, l);
      }
    }
  }
  return from_rows(r);
}

CycNum Mat::det() const {
  Rows a = rows();
  CycNum d(Rational(1), n_);
  for (int c = 0; c < dim_; ++c) {
    int piv = -1;
    for (int i = c; i < dim_; ++i) {
      if (!a[i][c].is_zero()) { piv = i; break; }
    }
    if (piv < 0) return CycNum(Rational(0), n_);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    CycNum inv = a[c][c].inverse();
    for (int i = c + 1; i < dim_; ++i) {
      if (a[i][c].is_zero()) continue;
      CycNum f = a[i][c] * inv;
      for (int k = c; k < dim_; ++k) {
        if (!a[c][k].is_zero()) a[i][k] -= f * a[c][k];
      }
    }
  }
  return d;
}

CycNum Mat::trace() const {
  CycNum t(Rational(0), n_);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

int Mat::rank() const { return finvar::rank(rows()); }

std::vector<CycNum> Mat::char_poly() const {
  // Faddeev-LeVerrier.
  std::vector<CycNum> c(dim_ + 1, CycNum(Rational(0), n_));
  c[dim_] = CycNum(Rational(1), n_);
  Mat m(dim_, n_);
  for (int k = 1; k <= dim_; ++k) {
    Mat next = *this * m;
    for (int i = 0; i < dim_; ++i) next.ref(i, i) += c[dim_ - k + 1];
    m = std::move(next);
    Mat am = *this * m;
    c[dim_ - k] = am.trace().scaled(Rational(-1, k));
  }
  return c;
}

Vec Mat::apply(const Vec& v) const {
  Vec out(dim_, CycNum(Rational(0), n_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

bool Mat::is_identity() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Mat::is_scalar() const {
  if (!is_diagonal()) return false;
  for (int i = 1; i < dim_; ++i) {
    if (!(at(i, i) == at(0, 0))) return false;
  }
  return true;
}

bool Mat::is_diagonal() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Mat::is_monomial() const {
  std::vector<int> col_count(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    int nz = 0;
    for (int j = 0; j < dim_; ++j) {
      if (!at(i, j).is_zero()) {
        ++nz;
        ++col_count[j];
      }
    }
    if (nz != 1) return false;
  }
  for (int c : col_count) {
    if (c != 1) return false;
  }
  return true;
}

std::size_t Mat::hash() const {
  std::size_t h = static_cast<std::size_t>(dim_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& x : e_) h = (h ^ x.hash()) * 0x100000001b3ULL + (h >> 31);
  return h;
}

std::string Mat::str() const {
  std::string s = "[";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ", ";
    s += "[";
    for (int j = 0; j < dim_; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.n_ == b.n_) return a.e_ == b.e_;
  for (std::size_t k = 0; k < a.e_.size(); ++k) {
    if (!(a.e_[k] == b.e_[k])) return false;
  }
  return true;
}

bool canonical_less(const Mat& a, const Mat& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t k = 0; k < a.e_.size(); ++k) {
    const auto& x = a.e_[k].coeffs();
    const auto& y = b.e_[k].coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto c = x[i] <=> y[i];
      if (c != 0) return c < 0;
    }
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

}  // namespace finvar
