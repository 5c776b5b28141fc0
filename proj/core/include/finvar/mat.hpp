#pragma once

#include <string>
#include <vector>

#include "finvar/cycnum.hpp"
#include "finvar/linalg.hpp"

namespace finvar {

// Square matrix over Q(zeta_n); every entry carries the matrix's conductor.
class Mat {
 public:
  Mat() = default;
  Mat(int dim, int conductor);
  static Mat identity(int dim, int conductor = 1);
  static Mat scalar(int dim, const CycNum& c);
  static Mat diag(const std::vector<CycNum>& d);
  static Mat from_rows(const Rows& rows);
  // Integer shorthand for tests and catalog constructors.
  static Mat from_ints(const std::vector<std::vector<long long>>& rows);

  int dim() const { return dim_; }
  int conductor() const { return n_; }
  const CycNum& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, const CycNum& v);
  Rows rows() const;

  Mat embed(int target) const;
  Mat minimized() const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const CycNum& c) const;
  Mat pow(long long e) const;
  Mat inverse() const;
  Mat transpose() const;
  Mat conj_transpose() const;
  // Kronecker product.
  Mat kron(const Mat& o) const;

  CycNum det() const;
  CycNum trace() const;
  int rank() const;
  // Coefficients of det(t*I - A), lowest degree first, leading 1 last.
  std::vector<CycNum> char_poly() const;
  Vec apply(const Vec& v) const;

  bool is_identity() const;
  bool is_scalar() const;
  bool is_diagonal() const;
  bool is_monomial() const;

  std::size_t hash() const;
  std::string str() const;
  friend bool operator==(const Mat& a, const Mat& b);
  // Deterministic total order for sorting generator lists.
  friend bool canonical_less(const Mat& a, const Mat& b);

 private:
  int dim_ = 0;
  int n_ = 1;
  std::vector<CycNum> e_;
  CycNum& ref(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace finvar

template <>
struct std::hash<finvar::Mat> {
  std::size_t operator()(const finvar::Mat& m) const { return m.hash(); }
};
