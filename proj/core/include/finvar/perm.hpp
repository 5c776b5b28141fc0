#pragma once

#include <string>
#include <vector>

namespace finvar {

// Permutation of {1..n}. Composition (a * b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  // images[i] is the image of i+1 (values 1-based).
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm conjugate_by(const Perm& g) const { return g * *this * g.inverse(); }
  bool is_identity() const;
  int order() const;
  int sign() const;
  // Cycle lengths > 1, sorted decreasing.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;
  std::string str() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }
  std::size_t hash() const;

 private:
  std::vector<int> img_;
};

// All permutations of {1..n} in lexicographic order of image lists.
std::vector<Perm> all_perms(int n);
// Elements of the group generated, sorted.
std::vector<Perm> perm_closure(const std::vector<Perm>& gens, int n);

}  // namespace finvar

template <>
struct std::hash<finvar::Perm> {
  std::size_t operator()(const finvar::Perm& p) const { return p.hash(); }
};
