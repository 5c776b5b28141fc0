#include "finvar/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace finvar {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 1 || c[k] > n || used[c[k]]) throw std::invalid_argument("cycles are not disjoint");
      used[c[k]] = true;
      v[c[k] - 1] = c[(k + 1) % c.size()];
    }
  }
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& o) const {
  if (o.degree() != degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[o.img_[i] - 1];
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = static_cast<int>(i) + 1;
  Perm p;
  p.img_ = std::move(v);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size() + 1, false);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j - 1]) {
      seen[j] = true;
      c.push_back(j);
    }
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int Perm::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

int Perm::sign() const {
  int s = 1;
  for (int len : cycle_type()) {
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(c[k]);
    }
    s += ")";
  }
  return s;
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : img_) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, int n) {
  std::vector<Perm> els{Perm::identity(n)};
  std::unordered_set<Perm> seen(els.begin(), els.end());
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (const auto& g : gens) {
      Perm h = els[i] * g;
      if (seen.insert(h).second) els.push_back(h);
    }
  }
  std::sort(els.begin(), els.end());
  return els;
}

}  // namespace finvar
