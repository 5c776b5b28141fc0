#include "finvar/matgroup.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"

namespace finvar {
namespace {

uint64_t mix64(uint64_t h) {
  h ^= h >> 31;
  h *= 0x7fb5d329728ea185ULL;
  h ^= h >> 27;
  h *= 0x81dadef4bc2dd44dULL;
  h ^= h >> 33;
  return h;
}

uint64_t key_hash(const uint64_t* k, int len) {
  uint64_t h = 0x51ed270b27f1ab5dULL;
  for (int i = 0; i < len; ++i) h = mix64(h ^ k[i]);
  return h;
}

void mod_mul(const uint64_t* a, const uint64_t* b, uint64_t* out, int d, uint64_t p) {
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      unsigned __int128 acc = 0;
      for (int k = 0; k < d; ++k) {
        acc += static_cast<unsigned __int128>(a[i * d + k]) * b[k * d + j];
        if ((k & 15) == 15) acc %= p;
      }
      out[i * d + j] = static_cast<uint64_t>(acc % p);
    }
  }
}

uint64_t mod_det(std::vector<uint64_t> a, int d, uint64_t p) {
  uint64_t det = 1;
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int i = c; i < d; ++i) {
      if (a[i * d + c] != 0) { piv = i; break; }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int k = 0; k < d; ++k) std::swap(a[piv * d + k], a[c * d + k]);
      det = (p - det) % p;
    }
    det = mulmod(det, a[c * d + c], p);
    uint64_t inv = invmod(a[c * d + c], p);
    for (int i = c + 1; i < d; ++i) {
      uint64_t f = mulmod(a[i * d + c], inv, p);
      if (f == 0) continue;
      for (int k = c; k < d; ++k) {
        a[i * d + k] = (a[i * d + k] + p - mulmod(f, a[c * d + k], p)) % p;
      }
    }
  }
  return det;
}

}  // namespace

class ClosureRunner {
 public:
  static MatGroup run(const std::vector<Mat>& input, const ClosureOptions& opts);
};

std::vector<uint64_t> MatGroup::mod_key(const Mat& m) const {
  std::vector<uint64_t> k(static_cast<std::size_t>(dim_) * dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) k[i * dim_ + j] = field_->reduce(m.at(i, j));
  }
  return k;
}

std::optional<std::size_t> MatGroup::find_exact(const Mat& m, uint64_t h) const {
  auto it = bucket_.find(h);
  if (it == bucket_.end()) return std::nullopt;
  for (uint32_t idx = it->second; idx != UINT32_MAX; idx = chain_[idx]) {
    if (elems_[idx] == m) return idx;
  }
  return std::nullopt;
}

std::optional<std::size_t> MatGroup::find_modular(const uint64_t* key, uint64_t h) const {
  auto it = bucket_.find(h);
  if (it == bucket_.end()) return std::nullopt;
  const std::size_t len = static_cast<std::size_t>(dim_) * dim_;
  for (uint32_t idx = it->second; idx != UINT32_MAX; idx = chain_[idx]) {
    if (std::equal(key, key + len, keys_.begin() + idx * len)) return idx;
  }
  return std::nullopt;
}

void MatGroup::link(std::size_t idx, uint64_t h) {
  chain_.push_back(UINT32_MAX);
  auto [it, inserted] = bucket_.try_emplace(h, static_cast<uint32_t>(idx));
  if (!inserted) {
    chain_[idx] = it->second;
    it->second = static_cast<uint32_t>(idx);
  }
}

MatGroup ClosureRunner::run(const std::vector<Mat>& input, const ClosureOptions& opts) {
  if (input.empty()) throw std::invalid_argument("closure needs at least one generator");
  const int dim = input[0].dim();
  long long n = 1;
  for (const auto& g : input) {
    if (g.dim() != dim) throw std::invalid_argument("generators differ in dimension");
    n = lcm_ll(n, g.conductor());
  }
  struct Gen {
    Mat m;
    int parity;
  };
  std::vector<Gen> gens;
  for (std::size_t i = 0; i < input.size(); ++i) {
    int par = i < opts.generator_parity.size() ? opts.generator_parity[i] & 1 : 1;
    gens.push_back({input[i].embed(static_cast<int>(n)), par});
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Gen& a, const Gen& b) {
    if (canonical_less(a.m, b.m)) return true;
    if (canonical_less(b.m, a.m)) return false;
    return a.parity < b.parity;
  });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Gen& a, const Gen& b) { return a.m == b.m && a.parity == b.parity; }),
             gens.end());

  MatGroup G;
  G.dim_ = dim;
  G.n_ = static_cast<int>(n);
  for (const auto& g : gens) G.gens_.push_back(g.m);
  const int ng = static_cast<int>(gens.size());
  const std::size_t len = static_cast<std::size_t>(dim) * dim;

  bool modular = opts.storage == Storage::Modular ||
                 (opts.storage == Storage::Auto &&
                  static_cast<long long>(euler_phi(G.n_)) * dim * dim > opts.modular_threshold);
  G.modular_ = modular;
  G.field_ = std::make_shared<const ModField>(std::max(G.n_, 1));

  std::vector<std::vector<uint64_t>> gen_keys;
  for (const auto& g : gens) {
    gen_keys.push_back(G.mod_key(g.m));
    bool singular = modular ? mod_det(gen_keys.back(), dim, G.field_->p()) == 0 : g.m.det().is_zero();
    if (singular) throw std::invalid_argument("generator is not invertible");
  }

  const Mat id = Mat::identity(dim, G.n_);
  if (modular) {
    std::vector<uint64_t> k = G.mod_key(id);
    G.keys_.insert(G.keys_.end(), k.begin(), k.end());
    G.link(0, key_hash(k.data(), static_cast<int>(len)));
  } else {
    G.elems_.push_back(id);
    G.link(0, id.hash());
  }
  G.parent_.push_back(-1);
  G.via_.push_back(-1);
  G.parity_.push_back(0);
  G.count_ = 1;

  const uint64_t p = G.field_->p();
  const std::size_t batch = 256;
  std::size_t head = 0;
  while (head < G.count_) {
    const std::size_t end = std::min(G.count_, head + batch);
    const std::size_t work = (end - head) * ng;
    if (modular) {
      std::vector<uint64_t> prods(work * len);
      detail::parallel_for(opts.jobs, work, [&](std::size_t w) {
        std::size_t i = head + w / ng;
        int g = static_cast<int>(w % ng);
        mod_mul(G.keys_.data() + i * len, gen_keys[g].data(), prods.data() + w * len, dim, p);
      });
      for (std::size_t w = 0; w < work; ++w) {
        const uint64_t* k = prods.data() + w * len;
        uint64_t h = key_hash(k, static_cast<int>(len));
        std::size_t i = head + w / ng;
        int g = static_cast<int>(w % ng);
        int par = G.parity_[i] ^ gens[g].parity;
        if (auto found = G.find_modular(k, h)) {
          if (G.parity_[*found] != par) G.parity_consistent_ = false;
          continue;
        }
        if (G.count_ >= opts.cap) throw GroupTooLarge();
        G.keys_.insert(G.keys_.end(), k, k + len);
        G.link(G.count_, h);
        G.parent_.push_back(static_cast<int32_t>(i));
        G.via_.push_back(static_cast<int16_t>(g));
        G.parity_.push_back(static_cast<uint8_t>(par));
        ++G.count_;
      }
    } else {
      std::vector<Mat> prods(work);
      std::vector<uint64_t> hashes(work);
      detail::parallel_for(opts.jobs, work, [&](std::size_t w) {
        std::size_t i = head + w / ng;
        int g = static_cast<int>(w % ng);
        prods[w] = G.elems_[i] * gens[g].m;
        hashes[w] = prods[w].hash();
      });
      for (std::size_t w = 0; w < work; ++w) {
        std::size_t i = head + w / ng;
        int g = static_cast<int>(w % ng);
        int par = G.parity_[i] ^ gens[g].parity;
        if (auto found = G.find_exact(prods[w], hashes[w])) {
          if (G.parity_[*found] != par) G.parity_consistent_ = false;
          continue;
        }
        if (G.count_ >= opts.cap) throw GroupTooLarge();
        G.elems_.push_back(std::move(prods[w]));
        G.link(G.count_, hashes[w]);
        G.parent_.push_back(static_cast<int32_t>(i));
        G.via_.push_back(static_cast<int16_t>(g));
        G.parity_.push_back(static_cast<uint8_t>(par));
        ++G.count_;
      }
    }
    head = end;
  }
  return G;
}

MatGroup MatGroup::closure(const std::vector<Mat>& generators, const ClosureOptions& opts) {
  return ClosureRunner::run(generators, opts);
}

MatGroup MatGroup::from_closed_elements(const std::vector<Mat>& elements) {
  if (elements.empty()) throw std::invalid_argument("empty element list");
  std::vector<Mat> gens;
  std::optional<MatGroup> current;
  for (const auto& e : elements) {
    if (e.is_identity()) continue;
    if (current && current->contains(e)) continue;
    gens.push_back(e);
    ClosureOptions o;
    o.storage = Storage::Exact;
    current = closure(gens, o);
    if (current->order() == elements.size()) break;
  }
  if (!current) {
    ClosureOptions o;
    o.storage = Storage::Exact;
    current = closure({Mat::identity(elements[0].dim(), elements[0].conductor())}, o);
  }
  if (current->order() != elements.size()) throw std::invalid_argument("element list is not a closed group");
  return *current;
}

Mat MatGroup::element(std::size_t i) const {
  if (!modular_) return elems_.at(i);
  Mat m = Mat::identity(dim_, n_);
  for (int g : word(i)) m = m * gens_[g];
  return m;
}

const std::vector<Mat>& MatGroup::elements() const {
  if (modular_) throw std::logic_error("elements() needs exact storage");
  return elems_;
}

std::vector<int> MatGroup::word(std::size_t i) const {
  std::vector<int> w;
  for (int32_t cur = static_cast<int32_t>(i); parent_[cur] >= 0; cur = parent_[cur]) w.push_back(via_[cur]);
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<std::size_t> MatGroup::index_of(const Mat& g) const {
  if (g.dim() != dim_) return std::nullopt;
  Mat m = g;
  if (m.conductor() != n_) {
    if (n_ % m.conductor() != 0) {
      m = m.minimized();
      if (n_ % m.conductor() != 0) return std::nullopt;
    }
    m = m.embed(n_);
  }
  if (modular_) {
    std::vector<uint64_t> k = mod_key(m);
    return find_modular(k.data(), key_hash(k.data(), static_cast<int>(k.size())));
  }
  return find_exact(m, m.hash());
}

bool MatGroup::is_scalar_element(std::size_t i) const {
  if (!modular_) return elems_[i].is_scalar();
  const uint64_t* k = keys_.data() + i * dim_ * dim_;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      uint64_t v = k[r * dim_ + c];
      if (r == c ? v != k[0] : v != 0) return false;
    }
  }
  return true;
}

ScalarInfo scalar_subgroup(const MatGroup& g) {
  std::vector<Mat> sc;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.is_scalar_element(i)) sc.push_back(g.element(i));
  }
  ScalarInfo info{MatGroup::from_closed_elements(sc), sc.size(), g.order() / sc.size()};
  return info;
}

bool normalizes(const Mat& g, const MatGroup& n) {
  Mat gi = g.inverse();
  for (const auto& h : n.generators()) {
    if (!n.contains(g * h * gi)) return false;
  }
  return true;
}

Mat exterior_square(const Mat& g) {
  if (g.dim() != 4) throw std::invalid_argument("exterior_square needs a 4x4 matrix");
  // Standard basis order e12, e13, e14, e23, e24, e34.
  const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Mat std_m(6, g.conductor());
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      int i = pairs[r][0], j = pairs[r][1], k = pairs[c][0], l = pairs[c][1];
      std_m.set(r, c, g.at(i, k) * g.at(j, l) - g.at(j, k) * g.at(i, l));
    }
  }
  // Columns of P: w12+, w12-, w13+, w13-, w14+, w14-.
  const int w[6][2] = {{0, 5}, {0, 5}, {1, 4}, {1, 4}, {2, 3}, {2, 3}};
  Mat p(6, 1);
  for (int c = 0; c < 6; ++c) {
    p.set(w[c][0], c, CycNum(1));
    p.set(w[c][1], c, CycNum(c % 2 == 0 ? 1 : -1));
  }
  return p.inverse() * std_m * p;
}

Perm induced_line_permutation(const Mat& g, const std::vector<Vec>& lines) {
  const int k = static_cast<int>(lines.size());
  std::vector<int> img(k, 0);
  std::vector<bool> hit(k + 1, false);
  for (int a = 0; a < k; ++a) {
    Vec v = g.apply(lines[a]);
    int found = -1;
    for (int b = 0; b < k && found < 0; ++b) {
      const Vec& l = lines[b];
      int j = 0;
      while (j < static_cast<int>(l.size()) && l[j].is_zero()) ++j;
      if (j == static_cast<int>(l.size()) || v[j].is_zero()) continue;
      CycNum ratio = v[j] / l[j];
      bool same = true;
      for (std::size_t t = 0; t < l.size() && same; ++t) same = v[t] == ratio * l[t];
      if (same) found = b;
    }
    if (found < 0 || hit[found + 1]) throw std::runtime_error("matrix does not permute the lines");
    hit[found + 1] = true;
    img[a] = found + 1;
  }
  return Perm(img);
}

PermHom line_permutation_hom(const MatGroup& g, const std::vector<Vec>& lines, bool via_exterior_square) {
  std::vector<Vec> ls = lines;
  const int space_dim = via_exterior_square ? 6 : g.dim();
  if (ls.empty()) {
    for (int i = 0; i < space_dim; ++i) {
      Vec v(space_dim, CycNum(0));
      v[i] = CycNum(1);
      ls.push_back(v);
    }
  }
  PermHom hom;
  hom.degree = static_cast<int>(ls.size());
  std::vector<Mat> kernel;
  std::set<Perm> distinct;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Mat e = g.element(i);
    Mat acting = via_exterior_square ? exterior_square(e) : e;
    Perm p;
    try {
      p = induced_line_permutation(acting, ls);
    } catch (const std::runtime_error&) {
      throw NotPermutingLines(i, "element " + std::to_string(i) + " " + e.str() + " does not permute the lines");
    }
    if (p.is_identity()) kernel.push_back(e);
    distinct.insert(p);
    hom.images.push_back(std::move(p));
  }
  hom.image_order = distinct.size();
  hom.kernel = MatGroup::from_closed_elements(kernel);
  return hom;
}

}  // namespace finvar
