#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "finvar/mat.hpp"
#include "finvar/modp.hpp"
#include "finvar/perm.hpp"

namespace finvar {

struct GroupTooLarge : std::runtime_error {
  GroupTooLarge() : std::runtime_error("group too large or infinite") {}
};

enum class Storage { Auto, Exact, Modular };

struct ClosureOptions {
  std::size_t cap = 1000000;
  int jobs = 1;
  // Exact keeps every element as a Mat. Modular keeps images modulo a split
  // prime plus a Schreier word, and rebuilds exact elements on demand. Auto
  // picks Modular once phi(n) * dim^2 exceeds modular_threshold.
  Storage storage = Storage::Auto;
  int modular_threshold = 2048;
  // Parity label of each generator (same order as the input list); default all odd.
  std::vector<int> generator_parity;
};

class MatGroup {
 public:
  static MatGroup closure(const std::vector<Mat>& generators, const ClosureOptions& opts = {});
  // Subgroup given by an element list already known to be closed.
  static MatGroup from_closed_elements(const std::vector<Mat>& elements);

  const std::vector<Mat>& generators() const { return gens_; }
  std::size_t order() const { return count_; }
  int dim() const { return dim_; }
  int conductor() const { return n_; }
  bool is_exact() const { return !modular_; }

  // Exact element (rebuilt from its word in modular storage).
  Mat element(std::size_t i) const;
  // Throws in modular storage.
  const std::vector<Mat>& elements() const;
  std::optional<std::size_t> index_of(const Mat& g) const;
  bool contains(const Mat& g) const { return index_of(g).has_value(); }
  bool is_scalar_element(std::size_t i) const;

  // Parity of the generator word reaching element i, and whether every
  // rediscovery agreed with it.
  int parity(std::size_t i) const { return parity_[i]; }
  bool parity_consistent() const { return parity_consistent_; }
  // Generator indices (into generators()) whose product is element i.
  std::vector<int> word(std::size_t i) const;

 private:
  int dim_ = 0;
  int n_ = 1;
  std::size_t count_ = 0;
  bool modular_ = false;
  bool parity_consistent_ = true;
  std::vector<Mat> gens_;
  std::vector<Mat> elems_;
  std::shared_ptr<const ModField> field_;
  std::vector<uint64_t> keys_;  // modular storage, dim^2 per element
  std::vector<int32_t> parent_;
  std::vector<int16_t> via_;
  std::vector<uint8_t> parity_;
  std::unordered_map<uint64_t, uint32_t> bucket_;
  std::vector<uint32_t> chain_;

  std::vector<uint64_t> mod_key(const Mat& m) const;
  std::optional<std::size_t> find_exact(const Mat& m, uint64_t h) const;
  std::optional<std::size_t> find_modular(const uint64_t* key, uint64_t h) const;
  void link(std::size_t idx, uint64_t h);
  friend class ClosureRunner;
};

struct ScalarInfo {
  MatGroup scalars;
  std::size_t scalar_order = 0;
  std::size_t quotient_order = 0;
};

ScalarInfo scalar_subgroup(const MatGroup& g);
// True iff g N g^{-1} = N.
bool normalizes(const Mat& g, const MatGroup& n);

// Basis w12+, w12-, w13+, w13-, w14+, w14- with wjk(+/-) = ej^ek +/- (the complementary pair).
Mat exterior_square(const Mat& g);

struct NotPermutingLines : std::runtime_error {
  std::size_t element_index;
  NotPermutingLines(std::size_t idx, const std::string& what)
      : std::runtime_error(what), element_index(idx) {}
};

struct PermHom {
  int degree = 0;
  std::vector<Perm> images;  // indexed like the source group's elements
  MatGroup kernel;
  std::size_t image_order = 0;
};

// Permutation of the given lines (vectors spanning them) induced by each element.
Perm induced_line_permutation(const Mat& g, const std::vector<Vec>& lines);
// Acting through exterior_square on the w-basis when lines is empty.
PermHom line_permutation_hom(const MatGroup& g, const std::vector<Vec>& lines = {}, bool via_exterior_square = true);

}  // namespace finvar
