#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "finvar/matgroup.hpp"

namespace finvar {

struct SplitNotFound : std::runtime_error {
  SplitNotFound() : std::runtime_error("irreducible or splitting not found") {}
};

struct SplitOptions {
  uint64_t seed = 0x5eed5eedULL;
  int tries = 2;
  // Field to split over; 0 means the group's own conductor.
  int field_conductor = 0;
  // Elements examined by the eigenvector-spinning step.
  std::size_t spin_elements = 256;
};

struct InvariantSubspace {
  Rows basis;          // spanning vectors, one per row
  std::string method;  // "averaging" or "spinning"
  int dim() const { return static_cast<int>(basis.size()); }
};

// Decomposes the ambient space into G-invariant subspaces. Throws
// SplitNotFound if no proper invariant subspace is found.
std::vector<InvariantSubspace> equivariant_split(const MatGroup& g, const SplitOptions& opts = {});

// Matrix of g on the invariant span of basis, in the reduced echelon basis of that span.
Mat restrict_to_subspace(const Mat& g, const Rows& basis);
bool is_invariant_subspace(const MatGroup& g, const Rows& basis);
// Only the identity acts trivially on the subspace.
bool acts_faithfully(const MatGroup& g, const Rows& basis);

}  // namespace finvar
