#pragma once

#include <memory>
#include <vector>

#include "holotriple/spaces.hpp"

namespace holo {

// One local block acting on a single tensor factor.
struct KronFactor {
  int factor = 0;
  SpMat op;
};

// coeff times a Kronecker product of local blocks (identity on omitted
// factors); factor indices strictly increasing.
struct KronTerm {
  cd coeff{1.0};
  std::vector<KronFactor> factors;
};

// Immutable lazy operator: sums of Kronecker terms, products, adjoints, and
// (for small spaces) explicit sparse matrices.  Copies are cheap shares.
class SparseOperator {
 public:
  SparseOperator() = default;

  static SparseOperator leaf(const CompositeSpace* space,
                             std::vector<KronTerm> terms);
  static SparseOperator explicit_matrix(const CompositeSpace* space, SpMat m);
  static SparseOperator identity(const CompositeSpace* space);
  static SparseOperator zero(const CompositeSpace* space);
  static SparseOperator sum(std::vector<SparseOperator> parts);
  // prod(A, B, ...) applies right-to-left: (A o B)(x) = A(B(x)).
  static SparseOperator prod(std::vector<SparseOperator> parts);

  bool valid() const { return node_ != nullptr; }
  const CompositeSpace* space() const;
  Vec apply(const Vec& x) const;
  SparseOperator adjoint() const;
  SparseOperator scaled(cd c) const;

  // Assembles the full sparse matrix; throws above the dimension limit.
  SpMat materialize(long limit = 20000) const;
  Mat dense(long limit = 20000) const;

 private:
  enum class Kind { kLeaf, kExplicit, kSum, kProd };
  struct Node {
    Kind kind = Kind::kLeaf;
    const CompositeSpace* space = nullptr;
    std::vector<KronTerm> terms;
    SpMat explicit_m;
    std::vector<SparseOperator> kids;
  };
  explicit SparseOperator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(cd c, const SparseOperator& a);

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b);

// Applies the local block of one factor to a composite-index vector.
void apply_local(const CompositeSpace& space, int factor, const SpMat& op,
                 const Vec& x, Vec& y, cd scale);

// Unitary rearranging tensor factors: content of factor k moves to slot
// perm[k].  Explicit matrix; small spaces only.
SparseOperator factor_permutation(const CompositeSpace* space,
                                  const std::vector<int>& perm,
                                  long limit = 20000);

SpMat spkron(const SpMat& a, const SpMat& b);
SpMat sparse_from_dense(const Mat& m, double drop = 0.0);

}  // namespace holo
