#pragma once

// Split simply-laced Lie algebras over Q in a Chevalley basis, their Killing
// forms, and restrictions of those forms to subalgebras.

#include <cstdint>
#include <string>
#include <vector>

#include "e8kit/linalg.hpp"
#include "e8kit/qform.hpp"
#include "e8kit/rootsys.hpp"

namespace e8kit {

struct Term {
  std::uint32_t index;
  std::int64_t coef;
};

/// Basis order: h_1..h_rank, then X_alpha for each root in RootSystem order.
/// Signs come from a bimultiplicative cocycle eps(alpha, beta) = (-1)^{a^T F b}
/// where F is upper triangular with F_ii = 1 and F_ij = 1 on Dynkin edges i<j.
class LieAlgebra {
 public:
  explicit LieAlgebra(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rs_.rank(); }
  int coxeter_number() const;
  int dual_coxeter_number() const { return coxeter_number(); }

  std::size_t h_index(std::size_t i) const { return i; }
  std::size_t x_index(const IVec& root) const;
  std::string basis_label(std::size_t k) const;
  /// Root of basis element k, or the zero vector for Cartan elements.
  IVec weight(std::size_t k) const;

  /// [x_a, x_b] as a sparse combination of basis elements.
  std::vector<Term> bracket(std::size_t a, std::size_t b) const;
  std::vector<Term> bracket(const std::vector<Term>& x, const std::vector<Term>& y) const;

  /// Structure constant N with [X_alpha, X_beta] = N X_{alpha+beta}.
  std::int64_t structure_constant(const IVec& alpha, const IVec& beta) const;

 private:
  int cocycle(const IVec& a, const IVec& b) const;

  RootSystem rs_;
  std::size_t dim_;
  std::vector<std::vector<int>> f_;
  std::vector<std::vector<Term>> table_;  // dim*dim, row-major
};

LieAlgebra chevalley_basis(const RootSystem& rs);

/// Sum of the Jacobiator of basis elements; empty when the identity holds.
std::vector<Term> jacobiator(const LieAlgebra& L, std::size_t a, std::size_t b, std::size_t c);

enum class FormScale { killing, reduced_killing };

struct FormMatrix {
  FormScale scale;
  QMatrix gram;
};

/// Integer Killing matrix tr(ad a ad b), computed in parallel over rows.
Matrix<std::int64_t> killing_integer_matrix(const LieAlgebra& L);
/// Same result computed by a single thread; kept as a reference.
Matrix<std::int64_t> killing_integer_matrix_serial(const LieAlgebra& L);

FormMatrix killing_matrix(const LieAlgebra& L, FormScale scale);

/// Witt class of the restriction of a symmetric matrix to the given basis indices.
QForm restricted_form(const QMatrix& gram, const std::vector<std::size_t>& indices, Field field = Field::Q);

/// Reduced Killing form restricted to the Cartan subalgebra.
QForm cartan_restriction_witt(const LieAlgebra& L);

struct BranchingReport {
  std::size_t subalg_dim = 0;
  std::size_t complement_dim = 0;
  bool roots_mapped = false;  ///< every source root lands on a target root
  bool cross_block_zero = false;
  QForm subalg_witt{Field::Q};
  QForm complement_witt{Field::Q};
};

/// Splits the E8 algebra into the image of D8 (through the coroot table)
/// and its complement, both in reduced Killing normalization.
BranchingReport branching_check(const LieAlgebra& e8, const CorootMap& map);
BranchingReport branching_check(const LieAlgebra& e8, const CorootMap& map, const FormMatrix& reduced);

}  // namespace e8kit
