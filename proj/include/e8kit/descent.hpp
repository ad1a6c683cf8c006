#pragma once

// Matrix realizations of Sp and Spin involutions, the Kronecker isomorphism
// M2 (x) M8 -> M16, and quadratic-extension descent of bilinear forms.

#include <cstdint>
#include <string>
#include <vector>

#include "e8kit/linalg.hpp"
#include "e8kit/qform.hpp"

namespace e8kit {

/// n x n matrix with ones on the antidiagonal.
QMatrix antidiagonal_ones(std::size_t n);
/// Block matrix [[0, S_n], [-S_n, 0]].
QMatrix symplectic_gram(std::size_t n);
/// Matrix unit E_ij (0-based) of size n.
QMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);
QMatrix kronecker(const QMatrix& a, const QMatrix& b);

/// x -> u x^T u^{-1}.
class InvolutionAlgebra {
 public:
  enum class Kind { orthogonal, symplectic };

  InvolutionAlgebra(QMatrix u, Kind kind);

  const QMatrix& gram() const { return u_; }
  Kind kind() const { return kind_; }
  std::size_t size() const { return u_.rows(); }
  QMatrix apply(const QMatrix& x) const;

 private:
  QMatrix u_;
  QMatrix u_inv_;
  Kind kind_;
};

/// gamma_{2n}(x) = J^{-1} x^T J with J = symplectic_gram(n).
InvolutionAlgebra gamma_involution(std::size_t n);
/// sigma_{2n}(x) = S_{2n} x^T S_{2n}^{-1}.
InvolutionAlgebra sigma_involution(std::size_t n);
/// The orthogonal involution on M16 adjoint to the tensor product of the
/// symplectic forms on M2 and M8.
InvolutionAlgebra sigma_prime16();

/// Conjugating matrix carrying sigma'_16 to sigma_16.
QMatrix conjugation_matrix();

struct IsoReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0 && checked > 0; }
};

/// Involution compatibility of the Kronecker map on all 256 matrix units,
/// and multiplicativity on all unit pairs with indices <= 2 plus `samples`
/// random unit pairs.
IsoReport kronecker_iso(std::size_t samples = 10000, std::uint64_t seed = 1);
/// sigma16(U x U^{-1}) = U sigma'16(x) U^{-1} on all 256 matrix units.
IsoReport conjugation_iso();
/// phi(xy) = phi(x) phi(y) for the full composite on random unit pairs.
IsoReport composite_multiplicativity(std::size_t samples, std::uint64_t seed);

/// Image of E_12 (x) 1_8 under the Kronecker map followed by conjugation.
QMatrix sl2_image();
/// The 16 x 16 matrix displayed for that image: 1_4 in block (1,2), -1_4 in block (3,4).
QMatrix sl2_image_expected();

/// Matrix over Q(sqrt a) stored as E0 + E1 sqrt(a).
struct QuadExtMatrix {
  std::int64_t a = 0;
  QMatrix e0;
  QMatrix e1;

  std::size_t size() const { return e0.rows(); }
  QuadExtMatrix conjugate() const;
  friend QuadExtMatrix operator*(const QuadExtMatrix& x, const QuadExtMatrix& y);
  bool is_identity() const;
};

QuadExtMatrix rational_quad_matrix(std::int64_t a, const QMatrix& m);

/// eta * iota(eta) == 1.
bool satisfies_cocycle(const QuadExtMatrix& eta);

/// Restriction of the form with Gram matrix S to the Q-subspace of Q(sqrt a)^n
/// fixed by x -> eta iota(x), diagonalized.
QForm descent_form(const QuadExtMatrix& eta, const QMatrix& s);

/// The 2x2 cocycle [[0, c], [1/c, 0]] over Q(sqrt a).
QuadExtMatrix plane_cocycle(std::int64_t a, const mpq_class& c);

/// Antidiagonal 8x8 matrix with entries -1, 1/b, -b, 1, 1, -1/b, b, -1 by row.
QMatrix crux_matrix(std::int64_t b);

struct CruxReport {
  QForm form{Field::Q};
  QForm whole_form{Field::Q};   ///< descent over all of Q(sqrt a)^8 at once
  bool preserves_planes = false;
  bool orthogonal = false;      ///< M^T S_8 M = S_8
  bool involutive = false;      ///< M^2 = 1
  int witt_index = 0;
};

/// Descends S_8 along the crux matrix plane by plane; a must be a nonsquare.
CruxReport crux_form(std::int64_t a, std::int64_t b);

/// The closed form <2> (x) <-1, b, -b, 1> (x) <1, -a>.
QForm crux_expected(std::int64_t a, std::int64_t b);

}  // namespace e8kit
