#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hopfrec/matrix.hpp"
#include "hopfrec/report.hpp"
#include "hopfrec/scalar.hpp"

namespace hopfrec {

/// Coordinates of an element over a fixed basis.
using Vec = std::vector<Scalar>;

/// Finite-dimensional algebra by structure constants:
/// e_i e_j = sum_k mult(i, j, k) e_k, unit = sum_k unit[k] e_k.
struct AlgebraPresentation {
  std::size_t dim = 0;
  std::vector<Scalar> mult;  // dim^3, index (i*dim + j)*dim + k
  Vec unit;                  // dim

  static AlgebraPresentation zeros(std::size_t n);

  Scalar& m(std::size_t i, std::size_t j, std::size_t k) {
    return mult[(i * dim + j) * dim + k];
  }
  const Scalar& m(std::size_t i, std::size_t j, std::size_t k) const {
    return mult[(i * dim + j) * dim + k];
  }

  /// Product of two elements given in coordinates.
  Vec multiply(const Vec& x, const Vec& y) const;

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;
};

/// Hopf algebra by structure tensors over one basis.
/// Delta(e_i) = sum_{j,k} delta(i, j, k) e_j (x) e_k; the antipode matrix has
/// S(e_i) = sum_j antipode(j, i) e_j, i.e. column i holds S(e_i).
struct HopfPresentation {
  AlgebraPresentation alg;
  std::vector<Scalar> comult;  // dim^3, index (i*dim + j)*dim + k
  Vec counit;
  Matrix antipode;

  static HopfPresentation zeros(std::size_t n);

  std::size_t dim() const { return alg.dim; }
  Scalar& delta(std::size_t i, std::size_t j, std::size_t k) {
    return comult[(i * alg.dim + j) * alg.dim + k];
  }
  const Scalar& delta(std::size_t i, std::size_t j, std::size_t k) const {
    return comult[(i * alg.dim + j) * alg.dim + k];
  }

  /// Delta applied to an element, as a dim*dim coordinate vector over
  /// e_j (x) e_k at index j*dim + k.
  Vec comultiply(const Vec& x) const;

  friend bool operator==(const HopfPresentation&, const HopfPresentation&) = default;
};

/// Throws ShapeError when any tensor disagrees with dim.
void validate_shapes(const AlgebraPresentation& a);
void validate_shapes(const HopfPresentation& h);

/// Associativity and both unit laws, entry by entry.
Report check_algebra(const AlgebraPresentation& a);

/// Coassociativity, counit laws, multiplicativity of Delta and epsilon, and
/// compatibility of both with the unit.
Report check_bialgebra(const HopfPresentation& h);

/// Both antipode snake identities. Additionally records, as informational
/// entries, whether S is an algebra and coalgebra antihomomorphism and
/// whether S o S = id.
Report check_antipode(const HopfPresentation& h);

/// All three checkers in sequence.
Report check_hopf(const HopfPresentation& h);

/// Tensor product Hopf algebra on the basis e_i (x) f_j, index i*dim2 + j.
HopfPresentation tensor_hopf(const HopfPresentation& h1, const HopfPresentation& h2);

/// Checks that phi (tgt.dim x src.dim, column i = image of e_i) is a
/// bijective Hopf algebra map: algebra hom (including unit), coalgebra hom,
/// counit compatible, antipode compatible.
Report check_hopf_morphism(const HopfPresentation& src, const HopfPresentation& tgt,
                           const Matrix& phi);

/// Basis permutation: new basis element p is old basis element perm[p].
HopfPresentation permute_basis(const HopfPresentation& h,
                               const std::vector<std::size_t>& perm);

}  // namespace hopfrec
