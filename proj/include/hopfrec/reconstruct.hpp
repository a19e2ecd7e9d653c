#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hopfrec/fusion.hpp"
#include "hopfrec/hopf.hpp"
#include "hopfrec/repcat.hpp"

namespace hopfrec {

/// A natural endomorphism of the fiber functor: one d_a x d_a block per
/// simple. Off-diagonal naturality is vacuous on a skeleton, so the blocks
/// are the whole datum.
struct EndFElement {
  std::vector<Matrix> blocks;

  static EndFElement identity(const std::vector<std::size_t>& dims);
  static EndFElement zero(const std::vector<std::size_t>& dims);
  /// Matrix unit E^{(a)}_{ij}.
  static EndFElement unit(const std::vector<std::size_t>& dims, std::size_t a,
                          std::size_t i, std::size_t j);

  friend EndFElement operator*(const EndFElement& x, const EndFElement& y);
  friend EndFElement operator+(const EndFElement& x, const EndFElement& y);
  friend EndFElement operator*(const Scalar& s, const EndFElement& x);
  friend bool operator==(const EndFElement&, const EndFElement&) = default;
};

class ReconstructionAxiomFailure : public Error {
 public:
  explicit ReconstructionAxiomFailure(Report report)
      : Error("reconstructed structure fails " +
              (report.first_failure() ? report.first_failure()->name : std::string("?"))),
        report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Matrix-unit basis of End(F) = sum_a End(F(a)), ordered block by block and
/// row-major inside a block.
class MatrixUnitBasis {
 public:
  explicit MatrixUnitBasis(std::vector<std::size_t> dims);

  std::size_t size() const { return offsets_.back(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t index(std::size_t a, std::size_t i, std::size_t j) const {
    return offsets_[a] + i * dims_[a] + j;
  }
  /// (a, i, j) of basis element p.
  std::array<std::size_t, 3> label(std::size_t p) const;

  Vec coords(const EndFElement& x) const;
  EndFElement element(const Vec& coords) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
};

/// sum_{ijkl} C[i*da + j][k*db + l] E_ij (x) E_kl  <->  M[i*db + k][j*db + l]:
/// the fixed identification End(V) (x) End(W) = End(V (x) W).
Matrix sweedler_split(const Matrix& m, std::size_t da, std::size_t db);
Matrix sweedler_merge(const Matrix& c, std::size_t da, std::size_t db);

/// Algebra sum_a End(F(a)) on the matrix-unit basis.
AlgebraPresentation endf_algebra(const FusionSkeleton& k, const FiberData& fiber);

/// Delta(eta)_{(a,b)} = J(a,b)^{-1} (sum_c I (x) eta_c) J(a,b) in
/// End(F(a) (x) F(b)).
Matrix comultiplication_block(const FusionSkeleton& k, const FiberData& fiber,
                              const EndFElement& eta, std::size_t a, std::size_t b);

/// Delta(eta) as coordinates over pairs of matrix units, index p*D + q.
Vec comultiplication(const FusionSkeleton& k, const FiberData& fiber,
                     const EndFElement& eta);

/// The unit block of eta.
Scalar counit(const FusionSkeleton& k, const FiberData& fiber, const EndFElement& eta);

/// S(eta)_a = transpose(delta_a eta_{a*} delta_a^{-1}).
EndFElement antipode(const FusionSkeleton& k, const FiberData& fiber,
                     const EndFElement& eta);

/// Full Hopf structure on End(F); every axiom is checked before returning.
/// Throws ReconstructionAxiomFailure.
HopfPresentation reconstruct_hopf(const FusionSkeleton& k, const FiberData& fiber);

/// Q(T, tau)(eta')_a = tau_a^{-1} (sum_c I (x) eta'_c) tau_a.
EndFElement transport_along(const SliceMorphismData& t, const EndFElement& target_eta);

/// Identity 1-morphism on a category with the given fiber dimensions.
SliceMorphismData identity_slice_morphism(const std::vector<std::size_t>& dims);

/// Composite "first t1, then t2".
SliceMorphismData compose(const SliceMorphismData& t1, const SliceMorphismData& t2);

/// transport_along as a (source End dim) x (target End dim) matrix over the
/// matrix-unit bases.
Matrix transport_matrix(const SliceMorphismData& t);

/// Unitality and multiplicativity of transport_along on basis elements.
Report check_transport_homomorphism(const SliceMorphismData& t);

/// For each simple a, F(a) as a module over the reconstruction, with
/// E^{(b)}_{ij} acting by [a = b] E_ij. Verified with verify_irreps.
std::vector<ModuleRep> zeta_modules(const FusionSkeleton& k, const FiberData& fiber,
                                    const HopfPresentation& h);

}  // namespace hopfrec
