#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfrec/errors.hpp"
#include "hopfrec/fusion.hpp"
#include "hopfrec/hopf.hpp"

namespace hopfrec {

/// Finite-dimensional module over an algebra presented on a basis:
/// action[i] is the matrix of e_i.
struct ModuleRep {
  std::size_t dim = 0;
  std::vector<Matrix> action;
  std::string label;

  friend bool operator==(const ModuleRep&, const ModuleRep&) = default;
};

/// A 1-morphism (T, tau) between categories with fiber functors, in skeletal
/// form. multiplicity[a][c] is how often target simple c occurs in T(a);
/// tau[a] maps F(a) onto sum_c K^{multiplicity[a][c]} (x) F'(c), ordered by c,
/// then copy index, then coordinate. target_dims are the fiber dimensions
/// of the target category.
struct SliceMorphismData {
  std::vector<std::vector<std::size_t>> multiplicity;
  std::vector<Matrix> tau;
  std::vector<std::size_t> target_dims;

  /// Fiber dimensions of the source category.
  std::vector<std::size_t> source_dims() const;
};

class SkeletalizationFailure : public Error {
 public:
  SkeletalizationFailure(const std::string& what, Report report)
      : Error("skeletalization failed: " + what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

class RoundTripFailure : public Error {
 public:
  RoundTripFailure(const std::string& identity, Report report)
      : Error("round trip failed at " + identity), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Module over the algebra with action sum_i coeff[i] action[i].
Matrix act(const ModuleRep& v, const Vec& coeff);

/// rho(e_i) rho(e_j) = rho(e_i e_j) and rho(1) = id.
Report check_module(const AlgebraPresentation& a, const ModuleRep& v,
                    const std::string& name = "module");

/// Representation equations, Schur (End = K), pairwise Hom = 0 and
/// completeness sum d^2 = dim H.
Report verify_irreps(const HopfPresentation& h, const std::vector<ModuleRep>& mods);

/// Throws when verify_irreps fails: NotSplitOrNotSemisimple for a commutant
/// of dimension > 1, Incomplete for isomorphic pairs or a short dimension
/// sum, hopfrec::Error for broken representation equations.
void require_irreps(const HopfPresentation& h, const std::vector<ModuleRep>& mods);

/// Module structure on V (x) W through the comultiplication.
ModuleRep tensor_module(const HopfPresentation& h, const ModuleRep& v, const ModuleRep& w);

/// Trivial one-dimensional module through the counit.
ModuleRep trivial_module(const HopfPresentation& h);

/// Dual module on V^* with action transpose(rho(S e_i)).
ModuleRep dual_module(const HopfPresentation& h, const ModuleRep& v);

/// Basis of intertwiners X : V -> W (dim W x dim V matrices), in the
/// deterministic echelon order of mat_kernel on row-major vec(X).
std::vector<Matrix> hom_space(const HopfPresentation& h, const ModuleRep& v,
                              const ModuleRep& w);

/// Multiplicity of each listed simple in V. Throws DecompositionGap when the
/// multiplicities do not account for dim V.
std::vector<std::size_t> decompose(const HopfPresentation& h,
                                   const std::vector<ModuleRep>& mods, const ModuleRep& v);

/// Skeletal data of Mod(H) with the forgetful functor, built on the given
/// simples. Throws SkeletalizationFailure if the output fails a verifier.
std::pair<FusionSkeleton, FiberData> skeletalize(const HopfPresentation& h,
                                                 const std::vector<ModuleRep>& mods);

/// gamma(e_i) = blockdiag_a rho_a(e_i), as a (sum d_a^2) x dim H matrix over
/// the matrix-unit basis of End(Forget).
Matrix gamma_matrix(const std::vector<ModuleRep>& mods, std::size_t algebra_dim);

struct RoundTrip {
  Report report;
  Matrix gamma;
  FusionSkeleton skeleton;
  FiberData fiber;
  HopfPresentation reconstructed;

  /// Throws RoundTripFailure naming the first failing identity.
  void require() const;
};

/// H -> skeletal Mod(H) -> End(Forget), certifying that gamma is a bijective
/// Hopf algebra map onto the reconstruction.
RoundTrip gamma_roundtrip(const HopfPresentation& h, const std::vector<ModuleRep>& mods);

}  // namespace hopfrec
