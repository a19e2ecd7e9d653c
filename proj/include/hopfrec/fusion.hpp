#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfrec/matrix.hpp"
#include "hopfrec/report.hpp"

namespace hopfrec {

/// Skeletal finite semisimple monoidal category.
///
/// The F-symbol F(a,b,c,d) maps the multiplicity space of (ab)c -> d,
///   sum_e N(a,b,e) N(e,c,d), basis ordered by e, then the (ab->e) index,
///   then the (ec->d) index,
/// to that of a(bc) -> d,
///   sum_f N(b,c,f) N(a,f,d), ordered by f, then (bc->f), then (af->d).
/// Entries whose spaces are both empty hold a 0x0 matrix.
struct FusionSkeleton {
  std::vector<std::string> simples;
  std::size_t unit = 0;
  std::vector<int> fusion;     // r^3, index (a*r + b)*r + c
  std::vector<Matrix> assoc;   // r^4, index ((a*r + b)*r + c)*r + d
  std::vector<std::size_t> dual;

  std::size_t rank() const { return simples.size(); }
  int N(std::size_t a, std::size_t b, std::size_t c) const {
    return fusion[(a * rank() + b) * rank() + c];
  }
  int& N(std::size_t a, std::size_t b, std::size_t c) {
    return fusion[(a * rank() + b) * rank() + c];
  }
  const Matrix& F(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    const std::size_t r = rank();
    return assoc[((a * r + b) * r + c) * r + d];
  }
  Matrix& F(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const std::size_t r = rank();
    return assoc[((a * r + b) * r + c) * r + d];
  }

  /// Dimension of the (ab)c -> d multiplicity space.
  std::size_t left_multiplicity(std::size_t a, std::size_t b, std::size_t c,
                                std::size_t d) const;
  /// Dimension of the a(bc) -> d multiplicity space.
  std::size_t right_multiplicity(std::size_t a, std::size_t b, std::size_t c,
                                 std::size_t d) const;

  /// Empty skeleton of rank r with zero fusion and empty F-symbols.
  static FusionSkeleton with_rank(std::size_t r);

  friend bool operator==(const FusionSkeleton&, const FusionSkeleton&) = default;
};

/// Fiber functor data on a skeleton.
///
/// J(a,b) maps F(a) (x) F(b) (index i*d_b + k) onto
/// sum_c K^{N(a,b,c)} (x) F(c), ordered by c, then multiplicity index, then
/// the coordinate in F(c). iota is the unit isomorphism K -> F(1).
/// ev_coeff[a] picks ev_a in Hom(a* (x) a, 1) = K^{N(a*,a,1)};
/// coev_coeff[a] picks coev_a in Hom(1, a (x) a*) = K^{N(a,a*,1)}.
struct FiberData {
  std::vector<std::size_t> dims;
  std::vector<Matrix> tensorator;  // r^2, index a*r + b
  Scalar iota{1};
  std::vector<std::vector<Scalar>> ev_coeff;
  std::vector<std::vector<Scalar>> coev_coeff;

  const Matrix& J(std::size_t a, std::size_t b) const {
    return tensorator[a * dims.size() + b];
  }
  Matrix& J(std::size_t a, std::size_t b) { return tensorator[a * dims.size() + b]; }

  friend bool operator==(const FiberData&, const FiberData&) = default;
};

/// Structural checks on a skeleton; throws ShapeError.
void validate_shapes(const FusionSkeleton& k);
/// Structural checks on fiber data against its skeleton; throws ShapeError.
void validate_shapes(const FusionSkeleton& k, const FiberData& fiber);

/// Offsets of the c-blocks inside the codomain of J(a,b).
std::vector<std::size_t> block_offsets(const FusionSkeleton& k,
                                       const std::vector<std::size_t>& dims,
                                       std::size_t a, std::size_t b);

/// F(a)F(b)F(c) -> sum_d K^{left_multiplicity} (x) F(d) through
/// (J(a,b) (x) id) then J(e,c) on each summand. Output rows ordered by d,
/// then composite multiplicity index, then coordinate.
Matrix left_composite(const FusionSkeleton& k, const FiberData& fiber, std::size_t a,
                      std::size_t b, std::size_t c);
/// Same through (id (x) J(b,c)) then J(a,f).
Matrix right_composite(const FusionSkeleton& k, const FiberData& fiber, std::size_t a,
                       std::size_t b, std::size_t c);

/// Pentagon identity on every (a,b,c,d,t), plus unit strictness and
/// invertibility of the F-symbols.
Report verify_pentagon(const FusionSkeleton& k);

/// Hexagon-type coherence of the tensorator with the F-symbols, and the
/// unit constraints J(1,a) = J(a,1) = iota^{-1} id. Throws NonInvertibleJ.
Report verify_tensorator(const FusionSkeleton& k, const FiberData& fiber);

/// delta_a : F(a*) -> F(a)^*, the transpose of the pairing
/// p_a = iota^{-1} (ev_coeff . unit rows of J(a*,a)). Throws NonRigid when
/// a pairing is degenerate.
std::vector<Matrix> compute_delta(const FusionSkeleton& k, const FiberData& fiber);

/// Pairing matrix P (rows F(a*), columns F(a)) and copairing Q (rows F(a),
/// columns F(a*)) realized through the fiber functor.
Matrix pairing_matrix(const FusionSkeleton& k, const FiberData& fiber, std::size_t a);
Matrix copairing_matrix(const FusionSkeleton& k, const FiberData& fiber, std::size_t a);

/// Snake identities Q P = id_{F(a)} and P Q = id_{F(a*)} for every simple.
Report verify_duality(const FusionSkeleton& k, const FiberData& fiber);

/// Pentagon, then (when fiber data is supplied) tensorator and duality.
Report verify_category(const FusionSkeleton& k, const FiberData* fiber);

}  // namespace hopfrec
