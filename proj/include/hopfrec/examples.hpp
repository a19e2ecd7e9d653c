#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfrec/fusion.hpp"
#include "hopfrec/hopf.hpp"
#include "hopfrec/repcat.hpp"

namespace hopfrec {

/// Finite group by multiplication table. The constructor checks the group
/// axioms and throws hopfrec::Error when they fail.
class GroupTable {
 public:
  GroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inv(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::vector<std::size_t>& inverses() const { return inverse_; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_abelian() const;

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::string> names_;
};

GroupTable trivial_group();
GroupTable cyclic_group(std::size_t n);
/// Elements (g, h) at index g * |H| + h.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
/// Permutations of {0..n-1} in lexicographic order, identity first;
/// (g h)(i) = g(h(i)).
GroupTable symmetric_group(std::size_t n);
/// Image list of each element of symmetric_group(n).
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

/// Basis {g}, Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^{-1}.
HopfPresentation gen_group_algebra(const GroupTable& g);

/// Basis {delta_g}: pointwise product, convolution coproduct.
HopfPresentation gen_function_algebra(const GroupTable& g);

/// D(G) on the basis delta_h (x) g at index h*|G| + g:
/// (delta_h g)(delta_h' g') = [h = g h' g^{-1}] delta_h gg',
/// Delta(delta_h g) = sum_{h1 h2 = h} delta_h1 g (x) delta_h2 g,
/// epsilon(delta_h g) = [h = e], S(delta_h g) = delta_{g^{-1} h^{-1} g} g^{-1}.
HopfPresentation gen_drinfeld_double(const GroupTable& g);

/// Shipped rational irreducible representations of K[G] for Z/2, Z/2xZ/2,
/// S3 and S4 (recognized by comparison with the built-in tables), and the
/// characters of any abelian group given as cyclic_group or a product of
/// two such. Returns nullopt when no list is shipped for g.
std::optional<std::vector<ModuleRep>> group_algebra_irreps(const GroupTable& g);

/// The |G| characters of Fun(G): evaluation at each group element.
std::vector<ModuleRep> function_algebra_irreps(const GroupTable& g);

/// Characters chi: G -> roots of unity of an abelian group, values in
/// Q(zeta_e) for the exponent e. Throws for non-abelian g.
std::vector<std::vector<Scalar>> abelian_characters(const GroupTable& g);

/// The |G|^2 one-dimensional irreps (a, chi) of D(G) for abelian G:
/// delta_h g acts by [h = a] chi(g).
std::vector<ModuleRep> drinfeld_double_irreps(const GroupTable& g);

/// omega as a |G|^3 table of +-1 values, index (a*n + b)*n + c.
using ThreeCochain = std::vector<int>;

/// First (a,b,c,d) violating the cocycle identity
/// omega(b,c,d) omega(a,bc,d) omega(a,b,c) = omega(ab,c,d) omega(a,b,cd),
/// scanning lexicographically.
std::optional<std::vector<std::size_t>> cocycle_violation(const GroupTable& g,
                                                          const ThreeCochain& omega);

struct PointedCategory {
  FusionSkeleton skeleton;
  std::optional<FiberData> fiber;  // only when omega is identically 1
};

/// Vec_G^omega. Throws NotACocycle when omega is not a normalized 3-cocycle.
PointedCategory gen_pointed_category(const GroupTable& g, const ThreeCochain& omega);

/// omega(a,b,c) = (-1)^{abc} on Z/2.
ThreeCochain z2_nontrivial_cocycle();

/// Names accepted by named_example().
const std::vector<std::string>& example_names();

}  // namespace hopfrec
