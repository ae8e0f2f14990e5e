#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylhc/cyclotomic_field.hpp"
#include "weylhc/matrix.hpp"
#include "weylhc/rational.hpp"

namespace weylhc {

enum class Family { A, B, C, D, E, F, G, H, I };

struct CartanComponent {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // dihedral order, only for I2(m)

  std::string to_string() const;
  bool operator==(const CartanComponent&) const = default;
};

// A (possibly reducible) finite Cartan type such as "B2xA1" or "I2(8)".
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<CartanComponent> components);

  // Case-insensitive; "x" separates components.  Throws InvalidType.
  static CartanType parse(std::string_view text);

  const std::vector<CartanComponent>& components() const { return components_; }
  int rank() const;
  bool is_irreducible() const { return components_.size() == 1; }
  bool is_crystallographic() const;
  std::string to_string() const;
  // Group order from the closed formulas ((n+1)!, 2^n n!, ...).
  Integer expected_order() const;
  // Type of the dual root datum (B <-> C).
  CartanType dual() const;

  bool operator==(const CartanType&) const = default;

 private:
  std::vector<CartanComponent> components_;
};

void validate(const CartanComponent& c);

// One irreducible component of a datum: its type and the generator indices
// of the datum in the component's standard (Bourbaki) order.
struct ComponentEmbedding {
  CartanComponent type;
  std::vector<int> generators;
};

// Roots in the simple-root basis with exact coordinates.  Crystallographic
// types have integer Cartan matrices; H3, H4 and I2(m) use entries in
// Q(zeta_m): -2cos(pi/5) for H, -2cos(pi/m) for I2(m) with m odd and
// -1, -4cos^2(pi/m) for I2(m) with m even.
//
// Cartan convention: cartan(i, j) = <alpha_i, alpha_j^vee>, so the simple
// reflection s_i sends beta to beta - (sum_j beta_j cartan(j, i)) alpha_i.
class RootDatum {
 public:
  static RootDatum from_type(const CartanType& type);
  // Any finite-type Cartan matrix; the type is recognized from its diagram.
  static RootDatum from_cartan(Matrix<Cyclotomic> cartan);

  const CartanType& type() const { return type_; }
  const std::vector<ComponentEmbedding>& components() const { return components_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const Matrix<Cyclotomic>& cartan_matrix() const { return cartan_; }
  // Simple roots in the lattice basis used for roots (the identity here).
  Matrix<Cyclotomic> simple_roots() const { return Matrix<Cyclotomic>::identity(cartan_.rows()); }
  std::vector<std::vector<int>> coxeter_matrix() const { return coxeter_; }
  // lcm of the conductors of all Cartan entries (1 when crystallographic).
  int conductor() const { return conductor_; }
  bool is_crystallographic() const { return conductor_ == 1; }

  // Positive roots; the first rank() entries are the simple roots.
  const std::vector<std::vector<Cyclotomic>>& positive_roots() const { return positive_roots_; }
  std::size_t num_positive_roots() const { return positive_roots_.size(); }

  std::vector<Cyclotomic> reflect(int i, const std::vector<Cyclotomic>& root) const;
  // Matrix of s_i on coordinate column vectors.
  Matrix<Cyclotomic> reflection_matrix(int i) const;

  // Datum of the parabolic subsystem on the generators J (in J order).
  RootDatum restrict_to(const std::vector<int>& J) const;

 private:
  RootDatum(Matrix<Cyclotomic> cartan, std::optional<CartanType> type);

  CartanType type_;
  std::vector<ComponentEmbedding> components_;
  Matrix<Cyclotomic> cartan_;
  std::vector<std::vector<int>> coxeter_;
  int conductor_ = 1;
  std::vector<std::vector<Cyclotomic>> positive_roots_;
};

// Standard Cartan matrix of an irreducible type.
Matrix<Cyclotomic> standard_cartan_matrix(const CartanComponent& c);
// Coxeter matrix entry m(i,j) from the Cartan product cartan(i,j)*cartan(j,i).
int coxeter_order_from_product(const Cyclotomic& product);

// The duality w -> w* between W and the Weyl group of the dual datum, given
// on simple reflections: s_i -> s*_{generator_map[i]}.
struct DualityMap {
  RootDatum source;
  RootDatum target;
  std::vector<int> generator_map;
};

DualityMap dualize(const RootDatum& datum);

}  // namespace weylhc
