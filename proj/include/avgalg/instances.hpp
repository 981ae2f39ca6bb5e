#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "avgalg/rational.hpp"

namespace avgalg {

using Vector = std::vector<Rational>;
// Row i is the image of basis vector i.
using Matrix = std::vector<Vector>;

// Finite-dimensional algebra over the rationals given by structure constants
// e_i e_j = sum_k mul[i][j][k] e_k, together with a linear operator.
class FiniteAlgebra {
 public:
  using Element = Vector;

  // Throws std::invalid_argument on shape mismatch or non-associativity.
  FiniteAlgebra(std::vector<std::string> basis, std::vector<std::vector<Vector>> mul, Matrix op);
  // Same table with the zero operator.
  static FiniteAlgebra plain(std::vector<std::string> basis, std::vector<std::vector<Vector>> mul);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<std::vector<Vector>>& mul() const { return mul_; }
  const Matrix& op() const { return op_; }

  FiniteAlgebra with_operator(Matrix op) const;

  Element zero() const { return Vector(dim()); }
  Element basis_vector(std::size_t i) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Rational& c, const Element& a) const;
  Element multiply(const Element& a, const Element& b) const;
  Element apply(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }

  // Two-sided identity element, if the algebra has one.
  std::optional<Element> unit() const;

 private:
  std::vector<std::string> basis_;
  std::vector<std::vector<Vector>> mul_;
  Matrix op_;
};

// Linear algebra over the rationals on row-image matrices.
Matrix identity_matrix(std::size_t n);
// Matrix of "apply first, then second".
Matrix compose_maps(const Matrix& first, const Matrix& second);
Vector apply_map(const Matrix& m, const Vector& v);
std::optional<Matrix> invert(const Matrix& m);
// Some solution x of sum_i x_i rows[i] = target, if one exists.
std::optional<Vector> solve_combination(const Matrix& rows, const Vector& target);

// Group algebra k[G] of a finite group given by its Cayley table, with
// P(g) = sum_h hg.
struct GroupAlgebraParams {
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::string> labels;
};
// A finite group of algebra automorphisms acting on an algebra;
// P is the sum of the group elements.
struct AutomorphismAverageParams {
  FiniteAlgebra algebra;
  std::vector<Matrix> group;
};
// P(x) = a x for a central element a.
struct CentralMultiplierParams {
  FiniteAlgebra algebra;
  Vector a;
};
// Basis-aligned decomposition R0 + R1 (parity 0/1 per basis vector) with
// R0R0 ⊆ R0, R0R1 ⊆ R1, R1R0 ⊆ R1; P is the projection onto R0.
struct SuperProjectionParams {
  FiniteAlgebra algebra;
  std::vector<int> parity;
};
// A derivation d with d² = 0.
struct SquareZeroDerivationParams {
  FiniteAlgebra algebra;
  Matrix d;
};

enum class InstanceKind { GroupAverage, CentralMultiplier, SuperProjection, SquareZeroDerivation };
std::string instance_kind_name(InstanceKind kind);

using InstanceParams = std::variant<GroupAlgebraParams, AutomorphismAverageParams, CentralMultiplierParams,
                                    SuperProjectionParams, SquareZeroDerivationParams>;

InstanceKind kind_of(const InstanceParams& params);
// Throws std::invalid_argument when params violate the kind's hypotheses
// or do not belong to kind.
FiniteAlgebra build_instance(InstanceKind kind, const InstanceParams& params);

struct Counterexample {
  std::size_t left;
  std::size_t right;
  std::string identity;
};

struct CheckReport {
  std::optional<Counterexample> failure;
  bool passed() const { return !failure.has_value(); }
};

// P(x)P(y) = P(xP(y)) = P(P(x)y) on all basis pairs, row-major order.
CheckReport check_averaging(const FiniteAlgebra& alg);
// P(fg) = P(f)P(g) + P[(f - Pf)(g - Pg)] on all basis pairs.
CheckReport check_reynolds(const FiniteAlgebra& alg);
bool is_idempotent(const FiniteAlgebra& alg);

// Small algebras used as fixtures.
FiniteAlgebra truncated_polynomial(std::size_t n);  // k[y]/(y^n), basis 1, y, ..., y^(n-1)
FiniteAlgebra cyclic_group_algebra(std::size_t n);   // k[Z/n], zero operator
FiniteAlgebra upper_triangular_2();                  // basis e11, e12, e22
FiniteAlgebra diagonal_algebra(std::size_t n);       // k^n, orthogonal idempotents

}  // namespace avgalg
