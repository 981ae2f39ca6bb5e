#pragma once

#include <string>
#include <vector>

#include "avgalg/instances.hpp"

namespace avgalg::testgen {

struct NamedInstance {
  std::string name;
  FiniteAlgebra algebra;
};

inline GroupAlgebraParams cyclic_group_params(std::size_t n) {
  GroupAlgebraParams p;
  p.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.table[a][b] = (a + b) % n;
  return p;
}

// One averaging algebra per construction.
inline std::vector<NamedInstance> instance_fixtures() {
  std::vector<NamedInstance> out;
  out.push_back({"group-average Z/3", build_instance(InstanceKind::GroupAverage, cyclic_group_params(3))});

  const FiniteAlgebra k2 = diagonal_algebra(2);
  const Matrix swap{{0, 1}, {1, 0}};
  out.push_back({"automorphism-average swap on k^2",
                 build_instance(InstanceKind::GroupAverage, AutomorphismAverageParams{k2, {identity_matrix(2), swap}})});

  const FiniteAlgebra dual = truncated_polynomial(3);
  out.push_back({"central-multiplier y on k[y]/(y^3)",
                 build_instance(InstanceKind::CentralMultiplier, CentralMultiplierParams{dual, {0, 1, 0}})});

  out.push_back({"super-projection on k[y]/(y^2)",
                 build_instance(InstanceKind::SuperProjection, SuperProjectionParams{truncated_polynomial(2), {0, 1}})});

  // ad(e12) on upper triangular matrices.
  const Matrix ad{{0, -1, 0}, {0, 0, 0}, {0, 1, 0}};
  out.push_back({"square-zero derivation ad(e12)",
                 build_instance(InstanceKind::SquareZeroDerivation, SquareZeroDerivationParams{upper_triangular_2(), ad})});
  return out;
}

}  // namespace avgalg::testgen
