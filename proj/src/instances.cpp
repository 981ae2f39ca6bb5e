#include "avgalg/instances.hpp"

#include <stdexcept>

namespace avgalg {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

bool is_zero(const Vector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

Vector subtract(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> basis, std::vector<std::vector<Vector>> mul, Matrix op)
    : basis_(std::move(basis)), mul_(std::move(mul)), op_(std::move(op)) {
  const std::size_t n = basis_.size();
  require(n > 0, "algebra dimension must be positive");
  require(mul_.size() == n, "structure constants: expected " + std::to_string(n) + " rows");
  for (const auto& row : mul_) {
    require(row.size() == n, "structure constants: wrong row length");
    for (const auto& v : row) require(v.size() == n, "structure constants: wrong vector length");
  }
  require(op_.size() == n, "operator matrix: expected " + std::to_string(n) + " rows");
  for (const auto& row : op_) require(row.size() == n, "operator matrix: wrong row length");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = multiply(mul_[i][j], basis_vector(k));
        Vector right = multiply(basis_vector(i), mul_[j][k]);
        require(left == right, "multiplication is not associative at (" + basis_[i] + ", " + basis_[j] + ", " +
                                   basis_[k] + ")");
      }
}

FiniteAlgebra FiniteAlgebra::plain(std::vector<std::string> basis, std::vector<std::vector<Vector>> mul) {
  const std::size_t n = basis.size();
  return FiniteAlgebra(std::move(basis), std::move(mul), Matrix(n, Vector(n)));
}

FiniteAlgebra FiniteAlgebra::with_operator(Matrix op) const { return FiniteAlgebra(basis_, mul_, std::move(op)); }

Vector FiniteAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

Vector FiniteAlgebra::add(const Vector& a, const Vector& b) const {
  Vector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector FiniteAlgebra::scale(const Rational& c, const Vector& a) const {
  Vector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = c * a[i];
  return r;
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      Rational c = a[i] * b[j];
      const Vector& e = mul_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (e[k] != 0) r[k] += c * e[k];
    }
  }
  return r;
}

Vector FiniteAlgebra::apply(const Vector& a) const { return apply_map(op_, a); }

std::optional<Vector> FiniteAlgebra::unit() const {
  // e b_j = b_j and b_j e = b_j for every j, as one linear system in e.
  const std::size_t n = dim();
  Matrix rows(n, Vector(2 * n * n));
  Vector target(2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        rows[i][(j * n + k)] = mul_[i][j][k];
        rows[i][n * n + j * n + k] = mul_[j][i][k];
      }
  for (std::size_t j = 0; j < n; ++j) {
    target[j * n + j] = 1;
    target[n * n + j * n + j] = 1;
  }
  return solve_combination(rows, target);
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Vector apply_map(const Matrix& m, const Vector& v) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  Vector r(n);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (m[i][k] != 0) r[k] += v[i] * m[i][k];
  }
  return r;
}

Matrix compose_maps(const Matrix& first, const Matrix& second) {
  Matrix r;
  r.reserve(first.size());
  for (const auto& row : first) r.push_back(apply_map(second, row));
  return r;
}

std::optional<Matrix> invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

std::optional<Vector> solve_combination(const Matrix& rows, const Vector& target) {
  // Augmented system: unknowns x_i, one equation per coordinate.
  const std::size_t unknowns = rows.size();
  const std::size_t eqs = target.size();
  std::vector<Vector> a(eqs, Vector(unknowns + 1));
  for (std::size_t r = 0; r < eqs; ++r) {
    for (std::size_t i = 0; i < unknowns; ++i) a[r][i] = rows[i][r];
    a[r][unknowns] = target[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < eqs; ++col) {
    std::size_t p = row;
    while (p < eqs && a[p][col] == 0) ++p;
    if (p == eqs) continue;
    std::swap(a[p], a[row]);
    Rational pv = a[row][col];
    for (auto& c : a[row]) c /= pv;
    for (std::size_t r = 0; r < eqs; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k <= unknowns; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < eqs; ++r)
    if (a[r][unknowns] != 0) return std::nullopt;
  Vector x(unknowns);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = a[r][unknowns];
  return x;
}

std::string instance_kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::GroupAverage: return "GroupAverage";
    case InstanceKind::CentralMultiplier: return "CentralMultiplier";
    case InstanceKind::SuperProjection: return "SuperProjection";
    case InstanceKind::SquareZeroDerivation: return "SquareZeroDerivation";
  }
  return "?";
}

InstanceKind kind_of(const InstanceParams& params) {
  switch (params.index()) {
    case 0:
    case 1: return InstanceKind::GroupAverage;
    case 2: return InstanceKind::CentralMultiplier;
    case 3: return InstanceKind::SuperProjection;
    default: return InstanceKind::SquareZeroDerivation;
  }
}

namespace {

void require_square(const Matrix& m, std::size_t n, const std::string& what) {
  require(m.size() == n, what + ": expected " + std::to_string(n) + " rows");
  for (const auto& row : m) require(row.size() == n, what + ": wrong row length");
}

FiniteAlgebra build(const GroupAlgebraParams& p) {
  const auto& t = p.table;
  const std::size_t n = t.size();
  require(n > 0, "group table is empty");
  for (const auto& row : t) {
    require(row.size() == n, "group table is not square");
    for (auto v : row) require(v < n, "group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) require(t[t[a][b]][c] == t[a][t[b][c]], "group table is not associative");
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n; ++g) ok = ok && t[e][g] == g && t[g][e] == g;
    if (ok) identity = e;
  }
  require(identity.has_value(), "group table has no identity");
  for (std::size_t g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (std::size_t h = 0; h < n; ++h) has_inverse = has_inverse || (t[g][h] == *identity && t[h][g] == *identity);
    require(has_inverse, "group table element without inverse");
  }
  std::vector<std::string> labels = p.labels;
  if (labels.empty())
    for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  require(labels.size() == n, "group labels: wrong count");
  std::vector<std::vector<Vector>> mul(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b][t[a][b]] = 1;
  Matrix op(n, Vector(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) op[g][t[h][g]] += 1;
  return FiniteAlgebra(std::move(labels), std::move(mul), std::move(op));
}

bool preserves_product(const FiniteAlgebra& alg, const Matrix& m) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      if (apply_map(m, alg.mul()[i][j]) != alg.multiply(m[i], m[j])) return false;
  return true;
}

FiniteAlgebra build(const AutomorphismAverageParams& p) {
  const FiniteAlgebra& alg = p.algebra;
  const std::size_t n = alg.dim();
  require(!p.group.empty(), "automorphism group is empty");
  for (const auto& g : p.group) {
    require_square(g, n, "automorphism");
    require(invert(g).has_value(), "automorphism is not invertible");
    require(preserves_product(alg, g), "map does not preserve multiplication");
  }
  auto contains = [&](const Matrix& m) {
    for (const auto& g : p.group)
      if (g == m) return true;
    return false;
  };
  require(contains(identity_matrix(n)), "automorphism group lacks the identity");
  for (const auto& g : p.group)
    for (const auto& h : p.group) require(contains(compose_maps(g, h)), "automorphisms are not closed under composition");
  Matrix op(n, Vector(n));
  for (const auto& g : p.group)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) op[i][k] += g[i][k];
  return alg.with_operator(std::move(op));
}

FiniteAlgebra build(const CentralMultiplierParams& p) {
  const FiniteAlgebra& alg = p.algebra;
  const std::size_t n = alg.dim();
  require(p.a.size() == n, "central element: wrong length");
  Matrix op(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = alg.basis_vector(i);
    require(alg.multiply(p.a, e) == alg.multiply(e, p.a), "element is not central (fails against " + alg.basis()[i] + ")");
    op[i] = alg.multiply(p.a, e);
  }
  return alg.with_operator(std::move(op));
}

FiniteAlgebra build(const SuperProjectionParams& p) {
  const FiniteAlgebra& alg = p.algebra;
  const std::size_t n = alg.dim();
  require(p.parity.size() == n, "parity: wrong length");
  for (int q : p.parity) require(q == 0 || q == 1, "parity entries must be 0 or 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p.parity[i] == 1 && p.parity[j] == 1) continue;
      const int expected = p.parity[i] + p.parity[j];
      for (std::size_t k = 0; k < n; ++k)
        require(alg.mul()[i][j][k] == 0 || p.parity[k] == expected,
                "grading violated by " + alg.basis()[i] + "*" + alg.basis()[j]);
    }
  Matrix op(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    if (p.parity[i] == 0) op[i][i] = 1;
  return alg.with_operator(std::move(op));
}

FiniteAlgebra build(const SquareZeroDerivationParams& p) {
  const FiniteAlgebra& alg = p.algebra;
  const std::size_t n = alg.dim();
  require_square(p.d, n, "derivation");
  for (std::size_t i = 0; i < n; ++i) {
    require(is_zero(apply_map(p.d, p.d[i])), "d² is not zero");
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = apply_map(p.d, alg.mul()[i][j]);
      Vector rhs = alg.add(alg.multiply(p.d[i], alg.basis_vector(j)), alg.multiply(alg.basis_vector(i), p.d[j]));
      require(lhs == rhs, "not a derivation at (" + alg.basis()[i] + ", " + alg.basis()[j] + ")");
    }
  }
  return alg.with_operator(p.d);
}

}  // namespace

FiniteAlgebra build_instance(InstanceKind kind, const InstanceParams& params) {
  require(kind_of(params) == kind, "parameters do not describe a " + instance_kind_name(kind) + " instance");
  return std::visit([](const auto& p) { return build(p); }, params);
}

CheckReport check_averaging(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = alg.apply(alg.basis_vector(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector x = alg.basis_vector(i);
      Vector y = alg.basis_vector(j);
      Vector lhs = alg.multiply(images[i], images[j]);
      if (lhs != alg.apply(alg.multiply(x, images[j]))) return {Counterexample{i, j, "P(x)P(y) = P(xP(y))"}};
      if (lhs != alg.apply(alg.multiply(images[i], y))) return {Counterexample{i, j, "P(x)P(y) = P(P(x)y)"}};
    }
  return {};
}

CheckReport check_reynolds(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector f = alg.basis_vector(i);
      Vector g = alg.basis_vector(j);
      Vector pf = alg.apply(f);
      Vector pg = alg.apply(g);
      Vector lhs = alg.apply(alg.multiply(f, g));
      Vector rhs = alg.add(alg.multiply(pf, pg), alg.apply(alg.multiply(subtract(f, pf), subtract(g, pg))));
      if (lhs != rhs) return {Counterexample{i, j, "P(fg) = P(f)P(g) + P[(f-Pf)(g-Pg)]"}};
    }
  return {};
}

bool is_idempotent(const FiniteAlgebra& alg) { return compose_maps(alg.op(), alg.op()) == alg.op(); }

FiniteAlgebra truncated_polynomial(std::size_t n) {
  require(n >= 1, "truncated polynomial needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "y" : "y^" + std::to_string(i));
  std::vector<std::vector<Vector>> mul(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) mul[i][j][i + j] = 1;
  return FiniteAlgebra::plain(std::move(labels), std::move(mul));
}

FiniteAlgebra cyclic_group_algebra(std::size_t n) {
  require(n >= 1, "cyclic group needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  std::vector<std::vector<Vector>> mul(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j][(i + j) % n] = 1;
  return FiniteAlgebra::plain(std::move(labels), std::move(mul));
}

FiniteAlgebra upper_triangular_2() {
  // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
  std::vector<std::vector<Vector>> mul(3, std::vector<Vector>(3, Vector(3)));
  mul[0][0][0] = 1;
  mul[0][1][1] = 1;
  mul[1][2][1] = 1;
  mul[2][2][2] = 1;
  return FiniteAlgebra::plain({"e11", "e12", "e22"}, std::move(mul));
}

FiniteAlgebra diagonal_algebra(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i + 1));
  std::vector<std::vector<Vector>> mul(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i) mul[i][i][i] = 1;
  return FiniteAlgebra::plain(std::move(labels), std::move(mul));
}

}  // namespace avgalg
