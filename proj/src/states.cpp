#include "privnet/states.hpp"

#include <cmath>
#include <string>

#include "privnet/error.hpp"

namespace privnet {

namespace {

void require_key_index(const KeyShieldState& s, std::size_t i) {
  if (i >= s.key_dim()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "key index " + std::to_string(i) + " >= d_k=" + std::to_string(s.key_dim()));
  }
}

std::vector<Complex> random_unit_vector(std::size_t d, Rng& rng) {
  std::vector<Complex> v(d);
  double norm = 0.0;
  for (auto& x : v) {
    x = rng.complex_normal();
    norm += std::norm(x);
  }
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

void add_projector(CMatrix& m, const std::vector<Complex>& v, double weight) {
  const std::size_t n = v.size();
  for (std::size_t r = 0; r < n; ++r) {
    const Complex vr = weight * v[r];
    for (std::size_t c = 0; c < n; ++c) m(r, c) += vr * std::conj(v[c]);
  }
}

std::vector<double> dirichlet_uniform(std::size_t terms, Rng& rng) {
  std::vector<double> w(terms);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(rng.uniform_open_zero());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// KeyShieldState

void require_density(const CMatrix& m, double tol) {
  if (m.empty()) throw Error(ErrorCode::NotDensity, "empty matrix");
  if (!is_hermitian(m, tol)) throw Error(ErrorCode::NotDensity, "matrix is not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw Error(ErrorCode::NotDensity, "trace " + std::to_string(tr.real()) + " is not 1");
  }
  if (!is_psd(m, tol)) throw Error(ErrorCode::NotDensity, "matrix is not positive semidefinite");
}

KeyShieldState::KeyShieldState(TrustedTag, CMatrix matrix, std::size_t key_dim, std::size_t shield_dim,
                               ProvenanceFlags flags, std::optional<PrivateStateSpec> witness)
    : matrix_(std::move(matrix)),
      key_dim_(key_dim),
      shield_dim_(shield_dim),
      flags_(flags),
      witness_(std::move(witness)) {
  if (key_dim_ == 0 || shield_dim_ == 0) {
    throw Error(ErrorCode::StructureMismatch, "key and shield dimensions must be positive");
  }
  const std::size_t expected = key_dim_ * key_dim_ * shield_dim_ * shield_dim_;
  if (matrix_.dim() != expected) {
    throw Error(ErrorCode::StructureMismatch, "matrix dim " + std::to_string(matrix_.dim()) +
                                                  " != (d_k d_s)^2 = " + std::to_string(expected));
  }
}

KeyShieldState::KeyShieldState(CMatrix matrix, std::size_t key_dim, std::size_t shield_dim,
                               ProvenanceFlags flags, std::optional<PrivateStateSpec> witness)
    : KeyShieldState(TrustedTag{}, std::move(matrix), key_dim, shield_dim, flags, std::move(witness)) {
  require_density(matrix_);
}

KeyShieldState KeyShieldState::trusted(CMatrix matrix, std::size_t key_dim, std::size_t shield_dim,
                                       ProvenanceFlags flags, std::optional<PrivateStateSpec> witness) {
  return KeyShieldState(TrustedTag{}, std::move(matrix), key_dim, shield_dim, flags, std::move(witness));
}

TensorStructure KeyShieldState::structure() const {
  return TensorStructure{key_dim_, key_dim_, shield_dim_, shield_dim_};
}

CMatrix KeyShieldState::partial_transpose_bob() const {
  return partial_transpose(matrix_, structure(), {factor::kKeyB, factor::kShieldB});
}

// ---------------------------------------------------------------------------
// Blocks

CMatrix block(const CMatrix& m, std::size_t key_dim, std::size_t shield_dim, std::size_t i, std::size_t j,
              std::size_t k, std::size_t l) {
  if (i >= key_dim || j >= key_dim || k >= key_dim || l >= key_dim) {
    throw Error(ErrorCode::IndexOutOfRange, "block key index out of range");
  }
  const std::size_t bd = shield_dim * shield_dim;
  const std::size_t row0 = (i * key_dim + j) * bd;
  const std::size_t col0 = (k * key_dim + l) * bd;
  CMatrix out(bd);
  for (std::size_t r = 0; r < bd; ++r)
    for (std::size_t c = 0; c < bd; ++c) out(r, c) = m(row0 + r, col0 + c);
  return out;
}

CMatrix block(const KeyShieldState& state, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return block(state.matrix(), state.key_dim(), state.shield_dim(), i, j, k, l);
}

void set_block(CMatrix& m, std::size_t key_dim, std::size_t shield_dim, std::size_t i, std::size_t j,
               std::size_t k, std::size_t l, const CMatrix& value) {
  const std::size_t bd = shield_dim * shield_dim;
  if (i >= key_dim || j >= key_dim || k >= key_dim || l >= key_dim) {
    throw Error(ErrorCode::IndexOutOfRange, "block key index out of range");
  }
  if (value.dim() != bd) throw Error(ErrorCode::StructureMismatch, "block has wrong dimension");
  const std::size_t row0 = (i * key_dim + j) * bd;
  const std::size_t col0 = (k * key_dim + l) * bd;
  for (std::size_t r = 0; r < bd; ++r)
    for (std::size_t c = 0; c < bd; ++c) m(row0 + r, col0 + c) = value(r, c);
}

CMatrix shield_partial_transpose(const CMatrix& shield_op, std::size_t shield_dim) {
  return partial_transpose(shield_op, TensorStructure{shield_dim, shield_dim}, {1});
}

// ---------------------------------------------------------------------------
// Constructors

KeyShieldState private_state(const PrivateStateSpec& spec, bool shields_separable) {
  const std::size_t dk = spec.key_dim;
  const std::size_t ds = spec.shield_dim;
  if (dk == 0 || ds == 0) throw Error(ErrorCode::StructureMismatch, "dimensions must be positive");
  const std::size_t bd = ds * ds;
  if (spec.unitaries.size() != dk) {
    throw Error(ErrorCode::StructureMismatch, "need exactly d_k unitaries");
  }
  for (const auto& u : spec.unitaries) {
    if (u.dim() != bd) throw Error(ErrorCode::StructureMismatch, "unitary must act on d_s^2 dims");
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "twisting operator is not unitary");
  }
  if (spec.shield.dim() != bd) throw Error(ErrorCode::StructureMismatch, "shield must be d_s^2 dims");
  require_density(spec.shield);

  const std::size_t dim = dk * dk * bd;
  CMatrix gamma(dim);
  const double weight = 1.0 / static_cast<double>(dk);
  std::vector<CMatrix> left(dk);
  for (std::size_t i = 0; i < dk; ++i) left[i] = spec.unitaries[i] * spec.shield;
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dk; ++j) {
      CMatrix x = left[i] * spec.unitaries[j].adjoint();
      x *= weight;
      set_block(gamma, dk, ds, i, i, j, j, x);
    }
  }
  ProvenanceFlags flags;
  flags.private_by_construction = true;
  flags.shields_separable_by_construction = shields_separable;
  return KeyShieldState(std::move(gamma), dk, ds, flags, spec);
}

CMatrix swap_operator(std::size_t d) {
  CMatrix f(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) f(a * d + b, b * d + a) = 1.0;
  return f;
}

KeyShieldState swap_pbit(std::size_t shield_dim) {
  if (shield_dim < 2) throw Error(ErrorCode::DomainError, "swap-pbit needs d_s >= 2");
  const std::size_t bd = shield_dim * shield_dim;
  PrivateStateSpec spec{2, shield_dim, {CMatrix::identity(bd), swap_operator(shield_dim)},
                        CMatrix::identity(bd) * Complex(1.0 / static_cast<double>(bd))};
  auto gamma = private_state(spec, /*shields_separable=*/true);
  ProvenanceFlags flags = gamma.flags();
  flags.irreducible_by_construction = true;
  return KeyShieldState::trusted(gamma.matrix(), 2, shield_dim, flags, gamma.witness());
}

KeyShieldState max_entangled(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::DomainError, "maximally entangled state needs d >= 2");
  PrivateStateSpec spec{d, 1, std::vector<CMatrix>(d, CMatrix::identity(1)), CMatrix::identity(1)};
  auto state = private_state(spec, true);
  ProvenanceFlags flags = state.flags();
  flags.irreducible_by_construction = true;
  return KeyShieldState::trusted(state.matrix(), d, 1, flags, state.witness());
}

// ---------------------------------------------------------------------------
// Maps

KeyShieldState diag_key(const KeyShieldState& state) {
  const std::size_t dk = state.key_dim();
  const std::size_t ds = state.shield_dim();
  CMatrix out(state.matrix().dim());
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) set_block(out, dk, ds, i, j, i, j, block(state, i, j, i, j));
  return KeyShieldState::trusted(std::move(out), dk, ds);
}

KeyShieldState key_attack(const KeyShieldState& state) { return diag_key(state); }

CMatrix conditional_shield(const KeyShieldState& state, std::size_t i) {
  require_key_index(state, i);
  CMatrix b = block(state, i, i, i, i);
  const double tr = b.trace().real();
  if (!(tr > 0.0)) throw Error(ErrorCode::ZeroBlock, "conditional block has zero trace");
  b *= Complex(1.0 / tr);
  return b;
}

RealMatrix2 privacy_squeeze_pair(const KeyShieldState& state, std::size_t i, std::size_t j) {
  require_key_index(state, i);
  require_key_index(state, j);
  if (i == j) throw Error(ErrorCode::IndexOutOfRange, "privacy squeezing needs distinct key indices");
  const CMatrix pt = state.partial_transpose_bob();
  const double top = trace_norm(block(state, i, j, i, j));
  const double bottom = trace_norm(block(state, j, i, j, i));
  // The (ij, ji) block of rho^Gamma is A_{ii,jj} with its shield transposed.
  const double corner = trace_norm(block(pt, state.key_dim(), state.shield_dim(), i, j, j, i));
  return {{{top, corner}, {corner, bottom}}};
}

CMatrix key_projector(std::size_t i, std::size_t key_dim, std::size_t shield_dim) {
  if (i >= key_dim) throw Error(ErrorCode::IndexOutOfRange, "key index out of range");
  const std::size_t bd = shield_dim * shield_dim;
  CMatrix p(key_dim * key_dim * bd);
  const std::size_t row0 = (i * key_dim + i) * bd;
  for (std::size_t r = 0; r < bd; ++r) p(row0 + r, row0 + r) = 1.0;
  return p;
}

CMatrix key_pair_projector(std::size_t i, std::size_t j, std::size_t key_dim, std::size_t shield_dim) {
  if (i == j) throw Error(ErrorCode::IndexOutOfRange, "key pair projector needs i != j");
  return key_projector(i, key_dim, shield_dim) + key_projector(j, key_dim, shield_dim);
}

CMatrix apply_fact1(const KeyShieldState& state, std::size_t i, std::size_t j) {
  const CMatrix p = key_pair_projector(i, j, state.key_dim(), state.shield_dim());
  return p * state.matrix() * p;
}

CMatrix apply_fact1(const KeyShieldState& state, std::size_t i) {
  const CMatrix p = key_projector(i, state.key_dim(), state.shield_dim());
  return p * state.matrix() * p;
}

// ---------------------------------------------------------------------------
// Samplers

CMatrix random_unitary(std::size_t d, Rng& rng) {
  // Gram-Schmidt on the columns of a complex Ginibre matrix.
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
  for (auto& col : cols)
    for (auto& x : col) x = rng.complex_normal();
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t prev = 0; prev < k; ++prev) {
      Complex overlap = 0.0;
      for (std::size_t r = 0; r < d; ++r) overlap += std::conj(cols[prev][r]) * cols[k][r];
      for (std::size_t r = 0; r < d; ++r) cols[k][r] -= overlap * cols[prev][r];
    }
    double norm = 0.0;
    for (const auto& x : cols[k]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : cols[k]) x /= norm;
  }
  CMatrix u(d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) u(r, c) = cols[c][r];
  return u;
}

CMatrix random_density(std::size_t d, Rng& rng) {
  CMatrix g(d);
  for (auto& x : g.data()) x = rng.complex_normal();
  CMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  // exact Hermitian symmetry
  for (std::size_t r = 0; r < d; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  return rho;
}

CMatrix random_separable(std::size_t dim_a, std::size_t dim_b, std::size_t terms, Rng& rng) {
  const auto weights = dirichlet_uniform(terms, rng);
  CMatrix rho(dim_a * dim_b);
  std::vector<Complex> psi(dim_a * dim_b);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto a = random_unit_vector(dim_a, rng);
    const auto b = random_unit_vector(dim_b, rng);
    for (std::size_t x = 0; x < dim_a; ++x)
      for (std::size_t y = 0; y < dim_b; ++y) psi[x * dim_b + y] = a[x] * b[y];
    add_projector(rho, psi, weights[t]);
  }
  return rho;
}

KeyShieldState random_separable_key_shield(std::size_t key_dim, std::size_t shield_dim, std::size_t terms,
                                           Rng& rng) {
  const std::size_t side = key_dim * shield_dim;
  const CMatrix alice_bob = random_separable(side, side, terms, rng);
  // (A, A', B, B') -> (A, B, A', B')
  const TensorStructure s{key_dim, shield_dim, key_dim, shield_dim};
  const std::array<std::size_t, 4> order{0, 2, 1, 3};
  ProvenanceFlags flags;
  flags.shields_separable_by_construction = true;
  return KeyShieldState::trusted(permute_factors(alice_bob, s, order), key_dim, shield_dim, flags);
}

KeyShieldState random_private_state(std::size_t key_dim, std::size_t shield_dim, Rng& rng) {
  const std::size_t bd = shield_dim * shield_dim;
  PrivateStateSpec spec{key_dim, shield_dim, {}, {}};
  for (std::size_t i = 0; i < key_dim; ++i) spec.unitaries.push_back(random_unitary(bd, rng));
  spec.shield = random_density(bd, rng);
  return private_state(spec);
}

CMatrix random_unitary(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(d, rng);
}

CMatrix random_density(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rng);
}

CMatrix random_separable(std::size_t dim_a, std::size_t dim_b, std::size_t terms, std::uint64_t seed) {
  Rng rng(seed);
  return random_separable(dim_a, dim_b, terms, rng);
}

KeyShieldState random_private_state(std::size_t key_dim, std::size_t shield_dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_private_state(key_dim, shield_dim, rng);
}

}  // namespace privnet
