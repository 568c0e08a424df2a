#pragma once

// Key/shield bipartite states.
//
// A KeyShieldState lives on A (d_k) x B (d_k) x A' (d_s) x B' (d_s), in that
// factor order. Alice holds A and A', Bob holds B and B'. With this order the
// matrix decomposes as rho = sum_{ijkl} |ij><kl| (x) A_{ij,kl}, where every
// block A_{ij,kl} is a contiguous d_s^2 x d_s^2 submatrix. The partial
// transpose Gamma always acts on Bob's whole side {B, B'}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "privnet/linalg.hpp"
#include "privnet/random.hpp"

namespace privnet {

/// Indices of the four factors in a key/shield layout.
namespace factor {
inline constexpr std::size_t kKeyA = 0;
inline constexpr std::size_t kKeyB = 1;
inline constexpr std::size_t kShieldA = 2;
inline constexpr std::size_t kShieldB = 3;
}  // namespace factor

/// Provenance of a constructed state. These are trust flags written by
/// constructors that can certify them; they are never inferred numerically.
struct ProvenanceFlags {
  bool private_by_construction = false;
  bool irreducible_by_construction = false;
  bool shields_separable_by_construction = false;

  friend bool operator==(const ProvenanceFlags&, const ProvenanceFlags&) = default;
};

/// Witness data of a private state: gamma = sum_ij (1/d_k)|ii><jj| (x) U_i sigma U_j^dagger.
struct PrivateStateSpec {
  std::size_t key_dim = 0;
  std::size_t shield_dim = 0;
  std::vector<CMatrix> unitaries;  // d_k unitaries on A'B' (dim d_s^2)
  CMatrix shield;                  // density matrix on A'B'
};

class KeyShieldState {
 public:
  /// Validates shape and density (Hermitian, PSD, unit trace within 1e-9).
  /// Throws StructureMismatch or NotDensity.
  KeyShieldState(CMatrix matrix, std::size_t key_dim, std::size_t shield_dim,
                 ProvenanceFlags flags = {}, std::optional<PrivateStateSpec> witness = std::nullopt);

  /// Skips the density check; for maps that provably preserve it.
  static KeyShieldState trusted(CMatrix matrix, std::size_t key_dim, std::size_t shield_dim,
                                ProvenanceFlags flags = {},
                                std::optional<PrivateStateSpec> witness = std::nullopt);

  const CMatrix& matrix() const noexcept { return matrix_; }
  std::size_t key_dim() const noexcept { return key_dim_; }
  std::size_t shield_dim() const noexcept { return shield_dim_; }
  std::size_t block_dim() const noexcept { return shield_dim_ * shield_dim_; }
  TensorStructure structure() const;
  const ProvenanceFlags& flags() const noexcept { return flags_; }
  const std::optional<PrivateStateSpec>& witness() const noexcept { return witness_; }

  /// Matrix with Bob's side {B, B'} transposed.
  CMatrix partial_transpose_bob() const;

 private:
  struct TrustedTag {};
  KeyShieldState(TrustedTag, CMatrix matrix, std::size_t key_dim, std::size_t shield_dim,
                 ProvenanceFlags flags, std::optional<PrivateStateSpec> witness);

  CMatrix matrix_;
  std::size_t key_dim_;
  std::size_t shield_dim_;
  ProvenanceFlags flags_;
  std::optional<PrivateStateSpec> witness_;
};

/// Throws NotDensity unless m is Hermitian, PSD and trace one within tol.
void require_density(const CMatrix& m, double tol = kDefaultTol);

// -- constructors ------------------------------------------------------------

/// Throws NotUnitary, NotDensity, StructureMismatch.
KeyShieldState private_state(const PrivateStateSpec& spec, bool shields_separable = false);

/// Swap operator on C^d (x) C^d.
CMatrix swap_operator(std::size_t d);

/// The swap-pbit: d_k = 2, U_0 = I, U_1 = F, sigma = I/d_s^2.
KeyShieldState swap_pbit(std::size_t shield_dim);

/// |Phi+><Phi+| on d (x) d, as a key/shield state with d_s = 1.
KeyShieldState max_entangled(std::size_t d);

// -- structural maps ----------------------------------------------------------

/// Complete measurement of both key subsystems: every block A_{ij,kl} with
/// (ij) != (kl) is set to zero.
KeyShieldState key_attack(const KeyShieldState& state);

/// sum_ij |ij><ij| (x) A_{ij,ij}.
KeyShieldState diag_key(const KeyShieldState& state);

/// A_{ij,kl}. Throws IndexOutOfRange.
CMatrix block(const KeyShieldState& state, std::size_t i, std::size_t j, std::size_t k, std::size_t l);
CMatrix block(const CMatrix& m, std::size_t key_dim, std::size_t shield_dim, std::size_t i,
              std::size_t j, std::size_t k, std::size_t l);

/// Writes `value` into block (ij, kl) of m.
void set_block(CMatrix& m, std::size_t key_dim, std::size_t shield_dim, std::size_t i, std::size_t j,
               std::size_t k, std::size_t l, const CMatrix& value);

/// Transpose of the B' factor of a d_s x d_s shield operator.
CMatrix shield_partial_transpose(const CMatrix& shield_op, std::size_t shield_dim);

/// Normalized A_{ii,ii}. Throws ZeroBlock, IndexOutOfRange.
CMatrix conditional_shield(const KeyShieldState& state, std::size_t i);

/// [[|A_{ij,ij}|, |A_{ii,jj}^G|], [|A_{ii,jj}^G|, |A_{ji,ji}|]] in trace norm,
/// with G the partial transpose of the shield block. PSD when the state is PPT.
using RealMatrix2 = std::array<std::array<double, 2>, 2>;
RealMatrix2 privacy_squeeze_pair(const KeyShieldState& state, std::size_t i, std::size_t j);

/// (|ii><ii| + |jj><jj|) (x) I. Throws IndexOutOfRange (including i == j).
CMatrix key_pair_projector(std::size_t i, std::size_t j, std::size_t key_dim, std::size_t shield_dim);
/// |ii><ii| (x) I.
CMatrix key_projector(std::size_t i, std::size_t key_dim, std::size_t shield_dim);

/// P rho P with P = key_pair_projector(i, j).
CMatrix apply_fact1(const KeyShieldState& state, std::size_t i, std::size_t j);
/// P rho P with P = key_projector(i).
CMatrix apply_fact1(const KeyShieldState& state, std::size_t i);

// -- samplers ---------------------------------------------------------------

CMatrix random_unitary(std::size_t d, Rng& rng);
CMatrix random_density(std::size_t d, Rng& rng);
/// Mixture of `terms` product pure states on dA (x) dB, Dirichlet(1) weights.
CMatrix random_separable(std::size_t dim_a, std::size_t dim_b, std::size_t terms, Rng& rng);
/// Separable across Alice (A A') : Bob (B B'), laid out as (A, B, A', B').
KeyShieldState random_separable_key_shield(std::size_t key_dim, std::size_t shield_dim,
                                           std::size_t terms, Rng& rng);
KeyShieldState random_private_state(std::size_t key_dim, std::size_t shield_dim, Rng& rng);

CMatrix random_unitary(std::size_t d, std::uint64_t seed);
CMatrix random_density(std::size_t d, std::uint64_t seed);
CMatrix random_separable(std::size_t dim_a, std::size_t dim_b, std::size_t terms, std::uint64_t seed);
KeyShieldState random_private_state(std::size_t key_dim, std::size_t shield_dim, std::uint64_t seed);

}  // namespace privnet
