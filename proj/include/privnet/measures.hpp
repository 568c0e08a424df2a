#pragma once

// Entropic and norm-based entanglement quantities. All logarithms are base 2.

#include <cstddef>
#include <span>

#include "privnet/linalg.hpp"
#include "privnet/states.hpp"

namespace privnet {

/// Eigenvalues below this are treated as zero before taking logarithms.
inline constexpr double kEntropyFloor = 1e-12;

/// -sum lambda log2 lambda, in bits. Throws NotDensity.
double von_neumann_entropy(const CMatrix& rho);

/// S(B) - S(AB), where A is the set of listed factors and B the rest.
double coherent_information(const CMatrix& rho, const TensorStructure& s,
                            std::span<const std::size_t> a_factors);
double coherent_information(const CMatrix& rho, const TensorStructure& s,
                            std::initializer_list<std::size_t> a_factors);

/// h(p) = -p log2 p - (1-p) log2(1-p). Throws DomainError outside [0, 1].
double binary_entropy(double p);

/// log2 || rho^Gamma ||, Gamma over Bob's side.
double log_negativity(const KeyShieldState& state);

/// log2 d_k + sum_i (1/d_k) I_coh(A' > B') of the conditional shields.
/// Throws FlagMissing unless the state is private by construction.
double hashing_bound_private(const KeyShieldState& gamma);

/// I_coh(AA' > BB') of the whole state.
double coherent_information_key_shield(const KeyShieldState& state);

struct AttackedDistance {
  double global = 0.0;     // || gamma^Gamma - attacked(gamma)^Gamma ||
  double blockform = 0.0;  // sum_{i != j} (1/d_k) || X_ij^Gamma ||
};

/// Distance between a state and its key-attacked version after partial
/// transposition, by the full-matrix route and by the block route.
AttackedDistance attacked_distance(const KeyShieldState& state);

}  // namespace privnet
