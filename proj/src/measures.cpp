#include "privnet/measures.hpp"

#include <cmath>
#include <vector>

#include "privnet/error.hpp"

namespace privnet {

double von_neumann_entropy(const CMatrix& rho) {
  require_density(rho);
  double s = 0.0;
  for (double x : herm_eigenvalues(rho)) {
    if (x > kEntropyFloor) s -= x * std::log2(x);
  }
  return s;
}

double coherent_information(const CMatrix& rho, const TensorStructure& s,
                            std::span<const std::size_t> a_factors) {
  std::vector<bool> in_a(s.factor_count(), false);
  for (auto f : a_factors) {
    if (f >= s.factor_count()) throw Error(ErrorCode::StructureMismatch, "factor index out of range");
    in_a[f] = true;
  }
  std::vector<std::size_t> b_factors;
  for (std::size_t k = 0; k < s.factor_count(); ++k)
    if (!in_a[k]) b_factors.push_back(k);
  const CMatrix rho_b = partial_trace(rho, s, b_factors);
  return von_neumann_entropy(rho_b) - von_neumann_entropy(rho);
}

double coherent_information(const CMatrix& rho, const TensorStructure& s,
                            std::initializer_list<std::size_t> a_factors) {
  return coherent_information(rho, s, std::span<const std::size_t>(a_factors.begin(), a_factors.size()));
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::DomainError, "binary entropy needs p in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double log_negativity(const KeyShieldState& state) {
  return std::log2(trace_norm(state.partial_transpose_bob()));
}

double coherent_information_key_shield(const KeyShieldState& state) {
  return coherent_information(state.matrix(), state.structure(), {factor::kKeyA, factor::kShieldA});
}

double hashing_bound_private(const KeyShieldState& gamma) {
  if (!gamma.flags().private_by_construction) {
    throw Error(ErrorCode::FlagMissing, "hashing bound needs a private state");
  }
  const std::size_t dk = gamma.key_dim();
  const std::size_t ds = gamma.shield_dim();
  const TensorStructure shield{ds, ds};
  double acc = 0.0;
  for (std::size_t i = 0; i < dk; ++i) {
    acc += coherent_information(conditional_shield(gamma, i), shield, {0});
  }
  return std::log2(static_cast<double>(dk)) + acc / static_cast<double>(dk);
}

AttackedDistance attacked_distance(const KeyShieldState& state) {
  const std::size_t dk = state.key_dim();
  const std::size_t ds = state.shield_dim();
  AttackedDistance out;
  const CMatrix diff = state.partial_transpose_bob() - key_attack(state).partial_transpose_bob();
  out.global = trace_norm(diff);

  double acc = 0.0;
  if (state.witness()) {
    const auto& w = *state.witness();
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t j = 0; j < dk; ++j) {
        if (i == j) continue;
        const CMatrix x = w.unitaries[i] * w.shield * w.unitaries[j].adjoint();
        acc += trace_norm(shield_partial_transpose(x, ds)) / static_cast<double>(dk);
      }
  } else {
    // Raw blocks A_{ii,jj} already carry the 1/d_k weight.
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t j = 0; j < dk; ++j) {
        if (i == j) continue;
        acc += trace_norm(shield_partial_transpose(block(state, i, i, j, j), ds));
      }
  }
  out.blockform = acc;
  return out;
}

}  // namespace privnet
