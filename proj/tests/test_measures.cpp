#include <gtest/gtest.h>

#include <cmath>

#include "privnet/error.hpp"
#include "privnet/measures.hpp"
#include "privnet/states.hpp"

using namespace privnet;

// Frozen from tests/oracles/bounds_oracle.py (50-digit mpmath).
constexpr double kH14 = 0.81127812445913286;

TEST(Entropy, PureMixedAndDiagonal) {
  EXPECT_NEAR(von_neumann_entropy(max_entangled(2).matrix()), 0.0, 1e-12);
  for (std::size_t d : {2u, 3u, 8u}) {
    EXPECT_NEAR(von_neumann_entropy(CMatrix::identity(d) * Complex(1.0 / d)), std::log2(d), 1e-12);
  }
  EXPECT_NEAR(von_neumann_entropy(CMatrix::diagonal({0.75, 0.25})), kH14, 1e-12);
}

TEST(Entropy, UnitarilyInvariant) {
  Rng rng(3);
  for (int t = 0; t < 5; ++t) {
    const CMatrix rho = random_density(6, rng);
    const CMatrix u = random_unitary(6, rng);
    EXPECT_NEAR(von_neumann_entropy(u * rho * u.adjoint()), von_neumann_entropy(rho), 1e-9);
  }
}

TEST(Entropy, RejectsNonDensity) {
  try {
    von_neumann_entropy(CMatrix::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDensity);
  }
}

TEST(BinaryEntropy, ValuesAndDomain) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_NEAR(binary_entropy(0.25), kH14, 1e-15);
  for (int k = 1; k < 100; ++k) {
    const double p = k / 100.0;
    EXPECT_NEAR(binary_entropy(p), binary_entropy(1.0 - p), 1e-14);
  }
  EXPECT_THROW(binary_entropy(-0.1), Error);
  EXPECT_THROW(binary_entropy(1.5), Error);
  EXPECT_THROW(binary_entropy(std::nan("")), Error);
}

TEST(CoherentInformation, MaximallyEntangledAndMixed) {
  const TensorStructure s{2, 2};
  EXPECT_NEAR(coherent_information(max_entangled(2).matrix(), s, {0}), 1.0, 1e-12);
  EXPECT_NEAR(coherent_information(CMatrix::identity(4) * Complex(0.25), s, {0}), -1.0, 1e-12);
  const TensorStructure s3{3, 3};
  EXPECT_NEAR(coherent_information(CMatrix::identity(9) * Complex(1.0 / 9), s3, {0}), -std::log2(3.0), 1e-12);
}

TEST(CoherentInformation, ConditionalShieldOfSwapPbit) {
  for (std::size_t ds : {2u, 3u}) {
    const CMatrix sigma = conditional_shield(swap_pbit(ds), 0);
    EXPECT_NEAR(coherent_information(sigma, TensorStructure{ds, ds}, {0}), -std::log2(ds), 1e-12);
  }
}

TEST(CoherentInformation, RangeOnRandomStates) {
  Rng rng(17);
  const TensorStructure s{2, 3};
  for (int t = 0; t < 20; ++t) {
    const double ic = coherent_information(random_density(6, rng), s, {0});
    EXPECT_GE(ic, -1.0 - 1e-9);
    EXPECT_LE(ic, std::log2(3.0) + 1e-9);
  }
}

TEST(LogNegativity, KnownValues) {
  EXPECT_NEAR(log_negativity(max_entangled(2)), 1.0, 1e-12);
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    EXPECT_NEAR(log_negativity(random_separable_key_shield(2, 2, 3, rng)), 0.0, 1e-8);
  }
}

TEST(LogNegativity, AdditiveUnderTensorProduct) {
  // rho (x) rho on (A1 B1) (A2 B2), regrouped to Alice (A1 A2) : Bob (B1 B2).
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const CMatrix rho = random_density(4, seed);
    const KeyShieldState single(rho, 2, 1);
    const std::vector<std::size_t> order{0, 2, 1, 3};
    const CMatrix doubled = permute_factors(kron(rho, rho), TensorStructure{2, 2, 2, 2}, order);
    const KeyShieldState pair(doubled, 4, 1);
    EXPECT_NEAR(log_negativity(pair), 2.0 * log_negativity(single), 1e-9);
  }
}

TEST(LogNegativity, ZeroIffPpt) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto rho = KeyShieldState(random_density(4, rng), 2, 1);
    const bool ppt = is_psd(rho.partial_transpose_bob(), 1e-12);
    EXPECT_EQ(ppt, log_negativity(rho) < 1e-10);
  }
}

TEST(HashingBound, SwapPbitSaturatesFloor) {
  for (std::size_t ds : {2u, 3u, 4u}) {
    EXPECT_NEAR(hashing_bound_private(swap_pbit(ds)), 1.0 - std::log2(ds), 1e-10);
  }
}

TEST(HashingBound, ShieldDimensionOne) {
  PrivateStateSpec spec{3, 1, {CMatrix::identity(1), CMatrix::identity(1), CMatrix::identity(1)},
                        CMatrix::identity(1)};
  EXPECT_NEAR(hashing_bound_private(private_state(spec)), std::log2(3.0), 1e-12);
}

TEST(HashingBound, EqualsFullCoherentInformation) {
  const auto g = random_private_state(2, 2, 8);
  EXPECT_NEAR(hashing_bound_private(g), coherent_information_key_shield(g), 1e-8);
  for (std::size_t ds : {2u, 3u}) {
    const auto omega = swap_pbit(ds);
    EXPECT_NEAR(hashing_bound_private(omega), coherent_information_key_shield(omega), 1e-8);
  }
}

TEST(HashingBound, RequiresPrivateFlag) {
  const KeyShieldState plain(swap_pbit(2).matrix(), 2, 2);
  try {
    hashing_bound_private(plain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FlagMissing);
  }
}

TEST(AttackedDistance, SwapPbitFamily) {
  for (std::size_t ds : {2u, 3u, 4u, 5u}) {
    const auto d = attacked_distance(swap_pbit(ds));
    EXPECT_NEAR(d.global, 1.0 / ds, 1e-10);
    EXPECT_NEAR(d.blockform, 1.0 / ds, 1e-10);
  }
}

TEST(AttackedDistance, ShieldDimensionOneAndKeyDiagonal) {
  const auto d = attacked_distance(max_entangled(2));
  EXPECT_NEAR(d.global, 1.0, 1e-12);
  EXPECT_NEAR(d.blockform, 1.0, 1e-12);
  const auto diag = attacked_distance(diag_key(KeyShieldState(random_density(16, 9), 2, 2)));
  EXPECT_EQ(diag.global, 0.0);
  EXPECT_EQ(diag.blockform, 0.0);
}

TEST(AttackedDistance, FormsAgreeOnRandomPrivateStates) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = random_private_state(2 + seed % 2, 2 + (seed / 2) % 2, seed);
    const auto d = attacked_distance(g);
    EXPECT_NEAR(d.global, d.blockform, 1e-8);
    EXPECT_GE(d.global, 0.0);
  }
}
