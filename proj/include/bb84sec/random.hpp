// Copyright 2026 The bb84sec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BB84SEC_RANDOM_HPP
#define BB84SEC_RANDOM_HPP

#include "bb84sec/infotheory.hpp"
#include "bb84sec/linalg.hpp"
#include "bb84sec/rng.hpp"

namespace bb84sec {

/// Hermitian matrix with entries uniform in [-1, 1] (+ i[-1, 1] off the
/// diagonal), symmetrized.
Matrix random_hermitian(Index dim, SplitMix64& rng);

/// Full-rank density matrix G G^dagger / Tr(G G^dagger) with complex
/// normal G.
Matrix random_density(Index dim, SplitMix64& rng);

/// Haar-ish random unitary from composed two-plane rotations with random
/// angles and phases over every index pair, plus a random diagonal phase.
Matrix random_unitary(Index dim, SplitMix64& rng);

/// POVM of `outcomes` normalized random positive operators:
/// E_k = S^{-1/2} A_k S^{-1/2} with A_k = G_k G_k^dagger and S = sum A_k.
/// Costs one eigendecomposition; intended for small dimensions.
Povm random_povm(Index dim, int outcomes, SplitMix64& rng);

/// Cheap POVM at larger dimensions: a convex mixture of a random projective
/// measurement (eigenbasis bins of a random Hermitian) with weighted
/// multiples of the identity.
Povm random_projective_mixture_povm(Index dim, int outcomes, SplitMix64& rng);

}  // namespace bb84sec

#endif  // BB84SEC_RANDOM_HPP
