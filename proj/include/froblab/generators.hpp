#pragma once

// Seeded instance generation: the algebra catalog, random ideals, random
// valid F-modules and random homomorphisms between them.

#include <random>
#include <string>
#include <vector>

#include "froblab/fmodule.hpp"

namespace froblab {

struct NamedAlgebra {
  std::string name;
  AlgebraRef algebra;
};

/// Local F_2-algebras of dimension ≤ 3 (one per isomorphism class), F_4, F_9,
/// F_3[t]/(t^2), F_2×F_2, F_3 and F_5.
std::vector<NamedAlgebra> standard_catalog();

/// Representatives of the isomorphism classes among `algebras` (brute-force
/// search for an algebra isomorphism; intended for dimension ≤ 3).
std::vector<AlgebraRef> isomorphism_classes(const std::vector<AlgebraRef>& algebras);
bool algebras_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

Vec random_element(const FiniteAlgebra& a, std::mt19937_64& rng);
Ideal random_ideal(const FiniteAlgebra& a, std::mt19937_64& rng);
FpMatrix random_invertible(Elem p, std::size_t n, std::mt19937_64& rng);

/// R/I with the induced regular action, as action matrices only.
std::vector<FpMatrix> cyclic_action(const FiniteAlgebra& a, const Ideal& ideal);

/// Solution space of the semilinearity constraint for X, as flattened n×n matrices.
template <Side S>
Subspace semilinear_maps(const FiniteAlgebra& a, const std::vector<FpMatrix>& action);

/// A valid module of dimension ≤ max_dim: a direct sum of cyclic modules R/I,
/// a random X from the semilinear solution space, then a random change of basis.
template <Side S>
FModule<S> random_module(const AlgebraRef& a, std::mt19937_64& rng, std::size_t max_dim = 4);

/// A uniformly random element of hom_space(from, to).
template <Side S>
FpMatrix random_homomorphism(const FModule<S>& from, const FModule<S>& to, std::mt19937_64& rng);

/// F_p[t]/(t^2)-module F_p = R/(t) with the given scalar X.
RightFModule residue_field_right(const AlgebraRef& truncated, Elem x);
LeftFModule residue_field_left(const AlgebraRef& truncated, Elem x);

}  // namespace froblab
