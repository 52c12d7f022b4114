#pragma once

#include "permlat/brauer.hpp"

namespace permlat {

/// Dimension over k of the coinvariants of b under its acting group W; since
/// W is a p-group this is the head of b over the local algebra k[W].
int head_dim(const BrauerModule& b);

struct CoverResult {
    PermStructure structure;
    LatPtr cover_module;          // the explicit sum of coset lattices
    LatticeMap theta;             // cover_module -> x, supersurjective
    Mat kernel;                   // canonical basis, the non-permutation certificate
    std::map<int, Mat> lifts;     // class rep -> chosen head lifts in X^P (d_P rows)
    std::map<int, int> head_dims; // class rep -> d_P
};

/// The explicit permutation cover of x: for every subgroup-class
/// representative P the multiplicity d_P is the head dimension of the double
/// quotient at P, and the P-component sends the coset Pt of each chosen head
/// lift x_i to x_i t. A nonzero lift_seed perturbs the lift choices without
/// leaving the head-basis fiber. Postconditions (supersurjectivity, p-local
/// surjectivity, multiplicity recomputation on the built cover) are asserted
/// unless verify is false.
CoverResult permutation_cover(LatPtr x, unsigned lift_seed = 0, bool verify = true);

/// A map from a permutation lattice is a precover iff it is supersurjective.
bool is_precover(const LatticeMap& f);

/// Lifts f : L -> Y through pi : X -> Y for a permutation lattice L with
/// known orbit structure, solving each orbit generator inside the fixed
/// points. Throws when a generator has no exact preimage.
LatticeMap lift_from_perm(const LatticeMap& f, const LatticeMap& pi);

/// For supersurjective f : L -> M with M a permutation lattice of known
/// structure, returns s : M -> L with s then f equal to the identity.
std::optional<LatticeMap> split_surjection_onto_perm(const LatticeMap& f);

}  // namespace permlat
