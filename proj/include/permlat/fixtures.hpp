#pragma once

#include <cstdint>
#include <string>

#include "permlat/lattice.hpp"

namespace permlat {

/// splitmix64; all fixture randomness flows through this for reproducibility
/// across platforms.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(n)); }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

/// Named fixture groups: C2 C4 V4 D8 Q8 (p=2), C3 C9 C3xC3 E27 (p=3).
GroupPtr fixture_group(const std::string& name);
const std::vector<std::string>& fixture_group_names();

struct RandomPerm {
    LatPtr lat;
    PermStructure structure;
};
RandomPerm random_perm_lattice(GroupPtr g, const Ring& ring, uint64_t seed,
                               int max_mult = 2, long max_rank = 120);

Mat random_unimodular(const Ring& ring, int n, uint64_t seed);
LatPtr random_basis_change(LatPtr u, uint64_t seed);

/// Rank p-1 lattice pulled back from G/K for an index-p subgroup K: the
/// generator of the quotient acts by the companion matrix of 1+x+...+x^{p-1}.
/// For p = 2 this is the sign lattice of the character with kernel K.
LatPtr twist_lattice(GroupPtr g, int ker_sub, const Ring& ring);

/// For a cyclic group generated by gen: the generator acts by the companion
/// matrix of the p^level-th cyclotomic polynomial (rank p^level - p^(level-1)).
LatPtr cyclotomic_lattice(GroupPtr g, int gen, int level, const Ring& ring);

struct WeissInstance {
    LatPtr lat;
    PermStructure expected;  // multiset of the K_i by class representative
};
/// Sum of coset lattices R[G/K_i] with K_i meeting n trivially, scrambled by
/// a seeded basis change; both theorem hypotheses are asserted on the result.
WeissInstance weiss_instance(GroupPtr g, int n, const std::vector<int>& ks, uint64_t seed);

struct Counterexample {
    LatPtr lat;
    std::string name;
    bool hyp1_expected_ok = false;
    bool hyp2_expected_ok = false;
};
/// Lattices violating at least one hypothesis at (g, n), with the expected
/// hypothesis flags recorded.
std::vector<Counterexample> known_counterexamples(GroupPtr g, int n);

/// Random equivariant map out of a permutation lattice with known orbits,
/// assembled from random fixed-point images of the orbit generators.
LatticeMap random_map_from_perm(LatPtr src, LatPtr tgt, uint64_t seed);

/// Extension of b by a along a random 1-cocycle with values in Hom(b, a);
/// block lower-triangular action with the cocycle in the mixed block.
LatPtr extension_by_cocycle(LatPtr a, LatPtr b, uint64_t seed);

}  // namespace permlat
