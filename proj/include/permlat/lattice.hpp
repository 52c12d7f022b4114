#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "permlat/group.hpp"
#include "permlat/normal_forms.hpp"

namespace permlat {

/// Multiset of subgroup-class representatives with multiplicities; the
/// certificate of permutation-module structure.
struct PermStructure {
    std::map<int, int> mult;  // class representative subgroup index -> d_P >= 0

    long total_rank(const Group& g) const;
    std::string to_string(const Group& g) const;
    friend bool operator==(const PermStructure& a, const PermStructure& b) {
        return a.mult == b.mult;
    }
};

/// One G-orbit of basis vectors of a permutation lattice: the vectors
/// offset .. offset+|transversal| are the cosets (sub)t, t in transversal.
struct PermOrbit {
    int sub = -1;
    int offset = 0;
    std::vector<int> transversal;
};

/// Known permutation-basis bookkeeping carried by canonically built
/// permutation lattices; destroyed by basis changes.
struct PermTag {
    PermStructure structure;
    std::vector<PermOrbit> orbits;
};

class Lattice;
using LatPtr = std::shared_ptr<const Lattice>;

/// Finite-rank RG-lattice: module elements are row vectors, the group acts
/// on the right through a matrix homomorphism action(gh) = action(g)action(h).
class Lattice {
public:
    GroupPtr group;
    Ring ring;
    int rank = 0;
    std::vector<Mat> action;  // indexed by group element
    std::optional<PermTag> perm_tag;

    const Mat& act(int g) const { return action[g]; }
    std::vector<Int> apply(const std::vector<Int>& v, int g) const {
        return row_times_mat(v, action[g]);
    }
};

enum class Validate { None, Sample, Full };

LatPtr make_lattice(GroupPtr g, const Ring& ring, std::vector<Mat> action,
                    std::optional<PermTag> tag = std::nullopt,
                    Validate level = Validate::Sample);

/// Builds the action of every element from generator matrices by following
/// words, then verifies consistency against the multiplication table.
LatPtr lattice_from_generator_action(GroupPtr g, const Ring& ring,
                                     const std::map<int, Mat>& gen_action,
                                     Validate level = Validate::Full);

/// Equivariant map of lattices; matrix is rank(src) x rank(tgt) and acts on
/// row vectors. Equivariance action_src(g) * f = f * action_tgt(g) is
/// checked on construction.
struct LatticeMap {
    LatPtr src, tgt;
    Mat f;
};

LatticeMap make_map(LatPtr src, LatPtr tgt, Mat f);
LatticeMap identity_map(LatPtr u);
LatticeMap compose(const LatticeMap& a, const LatticeMap& b);

/// Rank-1 characters of a subgroup with values among the p-power-order
/// units of the ring. values[i] belongs to subgroup(sub).elems[i].
struct Character {
    int sub = -1;
    std::vector<Int> values;

    const Int& value_at(const Group& g, int elem) const;
    bool is_trivial() const;
    std::string to_string(const Group& g) const;
};

Character trivial_character(const Group& g, int sub, const Ring& ring);
std::vector<Character> enumerate_characters(const Group& g, int sub, const Ring& ring);

// --- constructions ---------------------------------------------------------

LatPtr perm_lattice(GroupPtr g, int sub, const Ring& ring);
LatPtr trivial_lattice(GroupPtr g, const Ring& ring, int rank = 1);
LatPtr perm_module_from_structure(GroupPtr g, const Ring& ring, const PermStructure& st);

struct DirectSum {
    LatPtr sum;
    std::vector<LatticeMap> inclusions;
    std::vector<LatticeMap> projections;
};
DirectSum direct_sum(const std::vector<LatPtr>& parts);

struct RestrictResult {
    LatPtr lat;
    GroupPtr sub_group;
    std::vector<int> embed;  // sub_group element -> parent element
};
RestrictResult restrict_to(const Lattice& u, int sub);

/// Rank-1 lattice of a character over its subgroup, ready for induction.
RestrictResult character_lattice(GroupPtr g, const Character& chi, const Ring& ring);

/// v is a lattice over a group embedded in `big` via `embed`.
LatPtr induce(const Lattice& v, GroupPtr big, const std::vector<int>& embed);

/// Conjugated action q * action(g) * q^{-1}; equivariantly isomorphic via q.
LatPtr conjugated(const Lattice& u, const Mat& q);

// --- functors and invariants ------------------------------------------------

/// Canonical basis of {x : x action(g) = x for g in sub}. Pure over Z.
Mat fixed_points(const Lattice& u, int sub);
Mat twisted_fixed_points(const Lattice& u, const Character& chi);

struct TraceMapResult {
    Mat matrix;     // coords X^q -> coords X^p
    Mat basis_src;  // fixed-point basis of q
    Mat basis_tgt;  // fixed-point basis of p
};
TraceMapResult trace_map(const Lattice& u, int q, int p);

LatticeMap sigma_mult(LatPtr u, int n);

LatPtr reduce_mod(const Lattice& u, int f);
LatticeMap reduce_map_mod(const LatticeMap& f, int e);

struct FreeOverResult {
    int free_rank = 0;
    Mat basis;  // free_rank rows generating u restricted to n as a free module
};
std::optional<FreeOverResult> is_free_over(const Lattice& u, int n);

Mat map_kernel(const LatticeMap& f);
Presentation map_cokernel(const LatticeMap& f);
bool is_injective(const LatticeMap& f);
/// Cokernel finite with trivial p-part (exactly trivial in truncated mode).
bool is_surjective_p_locally(const LatticeMap& f);

struct MackeyComponent {
    int dc_rep;        // double coset representative in the big group
    int intersection;  // subgroup index of (rep^-1 H rep) cap L in the big group
    LatPtr component;
};
struct MackeyResult {
    std::vector<MackeyComponent> components;
    LatPtr sum;      // direct sum of the components (over L as a group)
    LatPtr target;   // restrict(induce(v), L)
    LatticeMap iso;  // verified isomorphism sum -> target
};
MackeyResult mackey_decompose(const Lattice& v, GroupPtr big,
                              const std::vector<int>& embed, int lsub);

/// u^sub as a lattice with the ambient G-action; sub must be normal.
struct FixedSublattice {
    LatPtr lat;
    Mat basis;  // rows in ambient coordinates
};
FixedSublattice fixed_sublattice(LatPtr u, int sub);

/// Quotient by a pure submodule, integers mode.
struct QuotientLattice {
    LatPtr q;
    LatticeMap proj;
    Mat section;  // section of proj as plain R-modules
};
QuotientLattice quotient_by_pure(LatPtr u, const Mat& sub_basis);

/// Hom_R(b, a) as a lattice: matrices m with m |> g = b(g)^-1 m a(g),
/// vectorized row-major.
LatPtr hom_lattice(const Lattice& b, const Lattice& a);
Mat equivariant_hom_basis(const Lattice& a, const Lattice& b);
LatticeMap map_from_vec(LatPtr a, LatPtr b, const std::vector<Int>& v);

std::optional<Mat> matrix_inverse(const Mat& m);

}  // namespace permlat
