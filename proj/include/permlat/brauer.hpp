#pragma once

#include "permlat/lattice.hpp"

namespace permlat {

/// Per-lattice cache of fixed-point bases and their solvers, shared by the
/// quotient constructions below.
class LatticeCtx {
public:
    explicit LatticeCtx(LatPtr lat) : lat_(std::move(lat)) {}
    const LatPtr& lat() const { return lat_; }
    const Mat& fixed(int sub);
    const EchelonSolver& fixed_solver(int sub);

private:
    LatPtr lat_;
    std::map<int, Mat> fixed_;
    std::map<int, std::shared_ptr<EchelonSolver>> solvers_;
};

enum class BrauerKind { Upper, Double };

/// X^P modulo traces from the maximal proper subgroups, p X^P, and (for the
/// double quotient) the fixed points of the minimal strict overgroups; a
/// module over k[N_G(P)/P] together with the projection from X^P coordinates.
struct BrauerModule {
    int P = -1;
    GroupPtr W;                    // N_G(P)/P
    std::vector<int> wsection;     // W element -> representative in G
    int dim = 0;                   // over k = F_p
    std::vector<Mat> waction;      // per W element, dim x dim over k
    Mat fixed_basis;               // B_P over the lattice's ring
    Mat proj;                      // fixed coords -> quotient coords, over k
    Mat section;                   // quotient coords -> fixed coords, over k
    Ring kring = Ring::truncated(2, 1);
};

BrauerModule brauer_quotient(LatticeCtx& ctx, int P, BrauerKind kind);
BrauerModule upper_quotient(LatPtr x, int P);
BrauerModule double_quotient(LatPtr x, int P);

/// Map X^[P] -> Y^[P] (or the double versions) induced by an equivariant map;
/// commutation with the projections is checked.
Mat induced_between(const BrauerModule& src, const BrauerModule& tgt, const Mat& f);

struct InducedBrauerMap {
    BrauerModule src, tgt;
    Mat map;  // src.dim x tgt.dim over k
};
InducedBrauerMap induced_map(const LatticeMap& f, int P, BrauerKind kind);

struct SupersurjWitness {
    int P = -1;
    std::vector<Int> coker_vector;  // in the target double-quotient coordinates
};
struct SupersurjResult {
    bool ok = false;
    std::optional<SupersurjWitness> witness;
};

/// Decides supersurjectivity through the double-quotient criterion; with
/// cross_check the answer is compared against the all-subgroups definition.
SupersurjResult is_supersurjective(const LatticeMap& f, bool cross_check = false);

/// f^H surjective onto the fixed points (p-locally) for every subgroup H.
bool supersurjective_bruteforce(const LatticeMap& f);

struct MonomialWitness {
    int sub = -1;
    Character chi;
    std::vector<Int> coker_vector;  // ambient coordinates of an unreached vector
};
struct MonomialResult {
    bool ok = false;
    std::optional<MonomialWitness> witness;
};
MonomialResult is_monomial_supersurjective(const LatticeMap& f);

}  // namespace permlat
