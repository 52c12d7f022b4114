#pragma once

#include "permlat/cohomology.hpp"
#include "permlat/cover.hpp"

namespace permlat {

struct RecognitionReport {
    bool is_permutation = false;
    PermStructure structure;              // meaningful when is_permutation
    std::optional<LatticeMap> iso;        // the cover map as isomorphism witness
    LatPtr cover_module;
    Mat kernel;                           // non-permutation certificate
    std::map<int, int> head_dims;         // diagnostics, per class representative
};

/// A lattice is a permutation lattice iff its cover has zero kernel.
RecognitionReport recognize_permutation(LatPtr u, unsigned lift_seed = 0);

struct CoflasqueResult {
    bool ok = false;
    std::optional<int> witness;           // failing subgroup (class representative)
    Presentation witness_h1;
};
/// H^1(H, u) = 0 for every subgroup H; integers mode only.
CoflasqueResult is_coflasque(const Lattice& u);

struct CliffWeissReport {
    RecognitionReport report;             // the final verdict (direct recognition)
    bool coflasque_ok = false;
    std::optional<int> coflasque_witness;
    bool modp_ok = false;
    RecognitionReport modp_report;        // recognition of u/pu over k
};
/// Recognition through the two-leg criterion (coflasque + mod-p permutation),
/// cross-checked against direct recognition; the cross-check is asserted.
CliffWeissReport cliff_weiss_recognize(LatPtr u);

struct LiftFreeResult {
    Mat sublattice_basis;   // canonical basis of the free sublattice
    LatticeMap inclusion;   // free module RG^d -> l
    LatticeMap retraction;  // l -> RG^d, equivariant, inverting the inclusion
    LatticeMap projector;   // l -> l, idempotent image = the sublattice
};
/// Lifts a kG-free submodule of l/pl to a free direct summand of l.
LiftFreeResult lift_free_summand(LatPtr l, const Mat& f_rows);

/// If f is injective mod p, certifies that f is a split injection of
/// R-lattices and returns sigma with f.f * sigma = identity (an R-module
/// splitting, not necessarily equivariant). Returns nullopt otherwise.
std::optional<Mat> split_injection_mod_p(const LatticeMap& f);

struct SigmaQuotient {
    LatPtr q;           // u / Sigma_n u
    LatticeMap proj;    // u -> q
    Mat sigma_image;    // canonical basis of Sigma_n u
};
SigmaQuotient sigma_quotient(LatPtr u, int n);

/// Given a permutation lattice l, a lattice u with u^n permutation and u
/// free over the central order-p subgroup n, and a surjection f : l -> u/Sigma_n u
/// with kernel Sigma_n l, produces an isomorphism l -> u. Preconditions are
/// checked and reported precisely via value_error.
LatticeMap sigma_quotient_iso(const LatticeMap& f, LatPtr u, int n, const LatticeMap& pi);

enum class WeissStatus { TheoremVerified, HypothesisFailed, TheoremViolated };

struct WeissReport {
    std::optional<FreeOverResult> hypothesis_1;
    RecognitionReport hypothesis_2;       // recognition of u^n with the ambient action
    RecognitionReport conclusion;         // recognition of u itself
    bool hyp1_ok = false;
    bool hyp2_ok = false;
    WeissStatus status = WeissStatus::HypothesisFailed;
};
WeissReport weiss_check(LatPtr u, int n);

std::string to_string(WeissStatus s);

}  // namespace permlat
