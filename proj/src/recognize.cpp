#include "permlat/recognize.hpp"

#include <algorithm>

namespace permlat {

RecognitionReport recognize_permutation(LatPtr u, unsigned lift_seed) {
    CoverResult cov = permutation_cover(u, lift_seed);
    RecognitionReport out;
    out.cover_module = cov.cover_module;
    out.kernel = cov.kernel;
    out.head_dims = cov.head_dims;
    if (cov.kernel.rows() == 0 && cov.cover_module->rank == u->rank) {
        out.is_permutation = true;
        out.structure = cov.structure;
        out.iso = cov.theta;
    }
    return out;
}

CoflasqueResult is_coflasque(const Lattice& u) {
    PERMLAT_REQUIRE(u.ring.is_integers(), "coflasqueness needs integers mode");
    CoflasqueResult out;
    for (int rep : u.group->class_reps()) {
        Presentation pr = h1(u, rep);
        if (!pr.is_zero()) {
            out.ok = false;
            out.witness = rep;
            out.witness_h1 = pr;
            return out;
        }
    }
    out.ok = true;
    return out;
}

CliffWeissReport cliff_weiss_recognize(LatPtr u) {
    PERMLAT_REQUIRE(u->ring.is_integers(), "the two-leg recognition needs integers mode");
    CliffWeissReport out;
    CoflasqueResult cof = is_coflasque(*u);
    out.coflasque_ok = cof.ok;
    out.coflasque_witness = cof.witness;
    out.modp_report = recognize_permutation(reduce_mod(*u, 1));
    out.modp_ok = out.modp_report.is_permutation;
    out.report = recognize_permutation(u);
    // the two routes must agree; this equivalence is the point of the check
    if (out.coflasque_ok && out.modp_ok) {
        PERMLAT_ASSERT(out.report.is_permutation,
                       "coflasque lattice with permutation reduction failed direct recognition");
        PERMLAT_ASSERT(out.report.structure == out.modp_report.structure,
                       "mod-p structure disagrees with the integral structure");
    } else {
        PERMLAT_ASSERT(!out.report.is_permutation,
                       "direct recognition succeeded although a leg of the criterion failed");
    }
    return out;
}

LiftFreeResult lift_free_summand(LatPtr l, const Mat& f_rows) {
    PERMLAT_REQUIRE(l->ring.is_integers(), "free-summand lifting needs integers mode");
    const Group& g = *l->group;
    const int df = f_rows.rows();
    PERMLAT_REQUIRE(f_rows.cols() == l->rank, "submodule rows must live in l");
    PERMLAT_REQUIRE(rank_mod_p(f_rows) == df, "input rows are not independent mod p");
    PERMLAT_REQUIRE(df % g.order() == 0, "input rows not kG-free mod p (dimension)");
    const int d = df / g.order();

    // the row space must be G-stable mod p, with recognizable free structure
    Ring fp = Ring::truncated(l->ring.p, 1);
    Mat fbar = f_rows.reduced_into(fp);
    EchelonSolver fsolver(fbar);
    for (int s : g.generators()) {
        auto c = fsolver.solve_mat(fbar * l->act(s).reduced_into(fp));
        PERMLAT_REQUIRE(c.has_value(), "row space is not G-stable mod p");
    }
    // head of the row space over kG
    std::vector<Mat> blocks;
    for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        auto c = fsolver.solve_mat(fbar * l->act(x).reduced_into(fp));
        PERMLAT_REQUIRE(c.has_value(), "row space is not G-stable mod p");
        blocks.push_back(*c - Mat::identity(fp, df));
    }
    RrefModP coinv = blocks.empty() ? rref_mod_p(Mat(fp, 0, df))
                                    : rref_mod_p(Mat::vstack_all(blocks, fp, df));
    PERMLAT_REQUIRE(static_cast<int>(coinv.nonpivot_cols.size()) == d,
                    "input rows not kG-free mod p (head dimension)");

    Mat phi(l->ring, df, l->rank);
    for (int i = 0; i < d; ++i) {
        std::vector<Int> head = f_rows.row_vec(coinv.nonpivot_cols[i]);
        for (int x = 0; x < g.order(); ++x)
            phi.set_row(i * g.order() + x, l->apply(head, x));
    }
    PERMLAT_REQUIRE(rank_mod_p(phi) == df, "input rows not kG-free mod p (candidate drops rank)");

    LatPtr free_mod = perm_module_from_structure(
        l->group, l->ring, PermStructure{{{g.class_rep_of(g.trivial_subgroup()), d}}});
    LatticeMap inclusion = make_map(free_mod, l, phi);

    // plain R-linear retraction, then the transfer sum makes it equivariant
    auto sigma0t = EchelonSolver(phi.transposed()).solve_mat(Mat::identity(l->ring, df));
    PERMLAT_ASSERT(sigma0t.has_value(), "pure sublattice must admit an R-linear retraction");
    Mat sigma0 = sigma0t->transposed();
    Mat alpha(l->ring, df, df);
    for (int i = 0; i < d; ++i)
        alpha.at(i * g.order() + g.identity(), i * g.order() + g.identity()) = 1;
    Mat tau(l->ring, l->rank, df);
    for (int h = 0; h < g.order(); ++h)
        tau = tau + l->act(h) * sigma0 * alpha * free_mod->act(g.inv(h));
    LatticeMap retraction = make_map(l, free_mod, tau);
    PERMLAT_ASSERT(compose(inclusion, retraction).f.is_identity(),
                   "retraction must invert the inclusion");

    LiftFreeResult out;
    out.sublattice_basis = hermite_form(phi).h.submatrix(0, df, 0, l->rank);
    out.inclusion = inclusion;
    out.retraction = retraction;
    out.projector = compose(retraction, inclusion);
    return out;
}

std::optional<Mat> split_injection_mod_p(const LatticeMap& f) {
    PERMLAT_REQUIRE(f.src->ring.is_integers(), "split injection test needs integers mode");
    Ring fp = Ring::truncated(f.src->ring.p, 1);
    if (kernel(f.f.reduced_into(fp)).rows() != 0) return std::nullopt;
    PERMLAT_ASSERT(kernel(f.f).rows() == 0, "injective mod p implies injective");
    Presentation coker = map_cokernel(f);
    PERMLAT_ASSERT(coker.p_exponents.empty(), "injective mod p implies p-torsion-free cokernel");
    auto sigmat = EchelonSolver(f.f.transposed()).solve_mat(Mat::identity(f.src->ring, f.src->rank));
    PERMLAT_REQUIRE(sigmat.has_value(),
                    "cokernel has prime-to-p torsion; the splitting exists only after "
                    "p-localization");
    return sigmat->transposed();
}

SigmaQuotient sigma_quotient(LatPtr u, int n) {
    PERMLAT_REQUIRE(u->ring.is_integers(), "sigma quotient needs integers mode");
    LatticeMap sig = sigma_mult(u, n);
    SigmaQuotient out;
    out.sigma_image = row_space_basis(sig.f);
    QuotientLattice q = quotient_by_pure(u, out.sigma_image);
    out.q = q.q;
    out.proj = q.proj;
    return out;
}

LatticeMap sigma_quotient_iso(const LatticeMap& f, LatPtr u, int n, const LatticeMap& pi) {
    const Group& g = *u->group;
    PERMLAT_REQUIRE(u->ring.is_integers(), "sigma-quotient lifting needs integers mode");
    PERMLAT_REQUIRE(g.subgroup(n).order() == g.p(), "n must have order p");
    {
        auto center = g.center_elements();
        for (int e : g.subgroup(n).elems)
            PERMLAT_REQUIRE(std::binary_search(center.begin(), center.end(), e),
                            "n must be central");
    }
    PERMLAT_REQUIRE(f.src->perm_tag.has_value(),
                    "l must be a permutation lattice with known structure");
    PERMLAT_REQUIRE(f.tgt == pi.tgt, "f and pi must land in the same quotient");
    PERMLAT_REQUIRE(pi.src == u, "pi must start at u");

    if (!is_free_over(*u, n))
        throw value_error("hypothesis failed: u is not free over n");
    FixedSublattice fs = fixed_sublattice(u, n);
    if (!recognize_permutation(fs.lat).is_permutation)
        throw value_error("hypothesis failed: u^n is not a permutation lattice");

    Mat sig_image = row_space_basis(sigma_mult(f.src, n).f);
    if (!(map_kernel(f) == sig_image))
        throw value_error("kernel of f is not Sigma_n l");

    LatticeMap lift = lift_from_perm(f, pi);
    PERMLAT_ASSERT(f.src->rank == u->rank, "kernel condition forces equal ranks");
    Ring fp = Ring::truncated(u->ring.p, 1);
    PERMLAT_ASSERT(kernel(lift.f.reduced_into(fp)).rows() == 0,
                   "lift must be injective mod p");
    PERMLAT_ASSERT(is_surjective_p_locally(lift), "lift must be surjective p-locally");
    return lift;
}

WeissReport weiss_check(LatPtr u, int n) {
    PERMLAT_REQUIRE(u->ring.is_integers(), "the end-to-end check needs integers mode");
    PERMLAT_REQUIRE(u->group->is_normal(n), "n must be normal");
    WeissReport out;
    out.hypothesis_1 = is_free_over(*u, n);
    out.hyp1_ok = out.hypothesis_1.has_value();
    FixedSublattice fs = fixed_sublattice(u, n);
    out.hypothesis_2 = recognize_permutation(fs.lat);
    out.hyp2_ok = out.hypothesis_2.is_permutation;
    out.conclusion = recognize_permutation(u);
    if (out.hyp1_ok && out.hyp2_ok)
        out.status = out.conclusion.is_permutation ? WeissStatus::TheoremVerified
                                                   : WeissStatus::TheoremViolated;
    else
        out.status = WeissStatus::HypothesisFailed;
    return out;
}

std::string to_string(WeissStatus s) {
    switch (s) {
        case WeissStatus::TheoremVerified: return "TheoremVerified";
        case WeissStatus::HypothesisFailed: return "HypothesisFailed";
        case WeissStatus::TheoremViolated: return "TheoremViolated";
    }
    return "?";
}

}  // namespace permlat
