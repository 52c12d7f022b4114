#include "permlat/cover.hpp"

namespace permlat {

int head_dim(const BrauerModule& b) {
    if (b.dim == 0) return 0;
    std::vector<Mat> blocks;
    Mat id = Mat::identity(b.kring, b.dim);
    for (int w = 0; w < b.W->order(); ++w)
        if (w != b.W->identity()) blocks.push_back(b.waction[w] - id);
    if (blocks.empty()) return b.dim;
    Mat stacked = Mat::vstack_all(blocks, b.kring, b.dim);
    return b.dim - howell_form(stacked).rows();
}

namespace {

struct SplitMix {
    unsigned long long s;
    explicit SplitMix(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        s += 0x9e3779b97f4a7c15ULL;
        unsigned long long z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % n); }
};

// head lifts: rows of B_P indexed through the two nested quotients
Mat choose_lifts(const BrauerModule& bm, int d, unsigned lift_seed) {
    std::vector<Mat> blocks;
    Mat id = Mat::identity(bm.kring, bm.dim);
    for (int w = 0; w < bm.W->order(); ++w)
        if (w != bm.W->identity()) blocks.push_back(bm.waction[w] - id);
    RrefModP coinv = blocks.empty()
                         ? rref_mod_p(Mat(bm.kring, 0, bm.dim))
                         : rref_mod_p(Mat::vstack_all(blocks, bm.kring, bm.dim));
    PERMLAT_ASSERT(static_cast<int>(coinv.nonpivot_cols.size()) == d, "head dimension mismatch");
    const Ring& ring = bm.fixed_basis.ring();
    Mat lifts(ring, d, bm.fixed_basis.cols());
    for (int i = 0; i < d; ++i) {
        // quotient coordinate -> fixed-point coordinate via the 0/1 section
        int vcoord = coinv.nonpivot_cols[i];
        int fcoord = -1;
        for (int j = 0; j < bm.section.cols(); ++j)
            if (bm.section.at(vcoord, j) != 0) fcoord = j;
        PERMLAT_ASSERT(fcoord >= 0, "section row without a unit entry");
        lifts.set_row(i, bm.fixed_basis.row_vec(fcoord));
    }
    if (lift_seed != 0 && bm.fixed_basis.rows() > 0) {
        // stay inside the head-basis fiber: shifts by p X^P and unipotent mixing
        SplitMix rng(lift_seed);
        for (int i = 0; i < d; ++i) {
            int r = rng.below(bm.fixed_basis.rows());
            int c = rng.below(3) - 1;
            std::vector<Int> row = lifts.row_vec(i);
            const Int shift = Int(ring.p) * c;
            for (int j = 0; j < lifts.cols(); ++j)
                row[j] = ring.reduce(row[j] + shift * bm.fixed_basis.at(r, j));
            if (d > 1) {
                int k = rng.below(d);
                if (k != i && rng.below(2) == 1)
                    for (int j = 0; j < lifts.cols(); ++j)
                        row[j] = ring.reduce(row[j] + lifts.at(k, j));
            }
            lifts.set_row(i, row);
        }
    }
    return lifts;
}

}  // namespace

CoverResult permutation_cover(LatPtr x, unsigned lift_seed, bool verify) {
    const Group& g = *x->group;
    LatticeCtx xctx(x);
    CoverResult out;
    std::map<int, BrauerModule> xq;
    for (int rep : g.class_reps()) {
        BrauerModule bm = brauer_quotient(xctx, rep, BrauerKind::Double);
        int d = head_dim(bm);
        out.head_dims[rep] = d;
        if (d > 0) {
            out.structure.mult[rep] = d;
            out.lifts[rep] = choose_lifts(bm, d, lift_seed);
        }
        xq.emplace(rep, std::move(bm));
    }
    out.cover_module = perm_module_from_structure(x->group, x->ring, out.structure);
    PERMLAT_ASSERT(out.cover_module->perm_tag.has_value(), "cover must carry its structure");

    Mat theta(x->ring, out.cover_module->rank, x->rank);
    std::map<int, int> copy_counter;
    for (const auto& orbit : out.cover_module->perm_tag->orbits) {
        // orbits are grouped by class representative, in copy order
        int rep = g.class_rep_of(orbit.sub);
        int copy = copy_counter[rep]++;
        std::vector<Int> lift = out.lifts.at(rep).row_vec(copy);
        for (size_t j = 0; j < orbit.transversal.size(); ++j)
            theta.set_row(orbit.offset + static_cast<int>(j),
                          x->apply(lift, orbit.transversal[j]));
    }
    out.theta = make_map(out.cover_module, x, std::move(theta));
    out.kernel = map_kernel(out.theta);

    if (verify) {
        PERMLAT_ASSERT(is_surjective_p_locally(out.theta),
                       "cover map must be surjective after p-localization");
        LatticeCtx cctx(out.cover_module);
        for (int rep : g.class_reps()) {
            BrauerModule cq = brauer_quotient(cctx, rep, BrauerKind::Double);
            int expected = 0;
            if (auto it = out.structure.mult.find(rep); it != out.structure.mult.end())
                expected = it->second;
            PERMLAT_ASSERT(head_dim(cq) == expected,
                           "multiplicity recomputed on the cover does not match");
            Mat ind = induced_between(cq, xq.at(rep), out.theta.f);
            PERMLAT_ASSERT(rank_mod_p(ind) == xq.at(rep).dim,
                           "cover map must be supersurjective");
        }
    }
    return out;
}

bool is_precover(const LatticeMap& f) {
    PERMLAT_REQUIRE(f.src->perm_tag.has_value(),
                    "source was not built as a permutation lattice (structure unknown)");
    return is_supersurjective(f).ok;
}

LatticeMap lift_from_perm(const LatticeMap& f, const LatticeMap& pi) {
    PERMLAT_REQUIRE(f.src->perm_tag.has_value(),
                    "lift source must be a permutation lattice with known structure");
    PERMLAT_REQUIRE(f.tgt == pi.tgt || f.tgt->rank == pi.tgt->rank,
                    "lift needs maps into the same target");
    const Lattice& l = *f.src;
    const Lattice& xx = *pi.src;
    LatticeCtx xctx(pi.src);
    Mat lifted(l.ring, l.rank, xx.rank);
    for (const auto& orbit : l.perm_tag->orbits) {
        const Mat& bp = xctx.fixed(orbit.sub);
        EchelonSolver solver(bp * pi.f);
        auto z = solver.solve(f.f.row_vec(orbit.offset));
        PERMLAT_REQUIRE(z.has_value(),
                        "orbit generator has no exact preimage in the fixed points; "
                        "the map is not exactly surjective on X^" +
                            l.group->subgroup_label(orbit.sub));
        std::vector<Int> w = row_times_mat(*z, bp);
        for (size_t j = 0; j < orbit.transversal.size(); ++j)
            lifted.set_row(orbit.offset + static_cast<int>(j),
                           xx.apply(w, orbit.transversal[j]));
    }
    LatticeMap out = make_map(f.src, pi.src, std::move(lifted));
    PERMLAT_ASSERT(compose(out, pi).f == f.f, "lift does not factor the original map");
    return out;
}

std::optional<LatticeMap> split_surjection_onto_perm(const LatticeMap& f) {
    PERMLAT_REQUIRE(f.tgt->perm_tag.has_value(),
                    "target was not built as a permutation lattice (structure unknown)");
    PERMLAT_REQUIRE(is_supersurjective(f).ok, "map is not supersurjective");
    LatticeMap s = lift_from_perm(identity_map(f.tgt), f);
    PERMLAT_ASSERT(compose(s, f).f.is_identity(), "splitting must invert on the target");
    return s;
}

}  // namespace permlat
