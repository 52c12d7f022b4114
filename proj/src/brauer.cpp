#include "permlat/brauer.hpp"

#include <algorithm>

namespace permlat {

const Mat& LatticeCtx::fixed(int sub) {
    auto it = fixed_.find(sub);
    if (it != fixed_.end()) return it->second;
    return fixed_.emplace(sub, fixed_points(*lat_, sub)).first->second;
}

const EchelonSolver& LatticeCtx::fixed_solver(int sub) {
    auto it = solvers_.find(sub);
    if (it != solvers_.end()) return *it->second;
    auto s = std::make_shared<EchelonSolver>(fixed(sub));
    return *solvers_.emplace(sub, std::move(s)).first->second;
}

namespace {

// v reduced against rref rows (zero entries at all pivot columns afterwards)
std::vector<Int> reduce_against_rref(const RrefModP& rr, std::vector<Int> v, const Ring& k) {
    for (int i = 0; i < rr.r.rows(); ++i) {
        int c = rr.pivot_cols[i];
        if (v[c] == 0) continue;
        Int coef = v[c];
        for (int j = 0; j < rr.r.cols(); ++j) v[j] = k.reduce(v[j] - coef * rr.r.at(i, j));
    }
    return v;
}

}  // namespace

BrauerModule brauer_quotient(LatticeCtx& ctx, int P, BrauerKind kind) {
    const Lattice& x = *ctx.lat();
    const Group& g = *x.group;
    BrauerModule bm;
    bm.P = P;
    bm.kring = Ring::truncated(x.ring.p, 1);
    bm.fixed_basis = ctx.fixed(P);
    const int kp = bm.fixed_basis.rows();
    const EchelonSolver& psolver = ctx.fixed_solver(P);

    // denominator, in X^P coordinates over the ring
    std::vector<Mat> denom;
    denom.push_back(kernel(bm.fixed_basis));  // coordinate relations (empty over Z)
    for (int q : g.maximal_subgroups_of(P)) {
        Mat tr(x.ring, x.rank, x.rank);
        for (int t : g.right_transversal_in(q, P)) tr = tr + x.act(t);
        auto coords = psolver.solve_mat(ctx.fixed(q) * tr);
        PERMLAT_ASSERT(coords.has_value(), "trace image must lie in the fixed points");
        denom.push_back(std::move(*coords));
    }
    denom.push_back(Mat::identity(x.ring, kp).scaled(Int(x.ring.p)));
    if (kind == BrauerKind::Double) {
        for (int q : g.minimal_overgroups_of(P)) {
            auto coords = psolver.solve_mat(ctx.fixed(q));
            PERMLAT_ASSERT(coords.has_value(), "overgroup fixed points must lie in X^P");
            denom.push_back(std::move(*coords));
        }
    }
    Mat stacked = Mat::vstack_all(denom, x.ring, kp);
    RrefModP rr = rref_mod_p(stacked);
    bm.dim = static_cast<int>(rr.nonpivot_cols.size());

    bm.proj = Mat(bm.kring, kp, bm.dim);
    for (int i = 0; i < kp; ++i) {
        std::vector<Int> e(kp, Int(0));
        e[i] = 1;
        std::vector<Int> red = reduce_against_rref(rr, std::move(e), bm.kring);
        for (int j = 0; j < bm.dim; ++j) bm.proj.at(i, j) = red[rr.nonpivot_cols[j]];
    }
    bm.section = Mat(bm.kring, bm.dim, kp);
    for (int j = 0; j < bm.dim; ++j) bm.section.at(j, rr.nonpivot_cols[j]) = 1;

    // W = N_G(P)/P with its action on the quotient
    auto nres = g.subgroup_as_group(g.normalizer_of(P));
    std::vector<int> p_in_n;
    for (int e : g.subgroup(P).elems) p_in_n.push_back(nres.into_sub[e]);
    std::sort(p_in_n.begin(), p_in_n.end());
    auto q = nres.group->quotient_by(nres.group->subgroup_index(p_in_n));
    bm.W = q.quotient;
    for (int w = 0; w < bm.W->order(); ++w) bm.wsection.push_back(nres.embed[q.section[w]]);

    for (int w = 0; w < bm.W->order(); ++w) {
        int rep = bm.wsection[w];
        auto coords = psolver.solve_mat(bm.fixed_basis * x.act(rep));
        PERMLAT_ASSERT(coords.has_value(), "normalizer must stabilize the fixed points");
        Mat c = coords->reduced_into(bm.kring);
        bm.waction.push_back(bm.section * c * bm.proj);
    }
    for (int w1 = 0; w1 < bm.W->order(); ++w1)
        for (int w2 = 0; w2 < bm.W->order(); ++w2)
            PERMLAT_ASSERT(bm.waction[w1] * bm.waction[w2] == bm.waction[bm.W->mul(w1, w2)],
                           "quotient action does not satisfy the W table");
    return bm;
}

BrauerModule upper_quotient(LatPtr x, int P) {
    LatticeCtx ctx(std::move(x));
    return brauer_quotient(ctx, P, BrauerKind::Upper);
}

BrauerModule double_quotient(LatPtr x, int P) {
    LatticeCtx ctx(std::move(x));
    return brauer_quotient(ctx, P, BrauerKind::Double);
}

Mat induced_between(const BrauerModule& src, const BrauerModule& tgt, const Mat& f) {
    PERMLAT_ASSERT(src.P == tgt.P, "induced map needs matching base points");
    Mat image = src.fixed_basis * f;
    auto coords = EchelonSolver(tgt.fixed_basis).solve_mat(image);
    PERMLAT_ASSERT(coords.has_value(), "equivariant image must land in the fixed points");
    Mat fk = coords->reduced_into(src.kring);
    Mat induced = src.section * fk * tgt.proj;
    PERMLAT_ASSERT(fk * tgt.proj == src.proj * induced,
                   "induced map does not commute with the projections");
    return induced;
}

InducedBrauerMap induced_map(const LatticeMap& f, int P, BrauerKind kind) {
    LatticeCtx sctx(f.src), tctx(f.tgt);
    InducedBrauerMap out{brauer_quotient(sctx, P, kind), brauer_quotient(tctx, P, kind), Mat()};
    out.map = induced_between(out.src, out.tgt, f.f);
    return out;
}

namespace {

// first coordinate of the target not reached p-locally, or -1
int unreached_column(const Mat& map, const Ring& ring) {
    const int cols = map.cols();
    std::vector<int> pivot_val(cols, -1);
    if (ring.is_integers()) {
        HermiteResult hr = hermite_form(map);
        for (int i = 0; i < hr.h.rows(); ++i)
            for (int j = 0; j < cols; ++j)
                if (hr.h.at(i, j) != 0) {
                    pivot_val[j] = vp(hr.h.at(i, j), ring.p);
                    break;
                }
    } else {
        Mat h = howell_form(map);
        for (int i = 0; i < h.rows(); ++i)
            for (int j = 0; j < cols; ++j)
                if (h.at(i, j) != 0) {
                    pivot_val[j] = ring.valuation(h.at(i, j));
                    break;
                }
    }
    for (int j = 0; j < cols; ++j)
        if (pivot_val[j] != 0) return j;
    return -1;
}

}  // namespace

SupersurjResult is_supersurjective(const LatticeMap& f, bool cross_check) {
    LatticeCtx sctx(f.src), tctx(f.tgt);
    SupersurjResult out;
    out.ok = true;
    for (int rep : f.src->group->class_reps()) {
        BrauerModule s = brauer_quotient(sctx, rep, BrauerKind::Double);
        BrauerModule t = brauer_quotient(tctx, rep, BrauerKind::Double);
        Mat ind = induced_between(s, t, f.f);
        if (rank_mod_p(ind) == t.dim) continue;
        out.ok = false;
        RrefModP rr = rref_mod_p(ind);
        SupersurjWitness w;
        w.P = rep;
        w.coker_vector.assign(t.dim, Int(0));
        w.coker_vector[rr.nonpivot_cols.front()] = 1;
        out.witness = std::move(w);
        break;
    }
    if (cross_check)
        PERMLAT_ASSERT(out.ok == supersurjective_bruteforce(f),
                       "double-quotient criterion disagrees with the definition");
    return out;
}

bool supersurjective_bruteforce(const LatticeMap& f) {
    LatticeCtx sctx(f.src), tctx(f.tgt);
    for (int sub = 0; sub < f.src->group->subgroup_count(); ++sub) {
        const Mat& bs = sctx.fixed(sub);
        const Mat& bt = tctx.fixed(sub);
        auto coords = tctx.fixed_solver(sub).solve_mat(bs * f.f);
        PERMLAT_ASSERT(coords.has_value(), "image must land in the fixed points");
        if (unreached_column(*coords, f.src->ring) >= 0) return false;
        (void)bt;
    }
    return true;
}

MonomialResult is_monomial_supersurjective(const LatticeMap& f) {
    MonomialResult out;
    out.ok = true;
    const Group& g = *f.src->group;
    for (int sub = 0; sub < g.subgroup_count(); ++sub) {
        for (const Character& chi : enumerate_characters(g, sub, f.src->ring)) {
            Mat ts = twisted_fixed_points(*f.src, chi);
            Mat tt = twisted_fixed_points(*f.tgt, chi);
            auto coords = EchelonSolver(tt).solve_mat(ts * f.f);
            PERMLAT_ASSERT(coords.has_value(), "twisted image must land in twisted fixed points");
            int j = unreached_column(*coords, f.src->ring);
            if (j < 0) continue;
            out.ok = false;
            MonomialWitness w;
            w.sub = sub;
            w.chi = chi;
            w.coker_vector = tt.row_vec(j);
            out.witness = std::move(w);
            return out;
        }
    }
    return out;
}

}  // namespace permlat
