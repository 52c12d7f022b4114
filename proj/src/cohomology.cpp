#include "permlat/cohomology.hpp"

namespace permlat {

CocycleSpace cocycle_space(const Lattice& u, int sub) {
    const Group& g = *u.group;
    const Ring& ring = u.ring;
    const int n = u.rank;
    CocycleSpace cs;
    cs.sub = sub;
    cs.gens = g.minimal_generators(sub);
    const int ng = static_cast<int>(cs.gens.size());
    if (ng == 0 || n == 0) {
        cs.z_basis = Mat(ring, 0, ng * n);
        cs.coef[g.identity()] = Mat(ring, ng * n, n);
        return cs;
    }
    const auto& elems = g.subgroup(sub).elems;

    auto unit_block = [&](int s_idx) {
        Mat e(ring, ng * n, n);
        for (int i = 0; i < n; ++i) e.at(s_idx * n + i, i) = 1;
        return e;
    };

    cs.coef[g.identity()] = Mat(ring, ng * n, n);
    std::vector<int> queue{g.identity()};
    for (size_t at = 0; at < queue.size(); ++at) {
        int x = queue[at];
        for (int si = 0; si < ng; ++si) {
            int y = g.mul(x, cs.gens[si]);
            if (cs.coef.count(y)) continue;
            cs.coef[y] = cs.coef[x] * u.act(cs.gens[si]) + unit_block(si);
            queue.push_back(y);
        }
    }
    PERMLAT_ASSERT(cs.coef.size() == elems.size(), "cocycle spanning tree incomplete");

    // remaining relations f(xs) = f(x)s + f(s) cut out Z^1
    std::vector<Mat> blocks;
    for (int x : elems)
        for (int si = 0; si < ng; ++si) {
            int y = g.mul(x, cs.gens[si]);
            Mat rel = cs.coef.at(y) - cs.coef.at(x) * u.act(cs.gens[si]) - unit_block(si);
            if (!rel.is_zero()) blocks.push_back(std::move(rel));
        }
    if (blocks.empty()) {
        cs.z_basis = Mat::identity(ring, ng * n);
        return cs;
    }
    Mat stacked = blocks.front();
    for (size_t i = 1; i < blocks.size(); ++i) stacked = Mat::hstack(stacked, blocks[i]);
    cs.z_basis = kernel(stacked);
    return cs;
}

std::vector<Int> cocycle_value(const CocycleSpace& cs, const std::vector<Int>& params, int elem) {
    auto it = cs.coef.find(elem);
    PERMLAT_REQUIRE(it != cs.coef.end(), "element outside the cocycle subgroup");
    return row_times_mat(params, it->second);
}

Presentation h1(const Lattice& u, int sub) {
    PERMLAT_REQUIRE(u.ring.is_integers(),
                    "h1 refuses truncated mode: cohomology of a truncation differs "
                    "from cohomology of the lattice");
    Presentation zero;
    zero.p = u.ring.p;
    CocycleSpace cs = cocycle_space(u, sub);
    const int ng = static_cast<int>(cs.gens.size());
    const int n = u.rank;
    if (ng == 0 || n == 0) return zero;
    if (cs.z_basis.rows() == 0) return zero;

    // coboundaries: f_v(s) = v s - v
    Mat b1(u.ring, n, ng * n);
    for (int j = 0; j < n; ++j) {
        std::vector<Int> row(static_cast<size_t>(ng) * n, Int(0));
        for (int si = 0; si < ng; ++si) {
            const Mat& a = u.act(cs.gens[si]);
            for (int k = 0; k < n; ++k) row[static_cast<size_t>(si) * n + k] = a.at(j, k);
            row[static_cast<size_t>(si) * n + j] -= 1;
        }
        b1.set_row(j, row);
    }
    auto coords = EchelonSolver(cs.z_basis).solve_mat(b1);
    PERMLAT_ASSERT(coords.has_value(), "coboundaries must lie in the cocycles");
    Presentation pr = smith_invariants(*coords);
    PERMLAT_ASSERT(pr.free_rank == 0, "H^1 of a finite group on a lattice is finite");
    return pr;
}

}  // namespace permlat
