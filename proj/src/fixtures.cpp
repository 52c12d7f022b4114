#include "permlat/fixtures.hpp"

#include <algorithm>
#include <map>

#include "permlat/cohomology.hpp"
#include "permlat/recognize.hpp"

namespace permlat {

namespace {

GroupPtr heisenberg27() {
    // triples (a,b,c) over F_3 with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')
    auto idx = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
    std::vector<std::vector<int>> table(27, std::vector<int>(27));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int a2 = 0; a2 < 3; ++a2)
                    for (int b2 = 0; b2 < 3; ++b2)
                        for (int c2 = 0; c2 < 3; ++c2)
                            table[idx(a, b, c)][idx(a2, b2, c2)] =
                                idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
    std::vector<std::string> names(27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                std::string s;
                auto app = [&](const std::string& t, int k) {
                    if (k == 0) return;
                    if (!s.empty()) s += "*";
                    s += t;
                    if (k > 1) s += "^" + std::to_string(k);
                };
                app("x", a);
                app("y", b);
                app("z", c);
                names[idx(a, b, c)] = s.empty() ? "e" : s;
            }
    return Group::from_table(3, std::move(table), std::move(names));
}

}  // namespace

GroupPtr fixture_group(const std::string& name) {
    static std::map<std::string, GroupPtr> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    GroupPtr g;
    if (name == "C2") {
        g = Group::from_generators(2, {{1, 0}}, {"a"});
    } else if (name == "C4") {
        g = Group::from_generators(2, {{1, 2, 3, 0}}, {"a"});
    } else if (name == "V4") {
        g = Group::from_generators(2, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {"a", "b"});
    } else if (name == "D8") {
        g = Group::from_generators(2, {{1, 2, 3, 0}, {0, 3, 2, 1}}, {"r", "s"});
    } else if (name == "Q8") {
        g = Group::from_generators(2, {{1, 2, 3, 0, 7, 4, 5, 6}, {4, 5, 6, 7, 2, 3, 0, 1}},
                                   {"i", "j"});
    } else if (name == "C3") {
        g = Group::from_generators(3, {{1, 2, 0}}, {"a"});
    } else if (name == "C9") {
        g = Group::from_generators(3, {{1, 2, 3, 4, 5, 6, 7, 8, 0}}, {"a"});
    } else if (name == "C3xC3") {
        g = Group::from_generators(3, {{1, 2, 0, 4, 5, 3, 7, 8, 6}, {3, 4, 5, 6, 7, 8, 0, 1, 2}},
                                   {"a", "b"});
    } else if (name == "E27") {
        g = heisenberg27();
    } else {
        throw value_error("unknown fixture group: " + name);
    }
    cache[name] = g;
    return g;
}

const std::vector<std::string>& fixture_group_names() {
    static const std::vector<std::string> names{"C2", "C4", "V4", "D8", "Q8",
                                                "C3", "C9", "C3xC3", "E27"};
    return names;
}

RandomPerm random_perm_lattice(GroupPtr g, const Ring& ring, uint64_t seed,
                               int max_mult, long max_rank) {
    Rng rng(seed);
    PermStructure st;
    long rank = 0;
    for (int rep : g->class_reps()) {
        int index = g->order() / g->subgroup(rep).order();
        int d = rng.below(max_mult + 1);
        while (d > 0 && rank + static_cast<long>(d) * index > max_rank) --d;
        if (d > 0) {
            st.mult[rep] = d;
            rank += static_cast<long>(d) * index;
        }
    }
    if (st.mult.empty()) st.mult[g->class_rep_of(g->whole_subgroup())] = 1;
    RandomPerm out;
    out.structure = st;
    out.lat = perm_module_from_structure(std::move(g), ring, st);
    return out;
}

Mat random_unimodular(const Ring& ring, int n, uint64_t seed) {
    Rng rng(seed);
    Mat q = Mat::identity(ring, n);
    if (n <= 1) return q;
    const int ops = 2 * n + 4;
    for (int k = 0; k < ops; ++k) {
        int i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        int c = static_cast<int>(rng.range(-2, 2));
        if (c == 0) c = 1;
        q.row_axpy(i, j, Int(c));
    }
    return q;
}

LatPtr random_basis_change(LatPtr u, uint64_t seed) {
    if (u->rank == 0) return u;
    Mat q = random_unimodular(u->ring, u->rank, seed);
    return conjugated(*u, q);
}

namespace {

// companion matrix of 1 + x + ... + x^(p-1), i.e. of the p-th cyclotomic
Mat cyclotomic_companion(const Ring& ring, long p) {
    const int n = static_cast<int>(p) - 1;
    Mat c(ring, n, n);
    for (int i = 0; i + 1 < n; ++i) c.at(i, i + 1) = 1;
    for (int j = 0; j < n; ++j) c.at(n - 1, j) = ring.reduce(Int(-1));
    return c;
}

Mat mat_pow(const Mat& m, int k) {
    Mat r = Mat::identity(m.ring(), m.rows());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

}  // namespace

LatPtr twist_lattice(GroupPtr g, int ker_sub, const Ring& ring) {
    const long p = g->p();
    PERMLAT_REQUIRE(g->subgroup(ker_sub).order() * p == g->order(),
                    "twist kernel must have index p");
    auto q = g->quotient_by(ker_sub);
    // discrete log in the order-p quotient
    std::vector<int> log_of(q.quotient->order(), -1);
    int gen = 1;  // any non-identity element generates
    int acc = q.quotient->identity();
    for (int t = 0; t < q.quotient->order(); ++t) {
        log_of[acc] = t;
        acc = q.quotient->mul(acc, gen);
    }
    Mat c = cyclotomic_companion(ring, p);
    std::vector<Mat> powers;
    for (int t = 0; t < static_cast<int>(p); ++t) powers.push_back(mat_pow(c, t));
    std::vector<Mat> action;
    for (int x = 0; x < g->order(); ++x) action.push_back(powers[log_of[q.projection[x]]]);
    return make_lattice(std::move(g), ring, std::move(action), std::nullopt, Validate::Sample);
}

LatPtr cyclotomic_lattice(GroupPtr g, int gen, int level, const Ring& ring) {
    const long p = g->p();
    PERMLAT_REQUIRE(level >= 1, "cyclotomic level must be >= 1");
    int n = static_cast<int>(pow_int(p, level)) - static_cast<int>(pow_int(p, level - 1));
    int period = static_cast<int>(pow_int(p, level));
    // companion of x^(p^level - p^(level-1)) + ... + x^(p^(level-1)) + 1
    Mat m(ring, n, n);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    for (int k = 0; k < static_cast<int>(p); ++k) {
        int col = k * static_cast<int>(pow_int(p, level - 1));
        if (col < n) m.at(n - 1, col) = ring.reduce(Int(-1));
    }
    // discrete log of the cyclic group on gen
    std::vector<int> log_of(g->order(), -1);
    int acc = g->identity();
    for (int t = 0; t < g->order(); ++t) {
        PERMLAT_REQUIRE(log_of[acc] < 0, "gen does not generate a cyclic group of full order");
        log_of[acc] = t;
        acc = g->mul(acc, gen);
    }
    PERMLAT_REQUIRE(g->order() % period == 0, "cyclotomic level exceeds the group");
    std::vector<Mat> action;
    for (int x = 0; x < g->order(); ++x) action.push_back(mat_pow(m, log_of[x] % period));
    return make_lattice(std::move(g), ring, std::move(action), std::nullopt, Validate::Sample);
}

WeissInstance weiss_instance(GroupPtr g, int n, const std::vector<int>& ks, uint64_t seed) {
    PERMLAT_REQUIRE(!ks.empty(), "instance needs at least one subgroup");
    Ring ring = Ring::integers(g->p());
    std::vector<LatPtr> parts;
    WeissInstance out;
    for (int k : ks) {
        std::vector<int> meet;
        std::set_intersection(g->subgroup(k).elems.begin(), g->subgroup(k).elems.end(),
                              g->subgroup(n).elems.begin(), g->subgroup(n).elems.end(),
                              std::back_inserter(meet));
        PERMLAT_REQUIRE(meet == std::vector<int>{g->identity()},
                        "subgroup meets n nontrivially: " + g->subgroup_label(k));
        parts.push_back(perm_lattice(g, k, ring));
        out.expected.mult[g->class_rep_of(k)] += 1;
    }
    LatPtr u = direct_sum(parts).sum;
    if (seed != 0) u = random_basis_change(u, seed);
    PERMLAT_ASSERT(is_free_over(*u, n).has_value(), "instance must be free over n");
    PERMLAT_ASSERT(recognize_permutation(fixed_sublattice(u, n).lat).is_permutation,
                   "fixed points of the instance must be a permutation lattice");
    return WeissInstance{u, out.expected};
}

std::vector<Counterexample> known_counterexamples(GroupPtr g, int n) {
    std::vector<Counterexample> out;
    Ring ring = Ring::integers(g->p());
    const long p = g->p();
    const bool n_trivial = g->subgroup(n).order() == 1;

    if (!n_trivial)
        out.push_back({trivial_lattice(g, ring, 1), "trivial-lattice", false, true});

    // rank p-1 twists: too small to restrict freely to a nontrivial n
    for (int rep : g->class_reps()) {
        if (g->subgroup(rep).order() * p != g->order()) continue;
        bool n_inside = g->subgroup_leq(n, rep);
        // n inside the kernel: u^n = u is a nontrivial twist; otherwise u^n = 0
        out.push_back({twist_lattice(g, rep, ring), "twist-" + g->subgroup_label(rep),
                       n_trivial, !n_trivial && !n_inside});
        if (static_cast<int>(out.size()) >= 4) break;
    }

    // split central factor: free over n with a twisted fixed-point module
    if (!n_trivial && g->subgroup(n).order() == p) {
        int comp = -1;
        for (int i = 0; i < g->subgroup_count() && comp < 0; ++i) {
            if (g->subgroup(i).order() * p != g->order()) continue;
            std::vector<int> meet;
            std::set_intersection(g->subgroup(i).elems.begin(), g->subgroup(i).elems.end(),
                                  g->subgroup(n).elems.begin(), g->subgroup(n).elems.end(),
                                  std::back_inserter(meet));
            if (meet == std::vector<int>{g->identity()} && g->subgroup(i).order() > 1) comp = i;
        }
        if (comp >= 0) {
            // G = n x H; regular on the n factor, cyclotomic twist through H
            auto hres = g->subgroup_as_group(comp);
            int hker = -1;
            for (int i = 0; i < hres.group->subgroup_count(); ++i)
                if (hres.group->subgroup(i).order() * p == hres.group->order()) {
                    hker = i;
                    break;
                }
            PERMLAT_ASSERT(hker >= 0, "nontrivial p-group has an index-p subgroup");
            LatPtr htwist = twist_lattice(hres.group, hker, ring);
            // discrete log on the n factor
            const auto& nelems = g->subgroup(n).elems;
            std::vector<int> npos(g->order(), -1);
            for (size_t i = 0; i < nelems.size(); ++i) npos[nelems[i]] = static_cast<int>(i);
            int zgen = nelems[1];
            std::vector<int> zlog(g->order(), -1);
            int acc = g->identity();
            for (int t = 0; t < static_cast<int>(p); ++t) {
                zlog[acc] = t;
                acc = g->mul(acc, zgen);
            }
            Mat shift(ring, static_cast<int>(p), static_cast<int>(p));
            for (int i = 0; i < static_cast<int>(p); ++i)
                shift.at(i, (i + 1) % static_cast<int>(p)) = 1;
            std::vector<Mat> action;
            bool ok = true;
            for (int x = 0; x < g->order() && ok; ++x) {
                // unique factorization x = z * h with z in n, h in the complement
                int found_h = -1, found_z = -1;
                for (int h : g->subgroup(comp).elems) {
                    int z = g->mul(x, g->inv(h));
                    if (zlog[z] >= 0) {
                        found_h = h;
                        found_z = z;
                        break;
                    }
                }
                if (found_h < 0) {
                    ok = false;
                    break;
                }
                action.push_back(Mat::kron(mat_pow(shift, zlog[found_z]),
                                           htwist->act(hres.into_sub[found_h])));
            }
            if (ok)
                out.push_back({make_lattice(g, ring, std::move(action), std::nullopt,
                                            Validate::Sample),
                               "split-twist", true, false});
        }
    }
    return out;
}

LatticeMap random_map_from_perm(LatPtr src, LatPtr tgt, uint64_t seed) {
    PERMLAT_REQUIRE(src->perm_tag.has_value(), "random map needs a tagged permutation source");
    Rng rng(seed);
    Mat f(src->ring, src->rank, tgt->rank);
    std::map<int, Mat> fixed_cache;
    for (const auto& orbit : src->perm_tag->orbits) {
        auto it = fixed_cache.find(orbit.sub);
        if (it == fixed_cache.end())
            it = fixed_cache.emplace(orbit.sub, fixed_points(*tgt, orbit.sub)).first;
        const Mat& b = it->second;
        std::vector<Int> w(tgt->rank, Int(0));
        for (int r = 0; r < b.rows(); ++r) {
            long c = rng.range(-2, 2);
            if (c == 0) continue;
            for (int j = 0; j < tgt->rank; ++j)
                w[j] = src->ring.reduce(w[j] + Int(c) * b.at(r, j));
        }
        for (size_t j = 0; j < orbit.transversal.size(); ++j)
            f.set_row(orbit.offset + static_cast<int>(j),
                      tgt->apply(w, orbit.transversal[j]));
    }
    return make_map(src, tgt, std::move(f));
}

LatPtr extension_by_cocycle(LatPtr a, LatPtr b, uint64_t seed) {
    PERMLAT_REQUIRE(a->group == b->group && a->ring == b->ring,
                    "extension parts must share group and ring");
    const Group& g = *a->group;
    LatPtr w = hom_lattice(*b, *a);
    CocycleSpace cs = cocycle_space(*w, g.whole_subgroup());
    std::vector<Int> params(static_cast<size_t>(cs.z_basis.cols()), Int(0));
    if (cs.z_basis.rows() > 0) {
        Rng rng(seed);
        for (int r = 0; r < cs.z_basis.rows(); ++r) {
            long c = rng.range(-2, 2);
            if (c == 0) continue;
            for (int j = 0; j < cs.z_basis.cols(); ++j)
                params[j] = a->ring.reduce(params[j] + Int(c) * cs.z_basis.at(r, j));
        }
    }
    std::vector<Mat> action;
    for (int x = 0; x < g.order(); ++x) {
        std::vector<Int> fv = cocycle_value(cs, params, x);
        Mat fx(a->ring, b->rank, a->rank);
        for (int i = 0; i < b->rank; ++i)
            for (int j = 0; j < a->rank; ++j)
                fx.at(i, j) = fv[static_cast<size_t>(i) * a->rank + j];
        Mat c = b->act(x) * fx;
        Mat m(a->ring, a->rank + b->rank, a->rank + b->rank);
        for (int i = 0; i < a->rank; ++i)
            for (int j = 0; j < a->rank; ++j) m.at(i, j) = a->act(x).at(i, j);
        for (int i = 0; i < b->rank; ++i) {
            for (int j = 0; j < a->rank; ++j) m.at(a->rank + i, j) = c.at(i, j);
            for (int j = 0; j < b->rank; ++j) m.at(a->rank + i, a->rank + j) = b->act(x).at(i, j);
        }
        action.push_back(std::move(m));
    }
    return make_lattice(a->group, a->ring, std::move(action), std::nullopt, Validate::Sample);
}

}  // namespace permlat
