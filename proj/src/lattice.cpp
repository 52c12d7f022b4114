#include "permlat/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace permlat {

long PermStructure::total_rank(const Group& g) const {
    long r = 0;
    for (const auto& [sub, d] : mult) r += static_cast<long>(d) * (g.order() / g.subgroup(sub).order());
    return r;
}

std::string PermStructure::to_string(const Group& g) const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [sub, d] : mult) {
        if (d == 0) continue;
        os << (first ? "" : ", ") << g.subgroup_label(sub) << ": " << d;
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

void validate_action(const Group& g, const std::vector<Mat>& action, int rank,
                     Validate level) {
    PERMLAT_REQUIRE(static_cast<int>(action.size()) == g.order(),
                    "action table must have one matrix per group element");
    for (const auto& m : action)
        PERMLAT_REQUIRE(m.rows() == rank && m.cols() == rank, "action matrix shape mismatch");
    PERMLAT_REQUIRE(action[g.identity()].is_identity(), "identity must act as the identity");
    if (level == Validate::None || rank == 0) return;
    if (level == Validate::Full) {
        for (int x = 0; x < g.order(); ++x)
            for (int s : g.generators())
                PERMLAT_REQUIRE(action[x] * action[s] == action[g.mul(x, s)],
                                "action is not a homomorphism");
        return;
    }
    // sampled check, budgeted by the cost of a matrix product
    long ops = static_cast<long>(rank) * rank * rank;
    int samples = std::max<long>(2, 30000000 / std::max<long>(ops, 1));
    samples = std::min<long>(samples, static_cast<long>(g.order()) * g.order());
    unsigned long long s = 0x853c49e6748fea9bULL;
    auto next = [&]() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    };
    for (int i = 0; i < samples; ++i) {
        int x = static_cast<int>(next() % g.order());
        int y = static_cast<int>(next() % g.order());
        PERMLAT_ASSERT(action[x] * action[y] == action[g.mul(x, y)],
                       "action is not a homomorphism (sampled)");
    }
}

}  // namespace

LatPtr make_lattice(GroupPtr g, const Ring& ring, std::vector<Mat> action,
                    std::optional<PermTag> tag, Validate level) {
    PERMLAT_REQUIRE(g != nullptr, "lattice needs a group");
    int rank = action.empty() ? 0 : action.front().rows();
    if (action.empty())
        for (int i = 0; i < g->order(); ++i) action.push_back(Mat::identity(ring, 0));
    for (auto& m : action) PERMLAT_REQUIRE(m.ring() == ring, "action ring mismatch");
    validate_action(*g, action, rank, level);
    auto lat = std::make_shared<Lattice>();
    lat->group = std::move(g);
    lat->ring = ring;
    lat->rank = rank;
    lat->action = std::move(action);
    lat->perm_tag = std::move(tag);
    return lat;
}

LatPtr lattice_from_generator_action(GroupPtr g, const Ring& ring,
                                     const std::map<int, Mat>& gen_action,
                                     Validate level) {
    const int n = g->order();
    int rank = -1;
    for (const auto& [elem, m] : gen_action) {
        PERMLAT_REQUIRE(elem >= 0 && elem < n, "generator index out of range");
        PERMLAT_REQUIRE(m.rows() == m.cols(), "generator action must be square");
        PERMLAT_REQUIRE(rank < 0 || m.rows() == rank, "generator action rank mismatch");
        rank = m.rows();
    }
    PERMLAT_REQUIRE(rank >= 0, "no generator actions given");
    std::vector<Mat> action(n, Mat());
    std::vector<char> known(n, 0);
    action[g->identity()] = Mat::identity(ring, rank);
    known[g->identity()] = 1;
    std::vector<int> queue{g->identity()};
    std::vector<int> gens;
    for (const auto& [elem, m] : gen_action) {
        gens.push_back(elem);
        if (!known[elem]) {
            action[elem] = m;
            known[elem] = 1;
            queue.push_back(elem);
        }
    }
    for (size_t at = 0; at < queue.size(); ++at) {
        int x = queue[at];
        for (int s : gens) {
            int y = g->mul(x, s);
            if (known[y]) continue;
            action[y] = action[x] * gen_action.at(s);
            known[y] = 1;
            queue.push_back(y);
        }
    }
    for (int i = 0; i < n; ++i)
        PERMLAT_REQUIRE(known[i], "given elements do not generate the group");
    return make_lattice(std::move(g), ring, std::move(action), std::nullopt, level);
}

LatticeMap make_map(LatPtr src, LatPtr tgt, Mat f) {
    PERMLAT_REQUIRE(src && tgt, "map needs lattices");
    PERMLAT_REQUIRE(src->group == tgt->group || src->group->order() == tgt->group->order(),
                    "map endpoints must share the group");
    PERMLAT_REQUIRE(src->ring == tgt->ring, "map endpoints must share the ring");
    PERMLAT_REQUIRE(f.rows() == src->rank && f.cols() == tgt->rank, "map matrix shape");
    f.canonicalize();
    for (int s : src->group->generators())
        PERMLAT_REQUIRE(src->act(s) * f == f * tgt->act(s), "map is not equivariant");
    return LatticeMap{std::move(src), std::move(tgt), std::move(f)};
}

LatticeMap identity_map(LatPtr u) {
    Mat f = Mat::identity(u->ring, u->rank);
    return LatticeMap{u, u, std::move(f)};
}

LatticeMap compose(const LatticeMap& a, const LatticeMap& b) {
    PERMLAT_REQUIRE(a.tgt == b.src || a.tgt->rank == b.src->rank, "composition mismatch");
    return LatticeMap{a.src, b.tgt, a.f * b.f};
}

// --- characters -------------------------------------------------------------

const Int& Character::value_at(const Group& g, int elem) const {
    const auto& elems = g.subgroup(sub).elems;
    auto it = std::lower_bound(elems.begin(), elems.end(), elem);
    PERMLAT_REQUIRE(it != elems.end() && *it == elem, "element outside the character's subgroup");
    return values[static_cast<size_t>(it - elems.begin())];
}

bool Character::is_trivial() const {
    for (const auto& v : values)
        if (v != 1) return false;
    return true;
}

std::string Character::to_string(const Group& g) const {
    std::ostringstream os;
    os << "chi" << g.subgroup_label(sub) << "[";
    for (size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << "]";
    return os.str();
}

Character trivial_character(const Group& g, int sub, const Ring&) {
    Character c;
    c.sub = sub;
    c.values.assign(g.subgroup(sub).elems.size(), Int(1));
    return c;
}

std::vector<Character> enumerate_characters(const Group& g, int sub, const Ring& ring) {
    // unit values of p-power multiplicative order
    std::vector<Int> units{Int(1)};
    if (ring.is_integers()) {
        if (ring.p == 2) units.push_back(Int(-1));
    } else {
        Int order = pow_int(ring.p, ring.e - 1);
        for (Int u = 2; u < ring.modulus; ++u) {
            if (u % ring.p == 0) continue;
            Int x = 1;
            for (Int i = 0; i < order; ++i) x = ring.reduce(x * u);
            if (x == 1) units.push_back(u);
        }
    }
    const auto& elems = g.subgroup(sub).elems;
    const int m = static_cast<int>(elems.size());
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    std::vector<int> gens = g.minimal_generators(sub);

    std::set<std::vector<Int>> seen;
    std::vector<Character> out;
    std::vector<size_t> choice(gens.size(), 0);
    while (true) {
        std::vector<Int> vals(m, Int(0));
        vals[pos[g.identity()]] = 1;
        std::vector<int> queue{g.identity()};
        for (size_t at = 0; at < queue.size(); ++at)
            for (size_t s = 0; s < gens.size(); ++s) {
                int y = g.mul(queue[at], gens[s]);
                if (vals[pos[y]] != 0) continue;
                vals[pos[y]] = ring.reduce(vals[pos[queue[at]]] * units[choice[s]]);
                queue.push_back(y);
            }
        bool ok = static_cast<int>(queue.size()) == m;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b)
                ok = ring.reduce(vals[a] * vals[b] - vals[pos[g.mul(elems[a], elems[b])]]) == 0;
        if (ok && seen.insert(vals).second) {
            Character c;
            c.sub = sub;
            c.values = vals;
            out.push_back(std::move(c));
        }
        size_t k = 0;
        while (k < choice.size() && ++choice[k] == units.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Character& a, const Character& b) { return a.values < b.values; });
    // trivial character first
    std::stable_partition(out.begin(), out.end(),
                          [](const Character& c) { return c.is_trivial(); });
    return out;
}

// --- constructions ----------------------------------------------------------

LatPtr perm_lattice(GroupPtr g, int sub, const Ring& ring) {
    std::vector<int> trans = g->right_transversal(sub);
    const int m = static_cast<int>(trans.size());
    std::vector<int> coset_of(g->order(), -1);
    for (int j = 0; j < m; ++j)
        for (int h : g->subgroup(sub).elems) coset_of[g->mul(h, trans[j])] = j;
    std::vector<Mat> action;
    action.reserve(g->order());
    for (int x = 0; x < g->order(); ++x) {
        Mat a(ring, m, m);
        for (int j = 0; j < m; ++j) a.at(j, coset_of[g->mul(trans[j], x)]) = 1;
        action.push_back(std::move(a));
    }
    PermTag tag;
    tag.structure.mult[g->class_rep_of(sub)] = 1;
    tag.orbits.push_back(PermOrbit{sub, 0, trans});
    return make_lattice(std::move(g), ring, std::move(action), std::move(tag), Validate::None);
}

LatPtr trivial_lattice(GroupPtr g, const Ring& ring, int rank) {
    std::vector<Mat> action(g->order(), Mat::identity(ring, rank));
    std::optional<PermTag> tag;
    if (rank == 0) {
        tag = PermTag{};
    } else if (rank >= 1) {
        PermTag t;
        int whole = g->whole_subgroup();
        t.structure.mult[g->class_rep_of(whole)] = rank;
        for (int i = 0; i < rank; ++i) t.orbits.push_back(PermOrbit{whole, i, {g->identity()}});
        tag = std::move(t);
    }
    return make_lattice(std::move(g), ring, std::move(action), std::move(tag), Validate::None);
}

RestrictResult character_lattice(GroupPtr g, const Character& chi, const Ring& ring) {
    auto sg = g->subgroup_as_group(chi.sub);
    std::vector<Mat> action;
    for (int dnew = 0; dnew < sg.group->order(); ++dnew) {
        Mat m(ring, 1, 1);
        m.at(0, 0) = ring.reduce(chi.value_at(*g, sg.embed[dnew]));
        action.push_back(std::move(m));
    }
    RestrictResult out;
    out.sub_group = sg.group;
    out.embed = sg.embed;
    out.lat = make_lattice(sg.group, ring, std::move(action), std::nullopt, Validate::Sample);
    return out;
}

LatPtr perm_module_from_structure(GroupPtr g, const Ring& ring, const PermStructure& st) {
    std::vector<LatPtr> parts;
    for (const auto& [sub, d] : st.mult)
        for (int i = 0; i < d; ++i) parts.push_back(perm_lattice(g, sub, ring));
    if (parts.empty()) return trivial_lattice(g, ring, 0);
    return direct_sum(parts).sum;
}

DirectSum direct_sum(const std::vector<LatPtr>& parts) {
    PERMLAT_REQUIRE(!parts.empty(), "direct sum needs at least one part (use rank 0)");
    GroupPtr g = parts.front()->group;
    Ring ring = parts.front()->ring;
    int rank = 0;
    bool all_tagged = true;
    for (const auto& p : parts) {
        PERMLAT_REQUIRE(p->group == g, "direct sum parts must share the group");
        PERMLAT_REQUIRE(p->ring == ring, "direct sum parts must share the ring");
        rank += p->rank;
        all_tagged = all_tagged && p->perm_tag.has_value();
    }
    std::vector<Mat> action;
    for (int x = 0; x < g->order(); ++x) {
        std::vector<Mat> blocks;
        for (const auto& p : parts) blocks.push_back(p->act(x));
        action.push_back(Mat::block_diag(blocks, ring));
    }
    std::optional<PermTag> tag;
    if (all_tagged) {
        PermTag t;
        int off = 0;
        for (const auto& p : parts) {
            for (const auto& [sub, d] : p->perm_tag->structure.mult) t.structure.mult[sub] += d;
            for (const auto& orb : p->perm_tag->orbits)
                t.orbits.push_back(PermOrbit{orb.sub, orb.offset + off, orb.transversal});
            off += p->rank;
        }
        tag = std::move(t);
    }
    DirectSum out;
    out.sum = make_lattice(g, ring, std::move(action), std::move(tag), Validate::None);
    int off = 0;
    for (const auto& p : parts) {
        Mat inc(ring, p->rank, rank), proj(ring, rank, p->rank);
        for (int i = 0; i < p->rank; ++i) {
            inc.at(i, off + i) = 1;
            proj.at(off + i, i) = 1;
        }
        out.inclusions.push_back(LatticeMap{p, out.sum, std::move(inc)});
        out.projections.push_back(LatticeMap{out.sum, p, std::move(proj)});
        off += p->rank;
    }
    return out;
}

RestrictResult restrict_to(const Lattice& u, int sub) {
    auto sg = u.group->subgroup_as_group(sub);
    std::vector<Mat> action;
    action.reserve(sg.embed.size());
    for (int e : sg.embed) action.push_back(u.act(e));
    RestrictResult out;
    out.sub_group = sg.group;
    out.embed = sg.embed;
    out.lat = make_lattice(sg.group, u.ring, std::move(action), std::nullopt, Validate::None);
    return out;
}

LatPtr induce(const Lattice& v, GroupPtr big, const std::vector<int>& embed) {
    PERMLAT_REQUIRE(static_cast<int>(embed.size()) == v.group->order(),
                    "embedding must cover the small group");
    std::vector<int> helems(embed);
    std::sort(helems.begin(), helems.end());
    int hsub = big->subgroup_index(helems);
    std::vector<int> embed_inv(big->order(), -1);
    for (int i = 0; i < v.group->order(); ++i) embed_inv[embed[i]] = i;
    // consistency of the embedding with both tables
    for (int a = 0; a < v.group->order(); ++a)
        for (int b = 0; b < v.group->order(); ++b)
            PERMLAT_REQUIRE(big->mul(embed[a], embed[b]) == embed[v.group->mul(a, b)],
                            "embedding is not a homomorphism");
    std::vector<int> trans = big->right_transversal(hsub);
    const int m = static_cast<int>(trans.size());
    std::vector<int> coset_of(big->order(), -1);
    for (int j = 0; j < m; ++j)
        for (int h : big->subgroup(hsub).elems) coset_of[big->mul(h, trans[j])] = j;
    const int r = v.rank;
    std::vector<Mat> action;
    for (int x = 0; x < big->order(); ++x) {
        Mat a(v.ring, m * r, m * r);
        for (int j = 0; j < m; ++j) {
            int u = big->mul(trans[j], x);
            int j2 = coset_of[u];
            int h = big->mul(u, big->inv(trans[j2]));
            const Mat& vh = v.act(embed_inv[h]);
            for (int p = 0; p < r; ++p)
                for (int q = 0; q < r; ++q) a.at(j * r + p, j2 * r + q) = vh.at(p, q);
        }
        action.push_back(std::move(a));
    }
    return make_lattice(big, v.ring, std::move(action), std::nullopt, Validate::Sample);
}

LatPtr conjugated(const Lattice& u, const Mat& q) {
    auto qinv = matrix_inverse(q);
    PERMLAT_REQUIRE(qinv.has_value(), "basis change must be invertible over the ring");
    std::vector<Mat> action;
    action.reserve(u.action.size());
    for (const auto& a : u.action) action.push_back(q * a * *qinv);
    return make_lattice(u.group, u.ring, std::move(action), std::nullopt, Validate::None);
}

// --- functors ----------------------------------------------------------------

Mat fixed_points(const Lattice& u, int sub) {
    std::vector<int> gens = u.group->minimal_generators(sub);
    if (gens.empty()) return Mat::identity(u.ring, u.rank);
    std::vector<Mat> blocks;
    Mat id = Mat::identity(u.ring, u.rank);
    for (int s : gens) blocks.push_back(u.act(s) - id);
    Mat stacked = blocks.front();
    for (size_t i = 1; i < blocks.size(); ++i) stacked = Mat::hstack(stacked, blocks[i]);
    return kernel(stacked);
}

Mat twisted_fixed_points(const Lattice& u, const Character& chi) {
    std::vector<int> gens = u.group->minimal_generators(chi.sub);
    if (gens.empty()) return Mat::identity(u.ring, u.rank);
    std::vector<Mat> blocks;
    Mat id = Mat::identity(u.ring, u.rank);
    for (int s : gens)
        blocks.push_back(u.act(s) - id.scaled(chi.value_at(*u.group, s)));
    Mat stacked = blocks.front();
    for (size_t i = 1; i < blocks.size(); ++i) stacked = Mat::hstack(stacked, blocks[i]);
    return kernel(stacked);
}

TraceMapResult trace_map(const Lattice& u, int q, int p) {
    PERMLAT_REQUIRE(u.group->subgroup_leq(q, p), "trace needs q <= p");
    TraceMapResult out;
    out.basis_src = fixed_points(u, q);
    out.basis_tgt = fixed_points(u, p);
    Mat sum(u.ring, u.rank, u.rank);
    for (int t : u.group->right_transversal_in(q, p)) sum = sum + u.act(t);
    Mat image = out.basis_src * sum;
    auto coords = EchelonSolver(out.basis_tgt).solve_mat(image);
    PERMLAT_ASSERT(coords.has_value(), "trace image must land in the fixed points");
    out.matrix = *coords;
    return out;
}

LatticeMap sigma_mult(LatPtr u, int n) {
    PERMLAT_REQUIRE(u->group->is_normal(n), "sigma needs a normal subgroup");
    Mat sum(u->ring, u->rank, u->rank);
    for (int g : u->group->subgroup(n).elems) sum = sum + u->act(g);
    return make_map(u, u, std::move(sum));
}

LatPtr reduce_mod(const Lattice& u, int f) {
    PERMLAT_REQUIRE(f >= 1, "reduction exponent must be >= 1");
    if (u.ring.is_truncated())
        PERMLAT_REQUIRE(f <= u.ring.e, "cannot refine a truncated lattice");
    Ring target = Ring::truncated(u.ring.p, f);
    std::vector<Mat> action;
    action.reserve(u.action.size());
    for (const auto& a : u.action) action.push_back(a.reduced_into(target));
    return make_lattice(u.group, target, std::move(action), u.perm_tag, Validate::None);
}

LatticeMap reduce_map_mod(const LatticeMap& f, int e) {
    LatPtr src = reduce_mod(*f.src, e);
    LatPtr tgt = reduce_mod(*f.tgt, e);
    Ring target = Ring::truncated(f.src->ring.p, e);
    return LatticeMap{src, tgt, f.f.reduced_into(target)};
}

std::optional<FreeOverResult> is_free_over(const Lattice& u, int n) {
    const auto& elems = u.group->subgroup(n).elems;
    const int m = static_cast<int>(elems.size());
    if (u.rank % m != 0) return std::nullopt;
    const int d_expected = u.rank / m;
    if (u.rank == 0) return FreeOverResult{0, Mat(u.ring, 0, 0)};
    // head of u over the local ring R[n]: quotient by (p, augmentation ideal)
    std::vector<Mat> blocks;
    Mat id = Mat::identity(u.ring, u.rank);
    for (int g : elems)
        if (g != u.group->identity()) blocks.push_back(u.act(g) - id);
    Mat aug = blocks.empty() ? Mat(u.ring, 0, u.rank)
                             : Mat::vstack_all(blocks, u.ring, u.rank);
    RrefModP head = rref_mod_p(aug);
    if (static_cast<int>(head.nonpivot_cols.size()) != d_expected) return std::nullopt;
    // lift a head basis and try the Nakayama candidate map R[n]^d -> u
    Mat basis(u.ring, d_expected, u.rank);
    for (int i = 0; i < d_expected; ++i) basis.at(i, head.nonpivot_cols[i]) = 1;
    Mat phi(u.ring, d_expected * m, u.rank);
    for (int i = 0; i < d_expected; ++i) {
        std::vector<Int> base = basis.row_vec(i);
        for (int j = 0; j < m; ++j) phi.set_row(i * m + j, u.apply(base, elems[j]));
    }
    if (kernel(phi).rows() != 0) return std::nullopt;
    Presentation coker = cokernel_presentation(phi);
    if (coker.free_rank != 0 || !coker.p_exponents.empty()) return std::nullopt;
    return FreeOverResult{d_expected, std::move(basis)};
}

Mat map_kernel(const LatticeMap& f) { return kernel(f.f); }

Presentation map_cokernel(const LatticeMap& f) { return cokernel_presentation(f.f); }

bool is_injective(const LatticeMap& f) { return map_kernel(f).rows() == 0; }

bool is_surjective_p_locally(const LatticeMap& f) {
    Presentation pr = map_cokernel(f);
    return pr.free_rank == 0 && pr.p_exponents.empty();
}

MackeyResult mackey_decompose(const Lattice& v, GroupPtr big,
                              const std::vector<int>& embed, int lsub) {
    std::vector<int> helems(embed);
    std::sort(helems.begin(), helems.end());
    const int hsub = big->subgroup_index(helems);
    std::vector<int> embed_inv(big->order(), -1);
    for (int i = 0; i < v.group->order(); ++i) embed_inv[embed[i]] = i;

    LatPtr ind = induce(v, big, embed);
    auto lres = big->subgroup_as_group(lsub);
    std::vector<Mat> taction;
    for (int dnew = 0; dnew < lres.group->order(); ++dnew)
        taction.push_back(ind->act(lres.embed[dnew]));
    LatPtr target = make_lattice(lres.group, v.ring, std::move(taction),
                                 std::nullopt, Validate::None);

    std::vector<int> htrans = big->right_transversal(hsub);
    std::vector<int> hcoset_of(big->order(), -1);
    for (size_t j = 0; j < htrans.size(); ++j)
        for (int h : big->subgroup(hsub).elems)
            hcoset_of[big->mul(h, htrans[j])] = static_cast<int>(j);

    MackeyResult out;
    const int r = v.rank;
    std::vector<LatPtr> parts;
    std::vector<Mat> blocks;  // per component: rows into target coords
    for (int rep : big->double_coset_reps(hsub, lsub)) {
        // D = rep^-1 H rep cap L, twisted module over D, induced to L
        std::vector<int> delems_big;
        for (int x : big->subgroup(lsub).elems)
            if (big->subgroup(hsub).contains(big->mul(big->mul(rep, x), big->inv(rep))))
                delems_big.push_back(x);
        std::sort(delems_big.begin(), delems_big.end());
        int dsub_big = big->subgroup_index(delems_big);
        std::vector<int> delems_l;
        for (int x : delems_big) delems_l.push_back(lres.into_sub[x]);
        std::sort(delems_l.begin(), delems_l.end());
        int dsub_l = lres.group->subgroup_index(delems_l);
        auto dres = lres.group->subgroup_as_group(dsub_l);
        std::vector<Mat> daction;
        for (int dnew = 0; dnew < dres.group->order(); ++dnew) {
            int x_big = lres.embed[dres.embed[dnew]];
            int h_big = big->mul(big->mul(rep, x_big), big->inv(rep));
            daction.push_back(v.act(embed_inv[h_big]));
        }
        LatPtr twisted = make_lattice(dres.group, v.ring, std::move(daction),
                                      std::nullopt, Validate::Sample);
        std::vector<int> d_to_l;
        for (int dnew = 0; dnew < dres.group->order(); ++dnew)
            d_to_l.push_back(dres.embed[dnew]);
        LatPtr comp = induce(*twisted, lres.group, d_to_l);
        out.components.push_back(MackeyComponent{rep, dsub_big, comp});
        parts.push_back(comp);

        // block of the isomorphism: component basis (m,a) -> (j(m), b)
        std::vector<int> strans_l = lres.group->right_transversal_in(dsub_l,
                                                                     lres.group->whole_subgroup());
        Mat block(v.ring, comp->rank, target->rank);
        for (size_t mi = 0; mi < strans_l.size(); ++mi) {
            int s_big = lres.embed[strans_l[mi]];
            int gs = big->mul(rep, s_big);
            int j = hcoset_of[gs];
            int h = big->mul(gs, big->inv(htrans[j]));
            const Mat& vh = v.act(embed_inv[h]);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    block.at(static_cast<int>(mi) * r + a, j * r + b) = vh.at(a, b);
        }
        blocks.push_back(std::move(block));
    }
    DirectSum ds = direct_sum(parts);
    out.sum = ds.sum;
    out.target = target;
    Mat iso(v.ring, out.sum->rank, target->rank);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) iso.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    out.iso = make_map(out.sum, target, std::move(iso));
    PERMLAT_ASSERT(matrix_inverse(out.iso.f).has_value(),
                   "mackey comparison map must be invertible");
    return out;
}

FixedSublattice fixed_sublattice(LatPtr u, int sub) {
    PERMLAT_REQUIRE(u->group->is_normal(sub), "fixed sublattice needs a normal subgroup");
    Mat basis = fixed_points(*u, sub);
    EchelonSolver solver(basis);
    std::vector<Mat> action;
    for (int x = 0; x < u->group->order(); ++x) {
        auto coords = solver.solve_mat(basis * u->act(x));
        PERMLAT_ASSERT(coords.has_value(), "fixed points must be stable under the ambient group");
        action.push_back(std::move(*coords));
    }
    FixedSublattice out;
    out.basis = basis;
    out.lat = make_lattice(u->group, u->ring, std::move(action), std::nullopt, Validate::None);
    return out;
}

QuotientLattice quotient_by_pure(LatPtr u, const Mat& sub_basis) {
    PERMLAT_REQUIRE(u->ring.is_integers(), "lattice quotients need integers mode");
    SmithTransforms st = smith_with_transforms(sub_basis);
    for (int i = 0; i < st.rank; ++i)
        PERMLAT_REQUIRE(st.d.at(i, i) == 1, "submodule is not pure in the ambient lattice");
    const int n = u->rank, k = st.rank;
    Mat proj = st.v.cols_slice(k, n);            // n x (n-k)
    Mat section = st.v_inv.submatrix(k, n, 0, n);  // (n-k) x n
    std::vector<Mat> action;
    for (int x = 0; x < u->group->order(); ++x) action.push_back(section * u->act(x) * proj);
    QuotientLattice out;
    out.q = make_lattice(u->group, u->ring, std::move(action), std::nullopt, Validate::None);
    out.proj = make_map(u, out.q, proj);
    out.section = std::move(section);
    return out;
}

LatPtr hom_lattice(const Lattice& b, const Lattice& a) {
    PERMLAT_REQUIRE(b.group == a.group && b.ring == a.ring, "hom lattice needs a common group");
    std::vector<Mat> action;
    for (int x = 0; x < b.group->order(); ++x)
        action.push_back(Mat::kron(b.act(b.group->inv(x)).transposed(), a.act(x)));
    return make_lattice(b.group, b.ring, std::move(action), std::nullopt, Validate::None);
}

Mat equivariant_hom_basis(const Lattice& a, const Lattice& b) {
    PERMLAT_REQUIRE(a.group == b.group && a.ring == b.ring, "hom basis needs a common group");
    const int ra = a.rank, rb = b.rank;
    std::vector<int> gens = a.group->generators();
    if (gens.empty() || ra == 0 || rb == 0) return Mat::identity(a.ring, ra * rb);
    std::vector<Mat> blocks;
    for (int s : gens) {
        Mat lhs = Mat::kron(a.act(s).transposed(), Mat::identity(a.ring, rb));
        Mat rhs = Mat::kron(Mat::identity(a.ring, ra), b.act(s));
        blocks.push_back(lhs - rhs);
    }
    Mat stacked = blocks.front();
    for (size_t i = 1; i < blocks.size(); ++i) stacked = Mat::hstack(stacked, blocks[i]);
    return kernel(stacked);
}

LatticeMap map_from_vec(LatPtr a, LatPtr b, const std::vector<Int>& v) {
    PERMLAT_REQUIRE(static_cast<int>(v.size()) == a->rank * b->rank, "hom vector length");
    Mat f(a->ring, a->rank, b->rank);
    for (int i = 0; i < a->rank; ++i)
        for (int j = 0; j < b->rank; ++j) f.at(i, j) = v[static_cast<size_t>(i) * b->rank + j];
    f.canonicalize();
    return make_map(std::move(a), std::move(b), std::move(f));
}

std::optional<Mat> matrix_inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    return solve(m, Mat::identity(m.ring(), m.rows()));
}

}  // namespace permlat
