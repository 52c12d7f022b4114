#include "permlat/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace permlat {

bool Subgroup::contains(int g) const {
    return std::binary_search(elems.begin(), elems.end(), g);
}

Perm perm_compose(const Perm& a, const Perm& b) {
    PERMLAT_ASSERT(a.size() == b.size(), "permutation degree mismatch");
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

namespace {

std::string render_word(const std::vector<int>& word, const std::vector<std::string>& names) {
    if (word.empty()) return "e";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < word.size()) {
        size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (!first) os << "*";
        os << names[word[i]];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

bool is_p_power(int n, long p) {
    while (n % p == 0) n /= static_cast<int>(p);
    return n == 1;
}

}  // namespace

GroupPtr Group::from_generators(long p, const std::vector<Perm>& gens,
                                std::vector<std::string> names, int order_cap) {
    PERMLAT_REQUIRE(is_prime(p), "p must be prime");
    size_t degree = 0;
    for (const auto& g : gens) degree = std::max(degree, g.size());
    if (degree == 0) degree = 1;
    std::vector<Perm> norm_gens;
    for (const auto& g : gens) {
        Perm q(degree);
        for (size_t i = 0; i < degree; ++i) q[i] = i < g.size() ? g[i] : static_cast<int>(i);
        std::vector<char> seen(degree, 0);
        for (int v : q) {
            PERMLAT_REQUIRE(v >= 0 && v < static_cast<int>(degree) && !seen[v],
                            "generator is not a permutation");
            seen[v] = 1;
        }
        norm_gens.push_back(std::move(q));
    }
    if (names.empty())
        for (size_t i = 0; i < norm_gens.size(); ++i)
            names.push_back(std::string(1, static_cast<char>('a' + (i % 26))));
    PERMLAT_REQUIRE(names.size() == norm_gens.size(), "generator name count mismatch");

    Perm id(degree);
    for (size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    std::vector<std::vector<int>> words{{}};
    for (size_t at = 0; at < elems.size(); ++at) {
        for (size_t s = 0; s < norm_gens.size(); ++s) {
            Perm y = perm_compose(elems[at], norm_gens[s]);
            if (index.count(y)) continue;
            PERMLAT_REQUIRE(static_cast<int>(elems.size()) < order_cap,
                            "generated group exceeds the order cap");
            index[y] = static_cast<int>(elems.size());
            elems.push_back(y);
            std::vector<int> w = words[at];
            w.push_back(static_cast<int>(s));
            words.push_back(std::move(w));
        }
    }
    const int n = static_cast<int>(elems.size());
    PERMLAT_REQUIRE(is_p_power(n, p), "generated group order is not a power of p");

    auto g = std::shared_ptr<Group>(new Group());
    g->p_ = p;
    g->order_ = n;
    g->table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g->table_[static_cast<size_t>(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));
    for (int i = 0; i < n; ++i) g->labels_.push_back(render_word(words[i], names));
    for (size_t s = 0; s < norm_gens.size(); ++s) {
        int idx = index.at(norm_gens[s]);
        if (idx != 0) g->generators_.push_back(idx);
    }
    g->finalize();
    return g;
}

GroupPtr Group::from_table(long p, std::vector<std::vector<int>> table,
                           std::vector<std::string> names) {
    PERMLAT_REQUIRE(is_prime(p), "p must be prime");
    const int n = static_cast<int>(table.size());
    PERMLAT_REQUIRE(n >= 1, "empty multiplication table");
    PERMLAT_REQUIRE(is_p_power(n, p), "group order is not a power of p");
    for (const auto& row : table) {
        PERMLAT_REQUIRE(static_cast<int>(row.size()) == n, "multiplication table not square");
        for (int v : row) PERMLAT_REQUIRE(v >= 0 && v < n, "table entry out of range");
    }
    for (int b = 0; b < n; ++b) {
        PERMLAT_REQUIRE(table[0][b] == b, "element 0 must be the identity");
        PERMLAT_REQUIRE(table[b][0] == b, "element 0 must be the identity");
    }
    // rows and columns are permutations
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen_r(n, 0), seen_c(n, 0);
        for (int b = 0; b < n; ++b) {
            PERMLAT_REQUIRE(!seen_r[table[a][b]], "row of the table is not a permutation");
            seen_r[table[a][b]] = 1;
            PERMLAT_REQUIRE(!seen_c[table[b][a]], "column of the table is not a permutation");
            seen_c[table[b][a]] = 1;
        }
    }
    // associativity: full check on small tables, sampled above
    auto mul = [&](int a, int b) { return table[a][b]; };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    PERMLAT_REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)),
                                    "multiplication table is not associative");
    } else {
        unsigned long long s = 0x9e3779b97f4a7c15ULL;
        auto next = [&]() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            return s;
        };
        for (int i = 0; i < 1000000; ++i) {
            int a = static_cast<int>(next() % n), b = static_cast<int>(next() % n),
                c = static_cast<int>(next() % n);
            PERMLAT_REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)),
                            "multiplication table is not associative (sampled)");
        }
    }
    // inverses
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b) found = mul(a, b) == 0 && mul(b, a) == 0;
        PERMLAT_REQUIRE(found, "element without a two-sided inverse");
    }

    auto g = std::shared_ptr<Group>(new Group());
    g->p_ = p;
    g->order_ = n;
    g->table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g->table_[static_cast<size_t>(a) * n + b] = table[a][b];
    if (names.empty()) {
        g->labels_.push_back("e");
        for (int i = 1; i < n; ++i) g->labels_.push_back("g" + std::to_string(i));
    } else {
        PERMLAT_REQUIRE(static_cast<int>(names.size()) == n, "element name count mismatch");
        g->labels_ = std::move(names);
    }
    g->finalize();
    return g;
}

int Group::pow(int g, int k) const {
    int r = 0;
    int base = k >= 0 ? g : inv(g);
    int m = k >= 0 ? k : -k;
    for (int i = 0; i < m; ++i) r = mul(r, base);
    return r;
}

std::vector<int> Group::closure(std::vector<int> elems) const {
    std::vector<char> in(order_, 0);
    std::vector<int> members;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
            return true;
        }
        return false;
    };
    add(0);
    for (int x : elems) add(x);
    for (size_t at = 0; at < members.size(); ++at)
        for (size_t b = 0; b < members.size(); ++b) {
            add(mul(members[at], members[b]));
            add(mul(members[b], members[at]));
        }
    std::sort(members.begin(), members.end());
    return members;
}

void Group::finalize() {
    inv_.assign(order_, 0);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == 0) inv_[a] = b;
    for (int z = 0; z < order_; ++z) {
        bool central = true;
        for (int g = 0; g < order_ && central; ++g) central = mul(z, g) == mul(g, z);
        if (central) center_.push_back(z);
    }

    // all subgroups, by repeated cyclic extension from the trivial subgroup
    std::set<std::vector<int>> found;
    std::deque<std::vector<int>> frontier;
    std::vector<int> triv{0};
    found.insert(triv);
    frontier.push_back(triv);
    while (!frontier.empty()) {
        std::vector<int> s = std::move(frontier.front());
        frontier.pop_front();
        for (int g = 1; g < order_; ++g) {
            if (std::binary_search(s.begin(), s.end(), g)) continue;
            std::vector<int> ext = s;
            ext.push_back(g);
            std::vector<int> t = closure(std::move(ext));
            if (found.insert(t).second) frontier.push_back(t);
        }
    }
    subgroups_.clear();
    for (const auto& s : found) subgroups_.push_back(Subgroup{s});
    std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elems < b.elems;
    });
    for (int i = 0; i < static_cast<int>(subgroups_.size()); ++i)
        subgroup_lookup_[subgroups_[i].elems] = i;

    // conjugacy classes of subgroups and normalizers
    const int ns = subgroup_count();
    class_rep_of_.assign(ns, -1);
    normalizer_.assign(ns, -1);
    for (int i = 0; i < ns; ++i) {
        if (class_rep_of_[i] >= 0) continue;
        std::set<int> orbit;
        for (int g = 0; g < order_; ++g) orbit.insert(conjugate_subgroup(i, g));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int j : cls) class_rep_of_[j] = cls.front();
        class_reps_.push_back(cls.front());
        classes_.push_back(cls);
    }
    for (int i = 0; i < ns; ++i) {
        std::vector<int> nelems;
        for (int g = 0; g < order_; ++g)
            if (conjugate_subgroup(i, g) == i) nelems.push_back(g);
        std::sort(nelems.begin(), nelems.end());
        auto it = subgroup_lookup_.find(nelems);
        PERMLAT_ASSERT(it != subgroup_lookup_.end(), "normalizer not in subgroup list");
        normalizer_[i] = it->second;
    }

    if (generators_.empty() && order_ > 1) generators_ = minimal_generators(whole_subgroup());
}

int Group::subgroup_index(const std::vector<int>& sorted_elems) const {
    auto it = subgroup_lookup_.find(sorted_elems);
    PERMLAT_REQUIRE(it != subgroup_lookup_.end(), "element set is not a subgroup of this group");
    return it->second;
}

bool Group::subgroup_leq(int small, int big) const {
    const auto& a = subgroups_[small].elems;
    const auto& b = subgroups_[big].elems;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int Group::conjugate_subgroup(int sub, int by) const {
    std::vector<int> elems;
    elems.reserve(subgroups_[sub].elems.size());
    for (int g : subgroups_[sub].elems) elems.push_back(conj(g, by));
    std::sort(elems.begin(), elems.end());
    auto it = subgroup_lookup_.find(elems);
    if (it != subgroup_lookup_.end()) return it->second;
    PERMLAT_ASSERT(false, "conjugate of a subgroup missing from the lattice");
    return -1;
}

std::string Group::subgroup_label(int sub) const {
    auto gens = minimal_generators(sub);
    if (gens.empty()) return "<e>";
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << labels_[gens[i]];
    os << ">";
    return os.str();
}

std::vector<int> Group::minimal_generators(int sub) const {
    const auto& elems = subgroups_[sub].elems;
    std::vector<int> gens;
    std::vector<int> cl{0};
    for (int g : elems) {
        if (std::binary_search(cl.begin(), cl.end(), g)) continue;
        gens.push_back(g);
        std::vector<int> ext = cl;
        ext.push_back(g);
        cl = closure(std::move(ext));
        if (static_cast<int>(cl.size()) == subgroups_[sub].order()) break;
    }
    return gens;
}

std::vector<int> Group::right_transversal(int sub) const {
    return right_transversal_in(sub, whole_subgroup());
}

std::vector<int> Group::right_transversal_in(int small, int big) const {
    PERMLAT_REQUIRE(subgroup_leq(small, big), "transversal needs small <= big");
    std::vector<char> seen(order_, 0);
    std::vector<int> reps;
    for (int g : subgroups_[big].elems) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (int h : subgroups_[small].elems) seen[mul(h, g)] = 1;
    }
    return reps;
}

std::vector<int> Group::double_coset_reps(int l, int h) const {
    std::vector<char> seen(order_, 0);
    std::vector<int> reps;
    for (int g = 0; g < order_; ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (int a : subgroups_[l].elems) {
            int ag = mul(a, g);
            for (int b : subgroups_[h].elems) seen[mul(ag, b)] = 1;
        }
    }
    return reps;
}

std::vector<int> Group::central_order_p_subgroups() const {
    std::set<int> out;
    for (int z : center_) {
        if (z == 0) continue;
        if (pow(z, static_cast<int>(p_)) != 0) continue;
        std::vector<int> elems = closure({z});
        if (static_cast<int>(elems.size()) == p_) out.insert(subgroup_lookup_.at(elems));
    }
    return {out.begin(), out.end()};
}

std::vector<int> Group::maximal_subgroups_of(int sub) const {
    std::vector<int> out;
    const int target = subgroups_[sub].order() / static_cast<int>(p_);
    for (int i = 0; i < subgroup_count(); ++i)
        if (subgroups_[i].order() == target && subgroup_leq(i, sub)) out.push_back(i);
    return out;
}

std::vector<int> Group::minimal_overgroups_of(int sub) const {
    std::vector<int> out;
    const int target = subgroups_[sub].order() * static_cast<int>(p_);
    for (int i = 0; i < subgroup_count(); ++i)
        if (subgroups_[i].order() == target && subgroup_leq(sub, i)) out.push_back(i);
    return out;
}

Group::QuotientResult Group::quotient_by(int normal_sub) const {
    PERMLAT_REQUIRE(is_normal(normal_sub), "quotient needs a normal subgroup");
    const auto& n = subgroups_[normal_sub].elems;
    std::vector<int> coset_of(order_, -1), reps;
    for (int g = 0; g < order_; ++g) {
        if (coset_of[g] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int h : n) coset_of[mul(h, g)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[a][b] = coset_of[mul(reps[a], reps[b])];
    std::vector<std::string> names;
    for (int r : reps) names.push_back(labels_[r]);
    QuotientResult out;
    out.quotient = from_table(p_, std::move(table), std::move(names));
    out.projection = std::move(coset_of);
    out.section = std::move(reps);
    return out;
}

Group::SubgroupGroupResult Group::subgroup_as_group(int sub) const {
    const auto& elems = subgroups_[sub].elems;
    const int m = static_cast<int>(elems.size());
    std::vector<int> into(order_, -1);
    for (int i = 0; i < m; ++i) into[elems[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[a][b] = into[mul(elems[a], elems[b])];
    std::vector<std::string> names;
    for (int g : elems) names.push_back(labels_[g]);
    SubgroupGroupResult out;
    out.group = from_table(p_, std::move(table), std::move(names));
    out.embed = elems;
    out.into_sub = std::move(into);
    return out;
}

}  // namespace permlat
