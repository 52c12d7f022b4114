#include <doctest.h>

#include <algorithm>
#include <set>

#include "permlat/fixtures.hpp"
#include "permlat/group.hpp"

using namespace permlat;

TEST_CASE("from_generators: basic groups") {
    auto c2 = Group::from_generators(2, {{1, 0}});
    CHECK(c2->order() == 2);

    auto d8 = fixture_group("D8");
    CHECK(d8->order() == 8);

    auto triv = Group::from_generators(2, {});
    CHECK(triv->order() == 1);

    CHECK_THROWS_AS(Group::from_generators(2, {{1, 2, 0}}), value_error);  // order 3, p = 2
    CHECK_THROWS_AS(Group::from_generators(2, {{1, 2, 3, 0}}, {}, 2), value_error);  // cap
}

TEST_CASE("subgroup counts") {
    CHECK(fixture_group("C4")->subgroup_count() == 3);
    CHECK(fixture_group("D8")->subgroup_count() == 10);
    CHECK(fixture_group("Q8")->subgroup_count() == 6);
    CHECK(fixture_group("E27")->subgroup_count() == 19);
}

TEST_CASE("subgroup enumeration matches brute-force subset closure for small groups") {
    for (const std::string& name : {"C2", "C4", "V4", "D8", "Q8"}) {
        auto g = fixture_group(name);
        const int n = g->order();
        std::set<std::vector<int>> brute;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (!(mask & 1u)) continue;  // must contain the identity
            std::vector<int> elems;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) elems.push_back(i);
            bool closed = true;
            for (int a : elems)
                for (int b : elems)
                    closed = closed && std::binary_search(elems.begin(), elems.end(), g->mul(a, b));
            if (closed) brute.insert(elems);
        }
        CHECK(static_cast<int>(brute.size()) == g->subgroup_count());
    }
}

TEST_CASE("conjugacy classes of subgroups") {
    CHECK(fixture_group("C4")->subgroup_classes().size() == 3);
    CHECK(fixture_group("D8")->subgroup_classes().size() == 8);
    CHECK(fixture_group("Q8")->subgroup_classes().size() == 6);

    for (const std::string& name : fixture_group_names()) {
        auto g = fixture_group(name);
        size_t total = 0;
        for (const auto& cls : g->subgroup_classes()) total += cls.size();
        CHECK(total == static_cast<size_t>(g->subgroup_count()));
        // |class of P| = [G : N_G(P)], and Lagrange with p-power order
        for (int i = 0; i < g->subgroup_count(); ++i) {
            int cls_size = 0;
            for (const auto& cls : g->subgroup_classes())
                if (std::find(cls.begin(), cls.end(), i) != cls.end())
                    cls_size = static_cast<int>(cls.size());
            CHECK(cls_size == g->order() / g->subgroup(g->normalizer_of(i)).order());
            CHECK(g->order() % g->subgroup(i).order() == 0);
        }
    }
}

TEST_CASE("normalizers") {
    auto d8 = fixture_group("D8");
    int whole = d8->whole_subgroup();
    CHECK(d8->normalizer_of(d8->trivial_subgroup()) == whole);
    // <s> has normalizer {e, s, r^2, r^2 s}, the klein group through the center
    int s = d8->generators()[1];
    int r2 = d8->mul(d8->generators()[0], d8->generators()[0]);
    int ssub = d8->subgroup_index(d8->closure({s}));
    const auto& nelems = d8->subgroup(d8->normalizer_of(ssub)).elems;
    CHECK(nelems.size() == 4);
    CHECK(std::binary_search(nelems.begin(), nelems.end(), r2));
    // normal subgroups have the whole group as normalizer
    int center = d8->subgroup_index(d8->closure({r2}));
    CHECK(d8->normalizer_of(center) == whole);
}

TEST_CASE("double cosets") {
    auto v4 = fixture_group("V4");
    int whole = v4->whole_subgroup(), triv = v4->trivial_subgroup();
    CHECK(v4->double_coset_reps(whole, whole) == std::vector<int>{0});
    CHECK(v4->double_coset_reps(triv, triv).size() == 4);
    int a = v4->subgroup_index({0, 1}), b = v4->subgroup_index({0, 2});
    CHECK(v4->double_coset_reps(a, b).size() == 1);

    // double cosets partition the group
    for (const std::string& name : {"D8", "Q8", "C9"}) {
        auto g = fixture_group(name);
        for (int l = 0; l < g->subgroup_count(); ++l)
            for (int h = 0; h < g->subgroup_count(); ++h) {
                std::vector<char> seen(g->order(), 0);
                int covered = 0;
                for (int rep : g->double_coset_reps(l, h))
                    for (int x : g->subgroup(l).elems)
                        for (int y : g->subgroup(h).elems) {
                            int z = g->mul(g->mul(x, rep), y);
                            if (!seen[z]) {
                                seen[z] = 1;
                                ++covered;
                            }
                        }
                CHECK(covered == g->order());
            }
    }
}

TEST_CASE("quotient groups") {
    auto c4 = fixture_group("C4");
    auto q1 = c4->quotient_by(c4->whole_subgroup());
    CHECK(q1.quotient->order() == 1);
    auto q2 = c4->quotient_by(c4->trivial_subgroup());
    CHECK(q2.quotient->order() == 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(q2.quotient->mul(a, b) == c4->mul(a, b));
    int z = c4->subgroup_index({0, c4->mul(1, 1)});
    auto q3 = c4->quotient_by(z);
    CHECK(q3.quotient->order() == 2);
    // projection is a homomorphism
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(q3.projection[c4->mul(a, b)] ==
                  q3.quotient->mul(q3.projection[a], q3.projection[b]));
}

TEST_CASE("central order-p subgroups") {
    CHECK(fixture_group("C2")->central_order_p_subgroups().size() == 1);
    CHECK(fixture_group("V4")->central_order_p_subgroups().size() == 3);
    auto d8 = fixture_group("D8");
    auto cz = d8->central_order_p_subgroups();
    REQUIRE(cz.size() == 1);
    int r2 = d8->mul(d8->generators()[0], d8->generators()[0]);
    CHECK(d8->subgroup(cz[0]).elems == std::vector<int>{0, r2});
    CHECK(fixture_group("C3xC3")->central_order_p_subgroups().size() == 4);
    CHECK(fixture_group("E27")->central_order_p_subgroups().size() == 1);
}

TEST_CASE("from_table validation") {
    CHECK_THROWS_AS(Group::from_table(2, {{0, 1}, {1, 1}}), value_error);  // not a permutation row
    CHECK_THROWS_AS(Group::from_table(2, {{1, 0}, {0, 1}}), value_error);  // identity not element 0
    CHECK_THROWS_AS(Group::from_table(2, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}), value_error);  // p
    auto c2 = Group::from_table(2, {{0, 1}, {1, 0}});
    CHECK(c2->order() == 2);
}

TEST_CASE("transversals are canonical") {
    auto d8 = fixture_group("D8");
    for (int sub = 0; sub < d8->subgroup_count(); ++sub) {
        auto trans = d8->right_transversal(sub);
        CHECK(static_cast<int>(trans.size()) * d8->subgroup(sub).order() == d8->order());
        CHECK(trans.front() == 0);
        CHECK(std::is_sorted(trans.begin(), trans.end()));
    }
}
