#include <doctest.h>

#include "permlat/fixtures.hpp"
#include "permlat/recognize.hpp"

using namespace permlat;

namespace {
const Ring Z2 = Ring::integers(2);
const Ring Z3 = Ring::integers(3);
}

TEST_CASE("head_dim: frozen examples") {
    auto c2 = fixture_group("C2");
    // zero module
    CHECK(head_dim(double_quotient(trivial_lattice(c2, Z2, 0), c2->trivial_subgroup())) == 0);
    // trivial acting group W: head is the whole quotient
    CHECK(head_dim(double_quotient(trivial_lattice(c2, Z2, 1), c2->whole_subgroup())) == 1);
    // X^[1] of the regular lattice is the regular k[W]-module: head 1
    auto reg = perm_lattice(c2, c2->trivial_subgroup(), Z2);
    BrauerModule up = upper_quotient(reg, c2->trivial_subgroup());
    CHECK(up.dim == 2);
    CHECK(head_dim(up) == 1);
}

TEST_CASE("cover of the trivial lattice over C_p") {
    for (const std::string& name : {"C2", "C3"}) {
        auto g = fixture_group(name);
        Ring ring = Ring::integers(g->p());
        CoverResult cov = permutation_cover(trivial_lattice(g, ring, 1));
        CHECK(cov.structure.mult ==
              std::map<int, int>{{g->class_rep_of(g->whole_subgroup()), 1}});
        CHECK(cov.cover_module->rank == 1);
        CHECK(cov.kernel.rows() == 0);
        CHECK(cov.theta.f.is_identity());
    }
}

TEST_CASE("cover round-trip on seeded sums") {
    for (const std::string& name : {"C4", "V4", "D8", "Q8", "C9", "C3xC3"}) {
        auto g = fixture_group(name);
        Ring ring = Ring::integers(g->p());
        for (uint64_t seed = 1; seed <= 3; ++seed) {
            RandomPerm rp = random_perm_lattice(g, ring, seed, 2, 40);
            CoverResult cov = permutation_cover(rp.lat);
            CHECK(cov.structure == rp.structure);
            CHECK(cov.kernel.rows() == 0);
        }
    }
}

TEST_CASE("cover idempotence") {
    auto d8 = fixture_group("D8");
    RandomPerm rp = random_perm_lattice(d8, Z2, 5, 1, 24);
    CoverResult cov = permutation_cover(rp.lat);
    CoverResult again = permutation_cover(cov.cover_module);
    CHECK(again.structure == cov.structure);
    CHECK(again.kernel.rows() == 0);
}

TEST_CASE("cover of a non-permutation lattice has a kernel certificate") {
    auto c3 = fixture_group("C3");
    LatPtr aug = twist_lattice(c3, c3->trivial_subgroup(), Z3);
    CoverResult cov = permutation_cover(aug);
    CHECK(cov.structure.mult == std::map<int, int>{{c3->trivial_subgroup(), 1},
                                                   {c3->class_rep_of(c3->whole_subgroup()), 1}});
    CHECK(cov.cover_module->rank == 4);
    CHECK(cov.kernel.rows() == 2);
    // the kernel really consists of kernel vectors
    CHECK((cov.kernel * cov.theta.f).is_zero());
}

TEST_CASE("lift choices do not change the cover") {
    auto v4 = fixture_group("V4");
    RandomPerm rp = random_perm_lattice(v4, Z2, 9, 2, 16);
    CoverResult a = permutation_cover(rp.lat, 0);
    CoverResult b = permutation_cover(rp.lat, 12345);
    CHECK(a.structure == b.structure);
    CHECK(a.kernel.rows() == b.kernel.rows());
    // comparison map between the two covers is an isomorphism
    LatticeMap gamma = lift_from_perm(a.theta, b.theta);
    CHECK(map_kernel(gamma).rows() == 0);
    CHECK(matrix_inverse(gamma.f).has_value());
}

TEST_CASE("is_precover") {
    auto c2 = fixture_group("C2");
    auto triv = trivial_lattice(c2, Z2, 1);
    CoverResult cov = permutation_cover(triv);
    CHECK(is_precover(cov.theta));

    auto reg = perm_lattice(c2, c2->trivial_subgroup(), Z2);
    auto zero = make_map(reg, triv, Mat(Z2, 2, 1));
    CHECK_FALSE(is_precover(zero));

    auto sgn = twist_lattice(c2, c2->trivial_subgroup(), Z2);
    CHECK_THROWS_AS(is_precover(make_map(sgn, sgn, Mat(Z2, {{1}}))), value_error);
}

TEST_CASE("split surjections onto permutation lattices") {
    auto c2 = fixture_group("C2");
    auto triv = trivial_lattice(c2, Z2, 1);
    auto s0 = split_surjection_onto_perm(identity_map(triv));
    REQUIRE(s0.has_value());
    CHECK(s0->f.is_identity());

    auto sgn = twist_lattice(c2, c2->trivial_subgroup(), Z2);
    DirectSum ds = direct_sum({triv, sgn});
    auto s1 = split_surjection_onto_perm(ds.projections[0]);
    REQUIRE(s1.has_value());
    CHECK(compose(*s1, ds.projections[0]).f.is_identity());
    CHECK(s1->f == ds.inclusions[0].f);

    // the cover of a coset lattice splits, and rank equality makes it an iso
    auto d8 = fixture_group("D8");
    int ssub = d8->subgroup_index(d8->closure({d8->generators()[1]}));
    LatPtr coset = perm_lattice(d8, ssub, Z2);
    CoverResult cov = permutation_cover(coset);
    auto s2 = split_surjection_onto_perm(cov.theta);
    REQUIRE(s2.has_value());
    CHECK(cov.cover_module->rank == coset->rank);
    CHECK(matrix_inverse(cov.theta.f).has_value());

    auto zero = make_map(perm_lattice(c2, c2->trivial_subgroup(), Z2), triv, Mat(Z2, 2, 1));
    CHECK_THROWS_AS(split_surjection_onto_perm(zero), value_error);
}

TEST_CASE("cover of the rank-0 lattice") {
    auto q8 = fixture_group("Q8");
    CoverResult cov = permutation_cover(trivial_lattice(q8, Z2, 0));
    CHECK(cov.structure.mult.empty());
    CHECK(cov.cover_module->rank == 0);
    CHECK(cov.kernel.rows() == 0);
}

TEST_CASE("truncated-mode covers") {
    auto c2 = fixture_group("C2");
    Ring z4 = Ring::truncated(2, 2);
    auto reg = perm_lattice(c2, c2->trivial_subgroup(), z4);
    CoverResult cov = permutation_cover(reg);
    CHECK(cov.structure.mult == std::map<int, int>{{c2->trivial_subgroup(), 1}});
    CHECK(cov.kernel.rows() == 0);
}
