#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "so3x8/liealg.hpp"
#include "so3x8/repring.hpp"
#include "test_support.hpp"

using namespace so3x8;
using liealg::AlgebraKind;
using liealg::AlgebraModel;
using liealg::ModelElement;
using liealg::RatMatrix;
using liealg::Subspace;

namespace {

ModelElement random_element(std::mt19937_64& gen) {
    RatMatrix a(3, 3), s(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const long v = testsupport::bounded(gen, -4, 4);
            a.at(i, j) = v;
            a.at(j, i) = -v;
        }
    long diag0 = testsupport::bounded(gen, -4, 4);
    long diag1 = testsupport::bounded(gen, -4, 4);
    s.at(0, 0) = diag0;
    s.at(1, 1) = diag1;
    s.at(2, 2) = -diag0 - diag1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const long v = testsupport::bounded(gen, -4, 4);
            s.at(i, j) = v;
            s.at(j, i) = v;
        }
    return ModelElement{a, s};
}

repring::VirtualRep rep_of(const std::string& text) { return repring::parse_rep(text); }

}  // namespace

TEST_CASE("so(8) coordinates round-trip and pair indexing") {
    int idx = 0;
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
            CHECK(liealg::pair_index(a, b) == idx);
            CHECK(liealg::index_pair(idx) == std::pair<int, int>{a, b});
            ++idx;
        }
    CHECK(idx == 28);

    auto gen = testsupport::rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> v(28);
        for (Rat& c : v) c = rat(testsupport::bounded(gen, -9, 9), 1 + testsupport::bounded(gen, 0, 4));
        const RatMatrix m = liealg::so8_matrix(v);
        CHECK(m.is_antisymmetric());
        CHECK(liealg::so8_coords(m) == v);
    }
    RatMatrix bad(8, 8);
    bad.at(0, 1) = 1;  // not antisymmetric
    CHECK_THROWS_AS(liealg::so8_coords(bad), std::invalid_argument);
}

TEST_CASE("reference basis is orthonormal and splits into V and W blocks") {
    const liealg::ReferenceBasis& rb = liealg::reference_basis();
    CHECK(rb.gram() == RatMatrix::identity(8));
    for (int i = 0; i < 3; ++i) {
        CHECK(rb.vectors[i].sym.is_zero());
        CHECK(rb.vectors[i].antisym.is_antisymmetric());
    }
    for (int i = 3; i < 8; ++i) {
        CHECK(rb.vectors[i].antisym.is_zero());
        CHECK(rb.vectors[i].sym.trace() == 0);
        CHECK(rb.vectors[i].sym == rb.vectors[i].sym.transpose());
    }
    // V and W are orthogonal blocks for the model inner product.
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 8; ++j)
            CHECK(liealg::model_inner(rb.vectors[i], rb.vectors[j]) == 0);
}

TEST_CASE("model bracket is a Lie bracket and ad is a homomorphism") {
    auto gen = testsupport::rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        const ModelElement x = random_element(gen);
        const ModelElement y = random_element(gen);
        const ModelElement z = random_element(gen);

        // Antisymmetry through the ad matrices: ad(x) is antisymmetric, which
        // encodes invariance of the inner product.
        const RatMatrix ax = liealg::ad_matrix(x);
        const RatMatrix ay = liealg::ad_matrix(y);
        CHECK(ax.is_antisymmetric());

        // Homomorphism: ad([x,y]) = [ad x, ad y].  This nails the bracket
        // scaling conventions exactly.
        const RatMatrix lhs = liealg::ad_matrix(liealg::model_bracket(x, y));
        CHECK(lhs == RatMatrix::bracket(ax, ay));

        // Jacobi identity for the pair bracket.
        const ModelElement j1 = liealg::model_bracket(x, liealg::model_bracket(y, z));
        const ModelElement j2 = liealg::model_bracket(y, liealg::model_bracket(z, x));
        const ModelElement j3 = liealg::model_bracket(z, liealg::model_bracket(x, y));
        CHECK((j1.antisym + j2.antisym + j3.antisym).is_zero());
        CHECK((j1.sym + j2.sym + j3.sym).is_zero());

        // Invariance of the inner product: <[x,y],z> + <y,[x,z]> = 0.
        const Rat inv = liealg::model_inner(liealg::model_bracket(x, y), z) +
                        liealg::model_inner(y, liealg::model_bracket(x, z));
        CHECK(inv == 0);
    }
}

TEST_CASE("generators satisfy the normalization and Casimir diagonal") {
    const auto& e = liealg::g_generators();
    for (int i = 0; i < 3; ++i) {
        CHECK(e[i].is_antisymmetric());
        CHECK(RatMatrix::bracket(e[i], e[(i + 1) % 3]) == e[(i + 2) % 3].scaled(Rat(2)));
    }
    const RatMatrix c = e[0] * e[0] + e[1] * e[1] + e[2] * e[2];
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(c.at(i, j) == ((i == j) ? Rat(i < 3 ? -8 : -24) : Rat(0)));
}

TEST_CASE("Casimir isotypes recover the defining module structure") {
    CHECK(liealg::casimir_isotypes(liealg::g_generators()) == rep_of("S2 + S4"));

    // Wrong normalization must be rejected.
    auto bad = liealg::g_generators();
    bad[0] = bad[0].scaled(Rat(2));
    CHECK_THROWS_AS(liealg::casimir_isotypes(bad), std::invalid_argument);
}

TEST_CASE("the four algebras build with certified dims and properties") {
    const auto& g = liealg::algebra(AlgebraKind::g);
    const auto& so3so5 = liealg::algebra(AlgebraKind::so3so5);
    const auto& su3 = liealg::algebra(AlgebraKind::su3);
    const auto& sp2sp1 = liealg::algebra(AlgebraKind::sp2sp1);

    CHECK(g.space.dim() == 3);
    CHECK(so3so5.space.dim() == 13);
    CHECK(su3.space.dim() == 8);
    CHECK(sp2sp1.space.dim() == 13);

    for (const AlgebraModel* m : {&g, &so3so5, &su3, &sp2sp1}) {
        CHECK(m->bracket_closed);
        CHECK(m->contains_g);
        CHECK(liealg::trace_form_negative_definite(m->space));
    }
}

TEST_CASE("pairwise intersections all equal g") {
    const auto report = liealg::verify_intersection_theorem();
    CHECK(report.at("ok").get<bool>());
    CHECK(report.at("triple_equals_g").get<bool>());
    for (const auto& entry : report.at("pairs")) {
        CHECK(entry.at("dim").get<int>() == 3);
        CHECK(entry.at("equals_g").get<bool>());
    }
}

TEST_CASE("complement identities: 25 = 10 + 5 + 10 and the cyclic splittings") {
    const auto report = liealg::verify_complement_theorem();
    CHECK(report.at("ok").get<bool>());
    CHECK(report.at("g_perp_dim").get<int>() == 25);
    const auto dims = report.at("g_perp_part_dims");
    CHECK(dims[0].get<int>() == 10);
    CHECK(dims[1].get<int>() == 5);
    CHECK(dims[2].get<int>() == 10);
    CHECK(report.at("g_perp_splits").get<bool>());

    // Every cyclic assignment: direct sum, trivially meeting the third
    // quotient, module-isomorphic to the complement of the third algebra.
    for (const auto& entry : report.at("assignments")) {
        CHECK(entry.at("sum_direct").get<bool>());
        CHECK(entry.at("meets_third_trivially").get<bool>());
        CHECK(entry.at("isomorphic_to_complement").get<bool>());
        const int want = entry.at("algebra").get<std::string>() == "su3" ? 20 : 15;
        CHECK(entry.at("complement_dim").get<int>() == want);
        // Exact subspace equality holds precisely for the su3 assignment;
        // the other two meet the complement at the threefold-symmetry angle.
        CHECK(entry.at("equals_complement").get<bool>() ==
              (entry.at("algebra").get<std::string>() == "su3"));
    }
    CHECK(report.at("quotient_pair_cos2").at("S2").get<std::string>() == "1/4");
    CHECK(report.at("quotient_pair_cos2").at("S6").get<std::string>() == "1/4");
}

TEST_CASE("quotient isotypes match the published decompositions") {
    CHECK(liealg::quotient_isotypes(liealg::algebra(AlgebraKind::so3so5)) ==
          rep_of("S6 + S2"));
    CHECK(liealg::quotient_isotypes(liealg::algebra(AlgebraKind::su3)) == rep_of("S4"));
    CHECK(liealg::quotient_isotypes(liealg::algebra(AlgebraKind::sp2sp1)) ==
          rep_of("S6 + S2"));
}

TEST_CASE("Casimir isotypes agree with character arithmetic on so(8) and complements") {
    const repring::VirtualRep r8 = rep_of("S2 + S4");
    const repring::VirtualRep so8 = repring::exterior_power(r8, 2);
    CHECK(liealg::subspace_isotypes(liealg::so8_space()) == so8);
    CHECK(so8 == rep_of("2S6 + S4 + 3S2"));

    // Complements: so(8) isotypes minus the algebra isotypes.
    for (AlgebraKind kind : {AlgebraKind::g, AlgebraKind::so3so5, AlgebraKind::su3,
                             AlgebraKind::sp2sp1}) {
        const auto& m = liealg::algebra(kind);
        const auto perp = liealg::orth_complement(m.space);
        CHECK(liealg::subspace_isotypes(perp) ==
              so8 - liealg::subspace_isotypes(m.space));
    }
    CHECK(liealg::subspace_isotypes(liealg::orth_complement(
              liealg::algebra(AlgebraKind::su3).space)) == rep_of("2S6 + 2S2"));
    CHECK(liealg::subspace_isotypes(liealg::orth_complement(liealg::g_space())) ==
          rep_of("2S6 + S4 + 2S2"));
}

TEST_CASE("ideal decompositions") {
    CHECK(liealg::ideal_dims(liealg::algebra(AlgebraKind::g)) == std::vector<int>{3});
    CHECK(liealg::ideal_dims(liealg::algebra(AlgebraKind::su3)) == std::vector<int>{8});
    CHECK(liealg::ideal_dims(liealg::algebra(AlgebraKind::so3so5)) ==
          std::vector<int>{10, 3});
    CHECK(liealg::ideal_dims(liealg::algebra(AlgebraKind::sp2sp1)) ==
          std::vector<int>{10, 3});
}

TEST_CASE("subspace algebra: joins, intersections, complements, membership") {
    auto gen = testsupport::rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        RatMatrix rows_a(3, 28), rows_b(4, 28);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 28; ++j)
                rows_a.at(i, j) = Rat(testsupport::bounded(gen, -3, 3));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 28; ++j)
                rows_b.at(i, j) = Rat(testsupport::bounded(gen, -3, 3));
        const Subspace a = Subspace::span(rows_a);
        const Subspace b = Subspace::span(rows_b);
        const Subspace meet = liealg::intersect(a, b);
        const Subspace sum = liealg::join(a, b);
        CHECK(a.dim() + b.dim() == meet.dim() + sum.dim());
        CHECK(a.contains(meet));
        CHECK(b.contains(meet));
        CHECK(sum.contains(a));
        CHECK(liealg::orth_complement(liealg::orth_complement(a)) == a);
        CHECK(liealg::direct_sum_equals(liealg::so8_space(),
                                        {a, liealg::orth_complement(a)}) ==
              (a.dim() + liealg::orth_complement(a).dim() == 28));
    }

    const Subspace zero = Subspace::zero(28);
    CHECK(liealg::orth_complement(zero) == liealg::so8_space());
    CHECK(liealg::intersect(zero, liealg::so8_space()) == zero);
    CHECK(liealg::join(zero, zero) == zero);
    CHECK(liealg::orth_complement(liealg::so8_space()) == zero);
}

TEST_CASE("subspace JSON round-trips in both renderings") {
    const Subspace g = liealg::g_space();
    const auto j = liealg::subspace_to_json(g);
    CHECK(j.at("ambient").get<int>() == 28);
    CHECK(j.at("basis").size() == 3);
    CHECK(liealg::subspace_from_json(j) == g);

    RatMatrix rows(2, 5);
    rows.at(0, 0) = rat(1, 2);
    rows.at(1, 4) = Rat(-3);
    const Subspace s = Subspace::span(rows);
    CHECK(liealg::subspace_from_json(liealg::subspace_to_json(s)) == s);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(liealg::kind_from_name("so9"), std::invalid_argument);
    // A non-invariant subspace is rejected by the restriction.
    RatMatrix one(1, 28);
    one.at(0, 0) = 1;
    CHECK_THROWS_AS(liealg::restricted_adjoint_action(Subspace::span(one)),
                    std::invalid_argument);
    // quotient_complement demands g inside the algebra.
    AlgebraModel fake;
    fake.name = "fake";
    fake.space = Subspace::span(one);
    CHECK_THROWS_AS(liealg::quotient_complement(fake), std::invalid_argument);
}
