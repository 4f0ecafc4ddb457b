#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "so3x8/liealg.hpp"
#include "so3x8/torsion.hpp"
#include "test_support.hpp"

using namespace so3x8;
using namespace so3x8::torsion;
using liealg::AlgebraKind;
using linalg::RatMatrix;
using repring::VirtualRep;

namespace {

RatMatrix mat2(long a, long b, long c, long d) {
    RatMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("tensor ambient: generators and lifted subspaces") {
    const auto& t = tensor_generators();
    for (int i = 0; i < 3; ++i) {
        CHECK(t[i].rows() == tensor_dim);
        CHECK(t[i].cols() == tensor_dim);
    }
    // Same normalization as every other g-action: [T1,T2] = 2T3 cyclically.
    for (int i = 0; i < 3; ++i) {
        const RatMatrix lhs = RatMatrix::bracket(t[i], t[(i + 1) % 3]);
        CHECK(lhs == t[(i + 2) % 3].scaled(rat(2)));
    }

    // Lifting multiplies dimension by 8 and produces invariant subspaces.
    const liealg::Subspace g8 = tensor_with_r8(liealg::g_space());
    CHECK(g8.ambient() == tensor_dim);
    CHECK(g8.dim() == 24);
    CHECK_NOTHROW(liealg::restricted_action(g8, t));

    const liealg::Subspace all = tensor_with_r8(liealg::so8_space());
    CHECK(all.dim() == tensor_dim);

    // A random non-invariant line is rejected by the restriction.
    RatMatrix line(1, tensor_dim);
    line.at(0, 0) = 1;
    CHECK_THROWS_AS(
        liealg::restricted_action(liealg::Subspace::span(line), t),
        std::invalid_argument);

    CHECK_THROWS_AS(tensor_with_r8(liealg::Subspace::zero(5)), std::invalid_argument);
}

TEST_CASE("full torsion space: 2S10 + 5S8 + 8S6 + 10S4 + 8S2 + 3S0, dim 200") {
    const TorsionSpace full = full_torsion_space();
    CHECK(full.rep == repring::parse_rep("2S10 + 5S8 + 8S6 + 10S4 + 8S2 + 3S0"));
    CHECK(full.dim == 200);
    CHECK(full.invariants == 3);

    // Independent symbolic oracle that never touches liealg: the complement
    // of the adjoint copy of g inside Lambda^2(R^8) is Lambda^2(S2+S4) - S2.
    const VirtualRep cot = repring::parse_rep("S2 + S4");
    const VirtualRep perp = repring::exterior_power(cot, 2) - repring::irreducible(2);
    CHECK(repring::tensor(cot, perp) == full.rep);

    // Multiplicity vector over S10..S0.
    const std::vector<long long> expect = {2, 5, 8, 10, 8, 3};
    for (int n = 10, i = 0; n >= 0; n -= 2, ++i)
        CHECK(full.rep.multiplicity(n) == expect[static_cast<size_t>(i)]);
}

TEST_CASE("relative torsion rows, symbolic route") {
    const TorsionSpace p = relative_torsion("so3so5");
    const TorsionSpace r = relative_torsion("psu3");
    const TorsionSpace q = relative_torsion("sp2sp1");

    CHECK(p.rep == repring::parse_rep("S10 + 3S8 + 5S6 + 6S4 + 5S2 + 2S0"));
    CHECK(p.dim == 120);
    CHECK(p.invariants == 2);

    CHECK(q.rep == p.rep);
    CHECK(q.dim == 120);
    CHECK(q.invariants == 2);

    // The psu3 row: the multiplicities force 160 even though 158 is the
    // total usually quoted alongside them (2*11+4*9+6*7+8*5+6*3+2 = 160).
    CHECK(r.rep == repring::parse_rep("2S10 + 4S8 + 6S6 + 8S4 + 6S2 + 2S0"));
    CHECK(r.dim == 160);
    CHECK(r.invariants == 2);

    // Alias and error paths.
    CHECK(relative_torsion("su3").rep == r.rep);
    CHECK_THROWS_AS(relative_torsion("so5"), std::invalid_argument);

    // Cross-module dimension check: 8 x dim(g_G-perp).
    CHECK(p.dim == 8 * (28 - liealg::algebra(AlgebraKind::so3so5).space.dim()));
    CHECK(r.dim == 8 * (28 - liealg::algebra(AlgebraKind::su3).space.dim()));
    CHECK(q.dim == 8 * (28 - liealg::algebra(AlgebraKind::sp2sp1).space.dim()));
}

TEST_CASE("self-oracle: concrete Casimir route agrees with the symbolic route") {
    for (const std::string group : {"so3so5", "psu3", "sp2sp1", "full"}) {
        const TorsionSpace sym = relative_torsion(group);
        const TorsionSpace con = relative_torsion_concrete(group);
        CAPTURE(group);
        CHECK(sym.rep == con.rep);
        CHECK(sym.dim == con.dim);
        CHECK(sym.invariants == con.invariants);
    }
}

TEST_CASE("torsion table") {
    const TorsionTable table = torsion_table();
    REQUIRE(table.rows.size() == 4);
    CHECK(table.rows[0].group == "so3so5");
    CHECK(table.rows[1].group == "psu3");
    CHECK(table.rows[2].group == "sp2sp1");
    CHECK(table.rows[3].group == "full");

    CHECK(table.rows[0].dim == 120);
    CHECK(table.rows[1].dim == 160);
    CHECK(table.rows[2].dim == 120);
    CHECK(table.rows[3].dim == 200);

    // The invariant column: (2, 2, 2) for the groups, 3 for the full space.
    CHECK(table.rows[0].invariants == 2);
    CHECK(table.rows[1].invariants == 2);
    CHECK(table.rows[2].invariants == 2);
    CHECK(table.rows[3].invariants == 3);

    CHECK(table.note.find("160") != std::string::npos);
    CHECK(table.note.find("158") != std::string::npos);

    const auto j = torsion_table_json();
    CHECK(j["routes_agree"] == true);
    CHECK(j["rows"]["psu3"]["dim"] == 160);
    CHECK(j["rows"]["psu3"]["multiplicities_S10_to_S0"] ==
          nlohmann::ordered_json({2, 4, 6, 8, 6, 2}));
    CHECK(j["rows"]["full"]["multiplicities_S10_to_S0"] ==
          nlohmann::ordered_json({2, 5, 8, 10, 8, 3}));
    CHECK(j["rows"]["so3so5"]["multiplicities_S10_to_S0"] ==
          nlohmann::ordered_json({1, 3, 5, 6, 5, 2}));
    CHECK(j["rows"]["psu3"].contains("note"));
    CHECK(!j["rows"]["so3so5"].contains("note"));
}

TEST_CASE("class split: six almost-product components of the so3so5 row") {
    const auto parts = naveira_and_quaternionic_class_split("so3so5");
    REQUIRE(parts.size() == 6);

    const std::vector<std::pair<std::string, std::string>> expect = {
        {"Lambda2V.W", "S6 + S4 + S2"},
        {"S20V.W", "S8 + S6 + S4 + S2 + S0"},
        {"W", "S4"},
        {"V.Lambda2W", "S8 + S6 + 2S4 + S2 + S0"},
        {"V.S20W", "S10 + S8 + 2S6 + S4 + S2"},
        {"V", "S2"},
    };
    const std::vector<long long> dims = {15, 25, 5, 30, 42, 3};
    VirtualRep total;
    for (size_t i = 0; i < parts.size(); ++i) {
        CAPTURE(parts[i].label);
        CHECK(parts[i].label == expect[i].first);
        CHECK(parts[i].rep == repring::parse_rep(expect[i].second));
        CHECK(parts[i].dim == dims[i]);
        total += parts[i].rep;
    }
    CHECK(total == relative_torsion("so3so5").rep);
}

TEST_CASE("class split: four quaternionic components of the sp2sp1 row") {
    const auto parts = naveira_and_quaternionic_class_split("sp2sp1");
    REQUIRE(parts.size() == 4);

    // K = Lambda20(E).E - E restricts to S7 + S5 + S1 on the diagonal.
    const VirtualRep e = repring::irreducible(3);
    const VirtualRep k =
        repring::tensor(repring::exterior_power(e, 2) - repring::irreducible(0), e) - e;
    CHECK(k == repring::parse_rep("S7 + S5 + S1"));
    CHECK(k.complex_dimension() == 16);

    const std::vector<std::pair<std::string, std::string>> expect = {
        {"E.S3H", "S6 + S4 + S2 + S0"},
        {"K.S3H", "S10 + 2S8 + 2S6 + 3S4 + 2S2"},
        {"K.H", "S8 + 2S6 + S4 + S2 + S0"},
        {"E.H", "S4 + S2"},
    };
    const std::vector<long long> dims = {16, 64, 32, 8};
    VirtualRep total;
    for (size_t i = 0; i < parts.size(); ++i) {
        CAPTURE(parts[i].label);
        CHECK(parts[i].label == expect[i].first);
        CHECK(parts[i].rep == repring::parse_rep(expect[i].second));
        CHECK(parts[i].dim == dims[i]);
        total += parts[i].rep;
    }
    CHECK(total == relative_torsion("sp2sp1").rep);

    // No such split for the remaining tags.
    CHECK_THROWS_AS(naveira_and_quaternionic_class_split("psu3"),
                    std::invalid_argument);
    CHECK_THROWS_AS(naveira_and_quaternionic_class_split("nope"),
                    std::invalid_argument);
}

TEST_CASE("cyclic identities") {
    const auto r = verify_cyclic_identities();
    CHECK(r["ok"] == true);

    // Component spaces pair each label with the third quotient.
    CHECK(r["components"]["tau^so3so5(psu3)"]["space"] == "T* (x) (sp2sp1/g)");
    CHECK(r["components"]["tau^so3so5(psu3)"]["dim"] == 80);
    CHECK(r["components"]["tau^psu3(sp2sp1)"]["space"] == "T* (x) (so3so5/g)");
    CHECK(r["components"]["tau^psu3(sp2sp1)"]["dim"] == 80);
    CHECK(r["components"]["tau^sp2sp1(so3so5)"]["space"] == "T* (x) (psu3/g)");
    CHECK(r["components"]["tau^sp2sp1(so3so5)"]["dim"] == 40);

    for (const auto& s : r["symmetry"]) CHECK(s["same_space"] == true);

    // Two-term identities: always direct with the right isotypes; exact
    // subspace equality precisely for psu3.
    for (const std::string name : {"so3so5", "psu3", "sp2sp1"}) {
        CAPTURE(name);
        CHECK(r["two_term"][name]["sum_direct"] == true);
        CHECK(r["two_term"][name]["isomorphic_to_sum"] == true);
        CHECK(r["two_term"][name]["equals_sum"] == (name == "psu3"));
    }
    CHECK(r["two_term"]["so3so5"]["dim"] == 120);
    CHECK(r["two_term"]["psu3"]["dim"] == 160);
    CHECK(r["two_term"]["sp2sp1"]["dim"] == 120);

    // Three-term identity: exact, 200 = 80 + 40 + 80.
    CHECK(r["three_term"]["equals_sum"] == true);
    CHECK(r["three_term"]["pairwise_intersections_zero"] == true);
    CHECK(r["three_term"]["isotypes_match_full_torsion"] == true);
    CHECK(r["three_term"]["dim"] == 200);
    CHECK(r["three_term"]["part_dims"] == nlohmann::ordered_json({80, 40, 80}));
}

TEST_CASE("invariant cases: the four families") {
    const auto families = enumerate_invariant_cases();
    REQUIRE(families.size() == 4);
    CHECK(families[0].tag == "I");
    CHECK(families[1].tag == "II");
    CHECK(families[2].tag == "III");
    CHECK(families[3].tag == "IV");

    // Family I: a11 != 0 forces a22 = b21 = 0; gamma is closed and
    // d *gamma = m a11 *alpha + b22 *beta with both ranks 1.
    const CaseFamily& f1 = families[0];
    CHECK(f1.a[0][0] == "a11");
    CHECK(f1.a[1][0] == "0");
    CHECK(f1.a[1][1] == "0");
    CHECK(f1.b[0][1] == "m a11");
    CHECK(f1.b[1][0] == "0");
    CHECK(f1.rank_a == 1);
    CHECK(f1.rank_b == std::vector<int>{1});
    CHECK(f1.differentials["d alpha"] == "a11 gamma");
    CHECK(f1.differentials["d beta"] == "a12 gamma");
    CHECK(f1.differentials["d gamma"] == "0");
    CHECK(f1.differentials["d *gamma"] == "m a11 *alpha + b22 *beta");

    // Family II: a11 = 0, a22 != 0 determines b22 = -a12 b21 / a22.
    const CaseFamily& f2 = families[1];
    CHECK(f2.a[0][0] == "0");
    CHECK(f2.a[1][1] == "a22");
    CHECK(f2.b[1][1] == "-a12 b21 / a22");
    CHECK(f2.rank_a == 1);
    CHECK(f2.rank_b == std::vector<int>{0, 1});
    CHECK(f2.differentials["d alpha"] == "0");
    CHECK(f2.differentials["d beta"] == "a12 gamma + a22 *gamma");
    CHECK(f2.differentials["d gamma"] == "b21 *beta");

    // Family III: only a12 survives in A; b21 is forced to vanish.
    const CaseFamily& f3 = families[2];
    CHECK(f3.a[0][1] == "a12");
    CHECK(f3.a[0][0] == "0");
    CHECK(f3.a[1][1] == "0");
    CHECK(f3.b[1][0] == "0");
    CHECK(f3.differentials["d beta"] == "a12 gamma");
    CHECK(f3.differentials["d gamma"] == "0");
    CHECK(f3.differentials["d *gamma"] == "b22 *beta");

    // Family IV: A = 0, invariant three-forms are closed.
    const CaseFamily& f4 = families[3];
    for (const auto& row : f4.a)
        for (const auto& entry : row) CHECK(entry == "0");
    CHECK(f4.rank_a == 0);
    CHECK(f4.rank_b == std::vector<int>{0, 1});
    CHECK(f4.differentials["d alpha"] == "0");
    CHECK(f4.differentials["d beta"] == "0");
    CHECK(f4.differentials["d gamma"] == "b21 *beta");
    CHECK(f4.differentials["d *gamma"] == "b22 *beta");

    // Every family keeps the coclosure of alpha and beta, and the split
    // covers exactly the six admissible zero/nonzero patterns (the two with
    // a11 != 0 != a22 are contradictory).
    size_t covered = 0;
    for (const CaseFamily& f : families) {
        CHECK(f.differentials["d *alpha"] == "0");
        CHECK(f.differentials["d *beta"] == "0");
        covered += f.covers.size();
    }
    CHECK(covered == 6);
    CHECK(families[0].covers.size() == 2);
    CHECK(families[1].covers.size() == 2);
    CHECK(families[2].covers.size() == 1);
    CHECK(families[3].covers.size() == 1);

    const auto j = case_families_json();
    CHECK(j["families"].size() == 4);
    CHECK(j["always"] == "d *alpha = d *beta = 0");
}

TEST_CASE("family II: BA = 0 is an identity once b22 is eliminated") {
    // Polynomial identity over a grid large enough to be conclusive for the
    // bilinear entries of BA.
    for (long a12 = -2; a12 <= 2; ++a12)
        for (long b21 = -2; b21 <= 2; ++b21)
            for (long a22 = -2; a22 <= 2; ++a22) {
                if (a22 == 0) continue;
                const RatMatrix a = mat2(0, a12, 0, a22);
                RatMatrix b(2, 2);
                b.at(1, 0) = b21;
                b.at(1, 1) = rat(-a12 * b21, a22);
                CHECK((b * a).is_zero());
                const auto rep = case_classify(a, b);
                CHECK(rep["admissible"] == true);
                CHECK(rep["family"] == "II");
            }
}

TEST_CASE("case classification: pinned examples") {
    // Family I with the proportionality reading m = 1.
    auto rep = case_classify(mat2(1, 0, 0, 0), mat2(0, 1, 0, 5));
    CHECK(rep["admissible"] == true);
    CHECK(rep["family"] == "I");
    CHECK(rep["parameters"]["m"] == "1");
    CHECK(rep["rank_A"] == 1);
    CHECK(rep["rank_B"] == 1);

    // Scaled variant: m = b12/a11 = 3/2.
    rep = case_classify(mat2(2, 7, 0, 0), mat2(0, 3, 0, -1));
    CHECK(rep["family"] == "I");
    CHECK(rep["parameters"]["m"] == "3/2");

    // Family IV: invariant three-forms closed, B arbitrary in its column.
    rep = case_classify(mat2(0, 0, 0, 0), mat2(0, 0, 2, 3));
    CHECK(rep["admissible"] == true);
    CHECK(rep["family"] == "IV");
    CHECK(rep["rank_A"] == 0);
    CHECK(rep["rank_B"] == 1);

    // Family III.
    rep = case_classify(mat2(0, 7, 0, 0), mat2(0, 0, 0, 9));
    CHECK(rep["family"] == "III");

    // Identity pair: BA != 0.
    rep = case_classify(mat2(1, 0, 0, 1), mat2(1, 0, 0, 1));
    CHECK(rep["admissible"] == false);
    CHECK(rep["family"] == "inadmissible");

    // Structural violations.
    CHECK(case_classify(mat2(1, 0, 3, 0), mat2(0, 1, 0, 0))["family"] ==
          "inadmissible");  // a21 != 0
    CHECK(case_classify(mat2(0, 0, 0, 0), mat2(4, 0, 0, 0))["family"] ==
          "inadmissible");  // b11 != 0
    // a11 != 0 with b12 = 0 breaks b12 = m a11.
    rep = case_classify(mat2(1, 0, 0, 0), mat2(0, 0, 0, 5));
    CHECK(rep["admissible"] == false);
    CHECK(rep["reason"] ==
          "b12 = m a11 forces b12 and a11 to vanish together");
    // BA != 0 despite the right zero pattern.
    rep = case_classify(mat2(0, 3, 0, 2), mat2(0, 0, 4, -5));
    CHECK(rep["admissible"] == false);
    CHECK(rep["checks"]["ba_zero"] == false);

    CHECK_THROWS_AS(case_classify(RatMatrix(3, 3), RatMatrix(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("case classification: random constraint-satisfying samples") {
    auto gen = testsupport::rng(0x70727369'6f6eULL);
    const auto families = enumerate_invariant_cases();
    std::set<std::string> seen;
    int accepted = 0;
    long trials = 0;
    while (accepted < 10000) {
        ++trials;
        REQUIRE(trials < 2000000);
        // Entries from a small window with 0 likely, then filtered by the
        // admissibility checks alone (the filter is independent of the
        // classifier's case cascade).
        RatMatrix a(2, 2), b(2, 2);
        a.at(0, 0) = testsupport::bounded(gen, -2, 2);
        a.at(0, 1) = testsupport::bounded(gen, -2, 2);
        a.at(1, 1) = testsupport::bounded(gen, -2, 2);
        b.at(0, 1) = testsupport::bounded(gen, -2, 2);
        b.at(1, 0) = testsupport::bounded(gen, -2, 2);
        b.at(1, 1) = testsupport::bounded(gen, -2, 2);
        const bool pairing = (a.at(0, 0) == 0) == (b.at(0, 1) == 0);
        if (!pairing || !(b * a).is_zero()) continue;

        ++accepted;
        const auto rep = case_classify(a, b);
        REQUIRE(rep["admissible"] == true);
        const std::string family = rep["family"];
        REQUIRE((family == "I" || family == "II" || family == "III" ||
                 family == "IV"));
        seen.insert(family);

        // The sample's concrete ranks fit the family profile, and BA = 0
        // holds exactly (d^2 = 0 encoded without rounding).
        for (const CaseFamily& f : families)
            if (f.tag == family) {
                REQUIRE(rep["rank_A"] == f.rank_a);
                bool rank_ok = false;
                for (int rb : f.rank_b) rank_ok = rank_ok || rep["rank_B"] == rb;
                REQUIRE(rank_ok);
            }
        REQUIRE((b * a).is_zero());
    }
    CHECK(seen == std::set<std::string>{"I", "II", "III", "IV"});
}
