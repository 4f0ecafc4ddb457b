#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "so3x8/exforms.hpp"
#include "so3x8/liealg.hpp"
#include "so3x8/repring.hpp"
#include "test_support.hpp"

using namespace so3x8;
using exforms::FormPencil;
using exforms::KForm;
using exforms::NamedForm;
using linalg::RatMatrix;

namespace {

KForm basis_form(int k, const std::vector<int>& subset) {
    KForm f(k);
    f.set_coeff_on(subset, Rat(1));
    return f;
}

KForm random_form(std::mt19937_64& gen, int k) {
    KForm f(k);
    for (int i = 0; i < f.basis_size(); ++i)
        f.coeff(i) = Rat(testsupport::bounded(gen, -3, 3));
    return f;
}

RatMatrix random_so8(std::mt19937_64& gen) {
    std::vector<Rat> v(liealg::so8_dim);
    for (Rat& c : v) c = Rat(testsupport::bounded(gen, -3, 3));
    return liealg::so8_matrix(v);
}

int v_count_of(const std::vector<int>& s) {
    int c = 0;
    for (int i : s)
        if (i < 3) ++c;
    return c;
}

}  // namespace

TEST_CASE("subset tables: sizes, ranks, lexicographic order") {
    long long total = 0;
    for (int k = 0; k <= 8; ++k) {
        const auto& subs = exforms::subsets(k);
        CHECK(static_cast<int>(subs.size()) == exforms::binomial(8, k));
        total += subs.size();
        for (size_t r = 0; r < subs.size(); ++r) {
            CHECK(exforms::subset_rank(k, subs[r]) == static_cast<int>(r));
            if (r > 0) CHECK(subs[r - 1] < subs[r]);  // lexicographic
        }
    }
    CHECK(total == 256);
    CHECK_THROWS_AS(exforms::subset_rank(2, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(exforms::subset_rank(2, {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(exforms::subsets(9), std::invalid_argument);
}

TEST_CASE("wedge: hand values, graded commutativity, associativity") {
    const KForm e1 = basis_form(1, {0});
    const KForm e2 = basis_form(1, {1});
    const KForm e12 = exforms::wedge(e1, e2);
    CHECK(e12.coeff_on({0, 1}) == 1);
    CHECK(exforms::wedge(e2, e1).coeff_on({0, 1}) == -1);
    CHECK(exforms::wedge(e1, e1).is_zero());

    auto gen = testsupport::rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        const int p = static_cast<int>(testsupport::bounded(gen, 0, 3));
        const int q = static_cast<int>(testsupport::bounded(gen, 0, 3));
        const int r = static_cast<int>(testsupport::bounded(gen, 0, 2));
        const KForm a = random_form(gen, p);
        const KForm b = random_form(gen, q);
        const KForm c = random_form(gen, r);
        // a ^ b = (-1)^{pq} b ^ a
        const KForm ab = exforms::wedge(a, b);
        const KForm ba = exforms::wedge(b, a);
        CHECK(ab == ((p * q) % 2 == 0 ? ba : ba.scaled(Rat(-1))));
        // associativity
        CHECK(exforms::wedge(ab, c) == exforms::wedge(a, exforms::wedge(b, c)));
    }
    CHECK_THROWS_AS(exforms::wedge(random_form(gen, 5), random_form(gen, 4)),
                    std::invalid_argument);
}

TEST_CASE("lie_action: base cases and the Leibniz rule pin the derivation") {
    auto gen = testsupport::rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const RatMatrix x = random_so8(gen);
        // degree 0: zero map
        CHECK(exforms::lie_action(x, 0).is_zero());
        // degree 1: the dual action is -X^T (equals X for antisymmetric X)
        const RatMatrix a1 = exforms::lie_action(x, 1);
        CHECK(a1 == x.transpose().scaled(Rat(-1)));
        // traceless in every degree
        for (int k = 0; k <= 8; ++k) CHECK(exforms::lie_action(x, k).trace() == 0);
        // Leibniz: L_X(a ^ b) = (L_X a) ^ b + a ^ (L_X b)
        const int p = static_cast<int>(testsupport::bounded(gen, 1, 3));
        const int q = static_cast<int>(testsupport::bounded(gen, 1, 3));
        const KForm a = random_form(gen, p);
        const KForm b = random_form(gen, q);
        const KForm lhs = exforms::lie_action(x, exforms::wedge(a, b));
        const KForm rhs = exforms::wedge(exforms::lie_action(x, a), b) +
                          exforms::wedge(a, exforms::lie_action(x, b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hodge star: defining identity, signs, isometry") {
    // Hand values.
    CHECK(exforms::hodge_star(basis_form(3, {0, 1, 2})) ==
          basis_form(5, {3, 4, 5, 6, 7}));
    KForm one(0);
    one.coeff(0) = 1;
    const KForm vol = basis_form(8, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(exforms::hodge_star(one) == vol);
    CHECK(exforms::hodge_star(vol) == one);

    // star . star = (-1)^{k(8-k)} on every basis form of every degree.
    for (int k = 0; k <= 8; ++k) {
        const int sign = (k * (8 - k)) % 2 == 0 ? 1 : -1;
        for (const auto& s : exforms::subsets(k)) {
            const KForm f = basis_form(k, s);
            CHECK(exforms::hodge_star(exforms::hodge_star(f)) == f.scaled(Rat(sign)));
        }
    }

    auto gen = testsupport::rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = static_cast<int>(testsupport::bounded(gen, 0, 8));
        const KForm a = random_form(gen, k);
        const KForm b = random_form(gen, k);
        // omega ^ *eta = <omega, eta> vol  (the defining property)
        CHECK(exforms::wedge(a, exforms::hodge_star(b)) == vol.scaled(a.inner(b)));
        // isometry
        CHECK(exforms::hodge_star(a).inner(exforms::hodge_star(b)) == a.inner(b));
        // equivariance: L_X commutes with star
        const RatMatrix x = random_so8(gen);
        CHECK(exforms::hodge_star(exforms::lie_action(x, a)) ==
              exforms::lie_action(x, exforms::hodge_star(a)));
    }
}

TEST_CASE("invariant subspace dimensions match character arithmetic in all degrees") {
    const repring::VirtualRep r8 = repring::parse_rep("S2 + S4");
    const std::vector<int> expected = {1, 0, 0, 2, 2, 2, 0, 0, 1};
    for (int k = 0; k <= 8; ++k) {
        const auto inv = exforms::invariant_subspace(k);
        CHECK(inv.dim() == expected[k]);
        CHECK(inv.dim() ==
              static_cast<int>(repring::exterior_power(r8, k).multiplicity(0)));
    }
}

TEST_CASE("hodge star restricts to a bijection between invariant spaces") {
    for (int k : {3, 4}) {
        const auto inv = exforms::invariant_subspace(k);
        const auto inv_dual = exforms::invariant_subspace(8 - k);
        for (int i = 0; i < inv.dim(); ++i) {
            KForm f(k);
            for (int j = 0; j < f.basis_size(); ++j) f.coeff(j) = inv.basis().at(i, j);
            const KForm sf = exforms::hodge_star(f);
            std::vector<Rat> coords(sf.basis_size());
            for (int j = 0; j < sf.basis_size(); ++j) coords[j] = sf.coeff(j);
            CHECK(inv_dual.contains(coords));
        }
        CHECK(inv.dim() == inv_dual.dim());
    }
}

TEST_CASE("named invariant forms: supports, normalization, star relations") {
    const auto& forms = exforms::locate_invariant_forms();

    // alpha is exactly the unit V-volume 3-form.
    CHECK(forms.alpha == basis_form(3, {0, 1, 2}));
    CHECK(forms.star_alpha == basis_form(5, {3, 4, 5, 6, 7}));

    // Support patterns: beta is V x W^2, gamma is V^2 x W^2, *gamma is V x W^3.
    const auto support_ok = [](const KForm& f, int vc) {
        const auto& subs = exforms::subsets(f.degree());
        bool any = false;
        for (size_t i = 0; i < subs.size(); ++i) {
            if (f.coeff(static_cast<int>(i)) == 0) continue;
            any = true;
            if (v_count_of(subs[i]) != vc) return false;
        }
        return any;
    };
    CHECK(support_ok(forms.beta, 1));
    CHECK(support_ok(forms.gamma, 2));
    CHECK(support_ok(forms.star_gamma, 1));
    CHECK(support_ok(forms.star_beta, 2));  // dual support (2,3)

    // Primitive integer coefficients with positive first nonzero entry.
    const auto primitive_ok = [](const KForm& f) {
        Int g = 0;
        int first = -1;
        for (int i = 0; i < f.basis_size(); ++i) {
            const Rat& c = f.coeff(i);
            if (!is_integer(c)) return false;
            if (c != 0 && first < 0) first = i;
            g = gcd(g, c.get_num());
        }
        return first >= 0 && g == 1 && f.coeff(first) > 0;
    };
    CHECK(primitive_ok(forms.alpha));
    CHECK(primitive_ok(forms.beta));
    CHECK(primitive_ok(forms.gamma));

    // Hodge relations hold on the nose.
    CHECK(exforms::hodge_star(forms.gamma) == forms.star_gamma);
    CHECK(exforms::hodge_star(forms.star_gamma) == forms.gamma);  // *^2 = +1 on degree 4
    CHECK(exforms::hodge_star(forms.beta) == forms.star_beta);

    // Orthogonality of the distinguished pairs.
    CHECK(forms.alpha.inner(forms.beta) == 0);
    CHECK(forms.gamma.inner(forms.star_gamma) == 0);

    // All six are genuinely invariant.
    for (NamedForm which :
         {NamedForm::alpha, NamedForm::beta, NamedForm::gamma, NamedForm::star_gamma,
          NamedForm::star_alpha, NamedForm::star_beta}) {
        const KForm& f = exforms::named_form(which);
        for (int i = 0; i < 3; ++i)
            CHECK(exforms::lie_action(liealg::g_generators()[i], f).is_zero());
    }
}

TEST_CASE("stabilizers: volume form, V-volume, and invariance of the kernel") {
    const KForm vol = basis_form(8, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(exforms::stabilizer(vol).dim() == 28);

    // The V-volume 3-form is stabilized exactly by the block algebra.
    const auto stab_alpha = exforms::stabilizer(exforms::named_form(NamedForm::alpha));
    CHECK(stab_alpha == liealg::algebra(liealg::AlgebraKind::so3so5).space);

    // Stabilizers of invariant forms contain g and are bracket-closed.
    auto gen = testsupport::rng(24);
    for (NamedForm which : {NamedForm::beta, NamedForm::gamma, NamedForm::star_gamma}) {
        const auto stab = exforms::stabilizer(exforms::named_form(which));
        CHECK(stab.contains(liealg::g_space()));
        CHECK(liealg::is_bracket_closed(stab));
    }
    // Random forms also have bracket-closed stabilizers.
    for (int trial = 0; trial < 3; ++trial) {
        const KForm f = random_form(gen, 3);
        CHECK(liealg::is_bracket_closed(exforms::stabilizer(f)));
    }
}

TEST_CASE("pencil scan: two jump rays at slopes +1 and -1, generic dimension 3") {
    FormPencil pencil;
    pencil.first = exforms::named_form(NamedForm::gamma);
    pencil.second = exforms::named_form(NamedForm::star_gamma);
    pencil.resolution = 8;
    const auto res = exforms::pencil_scan(pencil);

    CHECK(res.generic_dim == 3);
    REQUIRE(res.jumps.size() == 2);
    CHECK(!res.jumps[0].at_infinity);
    CHECK(!res.jumps[1].at_infinity);
    CHECK(res.jumps[0].slope == Rat(-1));
    CHECK(res.jumps[1].slope == Rat(1));
    CHECK(res.jumps[0].stabilizer_dim == 13);
    CHECK(res.jumps[1].stabilizer_dim == 13);

    // The jump stabilizers contain g, are bracket-closed, and decompose with
    // ideal dimensions {10, 3}.
    for (const auto& jump : res.jumps) {
        KForm f = pencil.first.scaled(Rat(jump.slope.get_den())) +
                  pencil.second.scaled(Rat(jump.slope.get_num()));
        const auto stab = exforms::stabilizer(f);
        CHECK(stab.dim() == 13);
        CHECK(stab.contains(liealg::g_space()));
        CHECK(liealg::is_bracket_closed(stab));
        liealg::AlgebraModel model;
        model.name = "jump";
        model.space = stab;
        CHECK(liealg::ideal_dims(model) == std::vector<int>{10, 3});
    }

    // The two jump stabilizers meet exactly in the common stabilizer of the
    // whole pencil, which contains g.
    const auto s_plus = exforms::stabilizer(pencil.first + pencil.second);
    const auto s_minus = exforms::stabilizer(pencil.first - pencil.second);
    const auto common = liealg::intersect(s_plus, s_minus);
    CHECK(common.contains(liealg::g_space()));
    CHECK(common.dim() == 3);

    // Error paths.
    FormPencil bad;
    bad.first = pencil.first;
    bad.second = pencil.first;
    CHECK_THROWS_AS(exforms::pencil_scan(bad), std::invalid_argument);
    bad.second = exforms::named_form(NamedForm::alpha);
    CHECK_THROWS_AS(exforms::pencil_scan(bad), std::invalid_argument);
}

TEST_CASE("sp2sp1 equals the jump-ray stabilizer used by the algebra builder") {
    const auto& sp2sp1 = liealg::algebra(liealg::AlgebraKind::sp2sp1);
    const KForm omega = exforms::named_form(NamedForm::gamma) +
                        exforms::named_form(NamedForm::star_gamma);
    CHECK(sp2sp1.space == exforms::stabilizer(omega));
}

TEST_CASE("form JSON and pretty printing") {
    KForm f(3);
    f.set_coeff_on({0, 1, 4}, rat(1, 2));
    f.set_coeff_on({2, 5, 6}, Rat(-2));
    const auto j = exforms::form_to_json(f);
    CHECK(j.at("degree").get<int>() == 3);
    CHECK(j.at("coeffs").at("125").get<std::string>() == "1/2");
    CHECK(j.at("coeffs").at("367").get<std::string>() == "-2");
    CHECK(exforms::form_from_json(j) == f);

    CHECK(exforms::form_pretty(f) == "1/2 e1^e2^e5 - 2 e3^e6^e7");
    CHECK(exforms::form_pretty(KForm(2)) == "0");
    KForm one(0);
    one.coeff(0) = 1;
    CHECK(exforms::form_pretty(one) == "1");

    nlohmann::json badj = {{"degree", 2}, {"coeffs", {{"131", "1"}}}};
    CHECK_THROWS_AS(exforms::form_from_json(badj), std::invalid_argument);
}
