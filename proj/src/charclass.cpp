#include "so3x8/charclass.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace so3x8::charclass {

// ---------------------------------------------------------------------------
// GradedPoly
// ---------------------------------------------------------------------------

GradedPoly GradedPoly::constant(const Rat& c) {
    GradedPoly p;
    p.m_c[0] = c;
    return p;
}

GradedPoly GradedPoly::variable() {
    GradedPoly p;
    p.m_c[1] = 1;
    return p;
}

bool GradedPoly::is_zero() const {
    return std::all_of(m_c.begin(), m_c.end(), [](const Rat& c) { return c == 0; });
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    GradedPoly r;
    for (int k = 0; k < terms; ++k) r.m_c[k] = m_c[k] + o.m_c[k];
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    GradedPoly r;
    for (int k = 0; k < terms; ++k) r.m_c[k] = m_c[k] - o.m_c[k];
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    GradedPoly r;
    for (int i = 0; i < terms; ++i)
        for (int j = 0; i + j < terms; ++j) r.m_c[i + j] += m_c[i] * o.m_c[j];
    return r;
}

GradedPoly GradedPoly::scaled(const Rat& s) const {
    GradedPoly r;
    for (int k = 0; k < terms; ++k) r.m_c[k] = m_c[k] * s;
    return r;
}

GradedPoly GradedPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    GradedPoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string GradedPoly::str() const {
    std::string out;
    for (int k = 0; k < terms; ++k) {
        const Rat& c = m_c[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rat mag = negative ? Rat(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (k == 0) {
            out += rat_str(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            const std::string cs = rat_str(mag);
            // Space out fractional coefficients: "3/2 x^4", but "6x^2".
            out += cs + (cs.find('/') == std::string::npos ? "" : " ") + mono;
        }
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// WeightBundle
// ---------------------------------------------------------------------------

WeightBundle::WeightBundle(std::vector<Rat> weights) : m_weights(std::move(weights)) {
    std::sort(m_weights.begin(), m_weights.end(),
              [](const Rat& a, const Rat& b) { return a > b; });
}

WeightBundle WeightBundle::parse(const std::string& csv) {
    std::vector<Rat> w;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos)
            throw std::invalid_argument("empty weight in list");
        w.push_back(rat_parse(item.substr(begin, end - begin + 1)));
    }
    if (w.empty()) throw std::invalid_argument("empty weight list");
    return WeightBundle(std::move(w));
}

bool WeightBundle::self_conjugate() const {
    std::vector<Rat> negated;
    negated.reserve(m_weights.size());
    for (const Rat& w : m_weights) negated.push_back(Rat(-w));
    std::sort(negated.begin(), negated.end(),
              [](const Rat& a, const Rat& b) { return a > b; });
    return negated == m_weights;
}

WeightBundle WeightBundle::conjugate() const {
    std::vector<Rat> negated;
    negated.reserve(m_weights.size());
    for (const Rat& w : m_weights) negated.push_back(Rat(-w));
    return WeightBundle(std::move(negated));
}

WeightBundle WeightBundle::operator+(const WeightBundle& o) const {
    std::vector<Rat> all = m_weights;
    all.insert(all.end(), o.m_weights.begin(), o.m_weights.end());
    return WeightBundle(std::move(all));
}

WeightBundle WeightBundle::tensor(const WeightBundle& o) const {
    std::vector<Rat> sums;
    sums.reserve(m_weights.size() * o.m_weights.size());
    for (const Rat& a : m_weights)
        for (const Rat& b : o.m_weights) sums.push_back(Rat(a + b));
    return WeightBundle(std::move(sums));
}

const WeightBundle& tangent_complexified() {
    static const WeightBundle b =
        WeightBundle({Rat(2), Rat(-2), Rat(1), Rat(-1), Rat(1), Rat(-1), Rat(0), Rat(0)});
    return b;
}

const WeightBundle& holo_J() {
    static const WeightBundle b = WeightBundle({Rat(2), Rat(-1), Rat(-1), Rat(0)});
    return b;
}

const WeightBundle& holo_J_prime() {
    static const WeightBundle b = WeightBundle({Rat(2), Rat(1), Rat(1), Rat(0)});
    return b;
}

const WeightBundle& holo_J_second() {
    static const WeightBundle b = WeightBundle({Rat(2), Rat(1), Rat(-1), Rat(0)});
    return b;
}

// ---------------------------------------------------------------------------
// Characteristic classes
// ---------------------------------------------------------------------------

GradedPoly chern_character(const WeightBundle& b) {
    GradedPoly r;
    for (const Rat& w : b.weights()) {
        Rat factorial = 1;
        Rat power = 1;
        for (int k = 0; k < GradedPoly::terms; ++k) {
            if (k > 0) {
                factorial *= k;
                power *= w;
            }
            r.coeff(k) += power / factorial;
        }
    }
    return r;
}

std::pair<GradedPoly, GradedPoly> pontrjagin(const WeightBundle& b) {
    if (!b.self_conjugate())
        throw std::invalid_argument(
            "Pontrjagin classes need a self-conjugate weight multiset");
    std::vector<Rat> squares;
    for (const Rat& w : b.weights())
        if (w > 0) squares.push_back(Rat(w * w));
    Rat e1 = 0, e2 = 0;
    for (size_t i = 0; i < squares.size(); ++i) {
        e1 += squares[i];
        for (size_t j = i + 1; j < squares.size(); ++j) e2 += squares[i] * squares[j];
    }
    GradedPoly p1, p2;
    p1.coeff(2) = e1;
    p2.coeff(4) = e2;
    return {p1, p2};
}

GradedPoly genus_eval(GenusKind which, const GradedPoly& p1, const GradedPoly& p2) {
    const GradedPoly one = GradedPoly::constant(1);
    const GradedPoly p1sq = p1 * p1;
    switch (which) {
        case GenusKind::L:
            return one + p1.scaled(rat(1, 3)) + (p2.scaled(7) - p1sq).scaled(rat(1, 45));
        case GenusKind::Ahat:
            return one - p1.scaled(rat(1, 24)) +
                   (p1sq.scaled(7) - p2.scaled(4)).scaled(rat(1, 5760));
        case GenusKind::Todd:
            return one - p1.scaled(rat(1, 12)) +
                   (p1sq.scaled(3) - p2).scaled(rat(1, 720));
    }
    throw std::invalid_argument("unknown genus");
}

GradedPoly genus_eval(const ChernData& data) {
    const GradedPoly one = GradedPoly::constant(1);
    const GradedPoly c1sq = data.c1 * data.c1;
    const GradedPoly p1sq = data.p1 * data.p1;
    return one + data.c1.scaled(rat(1, 2)) + (c1sq - data.p1).scaled(rat(1, 12)) -
           (data.c1 * data.p1).scaled(rat(1, 24)) -
           (c1sq * c1sq + (c1sq * data.p1).scaled(4) - p1sq.scaled(rat(11, 4)) -
            data.c1 * data.c3)
               .scaled(rat(1, 720));
}

GradedPoly todd_product(const WeightBundle& b) {
    // t/(1 - e^{-t}) = 1 + t/2 + t^2/12 + 0 t^3 - t^4/720 + ...
    GradedPoly r = GradedPoly::constant(1);
    for (const Rat& w : b.weights()) {
        GradedPoly factor = GradedPoly::constant(1);
        const Rat w2 = w * w;
        factor.coeff(1) = w / 2;
        factor.coeff(2) = w2 / 12;
        factor.coeff(4) = -(w2 * w2) / 720;
        r = r * factor;
    }
    return r;
}

long long todd_divisibility_factor() { return 4 * 720; }

long long psu3_divisibility_factor() { return 216; }

long long divisibility_bound() {
    return std::lcm(todd_divisibility_factor(), psu3_divisibility_factor());
}

nlohmann::ordered_json obstruction_check(long long e, long long p1sq, long long p2) {
    const bool euler_relation = 8 * e + p1sq - 4 * p2 == 0;
    const bool quaternionic_relation = 4 * p2 == p1sq;
    const bool divisibility = p1sq % divisibility_bound() == 0;
    const bool euler_zero = e == 0;
    nlohmann::ordered_json r;
    r["eight_e_plus_p1sq_minus_4p2_zero"] = euler_relation;
    r["four_p2_eq_p1sq"] = quaternionic_relation;
    r["p1sq_divisible_by_8640"] = divisibility;
    r["euler_zero"] = euler_zero;
    r["pass"] = euler_relation && quaternionic_relation && divisibility && euler_zero;
    return r;
}

namespace {

nlohmann::ordered_json weight_strings(const WeightBundle& b) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Rat& w : b.weights()) arr.push_back(rat_str(w));
    return arr;
}

bool quaternionic_weights(const WeightBundle& j) {
    // E tensor L^{1/2} has weights {2, 1, 0, -1}; its conjugate corresponds to
    // the opposite choice of the half line bundle and is equally quaternionic.
    static const WeightBundle twistor =
        WeightBundle({Rat(2), Rat(1), Rat(0), Rat(-1)});
    return j == twistor || j == twistor.conjugate();
}

}  // namespace

nlohmann::ordered_json acs_classify(const WeightBundle& j) {
    if (j + j.conjugate() != tangent_complexified())
        throw std::invalid_argument(
            "holomorphic weights plus their conjugates must reassemble the "
            "complexified tangent weights");

    const struct {
        const char* name;
        const WeightBundle& weights;
    } basics[] = {
        {"J", holo_J()},
        {"J'", holo_J_prime()},
        {"J''", holo_J_second()},
    };

    nlohmann::ordered_json r;
    r["weights"] = weight_strings(j);
    r["quaternionic"] = quaternionic_weights(j);
    std::string label;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const auto& basic : basics) {
        for (const bool conjugated : {false, true}) {
            const WeightBundle w = conjugated ? basic.weights.conjugate() : basic.weights;
            const std::string name =
                conjugated ? std::string("conj ") + basic.name : basic.name;
            nlohmann::ordered_json entry;
            entry["name"] = name;
            entry["weights"] = weight_strings(w);
            entry["quaternionic"] = quaternionic_weights(w);
            table.push_back(std::move(entry));
            if (w == j && label.empty()) label = name;
        }
    }
    r["matches"] = label.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(label);
    r["basic_structures"] = std::move(table);
    r["conjugate_count"] = 3;
    return r;
}

nlohmann::ordered_json charclass_report() {
    const WeightBundle& tc = tangent_complexified();
    const GradedPoly ch = chern_character(tc);
    const auto [p1, p2] = pontrjagin(tc);
    const GradedPoly p1sq = p1 * p1;

    nlohmann::ordered_json r;
    r["ch"] = ch.str();
    r["ch_top_erratum"] =
        "a published display prints the top term as 3x^4; the comparison "
        "ch = rank + p1 + (p1^2 - 2 p2)/12 with p1 = 6x^2, p2 = 9x^4 forces "
        "3/2 x^4, as does the direct weight sum";
    r["p1"] = p1.str();
    r["p2"] = p2.str();

    nlohmann::ordered_json relations;
    relations["four_p2_eq_p1sq"] = p2.scaled(4) == p1sq;
    relations["ch_comparison_consistent"] =
        ch == GradedPoly::constant(8) + p1 + (p1sq - p2.scaled(2)).scaled(rat(1, 12));
    // 8e = 4 p2 - p1^2 = 0 exactly, so the Euler class vanishes.
    relations["euler_zero"] = (p2.scaled(4) - p1sq).is_zero();
    relations["divisibility"] = divisibility_bound();
    r["relations"] = std::move(relations);

    nlohmann::ordered_json genera;
    genera["L"] = genus_eval(GenusKind::L, p1, p2).str();
    genera["Ahat"] = genus_eval(GenusKind::Ahat, p1, p2).str();
    genera["Todd"] = genus_eval(GenusKind::Todd, p1, p2).str();
    // Under 4 p2 = p1^2 the top terms collapse to multiples of p1^2.
    genera["sigma_times_60_eq_p1sq"] =
        genus_eval(GenusKind::L, p1, p2).coeff(4) * 60 == p1sq.coeff(4);
    genera["Ahat2_times_960_eq_p1sq"] =
        genus_eval(GenusKind::Ahat, p1, p2).coeff(4) * 960 == p1sq.coeff(4);
    r["genera"] = std::move(genera);
    return r;
}

}  // namespace so3x8::charclass
