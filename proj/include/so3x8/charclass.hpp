#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "so3x8/rational.hpp"

namespace so3x8::charclass {

// ---------------------------------------------------------------------------
// Truncated even cohomology ring Q[x]/(x^5), deg x = 2 (top degree 8)
// ---------------------------------------------------------------------------

class GradedPoly {
public:
    static constexpr int terms = 5;  // 1, x, x^2, x^3, x^4

    GradedPoly() = default;
    static GradedPoly constant(const Rat& c);
    static GradedPoly variable();  // x

    Rat& coeff(int k) { return m_c.at(k); }
    const Rat& coeff(int k) const { return m_c.at(k); }

    bool is_zero() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;  // truncates above x^4
    GradedPoly scaled(const Rat& s) const;
    GradedPoly pow(int n) const;
    bool operator==(const GradedPoly& o) const { return m_c == o.m_c; }
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    /// "8 + 6x^2 + 3x^4" (powers of x, ascending; "0" when zero).
    std::string str() const;

private:
    std::vector<Rat> m_c = std::vector<Rat>(terms);
};

// ---------------------------------------------------------------------------
// Formal sums of line-bundle weights (rationals; half-integers allowed)
// ---------------------------------------------------------------------------

class WeightBundle {
public:
    WeightBundle() = default;
    explicit WeightBundle(std::vector<Rat> weights);

    /// Comma-separated rationals, e.g. "2,-1,-1,0" or "3/2,-3/2".
    static WeightBundle parse(const std::string& csv);

    int rank() const { return static_cast<int>(m_weights.size()); }
    /// Weights in canonical (descending) order.
    const std::vector<Rat>& weights() const { return m_weights; }

    bool self_conjugate() const;  // multiset closed under negation
    WeightBundle conjugate() const;

    /// Direct sum: multiset union.
    WeightBundle operator+(const WeightBundle& o) const;
    /// Tensor product: all pairwise weight sums.
    WeightBundle tensor(const WeightBundle& o) const;

    bool operator==(const WeightBundle& o) const { return m_weights == o.m_weights; }
    bool operator!=(const WeightBundle& o) const { return !(*this == o); }

private:
    std::vector<Rat> m_weights;
};

/// Complexified tangent weights of the reference structure: {+-2, +-1, +-1, 0, 0}.
const WeightBundle& tangent_complexified();
/// Holomorphic tangent weights of the three basic almost complex structures.
const WeightBundle& holo_J();        // {2, -1, -1, 0}
const WeightBundle& holo_J_prime();  // {2, 1, 1, 0}
const WeightBundle& holo_J_second(); // {2, 1, -1, 0}

// ---------------------------------------------------------------------------
// Characteristic classes
// ---------------------------------------------------------------------------

/// Chern character sum e^{w x} truncated above x^4.
GradedPoly chern_character(const WeightBundle& b);

/// (p1, p2): elementary symmetric polynomials in the squared weights of the
/// positive half, attached to x^2 and x^4.  Throws std::invalid_argument if
/// the weight multiset is not self-conjugate.
std::pair<GradedPoly, GradedPoly> pontrjagin(const WeightBundle& b);

enum class GenusKind { L, Ahat, Todd };

/// Degree-2 polynomial genera in p1, p2:
///   L    = 1 + p1/3 + (7 p2 - p1^2)/45
///   Ahat = 1 - p1/24 + (7 p1^2 - 4 p2)/5760
///   Todd (of the complexification, vanishing odd Chern classes)
///        = 1 - p1/12 + (3 p1^2 - p2)/720
GradedPoly genus_eval(GenusKind which, const GradedPoly& p1, const GradedPoly& p2);

/// Chern data of a complexified bundle for the Todd expansion below.
struct ChernData {
    GradedPoly c1, c3, p1;
};

/// The Todd expansion in complexification data with the quaternionic
/// constraint 4 p2 = p1^2 substituted in top degree:
///   1 + c1/2 + (c1^2 - p1)/12 - c1 p1/24
///     - (c1^4 + 4 c1^2 p1 - 11/4 p1^2 - c1 c3)/720.
GradedPoly genus_eval(const ChernData& data);

/// Todd class from first principles: product of t/(1 - e^{-t}) over t = w x.
GradedPoly todd_product(const WeightBundle& b);

/// Integrality factor extracted from the Todd expansion: 4 * 720.
long long todd_divisibility_factor();
/// Integrality factor for the traceless-endomorphism geometry: 216.
long long psu3_divisibility_factor();
/// lcm of the two: 8640.
long long divisibility_bound();

/// Evaluates the three numeric relations a compatible structure must satisfy:
/// 8e + p1^2 - 4 p2 = 0; 4 p2 = p1^2; p1^2 in 8640 Z.  The first two force
/// e = 0.
nlohmann::ordered_json obstruction_check(long long e, long long p1sq, long long p2);

/// Classifies an almost complex structure by the weights of its holomorphic
/// tangent bundle: quaternionic iff the multiset equals {2, 1, 0, -1} (the
/// twistor structure) or its negation (the conjugate choice of the half
/// line bundle).  Throws std::invalid_argument unless j plus its conjugate
/// reassembles the complexified tangent weights.
nlohmann::ordered_json acs_classify(const WeightBundle& j);

/// Full report: ch, p1, p2, the relations, and the genera of the reference
/// structure.
nlohmann::ordered_json charclass_report();

}  // namespace so3x8::charclass
