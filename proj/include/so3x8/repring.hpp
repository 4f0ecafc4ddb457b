#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "so3x8/rational.hpp"

namespace so3x8::repring {

/// Reality type of the irreducible S^n of Sp(1)/SO(3).
enum class RealType { real, quaternionic };

/// A virtual representation: a finite integer combination of irreducibles
/// S^n (n >= 0, complex dimension n+1).  Multiplicities may be negative;
/// entries with multiplicity zero are never stored.
class VirtualRep {
public:
    using Terms = std::map<int, long long, std::greater<int>>;

    VirtualRep() = default;

    void add(int n, long long mult);
    long long multiplicity(int n) const;
    const Terms& terms() const { return m_terms; }
    bool zero() const { return m_terms.empty(); }
    /// True when every multiplicity is non-negative (a genuine representation).
    bool genuine() const;

    long long complex_dimension() const;
    /// Dimension of the underlying real module: n+1 for even n (real type),
    /// 2(n+1) for odd n (quaternionic type).
    long long real_form_dimension() const;

    VirtualRep& operator+=(const VirtualRep& o);
    VirtualRep operator+(const VirtualRep& o) const;
    VirtualRep& operator-=(const VirtualRep& o);
    VirtualRep operator-(const VirtualRep& o) const;

    bool operator==(const VirtualRep& o) const { return m_terms == o.m_terms; }
    bool operator!=(const VirtualRep& o) const { return !(*this == o); }

    /// Human-readable form, highest weight first: "2S6 + S4 + 3S2", "0" if empty.
    std::string str() const;

private:
    Terms m_terms;
};

/// Character as an integer Laurent polynomial in q; the coefficient of q^w is
/// the multiplicity of the weight w.  S^n has character sum_{k=0..n} q^{n-2k}.
class Character {
public:
    using Coeffs = std::map<int, long long>;

    Character() = default;

    void add(int weight, long long coeff);
    long long coefficient(int weight) const;
    const Coeffs& coefficients() const { return m_coeffs; }
    bool zero() const { return m_coeffs.empty(); }

    /// Invariant of any genuine or virtual character: symmetric under q -> 1/q.
    bool symmetric() const;
    /// Evaluation at q = 1: the (virtual) complex dimension.
    long long eval_at_one() const;

    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character operator*(const Character& o) const;
    bool operator==(const Character& o) const { return m_coeffs == o.m_coeffs; }
    bool operator!=(const Character& o) const { return !(*this == o); }

private:
    Coeffs m_coeffs;
};

/// S^n.  Throws std::invalid_argument for n < 0.
VirtualRep irreducible(int n);

RealType real_type(int n);

/// Clebsch-Gordan: S^n (x) S^m = S^{n+m} + S^{n+m-2} + ... + S^{|n-m|},
/// extended bilinearly to virtual representations.
VirtualRep tensor(const VirtualRep& a, const VirtualRep& b);

/// Adams operation: psi^m(chi)(q) = chi(q^m).
Character adams(const Character& c, int m);

/// Exterior power Lambda^k via Adams operations and Newton's identities.
/// Requires a genuine representation (non-negative multiplicities) and k >= 0.
/// Intermediate coefficients are exact rationals; a non-integral final
/// coefficient would indicate internal corruption and throws std::logic_error.
VirtualRep exterior_power(const VirtualRep& r, int k);

/// Symmetric power S^k via Adams operations and Newton's identities.
VirtualRep symmetric_power(const VirtualRep& r, int k);

Character to_character(const VirtualRep& r);

/// Greedy highest-weight peeling.  Requires a symmetric character; always
/// terminates, and reproduces the unique virtual decomposition.
VirtualRep decompose(const Character& c);

/// JSON form: {"S6": 2, "S4": 1, "S2": 3}, keys in descending n.
nlohmann::ordered_json to_json(const VirtualRep& r);
VirtualRep rep_from_json(const nlohmann::json& j);

/// Parse "2S6 + S4 + 3S2" (also accepts lowercase 's' and '-' signs).
VirtualRep parse_rep(std::string_view text);

/// Parse an integer Laurent polynomial such as "q^2 + 2 + q^-2" or "3q^4 - q^2".
Character parse_character(std::string_view text);

}  // namespace so3x8::repring
