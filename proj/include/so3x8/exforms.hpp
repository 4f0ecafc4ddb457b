#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "so3x8/liealg.hpp"
#include "so3x8/linalg.hpp"

namespace so3x8::exforms {

using linalg::RatMatrix;

// ---------------------------------------------------------------------------
// Lexicographic basis of Lambda^k(R^8)^*
// ---------------------------------------------------------------------------

int binomial(int n, int k);

/// All k-element subsets of {0..7} in lexicographic order.
const std::vector<std::vector<int>>& subsets(int k);

/// Rank of a strictly increasing k-subset in the lexicographic order.
int subset_rank(int k, const std::vector<int>& s);

/// Exterior form of fixed degree with exact rational coefficients over the
/// lexicographic basis e_{i1} ^ ... ^ e_{ik} of the frozen reference basis.
class KForm {
public:
    KForm() : KForm(0) {}
    explicit KForm(int degree);

    int degree() const { return m_degree; }
    int basis_size() const { return static_cast<int>(m_coeffs.size()); }

    Rat& coeff(int idx) { return m_coeffs.at(idx); }
    const Rat& coeff(int idx) const { return m_coeffs.at(idx); }
    Rat coeff_on(const std::vector<int>& subset) const;
    void set_coeff_on(const std::vector<int>& subset, const Rat& v);
    const std::vector<Rat>& coeffs() const { return m_coeffs; }

    bool is_zero() const;
    KForm operator+(const KForm& o) const;
    KForm operator-(const KForm& o) const;
    KForm scaled(const Rat& s) const;
    bool operator==(const KForm& o) const {
        return m_degree == o.m_degree && m_coeffs == o.m_coeffs;
    }
    bool operator!=(const KForm& o) const { return !(*this == o); }

    /// Induced inner product (the basis k-forms are orthonormal).
    Rat inner(const KForm& o) const;

private:
    int m_degree;
    std::vector<Rat> m_coeffs;
};

KForm wedge(const KForm& a, const KForm& b);

// ---------------------------------------------------------------------------
// so(8)-action and invariants
// ---------------------------------------------------------------------------

/// Matrix of the Lie-derivative action of X in so(8) on Lambda^k coefficients:
/// the degree-k derivation extending the dual action v -> -X^T v on 1-forms.
RatMatrix lie_action(const RatMatrix& x, int k);

/// Apply the action of X to a form directly.
KForm lie_action(const RatMatrix& x, const KForm& f);

/// Cached action matrix of the i-th frozen generator (i = 0,1,2) on degree k.
const RatMatrix& generator_action(int i, int k);

/// Simultaneous kernel of the three generator actions: the invariant forms of
/// degree k, as a subspace of the C(8,k)-dimensional coefficient space.
liealg::Subspace invariant_subspace(int k);

/// Hodge star for the reference metric and orientation e1 ^ ... ^ e8.
KForm hodge_star(const KForm& f);

/// Stabilizer subalgebra { X in so(8) : lie_action(X) f = 0 }.
liealg::Subspace stabilizer(const KForm& f);

// ---------------------------------------------------------------------------
// The named invariant forms
//
// alpha: the invariant 3-form supported on pure V trivectors; beta: the
// invariant 3-form whose pure-V component vanishes; gamma: the invariant
// 4-form whose (V x W^3) component vanishes; star_gamma, star_alpha,
// star_beta: Hodge duals.  alpha, beta, gamma are normalized to a primitive
// integer coefficient vector with positive first nonzero coefficient (a unit-
// norm scaling would leave the rationals); the starred forms inherit their
// scale and sign through the Hodge star.
// ---------------------------------------------------------------------------

enum class NamedForm { alpha, beta, gamma, star_gamma, star_alpha, star_beta };

struct InvariantForms {
    KForm alpha, beta, gamma, star_gamma, star_alpha, star_beta;
};

const InvariantForms& locate_invariant_forms();
const KForm& named_form(NamedForm which);
std::string named_form_name(NamedForm which);

// ---------------------------------------------------------------------------
// Pencil scan
// ---------------------------------------------------------------------------

/// A pencil of rays first + s * second (s rational) plus the ray at infinity.
struct FormPencil {
    KForm first, second;
    int resolution = 8;  // scan every reduced slope p/q with |p|, q <= resolution
};

struct PencilRay {
    bool at_infinity = false;
    Rat slope;  // meaningful when !at_infinity
    int stabilizer_dim = 0;
    bool jump = false;  // stabilizer dimension exceeds the generic value
};

struct PencilScanResult {
    std::vector<PencilRay> rays;  // slopes ascending, infinity last
    int generic_dim = 0;          // minimum stabilizer dimension over the scan
    std::vector<PencilRay> jumps;
};

/// Exact scan over the reduced rational slopes up to the pencil resolution
/// (the slopes +1 and -1 are always included).  Throws std::invalid_argument
/// if the two forms have different degrees or are linearly dependent.
PencilScanResult pencil_scan(const FormPencil& p);

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// {"degree": k, "coeffs": {"125": "p/q", ...}}; the key lists the 1-based
/// indices of the basis monomial e1 ^ e2 ^ e5.
nlohmann::ordered_json form_to_json(const KForm& f);
KForm form_from_json(const nlohmann::json& j);

/// Human-readable rendering, e.g. "e1^e2^e3 - 2 e4^e5^e6".
std::string form_pretty(const KForm& f);

}  // namespace so3x8::exforms
