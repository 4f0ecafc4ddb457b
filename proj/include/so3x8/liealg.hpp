#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "so3x8/linalg.hpp"
#include "so3x8/repring.hpp"

namespace so3x8::liealg {

using linalg::Echelon;
using linalg::RatMatrix;

// ---------------------------------------------------------------------------
// so(8) coordinates
//
// so(8) is modeled as the antisymmetric 8x8 rational matrices.  The fixed
// basis is E_{ab} = e_a e_b^T - e_b e_a^T for 1 <= a < b <= 8 in
// lexicographic order, giving a 28-dimensional coordinate space.  In this
// basis the negative trace form -tr(XY) is 2 * (coordinate dot product), so
// orthogonality decisions reduce to plain dot products.
// ---------------------------------------------------------------------------

inline constexpr int so8_dim = 28;

/// Index of the pair (a, b), 0 <= a < b < 8, in lexicographic order.
int pair_index(int a, int b);
std::pair<int, int> index_pair(int idx);

/// Antisymmetric 8x8 matrix -> 28 coordinates (throws if not antisymmetric).
std::vector<Rat> so8_coords(const RatMatrix& x);
RatMatrix so8_matrix(const std::vector<Rat>& coords);

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A subspace of a fixed-dimension coordinate space, held as a canonical
/// reduced row-echelon basis so that equality is literal row comparison.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : m_basis(0, ambient) {}

    /// Canonicalize arbitrary spanning rows.
    static Subspace span(const RatMatrix& rows);
    static Subspace zero(int ambient) { return Subspace(ambient); }
    static Subspace full(int ambient) { return span(RatMatrix::identity(ambient)); }

    int ambient() const { return m_basis.cols(); }
    int dim() const { return m_basis.rows(); }
    const RatMatrix& basis() const { return m_basis; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return m_basis == o.m_basis; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Cached echelon with transform for membership coordinates.
    const Echelon& reduction() const;

private:
    RatMatrix m_basis;  // canonical RREF rows
    mutable bool m_have_reduction = false;
    mutable Echelon m_reduction;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);
/// Complement w.r.t. the trace form (equivalently the coordinate dot product).
Subspace orth_complement(const Subspace& a);
/// Exact certificate that `whole` is the direct sum of `parts`.
bool direct_sum_equals(const Subspace& whole, const std::vector<Subspace>& parts);

// ---------------------------------------------------------------------------
// The frozen reference model of R^8
//
// R^8 is realized as the adjoint module of the compact rank-2 special unitary
// algebra, split along its Cartan-type decomposition: a vector is a pair
// (A, S) with A real antisymmetric 3x3 (the V block, 3 dimensions) and S real
// symmetric traceless 3x3 (the W block, 5 dimensions), with bracket
///   [(A,S), (A',S')] = ([A,A'] - 3[S,S'],  [A,S'] - [A',S])
// and invariant inner product  <(A,S),(A',S')> = -tr(AA')/2 + (3/2) tr(SS').
// The scaling (the 1/2 and the 3) is exactly what makes an orthonormal basis
// with purely rational matrix entries possible; the basis below is frozen and
// its Gram matrix is the identity.
// ---------------------------------------------------------------------------

struct ModelElement {
    RatMatrix antisym;  // 3x3 antisymmetric
    RatMatrix sym;      // 3x3 symmetric traceless
};

ModelElement model_bracket(const ModelElement& x, const ModelElement& y);
Rat model_inner(const ModelElement& x, const ModelElement& y);

struct ReferenceBasis {
    std::array<ModelElement, 8> vectors;  // 0..2 span V, 3..7 span W
    RatMatrix gram() const;               // must be the 8x8 identity
};

/// Built once on first use; read-only afterwards.
const ReferenceBasis& reference_basis();

/// 8x8 matrix of ad(x) on the model in the reference basis (antisymmetric).
RatMatrix ad_matrix(const ModelElement& x);

/// Generators of the principal so(3) subalgebra g, scaled so that
/// [E1,E2] = 2E3 cyclically; the defining 3-dim module V then has Casimir
/// eigenvalue -8 = -n(n+2) at n = 2.
const std::array<RatMatrix, 3>& g_generators();

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

enum class AlgebraKind { g, so3so5, su3, sp2sp1 };

std::string kind_name(AlgebraKind k);
AlgebraKind kind_from_name(const std::string& name);

struct AlgebraModel {
    std::string name;
    Subspace space;  // ambient 28
    bool bracket_closed = false;
    bool contains_g = false;
};

/// Construct one of the four distinguished subalgebras of so(8).
///   g       : image of the principal so(3)            (dim 3)
///   so3so5  : block algebra preserving V and W        (dim 3 + 10)
///   su3     : full adjoint image of the model algebra (dim 8)
///   sp2sp1  : stabilizer of the invariant 4-form found by the pencil scan
///             (dim 13)
AlgebraModel build_algebra(AlgebraKind kind);

/// Cached copies (construction is deterministic; sp2sp1 runs the form pencil).
const AlgebraModel& algebra(AlgebraKind kind);

Subspace g_space();
Subspace so8_space();

bool is_bracket_closed(const Subspace& s);
/// Positive definiteness of -tr(XY) on the subalgebra (compactness witness).
bool trace_form_negative_definite(const Subspace& s);

// ---------------------------------------------------------------------------
// Casimir isotype analysis
// ---------------------------------------------------------------------------

/// Given the action matrices of the three g-generators on a d-dimensional
/// space, return the isotype multiplicities.  Requires the normalization
/// [rho1,rho2] = 2 rho3 (cyclically); each S^n multiplicity is
/// dim ker(C + n(n+2) I) / (n+1) with C = sum rho_i^2, and the kernels must
/// exhaust the space exactly or a std::logic_error is thrown.
repring::VirtualRep casimir_isotypes(const std::array<RatMatrix, 3>& action);

/// The kernel of (C + n(n+2) I) itself, as a subspace of the action space.
Subspace casimir_isotype_component(const std::array<RatMatrix, 3>& action, int n);

/// The three 28x28 matrices of ad(E_i) acting on so(8) coordinates.
const std::array<RatMatrix, 3>& g_adjoint_on_so8();

/// Action matrices of the three generators on an ambient coordinate space,
/// restricted to an invariant subspace and written in the coordinates of the
/// subspace basis.  Throws if the subspace is not invariant.
std::array<RatMatrix, 3> restricted_action(const Subspace& u,
                                           const std::array<RatMatrix, 3>& action);

/// Adjoint action of the g-generators on so(8), restricted to an invariant
/// subspace, written in the coordinates of the subspace basis.  Throws if the
/// subspace is not invariant.
std::array<RatMatrix, 3> restricted_adjoint_action(const Subspace& u);

/// Isotypes of a g-invariant subspace of so(8) under the adjoint action.
repring::VirtualRep subspace_isotypes(const Subspace& u);

/// Trace-form complement of g inside a larger algebra containing it
/// (the concrete model of big/g).
Subspace quotient_complement(const AlgebraModel& big);
repring::VirtualRep quotient_isotypes(const AlgebraModel& big);

/// Ideal decomposition: closure of the top Casimir isotype under bracketing
/// plus its centralizer.  Returns the ideal dimensions sorted descending;
/// for the 13-dimensional stabilizers this is {10, 3}.
std::vector<int> ideal_dims(const AlgebraModel& a);

// ---------------------------------------------------------------------------
// Theorem-level verification reports
// ---------------------------------------------------------------------------

/// All three pairwise intersections of {so3so5, su3, sp2sp1} are span-equal
/// to g (and so is the triple intersection).  The report carries one entry
/// per pair plus an overall "ok".
nlohmann::ordered_json verify_intersection_theorem();

/// The trace-form complement identities: for each algebra the complement in
/// so(8) is the direct sum of the other two quotients mod g, and the
/// complement of g itself is the direct sum of all three (25 = 10 + 5 + 10).
nlohmann::ordered_json verify_complement_theorem();

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// {"ambient": 28, "basis": [ 8x8 matrix as rows of "p/q" strings, ... ]}
/// (for ambient 28 the basis vectors are rendered as the antisymmetric
/// matrices they represent; other ambients use flat coordinate rows).
nlohmann::ordered_json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

/// {"name":..., "dim":..., "contains_g":..., "bracket_closed":...}
nlohmann::ordered_json algebra_report_json(const AlgebraModel& a);

}  // namespace so3x8::liealg
