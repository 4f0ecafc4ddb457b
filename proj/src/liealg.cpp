#include "so3x8/liealg.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "so3x8/exforms.hpp"

namespace so3x8::liealg {

// ---------------------------------------------------------------------------
// so(8) coordinates
// ---------------------------------------------------------------------------

int pair_index(int a, int b) {
    if (a < 0 || b <= a || b >= 8) throw std::invalid_argument("bad pair (a,b)");
    // Pairs (0,1),(0,2),...,(0,7),(1,2),... in lexicographic order.
    return a * 8 - a * (a + 1) / 2 + (b - a - 1);
}

std::pair<int, int> index_pair(int idx) {
    if (idx < 0 || idx >= so8_dim) throw std::invalid_argument("bad pair index");
    for (int a = 0; a < 8; ++a) {
        const int block = 7 - a;
        if (idx < block) return {a, a + 1 + idx};
        idx -= block;
    }
    throw std::logic_error("unreachable");
}

std::vector<Rat> so8_coords(const RatMatrix& x) {
    if (x.rows() != 8 || x.cols() != 8 || !x.is_antisymmetric())
        throw std::invalid_argument("so(8) element must be an antisymmetric 8x8 matrix");
    std::vector<Rat> v(so8_dim);
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) v[pair_index(a, b)] = x.at(a, b);
    return v;
}

RatMatrix so8_matrix(const std::vector<Rat>& coords) {
    if (static_cast<int>(coords.size()) != so8_dim)
        throw std::invalid_argument("so(8) coordinate vector must have 28 entries");
    RatMatrix x(8, 8);
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
            const Rat& c = coords[pair_index(a, b)];
            x.at(a, b) = c;
            x.at(b, a) = -c;
        }
    return x;
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

Subspace Subspace::span(const RatMatrix& rows) {
    Subspace s;
    s.m_basis = linalg::echelon(rows).rref;
    return s;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != ambient())
        throw std::invalid_argument("vector/ambient dimension mismatch");
    return linalg::in_row_span(reduction(), v);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient() != ambient())
        throw std::invalid_argument("subspace ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.m_basis.row(i))) return false;
    return true;
}

const Echelon& Subspace::reduction() const {
    if (!m_have_reduction) {
        m_reduction = linalg::echelon(m_basis, /*with_transform=*/true);
        m_have_reduction = true;
    }
    return m_reduction;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("subspace ambient mismatch");
    RatMatrix rows = linalg::intersect_row_spaces(a.basis(), b.basis());
    return rows.rows() == 0 ? Subspace(a.ambient()) : Subspace::span(rows);
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("subspace ambient mismatch");
    return Subspace::span(RatMatrix::row_stack(a.basis(), b.basis()));
}

Subspace orth_complement(const Subspace& a) {
    RatMatrix rows = linalg::orthogonal_complement_rows(a.basis());
    return rows.rows() == 0 ? Subspace(a.ambient()) : Subspace::span(rows);
}

bool direct_sum_equals(const Subspace& whole, const std::vector<Subspace>& parts) {
    int total = 0;
    Subspace acc(whole.ambient());
    for (const Subspace& p : parts) {
        total += p.dim();
        acc = join(acc, p);
    }
    return total == whole.dim() && acc == whole;
}

// ---------------------------------------------------------------------------
// The frozen reference model
// ---------------------------------------------------------------------------

namespace {

RatMatrix mat3(const int (&e)[3][3], const Rat& scale = Rat(1)) {
    RatMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(e[i][j]) * scale;
    return m;
}

}  // namespace

ModelElement model_bracket(const ModelElement& x, const ModelElement& y) {
    const RatMatrix a = RatMatrix::bracket(x.antisym, y.antisym) -
                        RatMatrix::bracket(x.sym, y.sym).scaled(Rat(3));
    const RatMatrix s = RatMatrix::bracket(x.antisym, y.sym) -
                        RatMatrix::bracket(y.antisym, x.sym);
    return ModelElement{a, s};
}

Rat model_inner(const ModelElement& x, const ModelElement& y) {
    const Rat ta = (x.antisym * y.antisym).trace();
    const Rat ts = (x.sym * y.sym).trace();
    return -ta / 2 + Rat(3) * ts / 2;
}

RatMatrix ReferenceBasis::gram() const {
    RatMatrix g(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g.at(i, j) = model_inner(vectors[i], vectors[j]);
    return g;
}

const ReferenceBasis& reference_basis() {
    static const ReferenceBasis rb = [] {
        ReferenceBasis b;
        const Rat third(1, 3);
        const RatMatrix zero(3, 3);

        const RatMatrix l1 = mat3({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}});
        const RatMatrix l2 = mat3({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}});
        const RatMatrix l3 = mat3({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}});

        const RatMatrix s1 = mat3({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}}, third);
        const RatMatrix s2 = mat3({{1, 0, 1}, {0, -1, 1}, {1, 1, 0}}, third);
        const RatMatrix s3 = mat3({{-1, 1, 0}, {1, 1, 1}, {0, 1, 0}}, third);
        const RatMatrix s4 = mat3({{-1, -1, 1}, {-1, 1, 0}, {1, 0, 0}}, third);
        const RatMatrix s5 = mat3({{0, 1, 1}, {1, 0, -1}, {1, -1, 0}}, third);

        b.vectors = {ModelElement{l1, zero}, ModelElement{l2, zero},
                     ModelElement{l3, zero}, ModelElement{zero, s1},
                     ModelElement{zero, s2}, ModelElement{zero, s3},
                     ModelElement{zero, s4}, ModelElement{zero, s5}};

        if (b.gram() != RatMatrix::identity(8))
            throw std::logic_error("reference basis failed to be orthonormal");
        // The antisymmetric parts satisfy [l1,l2]=l3 cyclically.
        for (int i = 0; i < 3; ++i) {
            const RatMatrix lhs = RatMatrix::bracket(b.vectors[i].antisym,
                                                     b.vectors[(i + 1) % 3].antisym);
            if (lhs != b.vectors[(i + 2) % 3].antisym)
                throw std::logic_error("reference V-basis bracket relations failed");
        }
        return b;
    }();
    return rb;
}

RatMatrix ad_matrix(const ModelElement& x) {
    const ReferenceBasis& rb = reference_basis();
    RatMatrix m(8, 8);
    for (int j = 0; j < 8; ++j) {
        const ModelElement bj = model_bracket(x, rb.vectors[j]);
        for (int i = 0; i < 8; ++i) m.at(i, j) = model_inner(bj, rb.vectors[i]);
    }
    if (!m.is_antisymmetric())
        throw std::logic_error("ad matrix of a model element must be antisymmetric");
    return m;
}

const std::array<RatMatrix, 3>& g_generators() {
    static const std::array<RatMatrix, 3> gens = [] {
        const ReferenceBasis& rb = reference_basis();
        std::array<RatMatrix, 3> e{RatMatrix(8, 8), RatMatrix(8, 8), RatMatrix(8, 8)};
        for (int i = 0; i < 3; ++i) {
            ModelElement x{rb.vectors[i].antisym.scaled(Rat(2)), RatMatrix(3, 3)};
            e[i] = ad_matrix(x);
        }
        for (int i = 0; i < 3; ++i)
            if (RatMatrix::bracket(e[i], e[(i + 1) % 3]) != e[(i + 2) % 3].scaled(Rat(2)))
                throw std::logic_error("generator normalization [E1,E2]=2E3 failed");
        // Casimir acts by -8 on the 3-dim block and -24 on the 5-dim block.
        RatMatrix c = e[0] * e[0] + e[1] * e[1] + e[2] * e[2];
        RatMatrix expected(8, 8);
        for (int i = 0; i < 8; ++i) expected.at(i, i) = (i < 3) ? Rat(-8) : Rat(-24);
        if (c != expected) throw std::logic_error("Casimir normalization check failed");
        return e;
    }();
    return gens;
}

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::g: return "g";
        case AlgebraKind::so3so5: return "so3so5";
        case AlgebraKind::su3: return "su3";
        case AlgebraKind::sp2sp1: return "sp2sp1";
    }
    throw std::invalid_argument("unknown algebra kind");
}

AlgebraKind kind_from_name(const std::string& name) {
    if (name == "g") return AlgebraKind::g;
    if (name == "so3so5") return AlgebraKind::so3so5;
    if (name == "su3") return AlgebraKind::su3;
    if (name == "sp2sp1") return AlgebraKind::sp2sp1;
    throw std::invalid_argument("unknown algebra name: " + name);
}

Subspace g_space() {
    static const Subspace s = [] {
        RatMatrix rows(3, so8_dim);
        for (int i = 0; i < 3; ++i) rows.set_row(i, so8_coords(g_generators()[i]));
        return Subspace::span(rows);
    }();
    return s;
}

Subspace so8_space() { return Subspace::full(so8_dim); }

AlgebraModel build_algebra(AlgebraKind kind) {
    AlgebraModel m;
    m.name = kind_name(kind);
    switch (kind) {
        case AlgebraKind::g: {
            m.space = g_space();
            break;
        }
        case AlgebraKind::so3so5: {
            // Block-diagonal antisymmetric matrices preserving the V/W split.
            RatMatrix rows(13, so8_dim);
            int r = 0;
            for (int a = 0; a < 8; ++a)
                for (int b = a + 1; b < 8; ++b)
                    if (b < 3 || a >= 3) {
                        std::vector<Rat> v(so8_dim);
                        v[pair_index(a, b)] = 1;
                        rows.set_row(r++, v);
                    }
            if (r != 13) throw std::logic_error("block algebra must have 13 basis pairs");
            m.space = Subspace::span(rows);
            break;
        }
        case AlgebraKind::su3: {
            const ReferenceBasis& rb = reference_basis();
            RatMatrix rows(8, so8_dim);
            for (int i = 0; i < 8; ++i)
                rows.set_row(i, so8_coords(ad_matrix(rb.vectors[i])));
            m.space = Subspace::span(rows);
            break;
        }
        case AlgebraKind::sp2sp1: {
            // Stabilizer of the distinguished self-dual 4-form gamma + *gamma.
            const exforms::KForm f =
                exforms::named_form(exforms::NamedForm::gamma) +
                exforms::named_form(exforms::NamedForm::star_gamma);
            m.space = exforms::stabilizer(f);
            break;
        }
    }
    static const std::map<AlgebraKind, int> expected_dim = {
        {AlgebraKind::g, 3},
        {AlgebraKind::so3so5, 13},
        {AlgebraKind::su3, 8},
        {AlgebraKind::sp2sp1, 13}};
    if (m.space.dim() != expected_dim.at(kind))
        throw std::logic_error("algebra " + m.name + " has unexpected dimension " +
                               std::to_string(m.space.dim()));
    m.bracket_closed = is_bracket_closed(m.space);
    m.contains_g = m.space.contains(g_space());
    if (!m.bracket_closed)
        throw std::logic_error("algebra " + m.name + " is not closed under brackets");
    if (!m.contains_g)
        throw std::logic_error("algebra " + m.name + " does not contain g");
    return m;
}

const AlgebraModel& algebra(AlgebraKind kind) {
    static std::map<AlgebraKind, AlgebraModel> cache;
    auto it = cache.find(kind);
    if (it == cache.end()) it = cache.emplace(kind, build_algebra(kind)).first;
    return it->second;
}

bool is_bracket_closed(const Subspace& s) {
    if (s.ambient() != so8_dim)
        throw std::invalid_argument("bracket closure is defined on so(8) subspaces");
    for (int i = 0; i < s.dim(); ++i) {
        const RatMatrix xi = so8_matrix(s.basis().row(i));
        for (int j = i + 1; j < s.dim(); ++j) {
            const RatMatrix xj = so8_matrix(s.basis().row(j));
            if (!s.contains(so8_coords(RatMatrix::bracket(xi, xj)))) return false;
        }
    }
    return true;
}

bool trace_form_negative_definite(const Subspace& s) {
    if (s.ambient() != so8_dim)
        throw std::invalid_argument("trace form is defined on so(8) subspaces");
    const int d = s.dim();
    RatMatrix g(d, d);
    std::vector<RatMatrix> mats;
    mats.reserve(d);
    for (int i = 0; i < d; ++i) mats.push_back(so8_matrix(s.basis().row(i)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g.at(i, j) = -(mats[i] * mats[j]).trace();
    // Sylvester: positive definite iff all leading principal minors are positive.
    for (int k = 1; k <= d; ++k) {
        RatMatrix minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = g.at(i, j);
        if (linalg::determinant(minor) <= 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Casimir isotype analysis
// ---------------------------------------------------------------------------

repring::VirtualRep casimir_isotypes(const std::array<RatMatrix, 3>& action) {
    const int d = action[0].rows();
    for (const RatMatrix& a : action)
        if (a.rows() != d || a.cols() != d)
            throw std::invalid_argument("action matrices must be square of equal size");
    for (int i = 0; i < 3; ++i)
        if (RatMatrix::bracket(action[i], action[(i + 1) % 3]) !=
            action[(i + 2) % 3].scaled(Rat(2)))
            throw std::invalid_argument(
                "action matrices must satisfy the normalization [r1,r2] = 2 r3");

    const RatMatrix c =
        action[0] * action[0] + action[1] * action[1] + action[2] * action[2];
    repring::VirtualRep out;
    int total = 0;
    // Kernels of C + n(n+2) for distinct n are independent, so the accumulated
    // dimension reaching d proves no further isotypes exist.  Even labels are
    // scanned first because the spaces of interest here are all even-typed.
    for (int parity : {0, 1}) {
        for (int n = parity; n < d && total < d; n += 2) {
            RatMatrix shifted = c;
            const Rat ev(static_cast<long>(n) * (n + 2));
            for (int i = 0; i < d; ++i) shifted.at(i, i) += ev;
            const RatMatrix k = linalg::kernel(shifted);
            if (k.rows() == 0) continue;
            if (k.rows() % (n + 1) != 0)
                throw std::logic_error("isotype dimension is not divisible by n+1");
            out.add(n, k.rows() / (n + 1));
            total += k.rows();
        }
        if (total == d) break;
    }
    if (total != d)
        throw std::logic_error("Casimir eigenvalues do not exhaust the space");
    return out;
}

Subspace casimir_isotype_component(const std::array<RatMatrix, 3>& action, int n) {
    const int d = action[0].rows();
    RatMatrix c = action[0] * action[0] + action[1] * action[1] + action[2] * action[2];
    const Rat ev(static_cast<long>(n) * (n + 2));
    for (int i = 0; i < d; ++i) c.at(i, i) += ev;
    const RatMatrix k = linalg::kernel(c);
    return k.rows() == 0 ? Subspace(d) : Subspace::span(k);
}

/// The three 28x28 matrices of ad(E_i) acting on so(8).
const std::array<RatMatrix, 3>& g_adjoint_on_so8() {
    static const std::array<RatMatrix, 3> ads = [] {
        std::array<RatMatrix, 3> a{RatMatrix(so8_dim, so8_dim),
                                   RatMatrix(so8_dim, so8_dim),
                                   RatMatrix(so8_dim, so8_dim)};
        for (int g = 0; g < 3; ++g) {
            const RatMatrix& e = g_generators()[g];
            for (int j = 0; j < so8_dim; ++j) {
                std::vector<Rat> unit(so8_dim);
                unit[j] = 1;
                const std::vector<Rat> w =
                    so8_coords(RatMatrix::bracket(e, so8_matrix(unit)));
                for (int i = 0; i < so8_dim; ++i) a[g].at(i, j) = w[i];
            }
        }
        return a;
    }();
    return ads;
}

std::array<RatMatrix, 3> restricted_action(const Subspace& u,
                                           const std::array<RatMatrix, 3>& action) {
    if (u.ambient() != action[0].rows())
        throw std::invalid_argument("restriction: ambient dimension mismatch");
    const int n = u.ambient();
    const int d = u.dim();
    std::array<RatMatrix, 3> rho{RatMatrix(d, d), RatMatrix(d, d), RatMatrix(d, d)};
    for (int g = 0; g < 3; ++g) {
        for (int j = 0; j < d; ++j) {
            std::vector<Rat> w(n);
            for (int i = 0; i < n; ++i) {
                Rat s = 0;
                for (int k = 0; k < n; ++k) {
                    const Rat& aik = action[g].at(i, k);
                    if (aik != 0) s += aik * u.basis().at(j, k);
                }
                w[i] = s;
            }
            std::vector<Rat> coords;
            if (!linalg::express_in_rows(u.reduction(), w, &coords))
                throw std::invalid_argument("subspace is not invariant under g");
            for (int l = 0; l < d; ++l) rho[g].at(l, j) = coords[l];
        }
    }
    return rho;
}

std::array<RatMatrix, 3> restricted_adjoint_action(const Subspace& u) {
    if (u.ambient() != so8_dim)
        throw std::invalid_argument("adjoint action restriction needs an so(8) subspace");
    return restricted_action(u, g_adjoint_on_so8());
}

repring::VirtualRep subspace_isotypes(const Subspace& u) {
    return casimir_isotypes(restricted_adjoint_action(u));
}

Subspace quotient_complement(const AlgebraModel& big) {
    if (!big.space.contains(g_space()))
        throw std::invalid_argument("algebra does not contain g");
    Subspace c = intersect(big.space, orth_complement(g_space()));
    if (c.dim() != big.space.dim() - 3)
        throw std::logic_error("trace-form complement of g has wrong dimension");
    return c;
}

repring::VirtualRep quotient_isotypes(const AlgebraModel& big) {
    return subspace_isotypes(quotient_complement(big));
}

namespace {

Subspace ideal_closure(const Subspace& alg, const Subspace& seed) {
    Subspace cur = seed;
    for (;;) {
        RatMatrix rows(cur.dim() * alg.dim(), so8_dim);
        int r = 0;
        for (int i = 0; i < cur.dim(); ++i) {
            const RatMatrix m = so8_matrix(cur.basis().row(i));
            for (int j = 0; j < alg.dim(); ++j) {
                const RatMatrix b = so8_matrix(alg.basis().row(j));
                rows.set_row(r++, so8_coords(RatMatrix::bracket(b, m)));
            }
        }
        const Subspace next = join(cur, Subspace::span(rows));
        if (next == cur) return cur;
        cur = next;
    }
}

Subspace centralizer_in(const Subspace& alg, const Subspace& part) {
    const int k = alg.dim(), p = part.dim();
    if (p == 0) return alg;
    RatMatrix con(k, so8_dim * p);
    for (int l = 0; l < k; ++l) {
        const RatMatrix bl = so8_matrix(alg.basis().row(l));
        for (int j = 0; j < p; ++j) {
            const RatMatrix mj = so8_matrix(part.basis().row(j));
            const std::vector<Rat> v = so8_coords(RatMatrix::bracket(bl, mj));
            for (int t = 0; t < so8_dim; ++t) con.at(l, so8_dim * j + t) = v[t];
        }
    }
    const RatMatrix alpha = linalg::kernel(con.transpose());
    if (alpha.rows() == 0) return Subspace(so8_dim);
    return Subspace::span(alpha * alg.basis());
}

}  // namespace

std::vector<int> ideal_dims(const AlgebraModel& a) {
    const auto action = restricted_adjoint_action(a.space);
    const repring::VirtualRep rep = casimir_isotypes(action);
    if (rep.terms().empty()) return {};
    const int top = rep.terms().begin()->first;

    Subspace local = casimir_isotype_component(action, top);
    const Subspace seed = Subspace::span(local.basis() * a.space.basis());
    const Subspace closure = ideal_closure(a.space, seed);

    if (closure == a.space) {
        // The top isotype generates everything; demand a trivial center as the
        // simplicity witness.
        if (centralizer_in(a.space, a.space).dim() != 0)
            throw std::logic_error("indecomposable algebra with nontrivial center");
        return {a.space.dim()};
    }

    const Subspace cent = centralizer_in(a.space, closure);
    if (!direct_sum_equals(a.space, {closure, cent}))
        throw std::logic_error("ideal and centralizer do not decompose the algebra");
    if (!is_bracket_closed(closure) || !is_bracket_closed(cent))
        throw std::logic_error("claimed ideals are not subalgebras");
    std::vector<int> dims = {closure.dim(), cent.dim()};
    if (dims[0] < dims[1]) std::swap(dims[0], dims[1]);
    return dims;
}

// ---------------------------------------------------------------------------
// Theorem-level verification reports
// ---------------------------------------------------------------------------

nlohmann::ordered_json verify_intersection_theorem() {
    const std::array<AlgebraKind, 3> kinds = {AlgebraKind::so3so5, AlgebraKind::su3,
                                              AlgebraKind::sp2sp1};
    nlohmann::ordered_json report;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    bool ok = true;
    Subspace triple = so8_space();
    for (int i = 0; i < 3; ++i) {
        triple = intersect(triple, algebra(kinds[i]).space);
        for (int j = i + 1; j < 3; ++j) {
            const AlgebraModel& a = algebra(kinds[i]);
            const AlgebraModel& b = algebra(kinds[j]);
            const Subspace inter = intersect(a.space, b.space);
            const bool equal = inter == g_space();
            ok = ok && equal;
            nlohmann::ordered_json entry;
            entry["first"] = a.name;
            entry["second"] = b.name;
            entry["dim"] = inter.dim();
            entry["equals_g"] = equal;
            pairs.push_back(std::move(entry));
        }
    }
    const bool triple_ok = triple == g_space();
    ok = ok && triple_ok;
    report["pairs"] = std::move(pairs);
    report["triple_equals_g"] = triple_ok;
    report["ok"] = ok;
    return report;
}

namespace {

// Orthogonal projector onto the row span of b (standard coordinate dot
// product; the invariant trace form is a positive multiple of it in so(8)
// coordinates, so angles and orthogonality agree).
RatMatrix row_span_projector(const RatMatrix& b) {
    const int r = b.rows();
    RatMatrix aug(r, 2 * r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            Rat s = 0;
            for (int k = 0; k < b.cols(); ++k) s += b.at(i, k) * b.at(j, k);
            aug.at(i, j) = s;
        }
        aug.at(i, r + i) = 1;
    }
    const linalg::Echelon ech = linalg::echelon(aug);
    RatMatrix ginv(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ginv.at(i, j) = ech.rref.at(i, r + j);
    return b.transpose() * (ginv * b);
}

// The isotype-n component of u, lifted back to ambient coordinates.
RatMatrix lifted_isotype_component(const Subspace& u, int n) {
    const Subspace c = casimir_isotype_component(restricted_adjoint_action(u), n);
    RatMatrix lifted(c.dim(), u.ambient());
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < u.dim(); ++j)
            for (int k = 0; k < u.ambient(); ++k)
                lifted.at(i, k) += c.basis().at(i, j) * u.basis().at(j, k);
    return lifted;
}

}  // namespace

nlohmann::ordered_json verify_complement_theorem() {
    const std::array<AlgebraKind, 3> kinds = {AlgebraKind::so3so5, AlgebraKind::su3,
                                              AlgebraKind::sp2sp1};
    std::array<Subspace, 3> quotients;
    for (int i = 0; i < 3; ++i) quotients[i] = quotient_complement(algebra(kinds[i]));

    nlohmann::ordered_json report;
    nlohmann::ordered_json assignments = nlohmann::ordered_json::array();
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const Subspace comp = orth_complement(algebra(kinds[i]).space);
        const Subspace sum = join(quotients[j], quotients[k]);
        const bool direct =
            sum.dim() == quotients[j].dim() + quotients[k].dim() &&
            intersect(quotients[j], quotients[k]).dim() == 0;
        const bool meets_third_trivially = intersect(sum, quotients[i]).dim() == 0;
        const bool isomorphic = subspace_isotypes(sum) == subspace_isotypes(comp);
        const bool exact = sum == comp;
        // The sum must be a direct sum isomorphic to the complement for every
        // assignment; exact subspace equality is additionally required where
        // Schur's lemma forces it (the su(3) assignment: its quotient is the
        // sole S^4 isotype, orthogonal to everything else).
        ok = ok && direct && meets_third_trivially && isomorphic &&
             sum.dim() == comp.dim();
        if (kinds[i] == AlgebraKind::su3) ok = ok && exact;
        nlohmann::ordered_json entry;
        entry["algebra"] = algebra(kinds[i]).name;
        entry["complement_dim"] = comp.dim();
        entry["parts"] = {algebra(kinds[j]).name + "/g", algebra(kinds[k]).name + "/g"};
        entry["part_dims"] = {quotients[j].dim(), quotients[k].dim()};
        entry["sum_direct"] = direct;
        entry["meets_third_trivially"] = meets_third_trivially;
        entry["isomorphic_to_complement"] = isomorphic;
        entry["equals_complement"] = exact;
        assignments.push_back(std::move(entry));
    }
    const Subspace g_perp = orth_complement(g_space());
    const bool g_split =
        direct_sum_equals(g_perp, {quotients[0], quotients[1], quotients[2]});
    ok = ok && g_split;

    // Witness of the threefold symmetry: inside each multiplicity plane the
    // so3so5/g and sp2sp1/g isotype lines meet at 60 degrees exactly
    // (cos^2 = 1/4), so their sum is isomorphic, but not perpendicular, to
    // the remaining complement.
    nlohmann::ordered_json angles = nlohmann::ordered_json::object();
    for (int n : {2, 6}) {
        const RatMatrix a = lifted_isotype_component(quotients[0], n);
        const RatMatrix b = lifted_isotype_component(quotients[2], n);
        const Rat trace = (row_span_projector(a) * row_span_projector(b)).trace();
        const Rat cos2 = trace / (n + 1);
        angles["S" + std::to_string(n)] = rat_str(cos2);
        ok = ok && cos2 == rat(1, 4);
    }

    report["assignments"] = std::move(assignments);
    report["g_perp_dim"] = g_perp.dim();
    report["g_perp_part_dims"] = {quotients[0].dim(), quotients[1].dim(),
                                  quotients[2].dim()};
    report["g_perp_splits"] = g_split;
    report["quotient_pair_cos2"] = std::move(angles);
    report["note"] =
        "the su3 assignment holds as an exact subspace identity; the other two "
        "sums are direct and module-isomorphic to the respective complements "
        "but meet them at the threefold-symmetry angle (cos^2 = 1/4), so the "
        "printed equality is an isomorphism there, not a subspace identity";
    report["ok"] = ok;
    return report;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

nlohmann::ordered_json subspace_to_json(const Subspace& s) {
    nlohmann::ordered_json j;
    j["ambient"] = s.ambient();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (int i = 0; i < s.dim(); ++i) {
        if (s.ambient() == so8_dim) {
            const RatMatrix m = so8_matrix(s.basis().row(i));
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int a = 0; a < 8; ++a) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int b = 0; b < 8; ++b) row.push_back(rat_str(m.at(a, b)));
                rows.push_back(std::move(row));
            }
            basis.push_back(std::move(rows));
        } else {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int t = 0; t < s.ambient(); ++t)
                row.push_back(rat_str(s.basis().at(i, t)));
            basis.push_back(std::move(row));
        }
    }
    j["basis"] = std::move(basis);
    return j;
}

Subspace subspace_from_json(const nlohmann::json& j) {
    const int ambient = j.at("ambient").get<int>();
    const auto& basis = j.at("basis");
    if (!basis.is_array()) throw std::invalid_argument("basis must be an array");
    RatMatrix rows(static_cast<int>(basis.size()), ambient);
    int r = 0;
    for (const auto& item : basis) {
        if (ambient == so8_dim) {
            RatMatrix m(8, 8);
            if (!item.is_array() || item.size() != 8)
                throw std::invalid_argument("so(8) basis entry must be an 8x8 matrix");
            for (int a = 0; a < 8; ++a) {
                const auto& row = item.at(a);
                if (!row.is_array() || row.size() != 8)
                    throw std::invalid_argument("so(8) basis entry must be an 8x8 matrix");
                for (int b = 0; b < 8; ++b)
                    m.at(a, b) = rat_parse(row.at(b).get<std::string>());
            }
            rows.set_row(r++, so8_coords(m));
        } else {
            if (!item.is_array() || static_cast<int>(item.size()) != ambient)
                throw std::invalid_argument("basis row length must match ambient");
            std::vector<Rat> v(ambient);
            for (int t = 0; t < ambient; ++t)
                v[t] = rat_parse(item.at(t).get<std::string>());
            rows.set_row(r++, v);
        }
    }
    return rows.rows() == 0 ? Subspace(ambient) : Subspace::span(rows);
}

nlohmann::ordered_json algebra_report_json(const AlgebraModel& a) {
    nlohmann::ordered_json j;
    j["name"] = a.name;
    j["dim"] = a.space.dim();
    j["contains_g"] = a.contains_g;
    j["bracket_closed"] = a.bracket_closed;
    return j;
}

}  // namespace so3x8::liealg
