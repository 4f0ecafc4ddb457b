#include "so3x8/exforms.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace so3x8::exforms {

// ---------------------------------------------------------------------------
// Subset tables
// ---------------------------------------------------------------------------

namespace {

constexpr int kAmbient = 8;

unsigned subset_mask(const std::vector<int>& s) {
    unsigned m = 0;
    for (int i : s) m |= 1u << i;
    return m;
}

struct SubsetTables {
    std::array<std::vector<std::vector<int>>, 9> lists;  // lists[k] = k-subsets, lex
    std::array<std::array<int, 256>, 9> rank_of_mask;    // -1 where undefined

    SubsetTables() {
        for (auto& tbl : rank_of_mask) tbl.fill(-1);
        for (int k = 0; k <= kAmbient; ++k) {
            std::vector<int> cur(k);
            for (int i = 0; i < k; ++i) cur[i] = i;
            for (;;) {
                rank_of_mask[k][subset_mask(cur)] =
                    static_cast<int>(lists[k].size());
                lists[k].push_back(cur);
                // Advance to the next k-subset in lexicographic order.
                int i = k - 1;
                while (i >= 0 && cur[i] == kAmbient - k + i) --i;
                if (i < 0) break;
                ++cur[i];
                for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
            }
        }
    }
};

const SubsetTables& tables() {
    static const SubsetTables t;
    return t;
}

int rank_of_mask(int k, unsigned mask) {
    const int r = tables().rank_of_mask[k][mask];
    if (r < 0) throw std::logic_error("invalid subset mask");
    return r;
}

int v_count(const std::vector<int>& subset) {
    int c = 0;
    for (int i : subset)
        if (i < 3) ++c;
    return c;
}

/// Inversion parity between two disjoint increasing index lists: the sign of
/// sorting the concatenation (a, b).
int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
    int inv = 0;
    for (int i : a)
        for (int j : b)
            if (i > j) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

const std::vector<std::vector<int>>& subsets(int k) {
    if (k < 0 || k > kAmbient) throw std::invalid_argument("degree out of range");
    return tables().lists[k];
}

int subset_rank(int k, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != k)
        throw std::invalid_argument("subset size does not match degree");
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= kAmbient)
            throw std::invalid_argument("subset index out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("subset must be strictly increasing");
    }
    return rank_of_mask(k, subset_mask(s));
}

// ---------------------------------------------------------------------------
// KForm
// ---------------------------------------------------------------------------

KForm::KForm(int degree) : m_degree(degree) {
    if (degree < 0 || degree > kAmbient)
        throw std::invalid_argument("form degree out of range");
    m_coeffs.assign(binomial(kAmbient, degree), Rat(0));
}

Rat KForm::coeff_on(const std::vector<int>& subset) const {
    return m_coeffs[subset_rank(m_degree, subset)];
}

void KForm::set_coeff_on(const std::vector<int>& subset, const Rat& v) {
    m_coeffs[subset_rank(m_degree, subset)] = v;
}

bool KForm::is_zero() const {
    for (const Rat& c : m_coeffs)
        if (c != 0) return false;
    return true;
}

KForm KForm::operator+(const KForm& o) const {
    if (m_degree != o.m_degree) throw std::invalid_argument("form degree mismatch");
    KForm out(m_degree);
    for (size_t i = 0; i < m_coeffs.size(); ++i)
        out.m_coeffs[i] = m_coeffs[i] + o.m_coeffs[i];
    return out;
}

KForm KForm::operator-(const KForm& o) const {
    if (m_degree != o.m_degree) throw std::invalid_argument("form degree mismatch");
    KForm out(m_degree);
    for (size_t i = 0; i < m_coeffs.size(); ++i)
        out.m_coeffs[i] = m_coeffs[i] - o.m_coeffs[i];
    return out;
}

KForm KForm::scaled(const Rat& s) const {
    KForm out(m_degree);
    for (size_t i = 0; i < m_coeffs.size(); ++i) out.m_coeffs[i] = m_coeffs[i] * s;
    return out;
}

Rat KForm::inner(const KForm& o) const {
    if (m_degree != o.m_degree) throw std::invalid_argument("form degree mismatch");
    Rat s = 0;
    for (size_t i = 0; i < m_coeffs.size(); ++i) s += m_coeffs[i] * o.m_coeffs[i];
    return s;
}

KForm wedge(const KForm& a, const KForm& b) {
    const int p = a.degree(), q = b.degree();
    if (p + q > kAmbient)
        throw std::invalid_argument("wedge degree exceeds the ambient dimension");
    KForm out(p + q);
    const auto& sa = subsets(p);
    const auto& sb = subsets(q);
    for (size_t ra = 0; ra < sa.size(); ++ra) {
        const Rat& ca = a.coeff(static_cast<int>(ra));
        if (ca == 0) continue;
        const unsigned ma = subset_mask(sa[ra]);
        for (size_t rb = 0; rb < sb.size(); ++rb) {
            const Rat& cb = b.coeff(static_cast<int>(rb));
            if (cb == 0) continue;
            const unsigned mb = subset_mask(sb[rb]);
            if (ma & mb) continue;
            const int sign = merge_sign(sa[ra], sb[rb]);
            out.coeff(rank_of_mask(p + q, ma | mb)) += Rat(sign) * ca * cb;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// so(8)-action
// ---------------------------------------------------------------------------

RatMatrix lie_action(const RatMatrix& x, int k) {
    if (x.rows() != 8 || x.cols() != 8)
        throw std::invalid_argument("so(8) element must be 8x8");
    if (k < 0 || k > kAmbient) throw std::invalid_argument("degree out of range");
    const auto& subs = subsets(k);
    const int d = static_cast<int>(subs.size());
    RatMatrix a(d, d);
    for (int r = 0; r < d; ++r) {
        const std::vector<int>& set = subs[r];
        const unsigned mask = subset_mask(set);
        for (int t = 0; t < k; ++t) {
            const int it = set[t];
            // Dual action on one-forms: e^i -> -sum_j X_{ij} e^j.
            for (int j = 0; j < 8; ++j) {
                const Rat c = -x.at(it, j);
                if (c == 0) continue;
                if (j == it) {
                    a.at(r, r) += c;
                    continue;
                }
                if (mask & (1u << j)) continue;  // repeated factor wedges to zero
                int pos = 0;
                for (int u : set)
                    if (u != it && u < j) ++pos;
                const int sign = ((t + pos) % 2 == 0) ? 1 : -1;
                const unsigned newmask = (mask ^ (1u << it)) | (1u << j);
                a.at(rank_of_mask(k, newmask), r) += Rat(sign) * c;
            }
        }
    }
    return a;
}

KForm lie_action(const RatMatrix& x, const KForm& f) {
    const RatMatrix a = lie_action(x, f.degree());
    KForm out(f.degree());
    for (int i = 0; i < f.basis_size(); ++i) {
        Rat s = 0;
        for (int j = 0; j < f.basis_size(); ++j) {
            const Rat& aij = a.at(i, j);
            if (aij != 0) s += aij * f.coeff(j);
        }
        out.coeff(i) = s;
    }
    return out;
}

const RatMatrix& generator_action(int i, int k) {
    if (i < 0 || i > 2) throw std::invalid_argument("generator index out of range");
    if (k < 0 || k > kAmbient) throw std::invalid_argument("degree out of range");
    static const std::array<std::vector<RatMatrix>, 3> cache = [] {
        std::array<std::vector<RatMatrix>, 3> c;
        for (int g = 0; g < 3; ++g) {
            c[g].reserve(9);
            for (int deg = 0; deg <= kAmbient; ++deg)
                c[g].push_back(lie_action(liealg::g_generators()[g], deg));
        }
        return c;
    }();
    return cache[i][k];
}

liealg::Subspace invariant_subspace(int k) {
    if (k < 0 || k > kAmbient) throw std::invalid_argument("degree out of range");
    static std::map<int, liealg::Subspace> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    RatMatrix stacked = RatMatrix::row_stack(
        RatMatrix::row_stack(generator_action(0, k), generator_action(1, k)),
        generator_action(2, k));
    const RatMatrix null_rows = linalg::kernel(stacked);
    liealg::Subspace s = null_rows.rows() == 0
                             ? liealg::Subspace(binomial(kAmbient, k))
                             : liealg::Subspace::span(null_rows);
    cache.emplace(k, s);
    return cache.at(k);
}

// ---------------------------------------------------------------------------
// Hodge star
// ---------------------------------------------------------------------------

KForm hodge_star(const KForm& f) {
    const int k = f.degree();
    const auto& subs = subsets(k);
    KForm out(kAmbient - k);
    for (size_t r = 0; r < subs.size(); ++r) {
        const Rat& c = f.coeff(static_cast<int>(r));
        if (c == 0) continue;
        const unsigned mask = subset_mask(subs[r]);
        const unsigned comp = (~mask) & 0xFFu;
        std::vector<int> compl_set;
        compl_set.reserve(kAmbient - k);
        for (int i = 0; i < 8; ++i)
            if (comp & (1u << i)) compl_set.push_back(i);
        const int sign = merge_sign(subs[r], compl_set);
        out.coeff(rank_of_mask(kAmbient - k, comp)) += Rat(sign) * c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Stabilizers
// ---------------------------------------------------------------------------

namespace {

/// Cached action matrices of the 28 so(8) basis elements E_{ab} on degree k.
const std::vector<RatMatrix>& basis_actions(int k) {
    static std::map<int, std::vector<RatMatrix>> cache;
    auto it = cache.find(k);
    if (it == cache.end()) {
        std::vector<RatMatrix> mats;
        mats.reserve(liealg::so8_dim);
        for (int p = 0; p < liealg::so8_dim; ++p) {
            std::vector<Rat> unit(liealg::so8_dim);
            unit[p] = 1;
            mats.push_back(lie_action(liealg::so8_matrix(unit), k));
        }
        it = cache.emplace(k, std::move(mats)).first;
    }
    return it->second;
}

/// D x 28 matrix whose p-th column is (action of E_p) applied to f.
RatMatrix stabilizer_columns(const KForm& f) {
    const int k = f.degree();
    const int d = f.basis_size();
    const auto& mats = basis_actions(k);
    RatMatrix m(d, liealg::so8_dim);
    for (int p = 0; p < liealg::so8_dim; ++p)
        for (int i = 0; i < d; ++i) {
            Rat s = 0;
            for (int j = 0; j < d; ++j) {
                const Rat& a = mats[p].at(i, j);
                if (a != 0) s += a * f.coeff(j);
            }
            m.at(i, p) = s;
        }
    return m;
}

}  // namespace

liealg::Subspace stabilizer(const KForm& f) {
    const RatMatrix m = stabilizer_columns(f);
    const RatMatrix null_rows = linalg::kernel(m);
    return null_rows.rows() == 0 ? liealg::Subspace(liealg::so8_dim)
                                 : liealg::Subspace::span(null_rows);
}

// ---------------------------------------------------------------------------
// Named invariant forms
// ---------------------------------------------------------------------------

namespace {

/// Primitive integer scaling with positive first nonzero coefficient.
std::vector<Rat> normalize_primitive(const std::vector<Rat>& v) {
    Int den_lcm = 1;
    for (const Rat& c : v) den_lcm = lcm(den_lcm, c.get_den());
    Int num_gcd = 0;
    for (const Rat& c : v) num_gcd = gcd(num_gcd, Int(c.get_num() * den_lcm / c.get_den()));
    if (num_gcd == 0) throw std::invalid_argument("cannot normalize the zero vector");
    std::vector<Rat> out(v.size());
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    int first = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i] * scale;
        if (first < 0 && out[i] != 0) first = static_cast<int>(i);
    }
    if (out[first] < 0)
        for (Rat& c : out) c = -c;
    return out;
}

/// The unique (up to scale) vector of inv supported where `keep` holds;
/// extracted exactly and normalized to a primitive integer vector.
KForm extract_supported(const liealg::Subspace& inv, int degree,
                        bool (*keep)(const std::vector<int>&)) {
    const auto& subs = subsets(degree);
    const int d = static_cast<int>(subs.size());
    int allowed = 0;
    for (const auto& s : subs)
        if (keep(s)) ++allowed;
    RatMatrix span_rows(allowed, d);
    int r = 0;
    for (int i = 0; i < d; ++i)
        if (keep(subs[i])) span_rows.at(r++, i) = 1;
    const RatMatrix rows = linalg::intersect_row_spaces(inv.basis(), span_rows);
    if (rows.rows() != 1)
        throw std::logic_error("support criterion failed to isolate a unique form");
    const std::vector<Rat> primitive = normalize_primitive(rows.row(0));
    KForm f(degree);
    for (int i = 0; i < d; ++i) f.coeff(i) = primitive[i];
    return f;
}

}  // namespace

const InvariantForms& locate_invariant_forms() {
    static const InvariantForms forms = [] {
        InvariantForms out;
        const liealg::Subspace inv3 = invariant_subspace(3);
        const liealg::Subspace inv4 = invariant_subspace(4);
        if (inv3.dim() != 2 || inv4.dim() != 2)
            throw std::logic_error("invariant spaces in degrees 3 and 4 must be 2-dim");

        out.alpha = extract_supported(inv3, 3, [](const std::vector<int>& s) {
            return v_count(s) == 3;
        });
        out.beta = extract_supported(inv3, 3, [](const std::vector<int>& s) {
            return v_count(s) < 3;
        });
        out.gamma = extract_supported(inv4, 4, [](const std::vector<int>& s) {
            return v_count(s) != 1;
        });
        const KForm anti = extract_supported(inv4, 4, [](const std::vector<int>& s) {
            return v_count(s) != 2;
        });

        // Sanity of the support split: beta is purely V x W^2, gamma purely
        // V^2 x W^2, the remaining invariant purely V x W^3.
        const auto pure = [](const KForm& f, int vc) {
            const auto& subs = subsets(f.degree());
            for (size_t i = 0; i < subs.size(); ++i)
                if (f.coeff(static_cast<int>(i)) != 0 && v_count(subs[i]) != vc)
                    return false;
            return true;
        };
        if (!pure(out.beta, 1) || !pure(out.gamma, 2) || !pure(anti, 1))
            throw std::logic_error("invariant forms have unexpected multidegree support");

        // The starred forms inherit scale and sign through the Hodge star;
        // the star of gamma must agree with the support-extracted invariant
        // up to sign.
        out.star_gamma = hodge_star(out.gamma);
        if (out.star_gamma != anti && out.star_gamma != anti.scaled(Rat(-1)))
            throw std::logic_error("star of gamma is not the complementary invariant");
        out.star_alpha = hodge_star(out.alpha);
        out.star_beta = hodge_star(out.beta);
        return out;
    }();
    return forms;
}

const KForm& named_form(NamedForm which) {
    const InvariantForms& f = locate_invariant_forms();
    switch (which) {
        case NamedForm::alpha: return f.alpha;
        case NamedForm::beta: return f.beta;
        case NamedForm::gamma: return f.gamma;
        case NamedForm::star_gamma: return f.star_gamma;
        case NamedForm::star_alpha: return f.star_alpha;
        case NamedForm::star_beta: return f.star_beta;
    }
    throw std::invalid_argument("unknown named form");
}

std::string named_form_name(NamedForm which) {
    switch (which) {
        case NamedForm::alpha: return "alpha";
        case NamedForm::beta: return "beta";
        case NamedForm::gamma: return "gamma";
        case NamedForm::star_gamma: return "star_gamma";
        case NamedForm::star_alpha: return "star_alpha";
        case NamedForm::star_beta: return "star_beta";
    }
    throw std::invalid_argument("unknown named form");
}

// ---------------------------------------------------------------------------
// Pencil scan
// ---------------------------------------------------------------------------

PencilScanResult pencil_scan(const FormPencil& p) {
    if (p.first.degree() != p.second.degree())
        throw std::invalid_argument("pencil forms must have equal degree");
    if (p.resolution < 1) throw std::invalid_argument("resolution must be >= 1");
    {
        RatMatrix two(2, p.first.basis_size());
        for (int i = 0; i < p.first.basis_size(); ++i) {
            two.at(0, i) = p.first.coeff(i);
            two.at(1, i) = p.second.coeff(i);
        }
        if (linalg::rank(two) != 2)
            throw std::invalid_argument("pencil forms must be linearly independent");
    }

    const RatMatrix m1 = stabilizer_columns(p.first);
    const RatMatrix m2 = stabilizer_columns(p.second);

    std::set<Rat> slopes;
    for (int den = 1; den <= p.resolution; ++den)
        for (int num = -p.resolution; num <= p.resolution; ++num)
            slopes.insert(rat(num, den));
    slopes.insert(Rat(1));
    slopes.insert(Rat(-1));

    PencilScanResult res;
    for (const Rat& s : slopes) {
        const RatMatrix m =
            m1.scaled(Rat(s.get_den())) + m2.scaled(Rat(s.get_num()));
        PencilRay ray;
        ray.slope = s;
        ray.stabilizer_dim = liealg::so8_dim - linalg::rank(m);
        res.rays.push_back(ray);
    }
    PencilRay inf;
    inf.at_infinity = true;
    inf.stabilizer_dim = liealg::so8_dim - linalg::rank(m2);
    res.rays.push_back(inf);

    res.generic_dim = res.rays.front().stabilizer_dim;
    for (const PencilRay& r : res.rays)
        res.generic_dim = std::min(res.generic_dim, r.stabilizer_dim);
    for (PencilRay& r : res.rays) {
        r.jump = r.stabilizer_dim > res.generic_dim;
        if (r.jump) res.jumps.push_back(r);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

std::string subset_key(const std::vector<int>& s) {
    std::string key;
    for (int i : s) key += static_cast<char>('1' + i);
    return key;
}

std::string subset_monomial(const std::vector<int>& s) {
    if (s.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += '^';
        out += 'e';
        out += static_cast<char>('1' + s[i]);
    }
    return out;
}

}  // namespace

nlohmann::ordered_json form_to_json(const KForm& f) {
    nlohmann::ordered_json j;
    j["degree"] = f.degree();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    const auto& subs = subsets(f.degree());
    for (size_t i = 0; i < subs.size(); ++i) {
        const Rat& c = f.coeff(static_cast<int>(i));
        if (c != 0) coeffs[subset_key(subs[i])] = rat_str(c);
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

KForm form_from_json(const nlohmann::json& j) {
    const int degree = j.at("degree").get<int>();
    KForm f(degree);
    for (const auto& [key, value] : j.at("coeffs").items()) {
        if (static_cast<int>(key.size()) != degree)
            throw std::invalid_argument("coefficient key does not match degree");
        std::vector<int> s;
        s.reserve(key.size());
        for (char ch : key) {
            if (ch < '1' || ch > '8')
                throw std::invalid_argument("coefficient key digits must be 1..8");
            s.push_back(ch - '1');
        }
        f.set_coeff_on(s, rat_parse(value.get<std::string>()));
    }
    return f;
}

std::string form_pretty(const KForm& f) {
    std::string out;
    const auto& subs = subsets(f.degree());
    for (size_t i = 0; i < subs.size(); ++i) {
        const Rat& c = f.coeff(static_cast<int>(i));
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rat mag = negative ? Rat(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = subset_monomial(subs[i]);
        if (subs[i].empty())
            out += rat_str(mag);
        else if (mag == 1)
            out += mono;
        else
            out += rat_str(mag) + " " + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace so3x8::exforms
