#include "so3x8/repring.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace so3x8::repring {

namespace {

/// Laurent polynomial with exact rational coefficients; only used internally
/// by the Newton-identity recursions, whose intermediate terms carry 1/k
/// factors before everything collapses back to integers.
using RatLaurent = std::map<int, Rat>;

void rl_add(RatLaurent& p, int w, const Rat& c) {
    if (c == 0) return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

RatLaurent rl_mul(const RatLaurent& a, const RatLaurent& b) {
    RatLaurent out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) rl_add(out, wa + wb, ca * cb);
    return out;
}

RatLaurent rl_scale(const RatLaurent& a, const Rat& s) {
    RatLaurent out;
    for (const auto& [w, c] : a) rl_add(out, w, c * s);
    return out;
}

RatLaurent rl_from(const Character& c) {
    RatLaurent out;
    for (const auto& [w, k] : c.coefficients()) out.emplace(w, rat(k));
    return out;
}

RatLaurent rl_adams(const RatLaurent& p, int m) {
    RatLaurent out;
    for (const auto& [w, c] : p) rl_add(out, w * m, c);
    return out;
}

Character rl_to_character(const RatLaurent& p) {
    Character out;
    for (const auto& [w, c] : p) {
        if (!is_integer(c))
            throw std::logic_error(
                "plethysm produced a non-integral character coefficient");
        if (!c.get_num().fits_slong_p())
            throw std::logic_error("character coefficient overflow");
        out.add(w, c.get_num().get_si());
    }
    return out;
}

/// Shared Newton recursion.  exterior:  k e_k = sum (-1)^{m-1} e_{k-m} p_m;
/// symmetric: k h_k = sum h_{k-m} p_m,  with p_m the Adams images.
VirtualRep newton_power(const VirtualRep& r, int k, bool exterior) {
    if (k < 0) throw std::invalid_argument("negative plethysm degree");
    if (!r.genuine())
        throw std::invalid_argument(
            "plethysm requires non-negative multiplicities");
    if (k == 0) return irreducible(0);
    const long long dim = r.complex_dimension();
    if (exterior && k > dim) return VirtualRep{};

    const RatLaurent chi = rl_from(to_character(r));
    std::vector<RatLaurent> powers;  // powers[j] = e_j (or h_j)
    powers.push_back(RatLaurent{{0, rat(1)}});
    for (int j = 1; j <= k; ++j) {
        RatLaurent acc;
        for (int m = 1; m <= j; ++m) {
            RatLaurent term = rl_mul(powers[j - m], rl_adams(chi, m));
            const bool negate = exterior && (m % 2 == 0);
            for (const auto& [w, c] : term) rl_add(acc, w, negate ? Rat(-c) : c);
        }
        powers.push_back(rl_scale(acc, rat(1, j)));
    }
    return decompose(rl_to_character(powers[k]));
}

}  // namespace

void VirtualRep::add(int n, long long mult) {
    if (n < 0) throw std::invalid_argument("irreducible label must be >= 0");
    if (mult == 0) return;
    auto it = m_terms.find(n);
    if (it == m_terms.end()) {
        m_terms.emplace(n, mult);
    } else {
        it->second += mult;
        if (it->second == 0) m_terms.erase(it);
    }
}

long long VirtualRep::multiplicity(int n) const {
    auto it = m_terms.find(n);
    return it == m_terms.end() ? 0 : it->second;
}

bool VirtualRep::genuine() const {
    for (const auto& [n, m] : m_terms)
        if (m < 0) return false;
    return true;
}

long long VirtualRep::complex_dimension() const {
    long long d = 0;
    for (const auto& [n, m] : m_terms) d += m * (n + 1);
    return d;
}

long long VirtualRep::real_form_dimension() const {
    long long d = 0;
    for (const auto& [n, m] : m_terms)
        d += m * (real_type(n) == RealType::real ? n + 1 : 2 * (n + 1));
    return d;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
    for (const auto& [n, m] : o.m_terms) add(n, m);
    return *this;
}

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
    VirtualRep out = *this;
    out += o;
    return out;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
    for (const auto& [n, m] : o.m_terms) add(n, -m);
    return *this;
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const {
    VirtualRep out = *this;
    out -= o;
    return out;
}

std::string VirtualRep::str() const {
    if (m_terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, m] : m_terms) {
        long long mag = m < 0 ? -m : m;
        if (first) {
            if (m < 0) out += "-";
        } else {
            out += m < 0 ? " - " : " + ";
        }
        if (mag != 1) out += std::to_string(mag);
        out += "S" + std::to_string(n);
        first = false;
    }
    return out;
}

void Character::add(int weight, long long coeff) {
    if (coeff == 0) return;
    auto it = m_coeffs.find(weight);
    if (it == m_coeffs.end()) {
        m_coeffs.emplace(weight, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) m_coeffs.erase(it);
    }
}

long long Character::coefficient(int weight) const {
    auto it = m_coeffs.find(weight);
    return it == m_coeffs.end() ? 0 : it->second;
}

bool Character::symmetric() const {
    for (const auto& [w, c] : m_coeffs)
        if (coefficient(-w) != c) return false;
    return true;
}

long long Character::eval_at_one() const {
    long long s = 0;
    for (const auto& [w, c] : m_coeffs) s += c;
    return s;
}

Character Character::operator+(const Character& o) const {
    Character out = *this;
    for (const auto& [w, c] : o.m_coeffs) out.add(w, c);
    return out;
}

Character Character::operator-(const Character& o) const {
    Character out = *this;
    for (const auto& [w, c] : o.m_coeffs) out.add(w, -c);
    return out;
}

Character Character::operator*(const Character& o) const {
    Character out;
    for (const auto& [wa, ca] : m_coeffs)
        for (const auto& [wb, cb] : o.m_coeffs) out.add(wa + wb, ca * cb);
    return out;
}

VirtualRep irreducible(int n) {
    if (n < 0) throw std::invalid_argument("irreducible label must be >= 0");
    VirtualRep r;
    r.add(n, 1);
    return r;
}

RealType real_type(int n) {
    if (n < 0) throw std::invalid_argument("irreducible label must be >= 0");
    return n % 2 == 0 ? RealType::real : RealType::quaternionic;
}

VirtualRep tensor(const VirtualRep& a, const VirtualRep& b) {
    VirtualRep out;
    for (const auto& [n, mn] : a.terms())
        for (const auto& [m, mm] : b.terms()) {
            const int lo = n < m ? m - n : n - m;
            for (int j = n + m; j >= lo; j -= 2) out.add(j, mn * mm);
        }
    return out;
}

Character adams(const Character& c, int m) {
    if (m <= 0) throw std::invalid_argument("Adams degree must be positive");
    Character out;
    for (const auto& [w, k] : c.coefficients()) out.add(w * m, k);
    return out;
}

VirtualRep exterior_power(const VirtualRep& r, int k) {
    return newton_power(r, k, /*exterior=*/true);
}

VirtualRep symmetric_power(const VirtualRep& r, int k) {
    return newton_power(r, k, /*exterior=*/false);
}

Character to_character(const VirtualRep& r) {
    Character out;
    for (const auto& [n, m] : r.terms())
        for (int w = n; w >= -n; w -= 2) out.add(w, m);
    return out;
}

VirtualRep decompose(const Character& c) {
    if (!c.symmetric())
        throw std::invalid_argument(
            "character is not symmetric under q -> 1/q; not a virtual "
            "representation");
    Character rest = c;
    VirtualRep out;
    while (!rest.zero()) {
        const auto top = rest.coefficients().rbegin();
        const int n = top->first;
        const long long mult = top->second;
        if (n < 0)
            throw std::logic_error("peeling left a remainder with only negative weights");
        out.add(n, mult);
        for (int w = n; w >= -n; w -= 2) rest.add(w, -mult);
    }
    return out;
}

nlohmann::ordered_json to_json(const VirtualRep& r) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [n, m] : r.terms()) j["S" + std::to_string(n)] = m;
    return j;
}

VirtualRep rep_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("representation JSON must be an object");
    VirtualRep out;
    for (const auto& [key, value] : j.items()) {
        if (key.size() < 2 || (key[0] != 'S' && key[0] != 's'))
            throw std::invalid_argument("bad irreducible key: " + key);
        const int n = std::stoi(key.substr(1));
        out.add(n, value.get<long long>());
    }
    return out;
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

long long take_integer(std::string_view& s, bool* found) {
    skip_ws(s);
    *found = false;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
        skip_ws(s);
    }
    long long v = 0;
    while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
        *found = true;
        v = v * 10 + (s.front() - '0');
        s.remove_prefix(1);
    }
    return neg ? -v : v;
}

}  // namespace

VirtualRep parse_rep(std::string_view text) {
    VirtualRep out;
    std::string_view s = text;
    skip_ws(s);
    if (s.empty()) throw std::invalid_argument("empty representation expression");
    bool first = true;
    while (true) {
        skip_ws(s);
        if (s.empty()) break;
        long long sign = 1;
        if (s.front() == '+' || s.front() == '-') {
            sign = s.front() == '-' ? -1 : 1;
            s.remove_prefix(1);
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in representation expression");
        }
        skip_ws(s);
        long long mult = 1;
        if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
            bool found = false;
            mult = take_integer(s, &found);
        }
        skip_ws(s);
        if (s.empty() || (s.front() != 'S' && s.front() != 's'))
            throw std::invalid_argument("expected irreducible 'S<n>' in representation expression");
        s.remove_prefix(1);
        bool found = false;
        const long long n = take_integer(s, &found);
        if (!found || n < 0) throw std::invalid_argument("bad irreducible label");
        out.add(static_cast<int>(n), sign * mult);
        first = false;
    }
    return out;
}

Character parse_character(std::string_view text) {
    Character out;
    std::string_view s = text;
    skip_ws(s);
    if (s.empty()) throw std::invalid_argument("empty character expression");
    bool first = true;
    while (true) {
        skip_ws(s);
        if (s.empty()) break;
        long long sign = 1;
        if (s.front() == '+' || s.front() == '-') {
            sign = s.front() == '-' ? -1 : 1;
            s.remove_prefix(1);
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in character expression");
        }
        skip_ws(s);
        long long coeff = 1;
        bool has_coeff = false;
        if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front())))
            coeff = take_integer(s, &has_coeff);
        skip_ws(s);
        if (!s.empty() && s.front() == '*') {
            s.remove_prefix(1);
            skip_ws(s);
        }
        long long weight = 0;
        if (!s.empty() && (s.front() == 'q' || s.front() == 'Q')) {
            s.remove_prefix(1);
            skip_ws(s);
            weight = 1;
            if (!s.empty() && s.front() == '^') {
                s.remove_prefix(1);
                bool found = false;
                weight = take_integer(s, &found);
                if (!found) throw std::invalid_argument("missing exponent after '^'");
            }
        } else if (!has_coeff) {
            throw std::invalid_argument("expected coefficient or 'q' term");
        }
        out.add(static_cast<int>(weight), sign * coeff);
        first = false;
    }
    return out;
}

}  // namespace so3x8::repring
