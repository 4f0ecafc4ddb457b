#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace so3x8 {

/// Exact rational scalar used everywhere.  Floating point is banned in the
/// algebraic core: every rank / kernel / intersection decision below is made
/// with these.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p", "-p", "p/q" (arbitrary precision).  Throws on malformed input.
inline Rat rat_parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    try {
        Rat r(s);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

/// Canonical string form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace so3x8
