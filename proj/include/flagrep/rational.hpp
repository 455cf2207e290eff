#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace flagrep {

using Rat = mpq_class;
using Int = mpz_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Canonical form "p" or "p/q" with q > 0, gcd(p,q) = 1.
inline std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw Error("bad rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

inline long rat_to_long(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() != 1)
        throw Error("expected an integer, got " + rat_str(c));
    if (!c.get_num().fits_slong_p())
        throw Error("integer out of range: " + rat_str(c));
    return c.get_num().get_si();
}

inline bool rat_is_integer(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_den() == 1;
}

}  // namespace flagrep
