#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace permlat {

using Int = boost::multiprecision::cpp_int;

// Contract violation in user-supplied data or arguments.
struct value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant; maps to exit code 3 in the CLI.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PERMLAT_REQUIRE(cond, msg)                                            \
    do {                                                                      \
        if (!(cond)) throw ::permlat::value_error(msg);                       \
    } while (0)

#define PERMLAT_ASSERT(cond, msg)                                             \
    do {                                                                      \
        if (!(cond)) throw ::permlat::internal_error(msg);                    \
    } while (0)

bool is_prime(long n);

/// Coefficient ring: the integers with a distinguished prime p ("integers"
/// mode, scalars are arbitrary-precision), or the chain ring Z/p^e
/// ("truncated" mode, scalars are canonical representatives in [0, p^e)).
class Ring {
public:
    enum class Kind { Integers, Truncated };

    static Ring integers(long p);
    static Ring truncated(long p, int e);

    Kind kind = Kind::Integers;
    long p = 2;
    int e = 0;        // truncation exponent, Truncated mode only
    Int modulus = 0;  // p^e in Truncated mode, 0 otherwise

    bool is_integers() const { return kind == Kind::Integers; }
    bool is_truncated() const { return kind == Kind::Truncated; }

    Int reduce(const Int& v) const;
    bool is_zero(const Int& v) const { return reduce(v) == 0; }

    /// p-adic valuation of a canonical representative; e for 0. Truncated mode.
    int valuation(const Int& v) const;
    /// Unit u with v = u * p^valuation(v), canonical. Truncated mode, v != 0.
    Int unit_part(const Int& v) const;
    /// Inverse of a unit mod p^e.
    Int unit_inverse(const Int& u) const;

    std::string to_string() const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.kind == b.kind && a.p == b.p && a.e == b.e;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
};

/// Valuation of a nonzero integer at p.
int vp(Int v, long p);

/// p-power part of a positive integer.
Int p_part(const Int& v, long p);

Int pow_int(long base, int exp);

}  // namespace permlat
