#include "permlat/ring.hpp"

namespace permlat {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int pow_int(long base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Ring Ring::integers(long p) {
    PERMLAT_REQUIRE(is_prime(p), "ring prime must be a prime >= 2");
    Ring r;
    r.kind = Kind::Integers;
    r.p = p;
    return r;
}

Ring Ring::truncated(long p, int e) {
    PERMLAT_REQUIRE(is_prime(p), "ring prime must be a prime >= 2");
    PERMLAT_REQUIRE(e >= 1, "truncation exponent must be >= 1");
    Ring r;
    r.kind = Kind::Truncated;
    r.p = p;
    r.e = e;
    r.modulus = pow_int(p, e);
    return r;
}

Int Ring::reduce(const Int& v) const {
    if (kind == Kind::Integers) return v;
    Int r = v % modulus;
    if (r < 0) r += modulus;
    return r;
}

int Ring::valuation(const Int& v) const {
    PERMLAT_ASSERT(kind == Kind::Truncated, "valuation needs truncated mode");
    Int r = reduce(v);
    if (r == 0) return e;
    int k = 0;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    return k;
}

Int Ring::unit_part(const Int& v) const {
    Int r = reduce(v);
    PERMLAT_ASSERT(r != 0, "unit_part of zero");
    while (r % p == 0) r /= p;
    return r;
}

Int Ring::unit_inverse(const Int& u) const {
    PERMLAT_ASSERT(kind == Kind::Truncated, "unit_inverse needs truncated mode");
    // extended Euclid mod p^e
    Int a = reduce(u), b = modulus;
    PERMLAT_REQUIRE(a % p != 0, "not a unit mod p^e");
    Int x0 = 1, x1 = 0, r0 = a, r1 = b;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    PERMLAT_ASSERT(r0 == 1, "gcd(u, p^e) != 1");
    return reduce(x0);
}

std::string Ring::to_string() const {
    if (kind == Kind::Integers) return "integers p=" + std::to_string(p);
    return "truncated p=" + std::to_string(p) + " e=" + std::to_string(e);
}

int vp(Int v, long p) {
    PERMLAT_ASSERT(v != 0, "vp of zero");
    if (v < 0) v = -v;
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

Int p_part(const Int& v, long p) {
    return pow_int(p, vp(v, p));
}

}  // namespace permlat
