#pragma once

// Brute-force oracles for the exact linear algebra, independent of the
// normal-form code: everything here enumerates the finite ring directly.

#include <set>
#include <vector>

#include "permlat/matrix.hpp"

namespace permlat::oracle {

inline std::vector<std::vector<Int>> all_vectors(const Ring& ring, int len) {
    std::vector<std::vector<Int>> out;
    long m = ring.modulus.convert_to<long>();
    std::vector<long> idx(len, 0);
    while (true) {
        std::vector<Int> v;
        for (long i : idx) v.push_back(Int(i));
        out.push_back(std::move(v));
        int k = 0;
        while (k < len && ++idx[k] == m) idx[k++] = 0;
        if (k == len) break;
        if (len == 0) break;
    }
    return out;
}

inline std::vector<Int> mul_row(const Ring& ring, const std::vector<Int>& x, const Mat& m) {
    std::vector<Int> r(m.cols(), Int(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[j] = ring.reduce(r[j] + x[i] * m.at(i, j));
    return r;
}

/// {x : x m = 0} by full enumeration.
inline std::set<std::vector<Int>> kernel_set(const Mat& m) {
    std::set<std::vector<Int>> out;
    for (const auto& x : all_vectors(m.ring(), m.rows())) {
        std::vector<Int> y = mul_row(m.ring(), x, m);
        bool zero = true;
        for (const auto& v : y) zero = zero && v == 0;
        if (zero) out.insert(x);
    }
    return out;
}

/// The full row span as a set of vectors.
inline std::set<std::vector<Int>> span_set(const Mat& m) {
    std::set<std::vector<Int>> out;
    for (const auto& x : all_vectors(m.ring(), m.rows())) out.insert(mul_row(m.ring(), x, m));
    return out;
}

inline bool solvable(const Mat& a, const std::vector<Int>& b) {
    for (const auto& x : all_vectors(a.ring(), a.rows()))
        if (mul_row(a.ring(), x, a) == b) return true;
    return false;
}

}  // namespace permlat::oracle
