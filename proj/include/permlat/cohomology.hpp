#pragma once

#include <map>

#include "permlat/lattice.hpp"

namespace permlat {

/// Bar 1-cocycles of a subgroup on a lattice, parameterized by their values
/// on a generating set: a cocycle f satisfies f(xs) = f(x)s + f(s), so it is
/// determined by (f(s))_s and the remaining relations cut out Z^1 as the
/// kernel of an explicit matrix.
struct CocycleSpace {
    int sub = -1;
    std::vector<int> gens;        // subgroup generators, as group elements
    Mat z_basis;                  // rows span Z^1 in parameter coordinates
    std::map<int, Mat> coef;      // element -> (|gens|*n) x n, f(x) = params * coef[x]
};

CocycleSpace cocycle_space(const Lattice& u, int sub);

std::vector<Int> cocycle_value(const CocycleSpace& cs, const std::vector<Int>& params, int elem);

/// Invariant factors of the p-part of H^1(sub, u); integers mode only.
Presentation h1(const Lattice& u, int sub);

}  // namespace permlat
