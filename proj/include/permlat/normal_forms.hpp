#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlat/matrix.hpp"

namespace permlat {

/// Invariant factors of a finitely generated module after discarding the
/// prime-to-p torsion (the discard is recorded), plus the free rank.
/// Exponents are the p-exponents, sorted descending.
struct Presentation {
    long p = 2;
    std::vector<int> p_exponents;
    long free_rank = 0;
    bool discarded_prime_to_p = false;

    bool is_zero() const { return p_exponents.empty() && free_rank == 0; }
    std::vector<Int> factors() const;
    std::string to_string() const;

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.p_exponents == b.p_exponents && a.free_rank == b.free_rank;
    }
};

struct HermiteResult {
    Mat h;  // row Hermite form
    Mat u;  // unimodular, u * input = h
};

/// Row-canonical Hermite form over the integers. Pivots are positive,
/// topmost-leftmost, entries above a pivot reduced into [0, pivot).
HermiteResult hermite_form(const Mat& m);

/// Canonical Howell form over Z/p^e: echelon with pivots p^k, entries above
/// a pivot reduced mod the pivot, and the row set closed under annihilator
/// shifts so that the row span is membership-complete. Zero rows dropped.
Mat howell_form(const Mat& m);

/// Echelonized matrix with a transform back to the original rows, for
/// repeated solving and membership tests. Works in both ring modes.
class EchelonSolver {
public:
    explicit EchelonSolver(const Mat& a);

    const Mat& echelon() const { return h_; }

    /// Some x with x * a = v, coefficients w.r.t. the original rows of a;
    /// deterministic (first solution in pivot order). nullopt when unsolvable.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& v) const;
    bool contains(const std::vector<Int>& v) const;

    /// Solves row-by-row; nullopt if any row is unsolvable.
    std::optional<Mat> solve_mat(const Mat& b) const;

private:
    Ring ring_;
    int orig_rows_;
    Mat h_;                      // echelon form (zero rows dropped)
    Mat t_;                      // t * original = h
    std::vector<int> pivot_col_;
};

/// Rows generate {x : x * m = 0}; canonical form (Hermite basis over Z,
/// Howell generating set over Z/p^e).
Mat kernel(const Mat& m);

/// Canonical generating set of the row space (zero rows dropped).
Mat row_space_basis(const Mat& m);

/// Some x with x * a = b, or nullopt. Deterministic pivot-order choice.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Invariant factors of coker(m) = R^cols / rowspan(m), with prime-to-p
/// torsion discarded (flagged). Integers mode.
Presentation smith_invariants(const Mat& m);

/// Cokernel presentation in either ring mode (Truncated mode lifts to the
/// integers and truncates the factors at p^e).
Presentation cokernel_presentation(const Mat& m);

struct SmithTransforms {
    Mat d;      // u * input * v = d, diagonal
    Mat u;      // unimodular rows transform
    Mat v;      // unimodular columns transform
    Mat v_inv;
    int rank = 0;
};

/// Full Smith decomposition with transforms, over the integers.
SmithTransforms smith_with_transforms(const Mat& m);

/// Rank of m over F_p (entries reduced mod the ring's p).
int rank_mod_p(const Mat& m);

/// Reduced row echelon form of m over F_p, with pivot columns.
struct RrefModP {
    Mat r;                       // over Ring::truncated(p, 1)
    std::vector<int> pivot_cols;
    std::vector<int> nonpivot_cols;
};
RrefModP rref_mod_p(const Mat& m);

}  // namespace permlat
