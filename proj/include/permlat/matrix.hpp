#pragma once

#include <initializer_list>
#include <vector>

#include "permlat/ring.hpp"

namespace permlat {

/// Dense matrix with exact entries over a Ring. Row-major storage.
/// Module elements are row vectors throughout; maps act by right
/// multiplication, so a map A -> B is an (rank A) x (rank B) matrix.
class Mat {
public:
    Mat() : ring_(Ring::integers(2)), rows_(0), cols_(0) {}
    Mat(Ring ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols) {}
    Mat(Ring ring, std::initializer_list<std::initializer_list<long>> rows);

    static Mat identity(const Ring& ring, int n);
    static Mat zero(const Ring& ring, int rows, int cols) { return Mat(ring, rows, cols); }
    static Mat row_vector(const Ring& ring, std::vector<Int> entries);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    void set(int i, int j, Int v) { at(i, j) = ring_.reduce(std::move(v)); }

    void canonicalize();  // reduce every entry into canonical form

    bool is_zero() const;
    bool is_identity() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Int& c) const;
    Mat negated() const;
    Mat transposed() const;

    Mat row(int i) const;
    std::vector<Int> row_vec(int i) const;
    void set_row(int i, const std::vector<Int>& v);

    /// Rows [r0, r1) and columns [c0, c1).
    Mat submatrix(int r0, int r1, int c0, int c1) const;
    Mat cols_slice(int c0, int c1) const { return submatrix(0, rows_, c0, c1); }

    static Mat vstack(const Mat& a, const Mat& b);
    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack_all(const std::vector<Mat>& parts, const Ring& ring, int cols);
    static Mat block_diag(const std::vector<Mat>& blocks, const Ring& ring);

    /// Kronecker product with row-major index pairing:
    /// (a kron b)[(i,k)][(j,l)] = a[i][j] * b[k][l].
    static Mat kron(const Mat& a, const Mat& b);

    /// Entrywise reduction into another ring (Integers -> Truncated, or
    /// Truncated -> coarser Truncated).
    Mat reduced_into(const Ring& target) const;

    /// Lift of a Truncated matrix to Integers mode (canonical representatives).
    Mat lifted() const;

    void swap_rows(int i, int j);
    /// row_i += c * row_j
    void row_axpy(int i, int j, const Int& c);
    void scale_row(int i, const Int& c);

    std::string to_string() const;

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    Ring ring_;
    int rows_, cols_;
    std::vector<Int> a_;
};

std::vector<Int> row_times_mat(const std::vector<Int>& v, const Mat& m);

}  // namespace permlat
