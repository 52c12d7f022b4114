#include "permlat/matrix.hpp"

#include <sstream>

namespace permlat {

Mat::Mat(Ring ring, std::initializer_list<std::initializer_list<long>> rows)
    : ring_(std::move(ring)), rows_(static_cast<int>(rows.size())), cols_(0) {
    for (const auto& r : rows) cols_ = std::max<int>(cols_, static_cast<int>(r.size()));
    a_.assign(static_cast<size_t>(rows_) * cols_, Int(0));
    int i = 0;
    for (const auto& r : rows) {
        PERMLAT_REQUIRE(static_cast<int>(r.size()) == cols_, "ragged matrix literal");
        int j = 0;
        for (long v : r) at(i, j++) = ring_.reduce(Int(v));
        ++i;
    }
}

Mat Mat::identity(const Ring& ring, int n) {
    Mat m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::row_vector(const Ring& ring, std::vector<Int> entries) {
    Mat m(ring, 1, static_cast<int>(entries.size()));
    for (int j = 0; j < m.cols_; ++j) m.at(0, j) = ring.reduce(entries[j]);
    return m;
}

void Mat::canonicalize() {
    if (ring_.is_integers()) return;
    for (auto& v : a_) v = ring_.reduce(v);
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (!ring_.is_zero(v)) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (ring_.reduce(at(i, j) - (i == j ? 1 : 0)) != 0) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    PERMLAT_ASSERT(ring_ == o.ring_ && cols_ == o.rows_, "shape/ring mismatch in mat mul");
    Mat r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& w = o.at(k, j);
                if (w != 0) r.at(i, j) += v * w;
            }
        }
    }
    r.canonicalize();
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    PERMLAT_ASSERT(ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch");
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(a_[i] + o.a_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    PERMLAT_ASSERT(ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch");
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(a_[i] - o.a_[i]);
    return r;
}

Mat Mat::scaled(const Int& c) const {
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(a_[i] * c);
    return r;
}

Mat Mat::negated() const { return scaled(Int(-1)); }

Mat Mat::transposed() const {
    Mat r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::row(int i) const { return submatrix(i, i + 1, 0, cols_); }

std::vector<Int> Mat::row_vec(int i) const {
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::set_row(int i, const std::vector<Int>& v) {
    PERMLAT_ASSERT(static_cast<int>(v.size()) == cols_, "row length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = ring_.reduce(v[j]);
}

Mat Mat::submatrix(int r0, int r1, int c0, int c1) const {
    Mat r(ring_, r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
    return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    PERMLAT_ASSERT(a.ring_ == b.ring_ && a.cols_ == b.cols_, "vstack mismatch");
    Mat r(a.ring_, a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    PERMLAT_ASSERT(a.ring_ == b.ring_ && a.rows_ == b.rows_, "hstack mismatch");
    Mat r(a.ring_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

Mat Mat::vstack_all(const std::vector<Mat>& parts, const Ring& ring, int cols) {
    int rows = 0;
    for (const auto& m : parts) rows += m.rows();
    Mat r(ring, rows, cols);
    int off = 0;
    for (const auto& m : parts) {
        PERMLAT_ASSERT(m.cols() == cols && m.ring() == ring, "vstack_all mismatch");
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < cols; ++j) r.at(off + i, j) = m.at(i, j);
        off += m.rows();
    }
    return r;
}

Mat Mat::block_diag(const std::vector<Mat>& blocks, const Ring& ring) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat r(ring, rows, cols);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) r.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return r;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    PERMLAT_ASSERT(a.ring_ == b.ring_, "kron ring mismatch");
    Mat r(a.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            const Int& v = a.at(i, j);
            if (v == 0) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l)
                    r.at(i * b.rows_ + k, j * b.cols_ + l) = a.ring_.reduce(v * b.at(k, l));
        }
    return r;
}

Mat Mat::reduced_into(const Ring& target) const {
    PERMLAT_REQUIRE(target.is_truncated(), "reduction target must be truncated");
    PERMLAT_REQUIRE(target.p == ring_.p, "reduction must keep the prime");
    if (ring_.is_truncated())
        PERMLAT_REQUIRE(target.e <= ring_.e, "cannot refine a truncated ring");
    Mat r(target, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = target.reduce(a_[i]);
    return r;
}

Mat Mat::lifted() const {
    Mat r(Ring::integers(ring_.p), rows_, cols_);
    r.a_ = a_;
    return r;
}

void Mat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::row_axpy(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k) at(i, k) = ring_.reduce(at(i, k) + c * at(j, k));
}

void Mat::scale_row(int i, const Int& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) = ring_.reduce(at(i, k) * c);
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "," : "") << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Int> row_times_mat(const std::vector<Int>& v, const Mat& m) {
    PERMLAT_ASSERT(static_cast<int>(v.size()) == m.rows(), "row_times_mat shape");
    std::vector<Int> r(m.cols(), Int(0));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) {
            const Int& w = m.at(i, j);
            if (w != 0) r[j] += v[i] * w;
        }
    }
    for (auto& x : r) x = m.ring().reduce(x);
    return r;
}

}  // namespace permlat
