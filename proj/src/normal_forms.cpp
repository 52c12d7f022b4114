#include "permlat/normal_forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permlat {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

std::vector<Int> Presentation::factors() const {
    std::vector<Int> f;
    for (int k : p_exponents) f.push_back(pow_int(p, k));
    return f;
}

std::string Presentation::to_string() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& f : factors()) {
        os << (first ? "" : ",") << f;
        first = false;
    }
    os << "] free " << free_rank;
    if (discarded_prime_to_p) os << " (prime-to-p torsion discarded)";
    return os.str();
}

HermiteResult hermite_form(const Mat& m) {
    PERMLAT_REQUIRE(m.ring().is_integers(), "hermite_form needs integers mode");
    Mat a = m;
    Mat u = Mat::identity(m.ring(), m.rows());
    int t = 0;
    for (int j = 0; j < a.cols() && t < a.rows(); ++j) {
        // Euclid in column j among rows >= t.
        while (true) {
            int best = -1;
            for (int i = t; i < a.rows(); ++i) {
                if (a.at(i, j) == 0) continue;
                if (best < 0 || abs_int(a.at(i, j)) < abs_int(a.at(best, j))) best = i;
            }
            if (best < 0) break;
            a.swap_rows(t, best);
            u.swap_rows(t, best);
            bool cleared = true;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, j) == 0) continue;
                Int q = floor_div(a.at(i, j), a.at(t, j));
                a.row_axpy(i, t, -q);
                u.row_axpy(i, t, -q);
                if (a.at(i, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a.at(t, j) == 0) continue;
        if (a.at(t, j) < 0) {
            a.scale_row(t, Int(-1));
            u.scale_row(t, Int(-1));
        }
        const Int pivot = a.at(t, j);
        for (int i = 0; i < t; ++i) {
            Int q = floor_div(a.at(i, j), pivot);
            a.row_axpy(i, t, -q);
            u.row_axpy(i, t, -q);
        }
        ++t;
    }
    return {a, u};
}

namespace {

struct HowellData {
    Mat h;  // echelon rows, zero rows dropped
    Mat t;  // t * original = h
    std::vector<int> pivot_col;
};

HowellData howell_with_transform(const Mat& m) {
    const Ring& ring = m.ring();
    PERMLAT_REQUIRE(ring.is_truncated(), "howell_form needs truncated mode");
    const int cols = m.cols();
    const int orig = m.rows();
    std::vector<std::vector<Int>> rows, trows;
    for (int i = 0; i < orig; ++i) {
        rows.push_back(m.row_vec(i));
        std::vector<Int> t(orig, Int(0));
        t[i] = 1;
        trows.push_back(std::move(t));
    }
    auto axpy = [&](std::vector<Int>& x, const std::vector<Int>& y, const Int& c) {
        for (size_t k = 0; k < x.size(); ++k) x[k] = ring.reduce(x[k] + c * y[k]);
    };
    auto scale = [&](std::vector<Int>& x, const Int& c) {
        for (auto& v : x) v = ring.reduce(v * c);
    };
    std::vector<int> pivots;
    size_t t = 0;
    for (int j = 0; j < cols; ++j) {
        int best = -1, bestval = ring.e + 1;
        for (size_t i = t; i < rows.size(); ++i) {
            if (rows[i][j] == 0) continue;
            int v = ring.valuation(rows[i][j]);
            if (v < bestval) {
                bestval = v;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) continue;
        std::swap(rows[t], rows[static_cast<size_t>(best)]);
        std::swap(trows[t], trows[static_cast<size_t>(best)]);
        const int k = bestval;
        Int uinv = ring.unit_inverse(ring.unit_part(rows[t][j]));
        scale(rows[t], uinv);
        scale(trows[t], uinv);
        const Int pivot = rows[t][j];  // now exactly p^k
        for (size_t i = t + 1; i < rows.size(); ++i) {
            if (rows[i][j] == 0) continue;
            Int f = rows[i][j] / pivot;  // exact: valuation >= k
            axpy(rows[i], rows[t], -f);
            axpy(trows[i], trows[t], -f);
        }
        if (k > 0) {
            // annihilator shift keeps the span membership-complete
            Int c = pow_int(ring.p, ring.e - k);
            std::vector<Int> ann(rows[t]), tann(trows[t]);
            scale(ann, c);
            scale(tann, c);
            bool nonzero = false;
            for (const auto& v : ann) nonzero = nonzero || v != 0;
            if (nonzero) {
                rows.push_back(std::move(ann));
                trows.push_back(std::move(tann));
            }
        }
        for (size_t i = 0; i < t; ++i) {
            Int q = rows[i][j] / pivot;  // canonical residue in [0, pivot)
            axpy(rows[i], rows[t], -q);
            axpy(trows[i], trows[t], -q);
        }
        pivots.push_back(j);
        ++t;
    }
    HowellData out;
    out.h = Mat(ring, static_cast<int>(t), cols);
    out.t = Mat(ring, static_cast<int>(t), orig);
    for (size_t i = 0; i < t; ++i) {
        out.h.set_row(static_cast<int>(i), rows[i]);
        out.t.set_row(static_cast<int>(i), trows[i]);
    }
    out.pivot_col = pivots;
    return out;
}

}  // namespace

Mat howell_form(const Mat& m) { return howell_with_transform(m).h; }

EchelonSolver::EchelonSolver(const Mat& a) : ring_(a.ring()), orig_rows_(a.rows()) {
    if (ring_.is_integers()) {
        HermiteResult hr = hermite_form(a);
        int r = 0;
        for (int i = 0; i < hr.h.rows(); ++i) {
            bool nonzero = false;
            for (int j = 0; j < hr.h.cols(); ++j) nonzero = nonzero || hr.h.at(i, j) != 0;
            if (nonzero) ++r;
        }
        h_ = hr.h.submatrix(0, r, 0, hr.h.cols());
        t_ = hr.u.submatrix(0, r, 0, hr.u.cols());
        for (int i = 0; i < r; ++i) {
            int j = 0;
            while (h_.at(i, j) == 0) ++j;
            pivot_col_.push_back(j);
        }
    } else {
        HowellData hd = howell_with_transform(a);
        h_ = hd.h;
        t_ = hd.t;
        pivot_col_ = hd.pivot_col;
    }
}

std::optional<std::vector<Int>> EchelonSolver::solve(const std::vector<Int>& v) const {
    PERMLAT_REQUIRE(static_cast<int>(v.size()) == h_.cols(), "solve: shape mismatch");
    std::vector<Int> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(ring_.reduce(x));
    std::vector<Int> z(h_.rows(), Int(0));
    for (int i = 0; i < h_.rows(); ++i) {
        int j = pivot_col_[i];
        if (r[j] == 0) continue;
        const Int& pivot = h_.at(i, j);
        if (ring_.is_integers()) {
            if (r[j] % pivot != 0) return std::nullopt;
            z[i] = r[j] / pivot;
        } else {
            if (ring_.valuation(r[j]) < ring_.valuation(pivot)) return std::nullopt;
            z[i] = r[j] / pivot;
        }
        for (int k = 0; k < h_.cols(); ++k) r[k] = ring_.reduce(r[k] - z[i] * h_.at(i, k));
    }
    for (const auto& x : r)
        if (x != 0) return std::nullopt;
    std::vector<Int> coeffs(orig_rows_, Int(0));
    for (int i = 0; i < t_.rows(); ++i) {
        if (z[i] == 0) continue;
        for (int k = 0; k < orig_rows_; ++k)
            coeffs[k] = ring_.reduce(coeffs[k] + z[i] * t_.at(i, k));
    }
    return coeffs;
}

bool EchelonSolver::contains(const std::vector<Int>& v) const { return solve(v).has_value(); }

std::optional<Mat> EchelonSolver::solve_mat(const Mat& b) const {
    Mat x(ring_, b.rows(), orig_rows_);
    for (int i = 0; i < b.rows(); ++i) {
        auto s = solve(b.row_vec(i));
        if (!s) return std::nullopt;
        x.set_row(i, *s);
    }
    return x;
}

Mat kernel(const Mat& m) {
    const Ring& ring = m.ring();
    if (ring.is_integers()) {
        HermiteResult hr = hermite_form(m);
        int r = 0;
        for (int i = 0; i < hr.h.rows(); ++i)
            for (int j = 0; j < hr.h.cols(); ++j)
                if (hr.h.at(i, j) != 0) {
                    r = i + 1;
                    break;
                }
        Mat raw = hr.u.submatrix(r, m.rows(), 0, m.rows());
        HermiteResult canon = hermite_form(raw);
        return canon.h;
    }
    // x * m = 0 over Z/p^e  <=>  (x, y) * [lift(m); p^e I] = 0 over Z
    Mat lifted = m.lifted();
    Mat shifts = Mat::identity(lifted.ring(), m.cols()).scaled(ring.modulus);
    Mat stacked = Mat::vstack(lifted, shifts);
    Mat zker = kernel(stacked);
    Mat parts = zker.submatrix(0, zker.rows(), 0, m.rows()).reduced_into(ring);
    return howell_form(parts);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    PERMLAT_REQUIRE(a.ring() == b.ring(), "solve ring mismatch");
    PERMLAT_REQUIRE(a.cols() == b.cols(), "solve: shape mismatch");
    return EchelonSolver(a).solve_mat(b);
}

Mat row_space_basis(const Mat& m) {
    if (m.ring().is_truncated()) return howell_form(m);
    Mat h = hermite_form(m).h;
    int nz = 0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                nz = i + 1;
                break;
            }
    return h.submatrix(0, nz, 0, h.cols());
}

namespace {

// Diagonal of the Smith form over Z, invariants only, with divisibility fixed.
std::vector<Int> smith_diagonal(Mat a) {
    PERMLAT_ASSERT(a.ring().is_integers(), "smith over Z only");
    const int n = std::min(a.rows(), a.cols());
    std::vector<Int> diag;
    int t = 0;
    auto col_axpy = [&](int j1, int j2, const Int& c) {
        for (int i = 0; i < a.rows(); ++i) a.at(i, j1) += c * a.at(i, j2);
    };
    auto col_swap = [&](int j1, int j2) {
        for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, j1), a.at(i, j2));
    };
    while (t < n) {
        int pi = -1, pj = -1;
        for (int i = t; i < a.rows(); ++i)
            for (int j = t; j < a.cols(); ++j)
                if (a.at(i, j) != 0 &&
                    (pi < 0 || abs_int(a.at(i, j)) < abs_int(a.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        a.swap_rows(t, pi);
        col_swap(t, pj);
        bool stable = false;
        while (!stable) {
            stable = true;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = floor_div(a.at(i, t), a.at(t, t));
                a.row_axpy(i, t, -q);
                if (a.at(i, t) != 0) {
                    a.swap_rows(t, i);
                    stable = false;
                }
            }
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = floor_div(a.at(t, j), a.at(t, t));
                col_axpy(j, t, -q);
                if (a.at(t, j) != 0) {
                    col_swap(t, j);
                    stable = false;
                }
            }
            if (!stable) continue;
            // pivot must divide the rest of the block
            for (int i = t + 1; i < a.rows() && stable; ++i)
                for (int j = t + 1; j < a.cols() && stable; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.row_axpy(t, i, Int(1));
                        stable = false;
                    }
        }
        Int d = a.at(t, t);
        if (d < 0) d = -d;
        diag.push_back(d);
        ++t;
    }
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        PERMLAT_ASSERT(diag[i + 1] % diag[i] == 0, "smith divisibility chain broken");
    return diag;
}

Presentation presentation_from_diag(const std::vector<Int>& diag, long p, long cols) {
    Presentation pr;
    pr.p = p;
    pr.free_rank = cols - static_cast<long>(diag.size());
    for (const auto& d : diag) {
        if (d == 1) continue;
        int k = vp(d, p);
        if (pow_int(p, k) != d) pr.discarded_prime_to_p = true;
        if (k > 0) pr.p_exponents.push_back(k);
    }
    std::sort(pr.p_exponents.rbegin(), pr.p_exponents.rend());
    return pr;
}

}  // namespace

Presentation smith_invariants(const Mat& m) {
    PERMLAT_REQUIRE(m.ring().is_integers(), "smith_invariants needs integers mode");
    return presentation_from_diag(smith_diagonal(m), m.ring().p, m.cols());
}

Presentation cokernel_presentation(const Mat& m) {
    if (m.ring().is_integers()) return smith_invariants(m);
    const Ring& ring = m.ring();
    Mat lifted = m.lifted();
    Mat shifts = Mat::identity(lifted.ring(), m.cols()).scaled(ring.modulus);
    Presentation pr = smith_invariants(Mat::vstack(lifted, shifts));
    PERMLAT_ASSERT(pr.free_rank == 0 && !pr.discarded_prime_to_p,
                   "truncated cokernel must be a finite p-group");
    return pr;
}

SmithTransforms smith_with_transforms(const Mat& m) {
    PERMLAT_REQUIRE(m.ring().is_integers(), "smith transforms need integers mode");
    SmithTransforms st;
    Mat a = m;
    st.u = Mat::identity(m.ring(), m.rows());
    st.v = Mat::identity(m.ring(), m.cols());
    st.v_inv = Mat::identity(m.ring(), m.cols());
    auto col_axpy = [&](Mat& x, int j1, int j2, const Int& c) {
        for (int i = 0; i < x.rows(); ++i) x.at(i, j1) += c * x.at(i, j2);
    };
    auto col_swap = [&](Mat& x, int j1, int j2) {
        for (int i = 0; i < x.rows(); ++i) std::swap(x.at(i, j1), x.at(i, j2));
    };
    auto do_col_axpy = [&](int j1, int j2, const Int& c) {
        col_axpy(a, j1, j2, c);
        col_axpy(st.v, j1, j2, c);
        st.v_inv.row_axpy(j2, j1, -c);
    };
    auto do_col_swap = [&](int j1, int j2) {
        if (j1 == j2) return;
        col_swap(a, j1, j2);
        col_swap(st.v, j1, j2);
        st.v_inv.swap_rows(j1, j2);
    };
    const int n = std::min(a.rows(), a.cols());
    int t = 0;
    while (t < n) {
        int pi = -1, pj = -1;
        for (int i = t; i < a.rows(); ++i)
            for (int j = t; j < a.cols(); ++j)
                if (a.at(i, j) != 0 &&
                    (pi < 0 || abs_int(a.at(i, j)) < abs_int(a.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        a.swap_rows(t, pi);
        st.u.swap_rows(t, pi);
        do_col_swap(t, pj);
        bool stable = false;
        while (!stable) {
            stable = true;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = floor_div(a.at(i, t), a.at(t, t));
                a.row_axpy(i, t, -q);
                st.u.row_axpy(i, t, -q);
                if (a.at(i, t) != 0) {
                    a.swap_rows(t, i);
                    st.u.swap_rows(t, i);
                    stable = false;
                }
            }
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = floor_div(a.at(t, j), a.at(t, t));
                do_col_axpy(j, t, -q);
                if (a.at(t, j) != 0) {
                    do_col_swap(t, j);
                    stable = false;
                }
            }
            if (!stable) continue;
            for (int i = t + 1; i < a.rows() && stable; ++i)
                for (int j = t + 1; j < a.cols() && stable; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.row_axpy(t, i, Int(1));
                        st.u.row_axpy(t, i, Int(1));
                        stable = false;
                    }
        }
        if (a.at(t, t) < 0) {
            a.scale_row(t, Int(-1));
            st.u.scale_row(t, Int(-1));
        }
        ++t;
    }
    st.d = a;
    st.rank = t;
    return st;
}

int rank_mod_p(const Mat& m) {
    Ring fp = Ring::truncated(m.ring().p, 1);
    return howell_form(m.reduced_into(fp)).rows();
}

RrefModP rref_mod_p(const Mat& m) {
    Ring fp = Ring::truncated(m.ring().p, 1);
    RrefModP out;
    out.r = howell_form(m.ring() == fp ? m : m.reduced_into(fp));
    std::vector<bool> is_pivot(m.cols(), false);
    for (int i = 0; i < out.r.rows(); ++i) {
        int j = 0;
        while (out.r.at(i, j) == 0) ++j;
        out.pivot_cols.push_back(j);
        is_pivot[j] = true;
    }
    for (int j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) out.nonpivot_cols.push_back(j);
    return out;
}

}  // namespace permlat
