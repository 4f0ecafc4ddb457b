#include "so3x8/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace so3x8::linalg {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rat> RatMatrix::row(int i) const {
    std::vector<Rat> v(m_cols);
    for (int j = 0; j < m_cols; ++j) v[j] = at(i, j);
    return v;
}

void RatMatrix::set_row(int i, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != m_cols)
        throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < m_cols; ++j) at(i, j) = v[j];
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(m_cols, m_rows);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (m_cols != o.m_rows) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix p(m_rows, o.m_cols);
    for (int i = 0; i < m_rows; ++i)
        for (int k = 0; k < m_cols; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.m_cols; ++j) {
                const Rat& b = o.at(k, j);
                if (b != 0) p.at(i, j) += a * b;
            }
        }
    return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
        throw std::invalid_argument("matrix sum shape mismatch");
    RatMatrix s(m_rows, m_cols);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) s.at(i, j) = at(i, j) + o.at(i, j);
    return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
        throw std::invalid_argument("matrix difference shape mismatch");
    RatMatrix s(m_rows, m_cols);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) s.at(i, j) = at(i, j) - o.at(i, j);
    return s;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
    RatMatrix m(m_rows, m_cols);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) m.at(i, j) = at(i, j) * s;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const Rat& v : m_data)
        if (v != 0) return false;
    return true;
}

bool RatMatrix::is_antisymmetric() const {
    if (m_rows != m_cols) return false;
    for (int i = 0; i < m_rows; ++i)
        for (int j = i; j < m_cols; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

Rat RatMatrix::trace() const {
    Rat t = 0;
    for (int i = 0; i < m_rows && i < m_cols; ++i) t += at(i, i);
    return t;
}

RatMatrix RatMatrix::bracket(const RatMatrix& x, const RatMatrix& y) {
    return x * y - y * x;
}

RatMatrix RatMatrix::row_stack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("row_stack width mismatch");
    RatMatrix s(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) s.at(a.rows() + i, j) = b.at(i, j);
    return s;
}

namespace {

/// Integer working matrix for the fraction-free forward pass.
struct IntRows {
    int cols = 0;
    std::vector<std::vector<Int>> rows;
};

/// Scale each rational row by the lcm of its denominators.  Row scaling
/// changes neither the row space nor the kernel, and lets the whole forward
/// pass run in integers.
IntRows to_integer_rows(const RatMatrix& m, int width) {
    IntRows z;
    z.cols = width;
    z.rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols(); ++j) {
            const Int& den = m.at(i, j).get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> row(width, Int(0));
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& v = m.at(i, j);
            row[j] = v.get_num() * (lcm / v.get_den());
        }
        if (width > m.cols()) row[m.cols() + i] = lcm;  // transform block
        z.rows.push_back(std::move(row));
    }
    return z;
}

}  // namespace

Echelon echelon(const RatMatrix& m, bool with_transform) {
    const int n = m.cols();
    const int width = with_transform ? n + m.rows() : n;
    IntRows z = to_integer_rows(m, width);
    const int nrows = static_cast<int>(z.rows.size());

    std::vector<int> pivot_col;
    Int prev_pivot = 1;
    int r = 0;  // current pivot row
    for (int c = 0; c < n && r < nrows; ++c) {
        // Smallest nonzero magnitude as pivot keeps the Bareiss minors small.
        int best = -1;
        for (int i = r; i < nrows; ++i) {
            if (z.rows[i][c] == 0) continue;
            if (best < 0 || mpz_cmpabs(z.rows[i][c].get_mpz_t(),
                                       z.rows[best][c].get_mpz_t()) < 0)
                best = i;
        }
        if (best < 0) continue;
        std::swap(z.rows[r], z.rows[best]);
        const Int pivot = z.rows[r][c];
        for (int i = r + 1; i < nrows; ++i) {
            const Int factor = z.rows[i][c];
            // No shortcut when factor == 0: Bareiss rescales every remaining
            // row by pivot/prev_pivot each step; skipping breaks exactness.
            for (int j = 0; j < width; ++j) {
                Int v = z.rows[i][j] * pivot - factor * z.rows[r][j];
                // Bareiss guarantees exact divisibility by the previous pivot;
                // verify rather than assume, since a silent rounding here would
                // poison every rank decision downstream.
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(),
                            prev_pivot.get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("fraction-free elimination lost exactness");
                z.rows[i][j] = std::move(q);
            }
        }
        prev_pivot = pivot;
        pivot_col.push_back(c);
        ++r;
    }

    // Exact back-substitution to reduced row-echelon form, now in rationals.
    const int rank = r;
    RatMatrix rref(rank, n);
    RatMatrix transform(with_transform ? rank : 0, with_transform ? m.rows() : 0);
    std::vector<std::vector<Rat>> work(rank, std::vector<Rat>(width));
    for (int i = 0; i < rank; ++i) {
        const Rat lead = Rat(z.rows[i][pivot_col[i]]);
        for (int j = 0; j < width; ++j) work[i][j] = Rat(z.rows[i][j]) / lead;
    }
    for (int i = rank - 1; i >= 0; --i) {
        for (int k = 0; k < i; ++k) {
            const Rat f = work[k][pivot_col[i]];
            if (f == 0) continue;
            for (int j = 0; j < width; ++j) work[k][j] -= f * work[i][j];
        }
    }
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < n; ++j) rref.at(i, j) = work[i][j];
        if (with_transform)
            for (int j = 0; j < m.rows(); ++j) transform.at(i, j) = work[i][n + j];
    }

    Echelon e;
    e.rref = std::move(rref);
    e.transform = std::move(transform);
    e.pivot_col = std::move(pivot_col);
    return e;
}

int rank(const RatMatrix& m) { return echelon(m).rank(); }

RatMatrix kernel(const RatMatrix& m) {
    const Echelon e = echelon(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RatMatrix basis(static_cast<int>(free_cols.size()), n);
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        const int f = free_cols[k];
        basis.at(k, f) = 1;
        for (int i = 0; i < e.rank(); ++i)
            basis.at(k, e.pivot_col[i]) = -e.rref.at(i, f);
    }
    return basis;
}

namespace {

/// Reduce v against the rref rows; returns the residual and (optionally) the
/// coefficients used per rref row.
std::vector<Rat> reduce_against(const Echelon& e, std::vector<Rat> v,
                                std::vector<Rat>* row_coeffs) {
    if (row_coeffs) row_coeffs->assign(e.rank(), Rat(0));
    for (int i = 0; i < e.rank(); ++i) {
        const Rat c = v[e.pivot_col[i]];
        if (c == 0) continue;
        if (row_coeffs) (*row_coeffs)[i] = c;
        for (int j = 0; j < e.rref.cols(); ++j) {
            if (e.rref.at(i, j) != 0) v[j] -= c * e.rref.at(i, j);
        }
    }
    return v;
}

}  // namespace

bool in_row_span(const Echelon& e, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != e.rref.cols())
        throw std::invalid_argument("vector length mismatch");
    const std::vector<Rat> residual = reduce_against(e, v, nullptr);
    for (const Rat& x : residual)
        if (x != 0) return false;
    return true;
}

bool express_in_rows(const Echelon& e, const std::vector<Rat>& v,
                     std::vector<Rat>* coords) {
    if (e.transform.rows() != e.rank())
        throw std::logic_error("echelon was computed without transform tracking");
    std::vector<Rat> row_coeffs;
    const std::vector<Rat> residual = reduce_against(e, v, &row_coeffs);
    for (const Rat& x : residual)
        if (x != 0) return false;
    if (coords) {
        coords->assign(e.transform.cols(), Rat(0));
        for (int i = 0; i < e.rank(); ++i) {
            if (row_coeffs[i] == 0) continue;
            for (int j = 0; j < e.transform.cols(); ++j)
                (*coords)[j] += row_coeffs[i] * e.transform.at(i, j);
        }
    }
    return true;
}

RatMatrix intersect_row_spaces(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("ambient dimension mismatch");
    const int da = a.rows(), db = b.rows();
    if (da == 0 || db == 0) return RatMatrix(0, a.cols());
    // x = alpha^T a = beta^T b  <=>  (alpha, -beta) in ker [a^T | b^T].
    RatMatrix m(a.cols(), da + db);
    for (int i = 0; i < a.cols(); ++i) {
        for (int j = 0; j < da; ++j) m.at(i, j) = a.at(j, i);
        for (int j = 0; j < db; ++j) m.at(i, da + j) = b.at(j, i);
    }
    const RatMatrix null_basis = kernel(m);
    RatMatrix raw(null_basis.rows(), a.cols());
    for (int k = 0; k < null_basis.rows(); ++k)
        for (int j = 0; j < a.cols(); ++j) {
            Rat s = 0;
            for (int i = 0; i < da; ++i) s += null_basis.at(k, i) * a.at(i, j);
            raw.at(k, j) = s;
        }
    return echelon(raw).rref;  // canonical reduced basis
}

RatMatrix orthogonal_complement_rows(const RatMatrix& a) {
    // A 0 x n input has an empty basis: the complement is all of the ambient
    // space, which is what kernel() returns in that case.
    return kernel(a);
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    RatMatrix a = m;
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            const Rat f = a.at(i, col) / a.at(col, col);
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

}  // namespace so3x8::linalg
