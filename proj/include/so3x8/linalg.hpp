#pragma once

#include <vector>

#include "so3x8/rational.hpp"

namespace so3x8::linalg {

/// Dense matrix over exact rationals.  All rank / kernel / membership
/// decisions in the project run through the fraction-free elimination below;
/// no floating point is involved anywhere.
class RatMatrix {
public:
    RatMatrix() : m_rows(0), m_cols(0) {}
    RatMatrix(int rows, int cols)
        : m_rows(rows), m_cols(cols), m_data(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return m_rows; }
    int cols() const { return m_cols; }

    Rat& at(int i, int j) { return m_data[static_cast<size_t>(i) * m_cols + j]; }
    const Rat& at(int i, int j) const {
        return m_data[static_cast<size_t>(i) * m_cols + j];
    }

    std::vector<Rat> row(int i) const;
    void set_row(int i, const std::vector<Rat>& v);

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix scaled(const Rat& s) const;
    bool operator==(const RatMatrix& o) const {
        return m_rows == o.m_rows && m_cols == o.m_cols && m_data == o.m_data;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_antisymmetric() const;
    Rat trace() const;

    /// Matrix commutator X*Y - Y*X (square matrices).
    static RatMatrix bracket(const RatMatrix& x, const RatMatrix& y);

    /// Stack the rows of b under the rows of a (column counts must agree).
    static RatMatrix row_stack(const RatMatrix& a, const RatMatrix& b);

private:
    int m_rows, m_cols;
    std::vector<Rat> m_data;
};

/// Result of fraction-free Gaussian elimination brought to reduced row-echelon
/// form.  `transform * original = rref` row by row when requested, which is
/// how membership coordinates are recovered exactly.
struct Echelon {
    RatMatrix rref;            // rank x cols, each pivot normalized to 1
    RatMatrix transform;       // rank x original_rows (empty unless requested)
    std::vector<int> pivot_col;
    int rank() const { return static_cast<int>(pivot_col.size()); }
};

/// Fraction-free (Bareiss) forward elimination followed by exact
/// back-substitution.  Row order is chosen by smallest nonzero pivot to keep
/// intermediate integers small; the result is canonical regardless.
Echelon echelon(const RatMatrix& m, bool with_transform = false);

int rank(const RatMatrix& m);

/// Basis of { x : m x = 0 }, one kernel vector per row of the result.
RatMatrix kernel(const RatMatrix& m);

/// True when v lies in the row space described by e.
bool in_row_span(const Echelon& e, const std::vector<Rat>& v);

/// Write v as a combination of the *original* rows of the matrix that
/// produced e (requires with_transform).  Returns false if v is outside the
/// row space.
bool express_in_rows(const Echelon& e, const std::vector<Rat>& v,
                     std::vector<Rat>* coords);

/// Basis (as rows) of the intersection of the two row spaces.
RatMatrix intersect_row_spaces(const RatMatrix& a, const RatMatrix& b);

/// Basis (as rows) of { x : a x = 0 } — the dot-product orthogonal complement
/// of the row space of a inside the ambient coordinate space.
RatMatrix orthogonal_complement_rows(const RatMatrix& a);

/// Determinant of a square matrix (exact).
Rat determinant(const RatMatrix& m);

}  // namespace so3x8::linalg
