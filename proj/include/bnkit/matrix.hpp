// Dense matrices over F_c[H] and Smith normal form.
#ifndef BNKIT_MATRIX_HPP
#define BNKIT_MATRIX_HPP

#include <optional>
#include <vector>

#include "bnkit/poly.hpp"

namespace bnkit {

class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(FieldChar c, int rows, int cols)
        : c_(c), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Poly(c)) {}

    static PolyMatrix identity(FieldChar c, int n);

    FieldChar characteristic() const { return c_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly &at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Poly &at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    friend PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b);
    friend bool operator==(const PolyMatrix &a, const PolyMatrix &b);
    friend bool operator!=(const PolyMatrix &a, const PolyMatrix &b) { return !(a == b); }

    std::string to_string() const;

private:
    FieldChar c_;
    int rows_, cols_;
    std::vector<Poly> a_;
};

// U*M*V = S with S diagonal, s1 | s2 | ..., diagonal entries monic. U and V
// are products of swaps, transvections and unit row/column scalings, so
// their determinants are nonzero scalars.
struct SnfResult {
    PolyMatrix u, s, v;
    PolyMatrix v_inv;
    int rank = 0;
    // When the input carried gradings, these are the input gradings carried
    // through all swaps, aligned with the rows/columns of S.
    std::vector<int> row_grades, col_grades;
};

SnfResult snf(const PolyMatrix &m);

// SNF restricted to homogeneous operations. Requires every nonzero entry
// (j,i) to be a monomial c*H^k with row_grades[j] - col_grades[i] = 2k;
// the pivot rule (global minimal degree) then keeps all intermediate
// matrices homogeneous. Throws if the input is not graded-monomial.
SnfResult snf_graded(const PolyMatrix &m, std::vector<int> row_grades, std::vector<int> col_grades);

}  // namespace bnkit

#endif
