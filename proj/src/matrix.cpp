#include "bnkit/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace bnkit {

PolyMatrix PolyMatrix::identity(FieldChar c, int n) {
    PolyMatrix m(c, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly(c, 1);
    return m;
}

PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    PolyMatrix r(a.c_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Poly &aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Poly &bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

bool operator==(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) os << at(i, j).to_string() << (j + 1 < cols_ ? ", " : " ");
        os << "]\n";
    }
    return os.str();
}

namespace {

// Mutable SNF state; all elementary operations keep U*M*V = S exact and
// keep det(U), det(V) nonzero scalars.
struct SnfWork {
    PolyMatrix s, u, v, v_inv;
    std::vector<int> row_grades, col_grades;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
        if (!row_grades.empty()) std::swap(row_grades[a], row_grades[b]);
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
        for (int j = 0; j < v_inv.cols(); ++j) std::swap(v_inv.at(a, j), v_inv.at(b, j));
        if (!col_grades.empty()) std::swap(col_grades[a], col_grades[b]);
    }

    // row[i] -= q * row[k]
    void row_sub(int i, int k, const Poly &q) {
        if (q.is_zero()) return;
        for (int j = 0; j < s.cols(); ++j)
            if (!s.at(k, j).is_zero()) s.at(i, j) -= q * s.at(k, j);
        for (int j = 0; j < u.cols(); ++j)
            if (!u.at(k, j).is_zero()) u.at(i, j) -= q * u.at(k, j);
    }

    // col[j] -= q * col[k]
    void col_sub(int j, int k, const Poly &q) {
        if (q.is_zero()) return;
        for (int i = 0; i < s.rows(); ++i)
            if (!s.at(i, k).is_zero()) s.at(i, j) -= q * s.at(i, k);
        for (int i = 0; i < v.rows(); ++i)
            if (!v.at(i, k).is_zero()) v.at(i, j) -= q * v.at(i, k);
        // (I + a e_k e_j^T)^(-1) = I - a e_k e_j^T acting on the left:
        // row k of v_inv picks up +q * row j.
        for (int jj = 0; jj < v_inv.cols(); ++jj)
            if (!v_inv.at(j, jj).is_zero()) v_inv.at(k, jj) += q * v_inv.at(j, jj);
    }

    void scale_row(int i, const FieldElem &sc) {
        for (int j = 0; j < s.cols(); ++j) s.at(i, j) = s.at(i, j) * sc;
        for (int j = 0; j < u.cols(); ++j) u.at(i, j) = u.at(i, j) * sc;
    }

    void row_add(int dst, int src) {
        for (int j = 0; j < s.cols(); ++j)
            if (!s.at(src, j).is_zero()) s.at(dst, j) += s.at(src, j);
        for (int j = 0; j < u.cols(); ++j)
            if (!u.at(src, j).is_zero()) u.at(dst, j) += u.at(src, j);
    }

    void scale_col(int j, const FieldElem &sc) {
        for (int i = 0; i < s.rows(); ++i) s.at(i, j) = s.at(i, j) * sc;
        for (int i = 0; i < v.rows(); ++i) v.at(i, j) = v.at(i, j) * sc;
        FieldElem inv = sc.inverse();
        for (int jj = 0; jj < v_inv.cols(); ++jj) v_inv.at(j, jj) = v_inv.at(j, jj) * inv;
    }

    // Rational elimination suffers coefficient swell; dividing rows and
    // columns of the working submatrix by their coefficient content (a unit
    // scaling, so the normal form is unaffected) keeps numbers small. No-op
    // over prime fields, where residues cannot grow.
    void normalize_row(int i) {
        Rational content = row_content(i);
        if (content != 0 && content != 1)
            scale_row(i, FieldElem(s.characteristic(), content).inverse());
    }

    void normalize_col(int j) {
        if (s.characteristic().value() != 0) return;
        using boost::multiprecision::cpp_int;
        cpp_int g = 0, l = 1;
        for (int i = 0; i < s.rows(); ++i) content_acc(s.at(i, j), g, l);
        if (g != 0 && !(g == 1 && l == 1))
            scale_col(j, FieldElem(s.characteristic(), Rational(g, l)).inverse());
    }

private:
    static void content_acc(const Poly &p, boost::multiprecision::cpp_int &g,
                            boost::multiprecision::cpp_int &l) {
        using boost::multiprecision::cpp_int;
        for (int k = 0; k <= p.degree(); ++k) {
            FieldElem e = p.coeff(k);
            const Rational &r = e.rational();
            if (r == 0) continue;
            g = boost::multiprecision::gcd(g, cpp_int(boost::multiprecision::abs(
                                                  boost::multiprecision::numerator(r))));
            l = boost::multiprecision::lcm(l, cpp_int(boost::multiprecision::denominator(r)));
        }
    }

    Rational row_content(int i) const {
        if (s.characteristic().value() != 0) return 1;
        boost::multiprecision::cpp_int g = 0, l = 1;
        for (int j = 0; j < s.cols(); ++j) content_acc(s.at(i, j), g, l);
        if (g == 0) return 0;
        return Rational(g, l);
    }
};

// Minimal-degree nonzero entry in the trailing submatrix, ties broken by
// lowest (row, column).
bool find_pivot(const PolyMatrix &s, int k, int &pr, int &pc) {
    int best = -1;
    for (int i = k; i < s.rows(); ++i)
        for (int j = k; j < s.cols(); ++j) {
            const Poly &e = s.at(i, j);
            if (e.is_zero()) continue;
            if (best < 0 || e.degree() < best) {
                best = e.degree();
                pr = i;
                pc = j;
            }
        }
    return best >= 0;
}

SnfResult snf_impl(const PolyMatrix &m, std::vector<int> row_grades, std::vector<int> col_grades) {
    FieldChar c = m.characteristic();
    SnfWork w{m, PolyMatrix::identity(c, m.rows()), PolyMatrix::identity(c, m.cols()),
              PolyMatrix::identity(c, m.cols()), std::move(row_grades), std::move(col_grades)};

    int n = std::min(m.rows(), m.cols());
    int k = 0;
    for (; k < n; ++k) {
        int pr = 0, pc = 0;
        if (!find_pivot(w.s, k, pr, pc)) break;
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);

        for (;;) {
            if (c.value() == 0) {
                for (int i = k; i < w.s.rows(); ++i) w.normalize_row(i);
                for (int j = k + 1; j < w.s.cols(); ++j) w.normalize_col(j);
            }

            // Reduce column k, then row k, against the pivot; remainders
            // strictly drop the minimal degree, so this terminates. Over the
            // rationals, pre-scaling by lc(pivot)^(deg gap + 1) makes this a
            // pseudo-division of primitive integer polynomials (quotients
            // stay integral), which avoids the exponential coefficient swell
            // of plain Euclidean elimination.
            bool dirty = false;
            for (int i = k + 1; i < w.s.rows(); ++i) {
                if (w.s.at(i, k).is_zero()) continue;
                if (c.value() == 0) {
                    int delta = w.s.at(i, k).degree() - w.s.at(k, k).degree();
                    FieldElem f = field_one(c);
                    for (int t = 0; t <= delta; ++t) f *= w.s.at(k, k).leading();
                    if (!f.is_one()) w.scale_row(i, f);
                }
                auto [q, r] = poly_divmod(w.s.at(i, k), w.s.at(k, k));
                w.row_sub(i, k, q);
                if (!r.is_zero()) dirty = true;
                if (c.value() == 0) w.normalize_row(i);
            }
            for (int j = k + 1; j < w.s.cols(); ++j) {
                if (w.s.at(k, j).is_zero()) continue;
                if (c.value() == 0) {
                    int delta = w.s.at(k, j).degree() - w.s.at(k, k).degree();
                    FieldElem f = field_one(c);
                    for (int t = 0; t <= delta; ++t) f *= w.s.at(k, k).leading();
                    if (!f.is_one()) w.scale_col(j, f);
                }
                auto [q, r] = poly_divmod(w.s.at(k, j), w.s.at(k, k));
                w.col_sub(j, k, q);
                if (!r.is_zero()) dirty = true;
                if (c.value() == 0) w.normalize_col(j);
            }
            if (dirty) {
                int rr = 0, cc = 0;
                find_pivot(w.s, k, rr, cc);
                w.swap_rows(k, rr);
                w.swap_cols(k, cc);
                continue;
            }

            // Row and column are clear; enforce that the pivot divides the
            // rest of the submatrix before moving on.
            bool fixed = false;
            for (int i = k + 1; i < w.s.rows() && !fixed; ++i)
                for (int j = k + 1; j < w.s.cols() && !fixed; ++j)
                    if (!w.s.at(i, j).is_zero() && !poly_divides(w.s.at(k, k), w.s.at(i, j))) {
                        w.row_add(k, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }

        w.scale_row(k, w.s.at(k, k).leading().inverse());
    }

    SnfResult res;
    res.rank = k;
    res.u = std::move(w.u);
    res.s = std::move(w.s);
    res.v = std::move(w.v);
    res.v_inv = std::move(w.v_inv);
    res.row_grades = std::move(w.row_grades);
    res.col_grades = std::move(w.col_grades);
    return res;
}

}  // namespace

SnfResult snf(const PolyMatrix &m) { return snf_impl(m, {}, {}); }

SnfResult snf_graded(const PolyMatrix &m, std::vector<int> row_grades, std::vector<int> col_grades) {
    if (static_cast<int>(row_grades.size()) != m.rows() || static_cast<int>(col_grades.size()) != m.cols())
        throw std::invalid_argument("grade vector sizes do not match matrix shape");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Poly &e = m.at(i, j);
            if (e.is_zero()) continue;
            int diff = row_grades[i] - col_grades[j];
            if (!e.is_monomial() || diff < 0 || diff % 2 != 0 || e.degree() != diff / 2)
                throw std::invalid_argument("matrix entry is not graded-monomial at (" + std::to_string(i) +
                                            "," + std::to_string(j) + "): " + e.to_string());
        }
    return snf_impl(m, std::move(row_grades), std::move(col_grades));
}

}  // namespace bnkit
