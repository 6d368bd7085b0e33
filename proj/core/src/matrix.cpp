#include "hullmass/matrix.hpp"

#include <stdexcept>

namespace hullmass {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols,
               std::vector<Elem> entries)
    : f_(&f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("entry count does not match matrix shape");
    for (Elem v : a_)
        if (v >= f.order()) throw std::invalid_argument("matrix entry out of field range");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::omega(const Field& f, std::size_t n) {
    Matrix m(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, n + i, 1);
        m.set(n + i, i, f.neg(1));
    }
    return m;
}

void Matrix::require_same_field(const Matrix& rhs) const {
    if (!f_->same_as(rhs.field()))
        throw std::invalid_argument("matrices belong to different fields");
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_field(rhs);
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(*f_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.set(i, j, f_->add(out.at(i, j), f_->mul(v, rhs.at(k, j))));
        }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(*f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_->neg(a_[i]);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return f_->same_as(*rhs.f_) && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

Matrix Matrix::transpose() const {
    Matrix out(*f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::conj() const {
    if (!f_->has_quadratic_subfield())
        throw std::domain_error("conjugation requires a quadratic extension field");
    Matrix out(*f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_->conj(a_[i]);
    return out;
}

Matrix Matrix::conj_transpose() const { return conj().transpose(); }

bool Matrix::is_zero() const {
    for (Elem v : a_)
        if (v != 0) return false;
    return true;
}

Matrix::Rref Matrix::rref() const {
    Matrix r = *this;
    Matrix t = identity(*f_, rows_);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        // leftmost, topmost pivot
        std::size_t p = row;
        while (p < rows_ && r.at(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(r.a_[row * cols_ + j], r.a_[p * cols_ + j]);
            for (std::size_t j = 0; j < rows_; ++j) std::swap(t.a_[row * rows_ + j], t.a_[p * rows_ + j]);
        }
        Elem s = f_->inv(r.at(row, col));
        if (s != 1) {
            for (std::size_t j = 0; j < cols_; ++j) r.set(row, j, f_->mul(s, r.at(row, j)));
            for (std::size_t j = 0; j < rows_; ++j) t.set(row, j, f_->mul(s, t.at(row, j)));
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            Elem c = r.at(i, col);
            if (c == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                r.set(i, j, f_->sub(r.at(i, j), f_->mul(c, r.at(row, j))));
            for (std::size_t j = 0; j < rows_; ++j)
                t.set(i, j, f_->sub(t.at(i, j), f_->mul(c, t.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return Rref{std::move(r), pivots.size(), std::move(pivots), std::move(t)};
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Rref r = rref();
    if (r.rank != rows_) throw std::domain_error("matrix is singular");
    return r.transform;
}

Matrix Matrix::right_kernel() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    Matrix out(*f_, cols_ - r.rank, cols_);
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        out.set(k, j, 1);
        for (std::size_t i = 0; i < r.rank; ++i)
            out.set(k, r.pivots[i], f_->neg(r.reduced.at(i, j)));
        ++k;
    }
    return out;
}

Matrix Matrix::gram(Inner inner) const {
    if (inner == Inner::hermitian) return *this * conj_transpose();
    if (cols_ % 2 != 0)
        throw std::invalid_argument("symplectic Gram matrix needs an even number of columns");
    return *this * omega(*f_, cols_ / 2) * transpose();
}

namespace {

// Pairing of transformed rows i and j: (Q M Q'^T)[i][j] where Q' is Q or
// its conjugate depending on the form.
Elem pairing(const Matrix& q, const Matrix& m, std::size_t i, std::size_t j, bool hermitian) {
    const Field& f = q.field();
    Elem acc = 0;
    for (std::size_t a = 0; a < m.rows(); ++a) {
        Elem qa = q.at(i, a);
        if (qa == 0) continue;
        Elem inner = 0;
        for (std::size_t b = 0; b < m.cols(); ++b) {
            Elem qb = q.at(j, b);
            if (qb == 0) continue;
            if (hermitian) qb = f.conj(qb);
            inner = f.add(inner, f.mul(m.at(a, b), qb));
        }
        acc = f.add(acc, f.mul(qa, inner));
    }
    return acc;
}

void swap_rows(Matrix& q, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < q.cols(); ++c) {
        Elem t = q.at(i, c);
        q.set(i, c, q.at(j, c));
        q.set(j, c, t);
    }
}

void scale_row(Matrix& q, std::size_t i, Elem s) {
    const Field& f = q.field();
    for (std::size_t c = 0; c < q.cols(); ++c) q.set(i, c, f.mul(s, q.at(i, c)));
}

// row_i += s * row_j
void add_row(Matrix& q, std::size_t i, std::size_t j, Elem s) {
    const Field& f = q.field();
    for (std::size_t c = 0; c < q.cols(); ++c)
        q.set(i, c, f.add(q.at(i, c), f.mul(s, q.at(j, c))));
}

}  // namespace

std::pair<Matrix, std::size_t> Matrix::skew_reduce(const Matrix& m) {
    const Field& f = m.field();
    std::size_t k = m.rows();
    if (m.cols() != k) throw std::invalid_argument("skew_reduce needs a square matrix");
    for (std::size_t i = 0; i < k; ++i) {
        if (m.at(i, i) != 0)
            throw std::invalid_argument("skew_reduce needs a zero diagonal");
        for (std::size_t j = 0; j < k; ++j)
            if (m.at(i, j) != f.neg(m.at(j, i)))
                throw std::invalid_argument("skew_reduce needs a skew-symmetric matrix");
    }

    Matrix q = identity(f, k);
    std::size_t r = 0;
    while (true) {
        // lexicographically first nonzero off-diagonal entry at or below r
        std::size_t pi = k, pj = k;
        for (std::size_t i = r; i < k && pi == k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (pairing(q, m, i, j, false) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == k) break;
        swap_rows(q, r, pi);
        swap_rows(q, r + 1, pj);  // pj > pi >= r, so unaffected by the first swap
        Elem c = pairing(q, m, r, r + 1, false);
        scale_row(q, r + 1, f.inv(c));
        for (std::size_t t = r + 2; t < k; ++t) {
            Elem alpha = pairing(q, m, t, r + 1, false);
            Elem beta = pairing(q, m, t, r, false);
            if (alpha != 0) add_row(q, t, r, f.neg(alpha));
            if (beta != 0) add_row(q, t, r + 1, beta);
        }
        r += 2;
    }
    return {std::move(q), r};
}

Matrix Matrix::hermitian_unitarize(const Matrix& m) {
    const Field& f = m.field();
    std::size_t k = m.rows();
    if (m.cols() != k) throw std::invalid_argument("hermitian_unitarize needs a square matrix");
    if (m != m.conj_transpose())
        throw std::invalid_argument("hermitian_unitarize needs a Hermitian matrix");
    if (m.rank() != k) throw std::domain_error("hermitian_unitarize needs a nonsingular matrix");

    Matrix q = identity(f, k);
    for (std::size_t r = 0; r < k; ++r) {
        std::size_t sel = k;
        for (std::size_t i = r; i < k; ++i)
            if (pairing(q, m, i, i, true) != 0) {
                sel = i;
                break;
            }
        if (sel == k) {
            // All remaining diagonals vanish; repair with rows i < j of
            // nonzero pairing, scanning c in encoding order.
            std::size_t pi = k, pj = k;
            for (std::size_t i = r; i < k && pi == k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    if (pairing(q, m, i, j, true) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == k) throw std::logic_error("nonsingular Hermitian matrix with totally isotropic space");
            for (unsigned c = 1; c < f.order(); ++c) {
                Matrix cand = q;
                add_row(cand, pi, pj, static_cast<Elem>(c));
                if (pairing(cand, m, pi, pi, true) != 0) {
                    q = std::move(cand);
                    break;
                }
            }
            sel = pi;
        }
        swap_rows(q, r, sel);
        Elem d = pairing(q, m, r, r, true);  // lies in the subfield
        scale_row(q, r, f.inv(f.solve_norm(d)));
        for (std::size_t t = r + 1; t < k; ++t) {
            Elem c = pairing(q, m, t, r, true);
            if (c != 0) add_row(q, t, r, f.neg(c));
        }
    }
    return q;
}

}  // namespace hullmass
