#ifndef HULLMASS_MATRIX_HPP
#define HULLMASS_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hullmass/field.hpp"

namespace hullmass {

/// Which bilinear/sesquilinear form a Gram matrix or dual is taken under.
enum class Inner { hermitian, symplectic };

/// Dense matrix with exact entries in a small finite field.
///
/// Matrices are immutable values in spirit: operations return new matrices
/// and never mutate shared state. Desk scale only (tens of rows), so no
/// blocked or sparse storage.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    Matrix(const Field& f, std::size_t rows, std::size_t cols,
           std::vector<Elem> entries);

    static Matrix identity(const Field& f, std::size_t n);
    /// The standard alternating form [[O, I_n], [-I_n, O]] of size 2n.
    static Matrix omega(const Field& f, std::size_t n);

    const Field& field() const { return *f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Elem v) { a_[i * cols_ + j] = v; }
    const std::vector<Elem>& entries() const { return a_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-() const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix transpose() const;
    /// Entry-wise conjugation over the index-2 subfield.
    Matrix conj() const;
    /// conj().transpose(); errors unless the field is a quadratic extension.
    Matrix conj_transpose() const;

    bool is_zero() const;

    struct Rref;
    /// Gauss-Jordan elimination with leftmost-topmost pivot selection.
    Rref rref() const;

    std::size_t rank() const;
    Matrix inverse() const;  ///< throws std::domain_error if singular

    /// Basis of { y : M y^T = 0 } as rows; (cols - rank) x cols.
    Matrix right_kernel() const;

    /// Gram matrix of the rows of this generator matrix:
    /// hermitian -> G * conj(G)^T; symplectic -> G * Omega * G^T.
    Matrix gram(Inner inner) const;

    /// Congruence reduction of a skew-symmetric zero-diagonal matrix M:
    /// returns (Q, t) with Q invertible, Q M Q^T = diag(J2 x t/2, 0...) and
    /// t = rank(M), always even. Pairs are chosen at the lexicographically
    /// first nonzero off-diagonal entry.
    static std::pair<Matrix, std::size_t> skew_reduce(const Matrix& m);

    /// For a nonsingular Hermitian matrix M (M == conj_transpose(M)) returns
    /// invertible Q with Q M conj(Q)^T = I.
    static Matrix hermitian_unitarize(const Matrix& m);

private:
    void require_same_field(const Matrix& rhs) const;

    const Field* f_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

struct Matrix::Rref {
    Matrix reduced;                   ///< reduced row echelon form
    std::size_t rank;
    std::vector<std::size_t> pivots;  ///< strictly increasing pivot columns
    Matrix transform;                 ///< invertible; transform * M == reduced
};

}  // namespace hullmass

#endif
