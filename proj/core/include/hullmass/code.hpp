#ifndef HULLMASS_CODE_HPP
#define HULLMASS_CODE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "hullmass/matrix.hpp"

namespace hullmass {

/// An [n,k] linear code held by its unique reduced-row-echelon generator
/// matrix. Two codes are equal iff their canonical generators are identical,
/// which makes deduplication exact and cheap.
///
/// For symplectic use the length is even and n/2 is the half-length.
class LinearCode {
public:
    /// Canonicalizes the row space of `rows`; rank-deficient input is fine,
    /// the true rank becomes the dimension.
    static LinearCode from_rows(const Matrix& rows);

    /// The standard LCD code: hermitian -> <e_1..e_k> in GF(q^2)^n;
    /// symplectic -> the [2n,2k] code spanned by (e_i|0),(0|e_i), i=1..k.
    static LinearCode canonical_lcd(const Field& f, Inner inner, std::size_t n, std::size_t k);

    const Field& field() const { return generator_.field(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dim() const { return generator_.rows(); }
    const Matrix& generator() const { return generator_; }

    bool operator==(const LinearCode& rhs) const { return generator_ == rhs.generator_; }
    bool operator!=(const LinearCode& rhs) const { return !(*this == rhs); }
    bool operator<(const LinearCode& rhs) const;

    /// Membership test for a length-n row vector.
    bool contains(const std::vector<Elem>& v) const;

    LinearCode dual(Inner inner) const;

    struct HullReport;
    HullReport hull(Inner inner) const;

    /// k - rank(Gram); cheaper than hull() when only the dimension matters.
    std::size_t hull_dim(Inner inner) const;

    bool is_lcd(Inner inner) const { return hull_dim(inner) == 0; }
    bool is_self_orthogonal(Inner inner) const { return hull_dim(inner) == dim(); }

    /// Generator matrix G of this code with G conj(G)^T = diag(1 x (k-l), 0 x l).
    Matrix hermitian_normal_form() const;

    /// Generator matrix with symplectic Gram diag(J2 x k/2), rows ordered
    /// c_1, c_1', c_2, c_2', ... Requires a symplectic LCD code.
    Matrix symplectic_basis() const;

    /// A form-preserving matrix Q with (code) * Q == target, for two LCD
    /// codes of the same parameters. hermitian: Q conj(Q)^T = I;
    /// symplectic: Q Omega Q^T = Omega.
    static Matrix transporter(const LinearCode& from, const LinearCode& to, Inner inner);

    /// Exact count of codewords c with <c,c>_H = 0, by direct enumeration.
    /// Throws if order^k exceeds `budget`.
    std::uint64_t so_codeword_count(std::uint64_t budget = 1u << 20) const;

    /// All [n,k+1] codes C (+) <x> raising the hull dimension by one:
    /// hermitian -> x runs over self-orthogonal vectors of dual \ hull;
    /// symplectic -> x runs over all vectors of dual \ hull.
    /// Duplicates removed via canonical generators; result sorted.
    std::vector<LinearCode> hull_extensions(Inner inner, std::uint64_t budget = 1u << 20) const;

    /// Image of this code under a column permutation: column j of the
    /// result is column perm[j] of the original generator.
    LinearCode permuted(const std::vector<std::size_t>& perm) const;

    /// Image under right multiplication by a square matrix.
    LinearCode transformed(const Matrix& q) const;

private:
    explicit LinearCode(Matrix canonical) : generator_(std::move(canonical)) {}

    Matrix generator_;
};

struct LinearCode::HullReport {
    std::size_t hull_dim;
    Matrix hull_basis;          ///< RREF basis of C intersect C-dual
    LinearCode lcd_complement;  ///< hull (+) complement == C; complement is LCD
};

/// Enumerates all order^k coefficient vectors a and invokes fn(a * G).
void for_each_codeword(const Matrix& generator,
                       const std::function<void(const std::vector<Elem>&)>& fn);

}  // namespace hullmass

#endif
