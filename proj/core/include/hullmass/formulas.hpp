#ifndef HULLMASS_FORMULAS_HPP
#define HULLMASS_FORMULAS_HPP

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "hullmass/matrix.hpp"

namespace hullmass {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

namespace formulas {

/// Number of k-dimensional subspaces of an n-dimensional space over a
/// Q-element field, via the exact product formula. k > n yields 0.
BigInt gaussian_binomial(long long n, long long k, const BigInt& Q);

enum class GroupKind { unitary, symplectic };

/// |U_n(q^2)| = q^(n(n-1)/2) prod_{i=1}^{n} (q^i - (-1)^i);
/// |Sp_2n(q)|  = q^(n^2)      prod_{i=1}^{n} (q^2i - 1). n = 0 gives 1.
BigInt group_order(GroupKind kind, unsigned n, unsigned q);

/// Number of solutions of x_1^(q+1) + ... + x_n^(q+1) = a in GF(q^2)^n.
/// n = 0 follows the empty-sum convention (1 if a == 0, else 0).
BigInt diagonal_count(unsigned q, unsigned n, bool a_is_zero);

/// Parameters of a hull-dimension counting query. For Hermitian codes the
/// length is n over GF(q^2); for symplectic codes the length is 2n over
/// GF(q), so n is the half-length.
struct CountQuery {
    Inner inner;
    unsigned q;   ///< base parameter; Hermitian codes live over GF(q^2)
    unsigned n;
    unsigned k;
    unsigned ell;
};

struct CountReport {
    BigInt count;
    std::string formula_id;
};

/// Exact number of [n,k] codes over GF(q^2) (hermitian) or [2n,k] codes
/// over GF(q) (symplectic) whose hull dimension is exactly ell. Impossible
/// parameter combinations (ell too large, odd k-ell in the symplectic
/// case) yield count 0; malformed ones (k beyond the length) throw.
CountReport hull_mass(const CountQuery& query);

/// Closed form for the number of Hermitian self-orthogonal [n,k]_{q^2}
/// codes; cross-checks hull_mass at ell == k.
BigInt hermitian_so_count(unsigned q, unsigned n, unsigned k);

/// Closed form for the number of symplectic self-orthogonal [2n,k]_q
/// codes; cross-checks hull_mass at ell == k.
BigInt symplectic_so_count(unsigned q, unsigned n, unsigned k);

/// Alternate product form for the symplectic hull count. Kept only for
/// cross-checking: it disagrees with exhaustive enumeration (and with the
/// proof-derived product used by hull_mass) whenever ell > 1, so it is
/// returned as an exact rational rather than asserted integral.
BigRat symplectic_hull_mass_variant(unsigned q, unsigned n, unsigned k, unsigned ell);

/// Number of symplectic self-orthogonal [2n,k]_q codes containing a fixed
/// nonzero vector: prod_{i=1}^{k-1} (q^(2n-2i)-1)/(q^i-1). k > n yields 0.
BigInt sso_containing_count(unsigned q, unsigned n, unsigned k);

/// g_{q,n} = prod_{i=1}^{n} (1 - q^-i), exact.
BigRat g_series(const BigInt& q, unsigned n);

/// h_{q,ell} = prod_{i=1}^{ell} (q^i - 1), exact.
BigInt h_series(const BigInt& q, unsigned ell);

/// g_{q,infinity} to within `tol`, truncating on a geometric tail bound.
Real g_series_limit(const BigInt& q, const Real& tol);

/// Limit of hull_mass / gaussian_binomial for fixed ell as both k and the
/// codimension grow, to within `tol`.
Real limit_density(Inner inner, unsigned q, unsigned ell, const Real& tol);

struct JacobiCheck {
    BigInt lhs_zero_sum;  ///< q^(2n-2) + restricted J_0 character sums
    BigInt lhs_one_sum;   ///< q^(2n-2) + full J_1 character sums
    BigInt rhs_zero;      ///< diagonal_count(q, n, a = 0)
    BigInt rhs_one;       ///< diagonal_count(q, n, a != 0)
};

/// Evaluates both character-sum identities for the diagonal equation by
/// direct summation over GF(q^2)^n tuples (exact cyclotomic arithmetic).
/// Requires q^2 <= 256.
JacobiCheck jacobi_sum_check(unsigned q, unsigned n);

}  // namespace formulas
}  // namespace hullmass

#endif
