#ifndef HULLMASS_CENSUS_HPP
#define HULLMASS_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hullmass/code.hpp"
#include "hullmass/formulas.hpp"

namespace hullmass {
namespace census {

/// Visits every [length,k] code over f exactly once, one canonical RREF
/// generator per code: for each pivot-column subset, every assignment of
/// the free entries. Throws if the subspace count exceeds `cap`.
void for_each_code(const Field& f, std::size_t length, std::size_t k,
                   const std::function<void(const LinearCode&)>& fn,
                   std::uint64_t cap = 10'000'000);

struct CensusReport {
    Inner inner;
    unsigned q;  ///< base parameter; Hermitian codes live over GF(q^2)
    std::size_t length;
    std::size_t k;
    std::map<std::size_t, BigInt> counts;  ///< hull dimension -> enumerated count
    BigInt total;
    std::map<std::size_t, bool> formula_match;

    bool all_match() const;
};

/// Exhaustive per-hull-dimension count of [length,k] codes, compared
/// entry by entry against formulas::hull_mass. The hull dimensions run
/// over 0..k, including those the formulas say are impossible.
CensusReport hull_census(Inner inner, unsigned q, std::size_t length, std::size_t k,
                         std::uint64_t cap = 10'000'000);

/// Visits every element of U_n(q^2) or Sp_2n(q) exactly once by filtering
/// all candidate matrices through the defining identity; deliberately
/// shares no logic with formulas::group_order. Throws if the candidate
/// count exceeds `cap`.
void for_each_group_element(formulas::GroupKind kind, unsigned n, unsigned q,
                            const std::function<void(const Matrix&)>& fn,
                            std::uint64_t cap = 1u << 24);

struct StabilizerReport {
    BigInt orbit_size;
    BigInt stabilizer_size;
    BigInt group_order;
    bool product_equals_group_order;
    bool stabilizer_factorizes;  ///< equals |G_k| * |G_{n-k}|
    bool orbit_is_lcd_count;     ///< equals hull_mass at ell = 0
};

/// Orbit and stabilizer of the standard LCD code under the full group
/// action, by explicit group enumeration. For the symplectic form the
/// code is the [2n,2k] standard code and the group is Sp_2n(q).
StabilizerReport stabilizer_check(Inner inner, unsigned q, unsigned n, unsigned k,
                                  std::uint64_t cap = 1u << 24);

struct ClassificationReport {
    struct ClassInfo {
        LinearCode representative;  ///< lexicographically minimal under permutations
        std::uint64_t class_size;
        std::uint64_t aut_order;
    };
    std::vector<ClassInfo> classes;
    BigInt mass_lhs;  ///< sum over classes of length! / aut_order
    BigInt mass_rhs;  ///< hull_mass for the same parameters
    bool match;
};

/// Partitions the codes of hull dimension exactly ell into permutation-
/// equivalence classes by full scan over all length! column permutations,
/// and evaluates the mass identity. Requires length! <= perm_cap.
/// Hermitian only: coordinate permutations do not preserve the symplectic
/// form, so the symplectic census is not closed under them.
ClassificationReport classify(Inner inner, unsigned q, std::size_t length, std::size_t k,
                              std::size_t ell, std::uint64_t code_cap = 10'000'000,
                              std::uint64_t perm_cap = 1'000'000);

/// Exhaustive count of symplectic self-orthogonal [2n,k]_q codes
/// containing the fixed nonzero vector u.
BigInt sso_containing_census(unsigned q, unsigned n, unsigned k,
                             const std::vector<Elem>& u, std::uint64_t cap = 10'000'000);

}  // namespace census
}  // namespace hullmass

#endif
