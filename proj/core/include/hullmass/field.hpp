#ifndef HULLMASS_FIELD_HPP
#define HULLMASS_FIELD_HPP

#include <cstdint>
#include <vector>

namespace hullmass {

/// Canonical encoding of a field element: the base-p integer of its
/// coefficient vector in the polynomial basis, little-endian.
/// 0 encodes 0 and 1 encodes 1 in every field.
using Elem = std::uint16_t;

/// A small finite field GF(p^e) with an explicit monic irreducible modulus.
///
/// All arithmetic is exact and table-driven; supported orders are capped at
/// 256 so that exhaustive self-checks stay cheap. Instances are immutable
/// after construction and safe to share across threads.
class Field {
public:
    /// Builds GF(p^e) from an explicit modulus (e+1 little-endian
    /// coefficients in [0,p), monic). Irreducibility is checked by trial
    /// division. Throws std::invalid_argument on bad input.
    Field(unsigned p, unsigned e, std::vector<unsigned> modulus);

    /// Returns the cached field of the given order using the default
    /// modulus table (x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+2x+2 for
    /// GF(9), x^4+x+1 for GF(16), x^2+4x+2 for GF(25), x for primes).
    static const Field& of_order(unsigned q);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    unsigned order() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    /// Smallest encoding generating the multiplicative group.
    Elem generator() const { return gen_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;          ///< throws on a == 0
    Elem div(Elem a, Elem b) const;  ///< throws on b == 0
    Elem pow(Elem a, long long n) const;

    bool is_zero(Elem a) const { return a == 0; }

    /// True iff the degree is even, i.e. the field is a quadratic
    /// extension of its index-2 subfield GF(sub_order()).
    bool has_quadratic_subfield() const { return e_ % 2 == 0; }

    /// Order of the index-2 subfield (p^(e/2)); throws if degree is odd.
    unsigned sub_order() const;

    /// Conjugation a -> a^sub_order() over the index-2 subfield.
    /// An involutive field automorphism.
    Elem conj(Elem a) const;

    /// Conjugation with an explicit base field; errors unless this field
    /// is the quadratic extension of `base`.
    Elem frobenius(Elem a, const Field& base) const;

    /// Norm a -> a^(sub_order()+1); the result lies in the subfield.
    Elem norm(Elem a) const;

    /// True iff a is fixed by conj(), i.e. lies in the index-2 subfield.
    bool in_subfield(Elem a) const;

    /// Smallest x (by encoding) with norm(x) == c, for c in the subfield.
    /// solve_norm(0) == 0; throws if c is not in the subfield.
    Elem solve_norm(Elem c) const;

    /// Discrete logarithm to base generator(); throws on a == 0.
    unsigned dlog(Elem a) const;

    bool same_as(const Field& other) const;

private:
    void check(Elem a) const;

    unsigned p_, e_, q_;
    std::vector<unsigned> modulus_;
    Elem gen_ = 0;
    std::vector<Elem> add_;   // q*q
    std::vector<Elem> mul_;   // q*q
    std::vector<Elem> inv_;   // q (inv_[0] unused)
    std::vector<unsigned> log_;  // q (log_[0] unused)
};

}  // namespace hullmass

#endif
