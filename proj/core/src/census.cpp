#include "hullmass/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hullmass {
namespace census {

namespace {

const Field& field_for(Inner inner, unsigned q) {
    return Field::of_order(inner == Inner::hermitian ? q * q : q);
}

// formulas::hull_mass speaks in the Hermitian length / symplectic
// half-length; censuses speak in the full length.
formulas::CountQuery make_query(Inner inner, unsigned q, std::size_t length,
                                std::size_t k, std::size_t ell) {
    if (inner == Inner::symplectic && length % 2 != 0)
        throw std::invalid_argument("symplectic census needs an even length");
    unsigned n = static_cast<unsigned>(inner == Inner::hermitian ? length : length / 2);
    return {inner, q, n, static_cast<unsigned>(k), static_cast<unsigned>(ell)};
}

}  // namespace

void for_each_code(const Field& f, std::size_t length, std::size_t k,
                   const std::function<void(const LinearCode&)>& fn, std::uint64_t cap) {
    if (k > length) throw std::invalid_argument("for_each_code: dimension exceeds length");
    {
        BigInt total = formulas::gaussian_binomial(static_cast<long long>(length),
                                                   static_cast<long long>(k), f.order());
        if (total > cap)
            throw std::runtime_error("for_each_code: " + total.str() +
                                     " codes exceed the enumeration cap");
    }
    std::vector<std::size_t> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
        // free entries: (i,j) with j > pivots[i] and j not a pivot column
        std::vector<bool> is_pivot(length, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = pivots[i] + 1; j < length; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        Matrix g(f, k, length);
        for (std::size_t i = 0; i < k; ++i) g.set(i, pivots[i], 1);
        std::vector<Elem> vals(free_pos.size(), 0);
        while (true) {
            fn(LinearCode::from_rows(g));
            std::size_t i = 0;
            for (; i < vals.size(); ++i) {
                Elem next = static_cast<Elem>((vals[i] + 1) % f.order());
                vals[i] = next;
                g.set(free_pos[i].first, free_pos[i].second, next);
                if (next != 0) break;
            }
            if (i == vals.size()) break;
        }

        // next pivot-column k-subset in lexicographic order
        std::size_t i = k;
        while (i > 0 && pivots[i - 1] == length - k + i - 1) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

bool CensusReport::all_match() const {
    for (const auto& [ell, ok] : formula_match)
        if (!ok) return false;
    return true;
}

CensusReport hull_census(Inner inner, unsigned q, std::size_t length, std::size_t k,
                         std::uint64_t cap) {
    const Field& f = field_for(inner, q);
    CensusReport rep{inner, q, length, k, {}, 0, {}};
    for (std::size_t ell = 0; ell <= k; ++ell) rep.counts[ell] = 0;
    for_each_code(f, length, k, [&](const LinearCode& c) {
        rep.counts[c.hull_dim(inner)] += 1;
        rep.total += 1;
    }, cap);
    for (std::size_t ell = 0; ell <= k; ++ell) {
        BigInt expected = formulas::hull_mass(make_query(inner, q, length, k, ell)).count;
        rep.formula_match[ell] = rep.counts[ell] == expected;
    }
    return rep;
}

void for_each_group_element(formulas::GroupKind kind, unsigned n, unsigned q,
                            const std::function<void(const Matrix&)>& fn, std::uint64_t cap) {
    const bool unitary = kind == formulas::GroupKind::unitary;
    const Field& f = Field::of_order(unitary ? q * q : q);
    const std::size_t dim = unitary ? n : 2 * n;
    {
        double candidates = 1;
        for (std::size_t i = 0; i < dim * dim; ++i) candidates *= f.order();
        if (candidates > double(cap))
            throw std::runtime_error("for_each_group_element: candidate count exceeds the cap");
    }
    if (dim == 0) {
        fn(Matrix(f, 0, 0));
        return;
    }
    Matrix m(f, dim, dim);
    Matrix target = unitary ? Matrix::identity(f, dim) : Matrix::omega(f, n);
    std::vector<Elem> vals(dim * dim, 0);
    while (true) {
        Matrix check = unitary ? m * m.conj_transpose() : m * Matrix::omega(f, n) * m.transpose();
        if (check == target) fn(m);
        std::size_t i = 0;
        for (; i < vals.size(); ++i) {
            Elem next = static_cast<Elem>((vals[i] + 1) % f.order());
            vals[i] = next;
            m.set(i / dim, i % dim, next);
            if (next != 0) break;
        }
        if (i == vals.size()) break;
    }
}

StabilizerReport stabilizer_check(Inner inner, unsigned q, unsigned n, unsigned k,
                                  std::uint64_t cap) {
    const Field& f = field_for(inner, q);
    const bool unitary = inner == Inner::hermitian;
    LinearCode c = LinearCode::canonical_lcd(f, inner, n, k);

    BigInt stab = 0;
    std::set<LinearCode> orbit;
    for_each_group_element(
        unitary ? formulas::GroupKind::unitary : formulas::GroupKind::symplectic, n, q,
        [&](const Matrix& m) {
            LinearCode image = c.transformed(m);
            if (image == c) stab += 1;
            orbit.insert(std::move(image));
        },
        cap);

    StabilizerReport rep;
    rep.orbit_size = static_cast<std::uint64_t>(orbit.size());
    rep.stabilizer_size = stab;
    const auto kind = unitary ? formulas::GroupKind::unitary : formulas::GroupKind::symplectic;
    rep.group_order = formulas::group_order(kind, n, q);
    rep.product_equals_group_order = rep.orbit_size * rep.stabilizer_size == rep.group_order;
    rep.stabilizer_factorizes =
        rep.stabilizer_size ==
        formulas::group_order(kind, k, q) * formulas::group_order(kind, n - k, q);
    formulas::CountQuery lcd{inner, q, n, static_cast<unsigned>(unitary ? k : 2 * k), 0};
    rep.orbit_is_lcd_count = rep.orbit_size == formulas::hull_mass(lcd).count;
    return rep;
}

ClassificationReport classify(Inner inner, unsigned q, std::size_t length, std::size_t k,
                              std::size_t ell, std::uint64_t code_cap,
                              std::uint64_t perm_cap) {
    // A coordinate permutation preserves the Hermitian form but not the
    // symplectic one (it scrambles the pairing between the two halves), so
    // permutation classes of a symplectic census are not well defined and
    // the mass identity would be false.
    if (inner != Inner::hermitian)
        throw std::invalid_argument(
            "classify: permutation equivalence preserves only Hermitian hulls");
    const Field& f = field_for(inner, q);
    {
        std::uint64_t fact = 1;
        for (std::size_t i = 2; i <= length; ++i) {
            fact *= i;
            if (fact > perm_cap)
                throw std::runtime_error("classify: length! exceeds the permutation cap");
        }
    }

    std::vector<std::size_t> id(length);
    std::iota(id.begin(), id.end(), 0);

    auto canonical = [&](const LinearCode& c) {
        std::vector<std::size_t> perm = id;
        LinearCode best = c;
        do {
            LinearCode cand = c.permuted(perm);
            if (cand < best) best = std::move(cand);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    std::map<LinearCode, std::uint64_t> class_sizes;
    for_each_code(f, length, k, [&](const LinearCode& c) {
        if (c.hull_dim(inner) != ell) return;
        ++class_sizes[canonical(c)];
    }, code_cap);

    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= length; ++i) fact *= i;

    ClassificationReport rep;
    rep.mass_lhs = 0;
    for (const auto& [representative, size] : class_sizes) {
        std::uint64_t aut = 0;
        std::vector<std::size_t> perm = id;
        do {
            if (representative.permuted(perm) == representative) ++aut;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (aut == 0 || fact % aut != 0 || fact / aut != size)
            throw std::logic_error("classify: class size does not equal length!/aut");
        rep.classes.push_back({representative, size, aut});
        rep.mass_lhs += BigInt(fact / aut);
    }
    rep.mass_rhs = formulas::hull_mass(make_query(inner, q, length, k, ell)).count;
    rep.match = rep.mass_lhs == rep.mass_rhs;
    return rep;
}

BigInt sso_containing_census(unsigned q, unsigned n, unsigned k,
                             const std::vector<Elem>& u, std::uint64_t cap) {
    const Field& f = Field::of_order(q);
    if (u.size() != 2 * static_cast<std::size_t>(n))
        throw std::invalid_argument("sso_containing_census: vector length must be 2n");
    bool zero = true;
    for (Elem v : u)
        if (v != 0) zero = false;
    if (zero) throw std::invalid_argument("sso_containing_census: u must be nonzero");

    BigInt count = 0;
    for_each_code(f, 2 * n, k, [&](const LinearCode& c) {
        if (!c.contains(u)) return;
        if (!c.is_self_orthogonal(Inner::symplectic)) return;
        count += 1;
    }, cap);
    return count;
}

}  // namespace census
}  // namespace hullmass
