// Acceptance gate: one check per shipped guarantee, each reported as a
// single [PASS]/[FAIL] line with its runtime. Returns nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "hullmass/census.hpp"
#include "hullmass/code.hpp"
#include "hullmass/formulas.hpp"

using namespace hullmass;
using namespace hullmass::formulas;
using namespace hullmass::census;

namespace {

int failures = 0;

void criterion(int number, const char* name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("[FAIL] %d %s — exception: %s\n", number, name, e.what());
        ++failures;
        return;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, name, secs);
    if (!ok) ++failures;
}

bool example_reproduction() {
    if (hull_mass({Inner::hermitian, 2, 4, 2, 1}).count != 90) return false;
    CensusReport rep = hull_census(Inner::hermitian, 2, 4, 2);
    return rep.counts.at(0) == 240 && rep.counts.at(1) == 90 && rep.counts.at(2) == 27 &&
           rep.total == 357 && rep.all_match();
}

bool classification_reproduction() {
    ClassificationReport rep = classify(Inner::hermitian, 2, 4, 2, 1);
    if (rep.classes.size() != 7 || !rep.match || rep.mass_lhs != 90) return false;
    std::multiset<std::uint64_t> auts;
    for (const auto& c : rep.classes) auts.insert(c.aut_order);
    return auts == std::multiset<std::uint64_t>{1, 1, 2, 2, 3, 3, 12};
}

bool symplectic_reproduction() {
    CensusReport rep = hull_census(Inner::symplectic, 3, 4, 2);
    if (rep.counts.at(2) != 40 || !rep.all_match()) return false;
    for (unsigned code = 1; code < 81; ++code) {
        std::vector<Elem> u(4);
        unsigned v = code;
        for (unsigned b = 0; b < 4; ++b) {
            u[b] = static_cast<Elem>(v % 3);
            v /= 3;
        }
        if (sso_containing_census(3, 2, 2, u) != 4) return false;
    }
    return true;
}

bool formula_census_grid() {
    auto grid_ok = [](Inner inner, unsigned q, std::size_t max_length) {
        for (std::size_t length = 1; length <= max_length; ++length) {
            if (inner == Inner::symplectic && length % 2 != 0) continue;
            for (std::size_t k = 0; k <= length; ++k) {
                CensusReport rep = hull_census(inner, q, length, k);
                if (!rep.all_match()) return false;
                unsigned order = inner == Inner::hermitian ? q * q : q;
                if (rep.total != gaussian_binomial(static_cast<long long>(length),
                                                   static_cast<long long>(k), order))
                    return false;
            }
        }
        return true;
    };
    return grid_ok(Inner::hermitian, 2, 4) && grid_ok(Inner::hermitian, 3, 3) &&
           grid_ok(Inner::symplectic, 2, 6) && grid_ok(Inner::symplectic, 3, 4);
}

bool group_order_verification() {
    auto count = [](GroupKind kind, unsigned n, unsigned q) {
        BigInt c = 0;
        for_each_group_element(kind, n, q, [&](const Matrix&) { c += 1; });
        return c;
    };
    if (count(GroupKind::unitary, 1, 2) != group_order(GroupKind::unitary, 1, 2)) return false;
    if (count(GroupKind::unitary, 2, 2) != group_order(GroupKind::unitary, 2, 2)) return false;
    if (count(GroupKind::unitary, 1, 3) != group_order(GroupKind::unitary, 1, 3)) return false;
    if (count(GroupKind::symplectic, 1, 2) != group_order(GroupKind::symplectic, 1, 2))
        return false;
    if (count(GroupKind::symplectic, 2, 2) != group_order(GroupKind::symplectic, 2, 2))
        return false;
    if (count(GroupKind::symplectic, 1, 3) != group_order(GroupKind::symplectic, 1, 3))
        return false;

    StabilizerReport h = stabilizer_check(Inner::hermitian, 2, 2, 1);
    if (h.orbit_size != 2 || h.stabilizer_size != 9 || h.group_order != 18 ||
        !h.product_equals_group_order || !h.stabilizer_factorizes || !h.orbit_is_lcd_count)
        return false;
    StabilizerReport s = stabilizer_check(Inner::symplectic, 2, 2, 1);
    return s.orbit_size == 20 && s.stabilizer_size == 36 && s.group_order == 720 &&
           s.product_equals_group_order && s.stabilizer_factorizes && s.orbit_is_lcd_count;
}

bool diagonal_and_jacobi() {
    for (unsigned q : {2u, 3u}) {
        const Field& f = Field::of_order(q * q);
        for (unsigned n = 1; n <= 3; ++n) {
            // brute-force solution counts of the diagonal equation, all
            // right-hand sides
            std::vector<BigInt> brute(f.order(), 0);
            std::vector<Elem> x(n, 0);
            while (true) {
                Elem sum = 0;
                for (Elem xi : x) sum = f.add(sum, f.norm(xi));
                brute[sum] += 1;
                std::size_t i = 0;
                for (; i < n; ++i) {
                    x[i] = static_cast<Elem>((x[i] + 1) % f.order());
                    if (x[i] != 0) break;
                }
                if (i == n) break;
            }
            for (Elem a = 0; a < f.order(); ++a) {
                if (!f.in_subfield(a)) {
                    if (brute[a] != 0) return false;
                    continue;
                }
                if (brute[a] != diagonal_count(q, n, a == 0)) return false;
            }
        }
    }
    for (unsigned n = 1; n <= 3; ++n) {
        JacobiCheck c = jacobi_sum_check(2, n);
        if (c.lhs_zero_sum != c.rhs_zero || c.lhs_one_sum != c.rhs_one) return false;
    }
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        BigInt bq = q;
        for (unsigned n = 2; n <= 8; ++n) {
            if (diagonal_count(q, n, true) !=
                diagonal_count(q, n - 1, true) + (bq * bq - 1) * diagonal_count(q, n - 1, false))
                return false;
            if (diagonal_count(q, n, false) != (bq + 1) * diagonal_count(q, n - 1, true) +
                                                   (bq * bq - bq - 1) *
                                                       diagonal_count(q, n - 1, false))
                return false;
        }
    }
    return true;
}

bool constructive_properties() {
    std::mt19937 rng(2024);
    const Field& f4 = Field::of_order(4);
    const Field& f9 = Field::of_order(9);
    const Field& f2 = Field::of_order(2);
    const Field& f3 = Field::of_order(3);

    // normal-form Gram shape, 500 random codes
    for (int t = 0; t < 500; ++t) {
        const Field& f = t % 2 ? f9 : f4;
        std::size_t n = 3 + t % 3, k = 1 + t % 3;
        if (k > n) k = n;
        LinearCode c = testing::random_code(f, n, k, rng);
        Matrix nf = c.hermitian_normal_form();
        if (LinearCode::from_rows(nf) != c) return false;
        std::size_t ell = c.hull_dim(Inner::hermitian);
        Matrix gram = nf.gram(Inner::hermitian);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (gram.at(i, j) != ((i == j && i < k - ell) ? 1 : 0)) return false;
    }

    // symplectic basis Gram shape, 500 random LCD codes
    for (int t = 0; t < 500; ++t) {
        const Field& f = t % 2 ? f3 : f2;
        std::size_t half = 2 + t % 2;
        std::size_t k = 2 + 2 * (t % 2);  // always even: odd-dimensional LCD is impossible
        LinearCode c = testing::random_lcd(f, Inner::symplectic, 2 * half, k, rng);
        Matrix b = c.symplectic_basis();
        if (LinearCode::from_rows(b) != c) return false;
        Matrix gram = b.gram(Inner::symplectic);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Elem want = 0;
                if (i / 2 == j / 2 && j == i + 1 && i % 2 == 0) want = 1;
                if (i / 2 == j / 2 && i == j + 1 && j % 2 == 0) want = f.neg(1);
                if (gram.at(i, j) != want) return false;
            }
    }

    // transporters, 500 random LCD pairs split across both forms
    for (int t = 0; t < 250; ++t) {
        LinearCode a = testing::random_lcd(f4, Inner::hermitian, 4, 2, rng);
        LinearCode b = testing::random_lcd(f4, Inner::hermitian, 4, 2, rng);
        Matrix q = LinearCode::transporter(a, b, Inner::hermitian);
        if (q * q.conj_transpose() != Matrix::identity(f4, 4)) return false;
        if (a.transformed(q) != b) return false;
    }
    for (int t = 0; t < 250; ++t) {
        LinearCode a = testing::random_lcd(f2, Inner::symplectic, 6, 2, rng);
        LinearCode b = testing::random_lcd(f2, Inner::symplectic, 6, 2, rng);
        Matrix q = LinearCode::transporter(a, b, Inner::symplectic);
        Matrix omega = Matrix::omega(f2, 3);
        if (q * omega * q.transpose() != omega) return false;
        if (a.transformed(q) != b) return false;
    }

    // skew reduction block shape, 500 random skew matrices
    for (int t = 0; t < 500; ++t) {
        const Field& f = t % 2 ? f3 : f2;
        std::size_t k = 2 + t % 4;
        Matrix m = testing::random_skew(f, k, rng);
        auto [q, rank] = Matrix::skew_reduce(m);
        if (rank != m.rank() || rank % 2 != 0) return false;
        Matrix b = q * m * q.transpose();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Elem want = 0;
                if (i < rank && j < rank && i / 2 == j / 2) {
                    if (j == i + 1 && i % 2 == 0) want = 1;
                    if (i == j + 1 && j % 2 == 0) want = f.neg(1);
                }
                if (b.at(i, j) != want) return false;
            }
    }

    // every hull extension has the claimed hull dimension
    for (int t = 0; t < 40; ++t) {
        LinearCode c = testing::random_code(f4, 3, 1, rng);
        std::size_t ell = c.hull_dim(Inner::hermitian);
        for (const LinearCode& e : c.hull_extensions(Inner::hermitian))
            if (e.hull_dim(Inner::hermitian) != ell + 1) return false;
        LinearCode s = testing::random_code(f2, 4, 1 + t % 2, rng);
        std::size_t sell = s.hull_dim(Inner::symplectic);
        for (const LinearCode& e : s.hull_extensions(Inner::symplectic))
            if (e.hull_dim(Inner::symplectic) != sell + 1) return false;
    }

    // multiplicity identities, exhaustive at small sizes
    auto pair_ok = [&](Inner inner, const Field& f, unsigned length) {
        auto pairing_zero = [&](const std::vector<Elem>& x) {
            if (inner == Inner::symplectic) return true;
            Elem acc = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                acc = f.add(acc, f.mul(x[i], f.conj(x[i])));
            return acc == 0;
        };
        for (unsigned k = 1; k <= length; ++k) {
            bool ok = true;
            for_each_code(f, length, k, [&](const LinearCode& c) {
                std::size_t ell = c.hull_dim(inner);
                if (ell == 0) return;
                BigInt pairs = 0;
                for_each_code(f, length, k - 1, [&](const LinearCode& d) {
                    for (std::size_t i = 0; i < d.dim(); ++i) {
                        std::vector<Elem> row(length);
                        for (std::size_t j = 0; j < length; ++j)
                            row[j] = d.generator().at(i, j);
                        if (!c.contains(row)) return;
                    }
                    LinearCode dd = d.dual(inner);
                    for_each_codeword(dd.generator(), [&](const std::vector<Elem>& x) {
                        if (d.contains(x) || !c.contains(x)) return;
                        if (!pairing_zero(x)) return;
                        pairs += 1;
                    });
                });
                // hermitian: (q^2l - 1) q^2(k-1) with field order q^2;
                // symplectic: (q^l - 1) q^(k-1) — both are field-order powers
                BigInt expect = 1;
                unsigned base = f.order();
                for (std::size_t i = 0; i < ell; ++i) expect *= base;
                expect -= 1;
                for (unsigned i = 0; i + 1 < k; ++i) expect *= base;
                if (pairs != expect) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    };
    return pair_ok(Inner::hermitian, f4, 2) && pair_ok(Inner::hermitian, f4, 3) &&
           pair_ok(Inner::symplectic, f2, 2) && pair_ok(Inner::symplectic, f2, 4);
}

bool asymptotics() {
    Real tol("1e-9");
    Real eps("1e-4");
    auto ratio = [](Inner inner, unsigned q, unsigned n, unsigned k, unsigned ell) {
        BigInt mass = hull_mass({inner, q, n, k, ell}).count;
        unsigned length = inner == Inner::hermitian ? n : 2 * n;
        unsigned order = inner == Inner::hermitian ? q * q : q;
        BigInt total = gaussian_binomial(length, k, order);
        return mass.convert_to<Real>() / total.convert_to<Real>();
    };
    for (unsigned ell : {0u, 1u}) {
        Real lim = limit_density(Inner::hermitian, 2, ell, tol);
        if (boost::multiprecision::abs(ratio(Inner::hermitian, 2, 40, 20, ell) - lim) > eps)
            return false;
    }
    Real slim0 = limit_density(Inner::symplectic, 2, 0, tol);
    if (boost::multiprecision::abs(ratio(Inner::symplectic, 2, 40, 40, 0) - slim0) > eps)
        return false;
    // at dimension 40 an odd hull dimension is impossible, so the density
    // there is exactly 0; convergence for ell = 1 is checked at the
    // nearest dimension of the right parity
    if (hull_mass({Inner::symplectic, 2, 40, 40, 1}).count != 0) return false;
    Real slim1 = limit_density(Inner::symplectic, 2, 1, tol);
    if (boost::multiprecision::abs(ratio(Inner::symplectic, 2, 40, 41, 1) - slim1) > eps)
        return false;
    return true;
}

bool product_form_audit() {
    // the adopted product collapses to the self-orthogonal closed form
    // when the LCD part is empty
    for (unsigned q : {2u, 3u})
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned n = k; n <= k + 3; ++n)
                if (hull_mass({Inner::symplectic, q, n, k, k}).count !=
                    symplectic_so_count(q, n, k))
                    return false;

    // the alternate displayed product disagrees with the enumerated count
    // 15 at q=2, length 4, k=2, ell=2 — asserting the disagreement keeps
    // the discrepancy documented
    BigRat variant = symplectic_hull_mass_variant(2, 2, 2, 2);
    if (variant == BigRat(15)) return false;
    BigInt enumerated = hull_census(Inner::symplectic, 2, 4, 2).counts.at(2);
    if (enumerated != 15) return false;
    return hull_mass({Inner::symplectic, 2, 2, 2, 2}).count == enumerated;
}

}  // namespace

int main() {
    criterion(1, "worked example: mass 90 and census 240/90/27", example_reproduction);
    criterion(2, "classification: 7 classes, aut orders, mass identity",
              classification_reproduction);
    criterion(3, "symplectic census 40 and containing-vector count 4",
              symplectic_reproduction);
    criterion(4, "formula-census grid with partition identity", formula_census_grid);
    criterion(5, "group orders by enumeration and stabilizer products",
              group_order_verification);
    criterion(6, "diagonal counts, character sums, recurrences", diagonal_and_jacobi);
    criterion(7, "constructive-procedure postconditions (randomized + exhaustive)",
              constructive_properties);
    criterion(8, "finite-size densities approach the asymptotic limits", asymptotics);
    criterion(9, "product-form audit: adopted vs alternate symplectic product",
              product_form_audit);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
