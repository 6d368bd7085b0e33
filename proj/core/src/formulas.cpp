#include "hullmass/formulas.hpp"

#include <stdexcept>
#include <vector>

#include "hullmass/field.hpp"

namespace hullmass {
namespace formulas {

namespace {

BigInt big_pow(const BigInt& base, unsigned long long e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BigInt to_integer(const BigRat& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error(std::string(what) + ": product did not clear to an integer");
    return boost::multiprecision::numerator(r);
}

}  // namespace

BigInt gaussian_binomial(long long n, long long k, const BigInt& Q) {
    if (k < 0) throw std::invalid_argument("gaussian_binomial: negative k");
    if (n < 0) throw std::invalid_argument("gaussian_binomial: negative n");
    if (Q < 2) throw std::invalid_argument("gaussian_binomial: Q must be >= 2");
    if (k > n) return 0;
    BigRat acc = 1;
    BigInt qn = big_pow(Q, static_cast<unsigned long long>(n));
    BigInt qk = big_pow(Q, static_cast<unsigned long long>(k));
    BigInt qj = 1;
    for (long long j = 0; j < k; ++j) {
        acc *= BigRat(qn - qj, qk - qj);
        qj *= Q;
    }
    return to_integer(acc, "gaussian_binomial");
}

BigInt group_order(GroupKind kind, unsigned n, unsigned q) {
    BigInt bq = q;
    if (kind == GroupKind::unitary) {
        BigInt r = big_pow(bq, static_cast<unsigned long long>(n) * (n - (n ? 1 : 0)) / 2);
        for (unsigned i = 1; i <= n; ++i)
            r *= big_pow(bq, i) - (i % 2 == 0 ? 1 : -1);
        return r;
    }
    BigInt r = big_pow(bq, static_cast<unsigned long long>(n) * n);
    for (unsigned i = 1; i <= n; ++i) r *= big_pow(bq, 2ull * i) - 1;
    return r;
}

BigInt diagonal_count(unsigned q, unsigned n, bool a_is_zero) {
    if (n == 0) return a_is_zero ? 1 : 0;
    BigInt bq = q;
    BigInt head = big_pow(bq, n - 1);
    BigInt qn = big_pow(bq, n);
    if (a_is_zero) return head * (n % 2 ? BigInt(qn - q + 1) : BigInt(qn + q - 1));
    return head * (n % 2 ? BigInt(qn + 1) : BigInt(qn - 1));
}

namespace {

// Orbit size of the unitary action on Hermitian LCD [n,k]_{q^2} codes.
BigRat hermitian_lcd_rat(unsigned q, unsigned n, unsigned k) {
    return BigRat(group_order(GroupKind::unitary, n, q),
                  group_order(GroupKind::unitary, k, q) *
                      group_order(GroupKind::unitary, n - k, q));
}

// Orbit size of the symplectic action on symplectic LCD [2n,2k0]_q codes.
BigRat symplectic_lcd_rat(unsigned q, unsigned n, unsigned k0) {
    return BigRat(group_order(GroupKind::symplectic, n, q),
                  group_order(GroupKind::symplectic, k0, q) *
                      group_order(GroupKind::symplectic, n - k0, q));
}

}  // namespace

CountReport hull_mass(const CountQuery& query) {
    const unsigned q = query.q, n = query.n, k = query.k, ell = query.ell;
    if (q < 2) throw std::invalid_argument("hull_mass: q must be a prime power >= 2");
    const unsigned length = query.inner == Inner::hermitian ? n : 2 * n;
    if (k > length) throw std::invalid_argument("hull_mass: dimension exceeds length");

    if (query.inner == Inner::hermitian) {
        if (ell > k || ell > n - k) return {0, "zero-by-constraints"};
        const unsigned k0 = k - ell;
        BigRat acc = hermitian_lcd_rat(q, n, k0);
        const bool odd = (n - k0) % 2 == 1;
        const BigInt bq = q;
        for (unsigned i = 1; i <= ell; ++i) {
            // (N_0^{q+1}(n-k0-2i+2) - 1) / (q^{2k0+2i} - q^{2k0}), split by
            // the parity of n - k0
            BigInt num = odd
                ? (big_pow(bq, n - k0 - 2 * i + 2) + 1) * (big_pow(bq, n - k0 - 2 * i + 1) - 1)
                : (big_pow(bq, n - k0 - 2 * i + 2) - 1) * (big_pow(bq, n - k0 - 2 * i + 1) + 1);
            BigInt den = big_pow(bq, 2 * k0) * (big_pow(bq, 2 * i) - 1);
            acc *= BigRat(num, den);
        }
        const char* id = ell == 0 ? "hermitian-lcd-orbit"
                                  : (ell == k ? "hermitian-so-product" : "hermitian-hull-product");
        return {to_integer(acc, "hull_mass(hermitian)"), id};
    }

    if (ell > k || ell > 2 * n - k) return {0, "zero-by-constraints"};
    if ((k - ell) % 2 != 0) return {0, "zero-by-parity"};
    const unsigned k0 = (k - ell) / 2;
    const BigInt bq = q;
    BigRat acc = symplectic_lcd_rat(q, n, k0);
    for (unsigned i = 1; i <= ell; ++i)
        acc *= BigRat(big_pow(bq, 2 * n - 2 * k0 - 2 * i + 2) - 1,
                      big_pow(bq, 2 * k0) * (big_pow(bq, i) - 1));
    const char* id = ell == 0 ? "symplectic-lcd-orbit"
                              : (ell == k ? "symplectic-so-product" : "symplectic-hull-product");
    return {to_integer(acc, "hull_mass(symplectic)"), id};
}

BigInt hermitian_so_count(unsigned q, unsigned n, unsigned k) {
    if (2 * k > n) return 0;
    const BigInt bq = q;
    BigRat acc = 1;
    const BigInt sign = n % 2 == 0 ? BigInt(q) - 1 : BigInt(1) - q;
    for (unsigned i = 1; i <= k; ++i) {
        BigInt num = big_pow(bq, n - 2 * i + 1) * (big_pow(bq, n - 2 * i + 2) + sign) - 1;
        acc *= BigRat(num, big_pow(bq, 2 * i) - 1);
    }
    return to_integer(acc, "hermitian_so_count");
}

BigInt symplectic_so_count(unsigned q, unsigned n, unsigned k) {
    if (k > n) return 0;
    const BigInt bq = q;
    BigRat acc = 1;
    for (unsigned i = 1; i <= k; ++i)
        acc *= BigRat(big_pow(bq, 2 * n - 2 * i + 2) - 1, big_pow(bq, i) - 1);
    return to_integer(acc, "symplectic_so_count");
}

BigRat symplectic_hull_mass_variant(unsigned q, unsigned n, unsigned k, unsigned ell) {
    if ((k - ell) % 2 != 0) throw std::invalid_argument("variant needs even k - ell");
    const unsigned k0 = (k - ell) / 2;
    const BigInt bq = q;
    BigRat acc = symplectic_lcd_rat(q, n, k0);
    for (unsigned i = 1; i <= ell; ++i)
        acc *= BigRat(big_pow(bq, 2 * n - k - i + 2) - 1,
                      big_pow(bq, k) - big_pow(bq, 2 * k0));
    return acc;
}

BigInt sso_containing_count(unsigned q, unsigned n, unsigned k) {
    if (k < 1) throw std::invalid_argument("sso_containing_count: k must be >= 1");
    if (k > n) return 0;
    const BigInt bq = q;
    BigRat acc = 1;
    for (unsigned i = 1; i + 1 <= k; ++i)
        acc *= BigRat(big_pow(bq, 2 * n - 2 * i) - 1, big_pow(bq, i) - 1);
    return to_integer(acc, "sso_containing_count");
}

BigRat g_series(const BigInt& q, unsigned n) {
    BigRat acc = 1;
    BigInt qi = 1;
    for (unsigned i = 1; i <= n; ++i) {
        qi *= q;
        acc *= BigRat(qi - 1, qi);
    }
    return acc;
}

BigInt h_series(const BigInt& q, unsigned ell) {
    BigInt acc = 1;
    BigInt qi = 1;
    for (unsigned i = 1; i <= ell; ++i) {
        qi *= q;
        acc *= qi - 1;
    }
    return acc;
}

Real g_series_limit(const BigInt& q, const Real& tol) {
    if (tol <= 0) throw std::invalid_argument("g_series_limit: tolerance must be positive");
    Real acc = 1;
    Real rq = Real(q);
    Real qi = 1;
    unsigned i = 0;
    while (true) {
        ++i;
        qi *= rq;
        acc *= Real(1) - Real(1) / qi;
        // tail: prod_{j>i} (1 - q^-j) differs from 1 by at most
        // q^-i / (q - 1)
        if (Real(1) / (qi * (rq - 1)) < tol) break;
    }
    return acc;
}

Real limit_density(Inner inner, unsigned q, unsigned ell, const Real& tol) {
    const Real t = tol / 8;
    const BigInt bq = q;
    if (inner == Inner::hermitian) {
        Real num = big_pow(bq, ell).convert_to<Real>() * g_series_limit(bq, t) *
                   g_series_limit(bq * bq * bq * bq, t);
        Real den = h_series(bq * bq, ell).convert_to<Real>() *
                   g_series_limit(bq * bq, t) * g_series_limit(bq * bq, t);
        return num / den;
    }
    Real num = big_pow(bq, ell).convert_to<Real>() * g_series_limit(bq, t);
    Real den = h_series(bq, ell).convert_to<Real>() * g_series_limit(bq * bq, t);
    return num / den;
}

namespace {

// Integer polynomials, little-endian. Used only for exact cyclotomic
// arithmetic in the character sums.
using IPoly = std::vector<BigInt>;

IPoly itrim(IPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Exact division by a monic divisor; remainder must vanish.
IPoly idiv_exact(IPoly num, const IPoly& den) {
    IPoly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, 0);
    while (true) {
        num = itrim(std::move(num));
        if (num.size() < den.size()) break;
        BigInt c = num.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
    if (!itrim(num).empty()) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

IPoly cyclotomic(unsigned d) {
    IPoly p(d + 1, 0);  // x^d - 1
    p[0] = -1;
    p[d] = 1;
    for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) p = idiv_exact(std::move(p), cyclotomic(e));
    return p;
}

// Reduces a residue-class vector (coefficients of powers of a primitive
// d-th root of unity) to a rational integer, or throws.
BigInt reduce_to_integer(IPoly acc, unsigned d) {
    IPoly phi = cyclotomic(d);
    while (true) {
        acc = itrim(std::move(acc));
        if (acc.size() < phi.size()) break;
        BigInt c = acc.back();
        std::size_t shift = acc.size() - phi.size();
        for (std::size_t i = 0; i < phi.size(); ++i) acc[shift + i] -= c * phi[i];
    }
    if (acc.size() > 1) throw std::logic_error("character sum is not a rational integer");
    return acc.empty() ? BigInt(0) : acc[0];
}

}  // namespace

JacobiCheck jacobi_sum_check(unsigned q, unsigned n) {
    if (n == 0) throw std::invalid_argument("jacobi_sum_check: n must be >= 1");
    const unsigned order = q * q;
    if (order > 256) throw std::invalid_argument("jacobi_sum_check: q^2 exceeds the 256 cap");
    {
        // candidate tuple budget
        double work = 1;
        for (unsigned i = 0; i < n; ++i) work *= double(q) * order;
        if (work > double(1 << 24)) throw std::runtime_error("jacobi_sum_check: budget exceeded");
    }
    const Field& f = Field::of_order(order);
    const unsigned d = q + 1;

    // For a fixed character-index tuple j and target a, accumulate
    // omega^(sum j_i * dlog(c_i)) over tuples of nonzero c_i with sum a.
    auto accumulate = [&](const std::vector<unsigned>& j, Elem a, IPoly& acc) {
        std::vector<Elem> c(n > 1 ? n - 1 : 0, 1);
        auto visit = [&](const std::vector<Elem>& head) {
            Elem sum = 0;
            unsigned e = 0;
            for (unsigned i = 0; i + 1 < n; ++i) {
                sum = f.add(sum, head[i]);
                e = (e + j[i] * f.dlog(head[i])) % d;
            }
            Elem last = f.sub(a, sum);
            if (last == 0) return;
            e = (e + j[n - 1] * f.dlog(last)) % d;
            acc[e] += 1;
        };
        if (n == 1) {
            if (a != 0) {
                unsigned e = (j[0] * f.dlog(a)) % d;
                acc[e] += 1;
            }
            return;
        }
        while (true) {
            visit(c);
            std::size_t i = 0;
            for (; i + 1 < n; ++i) {
                if (c[i] + 1u < f.order()) {
                    ++c[i];
                    break;
                }
                c[i] = 1;
            }
            if (i + 1 == n) break;
        }
    };

    IPoly acc_zero(d, 0), acc_one(d, 0);
    const BigInt lead = big_pow(q, 2ull * n - 2);

    std::vector<unsigned> j(n, 1);
    while (true) {
        unsigned jsum = 0;
        for (unsigned v : j) jsum += v;
        if (jsum % d == 0) accumulate(j, 0, acc_zero);
        accumulate(j, 1, acc_one);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (j[i] < q) {
                ++j[i];
                break;
            }
            j[i] = 1;
        }
        if (i == n) break;
    }

    JacobiCheck out;
    out.lhs_zero_sum = lead + reduce_to_integer(std::move(acc_zero), d);
    out.lhs_one_sum = lead + reduce_to_integer(std::move(acc_one), d);
    out.rhs_zero = diagonal_count(q, n, true);
    out.rhs_one = diagonal_count(q, n, false);
    return out;
}

}  // namespace formulas
}  // namespace hullmass
