#include "hullmass/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hullmass {

namespace {

constexpr unsigned kMaxOrder = 256;

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as little-endian coefficient vectors.
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    a = trim(std::move(a));
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned lead = a.back();
        // m is monic, so subtract lead * x^(deg a - dm) * m
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            unsigned s = (m[i] * lead) % p;
            a[shift + i] = (a[shift + i] + p - s) % p;
        }
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), m, p);
}

Poly decode(unsigned v, unsigned p) {
    Poly a;
    while (v) {
        a.push_back(v % p);
        v /= p;
    }
    return a;
}

unsigned encode(const Poly& a, unsigned p) {
    unsigned v = 0, scale = 1;
    for (unsigned c : a) {
        v += c * scale;
        scale *= p;
    }
    return v;
}

// Trial division by every monic polynomial of degree <= deg(m)/2.
bool is_irreducible(const Poly& m, unsigned p) {
    const std::size_t deg = m.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        unsigned count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (unsigned lo = 0; lo < count; ++lo) {
            Poly div = decode(lo, p);
            div.resize(d + 1, 0);
            div[d] = 1;
            // remainder of m mod div
            Poly r = poly_mod(m, div, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
    if (e_ < 1) throw std::invalid_argument("field degree must be >= 1");
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) {
        q_ *= p_;
        if (q_ > kMaxOrder) throw std::invalid_argument("field order exceeds supported cap 256");
    }
    if (modulus_.size() != e_ + 1)
        throw std::invalid_argument("modulus must have degree+1 coefficients");
    for (unsigned c : modulus_)
        if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(modulus_, p_))
        throw std::invalid_argument("modulus is reducible over GF(p)");

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    for (unsigned a = 0; a < q_; ++a) {
        Poly pa = decode(a, p_);
        for (unsigned b = 0; b < q_; ++b) {
            Poly pb = decode(b, p_);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < pa.size(); ++i) s[i] = pa[i];
            for (std::size_t i = 0; i < pb.size(); ++i) s[i] = (s[i] + pb[i]) % p_;
            add_[std::size_t(a) * q_ + b] = static_cast<Elem>(encode(trim(s), p_));
            mul_[std::size_t(a) * q_ + b] =
                static_cast<Elem>(encode(poly_mulmod(pa, pb, modulus_, p_), p_));
        }
    }

    inv_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[std::size_t(a) * q_ + b] == 1) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }

    // Smallest encoding generating the multiplicative group.
    log_.assign(q_, 0);
    for (unsigned g = 1; g < q_; ++g) {
        unsigned x = g, ord = 1;
        while (x != 1) {
            x = mul_[std::size_t(x) * q_ + g];
            ++ord;
        }
        if (ord == q_ - 1) {
            gen_ = static_cast<Elem>(g);
            unsigned v = 1;
            for (unsigned t = 0; t < q_ - 1; ++t) {
                log_[v] = t;
                v = mul_[std::size_t(v) * q_ + g];
            }
            break;
        }
    }
    if (q_ > 2 && gen_ == 0)
        throw std::logic_error("multiplicative group has no generator");
    if (q_ == 2) gen_ = 1;
}

const Field& Field::of_order(unsigned q) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return *it->second;

    static const std::map<unsigned, std::vector<unsigned>> kDefaults = {
        {4, {1, 1, 1}},        // x^2+x+1
        {8, {1, 1, 0, 1}},     // x^3+x+1
        {9, {2, 2, 1}},        // x^2+2x+2
        {16, {1, 1, 0, 0, 1}}, // x^4+x+1
        {25, {2, 4, 1}},       // x^2+4x+2
    };
    std::unique_ptr<Field> f;
    if (is_prime(q)) {
        f = std::make_unique<Field>(q, 1, std::vector<unsigned>{0, 1});
    } else {
        auto d = kDefaults.find(q);
        if (d == kDefaults.end())
            throw std::invalid_argument("no default modulus for order " + std::to_string(q));
        unsigned p = 2;
        while (q % p != 0) ++p;
        unsigned e = 0, t = q;
        while (t > 1) {
            t /= p;
            ++e;
        }
        f = std::make_unique<Field>(p, e, d->second);
    }
    const Field& ref = *f;
    cache.emplace(q, std::move(f));
    return ref;
}

void Field::check(Elem a) const {
    if (a >= q_) throw std::invalid_argument("element encoding out of range for this field");
}

Elem Field::add(Elem a, Elem b) const {
    check(a);
    check(b);
    return add_[std::size_t(a) * q_ + b];
}

Elem Field::neg(Elem a) const {
    check(a);
    if (a == 0) return 0;
    // search is avoided: -a = (p-1)*a
    Elem m1 = static_cast<Elem>(encode({p_ - 1}, p_));
    return mul_[std::size_t(a) * q_ + m1];
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    check(a);
    check(b);
    return mul_[std::size_t(a) * q_ + b];
}

Elem Field::inv(Elem a) const {
    check(a);
    if (a == 0) throw std::domain_error("inversion of zero field element");
    return inv_[a];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, long long n) const {
    check(a);
    if (n < 0) {
        a = inv(a);  // throws for a == 0
        n = -n;
    }
    if (a == 0) return n == 0 ? 1 : 0;
    Elem r = 1, base = a;
    unsigned long long m = static_cast<unsigned long long>(n) % (q_ - 1);
    while (m) {
        if (m & 1) r = mul_[std::size_t(r) * q_ + base];
        base = mul_[std::size_t(base) * q_ + base];
        m >>= 1;
    }
    return r;
}

unsigned Field::sub_order() const {
    if (!has_quadratic_subfield())
        throw std::domain_error("field is not a quadratic extension");
    unsigned s = 1;
    for (unsigned i = 0; i < e_ / 2; ++i) s *= p_;
    return s;
}

Elem Field::conj(Elem a) const { return pow(a, sub_order()); }

Elem Field::frobenius(Elem a, const Field& base) const {
    if (base.characteristic() != p_ || base.order() * base.order() != q_)
        throw std::invalid_argument("field is not a quadratic extension of the given base field");
    return pow(a, base.order());
}

Elem Field::norm(Elem a) const { return pow(a, sub_order() + 1); }

bool Field::in_subfield(Elem a) const { return conj(a) == a; }

Elem Field::solve_norm(Elem c) const {
    check(c);
    if (c == 0) return 0;
    if (!in_subfield(c)) throw std::domain_error("solve_norm argument is not in the subfield");
    for (unsigned x = 1; x < q_; ++x)
        if (norm(static_cast<Elem>(x)) == c) return static_cast<Elem>(x);
    throw std::logic_error("norm is surjective onto the subfield; unreachable");
}

unsigned Field::dlog(Elem a) const {
    check(a);
    if (a == 0) throw std::domain_error("discrete log of zero");
    return log_[a];
}

bool Field::same_as(const Field& other) const {
    return this == &other ||
           (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

}  // namespace hullmass
