#include "hullmass/code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace hullmass {

namespace {

Elem herm_pair(const Field& f, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    Elem acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = f.add(acc, f.mul(x[i], f.conj(y[i])));
    return acc;
}

Elem symp_pair(const Field& f, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    std::size_t n = x.size() / 2;
    Elem acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc = f.add(acc, f.mul(x[i], y[n + i]));
        acc = f.sub(acc, f.mul(x[n + i], y[i]));
    }
    return acc;
}

Matrix nonzero_rows(const Matrix& rref_reduced, std::size_t rank) {
    std::vector<Elem> rows(rref_reduced.entries().begin(),
                           rref_reduced.entries().begin() +
                               static_cast<std::ptrdiff_t>(rank * rref_reduced.cols()));
    return Matrix(rref_reduced.field(), rank, rref_reduced.cols(), std::move(rows));
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    std::vector<Elem> e = top.entries();
    e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(e));
}

}  // namespace

void for_each_codeword(const Matrix& generator,
                       const std::function<void(const std::vector<Elem>&)>& fn) {
    const Field& f = generator.field();
    const std::size_t k = generator.rows(), n = generator.cols();
    std::vector<Elem> coeff(k, 0);
    std::vector<Elem> word(n, 0);
    while (true) {
        fn(word);
        std::size_t i = 0;
        for (; i < k; ++i) {
            Elem next = static_cast<Elem>((coeff[i] + 1) % f.order());
            // incremental update: word += (next - coeff[i]) * row_i
            Elem delta = f.sub(next, coeff[i]);
            for (std::size_t j = 0; j < n; ++j)
                word[j] = f.add(word[j], f.mul(delta, generator.at(i, j)));
            coeff[i] = next;
            if (next != 0) break;
        }
        if (i == k) break;
    }
}

LinearCode LinearCode::from_rows(const Matrix& rows) {
    Matrix::Rref r = rows.rref();
    return LinearCode(nonzero_rows(r.reduced, r.rank));
}

LinearCode LinearCode::canonical_lcd(const Field& f, Inner inner, std::size_t n, std::size_t k) {
    if (inner == Inner::hermitian) {
        if (k > n) throw std::invalid_argument("dimension exceeds length");
        if (!f.has_quadratic_subfield())
            throw std::invalid_argument("hermitian codes need a quadratic extension field");
        Matrix g(f, k, n);
        for (std::size_t i = 0; i < k; ++i) g.set(i, i, 1);
        return LinearCode(std::move(g));
    }
    if (k > n) throw std::invalid_argument("half-dimension exceeds half-length");
    Matrix g(f, 2 * k, 2 * n);
    for (std::size_t i = 0; i < k; ++i) {
        g.set(2 * i, i, 1);
        g.set(2 * i + 1, n + i, 1);
    }
    return from_rows(g);
}

bool LinearCode::operator<(const LinearCode& rhs) const {
    if (dim() != rhs.dim()) return dim() < rhs.dim();
    return generator_.entries() < rhs.generator_.entries();
}

bool LinearCode::contains(const std::vector<Elem>& v) const {
    if (v.size() != length()) throw std::invalid_argument("vector length mismatch");
    Matrix ext = stack(generator_, Matrix(field(), 1, length(), v));
    return ext.rank() == dim();
}

LinearCode LinearCode::dual(Inner inner) const {
    if (inner == Inner::hermitian)
        return from_rows(generator_.conj().right_kernel());
    if (length() % 2 != 0)
        throw std::invalid_argument("symplectic dual needs even length");
    Matrix a = generator_ * Matrix::omega(field(), length() / 2);
    return from_rows(a.right_kernel());
}

std::size_t LinearCode::hull_dim(Inner inner) const {
    return dim() - generator_.gram(inner).rank();
}

LinearCode::HullReport LinearCode::hull(Inner inner) const {
    LinearCode d = dual(inner);
    const std::size_t n = length();

    // Zassenhaus: rref [[G G],[D 0]]; rows with zero left half carry an
    // intersection basis in their right half.
    Matrix z(field(), dim() + d.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            z.set(i, j, generator_.at(i, j));
            z.set(i, n + j, generator_.at(i, j));
        }
    for (std::size_t i = 0; i < d.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) z.set(dim() + i, j, d.generator().at(i, j));
    Matrix::Rref zr = z.rref();
    std::vector<Elem> basis;
    std::size_t count = 0;
    for (std::size_t i = 0; i < zr.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (zr.reduced.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        bool right_zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            Elem v = zr.reduced.at(i, n + j);
            basis.push_back(v);
            if (v != 0) right_zero = false;
        }
        if (right_zero) {
            basis.resize(basis.size() - n);
        } else {
            ++count;
        }
    }
    Matrix::Rref hb = Matrix(field(), count, n, std::move(basis)).rref();
    Matrix hull_basis = nonzero_rows(hb.reduced, hb.rank);
    std::size_t ell = hull_basis.rows();
    if (ell != dim() - generator_.gram(inner).rank())
        throw std::logic_error("hull dimension disagrees with Gram rank");

    // Complete the hull basis to a basis of C with unit-pivot rows of the
    // canonical generator, first fit. The completion is automatically LCD.
    Matrix work = hull_basis;
    std::size_t rank = ell;
    std::vector<Elem> comp;
    std::size_t comp_rows = 0;
    for (std::size_t i = 0; i < dim() && rank < dim(); ++i) {
        std::vector<Elem> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = generator_.at(i, j);
        Matrix ext = stack(work, Matrix(field(), 1, n, row));
        if (ext.rank() == rank + 1) {
            work = std::move(ext);
            ++rank;
            comp.insert(comp.end(), row.begin(), row.end());
            ++comp_rows;
        }
    }
    LinearCode complement = from_rows(Matrix(field(), comp_rows, n, std::move(comp)));
    return HullReport{ell, std::move(hull_basis), std::move(complement)};
}

Matrix LinearCode::hermitian_normal_form() const {
    HullReport h = hull(Inner::hermitian);
    const Matrix& g2 = h.lcd_complement.generator();
    if (g2.rows() == 0) return h.hull_basis;
    Matrix q = Matrix::hermitian_unitarize(g2.gram(Inner::hermitian));
    Matrix top = q * g2;
    if (h.hull_dim == 0) return top;
    return stack(top, h.hull_basis);
}

Matrix LinearCode::symplectic_basis() const {
    if (length() % 2 != 0)
        throw std::invalid_argument("symplectic basis needs even length");
    if (!is_lcd(Inner::symplectic))
        throw std::invalid_argument(
            "code is not symplectic LCD (its symplectic Gram matrix is singular)");
    auto [q, t] = Matrix::skew_reduce(generator_.gram(Inner::symplectic));
    if (t != dim()) throw std::logic_error("full-rank skew reduction lost rank");
    return q * generator_;
}

Matrix LinearCode::transporter(const LinearCode& from, const LinearCode& to, Inner inner) {
    if (!from.field().same_as(to.field()) || from.length() != to.length() ||
        from.dim() != to.dim())
        throw std::invalid_argument("transporter needs codes with identical parameters");
    if (!from.is_lcd(inner) || !to.is_lcd(inner))
        throw std::invalid_argument("transporter needs LCD codes");

    auto full = [&](const LinearCode& c) {
        if (inner == Inner::hermitian)
            return stack(c.hermitian_normal_form(), c.dual(inner).hermitian_normal_form());
        return stack(c.symplectic_basis(), c.dual(inner).symplectic_basis());
    };
    Matrix q1 = full(from);
    Matrix q2 = full(to);
    return q1.inverse() * q2;
}

std::uint64_t LinearCode::so_codeword_count(std::uint64_t budget) const {
    const Field& f = field();
    if (!f.has_quadratic_subfield())
        throw std::invalid_argument("self-orthogonal codeword count is Hermitian-only");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
        total *= f.order();
        if (total > budget)
            throw std::runtime_error(
                "codeword enumeration budget exceeded; use the closed formula instead");
    }
    std::uint64_t count = 0;
    for_each_codeword(generator_, [&](const std::vector<Elem>& w) {
        if (herm_pair(f, w, w) == 0) ++count;
    });
    return count;
}

std::vector<LinearCode> LinearCode::hull_extensions(Inner inner, std::uint64_t budget) const {
    const Field& f = field();
    LinearCode d = dual(inner);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d.dim(); ++i) {
        total *= f.order();
        if (total > budget)
            throw std::runtime_error("dual enumeration budget exceeded");
    }
    const std::size_t target = hull_dim(inner) + 1;
    std::set<LinearCode> out;
    for_each_codeword(d.generator(), [&](const std::vector<Elem>& x) {
        if (contains(x)) return;  // excludes hull vectors (and 0)
        if (inner == Inner::hermitian && herm_pair(f, x, x) != 0) return;
        LinearCode ext = from_rows(stack(generator_, Matrix(f, 1, length(), x)));
        out.insert(std::move(ext));
    });
    for (const LinearCode& c : out)
        if (c.hull_dim(inner) != target)
            throw std::logic_error("extension produced unexpected hull dimension");
    return std::vector<LinearCode>(out.begin(), out.end());
}

LinearCode LinearCode::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != length()) throw std::invalid_argument("permutation length mismatch");
    Matrix g(field(), dim(), length());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < length(); ++j) g.set(i, j, generator_.at(i, perm[j]));
    return from_rows(g);
}

LinearCode LinearCode::transformed(const Matrix& q) const {
    return from_rows(generator_ * q);
}

}  // namespace hullmass
