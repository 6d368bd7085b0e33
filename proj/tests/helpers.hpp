#ifndef HULLMASS_TEST_HELPERS_HPP
#define HULLMASS_TEST_HELPERS_HPP

#include <random>

#include "hullmass/code.hpp"
#include "hullmass/matrix.hpp"

namespace hullmass::testing {

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                            std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> dist(0, f.order() - 1);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<Elem>(dist(rng)));
    return m;
}

/// Random code of exactly the requested dimension (resamples if the rows
/// come out rank-deficient).
inline LinearCode random_code(const Field& f, std::size_t length, std::size_t k,
                              std::mt19937& rng) {
    while (true) {
        LinearCode c = LinearCode::from_rows(random_matrix(f, k, length, rng));
        if (c.dim() == k) return c;
    }
}

/// Random code that is LCD under the given form.
inline LinearCode random_lcd(const Field& f, Inner inner, std::size_t length, std::size_t k,
                             std::mt19937& rng) {
    while (true) {
        LinearCode c = random_code(f, length, k, rng);
        if (c.is_lcd(inner)) return c;
    }
}

/// Random skew-symmetric matrix with zero diagonal.
inline Matrix random_skew(const Field& f, std::size_t k, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> dist(0, f.order() - 1);
    Matrix m(f, k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Elem v = static_cast<Elem>(dist(rng));
            m.set(i, j, v);
            m.set(j, i, f.neg(v));
        }
    return m;
}

}  // namespace hullmass::testing

#endif
