// Shared helpers for the unit suites: a tiny deterministic generator and
// random matrix construction independent of the fuzz module.
#pragma once

#include <cstdint>

#include "supenum/linalg.hpp"

namespace testutil {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound <= 1 ? 0 : next() % bound; }
};

inline supenum::Matrix random_matrix(Rng& rng, const supenum::FieldPtr& field, std::size_t rows,
                                     std::size_t cols) {
    supenum::Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set_idx(r, c, static_cast<std::uint8_t>(rng.below(field->order())));
    return m;
}

}  // namespace testutil
