#pragma once

#include "tannakit/exactlin.hpp"

namespace tannakit::test {

/// Deterministic generator for property-style tests.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long next_in(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

inline Matrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& field, Lcg& rng) {
    Matrix m(rows, cols, field);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Scalar(rng.next_in(-4, 4), field));
    return m;
}

}  // namespace tannakit::test
