#pragma once

#include "derivations.hpp"  // kDefaultSeed
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace liekit {

/// Matrix of the skew form B_l(x, y) = l([x, y]); entry (i, j) applies the
/// functional to [e_i, e_j].
inline Matrix bform(const LieAlgebra& g, const Vec& ell) {
    const std::size_t n = g.dim();
    if (ell.size() != n) throw std::invalid_argument("functional length mismatch");
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar s(0);
            const auto& row = g.structure(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(row[k])) s += ell[k] * row[k];
            b.at(j, i) = -s;
            b.at(i, j) = std::move(s);
        }
    }
    return b;
}

/// g(l) = {y : l([x, y]) = 0 for all x}, the radical of B_l.
inline Subspace radical(const LieAlgebra& g, const Vec& ell) {
    return kernel_basis(bform(g, ell));
}

/// The orbit through l is flat iff the radical collapses to the center.
inline bool flat_orbit(const LieAlgebra& g, const Vec& ell) {
    return radical(g, ell) == center(g);
}

struct GenericIndexResult {
    std::size_t min_radical_dim = 0;
    Vec witness;  // first sampled functional attaining the minimum
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Minimum radical dimension over seeded random functionals with integer
/// coordinates in [-10, 10]. A sampled upper bound for the index of g, not a
/// certificate: a certified generic rank would require working over the
/// function field of g*.
inline GenericIndexResult generic_index(const LieAlgebra& g, std::size_t samples,
                                        std::uint64_t seed = kDefaultSeed) {
    if (samples < 1) throw std::invalid_argument("generic_index needs at least one sample");
    GenericIndexResult res;
    res.samples = samples;
    res.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        Vec ell(g.dim());
        for (auto& c : ell) c = Scalar(static_cast<long>(rng() % 21) - 10);
        std::size_t d = radical(g, ell).dim();
        if (s == 0 || d < res.min_radical_dim) {
            res.min_radical_dim = d;
            res.witness = std::move(ell);
        }
    }
    return res;
}

}  // namespace liekit
