#pragma once

#include "linalg.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liekit {

/// Antisymmetric structure-constant table over a commutative coefficient
/// ring R (exact rationals, or polynomials in named parameters). Only pairs
/// i < j are settable; the table stores both orientations so lookups are
/// sign-free. Indices are 0-based internally; every report and file format
/// is 1-based.
template <typename R>
class LieTable {
public:
    LieTable() = default;

    explicit LieTable(std::size_t dim) : dim_(dim), rows_(dim * dim, std::vector<R>(dim)) {
        labels_.reserve(dim);
        for (std::size_t i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
    }

    std::size_t dim() const { return dim_; }

    const std::vector<std::string>& labels() const { return labels_; }

    void set_labels(std::vector<std::string> labels) {
        if (labels.size() != dim_) throw std::invalid_argument("label count mismatch");
        labels_ = std::move(labels);
    }

    /// [e_i, e_j] = sum_k coeffs[k] e_k for i < j; the reversed pair is
    /// stored negated.
    void set_bracket(std::size_t i, std::size_t j, std::vector<R> coeffs) {
        if (i >= j || j >= dim_) throw std::invalid_argument("set_bracket needs i < j < dim");
        if (coeffs.size() != dim_) throw std::invalid_argument("coefficient row length mismatch");
        for (std::size_t k = 0; k < dim_; ++k) rows_[j * dim_ + i][k] = -coeffs[k];
        rows_[i * dim_ + j] = std::move(coeffs);
    }

    /// Coefficient row of [e_i, e_j], any orientation (zero row when i = j).
    const std::vector<R>& structure(std::size_t i, std::size_t j) const {
        if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
        return rows_[i * dim_ + j];
    }

    /// Nonzero terms (k, coefficient) of [e_i, e_j] for i < j, ascending k.
    std::vector<std::pair<std::size_t, R>> terms(std::size_t i, std::size_t j) const {
        const auto& row = structure(i, j);
        std::vector<std::pair<std::size_t, R>> out;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!is_zero(row[k])) out.emplace_back(k, row[k]);
        return out;
    }

    std::vector<R> bracket(const std::vector<R>& x, const std::vector<R>& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("bracket operand length mismatch");
        std::vector<R> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i + 1; j < dim_; ++j) {
                R c = x[i] * y[j] - x[j] * y[i];
                if (is_zero(c)) continue;
                const auto& row = structure(i, j);
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!is_zero(row[k])) out[k] = out[k] + c * row[k];
            }
        }
        return out;
    }

    struct JacobiViolation {
        std::size_t i, j, k;  // 0-based triple, lexicographically first
        std::vector<R> residual;
    };

    /// First triple i < j < k with nonzero Jacobi sum
    /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], or nullopt.
    std::optional<JacobiViolation> check_jacobi() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    std::vector<R> s(dim_);
                    accumulate_double_bracket(s, i, j, k);
                    accumulate_double_bracket(s, j, k, i);
                    accumulate_double_bracket(s, k, i, j);
                    for (std::size_t m = 0; m < dim_; ++m)
                        if (!is_zero(s[m])) return JacobiViolation{i, j, k, std::move(s)};
                }
        return std::nullopt;
    }

    friend bool operator==(const LieTable& a, const LieTable& b) = default;

private:
    // s += [[e_a, e_b], e_c]
    void accumulate_double_bracket(std::vector<R>& s, std::size_t a, std::size_t b,
                                   std::size_t c) const {
        const auto& inner = structure(a, b);
        for (std::size_t m = 0; m < dim_; ++m) {
            if (is_zero(inner[m])) continue;
            const auto& outer = structure(m, c);
            for (std::size_t k = 0; k < dim_; ++k)
                if (!is_zero(outer[k])) s[k] = s[k] + inner[m] * outer[k];
        }
    }

    std::size_t dim_ = 0;
    std::vector<std::vector<R>> rows_;  // dense (i,j) grid of coefficient rows
    std::vector<std::string> labels_;
};

using LieAlgebra = LieTable<Scalar>;

inline Vec basis_vector(std::size_t dim, std::size_t i) {
    Vec v(dim, Scalar(0));
    v.at(i) = 1;
    return v;
}

/// Matrix of y -> [x, y] in the given basis.
inline Matrix ad(const LieAlgebra& g, const Vec& x) {
    const std::size_t n = g.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = g.bracket(x, basis_vector(n, j));
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = std::move(col[k]);
    }
    return m;
}

/// {x : [x, y] = 0 for all y}, the joint kernel of all ad(e_j) stacked.
inline Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Matrix stacked(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                stacked.at(j * n + k, i) = g.structure(i, j)[k];
    return kernel_basis(stacked);
}

/// g^1 = g, g^{m+1} = [g, g^m], listed until the first repeated term. The
/// final subspace is zero exactly when g is nilpotent.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Vec> full;
    for (std::size_t i = 0; i < n; ++i) full.push_back(basis_vector(n, i));
    std::vector<Subspace> chain{Subspace::span(n, full)};
    while (true) {
        const Subspace& cur = chain.back();
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& b : cur.basis()) gens.push_back(g.bracket(basis_vector(n, i), b));
        Subspace next = Subspace::span(n, gens);
        if (next.dim() == cur.dim()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

struct InvariantReport {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::vector<std::size_t> lcs_dims;
    bool nilpotent = false;
    std::optional<std::size_t> nilpotency_index;
    bool filiform = false;
};

inline InvariantReport invariants(const LieAlgebra& g) {
    InvariantReport rep;
    rep.dim = g.dim();
    rep.center_dim = center(g).dim();
    auto chain = lower_central_series(g);
    for (const auto& s : chain) rep.lcs_dims.push_back(s.dim());
    rep.nilpotent = chain.back().dim() == 0;
    if (rep.nilpotent && rep.dim > 0) rep.nilpotency_index = rep.lcs_dims.size() - 1;
    rep.filiform = rep.nilpotent && rep.dim >= 2 && rep.nilpotency_index &&
                   *rep.nilpotency_index == rep.dim - 1 && rep.center_dim == 1;
    return rep;
}

inline bool is_nilpotent(const LieAlgebra& g) {
    return lower_central_series(g).back().dim() == 0;
}

inline bool is_ideal(const LieAlgebra& g, const Subspace& s) {
    if (s.ambient() != g.dim()) throw std::invalid_argument("subspace ambient mismatch");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (const auto& b : s.basis())
            if (!s.contains(g.bracket(basis_vector(g.dim(), i), b))) return false;
    return true;
}

struct QuotientResult {
    LieAlgebra algebra;                   // on the complement coordinates
    Matrix projection;                    // maps g-coordinates to quotient coordinates
    std::vector<std::size_t> complement;  // source coordinate of each quotient basis vector
};

/// Quotient by an ideal on the canonical complement: the non-pivot
/// coordinates of the ideal's RREF basis, in ascending order. The projection
/// sends x to the complement coordinates of its residual mod the ideal and
/// is a Lie algebra homomorphism onto the quotient table.
inline QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
    if (!is_ideal(g, ideal)) throw std::invalid_argument("quotient requires an ideal");
    const std::size_t n = g.dim();
    QuotientResult res;
    res.complement = ideal.free_coords();
    const std::size_t q = res.complement.size();

    res.projection = Matrix(q, n);
    for (std::size_t r = 0; r < q; ++r) {
        std::size_t f = res.complement[r];
        res.projection.at(r, f) = 1;
        for (std::size_t i = 0; i < ideal.dim(); ++i)
            res.projection.at(r, ideal.pivots()[i]) = -ideal.basis()[i][f];
    }

    res.algebra = LieAlgebra(q);
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < q; ++r) labels.push_back(g.labels()[res.complement[r]]);
    res.algebra.set_labels(std::move(labels));
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t s = r + 1; s < q; ++s) {
            Vec w = res.projection.apply(
                g.bracket(basis_vector(n, res.complement[r]), basis_vector(n, res.complement[s])));
            res.algebra.set_bracket(r, s, std::move(w));
        }
    }
    return res;
}

}  // namespace liekit
