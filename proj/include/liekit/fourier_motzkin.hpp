#pragma once

#include "linalg.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace liekit {

namespace detail {

/// Scale a row so its leading nonzero entry is +-1; positive scaling keeps
/// the inequality row . t > 0 equivalent. Canonical form enables dedup.
inline Vec normalize_inequality(Vec row) {
    for (const auto& x : row) {
        if (is_zero(x)) continue;
        Scalar inv = Scalar(1) / abs(x);
        for (auto& y : row) y *= inv;
        break;
    }
    return row;
}

}  // namespace detail

/// Exact feasibility for a homogeneous system of strict inequalities
/// row . t > 0 (one row per inequality, nvars coefficients each) by
/// Fourier-Motzkin elimination. Returns a rational solution or nullopt.
///
/// Variables are eliminated from the highest index down; a derived row with
/// no coefficients asserts 0 > 0 and refutes the system. Back-substitution
/// picks, per variable: midpoint when bounded both sides, floor(L)+1 with
/// only lower bounds L, ceil(U)-1 with only upper bounds U, and 1 when
/// unconstrained - so solutions come out as small integers when possible.
inline std::optional<Vec> strict_feasible_point(const std::vector<Vec>& inequalities,
                                                std::size_t nvars) {
    if (nvars == 0) {
        // a zero-arity row reads 0 > 0; no rows means trivially feasible
        return inequalities.empty() ? std::optional<Vec>(Vec{}) : std::nullopt;
    }
    // stages[j]: inequalities mentioning only variables 0..j-1
    std::vector<std::set<Vec>> stages(nvars + 1);
    for (const auto& row : inequalities) {
        if (row.size() != nvars) throw std::invalid_argument("inequality arity mismatch");
        std::size_t last = nvars;
        for (std::size_t k = nvars; k-- > 0;) {
            if (!is_zero(row[k])) {
                last = k;
                break;
            }
        }
        if (last == nvars) return std::nullopt;  // empty row: 0 > 0
        stages[last + 1].insert(detail::normalize_inequality(row));
    }
    for (std::size_t j = nvars; j-- > 1;) {
        // eliminate variable j from stages[j+1]
        std::vector<Vec> pos, neg;
        for (const auto& row : stages[j + 1]) {
            if (sgn(row[j]) > 0)
                pos.push_back(row);
            else
                neg.push_back(row);  // row[j] < 0 by stage placement
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                // alpha t_j > -a.t', beta t_j > -b.t' with alpha>0>beta
                // combine to alpha*(b.t') - beta*(a.t') > 0
                Vec combined(j, Scalar(0));
                const Scalar& alpha = p[j];
                const Scalar& beta = n[j];
                bool nonzero = false;
                std::size_t top = 0;
                for (std::size_t k = 0; k < j; ++k) {
                    combined[k] = alpha * n[k] - beta * p[k];
                    if (!is_zero(combined[k])) {
                        nonzero = true;
                        top = k;
                    }
                }
                if (!nonzero) return std::nullopt;  // 0 > 0
                combined.resize(top + 1);
                stages[top + 1].insert(detail::normalize_inequality(std::move(combined)));
            }
        }
    }
    // stages[1] rows are c * t_0 > 0; both signs present is a contradiction
    {
        bool lower = false, upper = false;
        for (const auto& row : stages[1]) (sgn(row[0]) > 0 ? lower : upper) = true;
        if (lower && upper) return std::nullopt;
    }
    Vec t(nvars, Scalar(0));
    for (std::size_t j = 0; j < nvars; ++j) {
        bool has_lower = false, has_upper = false;
        Scalar low(0), up(0);
        for (const auto& row : stages[j + 1]) {
            if (is_zero(row[j])) continue;
            Scalar bound(0);
            for (std::size_t k = 0; k < j; ++k) bound -= row[k] * t[k];
            bound /= row[j];
            if (sgn(row[j]) > 0) {
                if (!has_lower || bound > low) low = bound;
                has_lower = true;
            } else {
                if (!has_upper || bound < up) up = bound;
                has_upper = true;
            }
        }
        if (has_lower && has_upper)
            t[j] = (low + up) / 2;
        else if (has_lower)
            t[j] = Scalar(floor_int(low)) + 1;
        else if (has_upper)
            t[j] = Scalar(ceil_int(up)) - 1;
        else
            t[j] = 1;
    }
    return t;
}

/// Rational lambda with equalities . lambda = 0 and every entry strictly
/// positive, or nullopt when none exists. The kernel of the equality system
/// is parametrized by its canonical basis and the positivity constraints are
/// passed to Fourier-Motzkin.
inline std::optional<Vec> strict_positive_point(const Matrix& equalities, std::size_t dim) {
    if (equalities.rows() > 0 && equalities.cols() != dim)
        throw std::invalid_argument("equality system arity mismatch");
    if (dim == 0) return Vec{};
    Subspace ker = kernel_basis(equalities.rows() > 0 ? equalities : Matrix(0, dim));
    const auto& kb = ker.basis();
    std::vector<Vec> constraints;
    constraints.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Vec row(kb.size(), Scalar(0));
        for (std::size_t a = 0; a < kb.size(); ++a) row[a] = kb[a][i];
        constraints.push_back(std::move(row));
    }
    auto t = strict_feasible_point(constraints, kb.size());
    if (!t) return std::nullopt;
    Vec lambda(dim, Scalar(0));
    for (std::size_t a = 0; a < kb.size(); ++a) add_scaled(lambda, (*t)[a], kb[a]);
    return lambda;
}

}  // namespace liekit
