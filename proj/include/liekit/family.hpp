#pragma once

#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liekit {

/// Structure constants whose coefficients are polynomials in named
/// parameters; specializing at a full rational assignment gives a LieAlgebra.
class LieFamily {
public:
    LieFamily() = default;
    LieFamily(LieTable<Polynomial> table, std::vector<std::string> params)
        : table_(std::move(table)), params_(std::move(params)) {
        std::set<std::string> declared(params_.begin(), params_.end());
        if (declared.size() != params_.size())
            throw std::invalid_argument("duplicate parameter name");
        for (std::size_t i = 0; i < table_.dim(); ++i)
            for (std::size_t j = i + 1; j < table_.dim(); ++j)
                for (const auto& [k, c] : table_.terms(i, j))
                    for (const auto& v : c.variables())
                        if (!declared.count(v))
                            throw std::invalid_argument("undeclared parameter: " + v);
    }

    const LieTable<Polynomial>& table() const { return table_; }
    const std::vector<std::string>& params() const { return params_; }
    std::size_t dim() const { return table_.dim(); }

    /// Exact evaluation of every coefficient. The assignment must cover the
    /// declared parameters exactly - a missing or extraneous name is an error.
    LieAlgebra specialize(const std::map<std::string, Scalar>& assignment) const {
        std::set<std::string> given;
        for (const auto& [name, _] : assignment) given.insert(name);
        for (const auto& p : params_)
            if (!given.erase(p)) throw std::invalid_argument("missing parameter: " + p);
        if (!given.empty())
            throw std::invalid_argument("extraneous parameter: " + *given.begin());
        LieAlgebra g(table_.dim());
        g.set_labels(table_.labels());
        for (std::size_t i = 0; i < table_.dim(); ++i) {
            for (std::size_t j = i + 1; j < table_.dim(); ++j) {
                Vec row(table_.dim(), Scalar(0));
                bool any = false;
                for (const auto& [k, c] : table_.terms(i, j)) {
                    row[k] = c.evaluate(assignment);
                    any = any || !is_zero(row[k]);
                }
                if (any) g.set_bracket(i, j, std::move(row));
            }
        }
        return g;
    }

private:
    LieTable<Polynomial> table_;
    std::vector<std::string> params_;
};

/// The two-parameter dimension-11 family g(alpha, beta). Brackets not
/// listed (and not implied by bilinearity or antisymmetry) are zero. Each
/// set_bracket line below mirrors one table line; gamma denotes
/// 27*alpha^2 + 12*alpha*beta + beta^2.
inline LieFamily gab_family() {
    const Polynomial a = Polynomial::variable("alpha");
    const Polynomial b = Polynomial::variable("beta");
    const Polynomial gamma = 27 * a * a + 12 * a * b + b * b;
    const Scalar q4 = frac(1, 4), mq4 = frac(-1, 4), q16 = frac(1, 16), mq16 = frac(-1, 16);

    LieTable<Polynomial> t(11);
    // 1-based index helper so the lines below read like the bracket table.
    auto set = [&t](std::size_t i, std::size_t j,
                    std::vector<std::pair<std::size_t, Polynomial>> terms) {
        std::vector<Polynomial> row(11);
        for (auto& [k, c] : terms) row.at(k - 1) = std::move(c);
        t.set_bracket(i - 1, j - 1, std::move(row));
    };

    for (std::size_t i = 2; i <= 10; ++i) set(1, i, {{i + 1, 1}});  // [e1,ei] = e_{i+1}
    set(2, 3, {{5, 1}, {6, a}});                                    // [e2,e3] = e5 + a e6
    set(2, 4, {{6, 1}, {7, a}});                                    // [e2,e4] = e6 + a e7
    set(2, 5, {{7, -1}, {8, a - b}});                               // [e2,e5] = -e7 + (a-b) e8
    set(2, 6, {{8, -3}, {9, a - 2 * b}});                           // [e2,e6] = -3e8 + (a-2b) e9
    set(2, 7, {{9, -2}, {10, (5 * a + 7 * b) * mq4}, {11, gamma * q16}});
    set(2, 8, {{10, 2}, {11, (23 * a + b) * mq4}});
    set(2, 9, {{11, -1}});
    set(3, 4, {{7, 2}, {8, b}});
    set(3, 5, {{8, 2}, {9, b}});
    set(3, 6, {{9, -1}, {10, (9 * a - b) * q4}, {11, gamma * mq16}});
    set(3, 7, {{10, -4}, {11, (3 * a - b) * frac(3, 2)}});
    set(3, 8, {{11, 3}});
    set(4, 5, {{9, 3}, {10, (9 * a - 5 * b) * mq4}, {11, gamma * q16}});
    set(4, 6, {{10, 3}, {11, (9 * a - 5 * b) * mq4}});
    set(4, 7, {{11, -7}});
    set(5, 6, {{11, 10}});
    return LieFamily(std::move(t), {"alpha", "beta"});
}

inline LieAlgebra gab(const Scalar& alpha, const Scalar& beta) {
    return gab_family().specialize({{"alpha", alpha}, {"beta", beta}});
}

/// Central quotient g(alpha, beta)/z, dimension 10 on basis e1..e10.
inline LieAlgebra gab_quotient(const Scalar& alpha, const Scalar& beta) {
    LieAlgebra g = gab(alpha, beta);
    return quotient(g, center(g)).algebra;
}

/// The closed-form basis D1..D12 of Der(g(alpha,beta)/z), specialized. All
/// twelve are derivations of the quotient at every parameter value and span
/// its full derivation algebra whenever (alpha, beta) != (0, 0). The sole
/// deviation from the published list is the constant entry 6 at (10,4) in
/// D5, which the derivation condition on the pair (e1, e3) forces.
inline std::vector<Matrix> gab_quotient_derivation_basis(const Scalar& alpha,
                                                         const Scalar& beta) {
    const Scalar& a = alpha;
    const Scalar& b = beta;
    const Scalar q4 = frac(1, 4);
    std::vector<Matrix> out;
    // 1-based (row, col, value) entry lists.
    auto mat = [&out](std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries) {
        Matrix m(10, 10);
        for (const auto& [r, c, v] : entries) m.at(r - 1, c - 1) = v;
        out.push_back(std::move(m));
    };
    mat({{3, 1, 1}, {5, 3, -1}, {6, 3, -a}, {6, 4, -1}, {7, 4, -a}, {7, 5, 1},
         {8, 5, b - a}, {8, 6, 3}, {9, 6, 2 * b - a}, {9, 7, 2},
         {10, 7, (5 * a + 7 * b) * q4}, {10, 8, -2}});
    mat({{4, 1, 1}, {5, 2, 1}, {6, 2, a}, {7, 4, -2}, {8, 4, -b}, {8, 5, -2},
         {9, 5, -b}, {9, 6, 1}, {10, 6, (b - 9 * a) * q4}, {10, 7, 4}});
    mat({{5, 1, 1}, {6, 2, 1}, {7, 2, a}, {7, 3, 2}, {8, 3, b}, {9, 5, -3},
         {10, 5, (9 * a - 5 * b) * q4}, {10, 6, -3}});
    mat({{6, 1, 1}, {7, 2, -1}, {8, 3, 2}, {9, 3, 2 * b - a}, {9, 4, 3},
         {10, 4, (9 * b - 13 * a) * q4}});
    mat({{7, 1, 1}, {9, 3, 2}, {10, 3, (5 * a + 7 * b) * q4}, {10, 4, 6}});
    mat({{8, 1, 1}, {10, 3, -2}});
    mat({{9, 1, 1}});
    mat({{10, 1, 1}});
    mat({{3, 2, 1}, {4, 3, 1}, {5, 4, 1}, {6, 5, 1}, {7, 6, 1}, {8, 7, 1},
         {9, 8, 1}, {10, 9, 1}});
    mat({{8, 2, 1}, {9, 3, 1}, {10, 4, 1}});
    mat({{9, 2, 1}, {10, 3, 1}});
    mat({{10, 2, 1}});
    return out;
}

/// Named reference algebras: "abelian" (any n >= 0), "heisenberg" (odd
/// n = 2m+1 >= 3, [x_i, y_i] = z), and "filiform-model" (n >= 2, the model
/// filiform algebra with [e1, e_i] = e_{i+1} only).
inline LieAlgebra standard(const std::string& name, std::size_t n) {
    if (name == "abelian") return LieAlgebra(n);
    if (name == "heisenberg") {
        if (n < 3 || n % 2 == 0)
            throw std::invalid_argument("heisenberg needs odd dimension >= 3");
        LieAlgebra g(n);
        const std::size_t m = (n - 1) / 2;
        for (std::size_t i = 0; i < m; ++i) {
            Vec row(n, Scalar(0));
            row[n - 1] = 1;
            g.set_bracket(i, m + i, std::move(row));
        }
        return g;
    }
    if (name == "filiform-model") {
        if (n < 2) throw std::invalid_argument("filiform-model needs dimension >= 2");
        LieAlgebra g(n);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            Vec row(n, Scalar(0));
            row[i + 1] = 1;
            g.set_bracket(0, i, std::move(row));
        }
        return g;
    }
    throw std::invalid_argument("unknown algebra name: " + name);
}

}  // namespace liekit
