#pragma once

#include "matrix.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace liekit {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form. Among the candidate pivots of a column the one
/// with the smallest combined numerator/denominator bit length is chosen,
/// which keeps intermediate fractions small on the larger systems here.
inline RrefResult rref(Matrix a) {
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t best = a.rows();
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < a.rows(); ++i) {
            if (is_zero(a.at(i, c))) continue;
            std::size_t bits = bit_length(a.at(i, c));
            if (best == a.rows() || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == a.rows()) continue;
        a.swap_rows(r, best);
        Scalar inv = Scalar(1) / a.at(r, c);
        for (std::size_t k = c; k < a.cols(); ++k) a.at(r, k) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a.at(i, c))) continue;
            Scalar f = a.at(i, c);
            for (std::size_t k = c; k < a.cols(); ++k) a.at(i, k) -= f * a.at(r, k);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.reduced = std::move(a);
    res.rank = r;
    return res;
}

/// Canonical subspace of Q^ambient: basis rows kept in RREF, so two values
/// describe the same subspace iff they compare equal entry-for-entry.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& gens) {
        Subspace s(ambient);
        if (gens.empty()) return s;
        RrefResult r = rref(Matrix::from_rows(gens));
        for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after eliminating every pivot coordinate; zero iff v lies
    /// in the subspace. The residual is supported on non-pivot coordinates.
    Vec reduce(Vec v) const {
        if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Scalar& c = v[pivots_[i]];
            if (!is_zero(c)) add_scaled(v, -c, basis_[i]);
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) return false;
        for (const auto& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        std::vector<Vec> gens = basis_;
        gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
        return span(ambient_, gens);
    }

    /// Non-pivot coordinates, ascending; the canonical complement used for
    /// quotient constructions.
    std::vector<std::size_t> free_coords() const {
        std::vector<std::size_t> free;
        std::size_t p = 0;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (p < pivots_.size() && pivots_[p] == c)
                ++p;
            else
                free.push_back(c);
        }
        return free;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

namespace detail {

/// Raw kernel vectors of an RREF system: one per free column f, with entry 1
/// at f and -reduced(i, f) at pivots_[i]. Order follows ascending f.
inline std::vector<Vec> kernel_vectors(const Matrix& reduced,
                                       const std::vector<std::size_t>& pivots,
                                       std::size_t ncols) {
    std::vector<Vec> out;
    std::size_t p = 0;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (p < pivots.size() && pivots[p] == f) {
            ++p;
            continue;
        }
        Vec v(ncols, Scalar(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced.at(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// Kernel {v : m v = 0} as a canonical subspace; dim = cols - rank.
inline Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    return Subspace::span(m.cols(), detail::kernel_vectors(r.reduced, r.pivots, m.cols()));
}

/// Some particular solution of m x = b (free coordinates set to zero), or
/// nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced.at(i, m.cols());
    return x;
}

/// Incremental exact row elimination over sparse rows, used for the larger
/// homogeneous systems (derivation equations) where most coefficients vanish.
/// Rows are stored normalized (leading coefficient 1) and keyed by pivot.
class RowReducer {
public:
    using SparseRow = std::map<std::size_t, Scalar>;

    /// Eliminate all known pivots from row; the result's support starts at a
    /// column that is not yet a pivot (or is empty).
    SparseRow reduce(SparseRow row) const {
        while (!row.empty()) {
            auto lead = row.begin();
            auto hit = basis_.find(lead->first);
            if (hit == basis_.end()) break;
            Scalar c = lead->second;
            row.erase(lead);
            for (const auto& [col, v] : hit->second) {
                if (col == hit->first) continue;
                auto it = row.find(col);
                if (it == row.end()) {
                    row.emplace(col, -c * v);
                } else {
                    it->second -= c * v;
                    if (is_zero(it->second)) row.erase(it);
                }
            }
        }
        return row;
    }

    /// Returns true when the row was independent of the current span.
    bool insert(SparseRow row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        auto lead = row.begin();
        Scalar inv = Scalar(1) / lead->second;
        for (auto& [col, v] : row) v *= inv;
        std::size_t pivot = lead->first;
        basis_.emplace(pivot, std::move(row));
        return true;
    }

    std::size_t rank() const { return basis_.size(); }

    bool spans(const SparseRow& row) const { return reduce(row).empty(); }

    /// Kernel of the inserted system viewed as equations over ncols unknowns.
    /// Back-substitutes the echelon basis to RREF first, then reads one kernel
    /// vector per free column (ascending; entry 1 at the free column).
    std::vector<Vec> kernel(std::size_t ncols) const {
        std::map<std::size_t, SparseRow> rows = basis_;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            std::size_t p = it->first;
            for (auto& [q, row] : rows) {
                if (q >= p) break;
                auto hit = row.find(p);
                if (hit == row.end()) continue;
                Scalar c = hit->second;
                row.erase(hit);
                for (const auto& [col, v] : it->second) {
                    if (col == p) continue;
                    auto slot = row.find(col);
                    if (slot == row.end()) {
                        row.emplace(col, -c * v);
                    } else {
                        slot->second -= c * v;
                        if (is_zero(slot->second)) row.erase(slot);
                    }
                }
            }
        }
        std::vector<Vec> out;
        for (std::size_t f = 0; f < ncols; ++f) {
            if (rows.count(f)) continue;
            Vec v(ncols, Scalar(0));
            v[f] = 1;
            for (const auto& [p, row] : rows) {
                auto hit = row.find(f);
                if (hit != row.end()) v[p] = -hit->second;
            }
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::map<std::size_t, SparseRow> basis_;
};

}  // namespace liekit
