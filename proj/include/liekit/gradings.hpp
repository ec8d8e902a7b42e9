#pragma once

#include "derivations.hpp"
#include "fourier_motzkin.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit {

struct GradingViolation {
    std::size_t i, j, k;  // 0-based, lexicographically first offending triple
};

/// Weights w grade g iff w_i + w_j = w_k whenever c_ij^k != 0. Zero, mixed
/// and positive weight vectors are all checked by the same rule.
inline std::optional<GradingViolation> verify_grading(const LieAlgebra& g, const Vec& w) {
    const std::size_t n = g.dim();
    if (w.size() != n) throw std::invalid_argument("weight vector length mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& [k, c] : g.terms(i, j))
                if (w[i] + w[j] != w[k]) return GradingViolation{i, j, k};
    return std::nullopt;
}

/// Clear denominators and divide by the gcd of the numerators: the smallest
/// positive-integer representative of the ray through w.
inline std::vector<Integer> minimal_integer_weights(const Vec& w) {
    Integer lcm(1);
    for (const auto& x : w) {
        Integer den = x.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(w.size());
    Integer gcd(0);
    for (const auto& x : w) {
        Integer v = Integer(x.get_num()) * (lcm / Integer(x.get_den()));
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (sgn(gcd) > 0)
        for (auto& v : out) v /= gcd;
    return out;
}

/// Strictly positive weights grading g in the given basis, canonically
/// rescaled to minimal integers; nullopt when no such diagonal grading
/// exists on this basis (which says nothing about other bases).
inline std::optional<std::vector<Integer>> search_positive_diagonal_grading(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Vec> eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& [k, c] : g.terms(i, j)) {
                Vec row(n, Scalar(0));
                row[i] += 1;
                row[j] += 1;
                row[k] -= 1;
                eqs.push_back(std::move(row));
            }
    auto w = strict_positive_point(eqs.empty() ? Matrix(0, n) : Matrix::from_rows(eqs), n);
    if (!w) return std::nullopt;
    return minimal_integer_weights(*w);
}

/// delta_t = diag(t^{w_1}, ..., t^{w_n}) for a verified integer grading and
/// rational t > 0; an automorphism of g by the grading property.
inline Matrix dilation_matrix(const LieAlgebra& g, const std::vector<Integer>& weights,
                              const Scalar& t) {
    if (weights.size() != g.dim()) throw std::invalid_argument("weight count mismatch");
    if (sgn(t) <= 0) throw std::domain_error("dilation parameter must be positive");
    Vec w(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) w[i] = Scalar(weights[i]);
    if (verify_grading(g, w)) throw std::invalid_argument("weights do not grade the algebra");
    Vec diag(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        diag[i] = pow_int(t, weights[i].get_si());
    return Matrix::diagonal(diag);
}

/// phi([e_i, e_j]) = [phi e_i, phi e_j] over all pairs; phi must be square
/// of the right size and invertible.
inline bool verify_automorphism(const LieAlgebra& g, const Matrix& phi) {
    const std::size_t n = g.dim();
    if (phi.rows() != n || phi.cols() != n)
        throw std::invalid_argument("automorphism candidate must be n x n");
    if (rref(phi).rank != n) throw std::invalid_argument("automorphism candidate is singular");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (phi.apply(g.structure(i, j)) != g.bracket(phi.col(i), phi.col(j))) return false;
    return true;
}

struct DilationStatus {
    enum class Kind { Dilations, NoDilations, Unknown };
    enum class Reason { None, NotNilpotent, CharacteristicallyNilpotent };
    Kind kind = Kind::Unknown;
    Reason reason = Reason::None;
    std::vector<Integer> weights;  // nonempty exactly when kind == Dilations
    std::string note;
};

inline const char* to_string(DilationStatus::Kind k) {
    switch (k) {
        case DilationStatus::Kind::Dilations: return "dilations";
        case DilationStatus::Kind::NoDilations: return "no-dilations";
        default: return "unknown";
    }
}

inline const char* to_string(DilationStatus::Reason r) {
    switch (r) {
        case DilationStatus::Reason::NotNilpotent: return "not-nilpotent";
        case DilationStatus::Reason::CharacteristicallyNilpotent:
            return "characteristically-nilpotent";
        default: return "none";
    }
}

/// Sound tri-state: NoDilations when g is not nilpotent or is
/// characteristically nilpotent (no positive grading can exist), Dilations
/// with a canonical witness when the diagonal search succeeds, and Unknown
/// otherwise - the search is basis-relative, so failure is not a proof.
/// Pass a precomputed derivation space to skip recomputing it.
inline DilationStatus dilation_status(const LieAlgebra& g, const MatrixSpace* der = nullptr,
                                      std::uint64_t seed = kDefaultSeed) {
    DilationStatus st;
    if (!is_nilpotent(g)) {
        st.kind = DilationStatus::Kind::NoDilations;
        st.reason = DilationStatus::Reason::NotNilpotent;
        return st;
    }
    EngelVerdict engel = der ? engel_all_nilpotent(*der, seed)
                             : engel_all_nilpotent(derivation_space(g), seed);
    if (engel.all_nilpotent) {
        st.kind = DilationStatus::Kind::NoDilations;
        st.reason = DilationStatus::Reason::CharacteristicallyNilpotent;
        return st;
    }
    if (auto w = search_positive_diagonal_grading(g)) {
        st.kind = DilationStatus::Kind::Dilations;
        st.weights = std::move(*w);
        return st;
    }
    st.kind = DilationStatus::Kind::Unknown;
    st.note = "diagonal search in the given basis failed; basis-independent search not implemented";
    return st;
}

}  // namespace liekit
