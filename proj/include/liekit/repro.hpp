#pragma once

#include "coadjoint.hpp"
#include "derivations.hpp"
#include "family.hpp"
#include "gradings.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace liekit {

/// Reproduction suite for the documented invariants of g(alpha, beta) and its
/// central quotient over a parameter grid, plus a few fixed reference
/// algebras. Failures are report entries, never exceptions, and reports are
/// byte-identical across runs with the same grid and seed.

struct ReproCheck {
    std::string name;
    std::string expected;  // empty for informational entries
    std::string actual;
    bool pass = true;
    bool asserted = true;  // informational entries never fail the run
};

struct ReproPoint {
    Scalar alpha;
    Scalar beta;
    std::vector<ReproCheck> checks;
    bool pass = true;  // all asserted checks pass
};

struct ReproReport {
    std::vector<ReproPoint> points;
    std::vector<ReproCheck> reference_checks;
    std::uint64_t seed = kDefaultSeed;
    bool pass = true;
};

/// {-2, -1, -1/2, 0, 1/2, 1, 2}^2 followed by the two extra points
/// (1, -3) and (2, -6) on the line 3*alpha + beta = 0.
inline std::vector<std::pair<Scalar, Scalar>> default_grid() {
    const std::vector<Scalar> axis = {Scalar(-2), Scalar(-1), frac(-1, 2), Scalar(0),
                                      frac(1, 2),  Scalar(1),  Scalar(2)};
    std::vector<std::pair<Scalar, Scalar>> grid;
    grid.reserve(axis.size() * axis.size() + 2);
    for (const auto& a : axis)
        for (const auto& b : axis) grid.emplace_back(a, b);
    grid.emplace_back(Scalar(1), Scalar(-3));
    grid.emplace_back(Scalar(2), Scalar(-6));
    return grid;
}

namespace detail {

inline std::string join_dims(const std::vector<std::size_t>& dims) {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(dims[i]);
    }
    return out;
}

inline std::string render_weights(const std::vector<Integer>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += w[i].get_str();
    }
    return out + ")";
}

inline std::string render_status(const DilationStatus& st) {
    std::string out = to_string(st.kind);
    if (st.kind == DilationStatus::Kind::Dilations) return out + " w=" + render_weights(st.weights);
    if (st.kind == DilationStatus::Kind::NoDilations)
        return out + " (" + std::string(to_string(st.reason)) + ")";
    return out;
}

}  // namespace detail

/// All documented claims at one parameter point. The dimension of Der(g) at
/// the origin has no documented value; it is reported without being asserted.
inline ReproPoint repro_point(const Scalar& alpha, const Scalar& beta,
                              std::uint64_t seed = kDefaultSeed) {
    ReproPoint pt;
    pt.alpha = alpha;
    pt.beta = beta;
    const bool origin = is_zero(alpha) && is_zero(beta);
    const bool off_line = !is_zero(Scalar(3) * alpha + beta);

    auto add = [&pt](std::string name, std::string expected, std::string actual, bool pass,
                     bool asserted = true) {
        pt.checks.push_back(
            {std::move(name), std::move(expected), std::move(actual), pass, asserted});
        if (asserted && !pt.checks.back().pass) pt.pass = false;
    };

    const LieAlgebra g = gab(alpha, beta);
    const std::size_t n = g.dim();

    auto violation = g.check_jacobi();
    add("jacobi", "no violation",
        violation ? "violation at (" + std::to_string(violation->i + 1) + "," +
                        std::to_string(violation->j + 1) + "," + std::to_string(violation->k + 1) +
                        ")"
                  : "no violation",
        !violation);

    const Subspace span_e11 = Subspace::span(n, {basis_vector(n, 10)});
    const Subspace z = center(g);
    add("center", "span{e11}", z == span_e11 ? "span{e11}" : "center dim " + std::to_string(z.dim()),
        z == span_e11);

    const InvariantReport inv = invariants(g);
    const std::vector<std::size_t> want_lcs{11, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
    add("filiform-lcs", "filiform; lcs " + detail::join_dims(want_lcs),
        (inv.filiform ? "filiform; lcs " : "not filiform; lcs ") + detail::join_dims(inv.lcs_dims),
        inv.filiform && inv.lcs_dims == want_lcs);

    const Vec ell = basis_vector(n, 10);
    const Subspace rad = radical(g, ell);
    const bool flat = flat_orbit(g, ell) && rad == span_e11;
    add("flat-orbit-e11", "radical(e11*) = center = span{e11}",
        flat ? "radical(e11*) = center = span{e11}" : "radical dim " + std::to_string(rad.dim()),
        flat);

    const MatrixSpace der = derivation_space(g);
    add("dim-der", origin ? "" : "13", std::to_string(der.dim()),
        origin ? true : der.dim() == 13, !origin);

    const EngelVerdict eng = engel_all_nilpotent(der, seed);
    add("der-all-nilpotent", origin ? "false" : "true", eng.all_nilpotent ? "true" : "false",
        eng.all_nilpotent == !origin);

    const QuotientResult q = quotient(g, z);
    const MatrixSpace der_q = derivation_space(q.algebra);
    add("dim-der-quotient", origin ? "13" : "12", std::to_string(der_q.dim()),
        der_q.dim() == (origin ? 13u : 12u));

    const EngelVerdict eng_q = engel_all_nilpotent(der_q, seed);
    add("der-quotient-all-nilpotent", origin ? "false" : "true",
        eng_q.all_nilpotent ? "true" : "false", eng_q.all_nilpotent == !origin);

    if (origin) {
        Vec diag(q.algebra.dim());
        for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = Scalar(static_cast<long>(i) + 1);
        const bool member = der_q.contains(Matrix::diagonal(diag));
        add("quotient-diag-derivation", "diag(1..10) in Der(quotient)",
            member ? "member" : "not a member", member);
    }

    const auto basis = gab_quotient_derivation_basis(alpha, beta);
    std::size_t passing = 0;
    for (const auto& d : basis)
        if (is_derivation(q.algebra, d)) ++passing;
    add("closed-form-basis-derivations", "12 of 12", std::to_string(passing) + " of 12",
        passing == basis.size() && basis.size() == 12);

    if (off_line) {
        const MatrixSpace span = matrix_space_span(q.algebra.dim(), basis);
        const bool equal = span.dim() == 12 && span.vectorized == der_q.vectorized;
        add("closed-form-basis-span", "independent; span = Der(quotient)",
            span.dim() != 12 ? "dependent (rank " + std::to_string(span.dim()) + ")"
                             : (equal ? "independent; span = Der(quotient)" : "proper subspace"),
            equal);
    }

    const DilationStatus st = dilation_status(q.algebra, &der_q, seed);
    std::string want_status;
    if (origin) {
        std::vector<Integer> w;
        for (long i = 1; i <= 10; ++i) w.emplace_back(i);
        want_status = "dilations w=" + detail::render_weights(w);
    } else {
        want_status = "no-dilations (characteristically-nilpotent)";
    }
    const std::string got_status = detail::render_status(st);
    add("quotient-dilation-status", want_status, got_status, got_status == want_status);

    return pt;
}

namespace detail {

inline void reference_checks(std::vector<ReproCheck>& out, std::uint64_t seed) {
    auto add = [&out](std::string name, std::string expected, std::string actual, bool pass) {
        out.push_back({std::move(name), std::move(expected), std::move(actual), pass, true});
    };

    const LieAlgebra h3 = standard("heisenberg", 3);
    const DilationStatus st = dilation_status(h3, nullptr, seed);
    const std::vector<Integer> want_w{Integer(1), Integer(1), Integer(2)};
    add("heisenberg3-dilation-weights", "dilations w=(1,1,2)", render_status(st),
        st.kind == DilationStatus::Kind::Dilations && st.weights == want_w);

    bool automorphism = false;
    bool expanding = false;
    if (st.kind == DilationStatus::Kind::Dilations) {
        const Matrix delta2 = dilation_matrix(h3, st.weights, Scalar(2));
        automorphism = verify_automorphism(h3, delta2);
        expanding = true;
        for (std::size_t i = 0; i < delta2.rows(); ++i)
            if (!(delta2.at(i, i) > 1)) expanding = false;
    }
    add("heisenberg3-delta2-automorphism", "automorphism",
        automorphism ? "automorphism" : "not an automorphism", automorphism);
    add("heisenberg3-delta2-expanding", "all diagonal entries > 1",
        expanding ? "all diagonal entries > 1" : "some diagonal entry <= 1", expanding);
}

}  // namespace detail

inline ReproReport run_repro(const std::vector<std::pair<Scalar, Scalar>>& grid,
                             std::uint64_t seed = kDefaultSeed) {
    ReproReport rep;
    rep.seed = seed;
    rep.points.reserve(grid.size());
    for (const auto& [a, b] : grid) {
        rep.points.push_back(repro_point(a, b, seed));
        if (!rep.points.back().pass) rep.pass = false;
    }
    detail::reference_checks(rep.reference_checks, seed);
    for (const auto& c : rep.reference_checks)
        if (c.asserted && !c.pass) rep.pass = false;
    return rep;
}

namespace detail {

inline nlohmann::ordered_json check_to_json(const ReproCheck& c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    if (!c.expected.empty()) j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["pass"] = c.pass;
    j["asserted"] = c.asserted;
    return j;
}

}  // namespace detail

inline nlohmann::ordered_json repro_to_json(const ReproReport& rep) {
    nlohmann::ordered_json j;
    j["suite"] = "gab-grid";
    j["seed"] = rep.seed;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    std::size_t checks = 0, failed = 0;
    for (const auto& pt : rep.points) {
        nlohmann::ordered_json p;
        p["alpha"] = to_string(pt.alpha);
        p["beta"] = to_string(pt.beta);
        nlohmann::ordered_json cj = nlohmann::ordered_json::array();
        for (const auto& c : pt.checks) {
            cj.push_back(detail::check_to_json(c));
            ++checks;
            if (c.asserted && !c.pass) ++failed;
        }
        p["checks"] = std::move(cj);
        p["pass"] = pt.pass;
        points.push_back(std::move(p));
    }
    j["points"] = std::move(points);
    nlohmann::ordered_json refs = nlohmann::ordered_json::array();
    for (const auto& c : rep.reference_checks) {
        refs.push_back(detail::check_to_json(c));
        ++checks;
        if (c.asserted && !c.pass) ++failed;
    }
    j["reference_checks"] = std::move(refs);
    nlohmann::ordered_json counts;
    counts["points"] = rep.points.size();
    counts["checks"] = checks;
    counts["failed"] = failed;
    j["counts"] = std::move(counts);
    j["pass"] = rep.pass;
    return j;
}

}  // namespace liekit
