#include <catch_amalgamated.hpp>

#include <liekit/family.hpp>
#include <liekit/lie_algebra.hpp>

#include <random>

using namespace liekit;

namespace {

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    Vec v(n);
    for (auto& c : v) c = Scalar(static_cast<long>(rng() % 11) - 5);
    return v;
}

// Three-dimensional algebra with [e1,e2] = e3 and [e1,e3] = e1: the triple
// (e1,e2,e3) fails the Jacobi identity, so this is not a Lie bracket.
LieAlgebra broken_algebra() {
    LieAlgebra g(3);
    g.set_bracket(0, 1, {Scalar(0), Scalar(0), Scalar(1)});
    g.set_bracket(0, 2, {Scalar(1), Scalar(0), Scalar(0)});
    return g;
}

}  // namespace

TEST_CASE("bracket is bilinear and antisymmetric", "[core]") {
    LieAlgebra g = gab(1, 2);
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        Vec x = random_vec(rng, g.dim());
        Vec y = random_vec(rng, g.dim());
        Vec z = random_vec(rng, g.dim());
        Scalar c = frac(static_cast<long>(rng() % 9) - 4, 3);

        Vec xy = g.bracket(x, y);
        Vec yx = g.bracket(y, x);
        for (std::size_t i = 0; i < g.dim(); ++i) REQUIRE(xy[i] == -yx[i]);

        Vec lhs(g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i) lhs[i] = c * x[i] + z[i];
        Vec combined = g.bracket(lhs, y);
        Vec zy = g.bracket(z, y);
        for (std::size_t i = 0; i < g.dim(); ++i) REQUIRE(combined[i] == c * xy[i] + zy[i]);
    }
}

TEST_CASE("jacobi check accepts valid tables and localizes violations", "[core]") {
    REQUIRE(standard("heisenberg", 3).check_jacobi() == std::nullopt);
    REQUIRE(gab(frac(1, 2), 2).check_jacobi() == std::nullopt);

    auto violation = broken_algebra().check_jacobi();
    REQUIRE(violation.has_value());
    REQUIRE(violation->i == 0);
    REQUIRE(violation->j == 1);
    REQUIRE(violation->k == 2);
    // Residual is [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = -e3.
    REQUIRE(violation->residual == Vec{Scalar(0), Scalar(0), Scalar(-1)});
}

TEST_CASE("set_bracket enforces ordering and shape", "[core]") {
    LieAlgebra g(3);
    REQUIRE_THROWS_AS(g.set_bracket(1, 1, {Scalar(0), Scalar(0), Scalar(0)}), std::invalid_argument);
    REQUIRE_THROWS_AS(g.set_bracket(2, 1, {Scalar(0), Scalar(0), Scalar(0)}), std::invalid_argument);
    REQUIRE_THROWS_AS(g.set_bracket(0, 1, {Scalar(0)}), std::invalid_argument);
}

TEST_CASE("ad matrices realize the bracket", "[core]") {
    LieAlgebra h = standard("heisenberg", 3);
    Matrix ad1 = ad(h, basis_vector(3, 0));
    REQUIRE(ad1.col(1) == Vec{Scalar(0), Scalar(0), Scalar(1)});
    REQUIRE(ad1.col(0) == Vec{Scalar(0), Scalar(0), Scalar(0)});
    REQUIRE(ad1.col(2) == Vec{Scalar(0), Scalar(0), Scalar(0)});

    std::mt19937_64 rng(11);
    LieAlgebra g = gab(1, 0);
    for (int rep = 0; rep < 10; ++rep) {
        Vec x = random_vec(rng, g.dim());
        Vec y = random_vec(rng, g.dim());
        REQUIRE(ad(g, x).apply(y) == g.bracket(x, y));
    }
}

TEST_CASE("center of standard algebras", "[core]") {
    REQUIRE(center(standard("heisenberg", 5)) == Subspace::span(5, {basis_vector(5, 4)}));
    REQUIRE(center(standard("abelian", 4)).dim() == 4);
    REQUIRE(center(standard("filiform-model", 6)) == Subspace::span(6, {basis_vector(6, 5)}));
}

TEST_CASE("lower central series of the model filiform algebra", "[core]") {
    LieAlgebra g = standard("filiform-model", 5);
    auto series = lower_central_series(g);
    std::vector<std::size_t> dims;
    for (const auto& s : series) dims.push_back(s.dim());
    REQUIRE(dims == std::vector<std::size_t>{5, 3, 2, 1, 0});
    // Each term is contained in the previous one.
    for (std::size_t i = 1; i < series.size(); ++i) REQUIRE(series[i - 1].contains(series[i]));
    REQUIRE(is_nilpotent(g));
}

TEST_CASE("invariants report for standard algebras", "[core]") {
    InvariantReport h = invariants(standard("heisenberg", 3));
    REQUIRE(h.dim == 3);
    REQUIRE(h.center_dim == 1);
    REQUIRE(h.lcs_dims == std::vector<std::size_t>{3, 1, 0});
    REQUIRE(h.nilpotent);
    REQUIRE(h.nilpotency_index == 2);
    REQUIRE(h.filiform);

    InvariantReport a = invariants(standard("abelian", 4));
    REQUIRE(a.lcs_dims == std::vector<std::size_t>{4, 0});
    REQUIRE(a.nilpotency_index == 1);
    REQUIRE(!a.filiform);

    // A solvable, non-nilpotent algebra: [e1,e2] = e2.
    LieAlgebra aff(2);
    aff.set_bracket(0, 1, {Scalar(0), Scalar(1)});
    InvariantReport r = invariants(aff);
    REQUIRE(!r.nilpotent);
    REQUIRE(r.nilpotency_index == std::nullopt);
    REQUIRE(r.lcs_dims == std::vector<std::size_t>{2, 1});
}

TEST_CASE("zero-dimensional algebra is vacuously nilpotent", "[core]") {
    LieAlgebra g(0);
    InvariantReport r = invariants(g);
    REQUIRE(r.dim == 0);
    REQUIRE(r.center_dim == 0);
    REQUIRE(r.lcs_dims == std::vector<std::size_t>{0});
    REQUIRE(r.nilpotent);
    REQUIRE(!r.filiform);
}

TEST_CASE("ideal test distinguishes ideals from mere subspaces", "[core]") {
    LieAlgebra h = standard("heisenberg", 3);
    REQUIRE(is_ideal(h, center(h)));
    REQUIRE(is_ideal(h, Subspace::span(3, {basis_vector(3, 1), basis_vector(3, 2)})));
    REQUIRE(!is_ideal(h, Subspace::span(3, {basis_vector(3, 0)})));
}

TEST_CASE("quotient by the center of the heisenberg algebra is abelian", "[core]") {
    LieAlgebra h = standard("heisenberg", 3);
    QuotientResult q = quotient(h, center(h));
    REQUIRE(q.algebra.dim() == 2);
    REQUIRE(q.algebra.check_jacobi() == std::nullopt);
    REQUIRE(center(q.algebra).dim() == 2);
    REQUIRE(q.algebra.labels() == std::vector<std::string>{"e1", "e2"});
    REQUIRE(q.projection.apply(basis_vector(3, 2)) == Vec{Scalar(0), Scalar(0)});
}

TEST_CASE("quotient projection is a homomorphism", "[core]") {
    LieAlgebra g = gab(1, 0);
    QuotientResult q = quotient(g, center(g));
    REQUIRE(q.algebra.dim() == 10);
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        Vec x = random_vec(rng, 11);
        Vec y = random_vec(rng, 11);
        Vec lhs = q.projection.apply(g.bracket(x, y));
        Vec rhs = q.algebra.bracket(q.projection.apply(x), q.projection.apply(y));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("quotient by the zero ideal reproduces the algebra", "[core]") {
    LieAlgebra h = standard("heisenberg", 3);
    QuotientResult q = quotient(h, Subspace::span(3, {}));
    REQUIRE(q.algebra == h);
    REQUIRE(q.projection == Matrix::identity(3));
}

TEST_CASE("quotient by a non-ideal is rejected", "[core]") {
    LieAlgebra h = standard("heisenberg", 3);
    REQUIRE_THROWS_AS(quotient(h, Subspace::span(3, {basis_vector(3, 0)})), std::invalid_argument);
}
