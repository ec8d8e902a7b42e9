#include <catch_amalgamated.hpp>

#include <liekit/derivations.hpp>
#include <liekit/family.hpp>

#include <random>

using namespace liekit;

namespace {

Matrix elementary(std::size_t n, std::size_t r, std::size_t c) {
    Matrix m(n, n);
    m.at(r, c) = 1;
    return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix random_strictly_lower(std::mt19937_64& rng, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c)
            m.at(r, c) = Scalar(static_cast<long>(rng() % 11) - 5);
    return m;
}

}  // namespace

TEST_CASE("vectorize is column-major and invertible", "[deriv]") {
    Matrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 0) = 2;
    m.at(0, 1) = 3;
    m.at(1, 1) = 4;
    REQUIRE(vectorize(m) == Vec{Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
    REQUIRE(unvectorize(vectorize(m), 2) == m);
    REQUIRE(vectorize(elementary(3, 0, 1))[3] == Scalar(1));
}

TEST_CASE("is_derivation accepts and rejects correctly", "[deriv]") {
    LieAlgebra h = standard("heisenberg", 3);
    REQUIRE(is_derivation(h, Matrix::diagonal({Scalar(1), Scalar(1), Scalar(2)})));
    REQUIRE(is_derivation(h, Matrix(3, 3)));
    REQUIRE(!is_derivation(h, Matrix::diagonal({Scalar(1), Scalar(0), Scalar(0)})));
    REQUIRE(!is_derivation(h, Matrix::identity(3)));
    REQUIRE_THROWS_AS(is_derivation(h, Matrix(2, 2)), std::invalid_argument);
}

TEST_CASE("inner derivations always belong to the derivation space", "[deriv]") {
    std::mt19937_64 rng(17);
    for (const LieAlgebra& g : {standard("heisenberg", 5), standard("filiform-model", 6), gab(1, 0)}) {
        MatrixSpace der = derivation_space(g);
        for (int rep = 0; rep < 5; ++rep) {
            Vec x(g.dim());
            for (auto& c : x) c = Scalar(static_cast<long>(rng() % 11) - 5);
            REQUIRE(der.contains(ad(g, x)));
        }
        REQUIRE(der.dim() >= g.dim() - center(g).dim());
    }
}

TEST_CASE("derivation space of the heisenberg algebra has dimension six", "[deriv]") {
    MatrixSpace der = derivation_space(standard("heisenberg", 3));
    REQUIRE(der.dim() == 6);
    REQUIRE(der.bracket_closed);
    LieAlgebra h = standard("heisenberg", 3);
    for (const Matrix& d : der.basis) REQUIRE(is_derivation(h, d));
    // Der is closed under commutators: spot-check a pair.
    REQUIRE(der.contains(commutator(der.basis[0], der.basis[1])));
}

TEST_CASE("every linear map is a derivation of an abelian algebra", "[deriv]") {
    MatrixSpace der = derivation_space(standard("abelian", 3));
    REQUIRE(der.dim() == 9);
    REQUIRE(der.contains(elementary(3, 1, 2)));
}

TEST_CASE("matrix space span canonicalizes generators", "[deriv]") {
    std::size_t n = 3;
    Matrix a = elementary(n, 1, 0);
    Matrix b = elementary(n, 2, 0);
    MatrixSpace s = matrix_space_span(n, {a, b, a + b, a.scaled(Scalar(5))});
    REQUIRE(s.dim() == 2);
    REQUIRE(s.contains(a - b));
    REQUIRE(!s.contains(elementary(n, 0, 1)));
    // Strictly lower triangular with zero products: closed.
    REQUIRE(s.bracket_closed);
}

TEST_CASE("bracket closure grows a non-closed pair to sl2", "[deriv]") {
    Matrix e = elementary(2, 0, 1);
    Matrix f = elementary(2, 1, 0);
    MatrixSpace pair = matrix_space_span(2, {e, f});
    REQUIRE(!pair.bracket_closed);

    MatrixSpace closed = bracket_closure(2, {e, f});
    REQUIRE(closed.dim() == 3);
    REQUIRE(closed.bracket_closed);
    REQUIRE(closed.contains(commutator(e, f)));

    EngelVerdict verdict = engel_all_nilpotent(closed);
    REQUIRE(!verdict.all_nilpotent);
    REQUIRE(verdict.witness.has_value());
    REQUIRE(!verdict.witness->is_nilpotent());
    REQUIRE(closed.contains(*verdict.witness));
}

TEST_CASE("engel flags certify strictly lower triangular spaces", "[deriv]") {
    std::mt19937_64 rng(23);
    MatrixSpace s = bracket_closure(4, {random_strictly_lower(rng, 4), random_strictly_lower(rng, 4)});
    EngelVerdict verdict = engel_all_nilpotent(s);
    REQUIRE(verdict.all_nilpotent);
    REQUIRE(!verdict.witness.has_value());
    REQUIRE(verdict.flag_dims.front() > 0);
    REQUIRE(verdict.flag_dims.back() == 4);
    for (std::size_t i = 1; i < verdict.flag_dims.size(); ++i)
        REQUIRE(verdict.flag_dims[i - 1] < verdict.flag_dims[i]);
}

TEST_CASE("engel requires a bracket-closed space", "[deriv]") {
    MatrixSpace open = matrix_space_span(2, {elementary(2, 0, 1), elementary(2, 1, 0)});
    REQUIRE_THROWS_AS(engel_all_nilpotent(open), std::invalid_argument);
}

TEST_CASE("characteristic nilpotency of familiar algebras", "[deriv]") {
    CharNilpotency h = is_characteristically_nilpotent(standard("heisenberg", 3));
    REQUIRE(!h.characteristically_nilpotent);

    CharNilpotency g = is_characteristically_nilpotent(gab(1, 0));
    REQUIRE(g.characteristically_nilpotent);
    REQUIRE(g.der.dim() == 13);
    REQUIRE(g.evidence.all_nilpotent);
}

TEST_CASE("diagonal derivation space solves the weight equations", "[deriv]") {
    REQUIRE(diagonal_derivation_space(standard("heisenberg", 3)).dim() == 2);
    REQUIRE(diagonal_derivation_space(standard("abelian", 3)).dim() == 3);
    REQUIRE(diagonal_derivation_space(standard("filiform-model", 5)).dim() == 2);
    Subspace d = diagonal_derivation_space(standard("heisenberg", 3));
    REQUIRE(d.contains(Vec{Scalar(1), Scalar(1), Scalar(2)}));
    REQUIRE(!d.contains(Vec{Scalar(1), Scalar(1), Scalar(3)}));
}
