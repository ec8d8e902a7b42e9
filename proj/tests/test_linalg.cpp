#include <catch_amalgamated.hpp>

#include <liekit/linalg.hpp>

#include <algorithm>
#include <random>

using namespace liekit;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = Scalar(static_cast<long>(rng() % 11) - 5);
    return m;
}

}  // namespace

TEST_CASE("rref reduces a rank-1 matrix to a single pivot row", "[linalg]") {
    Matrix m = Matrix::from_rows({{Scalar(2), Scalar(4)}, {Scalar(1), Scalar(2)}});
    RrefResult r = rref(m);
    REQUIRE(r.rank == 1);
    REQUIRE(r.pivots == std::vector<std::size_t>{0});
    REQUIRE(r.reduced.row(0) == Vec{Scalar(1), Scalar(2)});
    REQUIRE(r.reduced.row(1) == Vec{Scalar(0), Scalar(0)});
}

TEST_CASE("rref of an invertible matrix is the identity", "[linalg]") {
    Matrix m = Matrix::from_rows({{Scalar(0), Scalar(1), Scalar(2)},
                                  {Scalar(1), frac(1, 2), Scalar(0)},
                                  {Scalar(3), Scalar(0), Scalar(1)}});
    RrefResult r = rref(m);
    REQUIRE(r.rank == 3);
    REQUIRE(r.reduced == Matrix::identity(3));
}

TEST_CASE("kernel basis spans exactly the null space", "[linalg]") {
    Matrix m = Matrix::from_rows({{Scalar(1), Scalar(0), Scalar(-1)},
                                  {Scalar(0), Scalar(1), Scalar(2)}});
    Subspace k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    REQUIRE(k.contains(Vec{Scalar(1), Scalar(-2), Scalar(1)}));
    REQUIRE(!k.contains(Vec{Scalar(1), Scalar(0), Scalar(0)}));
    for (const Vec& v : k.basis()) {
        Vec image = m.apply(v);
        REQUIRE(std::all_of(image.begin(), image.end(),
                            [](const Scalar& x) { return is_zero(x); }));
    }
}

TEST_CASE("solve finds a solution iff the system is consistent", "[linalg]") {
    Matrix a = Matrix::from_rows({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}});
    auto x = solve(a, Vec{Scalar(3), Scalar(1)});
    REQUIRE(x.has_value());
    REQUIRE(a.apply(*x) == Vec{Scalar(3), Scalar(1)});

    Matrix b = Matrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
    REQUIRE(solve(b, Vec{Scalar(1), Scalar(3)}) == std::nullopt);
    auto y = solve(b, Vec{Scalar(1), Scalar(2)});
    REQUIRE(y.has_value());
    REQUIRE(b.apply(*y) == Vec{Scalar(1), Scalar(2)});
}

TEST_CASE("subspaces compare by the space, not the generating set", "[linalg]") {
    Subspace s = Subspace::span(3, {Vec{Scalar(1), Scalar(1), Scalar(0)},
                                    Vec{Scalar(0), Scalar(2), Scalar(0)},
                                    Vec{Scalar(3), Scalar(-1), Scalar(0)}});
    Subspace t = Subspace::span(3, {Vec{Scalar(1), Scalar(0), Scalar(0)},
                                    Vec{Scalar(0), Scalar(1), Scalar(0)}});
    REQUIRE(s.dim() == 2);
    REQUIRE(s == t);
    REQUIRE(s.contains(Vec{Scalar(5), Scalar(-7), Scalar(0)}));
    REQUIRE(!s.contains(Vec{Scalar(0), Scalar(0), Scalar(1)}));
    REQUIRE(t.contains(s));
}

TEST_CASE("subspace sum and reduce", "[linalg]") {
    Subspace x = Subspace::span(3, {Vec{Scalar(1), Scalar(0), Scalar(0)}});
    Subspace y = Subspace::span(3, {Vec{Scalar(0), Scalar(0), Scalar(1)}});
    Subspace s = x.sum(y);
    REQUIRE(s.dim() == 2);
    REQUIRE(s.contains(Vec{Scalar(2), Scalar(0), Scalar(-3)}));

    // Reducing a vector against a subspace leaves a residual supported on
    // non-pivot coordinates; members reduce to zero.
    Vec inside = {Scalar(4), Scalar(0), Scalar(5)};
    Vec res = s.reduce(inside);
    REQUIRE(std::all_of(res.begin(), res.end(), [](const Scalar& c) { return is_zero(c); }));
    Vec outside = {Scalar(1), Scalar(2), Scalar(3)};
    Vec res2 = s.reduce(outside);
    REQUIRE(!is_zero(res2[1]));
}

TEST_CASE("free coordinates complement the pivots", "[linalg]") {
    Subspace s = Subspace::span(4, {Vec{Scalar(1), Scalar(0), Scalar(2), Scalar(0)},
                                    Vec{Scalar(0), Scalar(1), Scalar(3), Scalar(0)}});
    REQUIRE(s.pivots() == std::vector<std::size_t>{0, 1});
    REQUIRE(s.free_coords() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("row reducer agrees with dense rref on random systems", "[linalg]") {
    std::mt19937_64 rng(20260816);
    for (int rep = 0; rep < 25; ++rep) {
        std::size_t rows = 2 + rng() % 4;
        std::size_t cols = 2 + rng() % 5;
        Matrix m = random_matrix(rng, rows, cols);

        RowReducer red;
        for (std::size_t r = 0; r < rows; ++r) {
            RowReducer::SparseRow row;
            for (std::size_t c = 0; c < cols; ++c)
                if (!is_zero(m.at(r, c))) row[c] = m.at(r, c);
            red.insert(std::move(row));
        }
        RrefResult dense = rref(m);
        REQUIRE(red.rank() == dense.rank);

        Subspace k1 = Subspace::span(cols, red.kernel(cols));
        Subspace k2 = kernel_basis(m);
        REQUIRE(k1 == k2);
        for (const Vec& v : k1.basis()) {
            Vec image = m.apply(v);
            REQUIRE(std::all_of(image.begin(), image.end(), [](const Scalar& x) { return is_zero(x); }));
        }
    }
}

TEST_CASE("row reducer reports spans and rejects dependent rows", "[linalg]") {
    RowReducer red;
    REQUIRE(red.insert({{0, Scalar(1)}, {1, Scalar(2)}}));
    REQUIRE(red.insert({{1, Scalar(1)}}));
    REQUIRE(!red.insert({{0, Scalar(2)}, {1, Scalar(7)}}));
    REQUIRE(red.rank() == 2);
    REQUIRE(red.spans({{0, Scalar(5)}}));
    REQUIRE(!red.spans({{2, Scalar(1)}}));
}

TEST_CASE("degenerate shapes", "[linalg]") {
    REQUIRE(rref(Matrix(0, 0)).rank == 0);
    REQUIRE(kernel_basis(Matrix(0, 3)).dim() == 3);
    REQUIRE(kernel_basis(Matrix(3, 0)).dim() == 0);
    REQUIRE(Subspace::span(0, {}).dim() == 0);
    Subspace full = kernel_basis(Matrix(0, 2));
    REQUIRE(full.contains(Vec{Scalar(9), frac(-1, 3)}));
}
