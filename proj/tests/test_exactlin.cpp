#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tannakit/exactlin.hpp"
#include "test_support.hpp"

using namespace tannakit;

TEST_CASE("scalar normalization and arithmetic") {
    auto Q = FieldSpec::rationals();
    Scalar a = Scalar::parse("2/6", Q);
    CHECK(a == Scalar::parse("1/3", Q));
    CHECK((a + a).str() == "2/3");
    CHECK(Scalar::parse("-4/-8", Q).str() == "1/2");

    auto F5 = FieldSpec::prime_field(5);
    Scalar b(7, F5);
    CHECK(b.str() == "2");
    CHECK((b.inverse() * b).is_one());
    CHECK(Scalar::parse("1/2", F5).str() == "3");  // 2*3 = 6 = 1 mod 5
    CHECK_THROWS(FieldSpec::prime_field(6));
}

TEST_CASE("kernel of identity is zero") {
    auto m = Matrix::identity(2, FieldSpec::rationals());
    auto k = kernel_basis(m);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 0);
}

TEST_CASE("kernel of [1 1] is (1,-1) after echelon normalization") {
    auto m = Matrix::from_rows({{1, 1}}, FieldSpec::rationals());
    auto k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0).is_one());
    CHECK(k.at(1, 0) == Scalar(-1, m.field()));
}

TEST_CASE("kernel of a 6x18 product of full-rank factors has nullity 13") {
    // rank-5 matrix constructed from full-rank 6x5 and 5x18 factors
    auto Q = FieldSpec::rationals();
    test::Lcg rng(42);
    Matrix l(6, 5, Q), r(5, 18, Q);
    do {
        l = test::random_matrix(6, 5, Q, rng);
    } while (rank(l) != 5);
    do {
        r = test::random_matrix(5, 18, Q, rng);
    } while (rank(r) != 5);
    Matrix m = l * r;
    REQUIRE(rank(m) == 5);
    Matrix k = kernel_basis(m);
    CHECK(k.cols() == 13);
    CHECK((m * k).is_zero());
}

TEST_CASE("image basis examples") {
    auto Q = FieldSpec::rationals();
    CHECK(image_basis(Matrix(3, 3, Q)).cols() == 0);
    CHECK(image_basis(Matrix::identity(4, Q)) == Matrix::identity(4, Q));

    auto m = Matrix::from_rows({{1, 2}, {2, 4}}, Q);
    auto im = image_basis(m);
    REQUIRE(im.cols() == 1);
    CHECK(im.at(0, 0).is_one());
    CHECK(im.at(1, 0) == Scalar(2, Q));
}

TEST_CASE("solve picks the particular solution with free variables zero") {
    auto Q = FieldSpec::rationals();
    auto i4 = Matrix::identity(4, Q);
    test::Lcg rng(7);
    auto b = test::random_matrix(4, 2, Q, rng);
    CHECK(*solve(i4, b) == b);

    auto a = Matrix::from_rows({{1, 1}}, Q);
    auto rhs = Matrix::from_rows({{3}}, Q);
    auto x = solve(a, rhs);
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0) == Scalar(3, Q));
    CHECK(x->at(1, 0).is_zero());

    auto bad = solve(Matrix::from_rows({{1}, {1}}, Q), Matrix::from_rows({{0}, {1}}, Q));
    CHECK(!bad.has_value());
}

TEST_CASE("kron examples") {
    auto Q = FieldSpec::rationals();
    auto c = Matrix::from_rows({{3}}, Q);
    test::Lcg rng(9);
    auto m = test::random_matrix(2, 3, Q, rng);
    CHECK(kron(c, m) == m.scaled(Scalar(3, Q)));
    CHECK(kron(Matrix::identity(2, Q), Matrix::identity(3, Q)) == Matrix::identity(6, Q));
    auto swp = Matrix::from_rows({{0, 1}, {1, 0}}, Q);
    auto two = Matrix::from_rows({{2}}, Q);
    CHECK(kron(swp, two) == Matrix::from_rows({{0, 2}, {2, 0}}, Q));
}

TEST_CASE("rank-nullity and kron mixed product over both fields") {
    for (auto field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        test::Lcg rng(11);
        for (int trial = 0; trial < 8; ++trial) {
            auto m = test::random_matrix(4 + trial % 3, 5, field, rng);
            CHECK((m * kernel_basis(m)).is_zero());
            CHECK(kernel_basis(m).cols() + image_basis(m).cols() == m.cols());

            auto a = test::random_matrix(2, 3, field, rng);
            auto b = test::random_matrix(3, 2, field, rng);
            auto c = test::random_matrix(3, 2, field, rng);
            auto d = test::random_matrix(2, 3, field, rng);
            CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));

            auto x0 = test::random_matrix(5, 1, field, rng);
            auto sol = solve(m, m * x0);
            REQUIRE(sol.has_value());
            CHECK(m * *sol == m * x0);
        }
    }
}

TEST_CASE("pipelines are reproducible") {
    auto F5 = FieldSpec::prime_field(5);
    test::Lcg rng1(123), rng2(123);
    auto a = test::random_matrix(6, 9, F5, rng1);
    auto b = test::random_matrix(6, 9, F5, rng2);
    CHECK(a == b);
    CHECK(kernel_basis(a) == kernel_basis(b));
    CHECK(rref(a) == rref(b));
}

TEST_CASE("quotient presentation") {
    auto Q = FieldSpec::rationals();
    auto span = Matrix::from_rows({{1, 0}, {1, 0}, {0, 1}}, Q);
    auto q = quotient_by_span(span);
    CHECK(q.dim == 1);
    CHECK((q.projection * span).is_zero());
    CHECK((q.projection * q.section).is_identity());
}

TEST_CASE("tensor factor permutation swaps middle factors") {
    // X (2) ⊗ O (3) ⊗ Y (2) ⊗ O (3)  ->  X ⊗ Y ⊗ O ⊗ O
    auto perm = tensor_factor_permutation({2, 3, 2, 3}, {0, 2, 1, 3});
    // output index (x,y,a,b) should read input index (x,a,y,b)
    auto in_idx = [](std::size_t x, std::size_t a, std::size_t y, std::size_t b) {
        return ((x * 3 + a) * 2 + y) * 3 + b;
    };
    auto out_idx = [](std::size_t x, std::size_t y, std::size_t a, std::size_t b) {
        return ((x * 2 + y) * 3 + a) * 3 + b;
    };
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) CHECK(perm[out_idx(x, y, a, b)] == in_idx(x, a, y, b));
}

TEST_CASE("left inverse over a prime field where normal equations degenerate") {
    auto F2 = FieldSpec::prime_field(2);
    auto m = Matrix::from_rows({{1}, {1}}, F2);
    auto l = left_inverse(m);
    CHECK((l * m).is_identity());
}
