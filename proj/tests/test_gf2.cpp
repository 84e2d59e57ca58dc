#include <random>

#include "doctest.h"
#include "zic/gf2.hpp"

using zic::gf2::Matrix;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    Matrix m(rows, cols);
    std::uint64_t mask = rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
    for (int j = 0; j < cols; ++j) m.set_column(j, rng() & mask);
    return m;
}

}  // namespace

TEST_CASE("gf2 basics") {
    Matrix m(3, 2);
    m.set(0, 0, true);
    m.set(2, 1, true);
    CHECK(m.get(0, 0));
    CHECK_FALSE(m.get(1, 0));
    CHECK(m.apply(0b01) == 0b001);
    CHECK(m.apply(0b10) == 0b100);
    CHECK(m.apply(0b11) == 0b101);
    CHECK_THROWS(m.get(3, 0));
    CHECK_THROWS(Matrix(65, 1));

    Matrix id = Matrix::identity(4);
    CHECK(id.rank() == 4);
    CHECK(id.apply(0b1010) == 0b1010);
}

TEST_CASE("gf2 rank") {
    Matrix m(3, 3);
    m.set_column(0, 0b011);
    m.set_column(1, 0b110);
    m.set_column(2, 0b101);  // col0 ^ col1
    CHECK(m.rank() == 2);
    CHECK(Matrix(5, 3).rank() == 0);
}

TEST_CASE("gf2 span membership") {
    Matrix basis(4, 2);
    basis.set_column(0, 0b0011);
    basis.set_column(1, 0b0110);
    Matrix in(4, 1);
    in.set_column(0, 0b0101);  // sum of the basis columns
    CHECK(basis.spans(in));
    Matrix out(4, 1);
    out.set_column(0, 0b1000);
    CHECK_FALSE(basis.spans(out));
    CHECK(basis.spans(Matrix(4, 0)));  // empty set trivially spanned
}

TEST_CASE("gf2 mul matches apply composition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int a = 1 + static_cast<int>(rng() % 8);
        int b = 1 + static_cast<int>(rng() % 8);
        int c = 1 + static_cast<int>(rng() % 8);
        Matrix A = random_matrix(rng, a, b);
        Matrix B = random_matrix(rng, b, c);
        Matrix AB = A.mul(B);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << c); ++x)
            CHECK(AB.apply(x) == A.apply(B.apply(x)));
    }
}

TEST_CASE("gf2 row reshaping") {
    Matrix m(3, 1);
    m.set_column(0, 0b101);
    Matrix grown = m.with_rows(5);
    CHECK(grown.rows() == 5);
    CHECK(grown.column(0) == 0b00101);
    CHECK(grown.rows_shifted_down(2).column(0) == 0b001);
    CHECK_THROWS(grown.with_rows(2));  // would drop a set bit
    CHECK(m.rows_shifted_down(1).column(0) == 0b010);
}

TEST_CASE("gf2 bit-row round trip") {
    std::mt19937_64 rng(11);
    Matrix m = random_matrix(rng, 6, 4);
    CHECK(Matrix::from_bit_rows(m.to_bit_rows(), 4) == m);
    CHECK_THROWS(Matrix::from_bit_rows({{0, 1}, {1}}, 2));
    CHECK_THROWS(Matrix::from_bit_rows({{0, 2}}, 2));
}
