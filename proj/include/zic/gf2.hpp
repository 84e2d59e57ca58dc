#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zic::gf2 {

/// Dense GF(2) matrix with at most 64 rows, stored column-major: each
/// column is one machine word, bit b = row b. This makes applying the
/// matrix to an input bit vector a handful of XORs, which is what the
/// exhaustive scheme verifier spends its time on.
class Matrix {
public:
    Matrix() : rows_(0) {}
    Matrix(int rows, int cols) : rows_(rows) {
        check_dims(rows, cols);
        cols_.assign(static_cast<std::size_t>(cols), 0);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.cols_[i] = std::uint64_t{1} << i;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_.size()); }

    bool get(int r, int c) const {
        check_at(r, c);
        return (cols_[c] >> r) & 1u;
    }
    void set(int r, int c, bool v) {
        check_at(r, c);
        if (v)
            cols_[c] |= std::uint64_t{1} << r;
        else
            cols_[c] &= ~(std::uint64_t{1} << r);
    }

    std::uint64_t column(int c) const { return cols_.at(c); }
    void set_column(int c, std::uint64_t bits) { cols_.at(c) = bits & row_mask(); }

    /// y = M x over GF(2); bit i of x selects column i.
    std::uint64_t apply(std::uint64_t x) const {
        std::uint64_t acc = 0;
        while (x) {
            int i = __builtin_ctzll(x);
            x &= x - 1;
            if (i >= cols()) throw std::invalid_argument("gf2 apply: input wider than matrix");
            acc ^= cols_[i];
        }
        return acc;
    }

    /// this * rhs (rhs columns become input vectors).
    Matrix mul(const Matrix& rhs) const {
        if (rhs.rows() != cols())
            throw std::invalid_argument("gf2 mul: inner dimensions disagree");
        Matrix out(rows_, rhs.cols());
        for (int j = 0; j < rhs.cols(); ++j) out.cols_[j] = apply(rhs.cols_[j]);
        return out;
    }

    /// Entry-wise GF(2) sum (XOR) of two equally shaped matrices.
    Matrix plus(const Matrix& rhs) const {
        if (rhs.rows_ != rows_ || rhs.cols() != cols())
            throw std::invalid_argument("gf2 plus: shapes disagree");
        Matrix out(rows_, cols());
        for (int j = 0; j < cols(); ++j) out.cols_[j] = cols_[j] ^ rhs.cols_[j];
        return out;
    }

    Matrix hstack(const Matrix& rhs) const {
        if (rhs.rows_ != rows_) throw std::invalid_argument("gf2 hstack: row counts disagree");
        Matrix out(rows_, cols() + rhs.cols());
        for (int j = 0; j < cols(); ++j) out.cols_[j] = cols_[j];
        for (int j = 0; j < rhs.cols(); ++j) out.cols_[cols() + j] = rhs.cols_[j];
        return out;
    }

    /// Same columns reinterpreted over `rows` rows. Growing pads zero rows
    /// at the top; shrinking requires the dropped rows to be zero.
    Matrix with_rows(int rows) const {
        check_dims(rows, cols());
        Matrix out(rows, cols());
        std::uint64_t mask = out.row_mask();
        for (int j = 0; j < cols(); ++j) {
            if (cols_[j] & ~mask) throw std::invalid_argument("gf2 with_rows: dropping nonzero rows");
            out.cols_[j] = cols_[j];
        }
        return out;
    }

    /// Row r of the result = row r+k of the input (rows shifted toward
    /// index 0, zeros entering at the top).
    Matrix rows_shifted_down(int k) const {
        if (k < 0 || k > rows_) throw std::invalid_argument("gf2 shift: k out of range");
        Matrix out(rows_, cols());
        for (int j = 0; j < cols(); ++j) out.cols_[j] = cols_[j] >> k;
        return out;
    }

    int rank() const {
        std::uint64_t piv[64] = {0};
        int r = 0;
        for (std::uint64_t c : cols_) r += reduce_insert(piv, c);
        return r;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Exported as rows of 0/1, row index 0 = matrix row 0.
    std::vector<std::vector<int>> to_bit_rows() const {
        std::vector<std::vector<int>> out(rows_, std::vector<int>(cols(), 0));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols(); ++c) out[r][c] = get(r, c) ? 1 : 0;
        return out;
    }

    static Matrix from_bit_rows(const std::vector<std::vector<int>>& bit_rows, int cols_hint = -1) {
        int rows = static_cast<int>(bit_rows.size());
        int cols = rows > 0 ? static_cast<int>(bit_rows[0].size()) : std::max(cols_hint, 0);
        Matrix m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            if (static_cast<int>(bit_rows[r].size()) != cols)
                throw std::invalid_argument("gf2 from_bit_rows: ragged rows");
            for (int c = 0; c < cols; ++c) {
                if (bit_rows[r][c] != 0 && bit_rows[r][c] != 1)
                    throw std::invalid_argument("gf2 from_bit_rows: entries must be 0/1");
                m.set(r, c, bit_rows[r][c] == 1);
            }
        }
        return m;
    }

    /// true iff every column of sub lies in the column space of this matrix.
    bool spans(const Matrix& sub) const {
        if (sub.rows_ != rows_) throw std::invalid_argument("gf2 spans: row counts disagree");
        std::uint64_t piv[64] = {0};
        for (std::uint64_t c : cols_) reduce_insert(piv, c);
        for (std::uint64_t c : sub.cols_) {
            c = reduce(piv, c);
            if (c != 0) return false;
        }
        return true;
    }

private:
    static void check_dims(int rows, int cols) {
        if (rows < 0 || rows > 64) throw std::invalid_argument("gf2 matrix: rows must be in [0,64]");
        if (cols < 0 || cols > 64) throw std::invalid_argument("gf2 matrix: cols must be in [0,64]");
    }
    void check_at(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols())
            throw std::out_of_range("gf2 matrix index out of range");
    }
    std::uint64_t row_mask() const {
        return rows_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows_) - 1;
    }

    static std::uint64_t reduce(const std::uint64_t piv[64], std::uint64_t c) {
        while (c) {
            int h = 63 - __builtin_clzll(c);
            if (!piv[h]) break;
            c ^= piv[h];
        }
        return c;
    }
    static int reduce_insert(std::uint64_t piv[64], std::uint64_t c) {
        c = reduce(piv, c);
        if (!c) return 0;
        piv[63 - __builtin_clzll(c)] = c;
        return 1;
    }

    int rows_;
    std::vector<std::uint64_t> cols_;
};

}  // namespace zic::gf2
