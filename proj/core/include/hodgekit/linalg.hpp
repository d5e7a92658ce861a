#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "hodgekit/scalar.hpp"

namespace hodge {

/* Dense matrix over exact scalars, row-major.  A matrix doubles as a linear
   map: rows = codomain dimension, cols = domain dimension.  All reductions
   are deterministic (first nonzero pivot, ascending scan), so any two runs
   produce identical output. */
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(size_t rows, size_t cols, std::initializer_list<Scalar> entries);

    static Matrix identity(size_t n);
    static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_real() const;

    Matrix transpose() const;
    Matrix conj() const;  // entrywise conjugation

    Matrix col(size_t j) const;
    std::vector<Scalar> col_vec(size_t j) const;
    void set_col(size_t j, const std::vector<Scalar>& v);

    // Horizontal concatenation [A | B]; dimensions must agree.
    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix from_cols(size_t rows, const std::vector<std::vector<Scalar>>& cols);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
    friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
    friend std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

using LinearMap = Matrix;

struct Rref {
    Matrix mat;                  // reduced row-echelon form
    std::vector<size_t> pivots;  // pivot column per nonzero row, strictly increasing
    size_t rank;
};

Rref rref(Matrix m);

// Columns form the canonical basis of ker(m) (one per free column, the free
// coordinate set to 1, free columns in ascending order).
Matrix kernel_basis(const Matrix& m);

// Particular solution of m x = b, or nullopt when inconsistent.  A zero
// solution is a genuine solution and is distinct from "no solution".
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

// Solve m X = rhs for all columns at once; nullopt if any column fails.
std::optional<Matrix> solve_cols(const Matrix& m, const Matrix& rhs);

Matrix inverse(const Matrix& m);  // throws ErrorKind::Shape if singular

// Kronecker product, (i1*rowsB+i2, j1*colsB+j2) <- A(i1,j1)*B(i2,j2).
Matrix kron(const Matrix& a, const Matrix& b);

/* exp of a nilpotent matrix as the finite sum sum m^k / k!.  Nilpotency is
   verified on the way: if m^dim != 0 the input is rejected and the witness
   power (= dim) is reported.  unipotent_log inverts it via the alternating
   series on m - id. */
Matrix nilpotent_exp(const Matrix& m);
Matrix unipotent_log(const Matrix& m);
bool is_nilpotent(const Matrix& m);

}  // namespace hodge
