#include "hodgekit/linalg.hpp"

#include <string>

#include "hodgekit/error.hpp"

namespace hodge {

Matrix::Matrix(size_t rows, size_t cols, std::initializer_list<Scalar> entries)
    : rows_(rows), cols_(cols), a_(entries) {
    require(a_.size() == rows * cols, ErrorKind::Shape, "matrix literal size mismatch");
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const Scalar& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::is_real() const {
    for (const Scalar& x : a_)
        if (!x.is_real())
            return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::conj() const {
    Matrix c(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            c(i, j) = (*this)(i, j).conj();
    return c;
}

Matrix Matrix::col(size_t j) const {
    Matrix c(rows_, 1);
    for (size_t i = 0; i < rows_; ++i)
        c(i, 0) = (*this)(i, j);
    return c;
}

std::vector<Scalar> Matrix::col_vec(size_t j) const {
    std::vector<Scalar> v(rows_);
    for (size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(size_t j, const std::vector<Scalar>& v) {
    require(v.size() == rows_, ErrorKind::Shape, "set_col size mismatch");
    for (size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.cols() == 0 && a.rows() == 0)
        return b;
    if (b.cols() == 0 && b.rows() == 0)
        return a;
    require(a.rows() == b.rows(), ErrorKind::Shape, "hcat row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix Matrix::from_cols(size_t rows, const std::vector<std::vector<Scalar>>& cols) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        require(cols[j].size() == rows, ErrorKind::Shape, "from_cols size mismatch");
        for (size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::Shape, "matrix add shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k)
        a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::Shape, "matrix sub shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k)
        a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
    for (Scalar& x : a_)
        x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), ErrorKind::Shape, "matrix mul shape mismatch");
    Matrix m(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero())
                    m(i, j) += aik * b(k, j);
            }
        }
    return m;
}

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v) {
    require(a.cols() == v.size(), ErrorKind::Shape, "matrix-vector shape mismatch");
    std::vector<Scalar> out(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero())
                out[i] += a(i, j) * v[j];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    return a.a_ == b.a_;
}

Rref rref(Matrix m) {
    Rref out;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t piv = rank;
        while (piv < m.rows() && m(piv, col).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != rank)
            for (size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(rank, j));
        Scalar inv = m(rank, col).inverse();
        for (size_t j = col; j < m.cols(); ++j)
            m(rank, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col).is_zero())
                continue;
            Scalar f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(rank, j);
        }
        out.pivots.push_back(col);
        ++rank;
    }
    out.mat = std::move(m);
    out.rank = rank;
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivots)
        is_pivot[c] = true;
    size_t nfree = m.cols() - r.rank;
    Matrix k(m.cols(), nfree);
    size_t jout = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        k(c, jout) = Scalar(1);
        for (size_t row = 0; row < r.rank; ++row)
            k(r.pivots[row], jout) = -r.mat(row, c);
        ++jout;
    }
    return k;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    require(b.size() == m.rows(), ErrorKind::Shape, "solve shape mismatch");
    Matrix aug = Matrix::hcat(m, Matrix::from_cols(m.rows(), {b}));
    Rref r = rref(aug);
    std::vector<Scalar> x(m.cols());
    for (size_t row = 0; row < r.rank; ++row) {
        if (r.pivots[row] == m.cols())
            return std::nullopt;  // pivot in the augmented column: inconsistent
        x[r.pivots[row]] = r.mat(row, m.cols());
    }
    return x;
}

std::optional<Matrix> solve_cols(const Matrix& m, const Matrix& rhs) {
    require(rhs.rows() == m.rows(), ErrorKind::Shape, "solve_cols shape mismatch");
    Matrix aug = Matrix::hcat(m, rhs);
    Rref r = rref(aug);
    Matrix x(m.cols(), rhs.cols());
    for (size_t row = 0; row < r.rank; ++row) {
        if (r.pivots[row] >= m.cols())
            return std::nullopt;
        for (size_t j = 0; j < rhs.cols(); ++j)
            x(r.pivots[row], j) = r.mat(row, m.cols() + j);
    }
    // Rows of rref beyond rank are zero, but an inconsistent column shows up
    // as a pivot at column >= m.cols(); checked above.
    return x;
}

Matrix inverse(const Matrix& m) {
    require(m.rows() == m.cols(), ErrorKind::Shape, "inverse of non-square matrix");
    auto x = solve_cols(m, Matrix::identity(m.rows()));
    require(x.has_value(), ErrorKind::Shape, "inverse of singular matrix");
    return *x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i1 = 0; i1 < a.rows(); ++i1)
        for (size_t j1 = 0; j1 < a.cols(); ++j1) {
            if (a(i1, j1).is_zero())
                continue;
            for (size_t i2 = 0; i2 < b.rows(); ++i2)
                for (size_t j2 = 0; j2 < b.cols(); ++j2)
                    m(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
        }
    return m;
}

bool is_nilpotent(const Matrix& m) {
    if (m.rows() != m.cols())
        return false;
    Matrix p = m;
    for (size_t k = 1; k < m.rows(); ++k) {
        if (p.is_zero())
            return true;
        p = p * m;
    }
    return p.is_zero();
}

Matrix nilpotent_exp(const Matrix& m) {
    require(m.rows() == m.cols(), ErrorKind::Shape, "exp of non-square matrix");
    size_t n = m.rows();
    Matrix sum = Matrix::identity(n);
    Matrix pow = Matrix::identity(n);
    mpz_class fact = 1;
    for (size_t k = 1; k <= n; ++k) {
        pow = pow * m;
        if (pow.is_zero())
            return sum;
        require(k < n, ErrorKind::Reject,
                "matrix is not nilpotent: power " + std::to_string(n) + " is nonzero");
        fact *= k;
        Scalar coeff{mpq_class(mpz_class(1), fact)};
        sum += pow * coeff;
    }
    return sum;
}

Matrix unipotent_log(const Matrix& m) {
    require(m.rows() == m.cols(), ErrorKind::Shape, "log of non-square matrix");
    size_t n = m.rows();
    Matrix nil = m - Matrix::identity(n);
    Matrix sum(n, n);
    Matrix pow = Matrix::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        pow = pow * nil;
        if (pow.is_zero())
            return sum;
        require(k < n, ErrorKind::Reject,
                "matrix is not unipotent: (m - id)^" + std::to_string(n) + " is nonzero");
        Scalar coeff{mpq_class(mpz_class(k % 2 == 1 ? 1 : -1), mpz_class(k))};
        sum += pow * coeff;
    }
    return sum;
}

}  // namespace hodge
