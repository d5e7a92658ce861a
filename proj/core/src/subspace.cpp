#include "hodgekit/subspace.hpp"

#include <string>

#include "hodgekit/error.hpp"

namespace hodge {

Subspace Subspace::zero(size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(ambient, 0);
    return s;
}

Subspace Subspace::full(size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (size_t i = 0; i < ambient; ++i)
        s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(size_t ambient, const Matrix& vectors) {
    require(vectors.rows() == ambient || vectors.cols() == 0, ErrorKind::Shape,
            "span: vector length differs from ambient dimension");
    // Column span = row space of the transpose; reuse rref and transpose back.
    Rref r = rref(vectors.transpose());
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(ambient, r.rank);
    for (size_t row = 0; row < r.rank; ++row)
        for (size_t j = 0; j < ambient; ++j)
            s.basis_(j, row) = r.mat(row, j);
    s.pivots_ = r.pivots;
    s.pivots_.resize(r.rank);
    return s;
}

Subspace Subspace::span_vec(size_t ambient, const std::vector<std::vector<Scalar>>& vectors) {
    return span(ambient, Matrix::from_cols(ambient, vectors));
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const std::vector<Scalar>& v) const {
    require(v.size() == ambient_, ErrorKind::Shape, "coordinates: ambient mismatch");
    // Echelon structure: coordinates are read off at the pivot rows, then the
    // residual must vanish.
    std::vector<Scalar> c(dim());
    for (size_t j = 0; j < dim(); ++j)
        c[j] = v[pivots_[j]];
    std::vector<Scalar> residual = v;
    for (size_t j = 0; j < dim(); ++j)
        if (!c[j].is_zero())
            for (size_t i = 0; i < ambient_; ++i)
                residual[i] -= c[j] * basis_(i, j);
    for (const Scalar& x : residual)
        if (!x.is_zero())
            return std::nullopt;
    return c;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, ErrorKind::Shape, "contains: ambient mismatch");
    for (size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.col_vec(j)))
            return false;
    return true;
}

Subspace Subspace::conj() const {
    // Conjugation preserves reduced column-echelon form (pivots are 1).
    Subspace s;
    s.ambient_ = ambient_;
    s.basis_ = basis_.conj();
    s.pivots_ = pivots_;
    return s;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require(a.ambient() == b.ambient(), ErrorKind::Shape, "sum: ambient mismatch");
    return Subspace::span(a.ambient(), Matrix::hcat(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require(a.ambient() == b.ambient(), ErrorKind::Shape, "intersect: ambient mismatch");
    if (a.is_full())
        return b;
    if (b.is_full())
        return a;
    // x = A u = B v  <=>  (u, -v) in ker [A | B]; push kernels through A.
    Matrix cat = Matrix::hcat(a.basis(), b.basis());
    Matrix ker = kernel_basis(cat);
    Matrix vecs(a.ambient(), ker.cols());
    for (size_t j = 0; j < ker.cols(); ++j) {
        std::vector<Scalar> x(a.ambient());
        for (size_t u = 0; u < a.dim(); ++u)
            if (!ker(u, j).is_zero())
                for (size_t i = 0; i < a.ambient(); ++i)
                    x[i] += ker(u, j) * a.basis()(i, u);
        vecs.set_col(j, x);
    }
    return Subspace::span(a.ambient(), vecs);
}

Subspace image(const Matrix& f) {
    return Subspace::span(f.rows(), f);
}

Subspace kernel(const Matrix& f) {
    return Subspace::span(f.cols(), kernel_basis(f));
}

Subspace apply(const Matrix& f, const Subspace& s) {
    require(f.cols() == s.ambient(), ErrorKind::Shape, "apply: ambient mismatch");
    return image(f * s.basis());
}

Subspace preimage(const Matrix& f, const Subspace& s) {
    require(f.rows() == s.ambient(), ErrorKind::Shape, "preimage: ambient mismatch");
    if (s.is_full())
        return Subspace::full(f.cols());
    // f^{-1}(S) = ker(Q f) for Q the projection with kernel S.
    Quotient q = quotient(s);
    return kernel(q.projection * f);
}

Quotient quotient(const Subspace& u) {
    size_t n = u.ambient();
    size_t d = u.dim();
    std::vector<bool> is_pivot(n, false);
    for (size_t r : u.pivot_rows())
        is_pivot[r] = true;

    Quotient q;
    q.dim = n - d;
    q.projection = Matrix(q.dim, n);
    q.section = Matrix(n, q.dim);

    // Section: non-pivot coordinates in ascending order.
    std::vector<size_t> free_rows;
    for (size_t i = 0; i < n; ++i)
        if (!is_pivot[i])
            free_rows.push_back(i);
    for (size_t j = 0; j < q.dim; ++j)
        q.section(free_rows[j], j) = Scalar(1);

    // Projection: reduce modulo U (kill pivot coordinates), keep free rows.
    // proj = Sel_free * (I - B_U * Sel_pivot).
    for (size_t j = 0; j < q.dim; ++j) {
        size_t fr = free_rows[j];
        q.projection(j, fr) = Scalar(1);
        for (size_t c = 0; c < d; ++c) {
            size_t pr = u.pivot_rows()[c];
            if (!u.basis()(fr, c).is_zero())
                q.projection(j, pr) = -u.basis()(fr, c);
        }
    }
    return q;
}

Quotient quotient(const Subspace& w, const Subspace& u) {
    require(w.ambient() == u.ambient(), ErrorKind::Shape, "quotient: ambient mismatch");
    require(w.contains(u), ErrorKind::Shape, "quotient: denominator not inside numerator");
    // u in w-coordinates, then quotient of the coordinate space.
    auto uc = solve_cols(w.basis(), u.basis());
    require(uc.has_value(), ErrorKind::Internal, "quotient: coordinate solve failed");
    Quotient inner = quotient(Subspace::span(w.dim(), *uc));

    // Left inverse of the w-basis: select pivot rows (they form an identity).
    Matrix left(w.dim(), w.ambient());
    for (size_t j = 0; j < w.dim(); ++j)
        left(j, w.pivot_rows()[j]) = Scalar(1);

    Quotient q;
    q.dim = inner.dim;
    q.projection = inner.projection * left;
    q.section = w.basis() * inner.section;
    return q;
}

Subspace annihilator(const Subspace& s) {
    // {f : f(v) = 0 for v in s} = ker(basis^T) under the standard pairing.
    return kernel(s.basis().transpose());
}

Subspace real_points(const Subspace& s) {
    require(s == s.conj(), ErrorKind::Reject, "real_points: subspace is not conjugation-stable");
    // Real and imaginary parts of a basis span the real points over Q.
    std::vector<std::vector<Scalar>> gens;
    for (size_t j = 0; j < s.dim(); ++j) {
        std::vector<Scalar> re(s.ambient()), im(s.ambient());
        for (size_t i = 0; i < s.ambient(); ++i) {
            re[i] = Scalar(s.basis()(i, j).re());
            im[i] = Scalar(s.basis()(i, j).im());
        }
        gens.push_back(re);
        gens.push_back(im);
    }
    Subspace r = Subspace::span_vec(s.ambient(), gens);
    require(r.dim() == s.dim(), ErrorKind::Internal, "real_points: dimension drop");
    return r;
}

Matrix restrict_map(const Matrix& f, const Subspace& dom, const Subspace& cod) {
    require(f.cols() == dom.ambient() && f.rows() == cod.ambient(), ErrorKind::Shape,
            "restrict_map: shape mismatch");
    Matrix fd = f * dom.basis();
    auto x = solve_cols(cod.basis(), fd);
    if (!x.has_value())
        fail(ErrorKind::Reject, "restrict_map: image leaves the designated codomain");
    return *x;
}

Subspace tensor_pair(const Subspace& a, const Subspace& b) {
    return image(kron(a.basis(), b.basis()));
}

}  // namespace hodge
