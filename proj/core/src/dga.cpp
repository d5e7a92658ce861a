#include "hodgekit/dga.hpp"

#include <set>
#include <string>

#include "hodgekit/error.hpp"
#include "hodgekit/subspace.hpp"

namespace hodge {

size_t Dga::dim_at(int n) const {
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
}

Matrix Dga::diff_at(int n) const {
    auto it = diff.find(n);
    if (it != diff.end())
        return it->second;
    return Matrix(dim_at(n + 1), dim_at(n));
}

Matrix Dga::product_at(int p, int q) const {
    auto it = products.find(std::make_pair(p, q));
    if (it != products.end())
        return it->second;
    // The unit acts as the identity unless overridden.
    if (p == 0 && dim_at(0) == 1)
        return Matrix::identity(dim_at(q));
    if (q == 0 && dim_at(0) == 1)
        return Matrix::identity(dim_at(p));
    return Matrix(dim_at(p + q), dim_at(p) * dim_at(q));
}

int Dga::weight_of(int n, size_t i) const {
    auto it = weights.find(n);
    require(it != weights.end() && i < it->second.size(), ErrorKind::Shape,
            "no weight label at degree " + std::to_string(n));
    return it->second[i];
}

Matrix kron_swap(size_t dim_p, size_t dim_q) {
    Matrix s(dim_q * dim_p, dim_p * dim_q);
    for (size_t i = 0; i < dim_p; ++i)
        for (size_t j = 0; j < dim_q; ++j)
            s(j * dim_p + i, i * dim_q + j) = Scalar(1L);
    return s;
}

DgaCheck validate_dga(const Dga& a) {
    DgaCheck c;
    auto bad = [&](const std::string& why) {
        c.ok = false;
        c.failure = why;
        return c;
    };
    if (a.dims.empty())
        return bad("no degrees");
    if (a.dims.begin()->first != 0)
        return bad("degrees must start at 0");
    int prev = -1;
    for (const auto& [n, dsz] : a.dims) {
        (void)dsz;
        if (n != prev + 1)
            return bad("degree window has a gap before " + std::to_string(n));
        prev = n;
    }
    if (a.dim_at(0) != 1)
        return bad("degree 0 is not the ground field");
    int top = a.top();
    if (a.weighted()) {
        for (const auto& [n, dsz] : a.dims) {
            auto it = a.weights.find(n);
            if (it == a.weights.end() || it->second.size() != dsz)
                return bad("weight labels missing or mis-sized at degree " + std::to_string(n));
        }
        if (a.weights.at(0) != std::vector<int>{0})
            return bad("unit must have weight 0");
    }
    for (const auto& [n, m] : a.diff)
        if (m.rows() != a.dim_at(n + 1) || m.cols() != a.dim_at(n))
            return bad("differential has the wrong shape at degree " + std::to_string(n));
    for (const auto& [pq, m] : a.products) {
        auto [p, q] = pq;
        if (p < 0 || q < 0)
            return bad("product stored at negative degrees");
        if (m.rows() != a.dim_at(p + q) || m.cols() != a.dim_at(p) * a.dim_at(q))
            return bad("product has the wrong shape at degrees (" + std::to_string(p) + "," +
                       std::to_string(q) + ")");
    }
    for (int q = 0; q <= top; ++q) {
        if (a.product_at(0, q) != Matrix::identity(a.dim_at(q)))
            return bad("unit does not act as identity on the left of degree " + std::to_string(q));
        if (a.product_at(q, 0) != Matrix::identity(a.dim_at(q)))
            return bad("unit does not act as identity on the right of degree " + std::to_string(q));
    }
    for (int n = 0; n < top; ++n)
        if (!(a.diff_at(n + 1) * a.diff_at(n)).is_zero())
            return bad("d squared is nonzero leaving degree " + std::to_string(n));
    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q) {
            Matrix lhs = a.diff_at(p + q) * a.product_at(p, q);
            Matrix rhs = a.product_at(p + 1, q) * kron(a.diff_at(p), Matrix::identity(a.dim_at(q)));
            Matrix second =
                a.product_at(p, q + 1) * kron(Matrix::identity(a.dim_at(p)), a.diff_at(q));
            if (p % 2 != 0)
                second *= Scalar(-1L);
            rhs += second;
            if (lhs != rhs)
                return bad("Leibniz fails at degrees (" + std::to_string(p) + "," +
                           std::to_string(q) + ")");
        }
    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q) {
            Matrix lhs = a.product_at(q, p) * kron_swap(a.dim_at(p), a.dim_at(q));
            Matrix rhs = a.product_at(p, q);
            if ((p * q) % 2 != 0)
                rhs *= Scalar(-1L);
            if (lhs != rhs)
                return bad("graded commutativity fails at degrees (" + std::to_string(p) + "," +
                           std::to_string(q) + ")");
        }
    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q)
            for (int r = 0; p + q + r <= top; ++r) {
                Matrix lhs =
                    a.product_at(p + q, r) * kron(a.product_at(p, q), Matrix::identity(a.dim_at(r)));
                Matrix rhs =
                    a.product_at(p, q + r) * kron(Matrix::identity(a.dim_at(p)), a.product_at(q, r));
                if (lhs != rhs)
                    return bad("associativity fails at degrees (" + std::to_string(p) + "," +
                               std::to_string(q) + "," + std::to_string(r) + ")");
            }
    if (a.weighted()) {
        for (int n = 0; n < top; ++n) {
            Matrix d = a.diff_at(n);
            for (size_t k = 0; k < d.rows(); ++k)
                for (size_t i = 0; i < d.cols(); ++i)
                    if (!d(k, i).is_zero() && a.weight_of(n + 1, k) != a.weight_of(n, i))
                        return bad("differential does not preserve weight at degree " +
                                   std::to_string(n));
        }
        for (int p = 0; p <= top; ++p)
            for (int q = 0; p + q <= top; ++q) {
                Matrix m = a.product_at(p, q);
                size_t dq = a.dim_at(q);
                for (size_t k = 0; k < m.rows(); ++k)
                    for (size_t col = 0; col < m.cols(); ++col)
                        if (!m(k, col).is_zero() &&
                            a.weight_of(p + q, k) !=
                                a.weight_of(p, col / dq) + a.weight_of(q, col % dq))
                            return bad("product does not add weights at degrees (" +
                                       std::to_string(p) + "," + std::to_string(q) + ")");
            }
    }
    return c;
}

std::map<int, size_t> dga_cohomology_dims(const Dga& a) {
    std::map<int, size_t> h;
    for (const auto& [n, dsz] : a.dims) {
        (void)dsz;
        size_t ker = kernel(a.diff_at(n)).dim();
        size_t im = n == 0 ? 0 : image(a.diff_at(n - 1)).dim();
        h.emplace(n, ker - im);
    }
    return h;
}

std::map<int, std::map<int, size_t>> dga_cohomology_weight_dims(const Dga& a) {
    require(a.weighted(), ErrorKind::Shape, "cohomology by weight needs weight labels");
    std::map<int, std::map<int, size_t>> h;
    for (const auto& [n, dsz] : a.dims) {
        std::set<int> ws;
        for (size_t i = 0; i < dsz; ++i)
            ws.insert(a.weight_of(n, i));
        if (n > 0)
            for (size_t i = 0; i < a.dim_at(n - 1); ++i)
                ws.insert(a.weight_of(n - 1, i));
        for (int w : ws) {
            auto select = [&](int deg) {
                std::vector<size_t> idx;
                for (size_t i = 0; i < a.dim_at(deg); ++i)
                    if (a.weight_of(deg, i) == w)
                        idx.push_back(i);
                return idx;
            };
            auto block = [&](const Matrix& m, const std::vector<size_t>& r,
                             const std::vector<size_t>& cidx) {
                Matrix out(r.size(), cidx.size());
                for (size_t i = 0; i < r.size(); ++i)
                    for (size_t j = 0; j < cidx.size(); ++j)
                        out(i, j) = m(r[i], cidx[j]);
                return out;
            };
            std::vector<size_t> here = select(n), up = select(n + 1);
            size_t ker = kernel(block(a.diff_at(n), up, here)).dim();
            size_t im = 0;
            if (n > 0) {
                std::vector<size_t> down = select(n - 1);
                im = image(block(a.diff_at(n - 1), here, down)).dim();
            }
            if (ker - im > 0)
                h[n][w] = ker - im;
        }
    }
    return h;
}

}  // namespace hodge
