#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "hodgekit/dga.hpp"
#include "hodgekit/hodge.hpp"
#include "hodgekit/spectral.hpp"
#include "hodgekit/splitting.hpp"
#include "hodgekit/thom_whitney.hpp"

namespace testutil {

using namespace hodge;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}

    int pick(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng);
    }

    Scalar rational(int mag = 4, int den = 3) {
        return Scalar(mpq_class(pick(-mag, mag), pick(1, den)));
    }

    Scalar gaussian(int mag = 4, int den = 3) {
        return Scalar(mpq_class(pick(-mag, mag), pick(1, den)),
                      mpq_class(pick(-mag, mag), pick(1, den)));
    }
};

inline Matrix random_matrix(Rng& r, size_t rows, size_t cols, bool real = false) {
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            m(i, j) = real ? r.rational() : r.gaussian();
    return m;
}

inline Matrix random_real_invertible(Rng& r, size_t n) {
    for (;;) {
        Matrix m = random_matrix(r, n, n, true);
        if (rref(m).rank == n)
            return m;
    }
}

/* Conjugation-symmetric bigrading on a random real frame: diagonal types get
   real columns, off-diagonal pairs (p,q) != (q,p) get u +- i w spans. */
inline BigradedSpace random_bigrading(Rng& r, size_t dim) {
    struct Slot {
        int p, q;
        size_t m;
    };
    std::vector<Slot> slots;
    size_t left = dim;
    while (left > 0) {
        int p = r.pick(-3, 3);
        if (left >= 2 && r.pick(0, 1) == 1) {
            int q = r.pick(-3, 3);
            if (q == p)
                q = p + 1;
            size_t m = static_cast<size_t>(r.pick(1, static_cast<int>(left / 2)));
            slots.push_back({p, q, m});
            left -= 2 * m;
        } else {
            size_t m = static_cast<size_t>(r.pick(1, static_cast<int>(left)));
            slots.push_back({p, p, m});
            left -= m;
        }
    }
    Matrix frame = random_real_invertible(r, dim);
    std::map<std::pair<int, int>, Subspace> pieces;
    auto add = [&](int p, int q, const std::vector<std::vector<Scalar>>& cols) {
        auto key = std::make_pair(p, q);
        auto it = pieces.find(key);
        if (it == pieces.end()) {
            pieces.emplace(key, Subspace::span_vec(dim, cols));
        } else {
            Subspace ext = Subspace::span_vec(dim, cols);
            it->second = sum(it->second, ext);
        }
    };
    size_t next = 0;
    for (const Slot& s : slots) {
        if (s.p == s.q) {
            std::vector<std::vector<Scalar>> cols;
            for (size_t k = 0; k < s.m; ++k)
                cols.push_back(frame.col_vec(next++));
            add(s.p, s.p, cols);
        } else {
            std::vector<std::vector<Scalar>> plus, minus;
            for (size_t k = 0; k < s.m; ++k) {
                std::vector<Scalar> u = frame.col_vec(next++);
                std::vector<Scalar> w = frame.col_vec(next++);
                std::vector<Scalar> a(dim), b(dim);
                for (size_t t = 0; t < dim; ++t) {
                    a[t] = u[t] + Scalar::i() * w[t];
                    b[t] = u[t] - Scalar::i() * w[t];
                }
                plus.push_back(a);
                minus.push_back(b);
            }
            add(s.p, s.q, plus);
            add(s.q, s.p, minus);
        }
    }
    return BigradedSpace(dim, pieces);
}

// Random ambient map of pure type (dp, dq) relative to g.
inline Matrix random_typed(Rng& r, const BigradedSpace& g, int dp, int dq) {
    size_t d = g.dim();
    Matrix out(d, d);
    for (const auto& [pq, src] : g.pieces()) {
        int tp = pq.first + dp, tq = pq.second + dq;
        if (!g.has_piece(tp, tq))
            continue;
        const Subspace& tgt = g.piece(tp, tq);
        Matrix block = random_matrix(r, tgt.dim(), src.dim());
        auto [lo, hi] = g.block_range(pq.first, pq.second);
        // inj(tgt) * block * (piece rows of the block-coordinate map)
        Matrix coords(src.dim(), d);
        for (size_t i = lo; i < hi; ++i)
            for (size_t j = 0; j < d; ++j)
                coords(i - lo, j) = g.block_basis_inv()(i, j);
        out += tgt.basis() * block * coords;
    }
    return out;
}

inline SplitHodge random_shs(Rng& r, size_t max_dim) {
    SplitHodge s;
    s.grading = random_bigrading(r, static_cast<size_t>(r.pick(1, static_cast<int>(max_dim))));
    Scalar half(mpq_class(1, 2));
    for (int a = 0; a <= 2; ++a)
        for (int b = a; b <= 2; ++b) {
            if (r.pick(0, 2) != 0)
                continue;
            Matrix m = random_typed(r, s.grading, -a - 1, -b - 1);
            if (a == b)
                m = (m + m.conj()) * half;
            if (m.is_zero())
                continue;
            s.beta[{a, b}] = m;
            if (a != b)
                s.beta[{b, a}] = m.conj();
        }
    return s;
}

// Complex perturbation with L W_m <= W_{m-1}: block-strictly-lower in the
// weight grading of the splitting frame.
inline Matrix random_weight_lowering(Rng& r, const BigradedSpace& g) {
    size_t d = g.dim();
    Matrix block(d, d);
    std::vector<int> weight_of(d);
    size_t at = 0;
    for (const auto& [pq, sub] : g.pieces())
        for (size_t k = 0; k < sub.dim(); ++k)
            weight_of[at++] = pq.first + pq.second;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (weight_of[i] < weight_of[j] && r.pick(0, 1) == 0)
                block(i, j) = r.gaussian(3, 2);
    return g.block_basis() * block * g.block_basis_inv();
}

inline FilteredSpace apply_filtration(const Matrix& f, const FilteredSpace& filt) {
    std::map<int, Subspace> steps;
    for (const auto& [n, sub] : filt.steps())
        steps.emplace(n, apply(f, sub));
    return FilteredSpace(filt.ambient(), filt.direction(), steps);
}

/* Random bounded filtered complex: differentials built top-down through
   kernels so d^2 = 0 holds by construction; the filtration is built by
   saturating random steps under d. */
inline FilteredComplex random_filtered_complex(Rng& r, size_t max_total) {
    int nlo = 0, nhi = r.pick(1, 3);
    FilteredComplex c;
    size_t total = 0;
    for (int n = nlo; n <= nhi; ++n) {
        size_t cap = max_total - total;
        size_t d = cap == 0 ? 0 : static_cast<size_t>(
                                      r.pick(0, static_cast<int>(std::min<size_t>(cap, 5))));
        if (n == nlo && d == 0)
            d = 1;
        c.dims[n] = d;
        total += d;
    }
    for (int n = nhi - 1; n >= nlo; --n) {
        size_t dn = c.dims[n], dn1 = c.dims[n + 1];
        if (dn == 0 || dn1 == 0)
            continue;
        Matrix onto(dn1, dn);
        if (n == nhi - 1) {
            onto = random_matrix(r, dn1, dn, true);
        } else {
            Matrix above = c.diff.count(n + 1) ? c.diff[n + 1]
                                               : Matrix(c.dims[n + 2], dn1);
            Matrix k = kernel_basis(above);
            onto = k * random_matrix(r, k.cols(), dn, true);
        }
        if (!onto.is_zero())
            c.diff[n] = onto;
    }
    int shi = r.pick(1, 3);
    std::map<int, std::map<int, Subspace>> j;
    for (int n = nlo; n <= nhi; ++n) {
        j[n][-1] = Subspace::zero(c.dims[n]);
        j[n][shi] = Subspace::full(c.dims[n]);
    }
    for (int s = 0; s < shi; ++s)
        for (int n = nlo; n <= nhi; ++n) {
            Subspace step = s == 0 ? Subspace::zero(c.dims[n]) : j[n][s - 1];
            size_t extra = static_cast<size_t>(r.pick(0, 2));
            if (extra > 0)
                step = sum(step, Subspace::span(c.dims[n],
                                                random_matrix(r, c.dims[n], extra, true)));
            if (n > nlo)
                step = sum(step, apply(c.diff_at(n - 1), j[n - 1][s]));
            j[n][s] = step;
        }
    for (int n = nlo; n <= nhi; ++n)
        c.filt[n] = FilteredSpace(c.dims[n], Direction::Increasing, j[n]);
    return c;
}

/* Connected DGA with all positive products zero: a unit line plus a complex
   in degrees 1..3.  Algebra maps out of these are unit-preserving chain maps,
   which makes cosimplicial data easy to randomize. */
inline Dga random_linear_dga(Rng& r, size_t max_piece) {
    Dga a;
    a.dims[0] = 1;
    for (int n = 1; n <= 3; ++n)
        a.dims[n] = static_cast<size_t>(r.pick(0, static_cast<int>(max_piece)));
    for (int n = 2; n >= 1; --n) {
        size_t dn = a.dims[n], dn1 = a.dims[n + 1];
        if (dn == 0 || dn1 == 0)
            continue;
        Matrix m(dn1, dn);
        if (n == 2 || !a.diff.count(n + 1)) {
            m = random_matrix(r, dn1, dn, true);
        } else {
            Matrix k = kernel_basis(a.diff[n + 1]);
            m = k * random_matrix(r, k.cols(), dn, true);
        }
        if (!m.is_zero())
            a.diff[n] = m;
    }
    return a;
}

// Chain map C -> D of degree 0 as d h + h d for a random degree -1 map h.
inline std::map<int, Matrix> random_null_homotopic(Rng& r, const Dga& src, const Dga& dst) {
    std::map<int, Matrix> h;  // h[n]: src^n -> dst^{n-1}
    for (int n = 2; n <= 3; ++n)
        if (src.dim_at(n) > 0 && dst.dim_at(n - 1) > 0)
            h[n] = random_matrix(r, dst.dim_at(n - 1), src.dim_at(n), true);
    std::map<int, Matrix> tau;
    for (int n = 1; n <= 3; ++n) {
        Matrix hn = h.count(n) ? h[n] : Matrix(dst.dim_at(n - 1), src.dim_at(n));
        Matrix hn1 = h.count(n + 1) ? h[n + 1] : Matrix(dst.dim_at(n), src.dim_at(n + 1));
        Matrix t = dst.diff_at(n - 1) * hn + hn1 * src.diff_at(n);
        if (!t.is_zero())
            tau[n] = t;
    }
    return tau;
}

/* Two-level cosimplicial object: level 1 = level 0 (+) extra complex, the
   retraction is the projection, the two cofaces are the inclusion twisted by
   null-homotopic chain maps into the extra part. */
inline CosimplicialDga random_two_level(Rng& r) {
    Dga a0 = random_linear_dga(r, 2);
    Dga extra = random_linear_dga(r, 2);
    Dga a1;
    a1.dims[0] = 1;
    for (int n = 1; n <= 3; ++n)
        a1.dims[n] = a0.dim_at(n) + extra.dim_at(n);
    auto block_diag = [&](int n) {
        Matrix m(a1.dim_at(n + 1), a1.dim_at(n));
        Matrix d0 = a0.diff_at(n), de = extra.diff_at(n);
        for (size_t i = 0; i < d0.rows(); ++i)
            for (size_t j = 0; j < d0.cols(); ++j)
                m(i, j) = d0(i, j);
        for (size_t i = 0; i < de.rows(); ++i)
            for (size_t j = 0; j < de.cols(); ++j)
                m(d0.rows() + i, d0.cols() + j) = de(i, j);
        return m;
    };
    for (int n = 1; n <= 2; ++n) {
        Matrix m = block_diag(n);
        if (!m.is_zero())
            a1.diff[n] = m;
    }
    CosimplicialDga c;
    c.levels = {a0, a1};
    auto include = [&](const std::map<int, Matrix>& tau) {
        std::map<int, Matrix> blocks;
        blocks[0] = Matrix::identity(1);
        for (int n = 1; n <= 3; ++n) {
            if (a0.dim_at(n) == 0 && extra.dim_at(n) == 0)
                continue;
            Matrix m(a1.dim_at(n), a0.dim_at(n));
            for (size_t j = 0; j < a0.dim_at(n); ++j)
                m(j, j) = Scalar(1);
            auto it = tau.find(n);
            if (it != tau.end())
                for (size_t i = 0; i < extra.dim_at(n); ++i)
                    for (size_t j = 0; j < a0.dim_at(n); ++j)
                        m(a0.dim_at(n) + i, j) = it->second(i, j);
            if (m.is_zero())
                continue;
            blocks[n] = m;
        }
        return blocks;
    };
    c.coface[{1, 0}] = include({});
    c.coface[{1, 1}] = include(random_null_homotopic(r, a0, extra));
    std::map<int, Matrix> sigma;
    sigma[0] = Matrix::identity(1);
    for (int n = 1; n <= 3; ++n) {
        if (a0.dim_at(n) == 0)
            continue;
        Matrix m(a0.dim_at(n), a1.dim_at(n));
        for (size_t j = 0; j < a0.dim_at(n); ++j)
            m(j, j) = Scalar(1);
        sigma[n] = m;
    }
    c.codeg[{0, 0}] = sigma;
    return c;
}

/* Brute-force comparison complex for a two-level input: the normalized total
   complex A0^m (+) N^{m-1}, N = ker sigma_0, D(a, x) = (da, (de0 - de1)a - dx). */
inline std::map<int, size_t> normalized_total_cohomology(const CosimplicialDga& c,
                                                         int top_degree) {
    const Dga& a0 = c.levels[0];
    const Dga& a1 = c.levels[1];
    int top1 = a1.top();
    std::map<int, Subspace> nker;  // N^n in A1^n
    for (int n = 0; n <= top1; ++n)
        nker[n] = kernel(c.codeg_at(0, 0, n));
    auto dim_t = [&](int m) {
        size_t d = a0.dim_at(m);
        if (m >= 1 && nker.count(m - 1))
            d += nker[m - 1].dim();
        return d;
    };
    std::map<int, Matrix> dd;  // D: T^m -> T^{m+1}
    for (int m = 0; m <= top_degree; ++m) {
        Matrix m1(dim_t(m + 1), dim_t(m));
        Matrix da = a0.diff_at(m);
        for (size_t i = 0; i < da.rows(); ++i)
            for (size_t j = 0; j < da.cols(); ++j)
                m1(i, j) = da(i, j);
        Matrix dif = c.coface_at(1, 0, m) - c.coface_at(1, 1, m);
        if (nker.count(m)) {
            const Subspace& nm = nker[m];
            for (size_t k = 0; k < a0.dim_at(m); ++k) {
                std::vector<Scalar> img = dif * Matrix::identity(a0.dim_at(m)).col_vec(k);
                auto coords = nm.coordinates(img);
                for (size_t i = 0; i < nm.dim(); ++i)
                    m1(a0.dim_at(m + 1) + i, k) = (*coords)[i];
            }
        }
        if (m >= 1 && nker.count(m - 1) && nker.count(m)) {
            Matrix dn = restrict_map(a1.diff_at(m - 1), nker[m - 1], nker[m]);
            for (size_t i = 0; i < dn.rows(); ++i)
                for (size_t j = 0; j < dn.cols(); ++j)
                    m1(a0.dim_at(m + 1) + i, a0.dim_at(m) + j) = -dn(i, j);
        }
        dd[m] = m1;
    }
    std::map<int, size_t> h;
    for (int m = 0; m <= top_degree; ++m) {
        Matrix below = m == 0 ? Matrix(dim_t(0), 0) : dd[m - 1];
        h[m] = dim_t(m) - rref(dd[m]).rank - rref(below).rank;
    }
    return h;
}

}  // namespace testutil
