#include "hodgekit/thom_whitney.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "hodgekit/error.hpp"
#include "hodgekit/subspace.hpp"

namespace hodge {

namespace {

/* Monomial t^e dt_S in the form algebra of a simplex with coordinates
   t_1..t_n (t_0 eliminated by 1 - sum).  e is the exponent vector, mask the
   dt set; all monomials in one level context carry e.size() == n. */
struct Mono {
    std::vector<int> e;
    unsigned mask = 0;
    auto operator<=>(const Mono&) const = default;
};

using Form = std::map<Mono, Scalar>;

int form_degree(const Mono& m) { return std::popcount(m.mask); }

int poly_degree(const Mono& m) {
    int s = std::popcount(m.mask);
    for (int x : m.e)
        s += x;
    return s;
}

void fadd(Form& f, const Mono& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = f.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            f.erase(it);
    }
}

// Parity of #{(s, t) in S x T : s > t} -- the Koszul sign of sorting dt_S dt_T.
bool cross_odd(unsigned s, unsigned t) {
    bool odd = false;
    while (t != 0) {
        int b = std::countr_zero(t);
        if (std::popcount(s >> (b + 1)) % 2 != 0)
            odd = !odd;
        t &= t - 1;
    }
    return odd;
}

Form fwedge(const Form& x, const Form& y) {
    Form out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            if ((mx.mask & my.mask) != 0)
                continue;
            Mono m;
            m.mask = mx.mask | my.mask;
            m.e = mx.e;
            for (size_t v = 0; v < m.e.size(); ++v)
                m.e[v] += my.e[v];
            Scalar c = cx * cy;
            fadd(out, m, cross_odd(mx.mask, my.mask) ? -c : c);
        }
    return out;
}

Form fdiff(const Form& f) {
    Form out;
    for (const auto& [m, c] : f)
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0 || ((m.mask >> v) & 1u) != 0)
                continue;
            Mono t = m;
            t.e[v] -= 1;
            t.mask |= 1u << v;
            Scalar coef = c * Scalar(static_cast<long>(m.e[v]));
            bool neg = std::popcount(m.mask & ((1u << v) - 1u)) % 2 != 0;
            fadd(out, t, neg ? -coef : coef);
        }
    return out;
}

Form f_const(size_t nvars, const Scalar& c) {
    Form f;
    Mono m;
    m.e.assign(nvars, 0);
    fadd(f, m, c);
    return f;
}

Form f_var(size_t nvars, size_t v) {
    Form f;
    Mono m;
    m.e.assign(nvars, 0);
    m.e[v] = 1;
    fadd(f, m, Scalar(1L));
    return f;
}

struct GenImages {
    std::vector<Form> t;   // image of t_k, k = 1.. (0-based storage)
    std::vector<Form> dt;  // d of the above
};

// Pullback along the i-th coface: Omega(Delta^{n+1}) -> Omega(Delta^n).
GenImages face_images(size_t n, size_t i) {
    GenImages g;
    for (size_t k = 1; k <= n + 1; ++k) {
        Form img;
        if (i == 0) {
            if (k == 1) {
                img = f_const(n, Scalar(1L));
                for (size_t v = 0; v < n; ++v)
                    fadd(img, [&] {
                        Mono m;
                        m.e.assign(n, 0);
                        m.e[v] = 1;
                        return m;
                    }(), Scalar(-1L));
            } else {
                img = f_var(n, k - 2);
            }
        } else if (k < i) {
            img = f_var(n, k - 1);
        } else if (k > i) {
            img = f_var(n, k - 2);
        }  // k == i: zero
        g.dt.push_back(fdiff(img));
        g.t.push_back(std::move(img));
    }
    return g;
}

// Pullback along the j-th codegeneracy: Omega(Delta^{n-1}) -> Omega(Delta^n).
GenImages degen_images(size_t n, size_t j) {
    GenImages g;
    for (size_t k = 1; k + 1 <= n; ++k) {
        Form img;
        if (k < j) {
            img = f_var(n, k - 1);
        } else if (k == j) {
            img = f_var(n, j - 1);
            fadd(img, [&] {
                Mono m;
                m.e.assign(n, 0);
                m.e[j] = 1;
                return m;
            }(), Scalar(1L));
        } else {
            img = f_var(n, k);
        }
        g.dt.push_back(fdiff(img));
        g.t.push_back(std::move(img));
    }
    return g;
}

Form substitute(const Mono& m, const Scalar& c, const GenImages& g, size_t nt) {
    Form acc = f_const(nt, c);
    for (size_t v = 0; v < m.e.size(); ++v)
        for (int r = 0; r < m.e[v]; ++r)
            acc = fwedge(acc, g.t[v]);
    for (size_t v = 0; v < m.e.size(); ++v)
        if (((m.mask >> v) & 1u) != 0)
            acc = fwedge(acc, g.dt[v]);
    return acc;
}

std::vector<Mono> monos_of(size_t nvars, int form_deg, size_t poly_cap) {
    std::vector<Mono> out;
    if (form_deg < 0 || static_cast<size_t>(form_deg) > poly_cap)
        return out;
    int budget = static_cast<int>(poly_cap) - form_deg;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        if (std::popcount(mask) != form_deg)
            continue;
        std::vector<int> cur(nvars, 0);
        auto rec = [&](auto&& self, size_t v, int left) -> void {
            if (v == nvars) {
                Mono m;
                m.e = cur;
                m.mask = mask;
                out.push_back(std::move(m));
                return;
            }
            for (int x = 0; x <= left; ++x) {
                cur[v] = x;
                self(self, v + 1, left - x);
            }
            cur[v] = 0;
        };
        rec(rec, 0, budget);
    }
    std::sort(out.begin(), out.end());
    return out;
}

using Coord = std::tuple<size_t, size_t, Mono>;  // (level, basis index, monomial)

struct Coords {
    std::vector<Coord> entries;
    std::map<Coord, size_t> pos;
    size_t size() const { return entries.size(); }
    void push(size_t n, size_t a, const Mono& m) {
        pos.emplace(Coord{n, a, m}, entries.size());
        entries.emplace_back(n, a, m);
    }
};

// Level 0 comes first, so a space of constant tuples is the graph of the
// identity over the level-0 block and its echelon basis is that block.
Coords coords_for(const CosimplicialDga& c, size_t level_cap, int m, size_t poly_cap) {
    Coords cd;
    for (size_t n = 0; n <= level_cap; ++n) {
        const Dga& a = c.levels[n];
        for (int j = 0; j <= std::min<int>(static_cast<int>(n), m); ++j) {
            int da = m - j;
            if (da < 0 || a.dim_at(da) == 0)
                continue;
            std::vector<Mono> ms = monos_of(n, j, poly_cap);
            for (size_t i = 0; i < a.dim_at(da); ++i)
                for (const Mono& mu : ms)
                    cd.push(n, i, mu);
        }
    }
    return cd;
}

Subspace compatible_space(const CosimplicialDga& c, size_t level_cap, int m,
                          size_t poly_cap, const Coords& cd) {
    std::vector<std::map<size_t, Scalar>> rows;

    auto row_block = [&](const Dga& target, size_t omega_vars)
        -> std::map<std::pair<size_t, Mono>, size_t> {
        std::map<std::pair<size_t, Mono>, size_t> rp;
        for (int j = 0; j <= std::min<int>(static_cast<int>(omega_vars), m); ++j) {
            int da = m - j;
            if (da < 0 || target.dim_at(da) == 0)
                continue;
            std::vector<Mono> ms = monos_of(omega_vars, j, poly_cap);
            for (size_t a = 0; a < target.dim_at(da); ++a)
                for (const Mono& mu : ms) {
                    rp.emplace(std::make_pair(a, mu), rows.size());
                    rows.emplace_back();
                }
        }
        return rp;
    };

    // Face conditions: (coface_i x 1) x_n = (1 x face_i^*) x_{n+1}.
    for (size_t n = 0; n + 1 <= level_cap; ++n)
        for (size_t i = 0; i <= n + 1; ++i) {
            auto rp = row_block(c.levels[n + 1], n);
            GenImages g = face_images(n, i);
            std::map<int, Matrix> fa;
            for (size_t col = 0; col < cd.size(); ++col) {
                const auto& [lev, a, mu] = cd.entries[col];
                if (lev == n) {
                    int da = m - form_degree(mu);
                    auto it = fa.find(da);
                    if (it == fa.end())
                        it = fa.emplace(da, c.coface_at(n + 1, i, da)).first;
                    for (size_t r = 0; r < it->second.rows(); ++r) {
                        const Scalar& v = it->second(r, a);
                        if (!v.is_zero())
                            rows[rp.at({r, mu})][col] += v;
                    }
                } else if (lev == n + 1) {
                    for (const auto& [nu, cv] : substitute(mu, Scalar(1L), g, n))
                        rows[rp.at({a, nu})][col] -= cv;
                }
            }
        }

    // Degeneracy conditions: (codeg_j x 1) x_n = (1 x degen_j^*) x_{n-1}.
    for (size_t n = 1; n <= level_cap; ++n)
        for (size_t j = 0; j + 1 <= n; ++j) {
            auto rp = row_block(c.levels[n - 1], n);
            GenImages g = degen_images(n, j);
            std::map<int, Matrix> sg;
            for (size_t col = 0; col < cd.size(); ++col) {
                const auto& [lev, a, mu] = cd.entries[col];
                if (lev == n) {
                    int da = m - form_degree(mu);
                    auto it = sg.find(da);
                    if (it == sg.end())
                        it = sg.emplace(da, c.codeg_at(n - 1, j, da)).first;
                    for (size_t r = 0; r < it->second.rows(); ++r) {
                        const Scalar& v = it->second(r, a);
                        if (!v.is_zero())
                            rows[rp.at({r, mu})][col] += v;
                    }
                } else if (lev == n - 1) {
                    for (const auto& [nu, cv] : substitute(mu, Scalar(1L), g, n))
                        rows[rp.at({a, nu})][col] -= cv;
                }
            }
        }

    Matrix sys(rows.size(), cd.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, v] : rows[r])
            sys(r, col) = v;
    return kernel(sys);
}

}  // namespace

Matrix CosimplicialDga::coface_at(size_t n, size_t i, int degree) const {
    require(n >= 1 && n <= top_level() && i <= n, ErrorKind::Shape, "coface index");
    Matrix zero(levels[n].dim_at(degree), levels[n - 1].dim_at(degree));
    auto it = coface.find({n, i});
    if (it == coface.end())
        return zero;
    auto jt = it->second.find(degree);
    return jt == it->second.end() ? zero : jt->second;
}

Matrix CosimplicialDga::codeg_at(size_t n, size_t j, int degree) const {
    require(n + 1 <= top_level() && j <= n, ErrorKind::Shape, "codegeneracy index");
    Matrix zero(levels[n].dim_at(degree), levels[n + 1].dim_at(degree));
    auto it = codeg.find({n, j});
    if (it == codeg.end())
        return zero;
    auto jt = it->second.find(degree);
    return jt == it->second.end() ? zero : jt->second;
}

CosimplicialDga constant_cosimplicial(const Dga& b, size_t levels) {
    CosimplicialDga c;
    std::map<int, Matrix> id;
    for (int d = 0; d <= b.top(); ++d)
        if (b.dim_at(d) > 0)
            id.emplace(d, Matrix::identity(b.dim_at(d)));
    for (size_t n = 0; n <= levels; ++n)
        c.levels.push_back(b);
    for (size_t n = 1; n <= levels; ++n)
        for (size_t i = 0; i <= n; ++i)
            c.coface.emplace(std::make_pair(n, i), id);
    for (size_t n = 0; n + 1 <= levels; ++n)
        for (size_t j = 0; j <= n; ++j)
            c.codeg.emplace(std::make_pair(n, j), id);
    return c;
}

CosimplicialCheck validate_cosimplicial(const CosimplicialDga& c) {
    CosimplicialCheck out;
    auto bad = [&](const std::string& msg) {
        out.ok = false;
        out.failure = msg;
        return out;
    };
    if (c.levels.empty())
        return bad("cosimplicial object has no levels");
    for (size_t n = 0; n < c.levels.size(); ++n) {
        DgaCheck lc = validate_dga(c.levels[n]);
        if (!lc.ok)
            return bad("level " + std::to_string(n) + ": " + lc.failure);
    }
    size_t top = c.top_level();

    auto check_map = [&](const Dga& s, const Dga& t, auto&& at,
                         const std::string& name) -> std::string {
        int hi = std::max(s.top(), t.top());
        if (s.dim_at(0) == 1 && t.dim_at(0) == 1 && at(0)(0, 0) != Scalar(1L))
            return name + " does not preserve the unit";
        for (int d = 0; d < hi; ++d)
            if (at(d + 1) * s.diff_at(d) != t.diff_at(d) * at(d))
                return name + " does not commute with d in degree " + std::to_string(d);
        for (int p = 0; p <= hi; ++p)
            for (int q = 0; p + q <= hi; ++q) {
                if (s.dim_at(p) == 0 || s.dim_at(q) == 0)
                    continue;
                if (at(p + q) * s.product_at(p, q) != t.product_at(p, q) * kron(at(p), at(q)))
                    return name + " is not multiplicative at (" + std::to_string(p) + "," +
                           std::to_string(q) + ")";
            }
        return "";
    };

    for (size_t n = 1; n <= top; ++n)
        for (size_t i = 0; i <= n; ++i) {
            std::string msg = check_map(
                c.levels[n - 1], c.levels[n],
                [&](int d) { return c.coface_at(n, i, d); },
                "coface " + std::to_string(i) + " into level " + std::to_string(n));
            if (!msg.empty())
                return bad(msg);
        }
    for (size_t n = 0; n + 1 <= top; ++n)
        for (size_t j = 0; j <= n; ++j) {
            std::string msg = check_map(
                c.levels[n + 1], c.levels[n],
                [&](int d) { return c.codeg_at(n, j, d); },
                "codegeneracy " + std::to_string(j) + " onto level " + std::to_string(n));
            if (!msg.empty())
                return bad(msg);
        }

    auto max_top = [&](size_t n1, size_t n2) {
        return std::max(c.levels[n1].top(), c.levels[n2].top());
    };
    for (size_t n = 2; n <= top; ++n)
        for (size_t j = 1; j <= n; ++j)
            for (size_t i = 0; i < j; ++i)
                for (int d = 0; d <= max_top(n - 2, n); ++d)
                    if (c.coface_at(n, j, d) * c.coface_at(n - 1, i, d) !=
                        c.coface_at(n, i, d) * c.coface_at(n - 1, j - 1, d))
                        return bad("coface identity fails at level " + std::to_string(n) +
                                   " (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                   "), degree " + std::to_string(d));
    for (size_t n = 0; n + 2 <= top; ++n)
        for (size_t j = 0; j <= n; ++j)
            for (size_t i = 0; i <= j; ++i)
                for (int d = 0; d <= max_top(n + 2, n); ++d)
                    if (c.codeg_at(n, j, d) * c.codeg_at(n + 1, i, d) !=
                        c.codeg_at(n, i, d) * c.codeg_at(n + 1, j + 1, d))
                        return bad("codegeneracy identity fails at level " +
                                   std::to_string(n) + " (i=" + std::to_string(i) +
                                   ", j=" + std::to_string(j) + "), degree " +
                                   std::to_string(d));
    for (size_t n = 0; n + 1 <= top; ++n)
        for (size_t j = 0; j <= n; ++j)
            for (size_t i = 0; i <= n + 1; ++i)
                for (int d = 0; d <= max_top(n, n + 1); ++d) {
                    Matrix lhs = c.codeg_at(n, j, d) * c.coface_at(n + 1, i, d);
                    Matrix rhs = Matrix::identity(c.levels[n].dim_at(d));
                    if (i < j)
                        rhs = c.coface_at(n, i, d) * c.codeg_at(n - 1, j - 1, d);
                    else if (i > j + 1)
                        rhs = c.coface_at(n, i - 1, d) * c.codeg_at(n - 1, j, d);
                    if (lhs != rhs)
                        return bad("mixed identity fails at level " + std::to_string(n) +
                                   " (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                   "), degree " + std::to_string(d));
                }
    return out;
}

ThomWhitneyResult thom_whitney(const CosimplicialDga& c, int top_degree, size_t poly_cap) {
    require(!c.levels.empty(), ErrorKind::Shape, "cosimplicial object has no levels");
    require(top_degree >= 0, ErrorKind::Shape, "degree cap must be nonnegative");
    require(poly_cap >= 1, ErrorKind::Shape, "polynomial cap must be at least 1");
    CosimplicialCheck check = validate_cosimplicial(c);
    require(check.ok, ErrorKind::Reject, check.failure);
    size_t level_cap = c.top_level();

    std::vector<Coords> cd;
    std::vector<Subspace> th;
    for (int m = 0; m <= top_degree; ++m) {
        cd.push_back(coords_for(c, level_cap, m, poly_cap));
        th.push_back(compatible_space(c, level_cap, m, poly_cap, cd.back()));
    }

    bool stable = true;
    for (int m = 0; m <= top_degree && stable; ++m) {
        Coords low = coords_for(c, level_cap, m, poly_cap - 1);
        stable = compatible_space(c, level_cap, m, poly_cap - 1, low).dim() ==
                 th[m].dim();
    }
    if (level_cap >= 1)
        for (int m = 0; m <= top_degree && stable; ++m) {
            Coords low = coords_for(c, level_cap - 1, m, poly_cap);
            stable = compatible_space(c, level_cap - 1, m, poly_cap, low).dim() ==
                     th[m].dim();
        }

    Dga out;
    for (int m = 0; m <= top_degree; ++m)
        out.dims[m] = th[m].dim();

    for (int m = 0; m < top_degree; ++m) {
        if (th[m].dim() == 0)
            continue;
        Matrix dmat(cd[m + 1].size(), cd[m].size());
        std::map<std::pair<size_t, int>, Matrix> dc;
        for (size_t col = 0; col < cd[m].size(); ++col) {
            const auto& [n, a, mu] = cd[m].entries[col];
            int da = m - form_degree(mu);
            auto key = std::make_pair(n, da);
            auto it = dc.find(key);
            if (it == dc.end())
                it = dc.emplace(key, c.levels[n].diff_at(da)).first;
            for (size_t r = 0; r < it->second.rows(); ++r) {
                const Scalar& v = it->second(r, a);
                if (!v.is_zero())
                    dmat(cd[m + 1].pos.at({n, r, mu}), col) += v;
            }
            Form one;
            fadd(one, mu, Scalar(1L));
            for (const auto& [nu, cv] : fdiff(one))
                dmat(cd[m + 1].pos.at({n, a, nu}), col) += da % 2 != 0 ? -cv : cv;
        }
        require(th[m + 1].contains(apply(dmat, th[m])), ErrorKind::Internal,
                "totalization differential left the computed space");
        Matrix d_out = restrict_map(dmat, th[m], th[m + 1]);
        if (!d_out.is_zero())
            out.diff.emplace(m, std::move(d_out));
    }

    std::map<std::tuple<size_t, int, int>, Matrix> pc;
    for (int p = 1; p <= top_degree; ++p)
        for (int q = 1; p + q <= top_degree; ++q) {
            size_t dp = th[p].dim(), dq = th[q].dim(), dt = th[p + q].dim();
            if (dp == 0 || dq == 0)
                continue;
            Matrix mult_out(dt, dp * dq);
            const Matrix& bp = th[p].basis();
            const Matrix& bq = th[q].basis();
            for (size_t u = 0; u < dp; ++u)
                for (size_t v = 0; v < dq; ++v) {
                    std::map<Coord, Scalar> acc;
                    for (size_t r1 = 0; r1 < cd[p].size(); ++r1) {
                        if (bp(r1, u).is_zero())
                            continue;
                        const auto& [n1, a1, mu1] = cd[p].entries[r1];
                        int da1 = p - form_degree(mu1);
                        for (size_t r2 = 0; r2 < cd[q].size(); ++r2) {
                            if (bq(r2, v).is_zero())
                                continue;
                            const auto& [n2, a2, mu2] = cd[q].entries[r2];
                            if (n1 != n2)
                                continue;
                            int da2 = q - form_degree(mu2);
                            auto key = std::make_tuple(n1, da1, da2);
                            auto it = pc.find(key);
                            if (it == pc.end())
                                it = pc.emplace(key, c.levels[n1].product_at(da1, da2))
                                         .first;
                            if (it->second.rows() == 0)
                                continue;
                            Form w1, w2;
                            fadd(w1, mu1, Scalar(1L));
                            fadd(w2, mu2, Scalar(1L));
                            Form w = fwedge(w1, w2);
                            if (w.empty())
                                continue;
                            Scalar base = bp(r1, u) * bq(r2, v);
                            if (form_degree(mu1) * da2 % 2 != 0)
                                base = -base;
                            size_t ddq = c.levels[n1].dim_at(da2);
                            for (size_t r3 = 0; r3 < it->second.rows(); ++r3) {
                                const Scalar& pm = it->second(r3, a1 * ddq + a2);
                                if (pm.is_zero())
                                    continue;
                                for (const auto& [mw, cw] : w) {
                                    Scalar term = base * pm * cw;
                                    if (term.is_zero())
                                        continue;
                                    Coord tgt{n1, r3, mw};
                                    auto [ai, fresh] = acc.try_emplace(tgt, term);
                                    if (!fresh) {
                                        ai->second += term;
                                        if (ai->second.is_zero())
                                            acc.erase(ai);
                                    }
                                }
                            }
                        }
                    }
                    std::vector<Scalar> vec(cd[p + q].size(), Scalar());
                    for (const auto& [tgt, cval] : acc) {
                        auto it = cd[p + q].pos.find(tgt);
                        if (it == cd[p + q].pos.end()) {
                            require(static_cast<size_t>(poly_degree(std::get<2>(tgt))) >
                                        poly_cap,
                                    ErrorKind::Internal, "product missed a coordinate");
                            fail(ErrorKind::Instability,
                                 "product exceeds the polynomial cap; rerun with a "
                                 "larger cap");
                        }
                        vec[it->second] = cval;
                    }
                    auto coords = th[p + q].coordinates(vec);
                    require(coords.has_value(), ErrorKind::Internal,
                            "product left the computed space");
                    for (size_t r = 0; r < dt; ++r)
                        mult_out(r, u * dq + v) = (*coords)[r];
                }
            if (!mult_out.is_zero())
                out.products.emplace(std::make_pair(p, q), std::move(mult_out));
        }

    DgaCheck oc = validate_dga(out);
    require(oc.ok, ErrorKind::Internal, "totalization broke the algebra laws: " + oc.failure);
    return {std::move(out), stable};
}

}  // namespace hodge
