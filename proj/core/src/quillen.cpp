#include "hodgekit/quillen.hpp"

#include <algorithm>
#include <set>

#include "hodgekit/error.hpp"
#include "hodgekit/subspace.hpp"

namespace hodge {

namespace {

void add_term(TensorPoly& p, const Word& w, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = p.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

// Derivation extension: d(g1...gl) = sum_t +-(g1...g_{t-1}) d(g_t) (g_{t+1}...gl),
// Koszul sign from the chain degrees of the skipped prefix.
TensorPoly derive_word(const Word& w, const std::vector<TensorPoly>& gen_image,
                       const std::vector<int>& gen_degrees) {
    TensorPoly out;
    int prefix = 0;
    for (size_t t = 0; t < w.size(); ++t) {
        for (const auto& [u, c] : gen_image[w[t]]) {
            Word nw(w.begin(), w.begin() + t);
            nw.insert(nw.end(), u.begin(), u.end());
            nw.insert(nw.end(), w.begin() + t + 1, w.end());
            add_term(out, nw, prefix % 2 != 0 ? -c : c);
        }
        prefix += gen_degrees[w[t]];
    }
    return out;
}

struct Block {
    std::vector<size_t> idx;          // basis indices, ascending
    std::map<size_t, size_t> pos;     // basis index -> row position
};

Block block_of(const LiePresentation& p, int degree, size_t len_cap,
               const int* weight = nullptr) {
    Block b;
    const auto& basis = p.lie.basis();
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].degree != degree || basis[i].length > len_cap)
            continue;
        if (weight != nullptr) {
            int w = 0;
            for (size_t g : basis[i].word)
                w += p.gen_weights[g];
            if (basis[i].square)
                w *= 2;
            if (w != *weight)
                continue;
        }
        b.pos.emplace(i, b.idx.size());
        b.idx.push_back(i);
    }
    return b;
}

Matrix boundary_matrix(const LiePresentation& p, const Block& rows, const Block& cols) {
    Matrix m(rows.idx.size(), cols.idx.size());
    for (size_t j = 0; j < cols.idx.size(); ++j) {
        auto it = p.diff.find(cols.idx[j]);
        if (it == p.diff.end())
            continue;
        for (const auto& [r, c] : it->second) {
            auto rp = rows.pos.find(r);
            if (rp != rows.pos.end())
                m(rp->second, j) = c;
        }
    }
    return m;
}

size_t homology_dim(const LiePresentation& p, int degree, size_t len_cap,
                    const int* weight = nullptr) {
    Block here = block_of(p, degree, len_cap, weight);
    Block below = block_of(p, degree - 1, len_cap, weight);
    Block above = block_of(p, degree + 1, len_cap, weight);
    size_t out = rref(boundary_matrix(p, below, here)).rank;
    size_t in = rref(boundary_matrix(p, here, above)).rank;
    return here.idx.size() - out - in;
}

}  // namespace

LiePresentation quillen_G(const Dga& a, size_t bracket_cap) {
    DgaCheck check = validate_dga(a);
    require(check.ok, ErrorKind::Reject, check.failure);
    require(bracket_cap >= 3, ErrorKind::Instability,
            "bracket cap below 3 cannot certify that the differential squares to zero");

    LiePresentation p;
    p.cap = bracket_cap;
    // gen_index[n][i] = generator number of the dual of the i-th basis vector of A^n.
    std::map<int, std::vector<size_t>> gen_index;
    for (int n = 1; n <= a.top(); ++n) {
        std::vector<size_t>& row = gen_index[n];
        for (size_t i = 0; i < a.dim_at(n); ++i) {
            row.push_back(p.gen_degrees.size());
            p.gen_degrees.push_back(n - 1);
            p.gen_source.emplace_back(n, i);
            if (a.weighted())
                p.gen_weights.push_back(a.weight_of(n, i));
        }
    }

    int max_deg = 0;
    for (int d : p.gen_degrees)
        max_deg = std::max(max_deg, d);
    p.lie = FreeLie(p.gen_degrees, bracket_cap,
                    max_deg * static_cast<int>(bracket_cap) + 1);

    // Generator images: dual of d (no sign) plus dual of the product with the
    // sign (-1)^p on the (p, q) component, halved because [x, y] double-counts.
    Scalar half(mpq_class(1, 2));
    std::vector<TensorPoly> gen_image(p.gen_degrees.size());
    for (size_t g = 0; g < p.gen_degrees.size(); ++g) {
        auto [n, i] = p.gen_source[g];
        TensorPoly img;
        if (n >= 2 && a.dim_at(n - 1) > 0) {
            const Matrix& d = a.diff_at(n - 1);
            for (size_t j = 0; j < a.dim_at(n - 1); ++j)
                add_term(img, Word{gen_index.at(n - 1)[j]}, d(i, j));
        }
        for (int q = 1; q < n; ++q) {
            int pp = n - q;
            if (a.dim_at(pp) == 0 || a.dim_at(q) == 0)
                continue;
            Matrix mult = a.product_at(pp, q);
            Scalar scale = pp % 2 != 0 ? -half : half;
            for (size_t j = 0; j < a.dim_at(pp); ++j)
                for (size_t k = 0; k < a.dim_at(q); ++k) {
                    Scalar c = mult(i, j * a.dim_at(q) + k) * scale;
                    if (c.is_zero())
                        continue;
                    TensorPoly br = p.lie.bracket(FreeLie::generator(gen_index.at(pp)[j]),
                                                  FreeLie::generator(gen_index.at(q)[k]));
                    for (const auto& [w, e] : br)
                        add_term(img, w, c * e);
                }
        }
        gen_image[g] = img;
    }

    const auto& basis = p.lie.basis();
    for (size_t idx = 0; idx < basis.size(); ++idx) {
        TensorPoly db;
        for (const auto& [w, c] : p.lie.expansion(idx))
            for (const auto& [u, e] : derive_word(w, gen_image, p.gen_degrees))
                add_term(db, u, c * e);
        std::map<size_t, Scalar> col = p.lie.express(db, true);
        if (!col.empty())
            p.diff.emplace(idx, std::move(col));
    }

    // Square-zero certificate.  For elements short enough that neither d-step
    // truncates, the composite of the stored columns is the honest d^2.
    for (size_t idx = 0; idx < basis.size(); ++idx) {
        if (basis[idx].length + 2 > bracket_cap)
            continue;
        std::map<size_t, Scalar> acc;
        auto it = p.diff.find(idx);
        if (it == p.diff.end())
            continue;
        for (const auto& [r, c] : it->second) {
            auto jt = p.diff.find(r);
            if (jt == p.diff.end())
                continue;
            for (const auto& [r2, c2] : jt->second)
                acc[r2] += c * c2;
        }
        for (const auto& [r2, c2] : acc)
            require(c2.is_zero(), ErrorKind::Internal,
                    "Lie differential does not square to zero");
    }
    return p;
}

PiReport pi_n(const Dga& a, int n, size_t bracket_cap) {
    require(n >= 1, ErrorKind::Shape, "homotopy degree must be at least 1");
    LiePresentation p = quillen_G(a, bracket_cap);
    int m = n - 1;

    PiReport rep;
    rep.n = n;
    for (size_t c = bracket_cap - 2; c <= bracket_cap; ++c)
        rep.cap_ranks.emplace_back(c, homology_dim(p, m, c));
    rep.rank = rep.cap_ranks.back().second;
    rep.stable = true;
    for (const auto& [c, r] : rep.cap_ranks)
        rep.stable = rep.stable && r == rep.rank;

    if (a.weighted()) {
        std::set<int> weights;
        for (size_t i = 0; i < p.lie.basis().size(); ++i)
            if (p.lie.basis()[i].degree == m) {
                int w = 0;
                for (size_t g : p.lie.basis()[i].word)
                    w += p.gen_weights[g];
                weights.insert(p.lie.basis()[i].square ? 2 * w : w);
            }
        size_t total = 0;
        for (int w : weights) {
            size_t r = homology_dim(p, m, bracket_cap, &w);
            if (r > 0)
                rep.weight_ranks.emplace(w, r);
            total += r;
        }
        require(total == rep.rank, ErrorKind::Internal,
                "weight blocks do not add up to the homology rank");
    }

    std::map<int, size_t> hdims = dga_cohomology_dims(a);
    auto hit = hdims.find(n);
    rep.hn_dual_dim = hit == hdims.end() ? 0 : hit->second;

    // Homology as a subquotient, for the maps out of it.
    Block here = block_of(p, m, bracket_cap);
    Block below = block_of(p, m - 1, bracket_cap);
    Block above = block_of(p, m + 1, bracket_cap);
    Subspace cycles = kernel(boundary_matrix(p, below, here));
    Subspace bounds = image(boundary_matrix(p, here, above));
    Quotient hom = quotient(cycles, bounds);
    require(hom.dim == rep.rank, ErrorKind::Internal, "homology rank mismatch");

    if (rep.rank > 0) {
        // Abelianization: generators only, differential restricted to the
        // length-preserving part.
        auto gens_block = [&](int deg) { return block_of(p, deg, 1); };
        Block gh = gens_block(m), gb = gens_block(m - 1), ga = gens_block(m + 1);
        Subspace zab = kernel(boundary_matrix(p, gb, gh));
        Quotient hab = quotient(zab, image(boundary_matrix(p, gh, ga)));
        Matrix pick(gh.idx.size(), here.idx.size());
        for (size_t r = 0; r < gh.idx.size(); ++r)
            pick(r, here.pos.at(gh.idx[r])) = Scalar(1L);
        Matrix to_ab = pick * hom.section;
        require(zab.contains(image(to_ab)), ErrorKind::Internal,
                "abelianized representative is not a cycle");
        rep.hurewicz_rank = rref(hab.projection * to_ab).rank;
    }

    // Brackets of classes, landing in degree 2m homology at the same cap.
    Block sq = block_of(p, 2 * m, bracket_cap);
    if (rep.rank > 0 && !sq.idx.empty()) {
        Block sq_below = block_of(p, 2 * m - 1, bracket_cap);
        Block sq_above = block_of(p, 2 * m + 1, bracket_cap);
        Subspace zsq = kernel(boundary_matrix(p, sq_below, sq));
        Quotient hsq = quotient(zsq, image(boundary_matrix(p, sq, sq_above)));
        std::vector<TensorPoly> reps;
        for (size_t s = 0; s < hom.dim; ++s) {
            TensorPoly poly;
            for (size_t r = 0; r < here.idx.size(); ++r) {
                Scalar c = hom.section(r, s);
                if (c.is_zero())
                    continue;
                for (const auto& [w, e] : p.lie.expansion(here.idx[r]))
                    add_term(poly, w, c * e);
            }
            reps.push_back(poly);
        }
        Matrix classes(hsq.dim, hom.dim * hom.dim);
        for (size_t s = 0; s < hom.dim; ++s)
            for (size_t t = 0; t < hom.dim; ++t) {
                std::map<size_t, Scalar> col =
                    p.lie.express(p.lie.bracket(reps[s], reps[t]), true);
                std::vector<Scalar> v(sq.idx.size(), Scalar());
                for (const auto& [r, c] : col) {
                    require(sq.pos.count(r) != 0, ErrorKind::Internal,
                            "bracket of classes left its degree block");
                    v[sq.pos.at(r)] = c;
                }
                require(zsq.contains(v), ErrorKind::Internal,
                        "bracket of cycles is not a cycle");
                Matrix cls = hsq.projection * Matrix::from_cols(sq.idx.size(), {v});
                for (size_t r = 0; r < hsq.dim; ++r)
                    classes(r, s * hom.dim + t) = cls(r, 0);
            }
        rep.self_bracket_rank = rref(classes).rank;
    }
    rep.self_bracket_trivial = rep.self_bracket_rank == 0;
    return rep;
}

}  // namespace hodge
