#include "hodgekit/splitting.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "hodgekit/error.hpp"

namespace hodge {

namespace {

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Matrix negated(Matrix m) {
    m *= Scalar(-1L);
    return m;
}

Matrix col_range(const Matrix& m, size_t b, size_t e) {
    Matrix out(m.rows(), e - b);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = b; j < e; ++j)
            out(i, j - b) = m(i, j);
    return out;
}

struct Slot {
    std::pair<int, int> pq;
    size_t begin, end;
};

std::vector<Slot> slots_of(const BigradedSpace& g) {
    std::vector<Slot> v;
    for (const auto& [pq, sub] : g.pieces()) {
        auto r = g.block_range(pq.first, pq.second);
        v.push_back({pq, r.first, r.second});
    }
    return v;
}

bool block_nonzero(const Matrix& m, const Slot& r, const Slot& c) {
    for (size_t i = r.begin; i < r.end; ++i)
        for (size_t j = c.begin; j < c.end; ++j)
            if (!m(i, j).is_zero())
                return true;
    return false;
}

/* Block permutation S with conj(block_basis) = block_basis * S.  Exact for a
   conj-symmetric grading: echelon bases are conj-canonical, so conjugating
   the (p,q) basis gives the (q,p) basis verbatim. */
Matrix swap_matrix(const BigradedSpace& g) {
    size_t d = g.dim();
    Matrix s(d, d);
    for (const auto& [pq, sub] : g.pieces()) {
        auto c = g.block_range(pq.first, pq.second);
        auto r = g.block_range(pq.second, pq.first);
        require(c.second - c.first == r.second - r.first, ErrorKind::Internal,
                "swap_matrix: asymmetric grading");
        for (size_t t = 0; t < c.second - c.first; ++t)
            s(r.first + t, c.first + t) = Scalar(1L);
    }
    require(g.block_basis().conj() == g.block_basis() * s, ErrorKind::Internal,
            "swap_matrix: grading basis is not conj-canonical");
    return s;
}

}  // namespace

Scalar integral_pairing(int a, int b, Endpoints e) {
    require(a >= 0 && b >= 0, ErrorKind::Shape, "integral_pairing needs a, b >= 0");
    // Substituting x = i t reduces both integrals to i^{a+b+1} (-1)^a times a
    // positive rational: int over -1..1 resp. 0..1 of (1-t)^a (1+t)^b dt.
    mpz_class fa = factorial(a), fb = factorial(b);
    mpq_class mag;
    if (e == Endpoints::MinusIToI) {
        mpq_class base(fa * fb, factorial(a + b + 1));
        base.canonicalize();
        mpz_class two;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(a + b + 1));
        mag = base * mpq_class(two);
    } else {
        for (int k = 0; k <= b; ++k) {
            mpq_class term(fa * fb, factorial(b - k) * factorial(a + k + 1));
            term.canonicalize();
            mag += term;
        }
    }
    if (a % 2 != 0)
        mag = -mag;
    switch ((a + b + 1) % 4) {
        case 0: return Scalar(mag);
        case 1: return Scalar(mpq_class(0), mag);
        case 2: return Scalar(mpq_class(-mag));
        default: return Scalar(mpq_class(0), mpq_class(-mag));
    }
}

std::map<std::pair<int, int>, Matrix> typed_components(const BigradedSpace& g, const Matrix& m) {
    size_t d = g.dim();
    require(m.rows() == d && m.cols() == d, ErrorKind::Shape, "typed_components: shape mismatch");
    Matrix hat = g.block_basis_inv() * m * g.block_basis();
    auto slots = slots_of(g);
    std::map<std::pair<int, int>, Matrix> hat_parts;
    for (const Slot& r : slots)
        for (const Slot& c : slots) {
            if (!block_nonzero(hat, r, c))
                continue;
            auto shift = std::make_pair(r.pq.first - c.pq.first, r.pq.second - c.pq.second);
            auto [it, fresh] = hat_parts.try_emplace(shift, Matrix(d, d));
            (void)fresh;
            for (size_t i = r.begin; i < r.end; ++i)
                for (size_t j = c.begin; j < c.end; ++j)
                    it->second(i, j) = hat(i, j);
        }
    std::map<std::pair<int, int>, Matrix> out;
    Matrix total(d, d);
    for (const auto& [shift, part] : hat_parts) {
        Matrix amb = g.block_basis() * part * g.block_basis_inv();
        total += amb;
        out.emplace(shift, std::move(amb));
    }
    require(total == m, ErrorKind::Internal, "typed_components do not sum back to the input");
    return out;
}

SplitCheck validate_shs(const SplitHodge& s) {
    SplitCheck c;
    const BigradedSpace& g = s.grading;
    if (!g.is_conj_symmetric()) {
        c.ok = false;
        c.failure = "grading is not conj-symmetric";
        return c;
    }
    size_t d = g.dim();
    for (const auto& [ab, mat] : s.beta) {
        auto [a, b] = ab;
        std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (a < 0 || b < 0) {
            c.ok = false;
            c.failure = "component " + tag + " has a negative index";
            return c;
        }
        if (mat.rows() != d || mat.cols() != d) {
            c.ok = false;
            c.failure = "component " + tag + " has the wrong shape";
            return c;
        }
        for (const auto& [pq, sub] : g.pieces()) {
            Subspace img = apply(mat, sub);
            if (!g.piece(pq.first - a - 1, pq.second - b - 1).contains(img)) {
                c.ok = false;
                c.failure = "component " + tag + " is not typed on piece (" +
                            std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
                return c;
            }
        }
        auto it = s.beta.find(std::make_pair(b, a));
        Matrix partner = it == s.beta.end() ? Matrix(d, d) : it->second;
        if (mat.conj() != partner) {
            c.ok = false;
            c.failure = "reality fails: conj of component " + tag + " is not the swap";
            return c;
        }
    }
    return c;
}

SplitCheck validate_sts(const SplitTwistor& s) {
    SplitCheck c;
    const WeightGradedSpace& g = s.grading;
    size_t d = g.dim();
    for (const auto& [mn, mat] : s.beta) {
        auto [m, n] = mn;
        std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        if (m < 0 || n < 0) {
            c.ok = false;
            c.failure = "component " + tag + " has a negative index";
            return c;
        }
        if (mat.rows() != d || mat.cols() != d) {
            c.ok = false;
            c.failure = "component " + tag + " has the wrong shape";
            return c;
        }
        if (!mat.is_real()) {
            c.ok = false;
            c.failure = "component " + tag + " is not real";
            return c;
        }
        for (const auto& [w, sub] : g.pieces()) {
            Subspace img = apply(mat, sub);
            if (img.is_zero())
                continue;
            int tw = w - m - n - 2;
            if (!g.has_piece(tw) || !g.piece(tw).contains(img)) {
                c.ok = false;
                c.failure = "component " + tag + " does not lower weight " +
                            std::to_string(w) + " by exactly " + std::to_string(m + n + 2);
                return c;
            }
        }
    }
    return c;
}

SplitCheck validate_frep(const FRep& f) {
    SplitCheck c;
    const BigradedSpace& g = f.grading;
    size_t d = g.dim();
    if (!g.is_conj_symmetric()) {
        c.ok = false;
        c.failure = "grading is not conj-symmetric";
        return c;
    }
    if (f.d.rows() != d || f.d.cols() != d) {
        c.ok = false;
        c.failure = "d has the wrong shape";
        return c;
    }
    Matrix n = f.d - Matrix::identity(d);
    if (!is_nilpotent(n)) {
        c.ok = false;
        c.failure = "d is not unipotent";
        return c;
    }
    if (f.d.conj() * f.d != Matrix::identity(d)) {
        c.ok = false;
        c.failure = "conj(d) is not d^{-1}";
        return c;
    }
    for (const auto& [shift, part] : typed_components(g, n)) {
        (void)part;
        if (shift.first > -1 || shift.second > -1) {
            c.ok = false;
            c.failure = "defect has a component of type (" + std::to_string(shift.first) +
                        "," + std::to_string(shift.second) + ") outside the strict range";
            return c;
        }
    }
    return c;
}

Matrix beta_exponential(const SplitHodge& s, Endpoints e) {
    size_t d = s.grading.dim();
    Matrix x(d, d);
    for (const auto& [ab, mat] : s.beta)
        x += integral_pairing(ab.first, ab.second, e) * mat;
    return nilpotent_exp(x);
}

MixedHodge shs_to_mhs(const SplitHodge& s) {
    SplitCheck c = validate_shs(s);
    require(c.ok, ErrorKind::Reject, "shs_to_mhs: " + c.failure);
    MixedHodge m;
    m.dim = s.grading.dim();
    m.W = s.grading.weight_filtration();
    Matrix b0 = beta_exponential(s, Endpoints::ZeroToI);
    FilteredSpace fhat = s.grading.split_hodge_filtration();
    std::map<int, Subspace> steps;
    for (int p = fhat.lo(); p <= fhat.hi(); ++p)
        steps.emplace(p, apply(b0, fhat.at(p)));
    m.F = FilteredSpace(m.dim, Direction::Decreasing, std::move(steps));
    return m;
}

FRep shs_to_frep(const SplitHodge& s) {
    SplitCheck c = validate_shs(s);
    require(c.ok, ErrorKind::Reject, "shs_to_frep: " + c.failure);
    FRep f;
    f.grading = s.grading;
    f.d = beta_exponential(s, Endpoints::MinusIToI);
    require(f.d.conj() * f.d == Matrix::identity(f.grading.dim()), ErrorKind::Internal,
            "shs_to_frep: reality of d failed");
    return f;
}

SplitHodge frep_to_shs(const FRep& f) {
    SplitCheck c = validate_frep(f);
    require(c.ok, ErrorKind::Reject, "frep_to_shs: " + c.failure);
    Matrix delta = unipotent_log(f.d);
    SplitHodge s;
    s.grading = f.grading;
    for (const auto& [shift, mat] : typed_components(f.grading, delta)) {
        int a = -shift.first - 1, b = -shift.second - 1;
        s.beta.emplace(std::make_pair(a, b),
                       mat * integral_pairing(a, b, Endpoints::MinusIToI).inverse());
    }
    return s;
}

/* The inductive solve.  Work in the block coordinates of the canonical
   bigrading I of the input: unknowns are typed matrices gamma^{ab}, one
   complex entry per admissible block position, graded by the weight drop
   k = a+b+2.  With M = sum of the 0..i pairing against gamma, the two
   conditions are

     (ii)  T := exp(M) . D . conj(exp(-M)) vanishes off the swap blocks,
           where D is the conjugation defect of the bigrading basis, and
     (iii) D . conj(bhat^{ab}) . D^{-1} = bhat^{ba} for
           bhat^{ab} := exp(-M) gamma^{ab} exp(M).

   Condition (ii) makes exp(-M)(I^{pq}) a conj-symmetric bigrading and (iii)
   is the reality of the transported beta.  The drop-k parts of both are
   affine-linear in the stage-k unknowns once earlier stages are fixed, so
   each stage is one exact linear solve; the solution must exist and be
   unique.  The Hodge filtration needs no separate matching condition:
   sum_ab pairing * bhat^{ab} = M identically, so the exponential transport
   of the split filtration of exp(-M)(I) returns F on the nose. */
ShsFromMhs mhs_to_shs(const MixedHodge& m) {
    BigradedSpace big = deligne_bigrading(m);
    size_t d = m.dim;
    const Matrix& B = big.block_basis();
    const Matrix& Binv = big.block_basis_inv();
    Matrix D = Binv * B.conj();
    Matrix Dinv = inverse(D);
    auto slots = slots_of(big);

    for (const Slot& r : slots)
        for (const Slot& c : slots) {
            if (!block_nonzero(D, r, c))
                continue;
            bool swap = r.pq.first == c.pq.second && r.pq.second == c.pq.first;
            bool lower = r.pq.first < c.pq.second && r.pq.second < c.pq.first;
            require(swap || lower, ErrorKind::Internal,
                    "mhs_to_shs: conjugation defect is not triangular");
        }

    int span = slots.empty() ? 0 : big.whi() - big.wlo();

    // Admissible unknown blocks per stage.
    struct GammaBlock {
        std::pair<int, int> ab;
        size_t src, tgt;  // indices into slots
    };
    std::map<int, std::vector<GammaBlock>> stage_blocks;
    std::map<std::pair<int, int>, Matrix> gamma;  // block coordinates
    std::map<std::pair<int, int>, size_t> slot_of;
    for (size_t i = 0; i < slots.size(); ++i)
        slot_of[slots[i].pq] = i;
    for (int k = 2; k <= span; ++k)
        for (int a = 0; a + 2 <= k; ++a) {
            int b = k - 2 - a;
            for (size_t si = 0; si < slots.size(); ++si) {
                auto tgt = std::make_pair(slots[si].pq.first - a - 1, slots[si].pq.second - b - 1);
                auto it = slot_of.find(tgt);
                if (it == slot_of.end())
                    continue;
                stage_blocks[k].push_back({{a, b}, si, it->second});
                gamma.try_emplace(std::make_pair(a, b), Matrix(d, d));
            }
        }

    auto drop_of = [&](const Slot& r, const Slot& c) {
        return (c.pq.first + c.pq.second) - (r.pq.first + r.pq.second);
    };

    // Residual entries at weight drop k for the current gamma assignment.
    auto residual = [&](int k) {
        Matrix mtot(d, d);
        for (const auto& [ab, gm] : gamma)
            mtot += integral_pairing(ab.first, ab.second, Endpoints::ZeroToI) * gm;
        Matrix em = nilpotent_exp(mtot);
        Matrix eminv = nilpotent_exp(negated(mtot));
        Matrix t = em * D * eminv.conj();
        std::vector<Scalar> out;
        for (const Slot& r : slots)
            for (const Slot& c : slots) {
                if (r.pq.first == c.pq.second && r.pq.second == c.pq.first)
                    continue;
                if (drop_of(r, c) != k)
                    continue;
                for (size_t i = r.begin; i < r.end; ++i)
                    for (size_t j = c.begin; j < c.end; ++j)
                        out.push_back(t(i, j));
            }
        for (const auto& [ab, gm] : gamma) {
            if (ab.first + ab.second + 2 > k)
                continue;
            Matrix bh = eminv * gm * em;
            Matrix bh_swap = eminv * gamma.at(std::make_pair(ab.second, ab.first)) * em;
            Matrix rmat = D * bh.conj() * Dinv - bh_swap;
            for (const Slot& r : slots)
                for (const Slot& c : slots) {
                    if (drop_of(r, c) != k)
                        continue;
                    for (size_t i = r.begin; i < r.end; ++i)
                        for (size_t j = c.begin; j < c.end; ++j)
                            out.push_back(rmat(i, j));
                }
        }
        return out;
    };

    for (int k = 2; k <= span; ++k) {
        struct Unknown {
            std::pair<int, int> ab;
            size_t i, j;
            bool imag;
        };
        std::vector<Unknown> unknowns;
        auto sb = stage_blocks.find(k);
        if (sb != stage_blocks.end())
            for (const GammaBlock& gb : sb->second) {
                const Slot& src = slots[gb.src];
                const Slot& tgt = slots[gb.tgt];
                for (size_t i = tgt.begin; i < tgt.end; ++i)
                    for (size_t j = src.begin; j < src.end; ++j) {
                        unknowns.push_back({gb.ab, i, j, false});
                        unknowns.push_back({gb.ab, i, j, true});
                    }
            }
        std::vector<Scalar> r0 = residual(k);
        if (unknowns.empty()) {
            for (const Scalar& v : r0)
                require(v.is_zero(), ErrorKind::Internal,
                        "mhs_to_shs: unsolvable residual at drop " + std::to_string(k));
            continue;
        }
        Matrix lin(2 * r0.size(), unknowns.size());
        for (size_t u = 0; u < unknowns.size(); ++u) {
            const Unknown& un = unknowns[u];
            Matrix& gm = gamma.at(un.ab);
            gm(un.i, un.j) = un.imag ? Scalar::i() : Scalar(1L);
            std::vector<Scalar> rv = residual(k);
            gm(un.i, un.j) = Scalar();
            for (size_t t = 0; t < r0.size(); ++t) {
                Scalar diff = rv[t] - r0[t];
                lin(2 * t, u) = Scalar(diff.re());
                lin(2 * t + 1, u) = Scalar(diff.im());
            }
        }
        std::vector<Scalar> rhs(2 * r0.size());
        for (size_t t = 0; t < r0.size(); ++t) {
            rhs[2 * t] = Scalar(mpq_class(-r0[t].re()));
            rhs[2 * t + 1] = Scalar(mpq_class(-r0[t].im()));
        }
        auto sol = solve(lin, rhs);
        require(sol.has_value(), ErrorKind::Internal,
                "mhs_to_shs: inconsistent system at drop " + std::to_string(k));
        require(kernel_basis(lin).cols() == 0, ErrorKind::Internal,
                "mhs_to_shs: solution not unique at drop " + std::to_string(k));
        for (size_t u = 0; u < unknowns.size(); ++u) {
            const Unknown& un = unknowns[u];
            require((*sol)[u].is_real(), ErrorKind::Internal, "mhs_to_shs: non-real solve output");
            Matrix& gm = gamma.at(un.ab);
            Scalar cur = gm(un.i, un.j);
            gm(un.i, un.j) = un.imag ? Scalar(cur.re(), (*sol)[u].re())
                                     : Scalar((*sol)[u].re(), cur.im());
        }
    }

    // Full verification of both conditions, then assembly.
    Matrix mtot(d, d);
    for (const auto& [ab, gm] : gamma)
        mtot += integral_pairing(ab.first, ab.second, Endpoints::ZeroToI) * gm;
    Matrix em = nilpotent_exp(mtot);
    Matrix eminv = nilpotent_exp(negated(mtot));
    Matrix t = em * D * eminv.conj();
    for (const Slot& r : slots)
        for (const Slot& c : slots) {
            if (r.pq.first == c.pq.second && r.pq.second == c.pq.first)
                continue;
            require(!block_nonzero(t, r, c), ErrorKind::Internal,
                    "mhs_to_shs: residual conjugation defect survived");
        }
    for (const auto& [ab, gm] : gamma) {
        Matrix bh = eminv * gm * em;
        Matrix bh_swap = eminv * gamma.at(std::make_pair(ab.second, ab.first)) * em;
        require((D * bh.conj() * Dinv - bh_swap).is_zero(), ErrorKind::Internal,
                "mhs_to_shs: reality residual survived");
    }

    Matrix frame = B * eminv;  // columns: bases of the split pieces
    std::map<std::pair<int, int>, Subspace> pieces;
    for (const Slot& s : slots)
        pieces.emplace(s.pq, Subspace::span(d, col_range(frame, s.begin, s.end)));
    BigradedSpace grading(d, std::move(pieces));
    require(grading.is_conj_symmetric(), ErrorKind::Internal,
            "mhs_to_shs: split grading is not conj-symmetric");

    ShsFromMhs out;
    out.shs.grading = std::move(grading);
    for (const auto& [ab, gm] : gamma) {
        Matrix ambient = B * (eminv * gm * em) * Binv;
        if (!ambient.is_zero())
            out.shs.beta.emplace(ab, std::move(ambient));
    }
    SplitCheck sc = validate_shs(out.shs);
    require(sc.ok, ErrorKind::Internal, "mhs_to_shs: output rejected: " + sc.failure);
    MixedHodge back = shs_to_mhs(out.shs);
    require(filtrations_equal(back.W, m.W) && filtrations_equal(back.F, m.F),
            ErrorKind::Internal, "mhs_to_shs: certificate failed");
    out.phi = Matrix::identity(d);
    return out;
}

SplitHodge tensor_shs(const SplitHodge& a, const SplitHodge& b) {
    SplitCheck ca = validate_shs(a), cb = validate_shs(b);
    require(ca.ok, ErrorKind::Reject, "tensor_shs: " + ca.failure);
    require(cb.ok, ErrorKind::Reject, "tensor_shs: " + cb.failure);
    size_t da = a.grading.dim(), db = b.grading.dim();
    size_t d = da * db;
    std::map<std::pair<int, int>, Subspace> pieces;
    for (const auto& [pq1, s1] : a.grading.pieces())
        for (const auto& [pq2, s2] : b.grading.pieces()) {
            auto key = std::make_pair(pq1.first + pq2.first, pq1.second + pq2.second);
            Subspace t = tensor_pair(s1, s2);
            auto it = pieces.find(key);
            if (it == pieces.end())
                pieces.emplace(key, std::move(t));
            else
                it->second = sum(it->second, t);
        }
    SplitHodge out;
    out.grading = BigradedSpace(d, std::move(pieces));
    Matrix ia = Matrix::identity(da), ib = Matrix::identity(db);
    for (const auto& [ab, mat] : a.beta) {
        auto [it, fresh] = out.beta.try_emplace(ab, Matrix(d, d));
        (void)fresh;
        it->second += kron(mat, ib);
    }
    for (const auto& [ab, mat] : b.beta) {
        auto [it, fresh] = out.beta.try_emplace(ab, Matrix(d, d));
        (void)fresh;
        it->second += kron(ia, mat);
    }
    for (auto it = out.beta.begin(); it != out.beta.end();)
        it = it->second.is_zero() ? out.beta.erase(it) : std::next(it);
    return out;
}

SplitHodge dual_shs(const SplitHodge& a) {
    SplitCheck ca = validate_shs(a);
    require(ca.ok, ErrorKind::Reject, "dual_shs: " + ca.failure);
    size_t d = a.grading.dim();
    std::map<std::pair<int, int>, Subspace> pieces;
    for (const auto& [pq, sub] : a.grading.pieces()) {
        Subspace others = Subspace::zero(d);
        for (const auto& [rs, osub] : a.grading.pieces())
            if (rs != pq)
                others = sum(others, osub);
        pieces.emplace(std::make_pair(-pq.first, -pq.second), annihilator(others));
    }
    SplitHodge out;
    out.grading = BigradedSpace(d, std::move(pieces));
    for (const auto& [ab, mat] : a.beta)
        out.beta.emplace(ab, negated(mat.transpose()));
    return out;
}

SplitHodge direct_sum_shs(const SplitHodge& a, const SplitHodge& b) {
    size_t da = a.grading.dim(), db = b.grading.dim();
    size_t d = da + db;
    Matrix e1(d, da), e2(d, db);
    for (size_t i = 0; i < da; ++i)
        e1(i, i) = Scalar(1L);
    for (size_t i = 0; i < db; ++i)
        e2(da + i, i) = Scalar(1L);
    std::map<std::pair<int, int>, Subspace> pieces;
    for (const auto& [pq, sub] : a.grading.pieces())
        pieces.emplace(pq, Subspace::span(d, e1 * sub.basis()));
    for (const auto& [pq, sub] : b.grading.pieces()) {
        Subspace emb = Subspace::span(d, e2 * sub.basis());
        auto it = pieces.find(pq);
        if (it == pieces.end())
            pieces.emplace(pq, std::move(emb));
        else
            it->second = sum(it->second, emb);
    }
    SplitHodge out;
    out.grading = BigradedSpace(d, std::move(pieces));
    std::set<std::pair<int, int>> keys;
    for (const auto& [ab, mat] : a.beta)
        keys.insert(ab);
    for (const auto& [ab, mat] : b.beta)
        keys.insert(ab);
    for (const auto& ab : keys) {
        Matrix blk(d, d);
        auto ia = a.beta.find(ab);
        if (ia != a.beta.end())
            for (size_t i = 0; i < da; ++i)
                for (size_t j = 0; j < da; ++j)
                    blk(i, j) = ia->second(i, j);
        auto ib = b.beta.find(ab);
        if (ib != b.beta.end())
            for (size_t i = 0; i < db; ++i)
                for (size_t j = 0; j < db; ++j)
                    blk(da + i, da + j) = ib->second(i, j);
        out.beta.emplace(ab, std::move(blk));
    }
    return out;
}

SplitTwistor tensor_sts(const SplitTwistor& a, const SplitTwistor& b) {
    SplitCheck ca = validate_sts(a), cb = validate_sts(b);
    require(ca.ok, ErrorKind::Reject, "tensor_sts: " + ca.failure);
    require(cb.ok, ErrorKind::Reject, "tensor_sts: " + cb.failure);
    size_t da = a.grading.dim(), db = b.grading.dim();
    size_t d = da * db;
    std::map<int, Subspace> pieces;
    for (const auto& [w1, s1] : a.grading.pieces())
        for (const auto& [w2, s2] : b.grading.pieces()) {
            Subspace t = tensor_pair(s1, s2);
            auto it = pieces.find(w1 + w2);
            if (it == pieces.end())
                pieces.emplace(w1 + w2, std::move(t));
            else
                it->second = sum(it->second, t);
        }
    SplitTwistor out;
    out.grading = WeightGradedSpace(d, std::move(pieces));
    Matrix ia = Matrix::identity(da), ib = Matrix::identity(db);
    for (const auto& [mn, mat] : a.beta) {
        auto [it, fresh] = out.beta.try_emplace(mn, Matrix(d, d));
        (void)fresh;
        it->second += kron(mat, ib);
    }
    for (const auto& [mn, mat] : b.beta) {
        auto [it, fresh] = out.beta.try_emplace(mn, Matrix(d, d));
        (void)fresh;
        it->second += kron(ia, mat);
    }
    for (auto it = out.beta.begin(); it != out.beta.end();)
        it = it->second.is_zero() ? out.beta.erase(it) : std::next(it);
    return out;
}

SplitTwistor dual_sts(const SplitTwistor& a) {
    SplitCheck ca = validate_sts(a);
    require(ca.ok, ErrorKind::Reject, "dual_sts: " + ca.failure);
    size_t d = a.grading.dim();
    std::map<int, Subspace> pieces;
    for (const auto& [w, sub] : a.grading.pieces()) {
        Subspace others = Subspace::zero(d);
        for (const auto& [v, osub] : a.grading.pieces())
            if (v != w)
                others = sum(others, osub);
        pieces.emplace(-w, annihilator(others));
    }
    SplitTwistor out;
    out.grading = WeightGradedSpace(d, std::move(pieces));
    for (const auto& [mn, mat] : a.beta)
        out.beta.emplace(mn, negated(mat.transpose()));
    return out;
}

SplitTwistor direct_sum_sts(const SplitTwistor& a, const SplitTwistor& b) {
    size_t da = a.grading.dim(), db = b.grading.dim();
    size_t d = da + db;
    Matrix e1(d, da), e2(d, db);
    for (size_t i = 0; i < da; ++i)
        e1(i, i) = Scalar(1L);
    for (size_t i = 0; i < db; ++i)
        e2(da + i, i) = Scalar(1L);
    std::map<int, Subspace> pieces;
    for (const auto& [w, sub] : a.grading.pieces())
        pieces.emplace(w, Subspace::span(d, e1 * sub.basis()));
    for (const auto& [w, sub] : b.grading.pieces()) {
        Subspace emb = Subspace::span(d, e2 * sub.basis());
        auto it = pieces.find(w);
        if (it == pieces.end())
            pieces.emplace(w, std::move(emb));
        else
            it->second = sum(it->second, emb);
    }
    SplitTwistor out;
    out.grading = WeightGradedSpace(d, std::move(pieces));
    std::set<std::pair<int, int>> keys;
    for (const auto& [mn, mat] : a.beta)
        keys.insert(mn);
    for (const auto& [mn, mat] : b.beta)
        keys.insert(mn);
    for (const auto& mn : keys) {
        Matrix blk(d, d);
        auto ia = a.beta.find(mn);
        if (ia != a.beta.end())
            for (size_t i = 0; i < da; ++i)
                for (size_t j = 0; j < da; ++j)
                    blk(i, j) = ia->second(i, j);
        auto ib = b.beta.find(mn);
        if (ib != b.beta.end())
            for (size_t i = 0; i < db; ++i)
                for (size_t j = 0; j < db; ++j)
                    blk(da + i, da + j) = ib->second(i, j);
        out.beta.emplace(mn, std::move(blk));
    }
    return out;
}

namespace {

// Shared scaffolding for the hom/ext computation.  Parameters are rational
// coordinates; maps and families are realized in ambient coordinates from
// them, and the boundary f -> beta f - f alpha is assembled column by column.
struct HomExtWork {
    std::vector<Matrix> hom_dirs;                                  // ambient basis of graded homs
    std::vector<std::map<std::pair<int, int>, Matrix>> fam_dirs;   // basis of the target
    // coordinates of an ambient family in the fam_dirs basis
    std::function<std::vector<Scalar>(const std::map<std::pair<int, int>, Matrix>&)> coords;
};

HomExt finish_hom_ext(const HomExtWork& w,
                      const std::map<std::pair<int, int>, Matrix>& alpha,
                      const std::map<std::pair<int, int>, Matrix>& beta) {
    size_t ns = w.hom_dirs.size(), nt = w.fam_dirs.size();
    std::set<std::pair<int, int>> keys;
    for (const auto& [ab, mat] : alpha)
        keys.insert(ab);
    for (const auto& [ab, mat] : beta)
        keys.insert(ab);
    auto boundary = [&](const Matrix& f) {
        std::map<std::pair<int, int>, Matrix> fam;
        for (const auto& ab : keys) {
            auto ib = beta.find(ab);
            auto ia = alpha.find(ab);
            Matrix m = ib != beta.end() ? ib->second * f : Matrix(f.rows(), f.cols());
            if (ia != alpha.end())
                m -= f * ia->second;
            if (!m.is_zero())
                fam.emplace(ab, std::move(m));
        }
        return fam;
    };
    Matrix del(nt, ns);
    for (size_t u = 0; u < ns; ++u) {
        std::vector<Scalar> col = w.coords(boundary(w.hom_dirs[u]));
        require(col.size() == nt, ErrorKind::Internal, "hom_ext: coordinate size mismatch");
        for (size_t t = 0; t < nt; ++t)
            del(t, u) = col[t];
    }
    HomExt out;
    out.graded_hom_dim = ns;
    out.target_dim = nt;
    Matrix ker = kernel_basis(del);
    out.hom_dim = ker.cols();
    for (size_t c = 0; c < ker.cols(); ++c) {
        Matrix f(w.hom_dirs.empty() ? 0 : w.hom_dirs[0].rows(),
                 w.hom_dirs.empty() ? 0 : w.hom_dirs[0].cols());
        for (size_t u = 0; u < ns; ++u)
            if (!ker(u, c).is_zero())
                f += ker(u, c) * w.hom_dirs[u];
        out.hom_basis.push_back(std::move(f));
    }
    size_t rank = rref(del).rank;
    out.ext1_dim = nt - rank;
    require(out.graded_hom_dim - out.hom_dim == rank &&
                out.target_dim - out.ext1_dim == rank,
            ErrorKind::Internal, "hom_ext: four-term bookkeeping failed");
    Quotient q = quotient(image(del));
    require(q.dim == out.ext1_dim, ErrorKind::Internal, "hom_ext: cokernel dimension drift");
    for (size_t c = 0; c < q.dim; ++c) {
        std::map<std::pair<int, int>, Matrix> rep;
        for (size_t t = 0; t < nt; ++t) {
            const Scalar& coef = q.section(t, c);
            if (coef.is_zero())
                continue;
            for (const auto& [ab, mat] : w.fam_dirs[t]) {
                auto [it, fresh] = rep.try_emplace(
                    ab, Matrix(mat.rows(), mat.cols()));
                (void)fresh;
                it->second += coef * mat;
            }
        }
        out.ext1_basis.push_back(std::move(rep));
    }
    return out;
}

}  // namespace

HomExt hom_ext_shs(const SplitHodge& a, const SplitHodge& b) {
    SplitCheck ca = validate_shs(a), cb = validate_shs(b);
    require(ca.ok, ErrorKind::Reject, "hom_ext_shs: " + ca.failure);
    require(cb.ok, ErrorKind::Reject, "hom_ext_shs: " + cb.failure);
    const BigradedSpace& gu = a.grading;
    const BigradedSpace& gv = b.grading;
    size_t du = gu.dim(), dv = gv.dim();
    Matrix su = swap_matrix(gu), sv = swap_matrix(gv);
    const Matrix& bu = gu.block_basis();
    const Matrix& bv = gv.block_basis();
    const Matrix& buinv = gu.block_basis_inv();
    const Matrix& bvinv = gv.block_basis_inv();

    // Graded (typed (0,0), real) maps: representative blocks carry the free
    // parameters, reality fills in the swapped blocks.
    struct Param {
        bool diagonal;  // p == q block: real entry
        size_t i, j;
        bool imag;
    };
    std::vector<Param> params;
    for (const auto& [pq, usub] : gu.pieces()) {
        if (!gv.has_piece(pq.first, pq.second) || pq.first > pq.second)
            continue;
        auto ur = gu.block_range(pq.first, pq.second);
        auto vr = gv.block_range(pq.first, pq.second);
        bool diag = pq.first == pq.second;
        for (size_t i = vr.first; i < vr.second; ++i)
            for (size_t j = ur.first; j < ur.second; ++j) {
                params.push_back({diag, i, j, false});
                if (!diag)
                    params.push_back({diag, i, j, true});
            }
    }
    auto realize_hom = [&](const std::vector<Scalar>& vals) {
        Matrix xdiag(dv, du), xoff(dv, du);
        for (size_t t = 0; t < params.size(); ++t) {
            if (vals[t].is_zero())
                continue;
            Scalar v = params[t].imag ? vals[t] * Scalar::i() : vals[t];
            (params[t].diagonal ? xdiag : xoff)(params[t].i, params[t].j) += v;
        }
        Matrix fhat = xdiag + xoff + sv * xoff.conj() * su;
        return bv * fhat * buinv;
    };

    // Coefficient families: blocks per (a,b), reality pairs (a,b) with (b,a)
    // and, inside (a,a), the source blocks (p,q) with (q,p).
    struct TParam {
        std::pair<int, int> ab;
        bool real_entry;
        size_t i, j;
        bool imag;
    };
    auto uslots = slots_of(gu);
    auto vslots = slots_of(gv);
    std::vector<TParam> tparams;
    for (const Slot& us : uslots)
        for (const Slot& vs : vslots) {
            int aa = us.pq.first - vs.pq.first - 1;
            int bb = us.pq.second - vs.pq.second - 1;
            if (aa < 0 || bb < 0 || aa > bb)
                continue;
            bool self = aa == bb;
            if (self && us.pq.first > us.pq.second)
                continue;
            bool real_entry = self && us.pq.first == us.pq.second;
            for (size_t i = vs.begin; i < vs.end; ++i)
                for (size_t j = us.begin; j < us.end; ++j) {
                    tparams.push_back({{aa, bb}, real_entry, i, j, false});
                    if (!real_entry)
                        tparams.push_back({{aa, bb}, real_entry, i, j, true});
                }
        }

    HomExtWork w;
    for (size_t t = 0; t < params.size(); ++t) {
        std::vector<Scalar> unit(params.size());
        unit[t] = Scalar(1L);
        w.hom_dirs.push_back(realize_hom(unit));
    }
    auto realize_family = [&, tparams](const std::vector<Scalar>& vals) {
        std::map<std::pair<int, int>, std::pair<Matrix, Matrix>> hats;  // (diag, off) parts
        for (size_t t = 0; t < tparams.size(); ++t) {
            if (vals[t].is_zero())
                continue;
            const TParam& tp = tparams[t];
            auto [it, fresh] =
                hats.try_emplace(tp.ab, std::make_pair(Matrix(dv, du), Matrix(dv, du)));
            (void)fresh;
            Scalar v = tp.imag ? vals[t] * Scalar::i() : vals[t];
            (tp.real_entry ? it->second.first : it->second.second)(tp.i, tp.j) += v;
        }
        std::map<std::pair<int, int>, Matrix> out;
        for (const auto& [ab, parts] : hats) {
            if (ab.first == ab.second) {
                Matrix full = parts.first + parts.second + sv * parts.second.conj() * su;
                Matrix amb = bv * full * buinv;
                if (!amb.is_zero())
                    out[ab] = out.count(ab) ? out[ab] + amb : amb;
            } else {
                Matrix amb = bv * parts.second * buinv;
                Matrix swapped = bv * (sv * parts.second.conj() * su) * buinv;
                if (!amb.is_zero())
                    out[ab] = amb;
                auto ba = std::make_pair(ab.second, ab.first);
                if (!swapped.is_zero())
                    out[ba] = out.count(ba) ? out[ba] + swapped : swapped;
            }
        }
        return out;
    };
    for (size_t t = 0; t < tparams.size(); ++t) {
        std::vector<Scalar> unit(tparams.size());
        unit[t] = Scalar(1L);
        w.fam_dirs.push_back(realize_family(unit));
    }
    w.coords = [&, tparams](const std::map<std::pair<int, int>, Matrix>& fam) {
        std::map<std::pair<int, int>, Matrix> hats;
        for (const auto& [ab, mat] : fam)
            hats.emplace(ab, bvinv * mat * bu);
        std::vector<Scalar> out(tparams.size());
        for (size_t t = 0; t < tparams.size(); ++t) {
            const TParam& tp = tparams[t];
            auto it = hats.find(tp.ab);
            if (it == hats.end())
                continue;
            const Scalar& v = it->second(tp.i, tp.j);
            out[t] = tp.imag ? Scalar(v.im()) : Scalar(v.re());
        }
        return out;
    };
    return finish_hom_ext(w, a.beta, b.beta);
}

HomExt hom_ext_sts(const SplitTwistor& a, const SplitTwistor& b) {
    SplitCheck ca = validate_sts(a), cb = validate_sts(b);
    require(ca.ok, ErrorKind::Reject, "hom_ext_sts: " + ca.failure);
    require(cb.ok, ErrorKind::Reject, "hom_ext_sts: " + cb.failure);
    const WeightGradedSpace& gu = a.grading;
    const WeightGradedSpace& gv = b.grading;
    size_t du = gu.dim(), dv = gv.dim();
    const Matrix& bu = gu.block_basis();
    const Matrix& bv = gv.block_basis();
    const Matrix& buinv = gu.block_basis_inv();
    const Matrix& bvinv = gv.block_basis_inv();

    struct Entry {
        std::pair<int, int> mn;  // (-1,-1) marks the weight-0 hom block
        size_t i, j;
    };
    std::vector<Entry> hom_entries, fam_entries;
    for (const auto& [wt, usub] : gu.pieces()) {
        if (!gv.has_piece(wt))
            continue;
        auto ur = gu.block_range(wt);
        auto vr = gv.block_range(wt);
        for (size_t i = vr.first; i < vr.second; ++i)
            for (size_t j = ur.first; j < ur.second; ++j)
                hom_entries.push_back({{-1, -1}, i, j});
    }
    for (const auto& [wu, usub] : gu.pieces())
        for (const auto& [wv, vsub] : gv.pieces()) {
            int dropk = wu - wv - 2;
            if (dropk < 0)
                continue;
            auto ur = gu.block_range(wu);
            auto vr = gv.block_range(wv);
            for (int mm = 0; mm <= dropk; ++mm)
                for (size_t i = vr.first; i < vr.second; ++i)
                    for (size_t j = ur.first; j < ur.second; ++j)
                        fam_entries.push_back({{mm, dropk - mm}, i, j});
        }

    HomExtWork w;
    for (const Entry& en : hom_entries) {
        Matrix fhat(dv, du);
        fhat(en.i, en.j) = Scalar(1L);
        w.hom_dirs.push_back(bv * fhat * buinv);
    }
    for (const Entry& en : fam_entries) {
        Matrix fhat(dv, du);
        fhat(en.i, en.j) = Scalar(1L);
        std::map<std::pair<int, int>, Matrix> fam;
        fam.emplace(en.mn, bv * fhat * buinv);
        w.fam_dirs.push_back(std::move(fam));
    }
    w.coords = [&, fam_entries](const std::map<std::pair<int, int>, Matrix>& fam) {
        std::map<std::pair<int, int>, Matrix> hats;
        for (const auto& [mn, mat] : fam)
            hats.emplace(mn, bvinv * mat * bu);
        std::vector<Scalar> out(fam_entries.size());
        for (size_t t = 0; t < fam_entries.size(); ++t) {
            auto it = hats.find(fam_entries[t].mn);
            if (it != hats.end())
                out[t] = it->second(fam_entries[t].i, fam_entries[t].j);
        }
        return out;
    };
    return finish_hom_ext(w, a.beta, b.beta);
}

LeibnizCheck shs_algebra_check(const SplitHodge& s, const Matrix& product,
                               const std::vector<Scalar>& unit) {
    size_t d = s.grading.dim();
    require(product.rows() == d && product.cols() == d * d, ErrorKind::Shape,
            "shs_algebra_check: product must be dim x dim^2");
    require(unit.size() == d, ErrorKind::Shape, "shs_algebra_check: unit has the wrong length");
    LeibnizCheck c;
    Matrix id = Matrix::identity(d);
    for (const auto& [ab, mat] : s.beta) {
        Matrix lhs = mat * product;
        Matrix rhs = product * (kron(mat, id) + kron(id, mat));
        if (lhs != rhs) {
            c.ok = false;
            c.component = ab;
            for (size_t j = 0; j < d * d; ++j)
                for (size_t i = 0; i < d; ++i)
                    if (lhs(i, j) != rhs(i, j)) {
                        c.left = j / d;
                        c.right = j % d;
                        return c;
                    }
            return c;
        }
        std::vector<Scalar> bu = mat * unit;
        for (const Scalar& v : bu)
            if (!v.is_zero()) {
                c.ok = false;
                c.component = ab;
                c.unit_failure = true;
                return c;
            }
    }
    return c;
}

}  // namespace hodge
