#include "hodgekit/hodge.hpp"

#include <algorithm>
#include <string>

#include "hodgekit/error.hpp"

namespace hodge {

PureCheck validate_pure(size_t dim, const FilteredSpace& F, int n) {
    require(F.direction() == Direction::Decreasing, ErrorKind::Shape,
            "validate_pure expects a decreasing filtration");
    require(F.ambient() == dim, ErrorKind::Shape, "validate_pure ambient mismatch");
    PureCheck c;
    c.weight = n;

    // Outside the stored window the filtration is constant, so the "for every
    // p" condition is only decidable when F is bounded: full at the shallow
    // end, zero at the deep end.
    FiltrationCheck fc = filtration_checks(F);
    if (!fc.exhaustive) {
        c.witness_p = F.lo() - 1;
        return c;
    }
    if (!fc.hausdorff) {
        c.witness_p = F.hi() + 1;
        return c;
    }

    FilteredSpace Fbar = F.conj();
    int plo = std::min(F.lo(), n - F.hi());
    int phi = std::max(F.hi(), n - F.lo()) + 1;
    for (int p = plo; p <= phi; ++p) {
        const Subspace& a = F.at(p);
        const Subspace& b = Fbar.at(n + 1 - p);
        if (a.dim() + b.dim() != dim || !sum(a, b).is_full()) {
            c.witness_p = p;
            return c;
        }
    }
    c.ok = true;
    size_t total = 0;
    for (int p = plo; p <= phi; ++p) {
        size_t h = intersect(F.at(p), Fbar.at(n - p)).dim();
        if (h != 0) {
            c.hodge_numbers[std::make_pair(p, n - p)] = h;
            total += h;
        }
    }
    require(total == dim, ErrorKind::Internal, "pure structure with deficient (p,q) pieces");
    return c;
}

MhsReport validate_mhs(const MixedHodge& m) {
    MhsReport r;
    require(m.W.ambient() == m.dim && m.F.ambient() == m.dim, ErrorKind::Shape,
            "validate_mhs: ambient mismatch");
    require(m.W.direction() == Direction::Increasing, ErrorKind::Shape,
            "validate_mhs: W must be increasing");
    require(m.F.direction() == Direction::Decreasing, ErrorKind::Shape,
            "validate_mhs: F must be decreasing");

    r.w_real = m.W.is_real();
    if (!r.w_real) {
        r.failure = "weight filtration has non-real steps";
        r.failure_class = "not-real";
        return r;
    }
    FiltrationCheck wc = filtration_checks(m.W);
    FiltrationCheck fc = filtration_checks(m.F);
    r.w_exhaustive = wc.exhaustive;
    r.w_hausdorff = wc.hausdorff;
    r.f_exhaustive = fc.exhaustive;
    if (!wc.exhaustive || !fc.exhaustive) {
        r.failure = std::string(wc.exhaustive ? "F" : "W") + " is not exhaustive";
        r.failure_class = "not-exhaustive";
        return r;
    }
    if (!wc.hausdorff) {
        r.failure = "weight filtration not Hausdorff at index " +
                    std::to_string(*wc.hausdorff_witness);
        r.failure_class = "not-hausdorff";
        return r;
    }

    r.gr_dims = graded_dims(m.W);
    for (const auto& [n, g] : r.gr_dims) {
        Quotient q = quotient(m.W.at(n), m.W.at(n - 1));
        // Induced Hodge filtration on gr^W_n.  The projection matrix is only
        // meaningful on W_n, so intersect each step before pushing it down.
        std::map<int, Subspace> steps;
        for (int p = m.F.lo(); p <= m.F.hi(); ++p)
            steps.emplace(p, apply(q.projection, intersect(m.F.at(p), m.W.at(n))));
        FilteredSpace indF(g, Direction::Decreasing, std::move(steps));
        PureCheck pc = validate_pure(g, indF, n);
        r.weights.push_back(pc);
        if (!pc.ok && r.failure.empty()) {
            r.failure = "gr_W at weight " + std::to_string(n) +
                        " is not pure; witness p = " + std::to_string(*pc.witness_p);
            r.failure_class = "not-opposed";
        }
    }
    r.ok = r.failure.empty();
    return r;
}

MixedHodge tate_twist(const MixedHodge& m, int n) {
    MixedHodge t;
    t.dim = m.dim;
    t.W = m.W.shifted(2 * n);  // W_r of the twist is W_{r+2n}
    t.F = m.F.shifted(n);      // F^p of the twist is F^{p+n}
    return t;
}

MixedHodge tate_object(int n) {
    MixedHodge t;
    t.dim = 1;
    std::map<int, Subspace> w;
    w.emplace(-2 * n - 1, Subspace::zero(1));
    w.emplace(-2 * n, Subspace::full(1));
    t.W = FilteredSpace(1, Direction::Increasing, std::move(w));
    std::map<int, Subspace> f;
    f.emplace(-n, Subspace::full(1));
    f.emplace(-n + 1, Subspace::zero(1));
    t.F = FilteredSpace(1, Direction::Decreasing, std::move(f));
    return t;
}

MixedHodge tensor_mhs(const MixedHodge& a, const MixedHodge& b) {
    MixedHodge t;
    t.dim = a.dim * b.dim;
    t.W = tensor_filtration(a.W, b.W);
    t.F = tensor_filtration(a.F, b.F);
    return t;
}

MixedHodge dual_mhs(const MixedHodge& a) {
    MixedHodge t;
    t.dim = a.dim;
    t.W = dual_filtration(a.W);
    t.F = dual_filtration(a.F);
    return t;
}

MixedHodge hom_mhs(const MixedHodge& a, const MixedHodge& b) {
    return tensor_mhs(dual_mhs(a), b);
}

BigradedSpace::BigradedSpace(size_t dim, std::map<std::pair<int, int>, Subspace> pieces)
    : dim_(dim), pieces_(std::move(pieces)), zero_(Subspace::zero(dim)) {
    require(!pieces_.empty() || dim_ == 0, ErrorKind::Shape,
            "bigrading of a nonzero space needs at least one piece");
    size_t total = 0;
    Matrix cat(dim_, 0);
    for (const auto& [pq, sub] : pieces_) {
        require(sub.ambient() == dim_, ErrorKind::Shape, "bigrading piece ambient mismatch");
        require(sub.dim() > 0, ErrorKind::Shape, "bigrading stores only nonzero pieces");
        ranges_[pq] = {total, total + sub.dim()};
        total += sub.dim();
        cat = Matrix::hcat(cat, sub.basis());
    }
    require(total == dim_, ErrorKind::Invariant, "bigrading dimensions do not add up");
    require(image(cat).is_full(), ErrorKind::Invariant, "bigrading pieces are not independent");
    block_ = std::move(cat);
    block_inv_ = inverse(block_);
}

const Subspace& BigradedSpace::piece(int p, int q) const {
    auto it = pieces_.find(std::make_pair(p, q));
    return it == pieces_.end() ? zero_ : it->second;
}

bool BigradedSpace::is_conj_symmetric() const {
    for (const auto& [pq, sub] : pieces_) {
        auto it = pieces_.find(std::make_pair(pq.second, pq.first));
        if (it == pieces_.end() || it->second != sub.conj())
            return false;
    }
    return true;
}

int BigradedSpace::wlo() const {
    require(!pieces_.empty(), ErrorKind::Shape, "wlo() on empty bigrading");
    int w = pieces_.begin()->first.first + pieces_.begin()->first.second;
    for (const auto& [pq, sub] : pieces_)
        w = std::min(w, pq.first + pq.second);
    return w;
}

int BigradedSpace::whi() const {
    require(!pieces_.empty(), ErrorKind::Shape, "whi() on empty bigrading");
    int w = pieces_.begin()->first.first + pieces_.begin()->first.second;
    for (const auto& [pq, sub] : pieces_)
        w = std::max(w, pq.first + pq.second);
    return w;
}

Subspace BigradedSpace::weight_space(int m) const {
    Subspace acc = Subspace::zero(dim_);
    for (const auto& [pq, sub] : pieces_)
        if (pq.first + pq.second == m)
            acc = sum(acc, sub);
    return acc;
}

std::map<int, Subspace> BigradedSpace::weight_spaces_real() const {
    std::map<int, Subspace> out;
    if (pieces_.empty())
        return out;
    for (int m = wlo(); m <= whi(); ++m) {
        Subspace s = weight_space(m);
        if (s.dim() > 0)
            out.emplace(m, real_points(s));
    }
    return out;
}

FilteredSpace BigradedSpace::weight_filtration() const {
    std::map<int, Subspace> steps;
    if (pieces_.empty()) {
        steps.emplace(0, Subspace::full(dim_));
        return FilteredSpace(dim_, Direction::Increasing, std::move(steps));
    }
    std::map<int, Subspace> real = weight_spaces_real();
    Subspace acc = Subspace::zero(dim_);
    steps.emplace(wlo() - 1, acc);
    for (int m = wlo(); m <= whi(); ++m) {
        auto it = real.find(m);
        if (it != real.end())
            acc = sum(acc, it->second);
        steps.emplace(m, acc);
    }
    return FilteredSpace(dim_, Direction::Increasing, std::move(steps));
}

FilteredSpace BigradedSpace::split_hodge_filtration() const {
    if (pieces_.empty()) {
        std::map<int, Subspace> steps;
        steps.emplace(0, Subspace::full(dim_));
        return FilteredSpace(dim_, Direction::Decreasing, std::move(steps));
    }
    int plo = pieces_.begin()->first.first, phi = plo;
    for (const auto& [pq, sub] : pieces_) {
        plo = std::min(plo, pq.first);
        phi = std::max(phi, pq.first);
    }
    std::map<int, Subspace> steps;
    for (int p = plo; p <= phi + 1; ++p) {
        Subspace acc = Subspace::zero(dim_);
        for (const auto& [pq, sub] : pieces_)
            if (pq.first >= p)
                acc = sum(acc, sub);
        steps.emplace(p, std::move(acc));
    }
    return FilteredSpace(dim_, Direction::Decreasing, std::move(steps));
}

std::pair<size_t, size_t> BigradedSpace::block_range(int p, int q) const {
    auto it = ranges_.find(std::make_pair(p, q));
    require(it != ranges_.end(), ErrorKind::Shape, "block_range: piece absent");
    return it->second;
}

BigradedSpace tate_twist(const BigradedSpace& g, int n) {
    std::map<std::pair<int, int>, Subspace> pieces;
    for (const auto& [pq, sub] : g.pieces())
        pieces.emplace(std::make_pair(pq.first - n, pq.second - n), sub);
    return BigradedSpace(g.dim(), std::move(pieces));
}

WeightGradedSpace::WeightGradedSpace(size_t dim, std::map<int, Subspace> pieces)
    : dim_(dim), pieces_(std::move(pieces)) {
    require(!pieces_.empty() || dim_ == 0, ErrorKind::Shape,
            "weight grading of a nonzero space needs at least one piece");
    size_t total = 0;
    Matrix cat(dim_, 0);
    for (const auto& [m, sub] : pieces_) {
        require(sub.ambient() == dim_, ErrorKind::Shape, "weight piece ambient mismatch");
        require(sub.dim() > 0, ErrorKind::Shape, "weight grading stores only nonzero pieces");
        require(sub.is_real(), ErrorKind::Invariant, "weight piece must be real");
        ranges_[m] = {total, total + sub.dim()};
        total += sub.dim();
        cat = Matrix::hcat(cat, sub.basis());
    }
    require(total == dim_, ErrorKind::Invariant, "weight grading dimensions do not add up");
    require(image(cat).is_full(), ErrorKind::Invariant, "weight pieces are not independent");
    block_ = std::move(cat);
    block_inv_ = inverse(block_);
}

const Subspace& WeightGradedSpace::piece(int m) const {
    auto it = pieces_.find(m);
    require(it != pieces_.end(), ErrorKind::Shape, "weight piece absent");
    return it->second;
}

FilteredSpace WeightGradedSpace::weight_filtration() const {
    std::map<int, Subspace> steps;
    if (pieces_.empty()) {
        steps.emplace(0, Subspace::full(dim_));
        return FilteredSpace(dim_, Direction::Increasing, std::move(steps));
    }
    Subspace acc = Subspace::zero(dim_);
    steps.emplace(wlo() - 1, acc);
    for (int m = wlo(); m <= whi(); ++m) {
        auto it = pieces_.find(m);
        if (it != pieces_.end())
            acc = sum(acc, it->second);
        steps.emplace(m, acc);
    }
    return FilteredSpace(dim_, Direction::Increasing, std::move(steps));
}

std::pair<size_t, size_t> WeightGradedSpace::block_range(int m) const {
    auto it = ranges_.find(m);
    require(it != ranges_.end(), ErrorKind::Shape, "block_range: weight absent");
    return it->second;
}

WeightGradedSpace weight_graded(const BigradedSpace& g) {
    return WeightGradedSpace(g.dim(), g.weight_spaces_real());
}

MtsReport mts_report(const WeightGradedSpace& g) {
    MtsReport r;
    r.dim = g.dim();
    size_t total = 0;
    for (const auto& [m, sub] : g.pieces()) {
        r.rank[m] = sub.dim();
        total += sub.dim();
    }
    r.graded_total_ok = total == g.dim();
    return r;
}

BigradedSpace deligne_bigrading(const MixedHodge& m) {
    MhsReport rep = validate_mhs(m);
    require(rep.ok, ErrorKind::Reject,
            "deligne_bigrading: input is not a mixed structure: " + rep.failure);
    FilteredSpace Fbar = m.F.conj();
    std::map<std::pair<int, int>, Subspace> pieces;
    for (const PureCheck& pc : rep.weights) {
        for (const auto& [pq, h] : pc.hodge_numbers) {
            auto [p, q] = pq;
            int n = p + q;
            Subspace left = intersect(m.F.at(p), m.W.at(n));
            Subspace right = intersect(Fbar.at(q), m.W.at(n));
            for (int j = 2; n - j >= m.W.lo(); ++j)
                right = sum(right, intersect(Fbar.at(q - j + 1), m.W.at(n - j)));
            Subspace piece = intersect(left, right);
            require(piece.dim() == h, ErrorKind::Internal,
                    "deligne_bigrading: piece dimension disagrees with the pure ranks");
            pieces.emplace(pq, std::move(piece));
        }
    }
    BigradedSpace big(m.dim, std::move(pieces));

    // Postconditions: the two filtrations are the partial sums of the
    // splitting, and each piece projects onto the matching part of the pure
    // structure on its weight quotient.
    for (int p = m.F.lo(); p <= m.F.hi(); ++p) {
        Subspace acc = Subspace::zero(m.dim);
        for (const auto& [pq, sub] : big.pieces())
            if (pq.first >= p)
                acc = sum(acc, sub);
        require(acc == m.F.at(p), ErrorKind::Internal,
                "deligne_bigrading: F is not the first-index partial sum");
    }
    for (int n = m.W.lo(); n <= m.W.hi(); ++n) {
        Subspace acc = Subspace::zero(m.dim);
        for (const auto& [pq, sub] : big.pieces())
            if (pq.first + pq.second <= n)
                acc = sum(acc, sub);
        require(acc == m.W.at(n), ErrorKind::Internal,
                "deligne_bigrading: W is not the total-weight partial sum");
    }
    for (const auto& [n, g] : rep.gr_dims) {
        Quotient q = quotient(m.W.at(n), m.W.at(n - 1));
        for (const auto& [pq, sub] : big.pieces()) {
            if (pq.first + pq.second != n)
                continue;
            Subspace proj = apply(q.projection, sub);
            Subspace hodge_piece =
                intersect(apply(q.projection, intersect(m.F.at(pq.first), m.W.at(n))),
                          apply(q.projection, intersect(Fbar.at(pq.second), m.W.at(n))));
            require(proj.dim() == sub.dim() && proj == hodge_piece, ErrorKind::Internal,
                    "deligne_bigrading: piece does not project onto the pure part");
        }
    }
    return big;
}

}  // namespace hodge
