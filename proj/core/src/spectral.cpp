#include "hodgekit/spectral.hpp"

#include <algorithm>
#include <set>

#include "hodgekit/error.hpp"

namespace hodge {

size_t FilteredComplex::dim_at(int n) const {
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
}

Matrix FilteredComplex::diff_at(int n) const {
    auto it = diff.find(n);
    if (it != diff.end())
        return it->second;
    return Matrix(dim_at(n + 1), dim_at(n));
}

Subspace FilteredComplex::step(int n, int r) const {
    if (dim_at(n) == 0)
        return Subspace::zero(0);
    auto it = filt.find(n);
    require(it != filt.end(), ErrorKind::Shape,
            "complex degree " + std::to_string(n) + " has no filtration");
    return it->second.at(r);
}

int FilteredComplex::slo() const {
    bool seen = false;
    int v = 0;
    for (const auto& [n, f] : filt)
        if (dim_at(n) > 0) {
            v = seen ? std::min(v, f.lo()) : f.lo();
            seen = true;
        }
    return v;
}

int FilteredComplex::shi() const {
    bool seen = false;
    int v = 0;
    for (const auto& [n, f] : filt)
        if (dim_at(n) > 0) {
            v = seen ? std::max(v, f.hi()) : f.hi();
            seen = true;
        }
    return v;
}

FilteredSpace trivial_filtration(size_t ambient) {
    std::map<int, Subspace> steps;
    steps.emplace(-1, Subspace::zero(ambient));
    steps.emplace(0, Subspace::full(ambient));
    return FilteredSpace(ambient, Direction::Increasing, std::move(steps));
}

ComplexCheck validate_complex(const FilteredComplex& c) {
    ComplexCheck ck;
    if (c.dims.empty())
        return ck;
    int prev = c.nlo() - 1;
    for (const auto& [n, dsz] : c.dims) {
        (void)dsz;
        if (n != prev + 1) {
            ck.ok = false;
            ck.failure = "degree window has a gap before " + std::to_string(n);
            return ck;
        }
        prev = n;
    }
    for (const auto& [n, m] : c.diff)
        if (m.rows() != c.dim_at(n + 1) || m.cols() != c.dim_at(n)) {
            ck.ok = false;
            ck.failure = "differential at degree " + std::to_string(n) + " has the wrong shape";
            return ck;
        }
    for (int n = c.nlo(); n + 1 < c.nhi(); ++n)
        if (!(c.diff_at(n + 1) * c.diff_at(n)).is_zero()) {
            ck.ok = false;
            ck.failure = "d squared is nonzero leaving degree " + std::to_string(n);
            return ck;
        }
    for (const auto& [n, dsz] : c.dims) {
        if (dsz == 0)
            continue;
        auto it = c.filt.find(n);
        if (it == c.filt.end()) {
            ck.ok = false;
            ck.failure = "degree " + std::to_string(n) + " has no filtration";
            return ck;
        }
        const FilteredSpace& f = it->second;
        if (f.ambient() != dsz) {
            ck.ok = false;
            ck.failure = "filtration ambient mismatch at degree " + std::to_string(n);
            return ck;
        }
        if (f.direction() != Direction::Increasing) {
            ck.ok = false;
            ck.failure = "filtration at degree " + std::to_string(n) + " is not increasing";
            return ck;
        }
        FiltrationCheck fc = filtration_checks(f);
        if (!fc.exhaustive) {
            ck.ok = false;
            ck.failure = "filtration at degree " + std::to_string(n) + " is not exhaustive";
            return ck;
        }
        if (!fc.hausdorff) {
            ck.ok = false;
            ck.failure = "filtration at degree " + std::to_string(n) + " is not bounded below";
            return ck;
        }
    }
    int glo = c.slo(), ghi = c.shi();
    for (int n = c.nlo(); n < c.nhi(); ++n) {
        if (c.dim_at(n) == 0)
            continue;
        Matrix dn = c.diff_at(n);
        for (int r = glo; r <= ghi; ++r)
            if (!c.step(n + 1, r).contains(apply(dn, c.step(n, r)))) {
                ck.ok = false;
                ck.failure = "differential does not preserve step " + std::to_string(r) +
                             " at degree " + std::to_string(n);
                return ck;
            }
    }
    return ck;
}

FilteredComplex decalage(const FilteredComplex& c) {
    ComplexCheck ck = validate_complex(c);
    require(ck.ok, ErrorKind::Reject, "decalage: " + ck.failure);
    FilteredComplex out;
    out.dims = c.dims;
    out.diff = c.diff;
    if (c.dims.empty())
        return out;
    int glo = c.slo(), ghi = c.shi();
    for (const auto& [n, dsz] : c.dims) {
        if (dsz == 0)
            continue;
        Matrix dn = c.diff_at(n);
        std::map<int, Subspace> steps;
        for (int r = n + glo; r <= n + ghi + 1; ++r)
            steps.emplace(r, intersect(c.step(n, r - n), preimage(dn, c.step(n + 1, r - n - 1))));
        out.filt.emplace(n, FilteredSpace(dsz, Direction::Increasing, std::move(steps)));
    }
    return out;
}

size_t SpectralPage::dim_at(int s, int n) const {
    auto it = dims.find(std::make_pair(s, n));
    return it == dims.end() ? 0 : it->second;
}

size_t SpectralPage::total_dim() const {
    size_t t = 0;
    for (const auto& [sn, d] : dims)
        t += d;
    return t;
}

namespace {

struct BuiltPage {
    SpectralPage page;
    std::map<std::pair<int, int>, Quotient> q;
};

/* E_r entries as subquotients of the literal cycle spaces
   Z_r(s,n) = J_s C^n  intersect  d^{-1}(J_{s-r} C^{n+1}); the formula also
   covers r = -1, where the condition is vacuous. */
BuiltPage build_page(const FilteredComplex& c, int r) {
    BuiltPage out;
    out.page.r = r;
    if (c.dims.empty())
        return out;
    auto zsub = [&](int rr, int s, int n) {
        return intersect(c.step(n, s), preimage(c.diff_at(n), c.step(n + 1, s - rr)));
    };
    int glo = c.slo(), ghi = c.shi();
    for (int n = c.nlo(); n <= c.nhi(); ++n) {
        if (c.dim_at(n) == 0)
            continue;
        for (int s = glo; s <= ghi; ++s) {
            Subspace z = zsub(r, s, n);
            Subspace b = zsub(r - 1, s - 1, n);
            if (c.dim_at(n - 1) > 0)
                b = sum(b, apply(c.diff_at(n - 1), zsub(r - 1, s + r - 1, n - 1)));
            require(z.contains(b), ErrorKind::Internal, "page boundary escapes the cycle space");
            Quotient qt = quotient(z, b);
            if (qt.dim == 0)
                continue;
            out.page.dims.emplace(std::make_pair(s, n), qt.dim);
            out.q.emplace(std::make_pair(s, n), std::move(qt));
        }
    }
    for (const auto& [sn, qt] : out.q) {
        auto [s, n] = sn;
        auto tgt = out.q.find(std::make_pair(s - r, n + 1));
        if (tgt == out.q.end())
            continue;
        Matrix dn = c.diff_at(n);
        Subspace moved = apply(dn, Subspace::span(c.dim_at(n), qt.section));
        require(zsub(r, s - r, n + 1).contains(moved), ErrorKind::Internal,
                "page differential leaves its target cycle space");
        out.page.d.emplace(sn, tgt->second.projection * dn * qt.section);
    }
    // d_r composed with itself must vanish wherever both halves exist.
    for (const auto& [sn, m] : out.page.d) {
        auto [s, n] = sn;
        auto next = out.page.d.find(std::make_pair(s - r, n + 1));
        if (next != out.page.d.end())
            require((next->second * m).is_zero(), ErrorKind::Internal,
                    "page differential does not square to zero");
    }
    return out;
}

size_t rank_of(const SpectralPage& p, int s, int n) {
    auto it = p.d.find(std::make_pair(s, n));
    return it == p.d.end() ? 0 : rref(it->second).rank;
}

// dim E_{r+1}(s,n) = dim ker d_r(s,n) - rank of d_r into (s,n).
void check_homology_step(const SpectralPage& prev, const SpectralPage& next) {
    std::set<std::pair<int, int>> keys;
    for (const auto& [sn, d] : prev.dims)
        keys.insert(sn);
    for (const auto& [sn, d] : next.dims)
        keys.insert(sn);
    for (const auto& [s, n] : keys) {
        size_t expect = prev.dim_at(s, n) - rank_of(prev, s, n) -
                        rank_of(prev, s + prev.r, n - 1);
        require(next.dim_at(s, n) == expect, ErrorKind::Internal,
                "page homology mismatch at (" + std::to_string(s) + "," +
                    std::to_string(n) + ")");
    }
}

}  // namespace

std::vector<SpectralPage> pages(const FilteredComplex& c, int r_max) {
    require(r_max >= 0, ErrorKind::Shape, "pages: negative page index");
    ComplexCheck ck = validate_complex(c);
    require(ck.ok, ErrorKind::Reject, "pages: " + ck.failure);
    std::vector<SpectralPage> out;
    for (int r = 0; r <= r_max; ++r) {
        out.push_back(build_page(c, r).page);
        if (r > 0)
            check_homology_step(out[r - 1], out[r]);
    }
    return out;
}

SpectralPage infinity_page(const FilteredComplex& c) {
    ComplexCheck ck = validate_complex(c);
    require(ck.ok, ErrorKind::Reject, "infinity_page: " + ck.failure);
    if (c.dims.empty())
        return SpectralPage{};
    int stab = c.shi() - c.slo() + 1;
    return build_page(c, stab).page;
}

Cohomology cohomology(const FilteredComplex& c) {
    ComplexCheck ck = validate_complex(c);
    require(ck.ok, ErrorKind::Reject, "cohomology: " + ck.failure);
    Cohomology h;
    if (c.dims.empty())
        return h;
    int glo = c.slo(), ghi = c.shi();
    for (const auto& [n, dsz] : c.dims) {
        Subspace z = kernel(c.diff_at(n));
        Subspace b = c.dim_at(n - 1) > 0 ? image(c.diff_at(n - 1)) : Subspace::zero(dsz);
        require(z.contains(b), ErrorKind::Internal, "cohomology: boundaries escape cycles");
        Quotient qt = quotient(z, b);
        h.dims.emplace(n, qt.dim);
        if (dsz == 0)
            continue;
        std::map<int, Subspace> steps;
        for (int r = glo - 1; r <= ghi; ++r)
            steps.emplace(r, apply(qt.projection, intersect(c.step(n, r), z)));
        h.induced.emplace(n, FilteredSpace(qt.dim, Direction::Increasing, std::move(steps)));
    }
    return h;
}

bool convergence_check(const FilteredComplex& c) {
    SpectralPage einf = infinity_page(c);
    Cohomology h = cohomology(c);
    std::map<std::pair<int, int>, size_t> gr;
    for (const auto& [n, f] : h.induced)
        for (const auto& [s, d] : graded_dims(f))
            if (d > 0)
                gr.emplace(std::make_pair(s, n), d);
    return gr == einf.dims;
}

bool dec_e1_property_check(const FilteredComplex& c) {
    FilteredComplex dec = decalage(c);
    SpectralPage one = pages(dec, 1)[1];
    SpectralPage two = pages(c, 2)[2];
    for (const auto& [wn, d] : one.dims) {
        auto [w, a] = wn;
        if (two.dim_at(w - a, a) != d)
            return false;
    }
    for (const auto& [sn, d] : two.dims) {
        auto [s, a] = sn;
        if (one.dim_at(s + a, a) != d)
            return false;
    }
    return true;
}

std::map<int, Subspace> good_truncation(const FilteredComplex& c, int n) {
    std::map<int, Subspace> out;
    for (const auto& [m, dsz] : c.dims) {
        if (m < n)
            out.emplace(m, Subspace::full(dsz));
        else if (m == n)
            out.emplace(m, kernel(c.diff_at(m)));
        else
            out.emplace(m, Subspace::zero(dsz));
    }
    return out;
}

FilteredComplex restrict_complex(const FilteredComplex& c, const std::map<int, Subspace>& sub) {
    FilteredComplex out;
    for (const auto& [n, dsz] : c.dims) {
        auto it = sub.find(n);
        require(it != sub.end() && it->second.ambient() == dsz, ErrorKind::Shape,
                "restrict_complex: missing or mismatched subspace at degree " +
                    std::to_string(n));
        out.dims.emplace(n, it->second.dim());
    }
    for (const auto& [n, dsz] : c.dims) {
        (void)dsz;
        if (c.dims.count(n + 1) == 0)
            continue;
        out.diff.emplace(n, restrict_map(c.diff_at(n), sub.at(n), sub.at(n + 1)));
    }
    for (const auto& [n, dsz] : out.dims) {
        if (dsz == 0)
            continue;
        out.filt.emplace(n, induced_on_subspace(c.filt.at(n), sub.at(n)));
    }
    return out;
}

}  // namespace hodge
