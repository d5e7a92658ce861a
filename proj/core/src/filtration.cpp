#include "hodgekit/filtration.hpp"

#include <string>

#include "hodgekit/error.hpp"

namespace hodge {

FilteredSpace::FilteredSpace(size_t ambient, Direction dir, std::map<int, Subspace> steps)
    : ambient_(ambient), dir_(dir), steps_(std::move(steps)) {
    require(!steps_.empty(), ErrorKind::Shape, "filtration needs at least one step");
    const Subspace* prev = nullptr;
    for (auto& [idx, sub] : steps_) {
        require(sub.ambient() == ambient_, ErrorKind::Shape,
                "filtration step ambient mismatch at index " + std::to_string(idx));
        if (prev) {
            bool ok = dir_ == Direction::Increasing ? sub.contains(*prev) : prev->contains(sub);
            require(ok, ErrorKind::Invariant,
                    "filtration not monotone at index " + std::to_string(idx));
        }
        prev = &sub;
    }
}

int FilteredSpace::lo() const { return steps_.begin()->first; }
int FilteredSpace::hi() const { return steps_.rbegin()->first; }

const Subspace& FilteredSpace::at(int r) const {
    require(!steps_.empty(), ErrorKind::Shape, "empty filtration");
    if (dir_ == Direction::Increasing) {
        // Largest stored index <= r; constant below the window.
        auto it = steps_.upper_bound(r);
        if (it == steps_.begin())
            return steps_.begin()->second;
        return std::prev(it)->second;
    }
    // Decreasing: smallest stored index >= r; constant above the window.
    auto it = steps_.lower_bound(r);
    if (it == steps_.end())
        return steps_.rbegin()->second;
    return it->second;
}

bool FilteredSpace::is_real() const {
    for (const auto& [idx, sub] : steps_)
        if (!sub.is_real())
            return false;
    return true;
}

FilteredSpace FilteredSpace::conj() const {
    std::map<int, Subspace> st;
    for (const auto& [idx, sub] : steps_)
        st.emplace(idx, sub.conj());
    return FilteredSpace(ambient_, dir_, std::move(st));
}

FilteredSpace FilteredSpace::shifted(int s) const {
    std::map<int, Subspace> st;
    for (const auto& [idx, sub] : steps_)
        st.emplace(idx - s, sub);
    return FilteredSpace(ambient_, dir_, std::move(st));
}

bool operator==(const FilteredSpace& a, const FilteredSpace& b) {
    return a.ambient_ == b.ambient_ && a.dir_ == b.dir_ && a.steps_ == b.steps_;
}

bool filtrations_equal(const FilteredSpace& a, const FilteredSpace& b) {
    if (a.ambient() != b.ambient() || a.direction() != b.direction())
        return false;
    int lo = std::min(a.lo(), b.lo()) - 1;
    int hi = std::max(a.hi(), b.hi()) + 1;
    for (int r = lo; r <= hi; ++r)
        if (a.at(r) != b.at(r))
            return false;
    return true;
}

FiltrationCheck filtration_checks(const FilteredSpace& f) {
    FiltrationCheck c{};
    c.lo = f.lo();
    c.hi = f.hi();
    int full_end = f.direction() == Direction::Increasing ? c.hi : c.lo;
    int zero_end = f.direction() == Direction::Increasing ? c.lo : c.hi;
    c.exhaustive = f.at(full_end).is_full();
    if (!c.exhaustive)
        c.exhaustive_witness = full_end;
    c.hausdorff = f.at(zero_end).is_zero();
    if (!c.hausdorff)
        c.hausdorff_witness = zero_end;
    return c;
}

std::map<int, Quotient> graded_pieces(const FilteredSpace& f) {
    std::map<int, Quotient> gr;
    for (int r = f.lo(); r <= f.hi(); ++r) {
        const Subspace& outer = f.at(r);
        const Subspace& inner = f.at(f.direction() == Direction::Increasing ? r - 1 : r + 1);
        if (outer.dim() == inner.dim())
            continue;
        gr.emplace(r, quotient(outer, inner));
    }
    return gr;
}

std::map<int, size_t> graded_dims(const FilteredSpace& f) {
    std::map<int, size_t> d;
    for (int r = f.lo(); r <= f.hi(); ++r) {
        size_t outer = f.at(r).dim();
        size_t inner = f.at(f.direction() == Direction::Increasing ? r - 1 : r + 1).dim();
        if (outer != inner)
            d.emplace(r, outer - inner);
    }
    return d;
}

FilteredSpace induced_on_quotient(const FilteredSpace& f, const Matrix& projection) {
    require(projection.cols() == f.ambient(), ErrorKind::Shape,
            "induced_on_quotient: projection domain mismatch");
    std::map<int, Subspace> st;
    for (const auto& [idx, sub] : f.steps())
        st.emplace(idx, apply(projection, sub));
    return FilteredSpace(projection.rows(), f.direction(), std::move(st));
}

FilteredSpace induced_on_subspace(const FilteredSpace& f, const Subspace& u) {
    require(u.ambient() == f.ambient(), ErrorKind::Shape,
            "induced_on_subspace: ambient mismatch");
    std::map<int, Subspace> st;
    for (const auto& [idx, sub] : f.steps()) {
        Subspace cut = intersect(sub, u);
        // Express inside u: coordinates with respect to u's echelon basis.
        auto coords = solve_cols(u.basis(), cut.basis());
        require(coords.has_value(), ErrorKind::Internal, "induced_on_subspace: solve failed");
        st.emplace(idx, Subspace::span(u.dim(), *coords));
    }
    return FilteredSpace(u.dim(), f.direction(), std::move(st));
}

FilteredSpace tensor_filtration(const FilteredSpace& a, const FilteredSpace& b) {
    require(a.direction() == b.direction(), ErrorKind::Shape,
            "tensor_filtration: mixed directions");
    size_t ambient = a.ambient() * b.ambient();
    int spanb = b.hi() - b.lo();
    std::map<int, Subspace> st;
    for (int p = a.lo() + b.lo(); p <= a.hi() + b.hi(); ++p) {
        Subspace acc = Subspace::zero(ambient);
        // Summands saturate outside [a.lo-spanb-1, a.hi+spanb+1]; that range
        // covers every distinct term.
        for (int s = a.lo() - spanb - 1; s <= a.hi() + spanb + 1; ++s)
            acc = sum(acc, tensor_pair(a.at(s), b.at(p - s)));
        st.emplace(p, std::move(acc));
    }
    return FilteredSpace(ambient, a.direction(), std::move(st));
}

FilteredSpace dual_filtration(const FilteredSpace& f) {
    std::map<int, Subspace> st;
    if (f.direction() == Direction::Decreasing) {
        for (int p = 1 - f.hi(); p <= 1 - f.lo(); ++p)
            st.emplace(p, annihilator(f.at(1 - p)));
        return FilteredSpace(f.ambient(), Direction::Decreasing, std::move(st));
    }
    for (int n = -f.hi() - 1; n <= -f.lo() - 1; ++n)
        st.emplace(n, annihilator(f.at(-n - 1)));
    return FilteredSpace(f.ambient(), Direction::Increasing, std::move(st));
}

}  // namespace hodge
