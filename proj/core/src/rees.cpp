#include "hodgekit/rees.hpp"

#include "hodgekit/error.hpp"

namespace hodge {

ReesModule rees_single(const FilteredSpace& f) {
    ReesModule m;
    m.dir = f.direction();
    m.lo = f.lo();
    m.hi = f.hi();
    m.flat = true;
    for (int r = m.lo; r <= m.hi; ++r)
        m.piece.emplace(r, f.at(r));
    for (int r = m.lo; r <= m.hi; ++r) {
        int target = m.dir == Direction::Increasing ? r + 1 : r - 1;
        if (target < m.lo || target > m.hi)
            continue;
        Matrix s = restrict_map(Matrix::identity(f.ambient()), f.at(r), f.at(target));
        if (kernel(s).dim() != 0)
            m.flat = false;  // cannot happen for genuine inclusions; recorded anyway
        m.gr_dim[target] = f.at(target).dim() - f.at(r).dim();
        m.shift.emplace(r, std::move(s));
    }
    // The extreme piece in the shift direction has no incoming shift; its
    // graded dimension is its full dimension minus the saturated neighbour.
    int first = m.dir == Direction::Increasing ? m.lo : m.hi;
    int outside = m.dir == Direction::Increasing ? first - 1 : first + 1;
    m.gr_dim[first] = f.at(first).dim() - f.at(outside).dim();
    if (m.gr_dim[first] == 0)
        m.gr_dim.erase(first);
    for (auto it = m.gr_dim.begin(); it != m.gr_dim.end();) {
        if (it->second == 0)
            it = m.gr_dim.erase(it);
        else
            ++it;
    }
    return m;
}

DoubleRees rees_double(const FilteredSpace& f) {
    require(f.direction() == Direction::Decreasing, ErrorKind::Shape,
            "rees_double expects a decreasing filtration");
    DoubleRees m;
    m.lo = f.lo();
    m.hi = f.hi();
    m.flat = true;
    FilteredSpace fbar = f.conj();
    for (int p = m.lo; p <= m.hi; ++p)
        for (int q = m.lo; q <= m.hi; ++q)
            m.piece.emplace(std::make_pair(p, q), intersect(f.at(p), fbar.at(q)));
    for (const auto& [pq, sub] : m.piece) {
        auto [p, q] = pq;
        if (p - 1 >= m.lo) {
            Matrix s = restrict_map(Matrix::identity(f.ambient()), sub,
                                    m.piece.at(std::make_pair(p - 1, q)));
            if (kernel(s).dim() != 0)
                m.flat = false;
            m.shift_p.emplace(pq, std::move(s));
        }
        if (q - 1 >= m.lo) {
            Matrix s = restrict_map(Matrix::identity(f.ambient()), sub,
                                    m.piece.at(std::make_pair(p, q - 1)));
            if (kernel(s).dim() != 0)
                m.flat = false;
            m.shift_q.emplace(pq, std::move(s));
        }
    }
    return m;
}

const Subspace& double_rees_piece(const DoubleRees& m, int p, int q) {
    auto clamp = [&](int x) { return x < m.lo ? m.lo : (x > m.hi ? m.hi : x); };
    return m.piece.at(std::make_pair(clamp(p), clamp(q)));
}

Subspace real_pair_points(const DoubleRees& m, int p, int q) {
    Subspace s = sum(double_rees_piece(m, p, q), double_rees_piece(m, q, p));
    return real_points(s);
}

size_t real_pair_dim(const DoubleRees& m, int p, int q) {
    return real_pair_points(m, p, q).dim();
}

}  // namespace hodge
