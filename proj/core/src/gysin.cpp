#include "hodgekit/gysin.hpp"

#include <string>

#include "hodgekit/error.hpp"

namespace hodge {

namespace {

std::string piece_name(const std::pair<int, int>& ab) {
    return "(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")";
}

}  // namespace

std::map<std::pair<int, int>, size_t> e2_offsets(const GysinInput& g) {
    std::map<std::pair<int, int>, size_t> off;
    std::map<int, size_t> used;
    for (const auto& [ab, d] : g.dims) {  // map order = b ascending within a
        if (d == 0)
            continue;
        off.emplace(ab, used[ab.first]);
        used[ab.first] += d;
    }
    return off;
}

Dga e2_builder(const GysinInput& g) {
    for (const auto& [ab, d] : g.dims)
        require(ab.first >= 0 && ab.second >= 0, ErrorKind::Reject,
                "stratum window must sit in the first quadrant, got " + piece_name(ab));
    std::map<std::pair<int, int>, size_t> off = e2_offsets(g);
    auto dim_of = [&](const std::pair<int, int>& ab) -> size_t {
        auto it = g.dims.find(ab);
        return it == g.dims.end() ? 0 : it->second;
    };

    Dga a;
    for (const auto& [ab, d] : g.dims) {
        if (d == 0)
            continue;
        a.dims[ab.first] += d;
        std::vector<int>& w = a.weights[ab.first];
        w.resize(w.size() + d, ab.first + ab.second);
    }
    for (int n = 0; n <= a.top(); ++n)
        if (a.dims.find(n) == a.dims.end()) {
            a.dims[n] = 0;
            a.weights[n] = {};
        }

    for (const auto& [ab, m] : g.gysin) {
        require(ab.second >= 1, ErrorKind::Reject,
                "gysin component at " + piece_name(ab) + " leaves the stratum window");
        std::pair<int, int> tgt{ab.first + 1, ab.second - 1};
        require(m.rows() == dim_of(tgt) && m.cols() == dim_of(ab), ErrorKind::Shape,
                "gysin block at " + piece_name(ab) + " has the wrong shape");
        if (m.is_zero())
            continue;
        int n = ab.first;
        auto it = a.diff.find(n);
        if (it == a.diff.end())
            it = a.diff.emplace(n, Matrix(a.dims.at(n + 1), a.dims.at(n))).first;
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                it->second(off.at(tgt) + r, off.at(ab) + c) = m(r, c);
    }

    for (const auto& [key, m] : g.products) {
        const auto& [pa, qb] = key;
        std::pair<int, int> tgt{pa.first + qb.first, pa.second + qb.second};
        require(m.rows() == dim_of(tgt) && m.cols() == dim_of(pa) * dim_of(qb),
                ErrorKind::Shape,
                "product block " + piece_name(pa) + "x" + piece_name(qb) +
                    " has the wrong shape");
        if (m.is_zero())
            continue;
        int p = pa.first, q = qb.first;
        size_t dp = a.dims.at(p), dq = a.dims.at(q);
        auto it = a.products.find({p, q});
        if (it == a.products.end())
            it = a.products.emplace(std::make_pair(p, q), Matrix(a.dims.at(p + q), dp * dq))
                     .first;
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t j = 0; j < dim_of(pa); ++j)
                for (size_t k = 0; k < dim_of(qb); ++k)
                    it->second(off.at(tgt) + r,
                               (off.at(pa) + j) * dq + off.at(qb) + k) =
                        m(r, j * dim_of(qb) + k);
    }

    DgaCheck check = validate_dga(a);
    require(check.ok, ErrorKind::Reject, check.failure);
    return a;
}

int convention_weight(WeightConvention c, int weight, int degree) {
    if (c == WeightConvention::APlusB)
        return weight;
    int b = weight - degree;
    return b > 0 ? weight + b : weight;
}

}  // namespace hodge
