#include "hodgekit/lie.hpp"

#include <algorithm>

#include "hodgekit/error.hpp"

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

bool is_lyndon(const Word& w) {
    // Strictly smaller than every proper suffix.
    for (size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
            return false;
    return true;
}

}  // namespace

std::vector<Word> lyndon_words(size_t letters, size_t max_length) {
    std::vector<Word> out;
    if (letters == 0 || max_length == 0)
        return out;
    Word w{0};
    while (!w.empty()) {
        out.push_back(w);
        Word t = w;
        while (t.size() < max_length)
            t.push_back(t[t.size() - w.size()]);
        while (!t.empty() && t.back() == letters - 1)
            t.pop_back();
        if (!t.empty())
            ++t.back();
        w = t;
    }
    return out;
}

std::pair<Word, Word> lyndon_factorize(const Word& w) {
    require(w.size() >= 2, ErrorKind::Shape, "factorization needs length >= 2");
    for (size_t i = 1; i < w.size(); ++i) {
        Word v(w.begin() + i, w.end());
        if (is_lyndon(v))
            return {Word(w.begin(), w.begin() + i), v};
    }
    fail(ErrorKind::Internal, "Lyndon word without a standard factorization");
}

FreeLie::FreeLie(std::vector<int> gen_degrees, size_t max_length, int max_degree)
    : degrees_(std::move(gen_degrees)), max_length_(max_length), max_degree_(max_degree) {
    std::map<Word, TensorPoly> cache;
    std::vector<Word> lyndon = lyndon_words(degrees_.size(), max_length_);
    // Expansions in increasing length so factors are always cached.
    std::stable_sort(lyndon.begin(), lyndon.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const Word& w : lyndon) {
        if (w.size() == 1) {
            cache.emplace(w, generator(w[0]));
            continue;
        }
        auto [u, v] = lyndon_factorize(w);
        cache.emplace(w, bracket(cache.at(u), cache.at(v)));
    }
    for (const Word& w : lyndon) {
        int deg = degree_of(w);
        if (deg <= max_degree_)
            basis_.push_back({w, false, deg, w.size()});
        if (deg % 2 != 0 && 2 * w.size() <= max_length_ && 2 * deg <= max_degree_)
            basis_.push_back({w, true, 2 * deg, 2 * w.size()});
    }
    std::stable_sort(basis_.begin(), basis_.end(), [](const Element& a, const Element& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        if (a.length != b.length)
            return a.length < b.length;
        if (a.word != b.word)
            return a.word < b.word;
        return a.square < b.square;
    });
    for (size_t i = 0; i < basis_.size(); ++i) {
        const Element& e = basis_[i];
        expansions_.push_back(e.square ? bracket(cache.at(e.word), cache.at(e.word))
                                       : cache.at(e.word));
        index_.emplace(std::make_pair(e.word, e.square), i);
    }
}

std::optional<size_t> FreeLie::index_of(const Word& w, bool square) const {
    auto it = index_.find(std::make_pair(w, square));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int FreeLie::degree_of(const Word& w) const {
    int d = 0;
    for (size_t g : w)
        d += degrees_[g];
    return d;
}

TensorPoly FreeLie::generator(size_t g) {
    TensorPoly p;
    p.emplace(Word{g}, Scalar(1L));
    return p;
}

TensorPoly FreeLie::bracket(const TensorPoly& x, const TensorPoly& y) const {
    TensorPoly out;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y) {
            Scalar c = a * b;
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            add_term(out, uv, c);
            Word vu = v;
            vu.insert(vu.end(), u.begin(), u.end());
            bool flip = (degree_of(u) * degree_of(v)) % 2 == 0;
            add_term(out, vu, flip ? -c : c);
        }
    return out;
}

std::map<size_t, Scalar> FreeLie::express(const TensorPoly& p, bool truncate_overflow) const {
    TensorPoly work;
    for (const auto& [w, c] : p) {
        if (w.size() > max_length_) {
            require(truncate_overflow, ErrorKind::Shape, "element exceeds the bracket cap");
            continue;
        }
        add_term(work, w, c);
    }
    std::map<size_t, Scalar> out;
    Scalar half(mpq_class(1, 2));
    while (!work.empty()) {
        Word m = work.begin()->first;
        Scalar c = work.begin()->second;
        std::optional<size_t> idx = index_of(m, false);
        Scalar coef = c;
        if (!idx && m.size() % 2 == 0) {
            Word head(m.begin(), m.begin() + m.size() / 2);
            Word tail(m.begin() + m.size() / 2, m.end());
            if (head == tail) {
                idx = index_of(head, true);
                coef = c * half;
            }
        }
        require(idx.has_value(), ErrorKind::Internal,
                "leading word is outside the truncated Lie basis");
        out[*idx] += coef;
        for (const auto& [w, e] : expansions_[*idx])
            add_term(work, w, -(coef * e));
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace hodge
