#include "hodgekit/io.hpp"

#include <fstream>
#include <sstream>

#include "hodgekit/error.hpp"

namespace hodge {

namespace {

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    require(it != j.end(), ErrorKind::Parse, std::string("missing field '") + key + "'");
    return *it;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        fail(ErrorKind::Parse, e.what());
    }
}

std::vector<Scalar> vector_from_json(const Json& j) {
    std::vector<Scalar> v;
    for (const auto& entry : j)
        v.push_back(Scalar::parse(entry.get<std::string>()));
    return v;
}

Json vector_to_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const Scalar& s : v)
        out.push_back(s.str());
    return out;
}

std::string conv_name(WeightConvention c) {
    return c == WeightConvention::APlusB ? "a+b" : "a+2b";
}

WeightConvention conv_parse(const std::string& s) {
    if (s == "a+b")
        return WeightConvention::APlusB;
    if (s == "a+2b" || s == "a2b")
        return WeightConvention::APlus2B;
    fail(ErrorKind::Parse, "unknown weight convention '" + s + "'");
}

void render_text_value(const Json& j, const std::string& indent, std::string& out);

void render_text_object(const Json& j, const std::string& indent, std::string& out) {
    for (const auto& [key, value] : j.items()) {
        out += indent + key + ":";
        if (value.is_object() || (value.is_array() && !value.empty() &&
                                  (value.front().is_object() || value.front().is_array()))) {
            out += "\n";
            render_text_value(value, indent + "  ", out);
        } else {
            out += " ";
            render_text_value(value, "", out);
        }
    }
}

void render_text_value(const Json& j, const std::string& indent, std::string& out) {
    if (j.is_object()) {
        render_text_object(j, indent, out);
    } else if (j.is_array() && !j.empty() &&
               (j.front().is_object() || j.front().is_array())) {
        for (const auto& entry : j) {
            out += indent + "-\n";
            render_text_value(entry, indent + "  ", out);
        }
    } else if (j.is_string()) {
        out += j.get<std::string>() + "\n";
    } else {
        out += j.dump() + "\n";
    }
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    return guarded([&] {
        require(j.is_array(), ErrorKind::Parse, "matrix must be an array of rows");
        size_t rows = j.size();
        size_t cols = rows == 0 ? 0 : j.front().size();
        Matrix m(rows, cols);
        for (size_t r = 0; r < rows; ++r) {
            require(j[r].size() == cols, ErrorKind::Parse, "ragged matrix rows");
            for (size_t c = 0; c < cols; ++c)
                m(r, c) = Scalar::parse(j[r][c].get<std::string>());
        }
        return m;
    });
}

Matrix matrix_from_json(const Json& j, size_t rows, size_t cols) {
    Matrix m = matrix_from_json(j);
    if (m.rows() == 0 && rows == 0)
        return Matrix(rows, cols);
    require(m.rows() == rows && m.cols() == cols, ErrorKind::Parse,
            "matrix has the wrong shape");
    return m;
}

Json basis_to_json(const Matrix& basis) {
    Json cols = Json::array();
    for (size_t c = 0; c < basis.cols(); ++c)
        cols.push_back(vector_to_json(basis.col_vec(c)));
    return cols;
}

Subspace subspace_from_json(const Json& j, size_t ambient) {
    return guarded([&] {
        std::vector<std::vector<Scalar>> vecs;
        for (const auto& col : j) {
            std::vector<Scalar> v = vector_from_json(col);
            require(v.size() == ambient, ErrorKind::Parse,
                    "basis vector has the wrong dimension");
            vecs.push_back(std::move(v));
        }
        return Subspace::span_vec(ambient, vecs);
    });
}

Json filtration_to_json(const FilteredSpace& f) {
    Json out;
    out["direction"] = f.direction() == Direction::Increasing ? "inc" : "dec";
    Json steps = Json::array();
    for (const auto& [r, sub] : f.steps()) {
        Json step;
        step["index"] = r;
        step["basis"] = basis_to_json(sub.basis());
        steps.push_back(std::move(step));
    }
    out["steps"] = std::move(steps);
    return out;
}

FilteredSpace filtration_from_json(const Json& j, size_t ambient) {
    return guarded([&] {
        std::string dir = field(j, "direction").get<std::string>();
        require(dir == "inc" || dir == "dec", ErrorKind::Parse,
                "direction must be 'inc' or 'dec'");
        std::map<int, Subspace> steps;
        for (const auto& step : field(j, "steps"))
            steps.emplace(field(step, "index").get<int>(),
                          subspace_from_json(field(step, "basis"), ambient));
        return FilteredSpace(
            ambient, dir == "inc" ? Direction::Increasing : Direction::Decreasing,
            std::move(steps));
    });
}

Json mhs_to_json(const MixedHodge& m) {
    Json out;
    out["kind"] = "mhs";
    out["dim"] = m.dim;
    out["weight"] = filtration_to_json(m.W);
    out["hodge"] = filtration_to_json(m.F);
    return out;
}

MixedHodge mhs_from_json(const Json& j) {
    return guarded([&] {
        MixedHodge m;
        m.dim = field(j, "dim").get<size_t>();
        m.W = filtration_from_json(field(j, "weight"), m.dim);
        m.F = filtration_from_json(field(j, "hodge"), m.dim);
        return m;
    });
}

Json shs_to_json(const SplitHodge& s) {
    Json out;
    out["kind"] = "shs";
    out["dim"] = s.grading.dim();
    Json grading = Json::array();
    for (const auto& [pq, sub] : s.grading.pieces()) {
        Json piece;
        piece["p"] = pq.first;
        piece["q"] = pq.second;
        piece["basis"] = basis_to_json(sub.basis());
        grading.push_back(std::move(piece));
    }
    out["bigrading"] = std::move(grading);
    Json beta = Json::array();
    for (const auto& [ab, mat] : s.beta) {
        Json comp;
        comp["a"] = ab.first;
        comp["b"] = ab.second;
        comp["matrix"] = matrix_to_json(mat);
        beta.push_back(std::move(comp));
    }
    out["beta"] = std::move(beta);
    return out;
}

SplitHodge shs_from_json(const Json& j) {
    return guarded([&] {
        size_t dim = field(j, "dim").get<size_t>();
        std::map<std::pair<int, int>, Subspace> pieces;
        for (const auto& piece : field(j, "bigrading"))
            pieces.emplace(std::make_pair(field(piece, "p").get<int>(),
                                          field(piece, "q").get<int>()),
                           subspace_from_json(field(piece, "basis"), dim));
        SplitHodge s;
        s.grading = BigradedSpace(dim, std::move(pieces));
        for (const auto& comp : field(j, "beta"))
            s.beta.emplace(std::make_pair(field(comp, "a").get<int>(),
                                          field(comp, "b").get<int>()),
                           matrix_from_json(field(comp, "matrix"), dim, dim));
        return s;
    });
}

Json sts_to_json(const SplitTwistor& s) {
    Json out;
    out["kind"] = "sts";
    out["dim"] = s.grading.dim();
    Json grading = Json::array();
    for (const auto& [w, sub] : s.grading.pieces()) {
        Json piece;
        piece["weight"] = w;
        piece["basis"] = basis_to_json(sub.basis());
        grading.push_back(std::move(piece));
    }
    out["bigrading"] = std::move(grading);
    Json beta = Json::array();
    for (const auto& [mn, mat] : s.beta) {
        Json comp;
        comp["m"] = mn.first;
        comp["n"] = mn.second;
        comp["matrix"] = matrix_to_json(mat);
        beta.push_back(std::move(comp));
    }
    out["beta"] = std::move(beta);
    return out;
}

SplitTwistor sts_from_json(const Json& j) {
    return guarded([&] {
        size_t dim = field(j, "dim").get<size_t>();
        std::map<int, Subspace> pieces;
        for (const auto& piece : field(j, "bigrading"))
            pieces.emplace(field(piece, "weight").get<int>(),
                           subspace_from_json(field(piece, "basis"), dim));
        SplitTwistor s;
        s.grading = WeightGradedSpace(dim, std::move(pieces));
        for (const auto& comp : field(j, "beta"))
            s.beta.emplace(std::make_pair(field(comp, "m").get<int>(),
                                          field(comp, "n").get<int>()),
                           matrix_from_json(field(comp, "matrix"), dim, dim));
        return s;
    });
}

Json frep_to_json(const FRep& f) {
    Json out;
    out["kind"] = "frep";
    out["dim"] = f.grading.dim();
    Json grading = Json::array();
    for (const auto& [pq, sub] : f.grading.pieces()) {
        Json piece;
        piece["p"] = pq.first;
        piece["q"] = pq.second;
        piece["basis"] = basis_to_json(sub.basis());
        grading.push_back(std::move(piece));
    }
    out["bigrading"] = std::move(grading);
    out["d"] = matrix_to_json(f.d);
    return out;
}

FRep frep_from_json(const Json& j) {
    return guarded([&] {
        size_t dim = field(j, "dim").get<size_t>();
        std::map<std::pair<int, int>, Subspace> pieces;
        for (const auto& piece : field(j, "bigrading"))
            pieces.emplace(std::make_pair(field(piece, "p").get<int>(),
                                          field(piece, "q").get<int>()),
                           subspace_from_json(field(piece, "basis"), dim));
        FRep f;
        f.grading = BigradedSpace(dim, std::move(pieces));
        f.d = matrix_from_json(field(j, "d"), dim, dim);
        return f;
    });
}

Json complex_to_json(const FilteredComplex& c) {
    Json out;
    out["kind"] = "complex";
    Json degrees = Json::array();
    for (const auto& [n, d] : c.dims) {
        Json deg;
        deg["n"] = n;
        deg["dim"] = d;
        degrees.push_back(std::move(deg));
    }
    out["degrees"] = std::move(degrees);
    Json diffs = Json::array();
    for (const auto& [n, m] : c.diff) {
        Json entry;
        entry["n"] = n;
        entry["matrix"] = matrix_to_json(m);
        diffs.push_back(std::move(entry));
    }
    out["differentials"] = std::move(diffs);
    Json filts = Json::array();
    for (const auto& [n, f] : c.filt) {
        Json entry = filtration_to_json(f);
        entry["n"] = n;
        Json ordered;
        ordered["n"] = entry["n"];
        ordered["direction"] = entry["direction"];
        ordered["steps"] = entry["steps"];
        filts.push_back(std::move(ordered));
    }
    out["filtration"] = std::move(filts);
    return out;
}

FilteredComplex complex_from_json(const Json& j) {
    return guarded([&] {
        FilteredComplex c;
        for (const auto& deg : field(j, "degrees"))
            c.dims[field(deg, "n").get<int>()] = field(deg, "dim").get<size_t>();
        require(!c.dims.empty(), ErrorKind::Parse, "complex has no degrees");
        for (const auto& entry : field(j, "differentials")) {
            int n = field(entry, "n").get<int>();
            auto here = c.dims.find(n), next = c.dims.find(n + 1);
            require(here != c.dims.end() && next != c.dims.end(), ErrorKind::Parse,
                    "differential at a degree outside the window");
            c.diff[n] =
                matrix_from_json(field(entry, "matrix"), next->second, here->second);
        }
        for (const auto& entry : field(j, "filtration")) {
            int n = field(entry, "n").get<int>();
            auto here = c.dims.find(n);
            require(here != c.dims.end(), ErrorKind::Parse,
                    "filtration at a degree outside the window");
            c.filt[n] = filtration_from_json(entry, here->second);
        }
        return c;
    });
}

Json dga_to_json(const Dga& a) {
    Json out;
    out["kind"] = "dga";
    Json degrees = Json::array();
    for (const auto& [n, d] : a.dims) {
        Json deg;
        deg["n"] = n;
        deg["dim"] = d;
        degrees.push_back(std::move(deg));
    }
    out["degrees"] = std::move(degrees);
    if (a.weighted()) {
        Json weights = Json::array();
        for (const auto& [n, labels] : a.weights) {
            Json entry;
            entry["n"] = n;
            entry["labels"] = labels;
            weights.push_back(std::move(entry));
        }
        out["weights"] = std::move(weights);
    }
    Json prods = Json::array();
    for (const auto& [pq, m] : a.products) {
        Json entry;
        entry["p"] = pq.first;
        entry["q"] = pq.second;
        entry["matrix"] = matrix_to_json(m);
        prods.push_back(std::move(entry));
    }
    out["products"] = std::move(prods);
    Json diffs = Json::array();
    for (const auto& [n, m] : a.diff) {
        Json entry;
        entry["n"] = n;
        entry["matrix"] = matrix_to_json(m);
        diffs.push_back(std::move(entry));
    }
    out["differential"] = std::move(diffs);
    return out;
}

Dga dga_from_json(const Json& j) {
    return guarded([&] {
        Dga a;
        for (const auto& deg : field(j, "degrees"))
            a.dims[field(deg, "n").get<int>()] = field(deg, "dim").get<size_t>();
        require(!a.dims.empty(), ErrorKind::Parse, "algebra has no degrees");
        if (j.contains("weights"))
            for (const auto& entry : j["weights"])
                a.weights[field(entry, "n").get<int>()] =
                    field(entry, "labels").get<std::vector<int>>();
        for (const auto& entry : field(j, "products")) {
            int p = field(entry, "p").get<int>();
            int q = field(entry, "q").get<int>();
            auto dim = [&](int n) {
                auto it = a.dims.find(n);
                return it == a.dims.end() ? size_t{0} : it->second;
            };
            a.products[{p, q}] = matrix_from_json(field(entry, "matrix"), dim(p + q),
                                                  dim(p) * dim(q));
        }
        for (const auto& entry : field(j, "differential")) {
            int n = field(entry, "n").get<int>();
            auto here = a.dims.find(n), next = a.dims.find(n + 1);
            require(here != a.dims.end() && next != a.dims.end(), ErrorKind::Parse,
                    "differential at a degree outside the window");
            a.diff[n] =
                matrix_from_json(field(entry, "matrix"), next->second, here->second);
        }
        return a;
    });
}

Json gysin_to_json(const GysinInput& g) {
    Json out;
    out["kind"] = "gysin";
    out["weight_convention"] = conv_name(g.convention);
    Json pieces = Json::array();
    for (const auto& [ab, d] : g.dims) {
        Json piece;
        piece["a"] = ab.first;
        piece["b"] = ab.second;
        piece["dim"] = d;
        pieces.push_back(std::move(piece));
    }
    out["pieces"] = std::move(pieces);
    Json gys = Json::array();
    for (const auto& [ab, m] : g.gysin) {
        Json entry;
        entry["a"] = ab.first;
        entry["b"] = ab.second;
        entry["matrix"] = matrix_to_json(m);
        gys.push_back(std::move(entry));
    }
    out["gysin"] = std::move(gys);
    Json prods = Json::array();
    for (const auto& [key, m] : g.products) {
        Json entry;
        entry["a"] = key.first.first;
        entry["b"] = key.first.second;
        entry["a2"] = key.second.first;
        entry["b2"] = key.second.second;
        entry["matrix"] = matrix_to_json(m);
        prods.push_back(std::move(entry));
    }
    out["products"] = std::move(prods);
    return out;
}

GysinInput gysin_from_json(const Json& j) {
    return guarded([&] {
        GysinInput g;
        g.convention = conv_parse(field(j, "weight_convention").get<std::string>());
        for (const auto& piece : field(j, "pieces"))
            g.dims[{field(piece, "a").get<int>(), field(piece, "b").get<int>()}] =
                field(piece, "dim").get<size_t>();
        auto dim = [&](int a, int b) {
            auto it = g.dims.find({a, b});
            return it == g.dims.end() ? size_t{0} : it->second;
        };
        for (const auto& entry : field(j, "gysin")) {
            int a = field(entry, "a").get<int>();
            int b = field(entry, "b").get<int>();
            g.gysin[{a, b}] =
                matrix_from_json(field(entry, "matrix"), dim(a + 1, b - 1), dim(a, b));
        }
        for (const auto& entry : field(j, "products")) {
            int a = field(entry, "a").get<int>();
            int b = field(entry, "b").get<int>();
            int a2 = field(entry, "a2").get<int>();
            int b2 = field(entry, "b2").get<int>();
            g.products[{{a, b}, {a2, b2}}] = matrix_from_json(
                field(entry, "matrix"), dim(a + a2, b + b2), dim(a, b) * dim(a2, b2));
        }
        return g;
    });
}

Json codga_to_json(const CosimplicialDga& c) {
    Json out;
    out["kind"] = "codga";
    Json levels = Json::array();
    for (const Dga& a : c.levels)
        levels.push_back(dga_to_json(a));
    out["levels"] = std::move(levels);
    auto family = [&](const std::map<std::pair<size_t, size_t>, std::map<int, Matrix>>& m,
                      const char* idx) {
        Json fam = Json::array();
        for (const auto& [key, blocks] : m) {
            Json entry;
            entry["level"] = key.first;
            entry[idx] = key.second;
            Json bl = Json::array();
            for (const auto& [deg, mat] : blocks) {
                Json b;
                b["n"] = deg;
                b["matrix"] = matrix_to_json(mat);
                bl.push_back(std::move(b));
            }
            entry["blocks"] = std::move(bl);
            fam.push_back(std::move(entry));
        }
        return fam;
    };
    out["cofaces"] = family(c.coface, "i");
    out["codegeneracies"] = family(c.codeg, "j");
    return out;
}

CosimplicialDga codga_from_json(const Json& j) {
    return guarded([&] {
        CosimplicialDga c;
        for (const auto& level : field(j, "levels"))
            c.levels.push_back(dga_from_json(level));
        require(!c.levels.empty(), ErrorKind::Parse, "cosimplicial object has no levels");
        auto family = [&](const Json& fam, const char* idx) {
            std::map<std::pair<size_t, size_t>, std::map<int, Matrix>> out_map;
            for (const auto& entry : fam) {
                std::map<int, Matrix> blocks;
                for (const auto& b : field(entry, "blocks"))
                    blocks[field(b, "n").get<int>()] = matrix_from_json(field(b, "matrix"));
                out_map[{field(entry, "level").get<size_t>(),
                         field(entry, idx).get<size_t>()}] = std::move(blocks);
            }
            return out_map;
        };
        c.coface = family(field(j, "cofaces"), "i");
        c.codeg = family(field(j, "codegeneracies"), "j");
        return c;
    });
}

Json defcone_to_json(const DefConeInput& d) {
    Json out;
    out["kind"] = "defcone";
    out["h1"] = d.h1;
    out["h0r1"] = d.h0r1;
    out["h0_ad"] = d.h0_ad;
    out["d2"] = matrix_to_json(d.d2);
    out["omega_omega"] = matrix_to_json(d.omega_omega);
    out["omega_eta"] = matrix_to_json(d.omega_eta);
    out["eta_eta"] = matrix_to_json(d.eta_eta);
    return out;
}

DefConeInput defcone_from_json(const Json& j) {
    return guarded([&] {
        DefConeInput d;
        d.h1 = field(j, "h1").get<size_t>();
        d.h0r1 = field(j, "h0r1").get<size_t>();
        d.h0_ad = field(j, "h0_ad").get<size_t>();
        d.d2 = matrix_from_json(field(j, "d2"));
        if (d.d2.rows() == 0)
            d.d2 = Matrix(0, d.h0r1);
        d.omega_omega = matrix_from_json(field(j, "omega_omega"));
        if (d.omega_omega.rows() == 0)
            d.omega_omega = Matrix(d.d2.rows(), d.h1 * d.h1);
        d.omega_eta = matrix_from_json(field(j, "omega_eta"));
        if (d.omega_eta.rows() == 0)
            d.omega_eta = Matrix(0, d.h1 * d.h0r1);
        d.eta_eta = matrix_from_json(field(j, "eta_eta"));
        if (d.eta_eta.rows() == 0)
            d.eta_eta = Matrix(0, d.h0r1 * d.h0r1);
        return d;
    });
}

std::string json_kind(const Json& j) {
    return guarded([&] {
        require(j.is_object(), ErrorKind::Parse, "input is not an object");
        return field(j, "kind").get<std::string>();
    });
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::Parse, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorKind::Parse, std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    require(out.good(), ErrorKind::Parse, "cannot write '" + path + "'");
    out << text;
}

std::string render_report(const Json& report, bool as_text) {
    if (!as_text)
        return report.dump() + "\n";
    std::string out;
    render_text_value(report, "", out);
    return out;
}

}  // namespace hodge
