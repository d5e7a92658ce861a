// Batch front-end: read one object file, run one computation, emit one report.

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hodgekit/defcone.hpp"
#include "hodgekit/dga.hpp"
#include "hodgekit/error.hpp"
#include "hodgekit/gysin.hpp"
#include "hodgekit/hodge.hpp"
#include "hodgekit/io.hpp"
#include "hodgekit/quillen.hpp"
#include "hodgekit/rees.hpp"
#include "hodgekit/spectral.hpp"
#include "hodgekit/splitting.hpp"
#include "hodgekit/thom_whitney.hpp"

namespace {

using namespace hodge;

struct Options {
    std::string in;
    std::string rhs;
    std::string out;
    std::string format = "json";
    std::string from;
    std::string to;
    std::string convention = "a+b";
    std::string endpoints = "0i";
    int truncate = 0;  // 0 = per-command default
    int degree = -1;
};

WeightConvention convention_of(const Options& o) {
    require(o.convention == "a+b" || o.convention == "a2b", ErrorKind::Parse,
            "--weight-convention must be a+b or a2b");
    return o.convention == "a+b" ? WeightConvention::APlusB : WeightConvention::APlus2B;
}

Endpoints endpoints_of(const Options& o) {
    require(o.endpoints == "0i" || o.endpoints == "mii", ErrorKind::Parse,
            "--endpoints must be 0i or mii");
    return o.endpoints == "0i" ? Endpoints::ZeroToI : Endpoints::MinusIToI;
}

std::string convention_label(WeightConvention c) {
    return c == WeightConvention::APlusB ? "a+b" : "a+2b";
}

Json load(const Options& o) {
    require(!o.in.empty(), ErrorKind::Parse, "--in is required");
    return read_json_file(o.in);
}

Json check_report(bool ok, const std::string& failure) {
    Json rep;
    rep["ok"] = ok;
    if (!ok)
        rep["failure"] = failure;
    return rep;
}

Json run_validate(const Options& o) {
    Json j = load(o);
    std::string kind = json_kind(j);
    if (kind == "mhs") {
        MhsReport r = validate_mhs(mhs_from_json(j));
        Json rep;
        rep["opposed"] = r.ok;
        if (!r.ok) {
            rep["failure"] = r.failure;
            rep["failure_class"] = r.failure_class;
        }
        return rep;
    }
    if (kind == "shs") {
        SplitCheck c = validate_shs(shs_from_json(j));
        return check_report(c.ok, c.failure);
    }
    if (kind == "sts") {
        SplitCheck c = validate_sts(sts_from_json(j));
        return check_report(c.ok, c.failure);
    }
    if (kind == "frep") {
        SplitCheck c = validate_frep(frep_from_json(j));
        return check_report(c.ok, c.failure);
    }
    if (kind == "complex") {
        ComplexCheck c = validate_complex(complex_from_json(j));
        return check_report(c.ok, c.failure);
    }
    if (kind == "dga") {
        DgaCheck c = validate_dga(dga_from_json(j));
        return check_report(c.ok, c.failure);
    }
    if (kind == "gysin") {
        try {
            e2_builder(gysin_from_json(j));
            return check_report(true, "");
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Reject)
                throw;
            return check_report(false, e.what());
        }
    }
    if (kind == "codga") {
        CosimplicialCheck c = validate_cosimplicial(codga_from_json(j));
        return check_report(c.ok, c.failure);
    }
    if (kind == "defcone") {
        try {
            deformation_cone(defcone_from_json(j));
            return check_report(true, "");
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Reject)
                throw;
            return check_report(false, e.what());
        }
    }
    fail(ErrorKind::Parse, "unknown object kind '" + kind + "'");
}

Json run_split(const Options& o) {
    Json j = load(o);
    require(json_kind(j) == "mhs", ErrorKind::Parse, "split expects an mhs input");
    return shs_to_json(mhs_to_shs(mhs_from_json(j)).shs);
}

// The -i..i frame of the same mixed structure: transport the split filtration
// by the chosen exponential.  Any strictly weight-dropping unipotent gives the
// same gr, so the result validates either way.
MixedHodge shs_to_mhs_at(const SplitHodge& s, Endpoints e) {
    if (e == Endpoints::ZeroToI)
        return shs_to_mhs(s);
    Matrix d = beta_exponential(s, e);
    FilteredSpace split_f = s.grading.split_hodge_filtration();
    std::map<int, Subspace> steps;
    for (const auto& [r, sub] : split_f.steps())
        steps.emplace(r, apply(d, sub));
    MixedHodge m;
    m.dim = s.grading.dim();
    m.W = s.grading.weight_filtration();
    m.F = FilteredSpace(m.dim, Direction::Decreasing, std::move(steps));
    return m;
}

Json run_convert(const Options& o) {
    Json j = load(o);
    std::string kind = json_kind(j);
    require(!o.from.empty() && !o.to.empty(), ErrorKind::Parse,
            "convert needs --from and --to");
    require(kind == o.from, ErrorKind::Parse,
            "input kind '" + kind + "' does not match --from " + o.from);
    if (o.from == "shs" && o.to == "frep")
        return frep_to_json(shs_to_frep(shs_from_json(j)));
    if (o.from == "frep" && o.to == "shs")
        return shs_to_json(frep_to_shs(frep_from_json(j)));
    if (o.from == "shs" && o.to == "mhs")
        return mhs_to_json(shs_to_mhs_at(shs_from_json(j), endpoints_of(o)));
    if (o.from == "mhs" && o.to == "shs")
        return shs_to_json(mhs_to_shs(mhs_from_json(j)).shs);
    if (o.from == "frep" && o.to == "mhs")
        return mhs_to_json(shs_to_mhs_at(frep_to_shs(frep_from_json(j)), endpoints_of(o)));
    if (o.from == "mhs" && o.to == "frep")
        return frep_to_json(shs_to_frep(mhs_to_shs(mhs_from_json(j)).shs));
    fail(ErrorKind::Parse, "unsupported conversion " + o.from + " -> " + o.to);
}

Json run_ext(const Options& o) {
    Json j = load(o);
    require(!o.rhs.empty(), ErrorKind::Parse, "ext needs --rhs with the second object");
    Json k = read_json_file(o.rhs);
    std::string kind = json_kind(j);
    require(kind == json_kind(k), ErrorKind::Parse, "ext arguments must share a kind");
    HomExt he;
    if (kind == "shs") {
        he = hom_ext_shs(shs_from_json(j), shs_from_json(k));
    } else if (kind == "sts") {
        he = hom_ext_sts(sts_from_json(j), sts_from_json(k));
    } else if (kind == "mhs") {
        he = hom_ext_shs(mhs_to_shs(mhs_from_json(j)).shs,
                         mhs_to_shs(mhs_from_json(k)).shs);
    } else {
        fail(ErrorKind::Parse, "ext expects shs, sts, or mhs inputs");
    }
    Json rep;
    rep["graded_hom"] = he.graded_hom_dim;
    rep["hom"] = he.hom_dim;
    rep["target"] = he.target_dim;
    rep["ext1"] = he.ext1_dim;
    return rep;
}

Json run_rees(const Options& o) {
    Json j = load(o);
    std::string kind = json_kind(j);
    if (kind == "mhs") {
        MixedHodge m = mhs_from_json(j);
        ReesModule w = rees_single(m.W);
        DoubleRees f = rees_double(m.F);
        Json rep;
        rep["weight_flat"] = w.flat;
        Json gr = Json::array();
        for (const auto& [n, d] : w.gr_dim) {
            Json entry;
            entry["index"] = n;
            entry["dim"] = d;
            gr.push_back(std::move(entry));
        }
        rep["weight_gr"] = std::move(gr);
        rep["hodge_flat"] = f.flat;
        Json pieces = Json::array();
        for (const auto& [pq, sub] : f.piece) {
            if (sub.dim() == 0)
                continue;
            Json entry;
            entry["p"] = pq.first;
            entry["q"] = pq.second;
            entry["dim"] = sub.dim();
            entry["real_dim"] = real_pair_dim(f, pq.first, pq.second);
            pieces.push_back(std::move(entry));
        }
        rep["hodge_pieces"] = std::move(pieces);
        return rep;
    }
    if (kind == "complex") {
        FilteredComplex c = complex_from_json(j);
        ComplexCheck chk = validate_complex(c);
        require(chk.ok, ErrorKind::Reject, chk.failure);
        Json degrees = Json::array();
        for (const auto& [n, f] : c.filt) {
            ReesModule r = rees_single(f);
            Json entry;
            entry["n"] = n;
            entry["flat"] = r.flat;
            Json gr = Json::array();
            for (const auto& [s, d] : r.gr_dim) {
                Json g;
                g["index"] = s;
                g["dim"] = d;
                gr.push_back(std::move(g));
            }
            entry["gr"] = std::move(gr);
            degrees.push_back(std::move(entry));
        }
        Json rep;
        rep["degrees"] = std::move(degrees);
        return rep;
    }
    fail(ErrorKind::Parse, "rees expects an mhs or complex input");
}

Json run_dec(const Options& o) {
    Json j = load(o);
    require(json_kind(j) == "complex", ErrorKind::Parse, "dec expects a complex input");
    FilteredComplex c = complex_from_json(j);
    ComplexCheck chk = validate_complex(c);
    require(chk.ok, ErrorKind::Reject, chk.failure);
    return complex_to_json(decalage(c));
}

Json run_ss(const Options& o) {
    Json j = load(o);
    require(json_kind(j) == "complex", ErrorKind::Parse, "ss expects a complex input");
    FilteredComplex c = complex_from_json(j);
    ComplexCheck chk = validate_complex(c);
    require(chk.ok, ErrorKind::Reject, chk.failure);
    int r_max = o.truncate > 0 ? o.truncate : (c.shi() - c.slo() + 2);
    Json rep;
    Json pgs = Json::array();
    for (const SpectralPage& page : pages(c, r_max)) {
        Json p;
        p["r"] = page.r;
        Json entries = Json::array();
        for (const auto& [sn, d] : page.dims) {
            Json e;
            e["s"] = sn.first;
            e["n"] = sn.second;
            e["dim"] = d;
            entries.push_back(std::move(e));
        }
        p["entries"] = std::move(entries);
        pgs.push_back(std::move(p));
    }
    rep["pages"] = std::move(pgs);
    SpectralPage inf = infinity_page(c);
    Json entries = Json::array();
    for (const auto& [sn, d] : inf.dims) {
        Json e;
        e["s"] = sn.first;
        e["n"] = sn.second;
        e["dim"] = d;
        entries.push_back(std::move(e));
    }
    rep["e_infinity"] = std::move(entries);
    rep["converges"] = convergence_check(c);
    return rep;
}

Json run_pi(const Options& o) {
    Json j = load(o);
    std::string kind = json_kind(j);
    WeightConvention conv = convention_of(o);
    Dga a;
    bool from_gysin = false;
    if (kind == "dga") {
        a = dga_from_json(j);
    } else if (kind == "gysin") {
        a = e2_builder(gysin_from_json(j));
        from_gysin = true;
    } else {
        fail(ErrorKind::Parse, "pi expects a dga or gysin input");
    }
    size_t cap = o.truncate > 0 ? static_cast<size_t>(o.truncate) : 6;
    auto weight_json = [&](const PiReport& r, int n) {
        Json w = Json::array();
        for (const auto& [wt, d] : r.weight_ranks) {
            Json e;
            e["weight"] = conv == WeightConvention::APlus2B ? convention_weight(conv, wt, n)
                                                            : wt;
            e["rank"] = d;
            w.push_back(std::move(e));
        }
        return w;
    };
    if (o.degree > 0) {
        PiReport r = pi_n(a, static_cast<size_t>(o.degree), cap);
        Json rep;
        rep["degree"] = o.degree;
        rep["rank"] = r.rank;
        if (!r.weight_ranks.empty())
            rep["weights"] = weight_json(r, o.degree);
        rep["stable"] = r.stable;
        rep["hurewicz_rank"] = r.hurewicz_rank;
        rep["h_dual_dim"] = r.hn_dual_dim;
        rep["abelian_bracket"] = r.self_bracket_trivial;
        if (from_gysin)
            rep["weight_convention"] = convention_label(conv);
        return rep;
    }
    Json rep;
    bool stable = true;
    for (int n = 1; n <= 4; ++n) {
        PiReport r = pi_n(a, static_cast<size_t>(n), cap);
        stable = stable && r.stable;
        if (r.rank == 0)
            continue;
        std::string key = "pi" + std::to_string(n);
        rep[key] = r.rank;
        if (!r.weight_ranks.empty())
            rep[key + "_weights"] = weight_json(r, n);
    }
    rep["stable"] = stable;
    if (from_gysin)
        rep["weight_convention"] = convention_label(conv);
    return rep;
}

Json run_th(const Options& o) {
    Json j = load(o);
    require(json_kind(j) == "codga", ErrorKind::Parse, "th expects a codga input");
    CosimplicialDga c = codga_from_json(j);
    // Each simplicial level past 0 can contribute one extra form degree.
    int top = 0;
    for (const Dga& level : c.levels)
        top = std::max(top, level.top());
    top += static_cast<int>(c.levels.size()) - 1;
    size_t poly_cap = o.truncate > 0 ? static_cast<size_t>(o.truncate) : 4;
    ThomWhitneyResult r = thom_whitney(c, top, poly_cap);
    Json rep;
    Json dims = Json::array();
    for (const auto& [n, d] : r.algebra.dims) {
        Json e;
        e["n"] = n;
        e["dim"] = d;
        dims.push_back(std::move(e));
    }
    rep["dims"] = std::move(dims);
    rep["stable"] = r.stable;
    rep["algebra"] = dga_to_json(r.algebra);
    return rep;
}

Json run_defcone(const Options& o) {
    Json j = load(o);
    require(json_kind(j) == "defcone", ErrorKind::Parse, "defcone expects a defcone input");
    DeformationCone cone = deformation_cone(defcone_from_json(j));
    Json rep;
    rep["tangent_dim"] = cone.tangent_dim;
    rep["linear_solution_dim"] = cone.linear_solution_dim;
    rep["quadratic_trivial"] = cone.quadratic_trivial;
    Json eqs = Json::array();
    for (const QuadraticEquation& e : cone.equations)
        eqs.push_back(e.label);
    rep["equations"] = std::move(eqs);
    rep["group_action"] = cone.group_action;
    return rep;
}

void emit(const Options& o, const Json& report) {
    require(o.format == "json" || o.format == "text", ErrorKind::Parse,
            "--format must be json or text");
    std::string text = render_report(report, o.format == "text");
    if (o.out.empty())
        std::cout << text;
    else
        write_text_file(o.out, text);
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse:
        case ErrorKind::Shape:
            return 2;
        case ErrorKind::Invariant:
            return 3;
        case ErrorKind::Reject:
            return 4;
        case ErrorKind::Instability:
            return 5;
        case ErrorKind::Internal:
            return 1;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for mixed Hodge and twistor structures"};
    app.require_subcommand(1);

    Options o;
    Json (*runner)(const Options&) = nullptr;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--in", o.in, "input file");
        sub->add_option("--out", o.out, "write the report here instead of stdout");
        sub->add_option("--format", o.format, "json|text");
    };

    CLI::App* validate = app.add_subcommand("validate", "check an object against its laws");
    common(validate);

    CLI::App* split = app.add_subcommand("split", "canonical splitting of a mixed structure");
    common(split);

    CLI::App* convert = app.add_subcommand("convert", "translate between encodings");
    common(convert);
    convert->add_option("--from", o.from, "input kind");
    convert->add_option("--to", o.to, "output kind");
    convert->add_option("--endpoints", o.endpoints, "0i|mii integral frame");

    CLI::App* ext = app.add_subcommand("ext", "hom and ext groups of a pair");
    common(ext);
    ext->add_option("--rhs", o.rhs, "second input file");

    CLI::App* rees = app.add_subcommand("rees", "Rees modules of the filtrations");
    common(rees);

    CLI::App* dec = app.add_subcommand("dec", "shift the filtration of a complex");
    common(dec);

    CLI::App* ss = app.add_subcommand("ss", "spectral sequence pages");
    common(ss);
    ss->add_option("--truncate", o.truncate, "last page to compute");

    CLI::App* pi = app.add_subcommand("pi", "homotopy ranks of an algebra");
    common(pi);
    pi->add_option("--truncate", o.truncate, "bracket length cap");
    pi->add_option("--degree", o.degree, "report a single degree in full");
    pi->add_option("--weight-convention", o.convention, "a+b|a2b");

    CLI::App* th = app.add_subcommand("th", "totalization of a cosimplicial algebra");
    common(th);
    th->add_option("--truncate", o.truncate, "polynomial degree cap");

    CLI::App* defcone = app.add_subcommand("defcone", "deformation cone of a pair");
    common(defcone);

    validate->callback([&] { runner = run_validate; });
    split->callback([&] { runner = run_split; });
    convert->callback([&] { runner = run_convert; });
    ext->callback([&] { runner = run_ext; });
    rees->callback([&] { runner = run_rees; });
    dec->callback([&] { runner = run_dec; });
    ss->callback([&] { runner = run_ss; });
    pi->callback([&] { runner = run_pi; });
    th->callback([&] { runner = run_th; });
    defcone->callback([&] { runner = run_defcone; });

    CLI11_PARSE(app, argc, argv);

    try {
        emit(o, runner(o));
    } catch (const hodge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
