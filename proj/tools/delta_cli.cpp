// delta: enumerate decorated Dyck paths and reduced polyominoes, evaluate the
// F recursion, run the bijections and the verification suites.
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "delta/bijections.hpp"
#include "delta/dyck.hpp"
#include "delta/errors.hpp"
#include "delta/polyomino.hpp"
#include "delta/recursion.hpp"
#include "delta/verify.hpp"
#include "json.hpp"

using namespace delta;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2;

struct Globals {
    int jobs = 1;
    bool pretty = false;
    std::string out;
};

std::ostream* open_out(const std::string& path, std::ofstream& f) {
    if (path.empty() || path == "-") return &std::cout;
    f.open(path);
    if (!f) throw DomainError("cannot open output file '" + path + "'");
    return &f;
}

void print_poly(std::ostream& os, const QTPoly& p, bool pretty) {
    if (pretty) os << p.pretty() << '\n';
    else os << p.to_json().dump() << '\n';
}

json read_input(const std::string& spec) {
    std::string text;
    if (spec == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) {
        text = spec;
    } else {
        std::ifstream f(spec);
        if (!f) throw ParseError("cannot read input '" + spec + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json dyck_stats(const DecoratedDyckPath& d) {
    Features f = features(d.path);
    json j = {{"object", to_json(d)},
              {"size", d.path.size()},
              {"r", family_r(d)},
              {"area", area(d)},
              {"features", {{"rise", f.rise}, {"val", f.val}, {"peak", f.peak}, {"fall", f.fall}}}};
    if (d.flavor == Flavor::DDD) {
        j["dinv"] = dinv_decorated(d);
        try {
            LabelledDyckPath L = shuffle_labelling(d);
            j["shuffle_labels"] = L.labels;
            j["dinv_reading_word"] = dinv_reading_word(L);
        } catch (const NoValidLabelling&) {
        }
    } else {
        BounceData b = bounce_data(d);
        j["bounce"] = b.value;
        j["bounce_word"] = b.word;
        j["bounce_cancelled"] = b.cancelled;
        j["fake_falls"] = fake_falls(d.path, d.zval);
    }
    return j;
}

json labelled_stats(const LabelledDyckPath& d) {
    return {{"object", to_json(d)}, {"area", area(d)}, {"dinv", dinv_labelled(d)}};
}

json poly_stats(const ReducedPolyomino& p) {
    PolyPaths pp = poly_paths(p.word);
    PolyFeatures f = poly_features(p.word);
    json bw = json::array();
    for (auto l : poly_bounce_word(p.word)) bw.push_back({l.v, l.barred});
    json j = {{"object", to_json(p)},
              {"m", poly_m(p.word)},
              {"n", poly_n(p.word)},
              {"red", pp.red},
              {"green", pp.green},
              {"r", poly_r(p)},
              {"area", poly_area(p)},
              {"dinv", poly_dinv(p.word)},
              {"bounce_word", bw},
              {"features", {{"ur", f.ur}, {"br", f.br}, {"gp", f.gp}, {"rv", f.rv}}}};
    if (p.flavor == PolyFlavor::CIRC) j["bounce"] = poly_bounce(p);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decorated Dyck paths, reduced polyominoes and the F recursion"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--jobs", g.jobs, "worker threads for verification")->check(CLI::PositiveNumber);
    app.add_flag("--pretty", g.pretty, "human-readable polynomials and indented JSON");
    app.fallthrough();

    // enumerate
    auto* en = app.add_subcommand("enumerate", "list every object of a family as JSON lines");
    std::string family;
    int em = 0, en_ = 0;
    std::optional<int> er, ea, eb, ek, ej;
    bool all_r = false;
    en->add_option("family", family, "ddd | ddb_star | ddb_triangle | rp_star | rp_circ | pld")
        ->required()
        ->check(CLI::IsMember({"ddd", "ddb_star", "ddb_triangle", "rp_star", "rp_circ", "pld"}));
    en->add_option("-m", em, "zero valleys (Dyck) / width (polyomino) / zero labels (pld)")->required();
    en->add_option("-n", en_, "non-zero rows (Dyck) / height (polyomino) / positive labels (pld)")->required();
    en->add_option("-r", er, "family parameter r");
    en->add_option("-a", ea, "decorated rises / falls (Dyck), decorated rises (pld)");
    en->add_option("-b", eb, "decorated peaks (Dyck)");
    en->add_option("-k", ek, "first decoration kind (polyomino)");
    en->add_option("-j", ej, "second decoration kind (polyomino)");
    en->add_flag("--all-r", all_r, "let r range over all values");
    en->add_option("--out", g.out, "output file (default stdout)");

    // stats
    auto* st = app.add_subcommand("stats", "statistics of one object");
    std::string st_in;
    st->add_option("--input", st_in, "JSON object, file path, or - for stdin")->required();

    // fpoly
    auto* fp = app.add_subcommand("fpoly", "evaluate F_{n,k;p}^{(d,l)}");
    std::vector<int> fidx;
    fp->add_option("index", fidx, "n k p d l")->expected(5)->required();

    // schroeder
    auto* sc = app.add_subcommand("schroeder", "sum over k of F_{n,k;p}^{(d,l)}");
    std::vector<int> sidx;
    sc->add_option("index", sidx, "n l p d")->expected(4)->required();

    // bij
    auto* bj = app.add_subcommand("bij", "apply a bijection");
    std::string bname, bin;
    bool inverse = false;
    bj->add_option("name", bname, "sweep | zeta | poly-dyck")
        ->required()
        ->check(CLI::IsMember({"sweep", "zeta", "poly-dyck"}));
    bj->add_option("--input", bin, "JSON object, file path, or - for stdin")->required();
    bj->add_flag("--inverse", inverse, "apply the inverse map");

    // verify
    auto* vf = app.add_subcommand("verify", "run a verification suite and print a JSON report");
    std::string suite;
    int vmax = 6;
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    vf->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
    vf->add_option("--max-size", vmax, "size bound")->check(CLI::NonNegativeNumber);

    // export
    auto* ex = app.add_subcommand("export", "write a table of polynomials as JSON");
    std::string what;
    int xmax = 4;
    ex->add_option("table", what, "f | ddd | ddb_star | ddb_triangle | rp_star | rp_circ")
        ->required()
        ->check(CLI::IsMember({"f", "ddd", "ddb_star", "ddb_triangle", "rp_star", "rp_circ"}));
    ex->add_option("--max-size", xmax, "size bound")->check(CLI::NonNegativeNumber);
    ex->add_option("--out", g.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const int indent = g.pretty ? 2 : -1;
    try {
        if (*en) {
            std::ofstream f;
            std::ostream& os = *open_out(g.out, f);
            if (!all_r && !er && family != "pld") throw DomainError("enumerate needs -r or --all-r");
            std::optional<int> r = all_r ? std::nullopt : er;
            if (family == "pld") {
                for_each_pld(em, en_, ea.value_or(0), [&](const LabelledDyckPath& L) { os << to_json(L).dump(indent) << '\n'; });
            } else if (family.rfind("rp_", 0) == 0) {
                PolyFlavor pf = family == "rp_star" ? PolyFlavor::STAR : PolyFlavor::CIRC;
                for_each_rp(em, r, en_, ek.value_or(0), ej.value_or(0), pf,
                            [&](const ReducedPolyomino& p) { os << to_json(p).dump(indent) << '\n'; });
            } else {
                for_each_dd(em, en_, r, ea.value_or(0), eb.value_or(0), flavor_from_name(family),
                            [&](const DecoratedDyckPath& d) { os << to_json(d).dump(indent) << '\n'; });
            }
            return kOk;
        }
        if (*st) {
            json j = read_input(st_in);
            json out;
            std::string kind = j.is_object() ? j.value("kind", "") : "";
            if (kind == "polyomino") out = poly_stats(polyomino_from_json(j));
            else if (kind == "dyck" && j.contains("labels")) out = labelled_stats(labelled_from_json(j));
            else if (kind == "dyck") out = dyck_stats(decorated_from_json(j));
            else throw ParseError("input kind must be \"dyck\" or \"polyomino\"");
            std::cout << out.dump(indent) << '\n';
            return kOk;
        }
        if (*fp) {
            print_poly(std::cout, f_eval(fidx[0], fidx[1], fidx[2], fidx[3], fidx[4]), g.pretty);
            return kOk;
        }
        if (*sc) {
            print_poly(std::cout, schroeder_sum(sidx[0], sidx[1], sidx[2], sidx[3]), g.pretty);
            return kOk;
        }
        if (*bj) {
            json j = read_input(bin);
            json out;
            if (bname == "sweep") {
                auto d = decorated_from_json(j);
                out = to_json(inverse ? sweep_inv(d) : sweep(d));
            } else if (bname == "zeta") {
                auto p = polyomino_from_json(j);
                out = to_json(inverse ? zeta_inv(p) : zeta(p));
            } else if (inverse) {
                out = to_json(dyck_to_poly(decorated_from_json(j)));
            } else {
                out = to_json(poly_to_dyck(polyomino_from_json(j)));
            }
            std::cout << out.dump(indent) << '\n';
            return kOk;
        }
        if (*vf) {
            VerifyOptions o;
            o.max_size = vmax;
            o.jobs = g.jobs;
            Report r = run_suite(suite, o);
            std::cout << r.to_json().dump(indent) << '\n';
            return r.ok() ? kOk : kVerifyFailed;
        }
        if (*ex) {
            std::ofstream f;
            std::ostream& os = *open_out(g.out, f);
            json rows = json::array();
            if (what == "f") {
                for (int n = 0; n <= xmax; ++n)
                    for (int p = 0; n + p <= xmax; ++p)
                        for (int k = 0; k <= n; ++k)
                            for (int l = 0; k + l <= n; ++l)
                                for (int d = 0; d <= n + p; ++d) {
                                    QTPoly v = f_value({n, k, p, d, l});
                                    if (!v.is_zero())
                                        rows.push_back({{"n", n}, {"k", k}, {"p", p}, {"d", d}, {"l", l},
                                                        {"value", v.to_json()}});
                                }
            } else if (what.rfind("rp_", 0) == 0) {
                PolyFlavor pf = what == "rp_star" ? PolyFlavor::STAR : PolyFlavor::CIRC;
                for (int tot = 0; tot <= xmax; ++tot)
                    for (int m = 0; m <= tot; ++m)
                        for (const auto& [key, v] : rp_qt_table(m, tot - m, pf)) {
                            auto [r, k, j] = key;
                            rows.push_back({{"m", m}, {"n", tot - m}, {"r", r}, {"k", k}, {"j", j}, {"value", v.to_json()}});
                        }
            } else {
                Flavor fl = flavor_from_name(what);
                for (int tot = 0; tot <= xmax; ++tot)
                    for (int m = 0; m <= tot; ++m)
                        for (const auto& [key, v] : dd_qt_table(m, tot - m, fl)) {
                            auto [r, a, b] = key;
                            rows.push_back({{"m", m}, {"n", tot - m}, {"r", r}, {"a", a}, {"b", b}, {"value", v.to_json()}});
                        }
            }
            os << json{{"table", what}, {"max_size", xmax}, {"rows", rows}}.dump(indent) << '\n';
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
