#include "delta/polyomino.hpp"

#include <algorithm>

#include "combinations.hpp"
#include "delta/errors.hpp"

namespace delta {

Letter succ(Letter l) { return l.barred ? Letter{l.v + 1, false} : Letter{l.v, true}; }

std::string to_string(Letter l) { return std::to_string(l.v) + (l.barred ? "b" : ""); }

std::string to_string(const PolyWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + to_string(w[i]);
    return s;
}

std::string flavor_name(PolyFlavor f) { return f == PolyFlavor::STAR ? "star" : "circ"; }

PolyFlavor poly_flavor_from_name(const std::string& s) {
    if (s == "star") return PolyFlavor::STAR;
    if (s == "circ") return PolyFlavor::CIRC;
    throw ParseError("unknown polyomino flavor '" + s + "'");
}

int poly_m(const PolyWord& w) {
    int c = 0;
    for (auto l : w) c += !l.barred;
    return c - 1;
}

int poly_n(const PolyWord& w) {
    int c = 0;
    for (auto l : w) c += l.barred;
    return c;
}

void validate_word(const PolyWord& w) {
    if (w.empty() || w[0] != Letter{0, false}) throw MalformedAreaWord("polyomino word must start with an unbarred 0");
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i].v < 0) throw MalformedAreaWord("negative letter");
        if (w[i].key() > succ(w[i - 1]).key()) throw MalformedAreaWord("letter exceeds the successor of its predecessor");
    }
}

namespace {

struct Parsed {
    std::string red, green;
};

// Letters are read along anti-diagonals: d is the gap between the paths.
Parsed parse(const PolyWord& w) {
    Parsed p;
    int d = 0;
    const std::size_t L = w.size();
    std::size_t i = 1;
    while (i < L) {
        const Letter l = w[i];
        for (; d > l.v; --d) p.red += 'E', p.green += 'N';
        if (d < l.v) throw MalformedAreaWord("letter jumps above the current gap");
        if (l.barred) {
            if (i + 1 < L && w[i + 1] == Letter{l.v + 1, false}) {
                p.red += 'N', p.green += 'E';
                ++d;
                i += 2;
            } else {
                p.red += 'N', p.green += 'N';
                ++i;
            }
        } else {
            p.red += 'E', p.green += 'E';
            ++i;
        }
    }
    for (; d > 0; --d) p.red += 'E', p.green += 'N';
    return p;
}

std::vector<char> mask(const IndexSet& s, int n) {
    std::vector<char> m(n, 0);
    for (int i : s) m[i - 1] = 1;
    return m;
}

bool subset_of(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void check_index_set(const IndexSet& s, int lo, int hi, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < lo || s[i] > hi) throw InvalidDecoration(std::string(what) + " index out of range");
        if (i && s[i] <= s[i - 1]) throw InvalidDecoration(std::string(what) + " must be sorted and distinct");
    }
}

struct Bounce {
    std::vector<Letter> col, row;
    PolyWord path;
};

Bounce run_bounce(const PolyWord& w) {
    Parsed pp = parse(w);
    const int m = poly_m(w), n = poly_n(w);
    // Starting points of green vertical steps and red horizontal steps.
    std::vector<std::vector<char>> gv(m + 1, std::vector<char>(n + 1, 0)), rh = gv;
    int x = 0, y = 0;
    for (char s : pp.green) {
        if (s == 'N') gv[x][y] = 1, ++y;
        else ++x;
    }
    x = y = 0;
    for (char s : pp.red) {
        if (s == 'E') rh[x][y] = 1, ++x;
        else ++y;
    }
    Bounce b;
    b.col.assign(m, {});
    b.row.assign(n, {});
    x = y = 0;
    for (int seg = 0; x != m || y != n; ++seg) {
        Letter lab{seg / 2, seg % 2 == 1};
        if (seg % 2 == 0) {
            while (x < m && !gv[x][y]) b.col[x++] = lab, b.path.push_back(lab);
        } else {
            while (y < n && !rh[x][y]) b.row[y++] = lab, b.path.push_back(lab);
        }
        if (seg > 4 * (m + n) + 4) throw MalformedAreaWord("bounce path does not terminate");
    }
    return b;
}

}  // namespace

PolyPaths poly_paths(const PolyWord& w) {
    validate_word(w);
    auto p = parse(w);
    return {p.red, p.green};
}

PolyWord poly_area_word(const PolyPaths& p) {
    if (p.red.size() != p.green.size()) throw MalformedAreaWord("paths of different length");
    auto count = [](const std::string& s, char c) { return std::count(s.begin(), s.end(), c); };
    if (count(p.red, 'E') != count(p.green, 'E') || count(p.red, 'N') != count(p.green, 'N') ||
        count(p.red, 'E') + count(p.red, 'N') != static_cast<long>(p.red.size()))
        throw MalformedAreaWord("paths must be N/E words with the same endpoint");
    PolyWord w{{0, false}};
    int d = 0;
    for (std::size_t i = 0; i < p.red.size(); ++i) {
        char r = p.red[i], g = p.green[i];
        if (r == 'N') w.push_back({d, true});
        if (r == 'N' && g == 'E') ++d;
        if (r == 'E' && g == 'N') --d;
        if (d < 0) throw MalformedAreaWord("red path goes below the green path");
        if (g == 'E') w.push_back({d, false});
    }
    if (poly_paths(w) != p) throw MalformedAreaWord("paths do not form a reduced polyomino");
    return w;
}

PolyFeatures poly_features(const PolyWord& w) {
    Parsed pp = parse(w);
    PolyFeatures f;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] != succ(w[i - 1])) continue;
        (w[i].barred ? f.br : f.ur).push_back(static_cast<int>(i) + 1);
    }
    int x = 0, y = 0;
    for (std::size_t k = 0; k < pp.red.size(); ++k) {
        if (pp.red[k] == 'N') {
            if (k == 0 || pp.red[k - 1] == 'E') f.rv.push_back(y + 1);
            ++y;
        } else {
            ++x;
        }
    }
    x = y = 0;
    for (std::size_t k = 0; k < pp.green.size(); ++k) {
        if (pp.green[k] == 'E') {
            if (k > 0 && pp.green[k - 1] == 'N') f.gp.push_back(x + 1);
            ++x;
        } else {
            ++y;
        }
    }
    return f;
}

PolyBounceLabels poly_bounce_labels(const PolyWord& w) {
    auto b = run_bounce(w);
    return {b.col, b.row};
}

PolyWord poly_bounce_word(const PolyWord& w) { return run_bounce(w).path; }

void validate(const ReducedPolyomino& p) {
    validate_word(p.word);
    const int m = poly_m(p.word), n = poly_n(p.word), L = static_cast<int>(p.word.size());
    check_index_set(p.ur, 1, L, "ur");
    check_index_set(p.br, 1, L, "br");
    check_index_set(p.gp, 1, std::max(m, 0), "gp");
    check_index_set(p.rv, 1, n, "rv");
    if (p.flavor == PolyFlavor::STAR && (!p.gp.empty() || !p.rv.empty()))
        throw FlavorMismatch("star polyominoes carry rise decorations only");
    if (p.flavor == PolyFlavor::CIRC && (!p.ur.empty() || !p.br.empty()))
        throw FlavorMismatch("circ polyominoes carry peak/valley decorations only");
    auto f = poly_features(p.word);
    if (!subset_of(p.ur, f.ur)) throw InvalidDecoration("ur entry is not an unbarred rise");
    if (!subset_of(p.br, f.br)) throw InvalidDecoration("br entry is not a barred rise");
    if (!subset_of(p.gp, f.gp)) throw InvalidDecoration("gp entry is not a green peak");
    if (!subset_of(p.rv, f.rv)) throw InvalidDecoration("rv entry is not a red valley");
}

int poly_area(const ReducedPolyomino& p) {
    const int L = static_cast<int>(p.word.size());
    auto um = mask(p.ur, L), bm = mask(p.br, L);
    int a = 0;
    for (int i = 0; i < L; ++i)
        if (!um[i] && !bm[i]) a += p.word[i].v;
    return a;
}

int poly_bounce(const ReducedPolyomino& p) {
    if (p.flavor == PolyFlavor::STAR && (!p.ur.empty() || !p.br.empty()))
        throw FlavorMismatch("bounce is defined for circ decorations");
    auto b = run_bounce(p.word);
    auto gm = mask(p.gp, static_cast<int>(b.col.size())), rm = mask(p.rv, static_cast<int>(b.row.size()));
    int s = 0;
    for (std::size_t c = 0; c < b.col.size(); ++c)
        if (!gm[c]) s += b.col[c].v;
    for (std::size_t r = 0; r < b.row.size(); ++r)
        if (!rm[r]) s += b.row[r].v;
    return s;
}

int poly_dinv(const PolyWord& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == succ(w[j])) ++c;
    return c;
}

int poly_r(const ReducedPolyomino& p) {
    if (p.flavor == PolyFlavor::STAR) {
        return static_cast<int>(std::count(p.word.begin(), p.word.end(), Letter{0, false}));
    }
    auto b = run_bounce(p.word);
    return 1 + static_cast<int>(std::count(b.col.begin(), b.col.end(), Letter{0, false}));
}

std::pair<int, int> poly_qt_stats(const ReducedPolyomino& p) {
    if (p.flavor == PolyFlavor::STAR) return {poly_dinv(p.word), poly_area(p)};
    return {poly_area(p), poly_bounce(p)};
}

void for_each_rp_word(int m, int n, const std::function<void(const PolyWord&)>& f) {
    if (m < 0 || n < 0) return;
    PolyWord w{{0, false}};
    auto rec = [&](auto&& self, int u, int b) -> void {
        if (u == m && b == n) {
            f(w);
            return;
        }
        int top = succ(w.back()).key();
        for (int kk = 0; kk <= top; ++kk) {
            Letter l{kk / 2, kk % 2 == 1};
            if (l.barred ? b == n : u == m) continue;
            w.push_back(l);
            self(self, u + !l.barred, b + l.barred);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
}

void for_each_rp_on_word(const PolyWord& w, std::optional<int> r, std::optional<int> k, std::optional<int> j,
                         PolyFlavor f, const std::function<void(const ReducedPolyomino&)>& cb) {
    ReducedPolyomino P;
    P.word = w;
    P.flavor = f;
    if (r && poly_r(P) != *r) return;
    auto ft = poly_features(w);
    const IndexSet& first = f == PolyFlavor::STAR ? ft.ur : ft.gp;
    const IndexSet& second = f == PolyFlavor::STAR ? ft.br : ft.rv;
    auto sizes = [](std::optional<int> v, int hi) {
        std::vector<int> s;
        if (v) {
            if (*v >= 0 && *v <= hi) s.push_back(*v);
        } else {
            for (int i = 0; i <= hi; ++i) s.push_back(i);
        }
        return s;
    };
    for (int kk : sizes(k, static_cast<int>(first.size())))
        for_each_combination(first, kk, [&](const IndexSet& a) {
            (f == PolyFlavor::STAR ? P.ur : P.gp) = a;
            for (int jj : sizes(j, static_cast<int>(second.size())))
                for_each_combination(second, jj, [&](const IndexSet& b) {
                    (f == PolyFlavor::STAR ? P.br : P.rv) = b;
                    cb(P);
                });
        });
}

void for_each_rp(int m, std::optional<int> r, int n, std::optional<int> k, std::optional<int> j, PolyFlavor f,
                 const std::function<void(const ReducedPolyomino&)>& cb) {
    for_each_rp_word(m, n, [&](const PolyWord& w) { for_each_rp_on_word(w, r, k, j, f, cb); });
}

std::vector<ReducedPolyomino> enumerate_rp(int m, std::optional<int> r, int n, std::optional<int> k,
                                           std::optional<int> j, PolyFlavor f) {
    std::vector<ReducedPolyomino> out;
    for_each_rp(m, r, n, k, j, f, [&](const ReducedPolyomino& p) { out.push_back(p); });
    return out;
}

QTPoly rp_qt(int m, int r, int n, int k, int j, PolyFlavor f) {
    QTPoly s;
    for_each_rp(m, r, n, k, j, f, [&](const ReducedPolyomino& p) {
        auto [a, b] = poly_qt_stats(p);
        s.add_term(a, b, 1);
    });
    return s;
}

std::map<std::tuple<int, int, int>, QTPoly> rp_qt_table(int m, int n, PolyFlavor f) {
    std::map<std::tuple<int, int, int>, QTPoly> t;
    for_each_rp(m, std::nullopt, n, std::nullopt, std::nullopt, f, [&](const ReducedPolyomino& p) {
        auto [a, b] = poly_qt_stats(p);
        int k = static_cast<int>((f == PolyFlavor::STAR ? p.ur : p.gp).size());
        int j = static_cast<int>((f == PolyFlavor::STAR ? p.br : p.rv).size());
        t[{poly_r(p), k, j}].add_term(a, b, 1);
    });
    return t;
}

nlohmann::json to_json(const ReducedPolyomino& p) {
    auto w = nlohmann::json::array();
    for (auto l : p.word) w.push_back({l.v, l.barred});
    return {{"kind", "polyomino"},
            {"flavor", flavor_name(p.flavor)},
            {"word", w},
            {"dec", {{"ur", p.ur}, {"br", p.br}, {"gp", p.gp}, {"rv", p.rv}}}};
}

ReducedPolyomino polyomino_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("kind", "") != "polyomino")
        throw ParseError("expected an object with kind \"polyomino\"");
    ReducedPolyomino p;
    p.flavor = poly_flavor_from_name(j.value("flavor", "star"));
    if (!j.contains("word") || !j["word"].is_array()) throw ParseError("missing field 'word'");
    for (const auto& l : j["word"]) {
        if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() ||
            !(l[1].is_boolean() || l[1].is_number_integer()))
            throw ParseError("word letters must be [value, barred]");
        bool barred = l[1].is_boolean() ? l[1].get<bool>() : l[1].get<int>() != 0;
        p.word.push_back({l[0].get<int>(), barred});
    }
    if (j.contains("dec")) {
        const auto& d = j["dec"];
        auto get = [&](const char* key) {
            IndexSet s;
            if (!d.contains(key)) return s;
            for (const auto& v : d[key]) {
                if (!v.is_number_integer()) throw ParseError("decoration indices must be integers");
                s.push_back(v.get<int>());
            }
            return s;
        };
        p.ur = get("ur");
        p.br = get("br");
        p.gp = get("gp");
        p.rv = get("rv");
    }
    validate(p);
    return p;
}

}  // namespace delta
