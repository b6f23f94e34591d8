#include "delta/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "delta/errors.hpp"

namespace delta {

namespace {

std::vector<char> mask(const IndexSet& s, int n) {
    std::vector<char> m(n, 0);
    for (int i : s) m[i - 1] = 1;
    return m;
}

std::vector<int> word_from_steps(const std::string& s) {
    std::vector<int> w;
    int x = 0, y = 0;
    for (char c : s) {
        if (c == 'N') w.push_back(y - x), ++y;
        else ++x;
    }
    return w;
}

}  // namespace

DecoratedDyckPath sweep(const DecoratedDyckPath& d) {
    if (d.flavor != Flavor::DDD) throw FlavorMismatch("sweep takes a ddd object");
    validate(d);
    const auto& w = d.path.area_word;
    const int N = d.path.size();
    auto zm = mask(d.zval, N);

    // Step sequence, each step remembering the letter that produced it.
    std::string steps;
    std::vector<int> ewhere(N, -1), nwhere(N, -1);
    for (int i = 0; i < N; ++i)
        if (w[i] == 0 && !zm[i]) nwhere[i] = static_cast<int>(steps.size()), steps += 'N';
    int mx = N ? *std::max_element(w.begin(), w.end()) : 0;
    for (int lv = 0; lv <= mx; ++lv) {
        for (int i = 0; i < N; ++i) {
            if (w[i] == lv && !zm[i]) {
                steps += 'E', ewhere[i] = static_cast<int>(steps.size()) - 1;
            } else if (w[i] == lv && zm[i]) {
                nwhere[i] = static_cast<int>(steps.size());
                steps += "NE";
                ewhere[i] = static_cast<int>(steps.size()) - 1;
            } else if (w[i] == lv + 1 && !zm[i]) {
                steps += 'N', nwhere[i] = static_cast<int>(steps.size()) - 1;
            }
        }
    }

    std::vector<int> col_of(steps.size()), row_of(steps.size(), -1);
    std::vector<std::vector<int>> colrows(N + 1);
    int x = 0, y = 0;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        col_of[k] = x;
        if (steps[k] == 'E') ++x;
        else row_of[k] = y, colrows[x].push_back(y), ++y;
    }

    DecoratedDyckPath e;
    e.flavor = Flavor::DDB_TRIANGLE;
    e.path = DyckPath{word_from_steps(steps)};
    std::set<int> zv2, dp2, ff;
    for (int i : d.zval) zv2.insert(colrows[col_of[nwhere[i - 1]]].front() + 1);
    for (int p : d.dpeak) ff.insert(col_of[ewhere[p - 1]] + 1);
    for (int p : d.drise) dp2.insert(colrows[col_of[nwhere[p - 1]]].back() + 1);
    e.zval.assign(zv2.begin(), zv2.end());
    e.drise.assign(ff.begin(), ff.end());
    e.dpeak.assign(dp2.begin(), dp2.end());
    return e;
}

DecoratedDyckPath sweep_inv(const DecoratedDyckPath& e) {
    if (e.flavor != Flavor::DDB_TRIANGLE) throw FlavorMismatch("sweep_inv takes a ddb_triangle object");
    validate(e);
    const auto& w2 = e.path.area_word;
    const int N = e.path.size();
    if (N == 0) return DecoratedDyckPath{{}, {}, {}, {}, Flavor::DDD};
    auto zm = mask(e.zval, N);

    // Rows of each column.
    std::vector<std::vector<int>> cols(1);
    {
        int x = 0;
        for (int i = 0; i < N; ++i) {
            int xi = i - w2[i];
            while (x < xi) cols.emplace_back(), ++x;
            cols[x].push_back(i);
        }
        while (static_cast<int>(cols.size()) < N) cols.emplace_back();
    }
    const int r = static_cast<int>(cols[0].size());

    struct Tok {
        char kind;  // 'E', 'N', 'Z'
        int col;
    };
    std::vector<Tok> toks{{'E', 0}};
    for (int c = 1; c < N; ++c) {
        const auto& rows = cols[c];
        if (!rows.empty() && zm[rows[0]]) {
            for (std::size_t t = 1; t < rows.size(); ++t) toks.push_back({'N', c});
            toks.push_back({'Z', c});
        } else {
            for (std::size_t t = 0; t < rows.size(); ++t) toks.push_back({'N', c});
            toks.push_back({'E', c});
        }
    }

    // Stage lv holds cnt E tokens (one per letter of value lv) and the
    // non-E tokens that follow them.
    std::vector<std::vector<Tok>> stages;
    std::size_t pos = 0;
    int cnt = r;
    while (pos < toks.size()) {
        if (cnt == 0) throw NotInImage("letters left over after the last level");
        std::vector<Tok> st;
        int seen = 0;
        while (pos < toks.size()) {
            if (toks[pos].kind == 'E') {
                if (seen == cnt) break;
                ++seen;
            }
            st.push_back(toks[pos++]);
        }
        if (seen != cnt) throw NotInImage("level does not close");
        cnt = static_cast<int>(std::count_if(st.begin(), st.end(), [](const Tok& t) { return t.kind == 'N'; }));
        stages.push_back(std::move(st));
    }
    if (cnt != 0) throw NotInImage("unmatched letters at the top level");

    struct Obj {
        int value;
        bool z;
        int ecol = -1, ncol = -1;
    };
    std::vector<Obj> objs;
    std::vector<int> W, carry;
    for (const auto& t : stages[0]) {
        if (t.kind == 'N') {
            objs.push_back({1, false, -1, t.col});
            carry.push_back(static_cast<int>(objs.size()) - 1);
        } else {
            objs.push_back({0, t.kind == 'Z', t.col, -1});
        }
        W.push_back(static_cast<int>(objs.size()) - 1);
    }
    for (std::size_t lv = 1; lv < stages.size(); ++lv) {
        std::size_t next = 0;
        std::vector<int> newcarry;
        std::map<int, std::vector<int>> blocks;
        int cur = -1;
        for (const auto& t : stages[lv]) {
            if (t.kind == 'E') {
                if (next >= carry.size()) throw NotInImage("too many letters at a level");
                cur = carry[next++];
                objs[cur].ecol = t.col;
                blocks[cur];
                continue;
            }
            if (cur < 0) throw NotInImage("token before any letter of its level");
            if (t.kind == 'Z') {
                objs.push_back({static_cast<int>(lv), true, t.col, -1});
            } else {
                objs.push_back({static_cast<int>(lv) + 1, false, -1, t.col});
                newcarry.push_back(static_cast<int>(objs.size()) - 1);
            }
            blocks[cur].push_back(static_cast<int>(objs.size()) - 1);
        }
        std::vector<int> NW;
        for (int o : W) {
            NW.push_back(o);
            auto it = blocks.find(o);
            if (it != blocks.end()) NW.insert(NW.end(), it->second.begin(), it->second.end());
        }
        W = std::move(NW);
        carry = std::move(newcarry);
    }
    if (static_cast<int>(W.size()) != N) throw NotInImage("letter count mismatch");

    DecoratedDyckPath d;
    d.flavor = Flavor::DDD;
    std::map<int, int> byE, firstN;
    for (int k = 0; k < N; ++k) {
        const Obj& o = objs[W[k]];
        d.path.area_word.push_back(o.value);
        if (o.z) d.zval.push_back(k + 1);
        if (!o.z && o.ecol >= 0) byE[o.ecol] = k;
        if (o.ncol >= 0) firstN.try_emplace(o.ncol, k);
    }
    std::set<int> dp, dr;
    for (int c : e.drise) {
        auto it = byE.find(c - 1);
        if (it == byE.end()) throw NotInImage("fake fall without a letter");
        dp.insert(it->second + 1);
    }
    for (int row : e.dpeak) {
        int c = (row - 1) - w2[row - 1];
        auto it = firstN.find(c);
        if (it == firstN.end()) throw NotInImage("decorated peak without a letter");
        dr.insert(it->second + 1);
    }
    d.dpeak.assign(dp.begin(), dp.end());
    d.drise.assign(dr.begin(), dr.end());
    try {
        validate(d);
        if (sweep(d) == e) return d;
    } catch (const MalformedAreaWord&) {
    } catch (const InvalidDecoration&) {
    }
    throw NotInImage("object is not in the image of sweep");
}

namespace {

// Identity of a polyomino step: columns as x >= 0, rows as -(y+1); the
// artificial 0 is kArt.
constexpr int kArt = 1 << 30;

struct ZetaImage {
    PolyWord word;
    std::vector<int> ident;
};

ZetaImage zeta_core(const PolyWord& w) {
    PolyPaths pp = poly_paths(w);
    PolyBounceLabels bl = poly_bounce_labels(w);
    using Item = std::pair<Letter, int>;
    auto seq = [&](const std::string& path) {
        std::vector<Item> out;
        int x = 0, y = 0;
        for (char s : path) {
            if (s == 'E') out.push_back({bl.col[x], x}), ++x;
            else out.push_back({bl.row[y], -(y + 1)}), ++y;
        }
        return out;
    };
    auto rs = seq(pp.red), gs = seq(pp.green);
    int maxk = 0;
    for (const auto& it : rs) maxk = std::max(maxk, it.first.key());
    for (const auto& it : gs) maxk = std::max(maxk, it.first.key());

    std::vector<Item> W{{Letter{0, false}, kArt}};
    for (const auto& it : rs)
        if (it.first.key() <= 1) W.push_back(it);
    for (int b = 1; b <= maxk; ++b) {
        const auto& src = b % 2 == 0 ? rs : gs;
        std::map<int, std::vector<Item>> blocks;
        int cur = kArt - 1;  // no base yet
        for (const auto& it : src) {
            int k = it.first.key();
            if (k == b) {
                cur = it.second;
                blocks[cur];
            } else if (k == b + 1) {
                if (cur == kArt - 1) throw NotInImage("bounce label precedes its base letter");
                blocks[cur].push_back(it);
            }
        }
        std::vector<Item> NW;
        for (const auto& it : W) {
            NW.push_back(it);
            if (it.first.key() != b) continue;
            auto f = blocks.find(it.second);
            if (f != blocks.end()) NW.insert(NW.end(), f->second.begin(), f->second.end());
        }
        W = std::move(NW);
    }
    ZetaImage z;
    for (const auto& it : W) z.word.push_back(it.first), z.ident.push_back(it.second);
    return z;
}

}  // namespace

ReducedPolyomino zeta(const ReducedPolyomino& p) {
    if (p.flavor != PolyFlavor::CIRC) throw FlavorMismatch("zeta takes a circ polyomino");
    validate(p);
    ZetaImage z = zeta_core(p.word);
    ReducedPolyomino q;
    q.flavor = PolyFlavor::STAR;
    q.word = z.word;
    for (std::size_t i = 0; i < z.ident.size(); ++i) {
        int id = z.ident[i];
        if (id == kArt) continue;
        if (id >= 0 && std::binary_search(p.gp.begin(), p.gp.end(), id + 1)) q.ur.push_back(static_cast<int>(i) + 1);
        if (id < 0 && std::binary_search(p.rv.begin(), p.rv.end(), -id)) q.br.push_back(static_cast<int>(i) + 1);
    }
    return q;
}

ReducedPolyomino zeta_inv(const ReducedPolyomino& q) {
    if (q.flavor != PolyFlavor::STAR) throw FlavorMismatch("zeta_inv takes a star polyomino");
    validate(q);
    const PolyWord& w = q.word;
    PolyPaths pp;
    int zeros = 0, maxv = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == Letter{0, false}) ++zeros;
        maxv = std::max(maxv, w[i].v);
    }
    pp.green.assign(zeros, 'E');
    for (int v = 0; v <= maxv; ++v) {
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (w[i].v == v) pp.red += w[i].barred ? 'N' : 'E';
            if (w[i] == Letter{v, true} || w[i] == Letter{v + 1, false}) pp.green += w[i].barred ? 'N' : 'E';
        }
    }
    ReducedPolyomino p;
    p.flavor = PolyFlavor::CIRC;
    try {
        p.word = poly_area_word(pp);
        ZetaImage z = zeta_core(p.word);
        if (z.word != w) throw NotInImage("zeta does not reproduce the word");
        for (int i : q.ur) {
            if (z.ident[i - 1] < 0 || z.ident[i - 1] == kArt) throw NotInImage("unbarred rise not on a column");
            p.gp.push_back(z.ident[i - 1] + 1);
        }
        for (int i : q.br) {
            if (z.ident[i - 1] >= 0) throw NotInImage("barred rise not on a row");
            p.rv.push_back(-z.ident[i - 1]);
        }
        std::sort(p.gp.begin(), p.gp.end());
        std::sort(p.rv.begin(), p.rv.end());
        validate(p);
        if (zeta(p) == q) return p;
    } catch (const MalformedAreaWord&) {
    } catch (const InvalidDecoration&) {
    }
    throw NotInImage("object is not in the image of zeta");
}

DecoratedDyckPath poly_to_dyck(const ReducedPolyomino& p) {
    if (p.flavor != PolyFlavor::STAR) throw FlavorMismatch("poly_to_dyck takes a star polyomino");
    validate(p);
    const int L = static_cast<int>(p.word.size());
    std::vector<char> um(L, 0), bm(L, 0);
    for (int i : p.ur) um[i - 1] = 1;
    for (int i : p.br) bm[i - 1] = 1;
    DecoratedDyckPath d;
    d.flavor = Flavor::DDD;
    int k = 0;
    for (int i = 0; i < L; ++i) {
        if (bm[i]) continue;
        ++k;
        const Letter l = p.word[i];
        d.path.area_word.push_back(l.v);
        if (l.barred) {
            d.zval.push_back(k);
            continue;
        }
        if (um[i]) d.drise.push_back(k);
        if (!(i + 1 < L && bm[i + 1])) d.dpeak.push_back(k);
    }
    return d;
}

ReducedPolyomino dyck_to_poly(const DecoratedDyckPath& d) {
    if (d.flavor != Flavor::DDD) throw FlavorMismatch("dyck_to_poly takes a ddd object");
    try {
        validate(d);
    } catch (const MalformedAreaWord& e) {
        throw NotInImage(e.what());
    } catch (const InvalidDecoration& e) {
        throw NotInImage(e.what());
    }
    const auto& w = d.path.area_word;
    const int N = d.path.size();
    auto zm = mask(d.zval, N), rm = mask(d.drise, N), pm = mask(d.dpeak, N);
    ReducedPolyomino p;
    p.flavor = PolyFlavor::STAR;
    for (int i = 0; i < N; ++i) {
        if (zm[i]) {
            p.word.push_back({w[i], true});
            continue;
        }
        p.word.push_back({w[i], false});
        if (rm[i]) p.ur.push_back(static_cast<int>(p.word.size()));
        if (!pm[i]) {
            p.word.push_back({w[i], true});
            p.br.push_back(static_cast<int>(p.word.size()));
        }
    }
    try {
        validate(p);
        if (poly_to_dyck(p) == d) return p;
    } catch (const MalformedAreaWord&) {
    } catch (const InvalidDecoration&) {
    }
    throw NotInImage("object is not in the image of poly_to_dyck");
}

}  // namespace delta
