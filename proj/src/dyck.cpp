#include "delta/dyck.hpp"

#include <algorithm>

#include "combinations.hpp"
#include "delta/errors.hpp"

namespace delta {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::DDD: return "ddd";
        case Flavor::DDB_STAR: return "ddb_star";
        case Flavor::DDB_TRIANGLE: return "ddb_triangle";
    }
    return "?";
}

Flavor flavor_from_name(const std::string& s) {
    if (s == "ddd") return Flavor::DDD;
    if (s == "ddb_star") return Flavor::DDB_STAR;
    if (s == "ddb_triangle") return Flavor::DDB_TRIANGLE;
    throw ParseError("unknown dyck flavor '" + s + "'");
}

namespace {

struct Step {
    char kind;  // 'N' or 'E'
    int x, y;
    int row;  // 0-based row of an N step, -1 for E
};

std::vector<Step> steps_of(const std::vector<int>& w) {
    const int N = static_cast<int>(w.size());
    std::vector<Step> s;
    s.reserve(2 * N);
    int x = 0;
    for (int i = 0; i < N; ++i) {
        int xi = i - w[i];
        for (; x < xi; ++x) s.push_back({'E', x, i, -1});
        s.push_back({'N', xi, i, i});
    }
    for (; x < N; ++x) s.push_back({'E', x, N, -1});
    return s;
}

std::vector<char> mask(const IndexSet& s, int n) {
    std::vector<char> m(n, 0);
    for (int i : s) m[i - 1] = 1;
    return m;
}

std::vector<int> rises0(const std::vector<int>& w) {
    std::vector<int> r;
    for (int i = 1; i < static_cast<int>(w.size()); ++i)
        if (w[i] > w[i - 1]) r.push_back(i + 1);
    return r;
}

std::vector<int> vals0(const std::vector<int>& w) {
    std::vector<int> r;
    for (int i = 1; i < static_cast<int>(w.size()); ++i)
        if (w[i] <= w[i - 1]) r.push_back(i + 1);
    return r;
}

std::vector<int> peaks0(const std::vector<int>& w) {
    std::vector<int> r;
    const int N = static_cast<int>(w.size());
    for (int i = 0; i < N; ++i)
        if (i == N - 1 || w[i + 1] <= w[i]) r.push_back(i + 1);
    return r;
}

std::vector<int> falls0(const std::vector<int>& w) {
    auto s = steps_of(w);
    std::vector<int> r;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k].kind == 'E' && (k + 1 == s.size() || s[k + 1].kind == 'E')) r.push_back(s[k].x + 1);
    return r;
}

bool subset_of(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void check_index_set(const IndexSet& s, int lo, int hi, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < lo || s[i] > hi) throw InvalidDecoration(std::string(what) + " index out of range");
        if (i && s[i] <= s[i - 1]) throw InvalidDecoration(std::string(what) + " must be sorted and distinct");
    }
}

}  // namespace

DyckPath validate_path(const std::vector<int>& word) {
    if (!word.empty() && word[0] != 0) throw MalformedAreaWord("area word must start with 0");
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i] < 0) throw MalformedAreaWord("negative entry in area word");
        if (word[i] > word[i - 1] + 1) throw MalformedAreaWord("area word increases by more than 1");
    }
    return DyckPath{word};
}

Features features(const DyckPath& d) {
    const auto& w = d.area_word;
    return {rises0(w), vals0(w), peaks0(w), falls0(w)};
}

IndexSet fake_falls(const DyckPath& d, const IndexSet& zval) {
    const auto& w = d.area_word;
    const int N = d.size();
    auto s = steps_of(w);
    auto zm = mask(zval, N);
    std::vector<char> zcol(N + 1, 0), peak(N, 0);
    for (int i : zval) zcol[(i - 1) - w[i - 1]] = 1;
    for (int p : peaks0(w)) peak[p - 1] = 1;
    IndexSet r;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k].kind != 'E' || zcol[s[k].x]) continue;
        bool ok = k + 1 == s.size() || s[k + 1].kind == 'E' || (zm[s[k + 1].row] && peak[s[k + 1].row]);
        if (ok) r.push_back(s[k].x + 1);
    }
    return r;
}

int column_squares(const DyckPath& d, int c) {
    for (const auto& st : steps_of(d.area_word))
        if (st.kind == 'E' && st.x == c - 1) return st.y - st.x - 1;
    throw DomainError("column out of range");
}

int initial_run(const DyckPath& d) {
    const auto& w = d.area_word;
    if (w.empty()) return 0;
    int r = 1;
    while (r < d.size() && w[r] == w[r - 1] + 1) ++r;
    return r;
}

int zero_rows(const DecoratedDyckPath& d) {
    const auto& w = d.path.area_word;
    auto zm = mask(d.zval, d.path.size());
    int r = 0;
    for (int i = 0; i < d.path.size(); ++i)
        if (w[i] == 0 && !zm[i]) ++r;
    return r;
}

int family_r(const DecoratedDyckPath& d) {
    return d.flavor == Flavor::DDD ? zero_rows(d) : initial_run(d.path);
}

void validate(const DecoratedDyckPath& d) {
    validate_path(d.path.area_word);
    const int N = d.path.size();
    check_index_set(d.zval, 1, N, "zval");
    check_index_set(d.dpeak, 1, N, "dpeak");
    check_index_set(d.drise, 1, N, "drise");
    Features f = features(d.path);
    if (!subset_of(d.zval, f.val)) throw InvalidDecoration("zero valley on a row that is not a valley");
    if (!subset_of(d.dpeak, f.peak)) throw InvalidDecoration("decorated peak on a row that is not a peak");
    for (int p : d.dpeak)
        if (std::binary_search(d.zval.begin(), d.zval.end(), p))
            throw InvalidDecoration("a zero valley cannot be a decorated peak");
    switch (d.flavor) {
        case Flavor::DDD:
            if (!subset_of(d.drise, f.rise)) throw InvalidDecoration("decorated rise on a row that is not a rise");
            break;
        case Flavor::DDB_STAR:
        case Flavor::DDB_TRIANGLE: {
            IndexSet ok = d.flavor == Flavor::DDB_STAR ? f.fall : fake_falls(d.path, d.zval);
            if (!subset_of(d.drise, ok)) throw InvalidDecoration("decorated column is not a (fake) fall");
            int lead = initial_run(d.path);
            if (std::binary_search(d.dpeak.begin(), d.dpeak.end(), lead))
                throw InvalidDecoration("the leftmost peak cannot be decorated");
            break;
        }
    }
}

void validate(const LabelledDyckPath& d) {
    validate_path(d.path.area_word);
    const auto& w = d.path.area_word;
    const int N = d.path.size();
    if (static_cast<int>(d.labels.size()) != N) throw InvalidDecoration("one label per row required");
    check_index_set(d.drise, 1, N, "drise");
    if (!subset_of(d.drise, rises0(w))) throw InvalidDecoration("decorated rise on a row that is not a rise");
    for (int i = 0; i < N; ++i) {
        if (d.labels[i] < 0) throw InvalidDecoration("labels must be non-negative");
        if (i > 0 && w[i] == w[i - 1] + 1 && d.labels[i] <= d.labels[i - 1])
            throw InvalidDecoration("labels must increase up each column");
    }
    if (N > 0 && d.labels[0] == 0) throw InvalidDecoration("label 0 cannot appear in the first column");
}

int area(const DecoratedDyckPath& d) {
    const auto& w = d.path.area_word;
    if (d.flavor == Flavor::DDD) {
        auto rm = mask(d.drise, d.path.size());
        int a = 0;
        for (int i = 0; i < d.path.size(); ++i)
            if (!rm[i]) a += w[i];
        return a;
    }
    int a = 0;
    for (int v : w) a += v;
    if (d.drise.empty()) return a;
    auto cm = mask(d.drise, d.path.size());
    for (const auto& st : steps_of(w))
        if (st.kind == 'E' && cm[st.x]) a -= st.y - st.x - 1;
    return a;
}

int area(const LabelledDyckPath& d) {
    auto rm = mask(d.drise, d.path.size());
    int a = 0;
    for (int i = 0; i < d.path.size(); ++i)
        if (!rm[i]) a += d.path.area_word[i];
    return a;
}

int dinv_labelled(const LabelledDyckPath& d) {
    const auto& w = d.path.area_word;
    const auto& l = d.labels;
    const int N = d.path.size();
    int c = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            if (w[i] == w[j] && l[i] < l[j]) ++c;
            if (w[i] == w[j] + 1 && l[i] > l[j]) ++c;
        }
    return c;
}

int dinv_decorated(const DecoratedDyckPath& d) {
    if (d.flavor != Flavor::DDD) throw FlavorMismatch("dinv is defined for the ddd flavor");
    const auto& w = d.path.area_word;
    const int N = d.path.size();
    auto pm = mask(d.dpeak, N), zm = mask(d.zval, N);
    int c = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            if (w[i] == w[j] && !pm[i] && !zm[j]) ++c;
            if (w[i] == w[j] + 1 && !pm[j] && !zm[i]) ++c;
        }
    return c;
}

BounceData bounce_data(const DecoratedDyckPath& d) {
    if (d.flavor == Flavor::DDD) throw FlavorMismatch("bounce is defined for the ddb flavors");
    const auto& w = d.path.area_word;
    const int N = d.path.size();
    BounceData out;
    if (N == 0) return out;
    auto zm = mask(d.zval, N);
    auto s = steps_of(w);

    // Diagonal view: an E step followed by a zero-valley N step becomes one
    // diagonal move D. Each column then carries exactly one E or D move.
    std::vector<char> move(N, 0);
    std::vector<int> top(N, 0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k].kind != 'E') continue;
        bool diag = k + 1 < s.size() && s[k + 1].kind == 'N' && zm[s[k + 1].row];
        move[s[k].x] = diag ? 'D' : 'E';
        top[s[k].x] = s[k].y;
    }

    std::vector<int> lab(N, -1);
    std::vector<int> vlo(N + 1, -1), vhi(N + 1, -1);  // vertical run of the ball per column
    int x = 0, y = 0, L = 0;
    while (true) {
        int t = x < N ? top[x] : N;
        vlo[x] = y;
        for (; y < t; ++y) lab[y] = L;
        vhi[x] = y;
        if (x == N) break;
        do {
            if (move[x] == 'D') lab[y++] = L;
            ++x;
        } while (x != y && x < N);
        ++L;
        if (x == N && y == N) {
            vlo[x] = vhi[x] = N;
            break;
        }
    }

    std::vector<char> cancel(N, 0);
    for (int p : d.dpeak) {
        int tx = (p - 1) - w[p - 1], ty = p;
        while (true) {
            if (vlo[tx] >= 0 && vlo[tx] <= ty && ty <= vhi[tx]) {
                cancel[ty - 1] = 1;
                break;
            }
            if (tx >= N) throw DomainError("peak trace left the path");
            if (move[tx] == 'D') ++ty;
            ++tx;
        }
    }
    out.word = lab;
    for (int i = 0; i < N; ++i) {
        if (cancel[i]) out.cancelled.push_back(i + 1);
        else out.value += lab[i];
    }
    return out;
}

int bounce(const DecoratedDyckPath& d) { return bounce_data(d).value; }

std::pair<int, int> qt_stats(const DecoratedDyckPath& d) {
    if (d.flavor == Flavor::DDD) return {dinv_decorated(d), area(d)};
    return {area(d), bounce(d)};
}

LabelledDyckPath shuffle_labelling(const DecoratedDyckPath& d) {
    if (d.flavor != Flavor::DDD) throw FlavorMismatch("shuffle labelling needs the ddd flavor");
    const auto& w = d.path.area_word;
    const int N = d.path.size();
    auto zm = mask(d.zval, N), pm = mask(d.dpeak, N);
    std::vector<int> order(N);
    for (int i = 0; i < N; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
    int n = N - static_cast<int>(d.zval.size());
    int hi = n, lo = 1;
    std::vector<int> lab(N, 0);
    for (int i : order) {
        if (zm[i]) lab[i] = 0;
        else if (pm[i]) lab[i] = hi--;
        else lab[i] = lo++;
    }
    LabelledDyckPath out{d.path, lab, d.drise};
    for (int i = 1; i < N; ++i)
        if (w[i] == w[i - 1] + 1 && lab[i] <= lab[i - 1])
            throw NoValidLabelling("labels would not increase up a column");
    if (N > 0 && lab[0] == 0) throw NoValidLabelling("label 0 in the first column");
    return out;
}

std::vector<LabelledDyckPath> shuffle_labellings(const DecoratedDyckPath& d) { return {shuffle_labelling(d)}; }

std::vector<int> dinv_reading_word(const LabelledDyckPath& d) {
    const auto& w = d.path.area_word;
    std::vector<int> order(d.path.size());
    for (int i = 0; i < d.path.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
    std::vector<int> r;
    for (int i : order) r.push_back(d.labels[i]);
    return r;
}

int rise_to_fall(const DyckPath& d, int row) {
    const auto& w = d.area_word;
    if (row < 2 || row > d.size() || w[row - 1] <= w[row - 2]) throw DomainError("row is not a rise");
    int c = w[row - 1];
    auto s = steps_of(w);
    std::size_t k = 0;
    while (!(s[k].kind == 'N' && s[k].row == row - 1)) ++k;
    for (++k; k < s.size(); ++k) {
        if (s[k].kind != 'E') continue;
        bool fall = k + 1 == s.size() || s[k + 1].kind == 'E';
        if (fall && s[k].y - s[k].x - 1 == c) return s[k].x + 1;
    }
    throw DomainError("no fall found for rise");
}

void for_each_dyck_word(int n, const std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& f) {
    if (n == 0) {
        if (prefix.empty()) f({});
        return;
    }
    std::vector<int> w = prefix;
    if (w.empty()) w.push_back(0);
    if (static_cast<int>(w.size()) > n) return;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n) {
            f(w);
            return;
        }
        for (int x = 0; x <= w.back() + 1; ++x) {
            w.push_back(x);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
}

void for_each_dyck_word(int n, const std::function<void(const std::vector<int>&)>& f) { for_each_dyck_word(n, {}, f); }

void for_each_dd_on_word(const std::vector<int>& word, int m, std::optional<int> r, std::optional<int> a,
                         std::optional<int> b, Flavor f, const std::function<void(const DecoratedDyckPath&)>& cb) {
    DecoratedDyckPath D;
    D.path = DyckPath{word};
    D.flavor = f;
    const int N = D.path.size();
    if (m > N) return;
    Features ft = features(D.path);
    int run = initial_run(D.path);
    if (f != Flavor::DDD && r && *r != run) return;
    auto sizes = [](std::optional<int> v, int hi) {
        std::vector<int> s;
        if (v) {
            if (*v >= 0 && *v <= hi) s.push_back(*v);
        } else {
            for (int i = 0; i <= hi; ++i) s.push_back(i);
        }
        return s;
    };
    for_each_combination(ft.val, m, [&](const IndexSet& zv) {
        D.zval = zv;
        if (f == Flavor::DDD && r && zero_rows(D) != *r) return;
        IndexSet risers;
        if (f == Flavor::DDD) risers = ft.rise;
        else if (f == Flavor::DDB_STAR) risers = ft.fall;
        else risers = fake_falls(D.path, zv);
        IndexSet pk;
        for (int p : ft.peak) {
            if (std::binary_search(zv.begin(), zv.end(), p)) continue;
            if (f != Flavor::DDD && p == run) continue;
            pk.push_back(p);
        }
        for (int ka : sizes(a, static_cast<int>(risers.size())))
            for_each_combination(risers, ka, [&](const IndexSet& dr) {
                D.drise = dr;
                for (int kb : sizes(b, static_cast<int>(pk.size())))
                    for_each_combination(pk, kb, [&](const IndexSet& dp) {
                        D.dpeak = dp;
                        cb(D);
                    });
            });
    });
}

void for_each_dd(int m, int n, std::optional<int> r, std::optional<int> a, std::optional<int> b, Flavor f,
                 const std::function<void(const DecoratedDyckPath&)>& cb) {
    if (m < 0 || n < 0) return;
    for_each_dyck_word(m + n, [&](const std::vector<int>& w) { for_each_dd_on_word(w, m, r, a, b, f, cb); });
}

std::vector<DecoratedDyckPath> enumerate_dd(int m, int n, std::optional<int> r, std::optional<int> a,
                                            std::optional<int> b, Flavor f) {
    std::vector<DecoratedDyckPath> out;
    for_each_dd(m, n, r, a, b, f, [&](const DecoratedDyckPath& d) { out.push_back(d); });
    return out;
}

QTPoly dd_qt(int m, int n, int r, int a, int b, Flavor f) {
    QTPoly p;
    for_each_dd(m, n, r, a, b, f, [&](const DecoratedDyckPath& d) {
        auto [x, y] = qt_stats(d);
        p.add_term(x, y, 1);
    });
    return p;
}

std::map<std::tuple<int, int, int>, QTPoly> dd_qt_table(int m, int n, Flavor f) {
    std::map<std::tuple<int, int, int>, QTPoly> t;
    for_each_dd(m, n, std::nullopt, std::nullopt, std::nullopt, f, [&](const DecoratedDyckPath& d) {
        auto [x, y] = qt_stats(d);
        t[{family_r(d), static_cast<int>(d.drise.size()), static_cast<int>(d.dpeak.size())}].add_term(x, y, 1);
    });
    return t;
}

void for_each_pld(int m, int n, int k, const std::function<void(const LabelledDyckPath&)>& cb) {
    if (m < 0 || n < 0 || k < 0) return;
    for_each_dyck_word(m + n, [&](const std::vector<int>& w) {
        const int N = static_cast<int>(w.size());
        IndexSet rs = rises0(w);
        // zeros sit at the bottom of columns other than the first: valleys
        for_each_combination(vals0(w), m, [&](const IndexSet& zv) {
            auto zm = mask(zv, N);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i + 1;
            do {
                LabelledDyckPath L{DyckPath{w}, std::vector<int>(N, 0), {}};
                int t = 0;
                for (int i = 0; i < N; ++i)
                    if (!zm[i]) L.labels[i] = perm[t++];
                bool ok = true;
                for (int i = 1; i < N && ok; ++i)
                    if (w[i] == w[i - 1] + 1 && L.labels[i] <= L.labels[i - 1]) ok = false;
                if (!ok) continue;
                for_each_combination(rs, k, [&](const IndexSet& dr) {
                    L.drise = dr;
                    cb(L);
                });
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    });
}

nlohmann::json to_json(const DecoratedDyckPath& d) {
    return {{"kind", "dyck"},          {"flavor", flavor_name(d.flavor)}, {"area_word", d.path.area_word},
            {"drise", d.drise},        {"dpeak", d.dpeak},                {"zval", d.zval}};
}

nlohmann::json to_json(const LabelledDyckPath& d) {
    IndexSet zv;
    for (int i = 0; i < d.path.size(); ++i)
        if (d.labels[i] == 0) zv.push_back(i + 1);
    return {{"kind", "dyck"},   {"flavor", "ddd"}, {"area_word", d.path.area_word}, {"drise", d.drise},
            {"dpeak", IndexSet{}}, {"zval", zv},   {"labels", d.labels}};
}

namespace {
std::vector<int> int_array(const nlohmann::json& j, const char* key, bool required = true) {
    if (!j.contains(key)) {
        if (required) throw ParseError(std::string("missing field '") + key + "'");
        return {};
    }
    const auto& a = j.at(key);
    if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    std::vector<int> r;
    for (const auto& v : a) {
        if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must hold integers");
        r.push_back(v.get<int>());
    }
    return r;
}
void check_kind(const nlohmann::json& j) {
    if (!j.is_object() || j.value("kind", "") != "dyck") throw ParseError("expected an object with kind \"dyck\"");
}
}  // namespace

DecoratedDyckPath decorated_from_json(const nlohmann::json& j) {
    check_kind(j);
    DecoratedDyckPath d;
    d.flavor = flavor_from_name(j.value("flavor", "ddd"));
    d.path = validate_path(int_array(j, "area_word"));
    d.drise = int_array(j, "drise", false);
    d.dpeak = int_array(j, "dpeak", false);
    d.zval = int_array(j, "zval", false);
    validate(d);
    return d;
}

LabelledDyckPath labelled_from_json(const nlohmann::json& j) {
    check_kind(j);
    LabelledDyckPath d;
    d.path = validate_path(int_array(j, "area_word"));
    d.labels = int_array(j, "labels");
    d.drise = int_array(j, "drise", false);
    validate(d);
    return d;
}

}  // namespace delta
