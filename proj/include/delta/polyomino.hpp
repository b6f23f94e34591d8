#pragma once
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "delta/dyck.hpp"
#include "delta/qtpoly.hpp"
#include "json.hpp"

namespace delta {

// Letter of the barred alphabet 0 < 0̄ < 1 < 1̄ < ...
struct Letter {
    int v = 0;
    bool barred = false;
    int key() const { return 2 * v + (barred ? 1 : 0); }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter& a, const Letter& b) { return a.key() <=> b.key(); }
};
Letter succ(Letter l);
std::string to_string(Letter l);  // "2" or "2b"

using PolyWord = std::vector<Letter>;  // includes the artificial leading 0
std::string to_string(const PolyWord& w);

enum class PolyFlavor { STAR, CIRC };
std::string flavor_name(PolyFlavor f);
PolyFlavor poly_flavor_from_name(const std::string& s);

// ur/br: 1-based positions in the word (the artificial 0 is position 1).
// gp: 1-based columns of decorated green horizontal steps.
// rv: 1-based rows of decorated red vertical steps.
struct ReducedPolyomino {
    PolyWord word;
    IndexSet ur, br, gp, rv;
    PolyFlavor flavor = PolyFlavor::STAR;
    friend bool operator==(const ReducedPolyomino&, const ReducedPolyomino&) = default;
};

struct PolyPaths {
    std::string red, green;  // 'N'/'E' steps from (0,0) to (m,n)
    friend bool operator==(const PolyPaths&, const PolyPaths&) = default;
};

int poly_m(const PolyWord& w);  // unbarred letters minus the artificial one
int poly_n(const PolyWord& w);  // barred letters

void validate_word(const PolyWord& w);
void validate(const ReducedPolyomino& p);

PolyPaths poly_paths(const PolyWord& w);
// Area word from the two paths; throws MalformedAreaWord if the paths do not
// bound a reduced polyomino.
PolyWord poly_area_word(const PolyPaths& p);

struct PolyFeatures {
    IndexSet ur, br;  // word positions
    IndexSet gp;      // columns
    IndexSet rv;      // rows
};
PolyFeatures poly_features(const PolyWord& w);

// Bounce-path label of every column (unbarred) and every row (barred).
struct PolyBounceLabels {
    std::vector<Letter> col, row;
};
PolyBounceLabels poly_bounce_labels(const PolyWord& w);
// Labels in the order the bounce path visits its steps.
PolyWord poly_bounce_word(const PolyWord& w);

int poly_area(const ReducedPolyomino& p);
int poly_bounce(const ReducedPolyomino& p);
int poly_dinv(const PolyWord& w);
// STAR: zeros in the area word (artificial one included).
// CIRC: one plus the unbarred zeros of the bounce word.
int poly_r(const ReducedPolyomino& p);
// (dinv, area) for STAR, (area, bounce) for CIRC.
std::pair<int, int> poly_qt_stats(const ReducedPolyomino& p);

void for_each_rp_word(int m, int n, const std::function<void(const PolyWord&)>& f);
// k, j: decorations of the first/second kind (unbarred rises/barred rises for
// STAR, green peaks/red valleys for CIRC). Unset parameters range freely.
void for_each_rp(int m, std::optional<int> r, int n, std::optional<int> k, std::optional<int> j, PolyFlavor f,
                 const std::function<void(const ReducedPolyomino&)>& cb);
void for_each_rp_on_word(const PolyWord& w, std::optional<int> r, std::optional<int> k, std::optional<int> j,
                         PolyFlavor f, const std::function<void(const ReducedPolyomino&)>& cb);
std::vector<ReducedPolyomino> enumerate_rp(int m, std::optional<int> r, int n, std::optional<int> k,
                                           std::optional<int> j, PolyFlavor f);
QTPoly rp_qt(int m, int r, int n, int k, int j, PolyFlavor f);
// Keyed by (r, k, j).
std::map<std::tuple<int, int, int>, QTPoly> rp_qt_table(int m, int n, PolyFlavor f);

nlohmann::json to_json(const ReducedPolyomino& p);
ReducedPolyomino polyomino_from_json(const nlohmann::json& j);

}  // namespace delta
