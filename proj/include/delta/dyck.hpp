#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "delta/qtpoly.hpp"
#include "json.hpp"

namespace delta {

// Rows and columns in the public API are 1-based, as in area-word notation.
using IndexSet = std::vector<int>;  // sorted, distinct

enum class Flavor { DDD, DDB_STAR, DDB_TRIANGLE };
std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& s);

struct DyckPath {
    std::vector<int> area_word;
    int size() const { return static_cast<int>(area_word.size()); }
    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

// For DDD, drise holds decorated rise rows. For the DDB flavors it holds the
// 1-based columns of decorated falls (DDB_STAR) or fake falls (DDB_TRIANGLE).
struct DecoratedDyckPath {
    DyckPath path;
    IndexSet drise, dpeak, zval;
    Flavor flavor = Flavor::DDD;
    friend bool operator==(const DecoratedDyckPath&, const DecoratedDyckPath&) = default;
};

struct LabelledDyckPath {
    DyckPath path;
    std::vector<int> labels;
    IndexSet drise;
    friend bool operator==(const LabelledDyckPath&, const LabelledDyckPath&) = default;
};

struct Features {
    IndexSet rise, val, peak;  // rows
    IndexSet fall;             // columns
};

DyckPath validate_path(const std::vector<int>& word);
Features features(const DyckPath& d);
// Columns of fake falls given the zero valleys.
IndexSet fake_falls(const DyckPath& d, const IndexSet& zval);
// Whole squares between the path and the diagonal in column c (1-based).
int column_squares(const DyckPath& d, int c);
// Length of the initial run of vertical steps.
int initial_run(const DyckPath& d);
// Rows i with a_i = 0 that are not zero valleys.
int zero_rows(const DecoratedDyckPath& d);
// The parameter r of the object's family (zero rows for DDD, initial run for DDB).
int family_r(const DecoratedDyckPath& d);

// Throws MalformedAreaWord / InvalidDecoration when an invariant fails.
void validate(const DecoratedDyckPath& d);
void validate(const LabelledDyckPath& d);

int area(const DecoratedDyckPath& d);
int area(const LabelledDyckPath& d);
int dinv_labelled(const LabelledDyckPath& d);
int dinv_decorated(const DecoratedDyckPath& d);

struct BounceData {
    std::vector<int> word;    // bounce label of each row
    IndexSet cancelled;       // rows whose label is dropped
    int value = 0;
};
BounceData bounce_data(const DecoratedDyckPath& d);
int bounce(const DecoratedDyckPath& d);

// Statistic pair used by the family's enumerator: (dinv, area) for DDD,
// (area, bounce) for the DDB flavors.
std::pair<int, int> qt_stats(const DecoratedDyckPath& d);

LabelledDyckPath shuffle_labelling(const DecoratedDyckPath& d);
std::vector<LabelledDyckPath> shuffle_labellings(const DecoratedDyckPath& d);
// Reading word of the labels ordered by (a_i, i).
std::vector<int> dinv_reading_word(const LabelledDyckPath& d);

// Column (1-based) of the fall paired with the rise at `row`.
int rise_to_fall(const DyckPath& d, int row);

void for_each_dyck_word(int n, const std::function<void(const std::vector<int>&)>& f);
// Lexicographic area words with prefix `prefix` (must itself be valid).
void for_each_dyck_word(int n, const std::vector<int>& prefix,
                        const std::function<void(const std::vector<int>&)>& f);

// Every object of the family DD(m,n\r)^{*a,∘b} of the given flavor; r, a, b
// left unset range freely. Order: area word, then zval, drise, dpeak.
void for_each_dd(int m, int n, std::optional<int> r, std::optional<int> a, std::optional<int> b,
                 Flavor f, const std::function<void(const DecoratedDyckPath&)>& cb);
// Same, restricted to the given area words.
void for_each_dd_on_word(const std::vector<int>& word, int m, std::optional<int> r, std::optional<int> a,
                         std::optional<int> b, Flavor f, const std::function<void(const DecoratedDyckPath&)>& cb);
std::vector<DecoratedDyckPath> enumerate_dd(int m, int n, std::optional<int> r, std::optional<int> a,
                                            std::optional<int> b, Flavor f);

QTPoly dd_qt(int m, int n, int r, int a, int b, Flavor f);
// All enumerators for fixed (m, n) keyed by (r, a, b), one enumeration pass.
std::map<std::tuple<int, int, int>, QTPoly> dd_qt_table(int m, int n, Flavor f);

// Partially labelled paths with m zero labels, positive labels 1..n each used
// once, and k decorated rises.
void for_each_pld(int m, int n, int k, const std::function<void(const LabelledDyckPath&)>& cb);

nlohmann::json to_json(const DecoratedDyckPath& d);
nlohmann::json to_json(const LabelledDyckPath& d);
DecoratedDyckPath decorated_from_json(const nlohmann::json& j);
LabelledDyckPath labelled_from_json(const nlohmann::json& j);

}  // namespace delta
