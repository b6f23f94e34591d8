#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "delta/bijections.hpp"
#include "delta/errors.hpp"

using namespace delta;

namespace {

PolyWord parse(const std::string& s) {
    std::istringstream in(s);
    PolyWord w;
    std::string tok;
    while (in >> tok) {
        bool bar = tok.back() == 'b';
        if (bar) tok.pop_back();
        w.push_back({std::stoi(tok), bar});
    }
    return w;
}

DecoratedDyckPath sweep_left() {
    return {{{0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 2, 0}}, {2, 11}, {4, 6}, {3, 7, 8, 12}, Flavor::DDD};
}
DecoratedDyckPath sweep_right() {
    return {{{0, 1, 2, 3, 3, 4, 3, 3, 2, 3, 2, 0}}, {3, 10}, {6, 12}, {7, 8, 9, 11}, Flavor::DDB_TRIANGLE};
}

ReducedPolyomino zeta_preimage() {
    PolyWord w = poly_area_word({"NNENEENEENEEENEEEEN", "EENNNEEEEENEEENEENN"});
    return {w, {}, {}, {3, 8}, {3, 5}, PolyFlavor::CIRC};
}
ReducedPolyomino zeta_image() {
    return {parse("0 0b 0b 0 0b 1 1b 2 2b 2 2 1 1 1b 2 2 2b 1 1 0"), {6, 8}, {5, 14}, {}, {}, PolyFlavor::STAR};
}

DecoratedDyckPath pldp_figure() {
    return {{{0, 0, 0, 0, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 1, 1, 0}},
            {5, 7},
            {1, 5, 7, 9, 10, 11, 13, 14, 16, 17, 18},
            {2, 3, 6, 8, 15},
            Flavor::DDD};
}

template <class F>
void for_sizes(int max_size, F f) {
    for (int tot = 1; tot <= max_size; ++tot)
        for (int m = 0; m <= tot; ++m) f(m, tot - m);
}

}  // namespace

TEST_CASE("sweep figure") {
    DecoratedDyckPath l = sweep_left(), r = sweep_right();
    REQUIRE_NOTHROW(validate(l));
    REQUIRE_NOTHROW(validate(r));
    CHECK(sweep(l) == r);
    CHECK(sweep_inv(r) == l);
    CHECK(qt_stats(l) == qt_stats(r));
}

TEST_CASE("sweep of the staircase") {
    DecoratedDyckPath s{{{0, 0, 0}}, {}, {}, {}, Flavor::DDD};
    DecoratedDyckPath e = sweep(s);
    CHECK(e.path.area_word == std::vector<int>{0, 1, 2});
    for (int b : bounce_data(e).word) CHECK(b == 0);
    CHECK(qt_stats(e) == std::pair{3, 0});
    DecoratedDyckPath one{{{0}}, {}, {}, {}, Flavor::DDD};
    CHECK(sweep(one).path == one.path);
    CHECK(sweep_inv(sweep(one)) == one);
}

TEST_CASE("sweep rejects the wrong flavor") {
    CHECK_THROWS_AS(sweep(sweep_right()), FlavorMismatch);
    CHECK_THROWS_AS(sweep_inv(sweep_left()), FlavorMismatch);
}

TEST_CASE("zeta figure") {
    ReducedPolyomino p = zeta_preimage(), q = zeta_image();
    REQUIRE_NOTHROW(validate(p));
    REQUIRE_NOTHROW(validate(q));
    CHECK(poly_m(p.word) == 12);
    CHECK(poly_n(p.word) == 7);
    CHECK(zeta(p) == q);
    CHECK(zeta_inv(q) == p);
    CHECK(poly_qt_stats(p) == poly_qt_stats(q));
}

TEST_CASE("zeta on 1x1 polyominoes") {
    std::map<std::string, std::string> img;
    for (const auto& p : enumerate_rp(1, std::nullopt, 1, 0, 0, PolyFlavor::CIRC))
        img[to_string(p.word)] = to_string(zeta(p).word);
    CHECK(img == std::map<std::string, std::string>{
                     {"0 0 0b", "0 0 0b"}, {"0 0b 0", "0 0b 1"}, {"0 0b 1", "0 0b 0"}});
}

TEST_CASE("poly_to_dyck example") {
    ReducedPolyomino p = zeta_image();
    DecoratedDyckPath d = pldp_figure();
    REQUIRE_NOTHROW(validate(d));
    CHECK(poly_to_dyck(p) == d);
    CHECK(dyck_to_poly(d) == p);
    CHECK(poly_qt_stats(p) == qt_stats(d));
    // Labels of the figure: zeros on zero valleys, 1 and 2 on the two
    // undecorated-peak rows, everything else decorated.
    CHECK(d.path.size() - static_cast<int>(d.zval.size()) == 13);
}

TEST_CASE("poly_to_dyck of minimal polyominoes") {
    // 0 0b ... : undecorated 1xn strip whose barred letters are zero valleys.
    ReducedPolyomino p{parse("0 0 0b 0b"), {}, {}, {}, {}, PolyFlavor::STAR};
    DecoratedDyckPath d = poly_to_dyck(p);
    CHECK(d.path.area_word == std::vector<int>{0, 0, 0, 0});
    CHECK(d.zval == IndexSet{3, 4});
    CHECK(d.dpeak == IndexSet{1, 2});
    CHECK(dyck_to_poly(d) == p);
}

TEST_CASE("inverse maps reject objects outside the image") {
    DecoratedDyckPath bad = pldp_figure();
    bad.dpeak.push_back(4);  // row 4 is not a peak
    std::sort(bad.dpeak.begin(), bad.dpeak.end());
    CHECK_THROWS_AS(dyck_to_poly(bad), NotInImage);
    DecoratedDyckPath overlap = pldp_figure();
    overlap.dpeak = {1, 2};  // row 2 is a zero valley
    CHECK_THROWS_AS(dyck_to_poly(overlap), NotInImage);
    CHECK_THROWS_AS(dyck_to_poly(sweep_right()), FlavorMismatch);

    DecoratedDyckPath e = sweep_right();
    e.drise = {1};  // column 1 is not a fake fall
    CHECK_THROWS_AS(sweep_inv(e), Error);

    ReducedPolyomino q = zeta_image();
    q.ur = {2};  // not an unbarred rise
    CHECK_THROWS_AS(zeta_inv(q), Error);
}

TEST_CASE("sweep is a statistic-swapping bijection on small sizes") {
    for_sizes(5, [](int m, int n) {
        std::set<std::string> img;
        long dom = 0, cod = 0;
        for_each_dd(m, n, std::nullopt, std::nullopt, std::nullopt, Flavor::DDD, [&](const DecoratedDyckPath& d) {
            ++dom;
            DecoratedDyckPath e = sweep(d);
            CHECK_NOTHROW(validate(e));
            CHECK(e.flavor == Flavor::DDB_TRIANGLE);
            CHECK(family_r(e) == family_r(d));
            CHECK(e.zval.size() == d.zval.size());
            CHECK(e.drise.size() == d.dpeak.size());
            CHECK(e.dpeak.size() == d.drise.size());
            CHECK(qt_stats(e) == std::pair{dinv_decorated(d), area(d)});
            CHECK(sweep_inv(e) == d);
            img.insert(to_json(e).dump());
        });
        for_each_dd(m, n, std::nullopt, std::nullopt, std::nullopt, Flavor::DDB_TRIANGLE,
                    [&](const DecoratedDyckPath& e) {
                        ++cod;
                        CHECK(img.count(to_json(e).dump()) == 1);
                    });
        CHECK(static_cast<long>(img.size()) == dom);
        CHECK(cod == dom);
    });
}

TEST_CASE("zeta is a statistic-swapping bijection on small sizes") {
    for_sizes(5, [](int m, int n) {
        std::set<std::string> img;
        long dom = 0, cod = 0;
        for_each_rp(m, std::nullopt, n, std::nullopt, std::nullopt, PolyFlavor::CIRC, [&](const ReducedPolyomino& p) {
            ++dom;
            ReducedPolyomino q = zeta(p);
            CHECK_NOTHROW(validate(q));
            CHECK(poly_r(q) == poly_r(p));
            CHECK(q.ur.size() == p.gp.size());
            CHECK(q.br.size() == p.rv.size());
            CHECK(poly_qt_stats(q) == poly_qt_stats(p));
            CHECK(zeta_inv(q) == p);
            img.insert(to_json(q).dump());
        });
        for_each_rp(m, std::nullopt, n, std::nullopt, std::nullopt, PolyFlavor::STAR, [&](const ReducedPolyomino& q) {
            ++cod;
            CHECK(img.count(to_json(q).dump()) == 1);
        });
        CHECK(static_cast<long>(img.size()) == dom);
        CHECK(cod == dom);
    });
}

TEST_CASE("poly_to_dyck round trips on small sizes") {
    for_sizes(5, [](int m, int n) {
        for_each_rp(m, std::nullopt, n, std::nullopt, std::nullopt, PolyFlavor::STAR, [&](const ReducedPolyomino& p) {
            DecoratedDyckPath d = poly_to_dyck(p);
            const int j = static_cast<int>(p.br.size());
            CHECK_NOTHROW(validate(d));
            CHECK(static_cast<int>(d.zval.size()) == n - j);
            CHECK(static_cast<int>(d.dpeak.size()) == m + 1 - j);
            CHECK(d.drise.size() == p.ur.size());
            CHECK(family_r(d) == poly_r(p));
            CHECK(qt_stats(d) == poly_qt_stats(p));
            CHECK(dyck_to_poly(d) == p);
        });
    });
}
