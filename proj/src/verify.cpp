#include "delta/verify.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "delta/bijections.hpp"
#include "delta/dyck.hpp"
#include "delta/errors.hpp"
#include "delta/polyomino.hpp"
#include "delta/recursion.hpp"

namespace delta {

using nlohmann::json;

json Report::to_json() const {
    json j = {{"suite", suite}, {"checks", checks}, {"passes", passes}, {"failed", failed}, {"failures", failures}};
    if (!info.empty()) j["info"] = info;
    if (!parts.empty()) {
        json p = json::array();
        for (const auto& r : parts) p.push_back(r.to_json());
        j["suites"] = p;
    }
    return j;
}

namespace {

struct Acc {
    long checks = 0, passes = 0, failed = 0;
    std::vector<json> failures;
    json info = json::object();

    void check(bool ok, const std::function<json()>& what) {
        ++checks;
        if (ok) {
            ++passes;
            return;
        }
        ++failed;
        if (failures.size() < 50) failures.push_back(what());
    }
    void merge(Acc&& o) {
        checks += o.checks;
        passes += o.passes;
        failed += o.failed;
        for (auto& f : o.failures)
            if (failures.size() < 50) failures.push_back(std::move(f));
        for (auto& [k, v] : o.info.items()) {
            if (v.is_number_integer() && info.contains(k)) info[k] = info[k].get<long>() + v.get<long>();
            else info[k] = v;
        }
    }
};

// Runs fn(0..n-1) on up to `jobs` threads; results are merged in task order
// so reports do not depend on scheduling.
Acc run_tasks(int n, int jobs, const std::function<Acc(int)>& fn) {
    std::vector<Acc> out(n);
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex emu;
    auto worker = [&] {
        for (int i; (i = next++) < n;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lk(emu);
                if (!err) err = std::current_exception();
            }
        }
    };
    int t = std::max(1, std::min(jobs, n));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    Acc all;
    for (auto& a : out) all.merge(std::move(a));
    return all;
}

std::vector<std::pair<int, int>> size_pairs(int S, int min_n = 0) {
    std::vector<std::pair<int, int>> v;
    for (int tot = 0; tot <= S; ++tot)
        for (int m = 0; m <= tot; ++m)
            if (tot - m >= min_n) v.push_back({m, tot - m});
    return v;
}

json poly_diff(const QTPoly& got, const QTPoly& want) { return {{"got", got.to_json()}, {"expected", want.to_json()}}; }

Acc suite_figures() {
    Acc a;
    DecoratedDyckPath fig2{{{0, 1, 1, 0, 1, 1, 1, 2}}, {2, 5}, {3, 8}, {4, 7}, Flavor::DDD};
    int dv = dinv_decorated(fig2);
    a.check(dv == 6, [&] { return json{{"check", "figure 2 dinv"}, {"got", dv}, {"expected", 6}}; });
    int ar2 = area(fig2);
    a.check(ar2 == 5, [&] { return json{{"check", "figure 2 area"}, {"got", ar2}, {"expected", 5}}; });

    LabelledDyckPath fig1{{{0, 1, 0, 1, 2, 1, 2, 3}}, {1, 3, 0, 4, 6, 0, 2, 6}, {4, 7}};
    int dl = dinv_labelled(fig1);
    a.check(dl == 3, [&] { return json{{"check", "figure 1 dinv"}, {"got", dl}, {"expected", 3}}; });
    int ar1 = area(fig1);
    int direct = 0;
    for (int i = 0; i < 8; ++i)
        if (i != 3 && i != 6) direct += fig1.path.area_word[i];
    a.check(ar1 == direct,
            [&] { return json{{"check", "figure 1 area by definition"}, {"got", ar1}, {"expected", direct}}; });
    a.info["figure1_area"] = ar1;
    a.info["figure1_area_stated_in_prose"] = 6;

    DecoratedDyckPath bp{{{0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3}}, {}, {8, 10}, {4, 5, 6, 9, 11, 12}, Flavor::DDB_STAR};
    int b = bounce(bp);
    a.check(b == 1, [&] { return json{{"check", "bounce figure"}, {"got", b}, {"expected", 1}}; });

    PolyPaths pp{"NNENNEENNENNNENNE", "EENNNENNENNNEENNN"};
    std::string got = to_string(poly_area_word(pp));
    std::string want = "0 0b 1 1b 2 1b 1b 1 0b 0b 1 0b 0b 0b 1 1 1b 1b";
    a.check(got == want, [&] { return json{{"check", "area word caption"}, {"got", got}, {"expected", want}}; });
    return a;
}

Acc suite_recursion(int S, int jobs) {
    // one task per n + p
    return run_tasks(S + 1, jobs, [](int tot) {
        Acc a;
        for (int n = 0; n <= tot; ++n) {
            int p = tot - n;
            for (int k = 1; k < n; ++k)
                for (int l = 0; k + l <= n; ++l)
                    for (int d = 0; d <= n + p; ++d) {
                        FIndex x{n, k, p, d, l};
                        auto res = f_onestep_residual(x);
                        if (!res) continue;
                        a.check(res->is_zero(), [&] {
                            return json{{"check", "one-step residual"}, {"index", {n, k, p, d, l}},
                                        {"residual", res->to_json()}};
                        });
                        QTPoly v = f_value(x);
                        a.check(v.nonnegative(), [&] {
                            return json{{"check", "positivity"}, {"index", {n, k, p, d, l}}, {"value", v.to_json()}};
                        });
                    }
        }
        return a;
    });
}

Acc suite_dinv_area(int S, int jobs) {
    auto pairs = size_pairs(S);
    return run_tasks(static_cast<int>(pairs.size()), jobs, [&](int t) {
        auto [m, n] = pairs[t];
        Acc a;
        auto tab = dd_qt_table(m, n, Flavor::DDD);
        const int N = m + n;
        for (int r = 0; r <= N; ++r)
            for (int ra = 0; ra <= N; ++ra)
                for (int pb = 0; pb <= N; ++pb) {
                    auto it = tab.find({r, ra, pb});
                    QTPoly lhs = it == tab.end() ? QTPoly{} : it->second;
                    QTPoly rhs = f_value({n, r, m, pb, ra});
                    a.check(lhs == rhs, [&] {
                        json j = poly_diff(lhs, rhs);
                        j["check"] = "ddd enumerator = F";
                        j["params"] = {{"m", m}, {"n", n}, {"r", r}, {"a", ra}, {"b", pb}};
                        return j;
                    });
                }
        return a;
    });
}

Acc suite_area_bounce(int S, int jobs) {
    auto pairs = size_pairs(S);
    return run_tasks(static_cast<int>(pairs.size()), jobs, [&](int t) {
        auto [m, n] = pairs[t];
        Acc a;
        long literal_mismatch = 0;
        const int N = m + n;
        for (Flavor f : {Flavor::DDB_STAR, Flavor::DDB_TRIANGLE}) {
            auto tab = dd_qt_table(m, n, f);
            for (int r = 0; r <= N; ++r)
                for (int fa = 0; fa <= N; ++fa)
                    for (int pb = 0; pb <= N; ++pb) {
                        auto it = tab.find({r, fa, pb});
                        QTPoly lhs = it == tab.end() ? QTPoly{} : it->second;
                        QTPoly rhs = f_value({n, r, m, fa, pb});
                        a.check(lhs == rhs, [&] {
                            json j = poly_diff(lhs, rhs);
                            j["check"] = flavor_name(f) + " enumerator = F";
                            j["params"] = {{"m", m}, {"n", n}, {"r", r}, {"falls", fa}, {"peaks", pb}};
                            return j;
                        });
                        if (f == Flavor::DDB_STAR && lhs != f_value({n, r, m, pb, fa})) ++literal_mismatch;
                    }
        }
        a.info["superscripts_swapped_mismatches"] = literal_mismatch;
        return a;
    });
}

Acc suite_polyomino(int S, int jobs) {
    auto pairs = size_pairs(S);
    return run_tasks(static_cast<int>(pairs.size()), jobs, [&](int t) {
        auto [m, n] = pairs[t];
        Acc a;
        for_each_rp_word(m, n, [&](const PolyWord& w) {
            PolyWord back = poly_area_word(poly_paths(w));
            a.check(back == w, [&] { return json{{"check", "area word round trip"}, {"word", to_string(w)}}; });
        });
        auto star = rp_qt_table(m, n, PolyFlavor::STAR);
        auto circ = rp_qt_table(m, n, PolyFlavor::CIRC);
        for (int r = 1; r <= m + 1; ++r)
            for (int k = 0; k <= m + 1; ++k)
                for (int j = 0; j <= n; ++j) {
                    auto s = star.find({r, k, j});
                    auto c = circ.find({r, k, j});
                    QTPoly sv = s == star.end() ? QTPoly{} : s->second;
                    QTPoly cv = c == circ.end() ? QTPoly{} : c->second;
                    QTPoly fv = f_value({m + 1, r, n - j, m + 1 - j, k});
                    json params = {{"m", m}, {"n", n}, {"r", r}, {"k", k}, {"j", j}};
                    a.check(sv == fv, [&] {
                        json x = poly_diff(sv, fv);
                        x["check"] = "rp star = F";
                        x["params"] = params;
                        return x;
                    });
                    a.check(cv == fv, [&] {
                        json x = poly_diff(cv, fv);
                        x["check"] = "rp circ = F";
                        x["params"] = params;
                        return x;
                    });
                }
        return a;
    });
}

Acc suite_sweep(int S, int jobs) {
    auto pairs = size_pairs(S);
    return run_tasks(static_cast<int>(pairs.size()), jobs, [&](int t) {
        auto [m, n] = pairs[t];
        Acc a;
        std::set<std::string> images;
        long domain = 0;
        for_each_dd(m, n, std::nullopt, std::nullopt, std::nullopt, Flavor::DDD, [&](const DecoratedDyckPath& d) {
            ++domain;
            DecoratedDyckPath e = sweep(d);
            bool member = true;
            try {
                validate(e);
            } catch (const Error&) {
                member = false;
            }
            member = member && e.zval.size() == d.zval.size() && family_r(e) == family_r(d) &&
                     e.drise.size() == d.dpeak.size() && e.dpeak.size() == d.drise.size();
            a.check(member, [&] { return json{{"check", "sweep codomain"}, {"object", to_json(d)}}; });
            a.check(qt_stats(d) == qt_stats(e),
                    [&] { return json{{"check", "sweep statistics"}, {"object", to_json(d)}}; });
            bool back = false;
            try {
                back = sweep_inv(e) == d;
            } catch (const Error&) {
            }
            a.check(back, [&] { return json{{"check", "sweep round trip"}, {"object", to_json(d)}}; });
            images.insert(to_json(e).dump());
        });
        a.check(static_cast<long>(images.size()) == domain,
                [&] { return json{{"check", "sweep injective"}, {"m", m}, {"n", n}}; });
        long codomain = 0;
        for_each_dd(m, n, std::nullopt, std::nullopt, std::nullopt, Flavor::DDB_TRIANGLE,
                    [&](const DecoratedDyckPath& e) {
                        ++codomain;
                        bool ok = false;
                        try {
                            ok = sweep(sweep_inv(e)) == e;
                        } catch (const Error&) {
                        }
                        a.check(ok, [&] { return json{{"check", "sweep surjective"}, {"object", to_json(e)}}; });
                    });
        a.check(codomain == domain, [&] {
            return json{{"check", "sweep domain/codomain sizes"}, {"domain", domain}, {"codomain", codomain}};
        });
        a.info["sweep_objects"] = domain;
        return a;
    });
}

Acc suite_zeta(int S, int jobs) {
    auto pairs = size_pairs(S);
    return run_tasks(static_cast<int>(pairs.size()), jobs, [&](int t) {
        auto [m, n] = pairs[t];
        Acc a;
        std::set<std::string> images;
        long domain = 0, codomain = 0;
        for_each_rp(m, std::nullopt, n, std::nullopt, std::nullopt, PolyFlavor::CIRC, [&](const ReducedPolyomino& p) {
            ++domain;
            ReducedPolyomino q = zeta(p);
            bool member = true;
            try {
                validate(q);
            } catch (const Error&) {
                member = false;
            }
            member = member && poly_r(q) == poly_r(p) && q.ur.size() == p.gp.size() && q.br.size() == p.rv.size() &&
                     poly_m(q.word) == m && poly_n(q.word) == n;
            a.check(member, [&] { return json{{"check", "zeta codomain"}, {"object", to_json(p)}}; });
            a.check(poly_qt_stats(p) == poly_qt_stats(q),
                    [&] { return json{{"check", "zeta statistics"}, {"object", to_json(p)}}; });
            bool back = false;
            try {
                back = zeta_inv(q) == p;
            } catch (const Error&) {
            }
            a.check(back, [&] { return json{{"check", "zeta round trip"}, {"object", to_json(p)}}; });
            images.insert(to_json(q).dump());
        });
        a.check(static_cast<long>(images.size()) == domain,
                [&] { return json{{"check", "zeta injective"}, {"m", m}, {"n", n}}; });
        for_each_rp(m, std::nullopt, n, std::nullopt, std::nullopt, PolyFlavor::STAR, [&](const ReducedPolyomino& q) {
            ++codomain;
            bool ok = false;
            try {
                ok = zeta(zeta_inv(q)) == q;
            } catch (const Error&) {
            }
            a.check(ok, [&] { return json{{"check", "zeta surjective"}, {"object", to_json(q)}}; });
        });
        a.check(codomain == domain, [&] {
            return json{{"check", "zeta domain/codomain sizes"}, {"domain", domain}, {"codomain", codomain}};
        });
        a.info["zeta_objects"] = domain;
        return a;
    });
}

Acc suite_poly_dyck(int S, int jobs) {
    auto pairs = size_pairs(S);
    return run_tasks(static_cast<int>(pairs.size()), jobs, [&](int t) {
        auto [m, n] = pairs[t];
        Acc a;
        std::set<std::string> images;
        long domain = 0, codomain = 0;
        for_each_rp(m, std::nullopt, n, std::nullopt, std::nullopt, PolyFlavor::STAR, [&](const ReducedPolyomino& p) {
            ++domain;
            DecoratedDyckPath d = poly_to_dyck(p);
            const int j = static_cast<int>(p.br.size()), k = static_cast<int>(p.ur.size());
            bool member = true;
            try {
                validate(d);
            } catch (const Error&) {
                member = false;
            }
            member = member && static_cast<int>(d.zval.size()) == n - j && d.path.size() - n + j == m + 1 &&
                     static_cast<int>(d.drise.size()) == k && static_cast<int>(d.dpeak.size()) == m + 1 - j &&
                     family_r(d) == poly_r(p);
            a.check(member, [&] { return json{{"check", "poly_to_dyck codomain"}, {"object", to_json(p)}}; });
            a.check(poly_qt_stats(p) == qt_stats(d),
                    [&] { return json{{"check", "poly_to_dyck statistics"}, {"object", to_json(p)}}; });
            bool back = false;
            try {
                back = dyck_to_poly(d) == p;
            } catch (const Error&) {
            }
            a.check(back, [&] { return json{{"check", "poly_to_dyck round trip"}, {"object", to_json(p)}}; });
            images.insert(to_json(d).dump());
        });
        a.check(static_cast<long>(images.size()) == domain,
                [&] { return json{{"check", "poly_to_dyck injective"}, {"m", m}, {"n", n}}; });
        // Codomain: m+1 non-zero-valley rows, z = n - j zero valleys, m+1-j decorated peaks.
        for (int j = 0; j <= n; ++j) {
            if (m + 1 - j < 0) continue;
            for_each_dd(n - j, m + 1, std::nullopt, std::nullopt, m + 1 - j, Flavor::DDD,
                        [&](const DecoratedDyckPath& d) {
                            ++codomain;
                            bool ok = false;
                            try {
                                ok = poly_to_dyck(dyck_to_poly(d)) == d;
                            } catch (const Error&) {
                            }
                            a.check(ok,
                                    [&] { return json{{"check", "poly_to_dyck surjective"}, {"object", to_json(d)}}; });
                        });
        }
        a.check(codomain == domain, [&] {
            return json{{"check", "poly_to_dyck domain/codomain sizes"}, {"domain", domain}, {"codomain", codomain}};
        });
        a.info["poly_dyck_objects"] = domain;
        return a;
    });
}

Acc suite_shuffle(int S, int jobs) {
    auto pairs = size_pairs(S);
    return run_tasks(static_cast<int>(pairs.size()), jobs, [&](int t) {
        auto [m, n] = pairs[t];
        Acc a;
        for_each_dd(m, n, std::nullopt, std::nullopt, std::nullopt, Flavor::DDD, [&](const DecoratedDyckPath& d) {
            bool ok = false;
            try {
                LabelledDyckPath L = shuffle_labelling(d);
                validate(L);
                ok = dinv_labelled(L) == dinv_decorated(d) && area(L) == area(d);
            } catch (const Error&) {
            }
            a.check(ok, [&] { return json{{"check", "shuffle labelling dinv"}, {"object", to_json(d)}}; });
        });
        return a;
    });
}

Acc suite_catalan(int S) {
    Acc a;
    for (int n = 1; n <= S; ++n) {
        QTPoly brute;
        for_each_dyck_word(n, [&](const std::vector<int>& w) {
            int dv = 0, ar = 0;
            for (int i = 0; i < n; ++i) {
                ar += w[i];
                for (int j = i + 1; j < n; ++j) dv += (w[i] == w[j]) + (w[i] == w[j] + 1);
            }
            brute.add_term(dv, ar, 1);
        });
        QTPoly sum;
        for (int r = 0; r <= n; ++r) sum += dd_qt(0, n, r, 0, 0, Flavor::DDD);
        QTPoly sch = schroeder_sum(n, 0, 0, 0);
        a.check(sum == brute, [&] { return json{{"check", "q,t-Catalan by enumeration"}, {"n", n}}; });
        a.check(sch == brute, [&] { return json{{"check", "q,t-Catalan by recursion"}, {"n", n}}; });
    }
    return a;
}

Acc dispatch(const std::string& name, const VerifyOptions& o) {
    const int S = o.max_size, J = o.jobs;
    if (name == "figures") return suite_figures();
    if (name == "recursion") return suite_recursion(S, J);
    if (name == "dinv-area") return suite_dinv_area(S, J);
    if (name == "area-bounce") return suite_area_bounce(S, J);
    if (name == "polyomino") return suite_polyomino(S, J);
    if (name == "sweep") return suite_sweep(S, J);
    if (name == "zeta") return suite_zeta(S, J);
    if (name == "poly-dyck") return suite_poly_dyck(S, J);
    if (name == "shuffle") return suite_shuffle(S, J);
    if (name == "catalan") return suite_catalan(S);
    throw DomainError("unknown verify suite '" + name + "'");
}

Report to_report(const std::string& name, Acc&& a, std::size_t listed) {
    Report r;
    r.suite = name;
    r.checks = a.checks;
    r.passes = a.passes;
    r.failed = a.failed;
    a.failures.resize(std::min(a.failures.size(), listed));
    r.failures = std::move(a.failures);
    r.info = std::move(a.info);
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"figures", "recursion", "dinv-area", "area-bounce", "polyomino",
                                                   "sweep",   "zeta",      "poly-dyck", "shuffle",     "catalan"};
    return names;
}

Report run_suite(const std::string& name, const VerifyOptions& opt) {
    if (opt.max_size < 0) throw DomainError("max size must be non-negative");
    if (name != "all") return to_report(name, dispatch(name, opt), opt.max_listed_failures);
    Report all;
    all.suite = "all";
    for (const auto& s : suite_names()) {
        Report r = to_report(s, dispatch(s, opt), opt.max_listed_failures);
        all.checks += r.checks;
        all.passes += r.passes;
        all.failed += r.failed;
        for (const auto& f : r.failures)
            if (all.failures.size() < opt.max_listed_failures) all.failures.push_back(f);
        all.parts.push_back(std::move(r));
    }
    return all;
}

}  // namespace delta
