#include "tilecount/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tilecount/exactlinalg.hpp"

namespace tilecount {

int SuiteReport::pass_count() const {
    int n = 0;
    for (const auto& i : instances)
        if (!i.skipped && i.equal) ++n;
    return n;
}

int SuiteReport::fail_count() const {
    int n = 0;
    for (const auto& i : instances)
        if (!i.skipped && !i.equal && !i.experimental) ++n;
    return n;
}

int SuiteReport::skip_count() const {
    int n = 0;
    for (const auto& i : instances)
        if (i.skipped) ++n;
    return n;
}

int SuiteReport::experimental_count() const {
    int n = 0;
    for (const auto& i : instances)
        if (i.experimental) ++n;
    return n;
}

bool SuiteReport::ok(bool strict) const {
    if (fail_count() > 0) return false;
    if (strict)
        for (const auto& i : instances)
            if (!i.skipped && i.experimental && !i.equal) return false;
    return true;
}

std::string SuiteReport::to_json(bool with_timings) const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["grid"] = grid;
    j["instances"] = nlohmann::ordered_json::array();
    for (const auto& i : instances) {
        nlohmann::ordered_json e;
        e["params"] = i.params;
        e["methods"] = i.methods;
        e["values"] = i.values;
        e["equal"] = i.equal;
        if (i.experimental) e["experimental"] = true;
        if (i.skipped) e["skipped"] = true;
        if (!i.note.empty()) e["note"] = i.note;
        if (with_timings) e["elapsed_ms"] = i.elapsed_ms;
        j["instances"].push_back(e);
    }
    j["summary"] = {{"pass", pass_count()},
                    {"fail", fail_count()},
                    {"skipped", skip_count()},
                    {"experimental", experimental_count()}};
    return j.dump(1);
}

namespace {

using TaskFn = std::function<VerifyInstance()>;

void run_tasks(std::vector<TaskFn>& tasks, int jobs, std::vector<VerifyInstance>& out) {
    out.resize(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            auto start = std::chrono::steady_clock::now();
            VerifyInstance inst;
            try {
                inst = tasks[i]();
            } catch (const resource_error& e) {
                inst.skipped = true;
                inst.equal = false;
                inst.note = e.what();
            }
            inst.elapsed_ms =
                std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
            out[i] = std::move(inst);
        }
    };
    int n = std::max(1, jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
}

VerifyInstance eq2(std::string params, std::string m1, std::string v1, std::string m2,
                   std::string v2, bool experimental = false) {
    VerifyInstance i;
    i.params = std::move(params);
    i.methods = {std::move(m1), std::move(m2)};
    i.equal = v1 == v2;
    i.values = {std::move(v1), std::move(v2)};
    i.experimental = experimental;
    return i;
}

VerifyInstance flag_instance(std::string params, std::string method, bool okflag) {
    VerifyInstance i;
    i.params = std::move(params);
    i.methods = {std::move(method)};
    i.values = {okflag ? "true" : "false"};
    i.equal = okflag;
    return i;
}

std::string cs(const Count& c) { return c.get_str(); }

// all partitions with at most `rows` parts, each at most `cols`
std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxpart) -> void {
        out.push_back(Partition(cur));
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    return out;
}

// all strict partitions with at most `rows` parts, largest part at most `maxp`
std::vector<StrictPartition> strict_partitions(int rows, int maxp) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxpart) -> void {
        if (!cur.empty()) out.push_back(StrictPartition(cur));
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            self(self, p - 1);
            cur.pop_back();
        }
    };
    rec(rec, maxp);
    return out;
}

void all_subsets(long n, long k, std::vector<std::vector<long>>& out) {
    std::vector<long> cur;
    auto rec = [&](auto&& self, long from) -> void {
        if (static_cast<long>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (long v = from; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

// ---- individual suites ----

void suite_formulas(const VerifyOptions& opt, std::vector<TaskFn>& tasks,
                    std::string& grid) {
    grid = "table-1 families vs enumeration; quartered hexagons; symmetry classes";
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long m = 0; m <= 3; ++m)
                tasks.push_back([=] {
                    Partition sh(std::vector<int>(a, static_cast<int>(b)));
                    return eq2("rect a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                   " m=" + std::to_string(m),
                               "formula", cs(count_rectangle(a, b, m)), "enumerate",
                               cs(count_pp(sh, static_cast<int>(m))));
                });
    for (long n = 1; n <= 4; ++n)
        for (long m = 0; m <= 3; ++m)
            tasks.push_back([=] {
                auto sh = std::get<StrictPartition>(
                    make_shape(ShapeFamily::shifted_staircase(n)));
                return eq2("sstair n=" + std::to_string(n) + " m=" + std::to_string(m),
                           "formula", cs(count_shifted_staircase(n, m)), "enumerate",
                           cs(count_spp(sh, static_cast<int>(m))));
            });
    for (long a = 1; a <= 4; ++a)
        for (long b = a; b <= 4; ++b)
            for (long m = 0; m <= 3; ++m)
                tasks.push_back([=] {
                    auto sh = std::get<Partition>(make_shape(ShapeFamily::staircase(a, b)));
                    return eq2("stair a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                   " m=" + std::to_string(m),
                               "formula", cs(count_staircase(a, b, m)), "enumerate",
                               cs(count_pp(sh, static_cast<int>(m))));
                });
    for (long n = 1; n <= 5; ++n)
        for (long k = 1; n - 2 * (k - 1) >= 1; ++k)
            for (long m = 0; m <= 3; ++m)
                tasks.push_back([=] {
                    auto sh = std::get<StrictPartition>(
                        make_shape(ShapeFamily::shifted_trapezoid(n, k)));
                    return eq2("trap n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   " m=" + std::to_string(m),
                               "formula", cs(count_shifted_trapezoid(n, k, m)),
                               "enumerate", cs(count_spp(sh, static_cast<int>(m))));
                });
    for (long n = 1; n <= 4; ++n)
        for (long k = 0; k <= n; ++k)
            for (long m = 0; m <= 3; ++m)
                tasks.push_back([=] {
                    auto sh = std::get<StrictPartition>(
                        make_shape(ShapeFamily::shifted_double_staircase(n, k)));
                    return eq2("sds n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   " m=" + std::to_string(m),
                               "formula", cs(count_sds(n, k, m)), "enumerate",
                               cs(count_spp(sh, static_cast<int>(m))));
                });
    for (long M = 1; M <= 5; ++M)
        for (long d = 0; d <= 2; ++d)
            for (long l = 1; l <= 3; ++l) {
                if (M - l * d < 1) continue;
                for (long m = 0; m <= 2; ++m)
                    tasks.push_back([=] {
                        auto sh = std::get<Partition>(
                            make_shape(ShapeFamily::arithmetic_progression(M, d, l)));
                        return eq2("ap M=" + std::to_string(M) + " d=" + std::to_string(d) +
                                       " l=" + std::to_string(l) + " m=" + std::to_string(m),
                                   "formula", cs(count_arith_progression(M, d, l, m)),
                                   "enumerate", cs(count_pp(sh, static_cast<int>(m))));
                    });
            }
    // sds boundary cases agree with the trapezoid formula
    for (long n = 1; n <= 5; ++n)
        for (long m = 0; m <= 4; ++m) {
            tasks.push_back([=] {
                return eq2("sds-trap n=" + std::to_string(n) + " k=n-1 m=" +
                               std::to_string(m),
                           "sds", cs(count_sds(n, n - 1, m)), "trapezoid",
                           cs(count_shifted_trapezoid(2 * n - 1, n, m)));
            });
            tasks.push_back([=] {
                return eq2("sds-trap n=" + std::to_string(n) + " k=n m=" +
                               std::to_string(m),
                           "sds", cs(count_sds(n, n, m)), "trapezoid",
                           cs(count_shifted_trapezoid(2 * n, n, m)));
            });
        }
    // quartered hexagons: formula vs brute force over all dent sets
    MatchBudget qb = opt.budget;
    qb.triangle_budget = std::max(qb.triangle_budget, 96);
    for (long tot = 1; tot <= 5; ++tot)
        for (long k = 0; k <= tot; ++k) {
            long x = tot - k;
            std::vector<std::vector<long>> subsets;
            all_subsets(tot, k, subsets);
            for (const auto& s : subsets)
                tasks.push_back([=] {
                    std::ostringstream ps;
                    ps << "qhex x=" << x << " s=";
                    for (size_t i = 0; i < s.size(); ++i)
                        ps << (i ? "," : "") << s[i];
                    return eq2(ps.str(), "formula", cs(count_quartered_hexagon(x, s)),
                               "brute", cs(count_tilings(build_quartered_hexagon(x, s), qb)));
                });
        }
    // symmetry classes against the shape formulas
    for (long n = 1; n <= 4; ++n)
        for (long m = 0; m <= 3; ++m)
            tasks.push_back([=] {
                return eq2("symmetric n=" + std::to_string(n) + " m=" + std::to_string(m),
                           "filter",
                           cs(count_symmetry_class(SymmetryClass::symmetric,
                                                   static_cast<int>(n),
                                                   static_cast<int>(m))),
                           "formula", cs(count_shifted_staircase(n, m)));
            });
    for (long n = 1; n <= 3; ++n)
        for (long m = 0; m <= 2; ++m) {
            tasks.push_back([=] {
                return eq2("transpose-complementary n=" + std::to_string(n) +
                               " m=" + std::to_string(m),
                           "filter",
                           cs(count_symmetry_class(SymmetryClass::transpose_complementary,
                                                   static_cast<int>(n + 1),
                                                   static_cast<int>(2 * m))),
                           "formula", cs(count_staircase(n, n, m)));
            });
            tasks.push_back([=] {
                long k = (n + 1) / 2;
                return eq2("symmetric-self-complementary n=" + std::to_string(n) +
                               " m=" + std::to_string(m),
                           "filter",
                           cs(count_symmetry_class(
                               SymmetryClass::symmetric_self_complementary,
                               static_cast<int>(n + 1), static_cast<int>(2 * m))),
                           "formula", cs(count_shifted_trapezoid(n, k, m)));
            });
        }
}

void suite_det(const VerifyOptions&, std::vector<TaskFn>& tasks, std::string& grid) {
    grid = "lambda in 4x4, m <= 4; q-mode lambda in 3x3, m <= 3";
    for (const Partition& lam : partitions_in_box(4, 4))
        for (long m = 0; m <= 4; ++m)
            tasks.push_back([=] {
                return eq2("lam=" + lam.str() + " m=" + std::to_string(m), "det",
                           cs(count_pp_det(lam, m)), "enumerate",
                           cs(count_pp(lam, static_cast<int>(m))));
            });
    for (const Partition& lam : partitions_in_box(3, 3))
        for (long m = 0; m <= 3; ++m)
            tasks.push_back([=] {
                QPoly det = count_pp_det_q(lam, m);
                QPoly gen = gen_function(enumerate_pp(lam, static_cast<int>(m)),
                                         Weight::size);
                return eq2("q lam=" + lam.str() + " m=" + std::to_string(m), "q-det",
                           det.coeff_list(), "gen-function", gen.coeff_list());
            });
}

void suite_pfaffian(const VerifyOptions&, std::vector<TaskFn>& tasks, std::string& grid) {
    grid = "strict lambda, <= 4 parts, lambda1 <= 5, m <= 3";
    for (const StrictPartition& lam : strict_partitions(4, 5))
        for (long m = 0; m <= 3; ++m)
            tasks.push_back([=] {
                return eq2("lam=" + lam.str() + " m=" + std::to_string(m), "pfaffian",
                           cs(count_spp_pf(lam, m)), "enumerate",
                           cs(count_spp(lam, static_cast<int>(m))));
            });
}

void suite_flashlight(const VerifyOptions& opt, std::vector<TaskFn>& tasks,
                      std::string& grid) {
    std::ostringstream g;
    g << "x <= " << opt.xmax << ", 1 <= y <= " << opt.ymax << ", z <= " << opt.zmax
      << ", t <= " << opt.tmax << ", region within budget";
    grid = g.str();
    for (long x = 0; x <= opt.xmax; ++x)
        for (long y = 1; y <= opt.ymax; ++y)
            for (long z = 0; z <= opt.zmax; ++z)
                for (long t = 0; t <= opt.tmax; ++t)
                    tasks.push_back([=] {
                        FlashlightParams p{x, y, z, t};
                        Region r = build_flashlight(p);
                        if (r.size() > opt.budget.triangle_budget) {
                            VerifyInstance i;
                            i.params = p.str();
                            i.skipped = true;
                            i.note = "region exceeds triangle budget";
                            return i;
                        }
                        return eq2(p.str(), "brute", cs(count_tilings(r, opt.budget)),
                                   "formula", cs(count_flashlight_formula(p)));
                    });
}

void suite_kuo(const VerifyOptions& opt, std::vector<TaskFn>& tasks, std::string& grid) {
    std::ostringstream g;
    g << "2 <= x <= " << std::max<long>(2, opt.xmax) << ", 1 <= y <= " << opt.ymax
      << ", 1 <= z <= " << opt.zmax << ", t <= " << opt.tmax << ", region within budget";
    grid = g.str();
    for (long x = 2; x <= std::max<long>(2, opt.xmax); ++x)
        for (long y = 1; y <= opt.ymax; ++y)
            for (long z = 1; z <= opt.zmax; ++z)
                for (long t = 0; t <= opt.tmax; ++t)
                    tasks.push_back([=] {
                        FlashlightParams p{x, y, z, t};
                        Region r = build_flashlight(p);
                        if (r.size() > opt.budget.triangle_budget) {
                            VerifyInstance i;
                            i.params = p.str();
                            i.skipped = true;
                            i.note = "region exceeds triangle budget";
                            return i;
                        }
                        DualGraph gph(r);
                        KuoPlacement kp = flashlight_kuo_vertices(p, opt.budget);
                        auto [uw, vs] = separation_check(gph, kp.verts);
                        bool conv = conversions_verify(p, kp.verts, opt.budget);
                        bool ident = kuo_verify(gph, kp.verts, opt.budget);
                        VerifyInstance i;
                        i.params = p.str();
                        i.methods = {"separation", "conversions", "condensation"};
                        i.values = {std::string(uw ? "true" : "false") + "/" +
                                        (vs ? "true" : "false"),
                                    conv ? "true" : "false", ident ? "true" : "false"};
                        i.equal = uw && vs && conv && ident;
                        if (!kp.from_seed) i.note = "vertices found by local search";
                        return i;
                    });
}

void suite_recurrences(const VerifyOptions& opt, std::vector<TaskFn>& tasks,
                       std::string& grid) {
    grid = "formula: 2 <= x <= 8, y,z in 1..5, t <= 5; brute: in-budget subgrid";
    for (long x = 2; x <= 8; ++x)
        for (long y = 1; y <= 5; ++y)
            for (long z = 1; z <= 5; ++z)
                for (long t = 0; t <= 5; ++t)
                    tasks.push_back([=] {
                        FlashlightParams p{x, y, z, t};
                        return flag_instance("formula " + p.str(),
                                             z >= 2 ? "kuo-recurrence" : "kuo-recurrence-z1",
                                             recurrence_verify(p, RecurrenceMode::formula));
                    });
    for (long x = 2; x <= std::max<long>(2, opt.xmax); ++x)
        for (long y = 1; y <= opt.ymax; ++y)
            for (long z = 1; z <= opt.zmax; ++z)
                for (long t = 0; t <= opt.tmax; ++t)
                    tasks.push_back([=] {
                        FlashlightParams p{x, y, z, t};
                        // the recurrence touches regions with y+2 and t+2;
                        // make sure every participant fits the budget
                        long worst = std::max(
                            build_flashlight(p).size(),
                            build_flashlight({x, y + 2, std::max<long>(z - 2, 0), t + 2})
                                .size());
                        if (worst > opt.budget.triangle_budget) {
                            VerifyInstance i;
                            i.params = "brute " + p.str();
                            i.skipped = true;
                            i.note = "region exceeds triangle budget";
                            return i;
                        }
                        return flag_instance("brute " + p.str(),
                                             z >= 2 ? "kuo-recurrence" : "kuo-recurrence-z1",
                                             recurrence_verify(p, RecurrenceMode::brute,
                                                               opt.budget));
                    });
}

void suite_identities(const VerifyOptions&, std::vector<TaskFn>& tasks,
                      std::string& grid) {
    grid = "p-identities x<=10,y<=6,z<=6,t<=6; base-case identities; Kummer z,t<=40; "
           "x=1 decomposition y,z,t<=4";
    for (long x = 2; x <= 10; ++x)
        for (long y = 0; y <= 6; ++y)
            for (long z = 1; z <= 6; ++z)
                for (long t = 0; t <= 6; ++t)
                    tasks.push_back([=] {
                        auto res = p_identity_check(x, y, z, t);
                        std::ostringstream ps;
                        ps << "p-identity x=" << x << " y=" << y << " z=" << z
                           << " t=" << t;
                        VerifyInstance i;
                        i.params = ps.str();
                        i.methods = {"first", "second"};
                        i.values = {res.first ? (*res.first ? "true" : "false")
                                              : "skipped (z=1)",
                                    res.second ? "true" : "false"};
                        i.equal = (!res.first || *res.first) && res.second;
                        return i;
                    });
    for (long x = 2; x <= 10; ++x)
        for (long y = 0; y <= 6; ++y)
            for (long t = 0; t <= 6; ++t)
                tasks.push_back([=] {
                    bool ok = p_identity_z1_first(x, y, t) && p_identity_z1_second(x, y, t);
                    std::ostringstream ps;
                    ps << "p-identity-z1 x=" << x << " y=" << y << " t=" << t;
                    return flag_instance(ps.str(), "both", ok);
                });
    for (long z = 0; z <= 12; ++z)
        for (long t = 0; t <= 12; ++t) {
            tasks.push_back([=] {
                return eq2("identity1a z=" + std::to_string(z) + " t=" + std::to_string(t),
                           "identity1a", cs(eval_identity1a(z, t)), "main-formula-x0",
                           cs(count_flashlight_formula({0, 1, z, t})));
            });
            tasks.push_back([=] {
                return eq2("identity1b z=" + std::to_string(z) + " t=" + std::to_string(t),
                           "identity1b", cs(eval_identity1b(z, t)), "identity1a",
                           cs(eval_identity1a(z, t)));
            });
            if (z >= 1)
                tasks.push_back([=] {
                    return eq2("identity1a-staircase z=" + std::to_string(z) +
                                   " t=" + std::to_string(t),
                               "identity1a", cs(eval_identity1a(z, t)), "staircase",
                               cs(count_staircase(z, z, t)));
                });
        }
    for (long y = 1; y <= 12; ++y)
        for (long z = 0; z <= 12; ++z)
            for (long t = 0; t <= 12; ++t)
                tasks.push_back([=] {
                    return eq2("identity2a y=" + std::to_string(y) + " z=" +
                                   std::to_string(z) + " t=" + std::to_string(t),
                               "identity2a", cs(eval_identity2a(y, z, t)),
                               "main-formula-x1",
                               cs(count_flashlight_formula({1, y, z, t})));
                });
    for (long z = 0; z <= 40; ++z)
        for (long t = 0; t <= 40; ++t)
            tasks.push_back([=] {
                auto res = kummer_closed_sum(z, t);
                std::ostringstream ps;
                ps << "kummer z=" << z << " t=" << t;
                VerifyInstance i;
                i.params = ps.str();
                i.methods = {"sum", "closed"};
                i.values = {res.lhs.get_str(), res.rhs.get_str()};
                i.equal = res.equal;
                return i;
            });
    for (long y = 1; y <= 4; ++y)
        for (long z = 0; z <= 4; ++z)
            for (long t = 0; t <= 4; ++t)
                tasks.push_back([=] {
                    std::ostringstream ps;
                    ps << "x1-decomposition y=" << y << " z=" << z << " t=" << t;
                    return flag_instance(ps.str(), "semihexagon-times-quartered-sum",
                                         x1_decomposition_check(y, z, t));
                });
}

void suite_qanalogs(const VerifyOptions&, std::vector<TaskFn>& tasks, std::string& grid) {
    grid = "rectangle a,b,m <= 3; symmetric q-analogs n,m <= 3";
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long m = 0; m <= 3; ++m)
                tasks.push_back([=] {
                    Partition sh(std::vector<int>(a, static_cast<int>(b)));
                    QPoly gen = gen_function(enumerate_pp(sh, static_cast<int>(m)),
                                             Weight::size);
                    return eq2("q-rect a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                   " m=" + std::to_string(m),
                               "q-product", q_count_rectangle(a, b, m).coeff_list(),
                               "gen-function", gen.coeff_list());
                });
    for (long n = 1; n <= 3; ++n)
        for (long m = 0; m <= 3; ++m) {
            tasks.push_back([=] {
                auto sym = enumerate_symmetry_class(SymmetryClass::symmetric,
                                                    static_cast<int>(n),
                                                    static_cast<int>(m));
                return eq2("q-macmahon n=" + std::to_string(n) + " m=" + std::to_string(m),
                           "q-product", q_symmetric_macmahon(n, m).coeff_list(),
                           "gen-function", gen_function(sym, Weight::size).coeff_list());
            });
            tasks.push_back([=] {
                auto sym = enumerate_symmetry_class(SymmetryClass::symmetric,
                                                    static_cast<int>(n),
                                                    static_cast<int>(m));
                return eq2("q-bender-knuth n=" + std::to_string(n) + " m=" +
                               std::to_string(m),
                           "q-product", q_symmetric_bender_knuth(n, m).coeff_list(),
                           "gen-function",
                           gen_function(sym, Weight::half_size).coeff_list());
            });
        }
}

void suite_bijections(const VerifyOptions& opt, std::vector<TaskFn>& tasks,
                      std::string& grid) {
    grid = "unshifted lambda in 3x3, m <= 2; flashlight t=0 with y+z <= 3, x <= 2";
    for (const Partition& lam : partitions_in_box(3, 3)) {
        if (lam.rows() == 0) continue;
        for (long m = 0; m <= 2; ++m)
            tasks.push_back([=] {
                Region r = build_shape_region(lam, m);
                auto tilings = enumerate_tilings(r, opt.budget);
                auto pps = enumerate_pp(lam, static_cast<int>(m));
                std::vector<PlanePartition> images;
                bool roundtrip = true;
                for (const auto& t : tilings) {
                    PlanePartition pi = tiling_to_pp(r, t);
                    Tiling back = pp_to_tiling(r, pi);
                    roundtrip = roundtrip && back.lozenges == t.lozenges;
                    images.push_back(std::move(pi));
                }
                std::sort(images.begin(), images.end());
                std::sort(pps.begin(), pps.end());
                bool same_set = images == pps;
                VerifyInstance i;
                i.params = "pp lam=" + lam.str() + " m=" + std::to_string(m);
                i.methods = {"round-trip", "image-set"};
                i.values = {roundtrip ? "true" : "false", same_set ? "true" : "false"};
                i.equal = roundtrip && same_set;
                return i;
            });
    }
    for (long x = 0; x <= 2; ++x)
        for (long y = 1; y <= 3; ++y)
            for (long z = 0; z + y <= 3; ++z)
                tasks.push_back([=] {
                    FlashlightParams p{x, y, z, 0};
                    Region r = build_flashlight(p);
                    auto tilings = enumerate_tilings(r, opt.budget);
                    auto sh = r.shifted_info->shape;
                    auto pps = enumerate_spp(sh, static_cast<int>(x));
                    std::vector<PlanePartition> images;
                    bool roundtrip = true;
                    for (const auto& t : tilings) {
                        PlanePartition pi = tiling_to_spp(r, t);
                        Tiling back = spp_to_tiling(r, pi);
                        roundtrip = roundtrip && back.lozenges == t.lozenges &&
                                    back.uncovered == t.uncovered;
                        images.push_back(std::move(pi));
                    }
                    std::sort(images.begin(), images.end());
                    std::sort(pps.begin(), pps.end());
                    bool same_set = images == pps;
                    VerifyInstance i;
                    i.params = "spp " + p.str();
                    i.methods = {"round-trip", "image-set"};
                    i.values = {roundtrip ? "true" : "false", same_set ? "true" : "false"};
                    i.equal = roundtrip && same_set;
                    return i;
                });
}

void suite_y0(const VerifyOptions& opt, std::vector<TaskFn>& tasks, std::string& grid) {
    std::ostringstream g;
    g << "y = 0, x <= " << std::max<long>(2, opt.xmax) << ", z <= " << opt.zmax
      << ", t <= " << opt.tmax << ", region within budget (experimental)";
    grid = g.str();
    for (long x = 0; x <= std::max<long>(2, opt.xmax); ++x)
        for (long z = 0; z <= opt.zmax; ++z)
            for (long t = 0; t <= opt.tmax; ++t)
                tasks.push_back([=] {
                    FlashlightParams p{x, 0, z, t};
                    Region r = build_flashlight(p);
                    if (r.size() > opt.budget.triangle_budget) {
                        VerifyInstance i;
                        i.params = p.str();
                        i.skipped = true;
                        i.experimental = true;
                        i.note = "region exceeds triangle budget";
                        return i;
                    }
                    Y0Report rep = conjecture_y0_check(x, z, t, opt.budget);
                    VerifyInstance i =
                        eq2(p.str(), "brute", cs(rep.lhs), "formula", cs(rep.rhs), true);
                    i.note = "conjectural regime (y = 0)";
                    return i;
                });
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"formulas",  "det",        "pfaffian",   "flashlight",
            "kuo",       "recurrences", "identities", "qanalogs",
            "bijections", "y0-experiment", "all"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
    SuiteReport rep;
    rep.suite = name;
    std::vector<TaskFn> tasks;
    std::vector<std::string> grids;
    auto add = [&](const std::string& n) {
        std::string g;
        if (n == "formulas") suite_formulas(opt, tasks, g);
        else if (n == "det") suite_det(opt, tasks, g);
        else if (n == "pfaffian") suite_pfaffian(opt, tasks, g);
        else if (n == "flashlight") suite_flashlight(opt, tasks, g);
        else if (n == "kuo") suite_kuo(opt, tasks, g);
        else if (n == "recurrences") suite_recurrences(opt, tasks, g);
        else if (n == "identities") suite_identities(opt, tasks, g);
        else if (n == "qanalogs") suite_qanalogs(opt, tasks, g);
        else if (n == "bijections") suite_bijections(opt, tasks, g);
        else if (n == "y0-experiment") suite_y0(opt, tasks, g);
        else throw parameter_error("run_suite: unknown suite '" + n + "'");
        grids.push_back(n + ": " + g);
    };
    if (name == "all") {
        for (const std::string& n : suite_names())
            if (n != "all") add(n);
    } else {
        add(name);
    }
    std::ostringstream g;
    for (size_t i = 0; i < grids.size(); ++i) g << (i ? "; " : "") << grids[i];
    rep.grid = g.str();
    run_tasks(tasks, opt.jobs, rep.instances);
    return rep;
}

}  // namespace tilecount
