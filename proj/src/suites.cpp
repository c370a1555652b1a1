#include "swkit/suites.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "swkit/errors.hpp"
#include "swkit/golden_data.hpp"
#include "swkit/oracle.hpp"
#include "swkit/partition.hpp"
#include "swkit/siegel_weil.hpp"
#include "swkit/springer.hpp"
#include "swkit/weyl.hpp"

namespace swkit {

using nlohmann::json;

namespace {

CheckRecord record(std::string name, json inputs, std::string expected, std::string actual) {
    CheckRecord r{std::move(name), std::move(inputs), std::move(expected), std::move(actual), false};
    r.pass = r.expected == r.actual;
    return r;
}

json lambda_json(const Partition& p) { return p.parts(); }

std::string kind_name(PlaceKind k) { return to_string(k); }

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out;
}

std::string report_text(const WeylReport& r) {
    if (r.pass) return "PASS";
    std::string out = "FAIL";
    if (r.grade >= 0) out += " grade " + std::to_string(r.grade);
    if (!r.class_label.empty()) out += " class " + r.class_label;
    return out + " " + r.detail;
}

std::string lattice_label(const DiagonalLattice& l) {
    std::vector<std::string> parts;
    for (int v : l.vals) parts.push_back("t^" + std::to_string(v));
    return "<" + join(parts) + ">";
}

}  // namespace

bool SuiteResult::pass() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
}

void SuiteResult::append(const SuiteResult& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cy", "fe", "weyl", "springer", "qbinom", "oracle", "all"};
    return names;
}

int default_budget(const std::string& suite) {
    if (suite == "cy") return 2;
    if (suite == "fe") return 4;
    if (suite == "weyl") return 5;
    if (suite == "springer") return 6;
    if (suite == "qbinom") return 8;
    if (suite == "oracle") return 2;
    if (suite == "all") return -1;
    throw InputError("unknown suite '" + suite + "'");
}

SuiteResult cy_checks(int max_total) {
    SuiteResult res{"cy", max_total, {}};
    std::vector<std::vector<int>> shapes{{}};
    for (int a = 0; a <= max_total; ++a) {
        shapes.push_back({a});
        for (int b = 0; b <= a && a + b <= max_total; ++b) shapes.push_back({b, a});
    }
    const int n_max = max_total + 2;
    for (auto kind : {PlaceKind::Inert, PlaceKind::Split})
        for (const auto& vals : shapes)
            for (int j = 0; j <= 1; ++j) {
                DiagonalLattice l{3, kind, vals};
                json inputs{{"kind", kind_name(kind)}, {"q", 3}, {"vals", vals}, {"j", j}};
                const std::string name = "cy " + kind_name(kind) + " " + lattice_label(l) + " j=" + std::to_string(j);
                try {
                    auto rep = verify_cy(l, j, n_max);
                    inputs["stabilized_at"] = rep.stabilized_at;
                    auto r = record(name, inputs, rep.rhs.to_string(), rep.lhs.to_string());
                    r.pass = rep.pass && rep.stabilized_at <= max_total + 1;
                    res.checks.push_back(std::move(r));
                } catch (const NotStabilized& e) {
                    res.checks.push_back(record(name, inputs, "stabilized density", e.what()));
                }
            }
    return res;
}

SuiteResult selfdual_density_checks(int max_n) {
    SuiteResult res{"oracle", max_n, {}};
    for (auto kind : {PlaceKind::Inert, PlaceKind::Split})
        for (int n = 1; n <= max_n; ++n)
            for (int j = 0; j <= 1; ++j) {
                auto m = DiagonalLattice::unimodular(3, kind, n + j);
                auto l = DiagonalLattice::unimodular(3, kind, n);
                json inputs{{"kind", kind_name(kind)}, {"q", 3}, {"n", n}, {"j", j}};
                const std::string name = "selfdual " + kind_name(kind) + " n=" + std::to_string(n) + " j=" + std::to_string(j);
                const auto expected = den_selfdual(n, j, kind, 3).to_string();
                try {
                    res.checks.push_back(record(name, inputs, expected, density_oracle(m, l, 3).value.to_string()));
                } catch (const NotStabilized& e) {
                    res.checks.push_back(record(name, inputs, expected, e.what()));
                }
            }
    return res;
}

SuiteResult functional_equation_checks(int max_size) {
    SuiteResult res{"fe", max_size, {}};
    for (long q : {3L, 5L})
        for (auto kind : {PlaceKind::Inert, PlaceKind::Split})
            for (const auto& lam : enumerate_partitions(max_size)) {
                const auto den = den_local(kind, q, lam);
                res.checks.push_back(record("fe " + kind_name(kind) + " q=" + std::to_string(q) + " " + lam.to_string(),
                                            json{{"kind", kind_name(kind)}, {"q", q}, {"lambda", lambda_json(lam)}},
                                            reverse_with_sign(den, lam.size(), eta(kind)).to_string(), den.to_string()));
            }
    return res;
}

SuiteResult weyl_checks(int max_d) {
    SuiteResult res{"weyl", max_d, {}};
    for (int d = 0; d <= max_d; ++d) {
        const json inputs{{"d", d}};
        for (const auto& rep : {verify_rho_decomposition(d), verify_chi_lemma(d), verify_main_identity(d)})
            res.checks.push_back(record(rep.check + " d=" + std::to_string(d), inputs, "PASS", report_text(rep)));
        const bool top = rho(d, d) == chi_closed_form(d);
        res.checks.push_back(record("rho_d closed form d=" + std::to_string(d), inputs, "true", top ? "true" : "false"));
        std::vector<std::string> want, got;
        long binom = 1;
        for (int i = 0; i <= d; ++i) {
            want.push_back(std::to_string(binom));
            binom = binom * (d - i) / (i + 1);
            got.push_back(std::to_string(rho(d, i).dimension()));
        }
        res.checks.push_back(record("rho dimensions d=" + std::to_string(d), inputs, join(want), join(got)));
    }
    return res;
}

SuiteResult springer_checks(int max_t) {
    SuiteResult res{"springer", max_t, {}};
    for (int t = 0; t <= max_t; ++t)
        for (long qv : {2L, 3L, 4L, 5L, 9L})
            for (int deg : {1, 2}) {
                const json inputs{{"t", t}, {"q_v", qv}, {"deg", deg}};
                const std::string suffix = " t=" + std::to_string(t) + " q_v=" + std::to_string(qv) + " deg=" + std::to_string(deg);
                res.checks.push_back(record("inert twist" + suffix, inputs, "true", inert_sign_twist_check(t, qv, deg) ? "true" : "false"));
                res.checks.push_back(record("split herm = coh" + suffix, inputs, p_coh_place(t, qv, deg).to_string(),
                                            p_herm_place(t, PlaceKind::Split, qv, deg).to_string()));
            }
    std::mt19937_64 rng(kCorpusSeed + 1);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const long qs[] = {3, 5, 7, 9};
    for (int k = 0; k < 100; ++k) {
        GlobalHermDatum g;
        g.q = qs[pick(0, 3)];
        const int places = pick(0, 4);
        for (int p = 0; p < places; ++p) {
            const auto sizes = partitions_of(pick(1, 6));
            g.places.push_back({pick(1, 3), pick(0, 1) ? PlaceKind::Split : PlaceKind::Inert, sizes[pick(0, static_cast<int>(sizes.size()) - 1)]});
        }
        IntPoly want{1};
        for (const auto& p : g.places)
            want *= m_poly(p.lambda.num_parts(), p.kind, pow_big(BigInt(g.q), p.deg_v)).substitute_power(p.deg_v);
        res.checks.push_back(record("p_global " + g.to_string(), json{{"datum", g.to_string()}}, want.to_string(), p_global(g).to_string()));
    }
    return res;
}

SuiteResult qbinom_checks(int max_t) {
    SuiteResult res{"qbinom", max_t, {}};
    for (long q : {2L, 3L, 4L, 5L, 7L})
        for (int t = 0; t <= max_t; ++t)
            res.checks.push_back(record("grassmann sum t=" + std::to_string(t) + " q=" + std::to_string(q), json{{"t", t}, {"q", q}},
                                        p_coh_place(t, q, 1).to_string(), p_coh_grassmann_sum(t, q).to_string()));
    return res;
}

SuiteResult naive_den_checks(int max_size) {
    SuiteResult res{"oracle", max_size, {}};
    for (auto kind : {PlaceKind::Inert, PlaceKind::Split})
        for (const auto& lam : enumerate_partitions(max_size)) {
            if (lam.empty()) continue;
            const json inputs{{"kind", kind_name(kind)}, {"q", 3}, {"lambda", lambda_json(lam)}};
            const auto den = den_local(kind, 3, lam);
            res.checks.push_back(record("naive den " + kind_name(kind) + " " + lam.to_string(), inputs,
                                        oracle::naive_den_local(kind, 3, lam).to_string(), den.to_string()));
            if (kind == PlaceKind::Split)
                res.checks.push_back(record("pair picture " + lam.to_string(), inputs, den_local_split_pair_picture(3, lam).to_string(),
                                            den.to_string()));
        }
    return res;
}

SuiteResult isometry_checks() {
    SuiteResult res{"oracle", 0, {}};
    for (long q : {2L, 3L})
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= std::min(m, 2); ++n)
                for (int a = 0; a <= n; ++a)
                    res.checks.push_back(record("isom m=" + std::to_string(m) + " n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                                    " q=" + std::to_string(q),
                                                json{{"m", m}, {"n", n}, {"a", a}, {"q", q}},
                                                to_decimal(oracle::brute_isometry_count_split(m, n, a, q)),
                                                to_decimal(isom_count_split(m, n, a, q))));
    return res;
}

SuiteResult grassmannian_checks() {
    SuiteResult res{"oracle", 0, {}};
    for (long q : {2L, 3L})
        for (int t = 0; t <= 4; ++t)
            for (int j = 0; j <= t; ++j) {
                double cost = 1;
                for (int k = 0; k < t * j; ++k) cost *= static_cast<double>(q);
                if (cost > 1e5) continue;
                res.checks.push_back(record("grassmannian t=" + std::to_string(t) + " j=" + std::to_string(j) + " q=" + std::to_string(q),
                                            json{{"t", t}, {"j", j}, {"q", q}}, to_decimal(oracle::brute_grassmannian_count(t, j, q)),
                                            to_decimal(gauss_binomial(t, j, BigInt(q)))));
            }
    return res;
}

SuiteResult corpus_derivative_checks(const std::vector<GlobalHermDatum>& corpus, int r_max) {
    SuiteResult res{"corpus", r_max, {}};
    for (const auto& g : corpus) {
        const auto rep = siegel_weil_report(g, r_max);
        std::vector<std::string> analytic, geometric;
        for (const auto& [r, v] : rep.values) analytic.push_back(to_decimal(v));
        for (const auto& [r, v] : rep.geometric_degrees) geometric.push_back(to_decimal(v));
        res.checks.push_back(record("derivatives " + g.to_string(), json{{"datum", g.to_string()}, {"r_max", r_max}}, join(analytic), join(geometric)));
    }
    return res;
}

SuiteResult corpus_even_symmetry_checks(const std::vector<GlobalHermDatum>& corpus) {
    SuiteResult res{"corpus", 0, {}};
    for (const auto& g : corpus) {
        const auto sym = symmetry_sign(g);
        std::string actual = sym.holds ? "symmetric" : "not symmetric";
        if (sym.sign == 1)
            for (int r : {1, 3, 5}) actual += " " + to_decimal(analytic_value(g, r));
        std::string expected = sym.sign == 1 ? "symmetric 0 0 0" : "symmetric";
        res.checks.push_back(record("even symmetry " + g.to_string(), json{{"datum", g.to_string()}, {"sign", sym.sign}}, expected, actual));
    }
    return res;
}

SuiteResult run_suite(const std::string& suite, int budget) {
    const int def = default_budget(suite);
    if (budget < 0) budget = def;
    SuiteResult res{suite, budget, {}};
    if (suite == "cy") res.append(cy_checks(budget));
    else if (suite == "fe") res.append(functional_equation_checks(budget));
    else if (suite == "weyl") res.append(weyl_checks(budget));
    else if (suite == "springer") res.append(springer_checks(budget));
    else if (suite == "qbinom") res.append(qbinom_checks(budget));
    else if (suite == "oracle") {
        res.append(selfdual_density_checks(budget));
        res.append(naive_den_checks(3));
        res.append(isometry_checks());
        res.append(grassmannian_checks());
    } else {
        for (const auto& name : suite_names())
            if (name != "all") res.append(run_suite(name, -1));
    }
    return res;
}

std::string den_local_table(long q, const std::vector<PlaceKind>& kinds, const std::vector<Partition>& partitions, bool use_oracle) {
    json entries = json::array();
    for (auto kind : kinds)
        for (const auto& lam : partitions) {
            const auto den = use_oracle ? oracle::naive_den_local(kind, q, lam) : den_local(kind, q, lam);
            entries.push_back(json{{"kind", kind_name(kind)}, {"lambda", lambda_json(lam)}, {"coeffs", den.decimal_coeffs()}});
        }
    json doc{{"schema", "swkit/1"}, {"q", q}, {"entries", entries}};
    return doc.dump(2) + "\n";
}

const std::string& golden_den_local() {
    static const std::string text = kGoldenDenLocal;
    return text;
}

std::vector<GlobalHermDatum> acceptance_corpus() { return random_corpus(kCorpusSize, kCorpusSeed); }

namespace {

const std::vector<Partition>& golden_partitions() {
    static const std::vector<Partition> parts{Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})};
    return parts;
}

struct CriterionSpec {
    std::string title;
    double limit;
};

CriterionSpec criterion_spec(int id, const AcceptanceOptions& opts) {
    switch (id) {
        case 1: return {"local density formula vs counting oracle, valuation total <= 2, q=3", 120};
        case 2: return {"self-dual density vs counting oracle, n <= 2, j <= 1, q=3", 60};
        case 3: return {"functional equation of den_local, |lambda| <= 4, q in {3,5}", 10};
        case 4: return {"q-binomial Grassmannian sum, t <= 8", 1};
        case 5: return {"Springer trace identities, t <= 6, 100 random global data", 5};
        case 6: return {"W_d checks for d <= " + std::to_string(opts.weyl_max_d), opts.weyl_max_d >= 6 ? 600.0 : 60.0};
        case 7: return {"analytic = geometric on the 50-datum corpus, r <= 4", 30};
        case 8: return {"odd derivatives vanish when the symmetry sign is +1", 5};
        case 9: return {"split isometry count vs brute force, m <= 3, n <= 2, q in {2,3}", 60};
        case 10: return {"golden den_local JSON at q=3", 60};
        default: throw InputError("unknown criterion " + std::to_string(id));
    }
}

SuiteResult criterion_checks(int id, const AcceptanceOptions& opts) {
    switch (id) {
        case 1: return cy_checks(2);
        case 2: return selfdual_density_checks(2);
        case 3: return functional_equation_checks(4);
        case 4: return qbinom_checks(8);
        case 5: return springer_checks(6);
        case 6: return weyl_checks(opts.weyl_max_d);
        case 7: return corpus_derivative_checks(acceptance_corpus(), 4);
        case 8: return corpus_even_symmetry_checks(acceptance_corpus());
        case 9: return isometry_checks();
        default: {
            SuiteResult res{"golden", 0, {}};
            const std::vector<PlaceKind> kinds{PlaceKind::Inert, PlaceKind::Split};
            const auto first = den_local_table(3, kinds, golden_partitions());
            const auto second = den_local_table(3, kinds, golden_partitions());
            res.checks.push_back(record("golden den_local q=3", json::object(), golden_den_local(), first));
            res.checks.push_back(record("repeat render", json::object(), first, second));
            return res;
        }
    }
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
    const auto spec = criterion_spec(id, opts);
    CriterionResult out;
    out.id = id;
    out.title = spec.title;
    out.limit_seconds = spec.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto res = criterion_checks(id, opts);
        out.checks = res.checks.size();
        out.failed = res.failures();
        for (const auto& c : res.checks)
            if (!c.pass) {
                out.detail = c.name + ": expected " + c.expected + ", got " + c.actual;
                break;
            }
    } catch (const std::exception& e) {
        out.failed = out.checks + 1;
        out.detail = std::string("exception: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.pass = out.failed == 0 && out.checks > 0 && out.seconds < out.limit_seconds;
    if (out.failed == 0 && out.seconds >= out.limit_seconds) out.detail = "time limit exceeded";
    return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) {
        out.push_back(run_criterion(id, opts));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_criterion(const CriterionResult& r) {
    char head[96];
    std::snprintf(head, sizeof head, "criterion %2d %s %8.2fs (limit %gs) %4zu checks ", r.id, r.pass ? "PASS" : "FAIL", r.seconds,
                  r.limit_seconds, r.checks);
    std::string line = head + r.title;
    if (!r.pass && !r.detail.empty()) line += " | " + r.detail;
    return line;
}

}  // namespace swkit
