#include "genius/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "genius/config.hpp"
#include "genius/conjlab.hpp"
#include "genius/ftransform.hpp"
#include "genius/graphlab.hpp"
#include "genius/interp.hpp"
#include "genius/pernici.hpp"
#include "genius/report.hpp"
#include "genius/selftest.hpp"
#include "genius/stirlconf.hpp"

namespace genius {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string out_path;
    std::string config_path;
    int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    std::uint64_t seed = 1;

    int p = 0;
    bool emit = false;
    int p_min = 2;
    int p_max = 12;
    std::vector<int> conj2_i{2};
    std::string p_window;
    int budget = 4;
    int holdout = 2;
    std::string r = "sym";
    int h_max = 0;  // 0: the subcommand default
    int jdeg = 0;
    int jmax = 0;
    std::string u_scale = "1";
    std::string z = "1,2";
    int v = 14;
    int graph_r = 3;
    std::string mode = "exhaustive";
    long count = 10000;
    std::string graph_text;
    int g_max = 7;
    int symbolic_g_max = 5;
};

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

RValue parse_r(const std::string& s) {
    if (s == "sym") {
        return RValue::symbolic();
    }
    try {
        return RValue::rational(Rational::parse(s));
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("--r: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw UsageError("--r must be 'sym' or a rational >= 2, got '" + s + "'");
    }
}

std::pair<int, int> parse_window(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        throw UsageError("--p-window must look like A..B");
    }
    try {
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("--p-window must look like A..B");
    }
}

std::vector<int> parse_int_list(const std::string& s, const char* flag) {
    std::vector<int> out;
    std::istringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

json slice_json(const SliceRecord& s) {
    return json{{"h", s.h}, {"k", s.k}, {"role", s.role}, {"actual", s.actual}, {"expected", s.expected}};
}

std::string slice_witness(const SliceRecord& s) {
    return "[j^" + std::to_string(s.k) + " n^-" + std::to_string(s.h) + "] " + s.role + ": got " + s.actual +
           ", expected " + s.expected;
}

CheckReport identity_report(const std::string& check, json params, const IdentityReport& rep) {
    CheckReport out;
    out.check = check;
    out.params = std::move(params);
    out.status = rep.pass ? Status::pass : Status::fail;
    json failures = json::array();
    for (const SliceRecord& s : rep.failures()) {
        failures.push_back(slice_json(s));
    }
    json info = json::array();
    for (const SliceRecord& s : rep.slices) {
        if (s.role == "leading" || (s.role == "info" && s.k == s.h + 1)) {
            info.push_back(slice_json(s));
        }
    }
    out.detail = json{{"failures", failures}, {"leading_slices", info}};
    if (!rep.pass) {
        out.witness = slice_witness(rep.failures().front());
    }
    return out;
}

// Fills options that were not given on the command line from the config
// file. Keys are looked up on the selected subcommand and its parents.
void apply_config(const Config& cfg, const std::string& path, CLI::App* leaf, std::ostream& err) {
    for (const std::string& w : cfg.warnings) {
        err << "warning: " << w << '\n';
    }
    for (const ConfigEntry& e : cfg.entries) {
        if (e.key == "config") {
            throw ConfigError(path + ":" + std::to_string(e.line) + ": 'config' cannot be set from a config file", e.line);
        }
        std::string flag = "--" + e.key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        CLI::Option* opt = nullptr;
        for (CLI::App* app = leaf; app && !opt; app = app->get_parent()) {
            opt = app->get_option_no_throw(flag);
        }
        if (!opt) {
            throw ConfigError(path + ":" + std::to_string(e.line) + ": unknown key '" + e.key + "' for this command",
                              e.line);
        }
        if (opt->count() > 0) {
            continue;
        }
        try {
            opt->add_result(e.value);
            opt->run_callback();
        } catch (const CLI::Error& ex) {
            throw ConfigError(path + ":" + std::to_string(e.line) + ": bad value for '" + e.key + "': " + ex.what(),
                              e.line);
        }
    }
}

void run_solve_f(const Options& o, ReportWriter& w) {
    if (o.p < 2) {
        throw UsageError("solve-f: --p must be at least 2");
    }
    const auto t0 = Clock::now();
    const FSolution sol = solve_F(BellContext::make(o.p));
    const TransformCheck chk = verify_transform(sol);
    CheckReport r;
    r.check = "solve-f";
    r.params = json{{"p", o.p}};
    r.status = chk.ok ? Status::pass : Status::fail;
    if (chk.witness) {
        r.witness = "y^" + std::to_string(chk.witness->k) + " " + chk.witness->monomial + " (" + chk.witness->paths +
                    ")";
    }
    json terms = json::object();
    for (int i = 2; i <= sol.solved_up_to(); ++i) {
        terms["F_" + std::to_string(i)] = o.emit ? json(sol.at(i).to_string()) : json(sol.at(i).size());
    }
    r.detail = json{{o.emit ? "F" : "term_counts", terms}};
    r.elapsed_ms = ms_since(t0);
    w.write(r);
}

void run_conj1(const Options& o, ReportWriter& w) {
    if (o.p_min < 2 || o.p_max < o.p_min) {
        throw UsageError("check-conj1: need 2 <= p-min <= p-max");
    }
    for (int p = o.p_min; p <= o.p_max; ++p) {
        const auto t0 = Clock::now();
        const Conj1Report rep = check_conj1(p);
        CheckReport r;
        r.check = "check-conj1";
        r.params = json{{"p", p}};
        r.status = rep.pass ? Status::pass : Status::fail;
        if (rep.witness) {
            r.witness = "F_" + std::to_string(rep.witness->first) + ": " + rep.witness->second;
        }
        r.detail = json{{"max_u_degree", rep.max_u_degree}, {"has_u_free_monomials", rep.has_u_free_monomials}};
        r.elapsed_ms = ms_since(t0);
        w.write(r);
    }
}

void run_conj2(const Options& o, ReportWriter& w) {
    for (int i : o.conj2_i) {
        const int lo = std::max(i, 2);
        auto [pmin, pmax] = o.p_window.empty() ? std::pair{lo, lo + 9} : parse_window(o.p_window);
        const auto t0 = Clock::now();
        Conj2Report rep;
        try {
            rep = check_conj2(i, pmin, pmax, o.budget, o.holdout);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        CheckReport r;
        r.check = "check-conj2";
        r.params = json{{"i", i}, {"p_min", pmin}, {"p_max", pmax}, {"budget", o.budget}, {"holdout", o.holdout}};
        r.status = parse_status(rep.status());
        if (!rep.leading_ok) {
            r.witness = "coefficient of u" + std::to_string(i) + " in F_" + std::to_string(i) + " is not 1";
        }
        json mons = json::array();
        for (const MonomialVerdict& mv : rep.monomials) {
            json m{{"monomial", mv.monomial}, {"verdict", to_string(mv.verdict)}};
            if (!mv.fit.empty()) {
                m["fit"] = mv.fit;
                m["deg_num"] = mv.deg_num;
                m["deg_den"] = mv.deg_den;
            }
            if (mv.support_changes) {
                m["support_changes"] = true;
            }
            mons.push_back(std::move(m));
            if (mv.verdict == Conj2Verdict::fitted_not_vanishing && !r.witness) {
                r.witness = mv.monomial + ": " + mv.fit;
            }
        }
        r.detail = json{{"counts",
                         {{"fitted_vanishing", rep.count(Conj2Verdict::fitted_vanishing)},
                          {"fitted_not_vanishing", rep.count(Conj2Verdict::fitted_not_vanishing)},
                          {"no_fit", rep.count(Conj2Verdict::no_fit)}}},
                        {"monomials", mons}};
        r.elapsed_ms = ms_since(t0);
        w.write(r);
    }
}

PerniciParams pernici_params(const Options& o, int default_h) {
    PerniciParams p;
    p.r = parse_r(o.r);
    p.H = o.h_max > 0 ? o.h_max : default_h;
    p.jdeg = o.jdeg;
    p.jmax_sample = o.jmax;
    try {
        p.u_scale = Rational::parse(o.u_scale);
    } catch (const std::exception&) {
        throw UsageError("--u-scale must be a rational");
    }
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return p;
}

json pernici_param_json(const Options& o, const PerniciParams& p) {
    json j{{"r", o.r}, {"h_max", p.H}, {"jdeg", p.effective_jdeg()}, {"jmax", p.effective_jmax()}};
    if (!(p.u_scale == Rational(1))) {
        j["u_scale"] = p.u_scale.to_string();
    }
    return j;
}

void run_pernici(const Options& o, ReportWriter& w) {
    const PerniciParams p = pernici_params(o, 4);
    const auto t0 = Clock::now();
    CheckReport r = identity_report("pernici", pernici_param_json(o, p), check_16_17(p));
    r.elapsed_ms = ms_since(t0);
    w.write(r);
}

void run_pernici_free(const Options& o, ReportWriter& w) {
    const PerniciParams p = pernici_params(o, 3);
    const auto t0 = Clock::now();
    json params{{"r", o.r}, {"h_max", p.H}, {"jdeg", p.effective_jdeg()}, {"jmax", p.effective_jmax()},
                {"free_u", "u2..u" + std::to_string(p.H + 1)}};
    CheckReport r = identity_report("pernici-free-u", std::move(params), check_16_free_u(p));
    r.elapsed_ms = ms_since(t0);
    w.write(r);
}

void run_awesome(const Options& o, ReportWriter& w) {
    const PerniciParams p = pernici_params(o, 3);
    AwesomeSpec spec;
    const std::vector<int> zs = o.z.empty() ? std::vector<int>{} : parse_int_list(o.z, "--z");
    for (std::size_t k = 0; k < zs.size(); ++k) {
        spec.terms.push_back({"c" + std::to_string(k + 1), zs[k]});
    }
    try {
        spec.validate(p.H);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto t0 = Clock::now();
    json params = pernici_param_json(o, p);
    params["z"] = zs;
    CheckReport r = identity_report("awesome", std::move(params), awesome_check(spec, p));
    r.elapsed_ms = ms_since(t0);
    w.write(r);
}

json census_json(const CensusStats& st) {
    json wit = json::array();
    for (const CensusWitness& cw : st.witnesses) {
        json viol = json::array();
        for (const auto& [k, i] : cw.violations) {
            viol.push_back(json::array({k, i}));
        }
        wit.push_back(json{{"graph", cw.graph}, {"connected", cw.connected}, {"violations", viol}});
    }
    json j{{"total", st.total},
           {"passing", st.passing},
           {"failing", st.failing},
           {"failing_fraction", st.failing_fraction()},
           {"connected_total", st.connected_total},
           {"connected_failing", st.connected_failing}};
    if (st.mode == "exhaustive") {
        j["counted_up_to"] = "isomorphism";
        j["labeled_count"] = st.labeled_count;
    } else {
        j["sampler"] = "pairing model, repeated edges rejected and redrawn (not exactly uniform)";
    }
    j["index_range"] = json{{"used", "k >= 0, i >= 0, i + k <= v/2"}, {"stated", "k = 0..v, i = 0..v-k"}};
    j["witnesses"] = wit;
    return j;
}

void run_census(const Options& o, ReportWriter& w) {
    if (o.v < 2 || o.v % 2 != 0 || o.v / 2 > BipartiteGraph::kMaxSide) {
        throw UsageError("graph census: --v must be even and at most " + std::to_string(2 * BipartiteGraph::kMaxSide));
    }
    const int nside = o.v / 2;
    if (o.graph_r < 1 || o.graph_r > nside) {
        throw UsageError("graph census: need 1 <= r <= v/2");
    }
    const auto t0 = Clock::now();
    CensusStats st;
    CheckReport r;
    r.check = "graph-census";
    r.params = json{{"r", o.graph_r}, {"v", o.v}, {"mode", o.mode}};
    if (o.mode == "exhaustive") {
        if (nside > 8) {
            throw UsageError("graph census: exhaustive mode supports v <= 16");
        }
        st = census_exhaustive(nside, o.graph_r, o.threads);
    } else if (o.mode == "sample") {
        if (o.count < 1) {
            throw UsageError("graph census: --count must be positive");
        }
        r.params["count"] = o.count;
        r.seed = o.seed;
        st = census_sample(nside, o.graph_r, o.count, o.seed, o.threads);
    } else {
        throw UsageError("graph census: --mode must be exhaustive or sample");
    }
    r.status = st.failing > 0 ? Status::fail : Status::pass;
    if (!st.witnesses.empty()) {
        r.witness = st.witnesses.front().graph;
    }
    r.detail = census_json(st);
    r.elapsed_ms = ms_since(t0);
    w.write(r);
}

void run_positivity(const Options& o, ReportWriter& w) {
    BipartiteGraph g;
    try {
        g = BipartiteGraph::parse(o.graph_text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("graph positivity: ") + e.what());
    }
    const auto t0 = Clock::now();
    const PositivityResult pr = positivity(g);
    CheckReport r;
    r.check = "graph-positivity";
    r.params = json{{"graph", g.serialize()}};
    r.status = pr.pass ? Status::pass : Status::fail;
    if (!pr.pass) {
        r.witness = g.serialize();
    }
    json m = json::array();
    for (const mpz_class& x : pr.m) {
        m.push_back(x.get_str());
    }
    json viol = json::array();
    for (const auto& [k, i] : pr.violations) {
        viol.push_back(json::array({k, i}));
    }
    r.detail = json{{"matchings", m}, {"connected", g.connected()}, {"violations", viol}};
    r.elapsed_ms = ms_since(t0);
    w.write(r);
}

void run_chapman(const Options& o, ReportWriter& w) {
    if (o.g_max < 2 || o.g_max > 12 || o.symbolic_g_max < 0 || o.symbolic_g_max > 8) {
        throw UsageError("chapman: need 2 <= g-max <= 12 and 0 <= symbolic-g-max <= 8");
    }
    auto one = [&](int g, int wt, bool symbolic) {
        const auto t0 = Clock::now();
        const ChapmanReport rep = chapman_check(g, wt, symbolic, o.seed, o.threads);
        CheckReport r;
        r.check = "chapman";
        r.params = json{{"g", g}, {"w", wt}, {"mode", symbolic ? "symbolic" : "random-rational"}};
        if (!symbolic) {
            r.seed = o.seed;
        }
        r.status = rep.zero ? Status::pass : Status::fail;
        if (!rep.zero) {
            r.witness = "sum = " + rep.sum;
        }
        r.detail = json{{"configurations", rep.configs}, {"sum", rep.sum}};
        if (!symbolic) {
            r.detail["values"] = rep.values;
        }
        r.elapsed_ms = ms_since(t0);
        w.write(r);
    };
    for (int g = 2; g <= o.g_max; ++g) {
        for (int wt = 0; wt <= g - 2; ++wt) {
            one(g, wt, false);
        }
    }
    for (int g = 2; g <= o.symbolic_g_max; ++g) {
        for (int wt = 0; wt <= g - 2; ++wt) {
            one(g, wt, true);
        }
    }
}

void run_selftest(ReportWriter& w) {
    const auto cases = selftest_cases();
    std::vector<std::string> order;
    for (const SelfCase& c : cases) {
        if (std::find(order.begin(), order.end(), c.module) == order.end()) {
            order.push_back(c.module);
        }
    }
    for (const std::string& module : order) {
        const auto t0 = Clock::now();
        int n = 0;
        std::vector<std::string> failed;
        for (const SelfCase& c : cases) {
            if (c.module != module) {
                continue;
            }
            ++n;
            bool ok = false;
            try {
                ok = c.run();
            } catch (const std::exception& e) {
                failed.push_back(c.name + " (threw: " + e.what() + ")");
                continue;
            }
            if (!ok) {
                failed.push_back(c.name);
            }
        }
        CheckReport r;
        r.check = "selftest";
        r.params = json{{"module", module}, {"cases", n}};
        r.status = failed.empty() ? Status::pass : Status::fail;
        if (!failed.empty()) {
            std::string wit;
            for (const std::string& f : failed) {
                wit += (wit.empty() ? "" : "; ") + f;
            }
            r.witness = wit;
        }
        r.elapsed_ms = ms_since(t0);
        w.write(r);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact verification of the Genius conjectures and related identities", "genius"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", o.out_path, "Append report lines to this file instead of stdout");
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "Seed for sampled checks");
    app.add_option("--config", o.config_path, "key=value file; command-line flags take precedence");

    auto* solve = app.add_subcommand("solve-f", "Solve for F_2..F_p and verify the transform");
    solve->add_option("--p", o.p, "p >= 2");
    solve->add_flag("--emit", o.emit, "Include every F_i in canonical form");

    auto* c1 = app.add_subcommand("check-conj1", "u-linearity of every F_i");
    c1->add_option("--p-min", o.p_min);
    c1->add_option("--p-max", o.p_max);

    auto* c2 = app.add_subcommand("check-conj2", "Rational-in-p coefficients vanishing at infinity");
    c2->add_option("--i", o.conj2_i, "Target index, or a comma list")->delimiter(',')->multi_option_policy(
        CLI::MultiOptionPolicy::TakeAll);
    c2->add_option("--p-window", o.p_window, "A..B (default max(i,2)..max(i,2)+9)");
    c2->add_option("--budget", o.budget);
    c2->add_option("--holdout", o.holdout);

    auto add_pernici_opts = [&](CLI::App* sub, int default_h) {
        sub->add_option("--r", o.r, "'sym' or a rational >= 2");
        sub->add_option("--h-max", o.h_max, "Truncation order in 1/n (default " + std::to_string(default_h) + ")");
        sub->add_option("--jdeg", o.jdeg, "Highest j-degree inspected (default 2H)");
        sub->add_option("--jmax", o.jmax, "Largest sampled j (default 2H+4)");
        sub->add_option("--u-scale", o.u_scale, "u_s = scale * [x^s] T_r");
    };
    auto* pern = app.add_subcommand("pernici", "Vanishing and leading log-coefficient identities");
    add_pernici_opts(pern, 4);
    auto* pfree = app.add_subcommand("pernici-free-u", "Vanishing identities with free u_s");
    add_pernici_opts(pfree, 3);
    auto* awe = app.add_subcommand("awesome", "Awesome conjecture instance");
    add_pernici_opts(awe, 3);
    awe->add_option("--z", o.z, "Comma list of z_i (c_i named c1, c2, ...)");

    auto* graph = app.add_subcommand("graph", "Graph positivity");
    graph->require_subcommand(1);
    auto* census = graph->add_subcommand("census", "Positivity over all or sampled r-regular bipartite graphs");
    census->add_option("--r", o.graph_r);
    census->add_option("--v", o.v, "Total vertex count (even)");
    census->add_option("--mode", o.mode, "exhaustive or sample");
    census->add_option("--count", o.count, "Sample size");
    auto* pos = graph->add_subcommand("positivity", "Positivity of one graph");
    pos->add_option("--graph", o.graph_text, "e.g. \"nside=3 r=2 rows=110,011,101\"");

    auto* chap = app.add_subcommand("chapman", "Weighted-configuration sums vanish");
    chap->add_option("--g-max", o.g_max);
    chap->add_option("--symbolic-g-max", o.symbolic_g_max);

    auto* self = app.add_subcommand("selftest", "Worked examples of every module");

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream so;
        std::ostringstream se;
        const int code = app.exit(e, so, se);
        out << so.str();
        err << se.str();
        return code == 0 ? 0 : 2;
    }

    CLI::App* leaf = app.get_subcommands().front();
    while (!leaf->get_subcommands().empty()) {
        leaf = leaf->get_subcommands().front();
    }

    std::ofstream file;
    try {
        if (!o.config_path.empty()) {
            apply_config(load_config(o.config_path), o.config_path, leaf, err);
        }
        if (o.threads < 1) {
            throw UsageError("--threads must be positive");
        }
        std::ostream* sink = &out;
        if (!o.out_path.empty()) {
            file.open(o.out_path, std::ios::app);
            if (!file) {
                throw UsageError("cannot open " + o.out_path + " for writing");
            }
            sink = &file;
        }
        ReportWriter w(*sink);
        if (leaf == solve) {
            run_solve_f(o, w);
        } else if (leaf == c1) {
            run_conj1(o, w);
        } else if (leaf == c2) {
            run_conj2(o, w);
        } else if (leaf == pern) {
            run_pernici(o, w);
        } else if (leaf == pfree) {
            run_pernici_free(o, w);
        } else if (leaf == awe) {
            run_awesome(o, w);
        } else if (leaf == census) {
            run_census(o, w);
        } else if (leaf == pos) {
            run_positivity(o, w);
        } else if (leaf == chap) {
            run_chapman(o, w);
        } else if (leaf == self) {
            run_selftest(w);
        }
        return exit_code_for(w.statuses());
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace genius
