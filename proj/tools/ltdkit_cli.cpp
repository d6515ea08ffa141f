// ltdkit command line: verify sets, solve instances exactly or via the
// theorem constructions, generate family instances, enumerate small graphs,
// and batch-check the 2n/3 conjecture.
//
// Exit codes: 0 ok, 1 domain failure (verification false, no LTD-set,
// conjecture violation), 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ltdkit/construct.hpp"
#include "ltdkit/errors.hpp"
#include "ltdkit/families.hpp"
#include "ltdkit/io.hpp"
#include "ltdkit/ltd.hpp"
#include "ltdkit/structure.hpp"

using json = nlohmann::json;
using namespace ltdkit;

namespace {

uint64_t default_seed() {
    if (const char* env = std::getenv("LTDKIT_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

std::vector<std::string> class_tags(const Graph& g) {
    std::vector<std::string> tags;
    if (recognize_split(g)) tags.push_back("split");
    if (recognize_cobipartite(g)) tags.push_back("cobipartite");
    if (recognize_block_graph(g)) tags.push_back("block");
    if (recognize_subcubic(g)) tags.push_back("subcubic");
    if (recognize_outerplanar(g).outerplanar) tags.push_back("outerplanar");
    return tags;
}

json bound_json(const Certificate& c) {
    return json{{"num", c.bound.num}, {"den", c.bound.den}, {"strict", c.strict}, {"cap", c.bound_cap}};
}

json base_report(const std::string& id, const Graph& g) {
    json r;
    r["graph_id"] = id;
    r["n"] = g.order();
    r["m"] = g.size();
    r["classes"] = class_tags(g);
    r["twin_free"] = is_twin_free(g);
    r["gamma_tl"] = nullptr;
    r["certificate_size"] = nullptr;
    r["bound"] = nullptr;
    r["method"] = "";
    r["verified"] = false;
    r["elapsed_ms"] = 0;
    return r;
}

GraphClass parse_class(const std::string& s) {
    if (s == "split") return GraphClass::split;
    if (s == "cobipartite") return GraphClass::cobipartite;
    if (s == "block") return GraphClass::block;
    if (s == "subcubic") return GraphClass::subcubic;
    if (s == "outerplanar") return GraphClass::outerplanar;
    throw usage_error("unknown class: " + s +
                      " (expected split|cobipartite|block|subcubic|outerplanar)");
}

VertexSet parse_set(const std::string& spec) {
    VertexSet out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw usage_error("bad vertex id: " + tok);
        out.push_back(v);
    }
    return vset::normalized(out);
}

long class_cap(GraphClass cls, int n) {
    switch (cls) {
        case GraphClass::cobipartite: return (n + 1) / 2;
        case GraphClass::split: return (2L * n + 2) / 3 - 1;
        default: return 2L * n / 3;
    }
}

// --- subcommand bodies -------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& set_spec) {
    Graph g = load_graph_file(path);
    VertexSet d = parse_set(set_spec);
    for (int v : d)
        if (v < 0 || v >= g.order()) throw usage_error("set member out of range: " + std::to_string(v));
    LtdCheck c = check_ltd(g, d);
    std::cout << "TD: " << (c.td_ok ? "yes" : "no") << "\n";
    std::cout << "LTD: " << (c.ltd_ok ? "yes" : "no") << "\n";
    if (!c.td_ok) std::cout << "undominated vertex: " << c.undominated << "\n";
    else if (!c.ltd_ok)
        std::cout << "unlocated pair: (" << c.unlocated.first << "," << c.unlocated.second << ")\n";
    return c.ltd_ok ? 0 : 1;
}

int cmd_solve(const std::string& path, const std::string& mode, long budget,
              const std::string& cert_out) {
    Graph g = load_graph_file(path);
    json r = base_report(path, g);
    r["method"] = mode;
    r["flags"] = json{{"mode", mode}, {"budget", budget}};
    auto t0 = std::chrono::steady_clock::now();

    VertexSet witness;
    if (mode == "exact") {
        ExactResult res = exact_min_ltd(g, SearchBudget{budget});
        r["gamma_tl"] = res.value;
        r["optimality_checked"] = res.optimality_checked;
        r["verified"] = is_ltd_set(g, res.witness);
        witness = res.witness;
    } else {
        Certificate c = mode == "construct" ? [&] {
            Certificate cert = construct_auto(g);
            if (cert.theorem == Theorem::exact)
                throw domain_error("no construction applies to this instance (try --auto or --exact)");
            return cert;
        }()
                                            : construct_auto(g);
        r["certificate_size"] = c.size();
        r["bound"] = bound_json(c);
        r["method"] = mode + ":" + theorem_name(c.theorem);
        r["verified"] = c.verified;
        r["trace"] = c.trace;
        if (c.theorem == Theorem::exact) r["gamma_tl"] = c.size();
        witness = c.set;
    }
    r["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    r["set"] = witness;
    if (!cert_out.empty()) {
        std::ofstream out(cert_out);
        for (size_t i = 0; i < witness.size(); ++i) out << witness[i] << (i + 1 < witness.size() ? " " : "\n");
    }
    std::cout << r.dump() << "\n";
    return 0;
}

struct ConjectureStats {
    std::atomic<long> instances{0};
    std::atomic<long> violations{0};
};

int cmd_check_conjecture(int enumerate_n, const std::string& cls_name, int n, int count,
                         uint64_t seed, bool construct_mode, int jobs, bool quiet) {
    ConjectureStats stats;
    std::mutex out_mutex;
    json summary;

    auto emit = [&](json& r) {
        std::lock_guard<std::mutex> lock(out_mutex);
        if (!quiet) std::cout << r.dump() << "\n";
    };

    if (enumerate_n > 0) {
        if (enumerate_n > 8) throw usage_error("enumerate scope refused: n > 8");
        EnumFilter f;
        f.twin_free = true;
        enumerate_connected(enumerate_n, f, [&](const Graph& g) {
            if (!is_isolate_free(g)) return true;
            json r = base_report(to_graph6(g), g);
            r["method"] = "exact";
            ExactResult res = exact_min_ltd(g);
            r["gamma_tl"] = res.value;
            r["verified"] = is_ltd_set(g, res.witness);
            bool ok = 3L * res.value <= 2L * g.order();
            r["within_bound"] = ok;
            ++stats.instances;
            if (!ok) ++stats.violations;
            emit(r);
            return true;
        });
        summary["scope"] = {{"enumerate", enumerate_n}};
    } else {
        GraphClass cls = parse_class(cls_name);
        std::atomic<int> next{0};
        auto worker = [&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                uint64_t s = seed + uint64_t(i);
                Graph g = random_instance({cls, n, s, true});
                json r = base_report(cls_name + ":" + std::to_string(s), g);
                r["seed"] = s;
                r["flags"] = json{{"class", cls_name},
                                  {"n", n},
                                  {"count", count},
                                  {"base_seed", seed},
                                  {"mode", construct_mode ? "construct" : "exact"},
                                  {"jobs", jobs}};
                auto t0 = std::chrono::steady_clock::now();
                bool ok;
                if (construct_mode) {
                    Certificate c = construct_auto(g);
                    r["method"] = "construct:" + theorem_name(c.theorem);
                    r["certificate_size"] = c.size();
                    r["bound"] = bound_json(c);
                    r["verified"] = c.verified;
                    long cap = class_cap(cls, g.order());
                    ok = c.verified && c.size() <= cap;
                } else {
                    ExactResult res = exact_min_ltd(g);
                    r["method"] = "exact";
                    r["gamma_tl"] = res.value;
                    r["verified"] = is_ltd_set(g, res.witness);
                    ok = 3L * res.value <= 2L * g.order();
                }
                r["within_bound"] = ok;
                r["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count();
                ++stats.instances;
                if (!ok) ++stats.violations;
                emit(r);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        summary["scope"] = {{"class", cls_name}, {"n", n}, {"count", count}, {"seed", seed}};
        summary["mode"] = construct_mode ? "construct" : "exact";
    }
    summary["instances"] = stats.instances.load();
    summary["violations"] = stats.violations.load();
    std::cout << summary.dump() << "\n";
    return stats.violations.load() == 0 ? 0 : 1;
}

int cmd_gen(const std::vector<std::string>& spec, const std::string& out_path,
            const std::string& format, uint64_t seed) {
    if (spec.empty()) throw usage_error("gen: missing family name");
    const std::string& fam = spec[0];
    auto arg_int = [&](size_t i) {
        if (i >= spec.size()) throw usage_error("gen: missing argument for " + fam);
        return std::stoi(spec[i]);
    };
    Graph g;
    if (fam == "cycle") g = cycle_graph(arg_int(1));
    else if (fam == "path") g = path_graph(arg_int(1));
    else if (fam == "complete") g = complete_graph(arg_int(1));
    else if (fam == "star") g = star_graph(arg_int(1));
    else if (fam == "split-tight") g = split_tight(arg_int(1));
    else if (fam == "half-graph-complement") g = half_graph_complement(arg_int(1));
    else if (fam == "two-corona") {
        if (spec.size() < 3) throw usage_error("gen two-corona: expected <base-family> <n>");
        Graph base;
        const std::string& bf = spec[1];
        int bn = arg_int(2);
        if (bf == "cycle") base = cycle_graph(bn);
        else if (bf == "path") base = path_graph(bn);
        else if (bf == "complete") base = complete_graph(bn);
        else if (bf == "star") base = star_graph(bn);
        else throw usage_error("gen two-corona: unknown base family " + bf);
        g = two_corona(base);
    } else if (fam == "random") {
        if (spec.size() < 3) throw usage_error("gen random: expected <class> <n>");
        g = random_instance({parse_class(spec[1]), arg_int(2), seed, true});
    } else {
        throw usage_error("gen: unknown family " + fam);
    }
    save_graph_file(out_path, g, format);
    std::cerr << "wrote " << out_path << " (n=" << g.order() << ", m=" << g.size() << ")\n";
    return 0;
}

int cmd_enumerate(int n, bool twin_free, const std::string& cls_name) {
    EnumFilter f;
    f.twin_free = twin_free;
    if (!cls_name.empty()) f.cls = parse_class(cls_name);
    enumerate_connected(n, f, [&](const Graph& g) {
        std::cout << to_graph6(g) << "\n";
        return true;
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locating-total dominating sets: exact solvers, certified constructions, generators"};
    app.require_subcommand(1);

    // verify
    std::string v_path, v_set;
    auto* verify = app.add_subcommand("verify", "check whether a vertex set is a TD/LTD-set");
    verify->add_option("graph", v_path, "graph file (edge list or graph6)")->required();
    verify->add_option("--set", v_set, "comma-separated vertex ids")->required();

    // solve
    std::string s_path, s_cert_out;
    bool s_exact = false, s_construct = false, s_auto = false;
    long s_budget = -1;
    auto* solve = app.add_subcommand("solve", "solve one instance, print a JSON report");
    solve->add_option("graph", s_path)->required();
    solve->add_flag("--exact", s_exact, "exact branch-and-bound");
    solve->add_flag("--construct", s_construct, "theorem constructions only");
    solve->add_flag("--auto", s_auto, "constructions with exact fallback (default)");
    solve->add_option("--budget", s_budget, "node budget for the exact search");
    solve->add_option("--cert-out", s_cert_out, "write the set to this file");

    // check-conjecture
    int c_enum = 0, c_n = 0, c_count = 0, c_jobs = 1;
    bool c_construct = false, c_exact = false, c_quiet = false;
    std::vector<std::string> c_random;
    auto* conj = app.add_subcommand("check-conjecture", "batch-verify the 2n/3 bound");
    conj->add_option("--enumerate", c_enum, "exhaustive over connected twin-free graphs of order n");
    conj->add_option("--random", c_random, "class n count seed")->expected(4);
    conj->add_flag("--construct", c_construct, "use constructions (default for --random)");
    conj->add_flag("--exact", c_exact, "use the exact solver (default for --enumerate)");
    conj->add_option("--jobs", c_jobs, "parallel workers across instances");
    conj->add_flag("--quiet", c_quiet, "summary only");

    // gen
    std::vector<std::string> g_spec;
    std::string g_out, g_format = "edgelist";
    uint64_t g_seed = default_seed();
    auto* gen = app.add_subcommand("gen", "generate a family instance");
    gen->add_option("family", g_spec, "family and parameters")->required()->expected(-1);
    gen->add_option("-o,--out", g_out, "output path")->required();
    gen->add_option("--format", g_format, "edgelist or graph6");
    gen->add_option("--seed", g_seed, "seed for random families");

    // enumerate
    int e_n = 0;
    bool e_twin_free = false;
    std::string e_class;
    auto* enumer = app.add_subcommand("enumerate", "stream connected graphs of order n as graph6");
    enumer->add_option("n", e_n)->required();
    enumer->add_flag("--twin-free", e_twin_free);
    enumer->add_option("--class", e_class, "restrict to a recognized class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify(v_path, v_set);
        if (*solve) {
            if (int(s_exact) + int(s_construct) + int(s_auto) > 1)
                throw usage_error("choose one of --exact, --construct, --auto");
            std::string mode = s_exact ? "exact" : s_construct ? "construct" : "auto";
            return cmd_solve(s_path, mode, s_budget, s_cert_out);
        }
        if (*conj) {
            if ((c_enum > 0) == !c_random.empty())
                throw usage_error("choose exactly one of --enumerate and --random");
            if (c_construct && c_exact) throw usage_error("choose one of --construct and --exact");
            if (c_enum > 0)
                return cmd_check_conjecture(c_enum, "", 0, 0, 0, c_construct, c_jobs, c_quiet);
            GraphClass cls = parse_class(c_random[0]);  // validated here, parsed again inside
            (void)cls;
            int n = std::stoi(c_random[1]);
            int count = std::stoi(c_random[2]);
            uint64_t seed = std::strtoull(c_random[3].c_str(), nullptr, 10);
            return cmd_check_conjecture(0, c_random[0], n, count, seed, !c_exact, c_jobs, c_quiet);
        }
        if (*gen) return cmd_gen(g_spec, g_out, g_format, g_seed);
        if (*enumer) return cmd_enumerate(e_n, e_twin_free, e_class);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
