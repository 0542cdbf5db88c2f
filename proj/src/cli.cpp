#include "subexp/cli.hpp"

#include "subexp/approx.hpp"
#include "subexp/densify.hpp"
#include "subexp/errors.hpp"
#include "subexp/expanders.hpp"
#include "subexp/fragility.hpp"
#include "subexp/generators.hpp"
#include "subexp/io.hpp"
#include "subexp/minors.hpp"
#include "subexp/params.hpp"
#include "subexp/separators.hpp"
#include "subexp/treedecomp.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace subexp {

namespace {

struct Options {
    std::string input, output, pattern, packing, g_spec = "const:1", mode = "enumerate", format = "csv",
                                                 method = "auto";
    int n = 0, d = 3, count = 1, t = 0, k = 1, max_k = 4, n_limit = 30, delta_degree = -1, tw_budget = 0,
        samples = 200, retries = 16, m = 0, max_degree = -1, separator_limit = 64;
    long long bound = 0, k_big = 0;
    std::size_t budget = 4096;
    double eps = 1, c = 1, delta = 0.5, iota = 0.25, mu = 1, b = std::exp(1.0), gamma = 1;
    std::optional<double> c0, c1, c2, c3, c4;
    std::uint64_t seed = 0;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_text_file(path, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Graph load_graph(const std::string& path) {
    if (path.empty()) throw ArgumentError("an input graph (-i) is required");
    return read_edge_list_file(path);
}

void add_input(CLI::App* app, Options& o) { app->add_option("-i,--input", o.input, "edge-list file")->required(); }
void add_output(CLI::App* app, Options& o) { app->add_option("-o,--output", o.output, "output file (default stdout)"); }
void add_seed(CLI::App* app, Options& o) { app->add_option("--seed", o.seed, "random seed")->required(); }

Json outcome_to_json(DensifyKind kind, const Graph& minor, const MinorCertificate& cert) {
    Json edges = Json::array();
    for (const auto& [u, v] : minor.edges()) edges.push_back(Json::array({u, v}));
    return {{"kind", densify_kind_name(kind)},
            {"minor_vertices", minor.n()},
            {"minor_edges", edges},
            {"certificate", certificate_to_json(cert)}};
}

int error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
    return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Separator, fragility and shallow-minor experiments on small graphs", "subexp"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate graphs")->require_subcommand(1);
    auto* gen_grid = gen->add_subcommand("grid3", "strong product of three paths R_n");
    gen_grid->add_option("--n", o.n)->required();
    auto* gen_reg = gen->add_subcommand("regular", "random d-regular graph");
    gen_reg->add_option("--n", o.n)->required();
    gen_reg->add_option("--d", o.d);
    add_seed(gen_reg, o);
    auto* gen_sub = gen->add_subcommand("subdivide", "subdivide every edge");
    add_input(gen_sub, o);
    gen_sub->add_option("--count", o.count, "internal vertices per edge");
    auto* gen_k1t = gen->add_subcommand("k1t", "K_t with every edge subdivided once");
    gen_k1t->add_option("--t", o.t)->required();
    for (auto* s : {gen_grid, gen_reg, gen_sub, gen_k1t}) add_output(s, o);

    auto* sep = app.add_subcommand("separate", "balanced separations")->require_subcommand(1);
    auto* sep_exact = sep->add_subcommand("exact", "minimum balanced separation");
    sep_exact->add_option("--n-limit", o.n_limit);
    auto* sep_heur = sep->add_subcommand("heuristic", "BFS-layer balanced separation");
    for (auto* s : {sep_exact, sep_heur}) {
        add_input(s, o);
        add_output(s, o);
    }

    auto* dec = app.add_subcommand("decompose", "bounded-reuse tree decomposition");
    add_input(dec, o);
    add_output(dec, o);
    dec->add_option("--delta", o.delta_degree, "maximum degree bound (default: that of the graph)");
    dec->add_option("--tw-budget", o.tw_budget)->required();

    auto* pack = app.add_subcommand("pack", "fractional packings")->require_subcommand(1);
    auto* pack_grid = pack->add_subcommand("grid", "packing of R_n");
    pack_grid->add_option("--n", o.n)->required();
    pack_grid->add_option("--eps", o.eps)->required();
    auto* pack_layer = pack->add_subcommand("layered", "uniform over layered removal sets of a decomposition");
    add_input(pack_layer, o);
    pack_layer->add_option("--delta", o.delta_degree, "maximum degree bound (default: that of the graph)");
    pack_layer->add_option("--tw-budget", o.tw_budget)->required();
    pack_layer->add_option("--k", o.k)->required();
    auto* pack_iter = pack->add_subcommand("iterated", "iterated layered packing");
    add_input(pack_iter, o);
    pack_iter->add_option("--eps", o.eps)->required();
    pack_iter->add_option("--c", o.c);
    pack_iter->add_option("--delta", o.delta, "separator exponent");
    pack_iter->add_option("--iota", o.iota);
    pack_iter->add_option("--max-degree", o.max_degree, "default: that of the graph");
    pack_iter->add_option("--mode", o.mode)->check(CLI::IsMember({"enumerate", "sample"}));
    pack_iter->add_option("--samples", o.samples);
    pack_iter->add_option("--budget", o.budget, "enumeration budget (support sets)");
    pack_iter->add_option("--seed", o.seed, "required in sample mode");
    pack_iter->add_option("--c1", o.c1, "override a computed constant");
    pack_iter->add_option("--c2", o.c2, "override a computed constant");
    pack_iter->add_option("--c3", o.c3, "override a computed constant");
    pack_iter->add_option("--c4", o.c4, "override a computed constant");
    for (auto* s : {pack_grid, pack_layer, pack_iter}) add_output(s, o);

    auto* ptas = app.add_subcommand("ptas", "independent set via a packing");
    add_input(ptas, o);
    add_output(ptas, o);
    ptas->add_option("--packing", o.packing)->required();
    ptas->add_option("--eps", o.eps)->required();
    ptas->add_option("--bound", o.bound, "witness component bound (default: packing meta bound)");

    auto* sg = app.add_subcommand("subgraph", "is the pattern a subgraph?");
    add_input(sg, o);
    add_output(sg, o);
    sg->add_option("--pattern", o.pattern)->required();
    sg->add_option("--packing", o.packing, "default: trivial packing");
    sg->add_option("--bound", o.bound, "witness component bound (default: packing meta bound, or n)");

    auto* nabla = app.add_subcommand("nabla", "densest shallow minor")->require_subcommand(1);
    auto* nabla_b = nabla->add_subcommand("brute", "exact, n <= 10");
    auto* nabla_g = nabla->add_subcommand("greedy", "certified lower bound");
    for (auto* s : {nabla_b, nabla_g}) {
        add_input(s, o);
        add_output(s, o);
        s->add_option("--k", o.k)->required();
    }

    auto* dens = app.add_subcommand("densify", "one densify-or-clique step");
    add_input(dens, o);
    add_output(dens, o);
    add_seed(dens, o);
    dens->add_option("--t", o.t)->required();
    dens->add_option("--eps", o.eps)->required();
    dens->add_option("--c", o.c)->required();
    dens->add_option("--retries", o.retries);

    auto* sc = app.add_subcommand("shallow-clique", "shallow clique minor search");
    add_input(sc, o);
    add_output(sc, o);
    add_seed(sc, o);
    sc->add_option("--eps", o.eps)->required();
    sc->add_option("--c0", o.c0, "first-round constant (default 2*32^m)");
    sc->add_option("--retries", o.retries);

    auto* params = app.add_subcommand("params", "formula calculators")->require_subcommand(1);
    auto* p_split = params->add_subcommand("split-constants", "constants of the iterated packing");
    p_split->add_option("--c", o.c)->required();
    p_split->add_option("--delta", o.delta)->required();
    p_split->add_option("--iota", o.iota)->required();
    p_split->add_option("--max-degree", o.max_degree)->required();
    auto* p_iter3 = params->add_subcommand("iter3", "eps, m, t for a given k");
    p_iter3->add_option("--k", o.k_big)->required();
    p_iter3->add_option("--delta", o.delta)->required();
    p_iter3->add_option("--mu", o.mu);
    p_iter3->add_option("--b", o.b, "default e");
    auto* p_exp = params->add_subcommand("expansion-bound", "f(k) = 2 g(1/(4k+4), k)");
    p_exp->add_option("--g", o.g_spec, "const:<v>, inverse, or table:<path>");
    p_exp->add_option("--k", o.k)->required();
    for (auto* s : {p_split, p_iter3, p_exp}) add_output(s, o);

    auto* ev = app.add_subcommand("expander-verify", "separator lower bound on a subdivided expander");
    add_output(ev, o);
    add_seed(ev, o);
    ev->add_option("--n", o.n)->required();
    ev->add_option("--m", o.m)->required();
    ev->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    ev->add_option("--separator-limit", o.separator_limit);

    auto* prof = app.add_subcommand("profile", "CSV of k, nabla_k estimate, reference curve");
    add_input(prof, o);
    add_output(prof, o);
    prof->add_option("--max-k", o.max_k)->required();
    prof->add_option("--gamma", o.gamma);
    prof->add_option("--method", o.method)->check(CLI::IsMember({"auto", "brute", "greedy"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        return error(err, "argument", e.what(), 2);
    }

    try {
        if (gen_grid->parsed()) {
            emit(write_edge_list(strong_product_cube(o.n)) + "\n", o.output, out);
        } else if (gen_reg->parsed()) {
            emit(write_edge_list(random_regular(o.n, o.d, o.seed)) + "\n", o.output, out);
        } else if (gen_sub->parsed()) {
            emit(write_edge_list(subdivide_edges(load_graph(o.input), o.count)) + "\n", o.output, out);
        } else if (gen_k1t->parsed()) {
            emit(write_edge_list(subdivided_clique(o.t)) + "\n", o.output, out);
        } else if (sep_exact->parsed()) {
            emit(dump(separation_to_json(exact_min_balanced_separation(load_graph(o.input), o.n_limit))), o.output, out);
        } else if (sep_heur->parsed()) {
            emit(dump(separation_to_json(heuristic_balanced_separation(load_graph(o.input)))), o.output, out);
        } else if (dec->parsed()) {
            const Graph g = load_graph(o.input);
            const int delta = o.delta_degree >= 0 ? o.delta_degree : g.max_degree();
            const auto td = build_bounded_reuse_decomposition(g, delta, o.tw_budget);
            emit(dump(decomposition_to_json(td)), o.output, out);
        } else if (pack_grid->parsed()) {
            const auto pi = grid_packing(o.n, o.eps);
            const int u = grid_modulus(o.eps);
            const bool trivial = o.n <= u - 1;
            PackingMeta meta{"grid", o.eps, trivial ? 1LL * o.n * o.n * o.n : 1LL * (u - 1) * (u - 1) * (u - 1),
                             std::nullopt, thickness(strong_product_cube(o.n), pi)};
            emit(dump(packing_to_json(pi, meta)), o.output, out);
        } else if (pack_layer->parsed()) {
            const Graph g = load_graph(o.input);
            const int delta = o.delta_degree >= 0 ? o.delta_degree : g.max_degree();
            const auto td = build_bounded_reuse_decomposition(g, delta, o.tw_budget);
            FractionalPacking pi;
            for (auto& x : layered_removal_sets(g, td, o.k)) pi.entries.push_back({std::move(x), Rational(1, o.k)});
            pi.normalize();
            const double th = thickness(g, pi);
            emit(dump(packing_to_json(pi, {"layered", th, max_residual_component(g, pi), std::nullopt, th})), o.output,
                 out);
        } else if (pack_iter->parsed()) {
            const Graph g = load_graph(o.input);
            const bool sample = o.mode == "sample";
            if (sample && pack_iter->count("--seed") == 0) throw ArgumentError("--seed is required in sample mode");
            auto consts = split_constants(o.c, o.delta, o.iota, o.max_degree >= 0 ? o.max_degree : g.max_degree());
            if (o.c1) consts.c1 = *o.c1;
            if (o.c2) consts.c2 = *o.c2;
            if (o.c3) consts.c3 = *o.c3;
            if (o.c4) consts.c4 = *o.c4;
            IteratedOptions opt;
            opt.mode = sample ? PackingMode::Sample : PackingMode::Enumerate;
            opt.sample_count = o.samples;
            opt.seed = o.seed;
            opt.enumeration_budget = o.budget;
            const auto res = iterated_vs_packing(g, o.eps, consts, opt);
            PackingMeta meta{sample ? "iterated-sample" : "iterated-enumerate", o.eps, res.bound,
                             sample ? std::optional<std::uint64_t>(o.seed) : std::nullopt, thickness(g, res.packing)};
            emit(dump(packing_to_json(res.packing, meta)), o.output, out);
        } else if (ptas->parsed()) {
            const Graph g = load_graph(o.input);
            PackingMeta meta;
            const auto pi = packing_from_json(read_json_file(o.packing), &meta);
            const long long bound = ptas->count("--bound") ? o.bound : meta.bound;
            const auto r = ptas_independent_set(g, o.eps, pi, {bound});
            emit(dump(Json{{"vertices", vertex_set_to_json(r.vertices)}, {"size", r.size}, {"support_index", r.support_index}}),
                 o.output, out);
        } else if (sg->parsed()) {
            const Graph g = load_graph(o.input);
            const Graph h = load_graph(o.pattern);
            FractionalPacking pi = FractionalPacking::trivial();
            long long bound = g.n();
            if (!o.packing.empty()) {
                PackingMeta meta;
                pi = packing_from_json(read_json_file(o.packing), &meta);
                bound = meta.bound;
            }
            if (sg->count("--bound")) bound = o.bound;
            const bool found = subgraph_test(g, h, pi, {std::max(1LL, bound)});
            emit(dump(Json{{"contains", found}}), o.output, out);
        } else if (nabla_b->parsed() || nabla_g->parsed()) {
            const Graph g = load_graph(o.input);
            const auto r = nabla_b->parsed() ? nabla_brute(g, o.k) : nabla_greedy(g, o.k);
            emit(dump(density_report_to_json(r)), o.output, out);
        } else if (dens->parsed()) {
            const Graph g = load_graph(o.input);
            DensifyOptions opt;
            opt.retries = o.retries;
            const auto r = densify_or_clique(g, o.t, o.eps, o.c, o.seed, opt);
            Json j = outcome_to_json(r.kind, r.minor, r.certificate);
            j["target_met"] = r.target_met;
            j["hypotheses_met"] = r.hypotheses_met;
            j["attempts"] = r.attempts;
            j["skipped_stops"] = r.skipped_stops;
            j["failed_stage"] = r.failed_stage;
            j["diagnostics"] = r.diagnostics;
            j["seed"] = o.seed;
            emit(dump(j), o.output, out);
        } else if (sc->parsed()) {
            const Graph g = load_graph(o.input);
            IterateOptions opt;
            opt.c0 = o.c0;
            opt.densify.retries = o.retries;
            const auto r = shallow_clique(g, o.eps, o.seed, opt);
            Json j = outcome_to_json(r.outcome.kind, r.outcome.minor, r.outcome.certificate);
            j["m"] = r.m;
            j["t"] = r.t;
            j["d"] = r.d;
            j["rounds"] = r.outcome.rounds;
            j["depth"] = r.outcome.depth;
            j["depth_within_bound"] = r.outcome.depth_within_bound;
            j["diagnostics"] = r.outcome.diagnostics;
            j["seed"] = o.seed;
            emit(dump(j), o.output, out);
        } else if (p_split->parsed()) {
            const auto s = split_constants(o.c, o.delta, o.iota, o.max_degree);
            emit(dump(Json{{"c1", s.c1}, {"c2", s.c2}, {"c2prime", s.c2prime}, {"c3", s.c3}, {"c4", s.c4},
                           {"c5", s.c5}, {"b", s.b}}),
                 o.output, out);
        } else if (p_iter3->parsed()) {
            const auto p = iter3_params(o.k_big, o.delta, o.mu, o.b);
            emit(dump(Json{{"eps", p.eps}, {"m", p.m}, {"t", p.t}}), o.output, out);
        } else if (p_exp->parsed()) {
            const auto g = witness_function_from_spec(o.g_spec);
            emit(dump(Json{{"k", o.k}, {"eps", 1.0 / (4.0 * o.k + 4.0)}, {"f", expansion_bound_from_witness(g, o.k)}}),
                 o.output, out);
        } else if (ev->parsed()) {
            const auto r = expander_separator_experiment(o.n, o.m, o.seed, o.separator_limit);
            emit(o.format == "json" ? dump(expander_report_to_json(r))
                                    : expander_csv_header() + "\n" + expander_csv_row(r) + "\n",
                 o.output, out);
        } else if (prof->parsed()) {
            const Graph g = load_graph(o.input);
            if (o.max_k < 0) throw ArgumentError("--max-k must be >= 0");
            const bool brute = o.method == "brute" || (o.method == "auto" && g.n() <= 10);
            std::ostringstream csv;
            csv << "k,nabla,reference\n" << std::setprecision(12);
            for (int k = 0; k <= o.max_k; ++k) {
                const auto r = brute ? nabla_brute(g, k) : nabla_greedy(g, k);
                csv << k << ',' << to_double(r.density) << ',' << subexponential_reference(o.gamma, k) << '\n';
            }
            emit(csv.str(), o.output, out);
        }
    } catch (const ParseError& e) {
        return error(err, "parse", e.what(), 2);
    } catch (const ArgumentError& e) {
        return error(err, "argument", e.what(), 2);
    } catch (const BudgetExceededError& e) {
        return error(err, "budget", e.what(), 3);
    } catch (const RefusalError& e) {
        return error(err, "refusal", e.what(), 3);
    } catch (const std::exception& e) {
        return error(err, "internal", e.what(), 1);
    }
    return 0;
}

}  // namespace subexp
