#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "monopole/connectivity.hpp"
#include "monopole/edgelist.hpp"
#include "monopole/errors.hpp"
#include "monopole/report.hpp"

namespace {

using namespace monopole;

struct CommonOpts {
    std::string gen;
    std::string input;
    std::string vertex = "0";
    std::string divisor;
    std::string format = "human";
    std::string out;
    int base = 0;
    int bound = 0;
    bool bound_set = false;
    long long cap = 0;
    bool cap_set = false;
    std::uint64_t seed = 0;
};

struct LoadedGraph {
    Graph graph;
    std::optional<int> p_alias;
};

LoadedGraph load_graph(const CommonOpts& o) {
    if (o.gen.empty() == o.input.empty()) {
        throw BadParameter("need exactly one input source: --gen or --input");
    }
    if (!o.gen.empty()) {
        GeneratedGraph gg = graph_from_spec(o.gen, o.seed);
        return {std::move(gg.graph), gg.p};
    }
    return {read_edge_list_file(o.input), std::nullopt};
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_vertex = false,
                bool with_divisor = false) {
    cmd->add_option("--gen", o.gen, "generator spec, e.g. complete:4 or bridged:triangle,triangle");
    cmd->add_option("--input", o.input, "edge-list file");
    cmd->add_option("--format", o.format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
    cmd->add_option("--seed", o.seed, "seed for random generators");
    cmd->add_option("--cap", o.cap, "enumeration cap override")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { o.cap_set = true; });
    if (with_vertex) cmd->add_option("--vertex", o.vertex, "vertex index, or P for the distinguished one");
    if (with_divisor) {
        cmd->add_option("--divisor", o.divisor, "dense a,b,c or sparse v:c,v:c (v may be P)");
        cmd->add_option("--base", o.base, "base vertex for reductions");
    }
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw BadParameter("cannot open output file: " + o.out);
    f << text;
}

std::string render(const CommonOpts& o, const Json& j, const std::string& human) {
    return o.format == "json" ? j.dump() + "\n" : human;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int run(int argc, char** argv) {
    CLI::App app{"divisor theory of finite graphs: Laplacian monopoles, Baker-Norine "
                 "rank, reduced divisors, Jacobians and Weierstrass semigroup windows"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string family = "random-connected";
    std::string nrange = "4..6";
    int count = 10;

    auto* c_lap = app.add_subcommand("laplacian", "print the Laplacian matrix");
    add_common(c_lap, o);
    auto* c_genus = app.add_subcommand("genus", "cycle rank |E|-|V|+1");
    add_common(c_genus, o);
    auto* c_conn = app.add_subcommand("connectivity", "edge/vertex/algebraic connectivity and cut vertices");
    add_common(c_conn, o);
    auto* c_rank = app.add_subcommand("rank", "Baker-Norine rank with obstruction witness");
    add_common(c_rank, o, false, true);
    auto* c_reduce = app.add_subcommand("reduce", "unique base-reduced divisor plus firing script");
    add_common(c_reduce, o, false, true);
    auto* c_jac = app.add_subcommand("jacobian", "invariant factors of the Jacobian");
    add_common(c_jac, o, true);
    auto* c_semi = app.add_subcommand("semigroups", "H_f, H_r, H_r^red windows and containment checks");
    add_common(c_semi, o, true);
    c_semi->add_option("--bound", o.bound, "window bound B")
        ->each([&](const std::string&) { o.bound_set = true; });
    auto* c_sweep = app.add_subcommand("sweep", "containment reports over a graph family, JSONL");
    add_common(c_sweep, o);
    c_sweep->add_option("--family", family, "random-tree | random-connected | path | star | cycle | complete | wheel");
    c_sweep->add_option("--count", count, "graphs to draw for random families");
    c_sweep->add_option("--n", nrange, "size range, e.g. 4..6");
    c_sweep->add_option("--bound", o.bound, "window bound floor")
        ->each([&](const std::string&) { o.bound_set = true; });

    CLI11_PARSE(app, argc, argv);

    unsigned long long hf_cap = o.cap_set ? static_cast<unsigned long long>(o.cap)
                                          : kDefaultHfPerAlphaCap;
    unsigned long long level_cap = o.cap_set ? static_cast<unsigned long long>(o.cap)
                                             : kDefaultRankLevelCap;

    if (c_lap->parsed()) {
        auto [g, p] = load_graph(o);
        std::ostringstream human;
        for (const auto& row : build_laplacian(g)) {
            for (std::size_t j = 0; j < row.size(); ++j)
                human << (j ? " " : "") << row[j];
            human << "\n";
        }
        emit(o, render(o, laplacian_json(g), human.str()));
    } else if (c_genus->parsed()) {
        auto [g, p] = load_graph(o);
        int gen = genus(g);
        emit(o, render(o, Json{{"genus", gen}}, std::to_string(gen) + "\n"));
    } else if (c_conn->parsed()) {
        auto [g, p] = load_graph(o);
        ConnectivityReport r = connectivity_report(g);
        std::ostringstream human;
        human << "lambda=" << r.edge_connectivity << " kappa=" << r.vertex_connectivity
              << " delta=" << r.min_degree << " lambda2=" << r.algebraic_connectivity << "\n";
        human << "cut vertices:";
        if (r.cut_vertices.empty()) human << " none";
        for (int v : r.cut_vertices) human << " " << v;
        human << "\n";
        emit(o, render(o, connectivity_json(g, r), human.str()));
    } else if (c_rank->parsed()) {
        auto [g, p] = load_graph(o);
        Divisor d = parse_divisor(o.divisor, g.vertex_count(), p);
        RankCertificate cert = rank(g, d, level_cap);
        std::ostringstream human;
        human << "rank " << cert.rank << "\n";
        if (cert.obstruction) {
            human << "obstruction:";
            for (const Int& c : cert.obstruction->coeff) human << " " << c;
            human << "\n";
        }
        emit(o, render(o, rank_json(g, cert), human.str()));
    } else if (c_reduce->parsed()) {
        auto [g, p] = load_graph(o);
        Divisor d = parse_divisor(o.divisor, g.vertex_count(), p);
        ReducedForm r = reduce(g, d, o.base);
        std::ostringstream human;
        human << "reduced:";
        for (const Int& c : r.reduced.coeff) human << " " << c;
        human << "\nscript:";
        for (const Int& c : r.script.values) human << " " << c;
        human << "\n";
        emit(o, render(o, reduced_json(r), human.str()));
    } else if (c_jac->parsed()) {
        auto [g, p] = load_graph(o);
        int q = parse_vertex(o.vertex, g.vertex_count(), p);
        JacobianStructure j = jacobian(g, q);
        std::ostringstream human;
        human << "factors:";
        if (j.invariant_factors.empty()) human << " none (trivial group)";
        for (const Int& f : j.invariant_factors) human << " " << f;
        human << "\norder: " << j.order << "\n";
        emit(o, render(o, jacobian_json(j), human.str()));
    } else if (c_semi->parsed()) {
        auto [g, p_alias] = load_graph(o);
        int p = parse_vertex(o.vertex, g.vertex_count(), p_alias);
        int bound = o.bound_set
                        ? std::max(o.bound, std::max(2 * genus(g), g.degree(p)))
                        : default_window_bound(g, p);
        ContainmentReport r = containment_report(g, p, bound, hf_cap, level_cap);
        emit(o, render(o, containment_json(g, r, true), human_containment(g, r)));
    } else if (c_sweep->parsed()) {
        SweepSpec spec;
        spec.family = sweep_family_from_name(family);
        spec.count = count;
        auto [lo, hi] = parse_range(nrange);
        spec.n_min = lo;
        spec.n_max = hi;
        spec.seed = o.seed;
        if (o.bound_set) spec.bound = o.bound;
        spec.per_alpha_cap = hf_cap;
        spec.level_cap = level_cap;
        SweepResult res = conjecture_sweep(spec);
        std::ostringstream lines;
        for (const SweepUnit& u : res.units) lines << sweep_unit_json(u).dump() << "\n";
        lines << sweep_summary_json(res).dump() << "\n";
        emit(o, lines.str());
        if (res.violations > 0) {
            std::cerr << "FINDING: " << res.violations
                      << " unit(s) with H_r not contained in H_f; witnesses are in the report\n";
        }
        if (res.closure_findings > 0) {
            std::cerr << "FINDING: " << res.closure_findings
                      << " unit(s) where the H_r window is not additively closed\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DisconnectedGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LengthMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadDegree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotEffective& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
