#include "monopole/edgelist.hpp"

#include <fstream>
#include <sstream>

#include "monopole/errors.hpp"

namespace monopole {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto from = s.find_first_not_of(" \t\r\n");
    if (from == std::string::npos) return "";
    auto to = s.find_last_not_of(" \t\r\n");
    return s.substr(from, to - from + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw BadParameter("cannot parse " + what + ": '" + s + "'");
    }
}

// Divisor coefficients carry no width limit.
Int parse_int_exact(const std::string& s, const std::string& what) {
    bool shaped = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) ==
                                    std::string::npos;
    if (!shaped || (s[0] == '-' && s.size() == 1)) {
        throw BadParameter("cannot parse " + what + ": '" + s + "'");
    }
    return Int(s);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        if (n < 0) {
            long long nn;
            if (!(ls >> nn) || nn < 2) throw BadParameter("bad vertex count line: '" + s + "'");
            std::string rest;
            if (ls >> rest) throw BadParameter("trailing tokens after vertex count");
            n = static_cast<int>(nn);
        } else {
            long long u, v;
            if (!(ls >> u >> v)) throw BadParameter("bad edge line: '" + s + "'");
            std::string rest;
            if (ls >> rest) throw BadParameter("trailing tokens on edge line: '" + s + "'");
            edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        }
    }
    if (n < 0) throw BadParameter("empty edge-list input");
    return Graph::from_edges(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParameter("cannot open input file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

namespace {

// Sub-specs inside bridged: "triangle", "c<k>" (cycle) or "k<m>" (clique).
Graph part_from_token(const std::string& tok) {
    if (tok == "triangle") return cycle(3).graph;
    if (tok.size() >= 2 && tok[0] == 'c') {
        return cycle(static_cast<int>(parse_ll(tok.substr(1), "cycle length"))).graph;
    }
    if (tok.size() >= 2 && tok[0] == 'k') {
        return complete(static_cast<int>(parse_ll(tok.substr(1), "clique order"))).graph;
    }
    throw BadParameter("unknown bridged part '" + tok + "' (use triangle, c<k> or k<m>)");
}

}  // namespace

GeneratedGraph graph_from_spec(const std::string& spec, std::uint64_t seed) {
    std::string name = spec;
    std::vector<std::string> params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        params = split(spec.substr(colon + 1), ',');
    }
    auto want = [&](std::size_t k) {
        if (params.size() != k) {
            throw BadParameter("generator " + name + " expects " + std::to_string(k) +
                               " parameter(s)");
        }
    };
    auto num = [&](std::size_t i) {
        return static_cast<int>(parse_ll(params[i], name + " parameter"));
    };

    if (name == "path") {
        want(1);
        return path(num(0));
    }
    if (name == "star") {
        want(1);
        return star(num(0));
    }
    if (name == "cycle") {
        want(1);
        return cycle(num(0));
    }
    if (name == "complete") {
        want(1);
        return complete(num(0));
    }
    if (name == "wheel") {
        want(1);
        return wheel(num(0));
    }
    if (name == "clique-pendant") {
        want(1);
        return clique_plus_pendant(num(0));
    }
    if (name == "unicyclic") {
        if (params.empty()) throw BadParameter("unicyclic needs a cycle length");
        std::vector<int> attach;
        for (std::size_t i = 1; i < params.size(); ++i) attach.push_back(num(i));
        return unicyclic(num(0), attach);
    }
    if (name == "bridged") {
        want(2);
        return bridged(part_from_token(params[0]), part_from_token(params[1]));
    }
    if (name == "random-tree") {
        want(1);
        return random_tree(num(0), seed);
    }
    if (name == "random-connected") {
        want(2);
        SplitMix64 rng(seed);
        return random_connected(num(0), num(1), rng);
    }
    throw BadParameter("unknown generator: " + name);
}

int parse_vertex(const std::string& text, int n, std::optional<int> p_alias) {
    if (text == "P" || text == "p") {
        if (!p_alias) throw BadParameter("'P' needs a generated graph with a distinguished vertex");
        return *p_alias;
    }
    long long v = parse_ll(text, "vertex");
    if (v < 0 || v >= n) throw BadParameter("vertex out of range: " + text);
    return static_cast<int>(v);
}

Divisor parse_divisor(const std::string& text, int n, std::optional<int> p_alias) {
    Divisor d(static_cast<std::size_t>(n));
    if (text.empty()) throw BadParameter("empty divisor");
    if (text.find(':') != std::string::npos) {
        for (const std::string& pair : split(text, ',')) {
            auto kv = split(pair, ':');
            if (kv.size() != 2) throw BadParameter("bad sparse divisor entry '" + pair + "'");
            int v = parse_vertex(kv[0], n, p_alias);
            d[static_cast<std::size_t>(v)] += parse_int_exact(kv[1], "coefficient");
        }
    } else {
        auto parts = split(text, ',');
        if (static_cast<int>(parts.size()) != n) {
            throw BadParameter("dense divisor needs " + std::to_string(n) + " entries, got " +
                               std::to_string(parts.size()));
        }
        for (int i = 0; i < n; ++i) d[i] = parse_int_exact(parts[i], "coefficient");
    }
    return d;
}

}  // namespace monopole
