#include "monopole/families.hpp"

#include <algorithm>
#include <numeric>

#include "monopole/errors.hpp"

namespace monopole {

GeneratedGraph path(int n) {
    if (n < 2) throw BadParameter("path needs n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return {Graph::from_edges(n, e), 0, "path:" + std::to_string(n)};
}

GeneratedGraph star(int leaves) {
    if (leaves < 1) throw BadParameter("star needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return {Graph::from_edges(leaves + 1, e), 0, "star:" + std::to_string(leaves)};
}

GeneratedGraph cycle(int k) {
    if (k < 3) throw BadParameter("cycle needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
    return {Graph::from_edges(k, e), 0, "cycle:" + std::to_string(k)};
}

GeneratedGraph complete(int n) {
    if (n < 2) throw BadParameter("complete graph needs n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return {Graph::from_edges(n, e), 0, "complete:" + std::to_string(n)};
}

GeneratedGraph wheel(int rim) {
    if (rim < 3) throw BadParameter("wheel needs a rim of length >= 3");
    int hub = rim;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rim; ++i) {
        e.push_back({i, (i + 1) % rim});
        e.push_back({i, hub});
    }
    return {Graph::from_edges(rim + 1, e), hub, "wheel:" + std::to_string(rim)};
}

GeneratedGraph unicyclic(int k, const std::vector<int>& attach) {
    if (k < 3) throw BadParameter("unicyclic cycle length must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
    int next = k;
    for (int a : attach) {
        if (a < 0 || a >= k) throw BadParameter("pendant attachment out of cycle range");
        e.push_back({a, next++});
    }
    Graph g = Graph::from_edges(next, e);
    int p = 0;
    for (int v = 0; v < k; ++v) {
        if (g.degree(v) == 2) {
            p = v;
            break;
        }
    }
    std::string name = "unicyclic:" + std::to_string(k);
    for (int a : attach) name += "," + std::to_string(a);
    return {std::move(g), p, name};
}

GeneratedGraph bridged(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count();
    int n2 = g2.vertex_count();
    int p = n1 + n2;
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g1.edges()) e.push_back({u, v});
    for (auto [u, v] : g2.edges()) e.push_back({u + n1, v + n1});
    e.push_back({p, 0});
    e.push_back({p, n1});
    return {Graph::from_edges(p + 1, e), p, "bridged"};
}

GeneratedGraph clique_plus_pendant(int m) {
    if (m < 2) throw BadParameter("clique order must be >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) e.push_back({i, j});
    e.push_back({0, m});
    return {Graph::from_edges(m + 1, e), 0, "clique-pendant:" + std::to_string(m)};
}

GeneratedGraph random_tree(int n, SplitMix64& rng) {
    if (n < 2) throw BadParameter("tree needs n >= 2");
    std::vector<std::pair<int, int>> e;
    if (n == 2) {
        e.push_back({0, 1});
    } else {
        std::vector<int> pruefer(n - 2);
        for (int& x : pruefer) x = static_cast<int>(rng.next_below(n));
        std::vector<int> deg(n, 1);
        for (int x : pruefer) ++deg[x];
        // Standard decode: repeatedly join the smallest leaf to the next
        // sequence entry.
        std::vector<bool> used(n, false);
        for (int x : pruefer) {
            int leaf = -1;
            for (int v = 0; v < n; ++v) {
                if (deg[v] == 1 && !used[v]) {
                    leaf = v;
                    break;
                }
            }
            e.push_back({leaf, x});
            used[leaf] = true;
            --deg[x];
        }
        std::vector<int> last;
        for (int v = 0; v < n; ++v)
            if (!used[v] && deg[v] == 1) last.push_back(v);
        e.push_back({last[0], last[1]});
    }
    return {Graph::from_edges(n, e), 0, "random-tree:" + std::to_string(n)};
}

GeneratedGraph random_tree(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_tree(n, rng);
}

GeneratedGraph random_connected(int n, int extra_edges, SplitMix64& rng) {
    if (extra_edges < 0) throw BadParameter("extra edge count must be nonnegative");
    GeneratedGraph tree = random_tree(n, rng);
    std::vector<std::pair<int, int>> e(tree.graph.edges());
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!tree.graph.has_edge(u, v)) candidates.push_back({u, v});
    // Fisher-Yates with the injected generator.
    for (std::size_t i = candidates.size(); i > 1; --i) {
        std::size_t j = rng.next_below(i);
        std::swap(candidates[i - 1], candidates[j]);
    }
    int take = std::min<int>(extra_edges, static_cast<int>(candidates.size()));
    e.insert(e.end(), candidates.begin(), candidates.begin() + take);
    return {Graph::from_edges(n, e), 0, "random-connected:" + std::to_string(n)};
}

}  // namespace monopole
