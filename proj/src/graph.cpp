#include "monopole/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "monopole/errors.hpp"

namespace monopole {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 2) {
        throw BadParameter("graph order must be at least 2, got " + std::to_string(n));
    }
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw BadParameter("edge endpoint out of range: " + std::to_string(u) + " " +
                               std::to_string(v));
        }
        if (u == v) {
            throw BadParameter("loop at vertex " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw BadParameter("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
    }
    Graph g;
    g.n_ = n;
    g.edges_.assign(seen.begin(), seen.end());
    g.adj_.resize(n);
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> Graph::distances_from(int source) const {
    std::vector<int> dist(n_, -1);
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool Graph::is_connected() const {
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

void require_connected(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph();
}

LaplacianMatrix build_laplacian(const Graph& g) {
    int n = g.vertex_count();
    LaplacianMatrix m(n, std::vector<long long>(n, 0));
    for (int v = 0; v < n; ++v) {
        m[v][v] = g.degree(v);
        for (int w : g.neighbors(v)) m[v][w] = -1;
    }
    return m;
}

int genus(const Graph& g) {
    require_connected(g);
    return g.edge_count() - g.vertex_count() + 1;
}

}  // namespace monopole
