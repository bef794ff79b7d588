#include "monopole/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "monopole/errors.hpp"

namespace monopole {

namespace {

// One pass of connectivity over an induced vertex subset given by `alive`.
// Returns the number of components among alive vertices.
int component_count(const Graph& g, const std::vector<bool>& alive) {
    int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || seen[s]) continue;
        ++comps;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (alive[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
    }
    return comps;
}

bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

int edge_connectivity(const Graph& g) {
    require_connected(g);
    int n = g.vertex_count();

    // Stoer-Wagner with unit weights; vertices merge into supernodes.
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (const auto& [u, v] : g.edges()) {
        w[u][v] = 1;
        w[v][u] = 1;
    }
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    int best = g.edge_count() + 1;
    while (active.size() > 1) {
        // Maximum adjacency ordering starting from active[0].
        std::vector<int> order;
        std::vector<bool> added(n, false);
        std::vector<int> weight_to_set(n, 0);
        order.push_back(active[0]);
        added[active[0]] = true;
        for (int v : active) weight_to_set[v] = w[active[0]][v];
        while (order.size() < active.size()) {
            int pick = -1;
            for (int v : active) {
                if (!added[v] && (pick < 0 || weight_to_set[v] > weight_to_set[pick])) pick = v;
            }
            order.push_back(pick);
            added[pick] = true;
            for (int v : active) {
                if (!added[v]) weight_to_set[v] += w[pick][v];
            }
        }
        int t = order.back();
        int s = order[order.size() - 2];
        best = std::min(best, weight_to_set[t]);  // cut of the phase
        // Merge t into s.
        for (int v : active) {
            if (v == s || v == t) continue;
            w[s][v] += w[t][v];
            w[v][s] = w[s][v];
        }
        active.erase(std::find(active.begin(), active.end(), t));
    }
    return best;
}

int vertex_connectivity(const Graph& g) {
    require_connected(g);
    int n = g.vertex_count();
    if (g.is_complete()) return n - 1;

    // kappa <= delta for non-complete graphs, so the search below terminates.
    int delta = g.min_degree();
    for (int k = 1; k <= delta; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        do {
            std::vector<bool> alive(n, true);
            for (int i : idx) alive[i] = false;
            if (n - k >= 2 && component_count(g, alive) >= 2) return k;
        } while (next_combination(idx, n));
    }
    return delta;
}

double algebraic_connectivity(const Graph& g) {
    require_connected(g);
    int n = g.vertex_count();
    auto lap = build_laplacian(g);
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(lap[i][j]);

    // Cyclic Jacobi sweeps until every off-diagonal entry is below 1e-12.
    const double tol = 1e-12;
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p][q]));
        if (off < tol) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < tol) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig[1];
}

std::vector<std::vector<int>> components_of(const Graph& g, int v) {
    int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    alive[v] = false;
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (alive[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> cuts;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (components_of(g, v).size() >= 2) cuts.push_back(v);
    }
    return cuts;
}

ConnectivityReport connectivity_report(const Graph& g) {
    require_connected(g);
    ConnectivityReport r;
    r.edge_connectivity = edge_connectivity(g);
    r.vertex_connectivity = vertex_connectivity(g);
    r.min_degree = g.min_degree();
    r.algebraic_connectivity = algebraic_connectivity(g);
    r.cut_vertices = cut_vertices(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        r.components_after_removal[v] = components_of(g, v);
    }
    return r;
}

}  // namespace monopole
