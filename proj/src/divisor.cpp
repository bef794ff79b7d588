#include "monopole/divisor.hpp"

#include <algorithm>
#include <type_traits>

#include "monopole/connectivity.hpp"
#include "monopole/errors.hpp"

namespace monopole {

Int Divisor::degree() const {
    Int s = 0;
    for (const Int& c : coeff) s += c;
    return s;
}

bool Divisor::is_effective() const {
    return std::all_of(coeff.begin(), coeff.end(), [](const Int& c) { return c >= 0; });
}

bool Divisor::is_zero() const {
    return std::all_of(coeff.begin(), coeff.end(), [](const Int& c) { return c == 0; });
}

std::vector<int> Divisor::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < coeff.size(); ++i)
        if (coeff[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

namespace {

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw LengthMismatch("vector length " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

Divisor operator+(const Divisor& a, const Divisor& b) {
    require_same_length(a.size(), b.size());
    Divisor r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
    require_same_length(a.size(), b.size());
    Divisor r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool lex_less(const Divisor& a, const Divisor& b) {
    return std::lexicographical_compare(a.coeff.begin(), a.coeff.end(), b.coeff.begin(),
                                        b.coeff.end());
}

FiringScript operator+(const FiringScript& a, const FiringScript& b) {
    require_same_length(a.size(), b.size());
    FiringScript r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

FiringScript operator-(const FiringScript& a, const FiringScript& b) {
    require_same_length(a.size(), b.size());
    FiringScript r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

FiringScript operator-(const FiringScript& a) {
    FiringScript r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Divisor divisor_of(const Graph& g, const FiringScript& f) {
    int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) {
        throw LengthMismatch("script length " + std::to_string(f.size()) + " on graph of order " +
                             std::to_string(n));
    }
    Divisor d(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Int acc = f[v] * g.degree(v);
        for (int w : g.neighbors(v)) acc -= f[w];
        d[v] = acc;
    }
    return d;
}

Divisor canonical_divisor(const Graph& g) {
    Divisor k(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) k[v] = g.degree(v) - 2;
    return k;
}

FiringScript indicator(const Graph& g, int p) {
    if (p < 0 || p >= g.vertex_count()) throw BadParameter("vertex out of range");
    FiringScript f(static_cast<std::size_t>(g.vertex_count()));
    f[p] = -1;
    return f;
}

Divisor fire_set(const Graph& g, const Divisor& d, const std::vector<int>& s) {
    int n = g.vertex_count();
    if (static_cast<int>(d.size()) != n) throw LengthMismatch("divisor length mismatch");
    std::vector<char> in_s(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw BadParameter("set member out of range");
        in_s[v] = 1;
    }
    Divisor r = d;
    for (int v = 0; v < n; ++v) {
        int cross = 0;
        for (int w : g.neighbors(v)) cross += in_s[v] != in_s[w];
        if (cross == 0) continue;
        if (in_s[v]) {
            r[v] -= cross;
        } else {
            r[v] += cross;
        }
    }
    return r;
}

bool is_g_parking(const Graph& g, const Divisor& d, int q) {
    int n = g.vertex_count();
    if (static_cast<int>(d.size()) != n) throw LengthMismatch("divisor length mismatch");
    for (int v = 0; v < n; ++v)
        if (v != q && d[v] < 0) return false;

    std::vector<int> cnt(n, 0);
    std::vector<char> burnt(n, 0);
    burnt[q] = 1;
    for (int w : g.neighbors(q)) ++cnt[w];
    int burned = 1;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (!burnt[v] && d[v] < cnt[v]) {
                burnt[v] = 1;
                ++burned;
                for (int w : g.neighbors(v))
                    if (!burnt[w]) ++cnt[w];
                progress = true;
                break;
            }
        }
    }
    return burned == n;
}

bool is_g_parking_bruteforce(const Graph& g, const Divisor& d, int q) {
    int n = g.vertex_count();
    if (static_cast<int>(d.size()) != n) throw LengthMismatch("divisor length mismatch");
    if (n > 24) throw BadParameter("subset oracle limited to n <= 24");
    for (int v = 0; v < n; ++v)
        if (v != q && d[v] < 0) return false;

    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != q) others.push_back(v);
    int m = static_cast<int>(others.size());
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
        std::vector<char> in_a(n, 0);
        for (int i = 0; i < m; ++i)
            if (mask & (1UL << i)) in_a[others[i]] = 1;
        bool found = false;
        for (int i = 0; i < m && !found; ++i) {
            if (!(mask & (1UL << i))) continue;
            int v = others[i];
            int outdeg = 0;
            for (int w : g.neighbors(v)) outdeg += !in_a[w];
            if (d[v] < outdeg) found = true;
        }
        if (!found) return false;
    }
    return true;
}

namespace {

struct I64Overflow {};

template <class I>
inline void iadd(I& a, const I& b) {
    if constexpr (std::is_same_v<I, long long>) {
        if (__builtin_add_overflow(a, b, &a)) throw I64Overflow{};
    } else {
        a += b;
    }
}

template <class I>
inline void isub(I& a, const I& b) {
    if constexpr (std::is_same_v<I, long long>) {
        if (__builtin_sub_overflow(a, b, &a)) throw I64Overflow{};
    } else {
        a -= b;
    }
}

template <class I>
inline I imul(const I& a, long long b) {
    if constexpr (std::is_same_v<I, long long>) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw I64Overflow{};
        return r;
    } else {
        return a * b;
    }
}

// ceil(num / den) for num > 0, den > 0.
template <class I>
inline I ceil_div(const I& num, long long den) {
    return (num + (den - 1)) / den;
}

}  // namespace

Reducer::Reducer(const Graph& g, int q) : g_(&g), q_(q), n_(g.vertex_count()) {
    if (q < 0 || q >= n_) throw BadParameter("base vertex out of range");
    require_connected(g);
    dist_ = g.distances_from(q);
    ecc_ = *std::max_element(dist_.begin(), dist_.end());
    layers_.assign(ecc_ + 1, {});
    for (int v = 0; v < n_; ++v) layers_[dist_[v]].push_back(v);
    inward_.assign(n_, 0);
    outward_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
        for (int w : g.neighbors(v)) {
            if (dist_[w] == dist_[v] - 1) ++inward_[v];
            if (dist_[w] == dist_[v] + 1) ++outward_[v];
        }
    }
    cnt_.resize(n_);
    burnt_.resize(n_);
}

template <class I, bool TrackScript>
void Reducer::engine(std::vector<I>& d, std::vector<I>* script, std::vector<int>* burn_order) {
    const Graph& g = *g_;

    // Stage 1: push all debt inward, outermost layer first, so that q ends
    // up absorbing it and everything else is nonnegative.
    for (int k = ecc_ - 1; k >= 0; --k) {
        I t = 0;
        for (int v : layers_[k + 1]) {
            if (d[v] < 0) {
                I need = ceil_div<I>(-d[v], inward_[v]);
                if (need > t) t = need;
            }
        }
        if (t == 0) continue;
        for (int v : layers_[k])
            if (outward_[v]) isub(d[v], imul(t, static_cast<long long>(outward_[v])));
        for (int v : layers_[k + 1]) iadd(d[v], imul(t, static_cast<long long>(inward_[v])));
        if constexpr (TrackScript) {
            for (int kk = 0; kk <= k; ++kk)
                for (int v : layers_[kk]) isub((*script)[v], t);
        }
    }

    // Stage 2: Dhar loop. Burn from q; if anything survives, the surviving
    // set can legally fire, and may do so several times at once (legal set
    // firings commute, so batching does not change the fixed point).
    for (;;) {
        std::fill(cnt_.begin(), cnt_.end(), 0);
        std::fill(burnt_.begin(), burnt_.end(), 0);
        if (burn_order) burn_order->clear();
        burnt_[q_] = 1;
        if (burn_order) burn_order->push_back(q_);
        for (int w : g.neighbors(q_)) ++cnt_[w];
        int burned = 1;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int v = 0; v < n_; ++v) {
                if (!burnt_[v] && d[v] < cnt_[v]) {
                    burnt_[v] = 1;
                    ++burned;
                    if (burn_order) burn_order->push_back(v);
                    for (int w : g.neighbors(v))
                        if (!burnt_[w]) ++cnt_[w];
                    progress = true;
                    break;  // restart the scan: a lower index may now burn
                }
            }
        }
        if (burned == n_) return;

        I t = 0;
        bool have = false;
        for (int v = 0; v < n_; ++v) {
            if (!burnt_[v] && cnt_[v] > 0) {
                I batch = d[v] / cnt_[v];  // >= 1: v survived the burn
                if (!have || batch < t) {
                    t = batch;
                    have = true;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (!burnt_[v]) {
                if (cnt_[v]) isub(d[v], imul(t, static_cast<long long>(cnt_[v])));
                if constexpr (TrackScript) isub((*script)[v], t);
            } else {
                int into = 0;
                for (int w : g.neighbors(v))
                    if (!burnt_[w]) ++into;
                if (into) iadd(d[v], imul(t, static_cast<long long>(into)));
            }
        }
    }
}

ReducedForm Reducer::run(const Divisor& d) {
    if (static_cast<int>(d.size()) != n_) throw LengthMismatch("divisor length mismatch");
    ReducedForm out;
    out.base = q_;

    bool small = std::all_of(d.coeff.begin(), d.coeff.end(), fits_i64);
    if (small) {
        std::vector<long long> vals(n_), script(n_, 0);
        for (int i = 0; i < n_; ++i) vals[i] = d[i].convert_to<long long>();
        try {
            engine<long long, true>(vals, &script, &out.burn_order);
            out.reduced = Divisor(static_cast<std::size_t>(n_));
            out.script = FiringScript(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) {
                out.reduced[i] = vals[i];
                out.script[i] = script[i];
            }
            return out;
        } catch (const I64Overflow&) {
            // fall through to the exact path
        }
    }
    std::vector<Int> vals(d.coeff), script(n_, Int(0));
    engine<Int, true>(vals, &script, &out.burn_order);
    out.reduced = Divisor(std::move(vals));
    out.script = FiringScript(std::move(script));
    return out;
}

void Reducer::reduce_values_inplace(std::vector<long long>& d) {
    if (static_cast<int>(d.size()) != n_) throw LengthMismatch("divisor length mismatch");
    backup_.assign(d.begin(), d.end());
    try {
        engine<long long, false>(d, nullptr, nullptr);
    } catch (const I64Overflow&) {
        std::vector<Int> big(backup_.begin(), backup_.end());
        engine<Int, false>(big, nullptr, nullptr);
        for (std::size_t i = 0; i < big.size(); ++i) d[i] = to_i64(big[i]);
    }
}

ReducedForm reduce(const Graph& g, const Divisor& d, int q) {
    Reducer r(g, q);
    return r.run(d);
}

std::optional<FiringScript> is_principal(const Graph& g, const Divisor& d) {
    require_connected(g);
    if (static_cast<int>(d.size()) != g.vertex_count())
        throw LengthMismatch("divisor length mismatch");
    if (d.degree() != 0) return std::nullopt;
    ReducedForm r = reduce(g, d, 0);
    if (!r.reduced.is_zero()) return std::nullopt;
    // d + Delta(script) == 0, so Delta(-script) == d.
    return -r.script;
}

std::optional<FiringScript> linearly_equivalent(const Graph& g, const Divisor& d1,
                                                const Divisor& d2) {
    require_connected(g);
    require_same_length(d1.size(), d2.size());
    if (d1.degree() != d2.degree()) return std::nullopt;
    ReducedForm r1 = reduce(g, d1, 0);
    ReducedForm r2 = reduce(g, d2, 0);
    if (r1.reduced != r2.reduced) return std::nullopt;
    // d1 + Delta(s1) == d2 + Delta(s2), so d2 == d1 + Delta(s1 - s2).
    return r1.script - r2.script;
}

MonopoleCheck monopole_witness_valid(const Graph& g, const FiringScript& f, int p) {
    if (p < 0 || p >= g.vertex_count()) throw BadParameter("vertex out of range");
    Divisor d = divisor_of(g, f);
    bool ok = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != p && d[v] < 0) ok = false;
    }
    MonopoleCheck out{-d[static_cast<std::size_t>(p)], ok, std::nullopt};
    if (ok && out.alpha > 0 && g.is_connected() && components_of(g, p).size() == 1) {
        bool strict = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v != p && !(f[p] < f[v])) strict = false;
        }
        out.strict_min_at_p = strict;
    }
    return out;
}

}  // namespace monopole
