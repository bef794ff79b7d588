#include "monopole/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "monopole/connectivity.hpp"
#include "monopole/enumeration.hpp"
#include "monopole/errors.hpp"

namespace monopole {

std::vector<int> SemigroupWindow::member_list() const {
    std::vector<int> out;
    for (int a = 0; a <= bound; ++a)
        if (members[a]) out.push_back(a);
    return out;
}

std::vector<int> SemigroupWindow::gap_list() const {
    std::vector<int> out;
    for (int a = 0; a <= bound; ++a)
        if (!members[a]) out.push_back(a);
    return out;
}

GapReport gap_report(const SemigroupWindow& w) {
    GapReport r;
    r.gaps = w.gap_list();
    r.count = static_cast<int>(r.gaps.size());
    r.max_gap = r.gaps.empty() ? -1 : r.gaps.back();
    return r;
}

int default_window_bound(const Graph& g, int p) {
    return std::max(2 * genus(g), g.degree(p)) + 2;
}

namespace {

void check_window_args(const Graph& g, int p, int bound) {
    require_connected(g);
    if (p < 0 || p >= g.vertex_count()) throw BadParameter("vertex out of range");
    if (bound < 0) throw BadParameter("window bound must be nonnegative");
}

Divisor alpha_at(int n, int p, long long alpha) {
    Divisor d(static_cast<std::size_t>(n));
    d[static_cast<std::size_t>(p)] = alpha;
    return d;
}

}  // namespace

SemigroupWindow hf_window(const Graph& g, int p, int bound, unsigned long long per_alpha_cap) {
    check_window_args(g, p, bound);
    int n = g.vertex_count();

    SemigroupWindow w;
    w.kind = WindowKind::hf;
    w.bound = bound;
    w.members.assign(bound + 1, false);

    Reducer red(g, 0);
    std::vector<long long> scratch(static_cast<std::size_t>(n));
    for (int alpha = 0; alpha <= bound; ++alpha) {
        unsigned long long count = count_effective_divisors(n - 1, alpha, per_alpha_cap);
        if (count > per_alpha_cap) throw EnumerationCapExceeded(count, per_alpha_cap);

        ReducedForm pole = red.run(alpha_at(n, p, alpha));
        std::vector<long long> target(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) target[i] = to_i64(pole.reduced[i]);

        std::optional<Divisor> hit;
        for_each_composition_avoiding(n, alpha, p, [&](const std::vector<long long>& a) {
            scratch.assign(a.begin(), a.end());
            red.reduce_values_inplace(scratch);
            if (scratch == target) {
                Divisor found(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) found[i] = a[i];
                hit = std::move(found);
                return false;
            }
            return true;
        });
        if (!hit) continue;

        // alphaP + Delta(s1) == A + Delta(s2), so Delta(s1 - s2) == A - alphaP:
        // a monopole at P of pole order exactly alpha.
        ReducedForm ra = red.run(*hit);
        FiringScript f = pole.script - ra.script;
        MonopoleCheck mc = monopole_witness_valid(g, f, p);
        if (!mc.ok || mc.alpha != alpha) {
            throw std::logic_error("monopole witness failed revalidation");
        }
        if (mc.strict_min_at_p && !*mc.strict_min_at_p) {
            // G and G-P connected force a strict unique minimum at P
            throw std::logic_error("monopole witness violates the unique-minimum property");
        }
        w.members[alpha] = true;
        w.witnesses[alpha].script = std::move(f);
    }
    return w;
}

namespace {

// Shared by hr_window and hred_window: walks alpha upward keeping the rank
// of alpha*P incrementally. The rank can move by at most one per chip, so a
// single level decides each step.
struct RankWalk {
    RankWalk(const Graph& g, unsigned long long level_cap)
        : g(g), n(g.vertex_count()), red(g, 0), cap(level_cap),
          scratch(static_cast<std::size_t>(n)) {}

    // True iff rank(alpha*P) == r_prev + 1 where r_prev == rank((alpha-1)P).
    bool jumps(int p, long long alpha, long long r_prev) {
        long long k = r_prev + 1;
        unsigned long long count = count_effective_divisors(n, k, cap);
        if (count > cap) throw EnumerationCapExceeded(count, cap);
        std::vector<long long> dred =
            red.reduced_values(dense_alpha(p, alpha));
        bool all = true;
        for_each_composition(n, k, [&](const std::vector<long long>& e) {
            for (int i = 0; i < n; ++i) scratch[i] = dred[i] - e[i];
            if (!red.winnable_scratch(scratch)) {
                all = false;
                return false;
            }
            return true;
        });
        return all;
    }

    // Lexicographically least P-free obstruction of (alpha-1)P at level k,
    // if any.
    std::optional<Divisor> p_free_obstruction(int p, long long alpha_minus_1, long long k) {
        unsigned long long count = count_effective_divisors(n - 1, k, cap);
        if (count > cap) throw EnumerationCapExceeded(count, cap);
        std::vector<long long> dred =
            red.reduced_values(dense_alpha(p, alpha_minus_1));
        std::optional<Divisor> hit;
        for_each_composition_avoiding(n, k, p, [&](const std::vector<long long>& e) {
            for (int i = 0; i < n; ++i) scratch[i] = dred[i] - e[i];
            if (!red.winnable_scratch(scratch)) {
                Divisor obst(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) obst[i] = e[i];
                hit = std::move(obst);
                return false;
            }
            return true;
        });
        return hit;
    }

    std::vector<long long> dense_alpha(int p, long long alpha) {
        std::vector<long long> d(static_cast<std::size_t>(n), 0);
        d[static_cast<std::size_t>(p)] = alpha;
        return d;
    }

    const Graph& g;
    int n;
    Reducer red;
    unsigned long long cap;
    std::vector<long long> scratch;
};

}  // namespace

SemigroupWindow hr_window(const Graph& g, int p, int bound, unsigned long long level_cap) {
    check_window_args(g, p, bound);
    SemigroupWindow w;
    w.kind = WindowKind::hr;
    w.bound = bound;
    w.members.assign(bound + 1, false);

    RankWalk walk(g, level_cap);
    long long r_prev = -1;  // rank of (-1)P
    for (int alpha = 0; alpha <= bound; ++alpha) {
        bool jump = walk.jumps(p, alpha, r_prev);
        long long r_here = r_prev + (jump ? 1 : 0);
        if (jump) {
            w.members[alpha] = true;
            w.witnesses[alpha].ranks = {r_prev, r_here};
        }
        r_prev = r_here;
    }
    return w;
}

SemigroupWindow hred_window(const Graph& g, int p, int bound, unsigned long long level_cap) {
    check_window_args(g, p, bound);
    SemigroupWindow w;
    w.kind = WindowKind::hred;
    w.bound = bound;
    w.members.assign(bound + 1, false);

    RankWalk walk(g, level_cap);
    long long r_prev = -1;
    for (int alpha = 0; alpha <= bound; ++alpha) {
        bool jump = walk.jumps(p, alpha, r_prev);
        long long r_here = r_prev + (jump ? 1 : 0);
        if (jump) {
            auto obst = walk.p_free_obstruction(p, alpha - 1, r_here);
            if (obst) {
                w.members[alpha] = true;
                w.witnesses[alpha].ranks = {r_prev, r_here};
                w.witnesses[alpha].obstruction = std::move(*obst);
            }
        }
        r_prev = r_here;
    }
    return w;
}

SemigroupWindow generated_semigroup(const std::vector<long long>& generators, int bound) {
    if (generators.empty()) throw BadParameter("generator list is empty");
    for (long long a : generators) {
        if (a <= 0) throw BadParameter("generators must be positive");
    }
    if (bound < 0) throw BadParameter("window bound must be nonnegative");

    SemigroupWindow w;
    w.kind = WindowKind::generated;
    w.bound = bound;
    w.members.assign(bound + 1, false);
    w.members[0] = true;

    // Sieve, remembering which generator completed each member.
    std::vector<int> via(bound + 1, -1);
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        long long a = generators[gi];
        for (long long x = a; x <= bound; ++x) {
            if (!w.members[x] && w.members[x - a]) {
                w.members[x] = true;
                via[x] = static_cast<int>(gi);
            }
        }
    }
    for (int x = 0; x <= bound; ++x) {
        if (!w.members[x]) continue;
        std::vector<long long> combo(generators.size(), 0);
        int cur = x;
        while (cur > 0) {
            ++combo[via[cur]];
            cur -= static_cast<int>(generators[via[cur]]);
        }
        w.witnesses[x].combo = std::move(combo);
    }

    long long d = 0;
    for (long long a : generators) d = std::gcd(d, a);
    w.gaps_finite = (d == 1);
    return w;
}

namespace {

MinNonzeroHf min_checks(const Graph& g, int p, const SemigroupWindow& hf) {
    MinNonzeroHf out;
    out.deg_p = g.degree(p);
    out.lambda = edge_connectivity(g);
    auto comps = components_of(g, p);
    out.p_is_cut = comps.size() >= 2;

    out.value = -1;
    for (int a = 1; a <= hf.bound; ++a) {
        if (hf.members[a]) {
            out.value = a;
            break;
        }
    }
    if (out.value < 0) throw std::logic_error("no nonzero member in the H_f window");

    if (!out.p_is_cut) {
        if (out.value != out.deg_p) {
            throw std::logic_error("minimum nonzero H_f member differs from deg(P) at a non-cut vertex");
        }
    } else {
        int best = out.deg_p;
        for (const auto& comp : comps) {
            int d = 0;
            for (int w : g.neighbors(p)) d += std::binary_search(comp.begin(), comp.end(), w);
            best = std::min(best, d);
        }
        if (out.value > best) {
            throw std::logic_error("minimum nonzero H_f member exceeds a component degree at a cut vertex");
        }
    }
    if (out.value < out.lambda) {
        throw std::logic_error("minimum nonzero H_f member is below the edge connectivity");
    }
    return out;
}

}  // namespace

MinNonzeroHf min_nonzero_hf(const Graph& g, int p, unsigned long long per_alpha_cap) {
    check_window_args(g, p, 0);
    int bound = default_window_bound(g, p);
    return min_checks(g, p, hf_window(g, p, bound, per_alpha_cap));
}

ContainmentReport containment_report(const Graph& g, int p, int bound,
                                     unsigned long long per_alpha_cap,
                                     unsigned long long level_cap) {
    check_window_args(g, p, bound);
    int gen = genus(g);
    if (bound < std::max(2 * gen, g.degree(p))) {
        throw BadParameter("containment window must reach max(2g, deg P)");
    }

    ContainmentReport r;
    r.p = p;
    r.bound = bound;
    r.genus = gen;
    r.deg_p = g.degree(p);
    r.hf = hf_window(g, p, bound, per_alpha_cap);
    r.hr = hr_window(g, p, bound, level_cap);
    r.hred = hred_window(g, p, bound, level_cap);
    r.min_hf = min_checks(g, p, r.hf);
    r.lambda = r.min_hf.lambda;

    r.hred_subset_hr = true;
    r.hred_subset_hf = true;
    r.hr_subset_hf = true;
    for (int a = 0; a <= bound; ++a) {
        if (r.hred.members[a] && !r.hr.members[a]) r.hred_subset_hr = false;
        if (r.hred.members[a] && !r.hf.members[a]) r.hred_subset_hf = false;
        if (r.hr.members[a] && !r.hf.members[a]) {
            r.hr_subset_hf = false;
            r.hr_not_in_hf.push_back(a);
        }
        if (r.hf.members[a] && !r.hr.members[a]) r.hf_minus_hr.push_back(a);
    }
    r.hr_closed_in_window = true;
    for (int a = 0; a <= bound && r.hr_closed_in_window; ++a) {
        if (!r.hr.members[a]) continue;
        for (int b = a; a + b <= bound; ++b) {
            if (r.hr.members[b] && !r.hr.members[a + b]) {
                r.hr_closed_in_window = false;
                r.hr_closure_gap = {a, b};
                break;
            }
        }
    }
    return r;
}

SweepSpec::Family sweep_family_from_name(const std::string& name) {
    if (name == "random-tree") return SweepSpec::Family::random_tree;
    if (name == "random-connected") return SweepSpec::Family::random_connected;
    if (name == "path") return SweepSpec::Family::path;
    if (name == "star") return SweepSpec::Family::star;
    if (name == "cycle") return SweepSpec::Family::cycle;
    if (name == "complete") return SweepSpec::Family::complete;
    if (name == "wheel") return SweepSpec::Family::wheel;
    throw BadParameter("unknown sweep family: " + name);
}

std::string sweep_family_name(SweepSpec::Family f) {
    switch (f) {
        case SweepSpec::Family::random_tree: return "random-tree";
        case SweepSpec::Family::random_connected: return "random-connected";
        case SweepSpec::Family::path: return "path";
        case SweepSpec::Family::star: return "star";
        case SweepSpec::Family::cycle: return "cycle";
        case SweepSpec::Family::complete: return "complete";
        case SweepSpec::Family::wheel: return "wheel";
    }
    throw BadParameter("unknown sweep family");
}

SweepResult conjecture_sweep(const SweepSpec& spec) {
    if (spec.n_min < 2 || spec.n_max < spec.n_min) throw BadParameter("bad size range");
    if (spec.count < 1) throw BadParameter("graph count must be positive");

    std::vector<GeneratedGraph> graphs;
    SplitMix64 rng(spec.seed);
    auto span = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
    switch (spec.family) {
        case SweepSpec::Family::random_tree:
            for (int i = 0; i < spec.count; ++i) {
                int n = spec.n_min + static_cast<int>(rng.next_below(span));
                graphs.push_back(random_tree(n, rng));
            }
            break;
        case SweepSpec::Family::random_connected:
            for (int i = 0; i < spec.count; ++i) {
                int n = spec.n_min + static_cast<int>(rng.next_below(span));
                int extra = static_cast<int>(rng.next_below(4));
                graphs.push_back(random_connected(n, extra, rng));
            }
            break;
        default:
            // Named families: one instance per size in the range.
            for (int n = spec.n_min; n <= spec.n_max; ++n) {
                switch (spec.family) {
                    case SweepSpec::Family::path: graphs.push_back(path(n)); break;
                    case SweepSpec::Family::star: graphs.push_back(star(n - 1)); break;
                    case SweepSpec::Family::cycle:
                        if (n >= 3) graphs.push_back(cycle(n));
                        break;
                    case SweepSpec::Family::complete: graphs.push_back(complete(n)); break;
                    case SweepSpec::Family::wheel:
                        if (n >= 4) graphs.push_back(wheel(n - 1));
                        break;
                    default: break;
                }
            }
            break;
    }

    SweepResult out;
    int index = 0;
    for (const auto& gg : graphs) {
        for (int p = 0; p < gg.graph.vertex_count(); ++p) {
            SweepUnit unit;
            unit.index = index++;
            unit.graph = gg.graph;
            unit.graph_name = gg.name;
            unit.p = p;
            unit.bound = spec.bound
                             ? std::max(*spec.bound, std::max(2 * genus(gg.graph),
                                                              gg.graph.degree(p)))
                             : default_window_bound(gg.graph, p);
            try {
                unit.report = containment_report(gg.graph, p, unit.bound, spec.per_alpha_cap,
                                                 spec.level_cap);
                unit.violation = !unit.report->hr_subset_hf;
                if (unit.violation) ++out.violations;
                if (!unit.report->hr_closed_in_window) ++out.closure_findings;
                ++out.ok;
            } catch (const EnumerationCapExceeded& e) {
                unit.cap_exceeded = true;
                unit.error = e.what();
                ++out.cap_exceeded;
            }
            out.units.push_back(std::move(unit));
        }
    }
    return out;
}

}  // namespace monopole
