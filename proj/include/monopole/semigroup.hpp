#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monopole/divisor.hpp"
#include "monopole/families.hpp"
#include "monopole/graph.hpp"
#include "monopole/rank.hpp"

namespace monopole {

inline constexpr unsigned long long kDefaultHfPerAlphaCap = 1'000'000;

enum class WindowKind { hf, hr, hred, generated };

// Proof object attached to a window member. Which fields are set depends on
// the window kind: a monopole script for H_f, the consecutive rank pair for
// H_r, additionally a P-free obstruction for H_r^red, and a generator
// multiplicity vector for sieved semigroups.
struct MemberWitness {
    std::optional<FiringScript> script;
    std::optional<std::pair<long long, long long>> ranks;
    std::optional<Divisor> obstruction;
    std::optional<std::vector<long long>> combo;
};

struct SemigroupWindow {
    WindowKind kind = WindowKind::generated;
    int bound = 0;
    std::vector<bool> members;  // indexed 0..bound
    std::map<int, MemberWitness> witnesses;
    std::optional<bool> gaps_finite;  // generated windows: gcd of generators == 1

    bool contains(int a) const { return a >= 0 && a <= bound && members[a]; }
    std::vector<int> member_list() const;
    std::vector<int> gap_list() const;
};

struct GapReport {
    std::vector<int> gaps;
    int count = 0;
    int max_gap = -1;
};

GapReport gap_report(const SemigroupWindow& w);

// Smallest window on which every claim about the instance is decidable:
// the rank gaps all sit below 2g and the minimum degree theorem needs
// deg(P) visible.
int default_window_bound(const Graph& g, int p);

// Exact membership of the monopole semigroup on [0, bound]: alpha is in
// iff some effective A of degree alpha avoiding P is equivalent to
// alpha*P. Each member's witness script is revalidated before storing.
SemigroupWindow hf_window(const Graph& g, int p, int bound,
                          unsigned long long per_alpha_cap = kDefaultHfPerAlphaCap);

// Membership by consecutive Baker-Norine ranks of alpha*P.
SemigroupWindow hr_window(const Graph& g, int p, int bound,
                          unsigned long long level_cap = kDefaultRankLevelCap);

// H_r membership plus a nonempty P-free obstruction set one level down.
SemigroupWindow hred_window(const Graph& g, int p, int bound,
                            unsigned long long level_cap = kDefaultRankLevelCap);

SemigroupWindow generated_semigroup(const std::vector<long long>& generators, int bound);

struct MinNonzeroHf {
    int value = 0;
    int deg_p = 0;
    bool p_is_cut = false;
    int lambda = 0;
};

// Minimum nonzero member of H_f(P), with the paper's extremal statements
// checked on the spot (== deg P when P is not a cut vertex, bounded by the
// per-component degrees otherwise, and always >= lambda). A violation is a
// bug, not a finding, and throws logic_error.
MinNonzeroHf min_nonzero_hf(const Graph& g, int p,
                            unsigned long long per_alpha_cap = kDefaultHfPerAlphaCap);

struct ContainmentReport {
    int p = 0;
    int bound = 0;
    int genus = 0;
    int deg_p = 0;
    int lambda = 0;
    SemigroupWindow hf, hr, hred;
    bool hred_subset_hr = false;  // definitional
    bool hred_subset_hf = false;  // theorem; false means a bug
    bool hr_subset_hf = false;    // conjecture; false is a finding
    // Additive closure of H_r inside the window is unproved; a violation
    // is likewise a finding, recorded with the offending pair.
    bool hr_closed_in_window = false;
    std::optional<std::pair<int, int>> hr_closure_gap;
    std::vector<int> hr_not_in_hf;  // finding witnesses live in hr.witnesses
    std::vector<int> hf_minus_hr;
    MinNonzeroHf min_hf;
};

// All three windows on [0, bound] plus every containment and extremal
// check. Requires bound >= max(2g, deg P).
ContainmentReport containment_report(const Graph& g, int p, int bound,
                                     unsigned long long per_alpha_cap = kDefaultHfPerAlphaCap,
                                     unsigned long long level_cap = kDefaultRankLevelCap);

struct SweepSpec {
    enum class Family { random_tree, random_connected, path, star, cycle, complete, wheel };
    Family family = Family::random_connected;
    int count = 1;        // graphs to draw (random families)
    int n_min = 2;
    int n_max = 6;
    std::uint64_t seed = 0;
    std::optional<int> bound;  // default: per-instance window policy
    unsigned long long per_alpha_cap = kDefaultHfPerAlphaCap;
    unsigned long long level_cap = kDefaultRankLevelCap;
};

SweepSpec::Family sweep_family_from_name(const std::string& name);
std::string sweep_family_name(SweepSpec::Family f);

struct SweepUnit {
    int index = 0;
    Graph graph;
    std::string graph_name;
    int p = 0;
    int bound = 0;
    bool cap_exceeded = false;
    std::string error;
    std::optional<ContainmentReport> report;
    bool violation = false;  // an H_r member missing from H_f
};

struct SweepResult {
    std::vector<SweepUnit> units;
    int ok = 0;
    int cap_exceeded = 0;
    int violations = 0;          // H_r members missing from H_f
    int closure_findings = 0;    // H_r windows that fail additive closure
};

// Deterministic counterexample hunt: every (graph, vertex) pair of the
// family gets a containment report. Cap overruns are recorded per unit and
// skipped, never silently dropped.
SweepResult conjecture_sweep(const SweepSpec& spec);

}  // namespace monopole
