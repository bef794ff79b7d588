#pragma once

#include <optional>
#include <vector>

#include "monopole/divisor.hpp"
#include "monopole/graph.hpp"

namespace monopole {

inline constexpr unsigned long long kDefaultRankLevelCap = 2'000'000;

// Equivalent to an effective divisor; decided through the q-reduced
// representative at the fixed base q = 0.
bool winnable(const Graph& g, const Divisor& d);

struct RankCertificate {
    Divisor divisor;
    long long rank = -1;
    // Unwinnable witness in Div_+^{rank+1}, lexicographically least. For
    // every lower degree the search verified all of Div_+^k winnable.
    std::optional<Divisor> obstruction;
};

// Baker-Norine rank by ascending exhaustive search over effective divisors,
// short-circuiting at the first unwinnable one. Each level's enumeration
// size is checked against the cap before it starts.
RankCertificate rank(const Graph& g, const Divisor& d,
                     unsigned long long level_cap = kDefaultRankLevelCap);

// r(D) == deg(D) + 1 - g + r(K - D), checked exactly.
bool verify_riemann_roch(const Graph& g, const Divisor& d,
                         unsigned long long level_cap = kDefaultRankLevelCap);

struct ObstructionSet {
    Divisor divisor;                       // alpha * P
    long long degree = 0;                  // r(divisor) + 1
    std::vector<Divisor> all_obstructions; // lexicographic order
    std::vector<Divisor> p_free;           // support avoiding P
};

// Every obstruction of alpha * P at degree r + 1, plus the P-free sublist
// that decides reduced-semigroup membership.
ObstructionSet obstructions(const Graph& g, int p, long long alpha,
                            unsigned long long level_cap = kDefaultRankLevelCap);

}  // namespace monopole
