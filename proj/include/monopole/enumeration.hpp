#pragma once

#include <vector>

#include "monopole/errors.hpp"

namespace monopole {

// |Div_+^k| on n vertices = C(n+k-1, k), saturated at limit+1 so callers
// can compare against a cap without overflow.
unsigned long long count_effective_divisors(int n, long long k, unsigned long long limit);

// Visits every nonnegative integer vector of length n with entry sum k, in
// ascending lexicographic order, starting from (0,...,0,k). The visitor
// gets the current vector and returns false to stop early.
template <class F>
void for_each_composition(int n, long long k, F&& visit) {
    if (n <= 0) throw BadParameter("composition needs at least one slot");
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    v[n - 1] = k;
    for (;;) {
        if (!visit(static_cast<const std::vector<long long>&>(v))) return;
        int last = n - 1;
        while (last >= 0 && v[last] == 0) --last;
        if (last <= 0) return;  // (k,0,...,0) or k == 0
        int j = (last == n - 1) ? n - 2 : last - 1;
        long long s = 0;
        for (int m = j + 1; m < n; ++m) {
            s += v[m];
            v[m] = 0;
        }
        ++v[j];
        v[n - 1] = s - 1;
    }
}

// Same, but entry `skip` is pinned to zero (divisors avoiding a vertex).
template <class F>
void for_each_composition_avoiding(int n, long long k, int skip, F&& visit) {
    std::vector<int> slots;
    for (int i = 0; i < n; ++i)
        if (i != skip) slots.push_back(i);
    std::vector<long long> full(static_cast<std::size_t>(n), 0);
    for_each_composition(static_cast<int>(slots.size()), k, [&](const std::vector<long long>& v) {
        for (std::size_t i = 0; i < slots.size(); ++i) full[slots[i]] = v[i];
        return visit(static_cast<const std::vector<long long>&>(full));
    });
}

}  // namespace monopole
