#include "monopole/enumeration.hpp"

namespace monopole {

unsigned long long count_effective_divisors(int n, long long k, unsigned long long limit) {
    if (k < 0) return 0;
    if (k == 0 || n == 1) return 1;
    // C(n+k-1, k) = C(n+k-1, n-1), built incrementally and saturated.
    unsigned long long r = 1;
    long long top = n - 1 + k;
    long long m = std::min<long long>(k, n - 1);
    for (long long i = 1; i <= m; ++i) {
        unsigned __int128 nxt = static_cast<unsigned __int128>(r) *
                                static_cast<unsigned long long>(top - m + i);
        nxt /= static_cast<unsigned long long>(i);
        if (nxt > limit) return limit + 1;
        r = static_cast<unsigned long long>(nxt);
    }
    return r;
}

}  // namespace monopole
