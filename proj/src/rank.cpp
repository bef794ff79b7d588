#include "monopole/rank.hpp"

#include <algorithm>

#include "monopole/enumeration.hpp"
#include "monopole/errors.hpp"

namespace monopole {

namespace {

// Degrees inside enumeration reach are tiny; anything bigger is an explicit
// budget error rather than a multi-day loop.
constexpr long long kDegreeBudget = 1'000'000;

long long checked_degree(const Divisor& d) {
    Int deg = d.degree();
    if (deg > kDegreeBudget) {
        throw EnumerationCapExceeded(static_cast<unsigned long long>(kDegreeBudget) + 1,
                                     kDegreeBudget);
    }
    return fits_i64(deg) ? deg.convert_to<long long>() : -1;
}

Divisor lex_least_effective(int n, long long k) {
    Divisor e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(n - 1)] = k;
    return e;
}

}  // namespace

bool winnable(const Graph& g, const Divisor& d) {
    require_connected(g);
    if (static_cast<int>(d.size()) != g.vertex_count())
        throw LengthMismatch("divisor length mismatch");
    if (d.degree() < 0) return false;
    return reduce(g, d, 0).reduced[0] >= 0;
}

RankCertificate rank(const Graph& g, const Divisor& d, unsigned long long level_cap) {
    require_connected(g);
    int n = g.vertex_count();
    if (static_cast<int>(d.size()) != n) throw LengthMismatch("divisor length mismatch");

    RankCertificate cert;
    cert.divisor = d;

    long long deg = checked_degree(d);
    if (deg < 0) {
        cert.rank = -1;
        cert.obstruction = Divisor::zero(static_cast<std::size_t>(n));
        return cert;
    }

    Reducer red(g, 0);
    ReducedForm base = red.run(d);
    if (base.reduced[0] < 0) {
        cert.rank = -1;
        cert.obstruction = Divisor::zero(static_cast<std::size_t>(n));
        return cert;
    }
    std::vector<long long> dred(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dred[i] = to_i64(base.reduced[i]);

    std::vector<long long> scratch(static_cast<std::size_t>(n));
    for (long long k = 1; k <= deg; ++k) {
        unsigned long long count = count_effective_divisors(n, k, level_cap);
        if (count > level_cap) throw EnumerationCapExceeded(count, level_cap);

        bool all_winnable = true;
        for_each_composition(n, k, [&](const std::vector<long long>& e) {
            for (int i = 0; i < n; ++i) scratch[i] = dred[i] - e[i];
            if (!red.winnable_scratch(scratch)) {
                all_winnable = false;
                Divisor obst(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) obst[i] = e[i];
                cert.obstruction = std::move(obst);
                return false;
            }
            return true;
        });
        if (!all_winnable) {
            cert.rank = k - 1;
            return cert;
        }
    }
    // Every level up to deg(D) is winnable; one more chip always escapes.
    cert.rank = deg;
    cert.obstruction = lex_least_effective(n, deg + 1);
    return cert;
}

bool verify_riemann_roch(const Graph& g, const Divisor& d, unsigned long long level_cap) {
    int gen = genus(g);
    long long r_d = rank(g, d, level_cap).rank;
    long long r_kd = rank(g, canonical_divisor(g) - d, level_cap).rank;
    return Int(r_d) == d.degree() + 1 - gen + r_kd;
}

ObstructionSet obstructions(const Graph& g, int p, long long alpha,
                            unsigned long long level_cap) {
    require_connected(g);
    int n = g.vertex_count();
    if (p < 0 || p >= n) throw BadParameter("vertex out of range");

    Divisor d(static_cast<std::size_t>(n));
    d[static_cast<std::size_t>(p)] = alpha;

    ObstructionSet out;
    out.divisor = d;
    long long k = rank(g, d, level_cap).rank + 1;
    out.degree = k;

    unsigned long long count = count_effective_divisors(n, k, level_cap);
    if (count > level_cap) throw EnumerationCapExceeded(count, level_cap);

    Reducer red(g, 0);
    ReducedForm base = red.run(d);
    std::vector<long long> dred(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dred[i] = to_i64(base.reduced[i]);

    std::vector<long long> scratch(static_cast<std::size_t>(n));
    for_each_composition(n, k, [&](const std::vector<long long>& e) {
        for (int i = 0; i < n; ++i) scratch[i] = dred[i] - e[i];
        if (!red.winnable_scratch(scratch)) {
            Divisor obst(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) obst[i] = e[i];
            if (e[static_cast<std::size_t>(p)] == 0) out.p_free.push_back(obst);
            out.all_obstructions.push_back(std::move(obst));
        }
        return true;
    });
    return out;
}

}  // namespace monopole
