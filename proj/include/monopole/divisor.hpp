#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monopole/graph.hpp"
#include "monopole/ints.hpp"

namespace monopole {

/// Integer vector on vertices, D = sum a_i P_i. The universal currency:
/// chip configurations, canonical divisors, obstruction witnesses.
struct Divisor {
    std::vector<Int> coeff;

    Divisor() = default;
    explicit Divisor(std::size_t n) : coeff(n) {}
    explicit Divisor(std::vector<Int> c) : coeff(std::move(c)) {}
    static Divisor zero(std::size_t n) { return Divisor(n); }

    std::size_t size() const { return coeff.size(); }
    Int& operator[](std::size_t i) { return coeff[i]; }
    const Int& operator[](std::size_t i) const { return coeff[i]; }

    Int degree() const;
    bool is_effective() const;
    bool is_zero() const;
    std::vector<int> support() const;

    bool operator==(const Divisor& o) const { return coeff == o.coeff; }
    bool operator!=(const Divisor& o) const { return coeff != o.coeff; }
};

Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);

// Lexicographic order on coefficient vectors; used for canonical class
// representatives and deterministic witness selection.
bool lex_less(const Divisor& a, const Divisor& b);

/// Integer-valued function on vertices (an element of the function space
/// the Laplacian acts on).
struct FiringScript {
    std::vector<Int> values;

    FiringScript() = default;
    explicit FiringScript(std::size_t n) : values(n) {}
    explicit FiringScript(std::vector<Int> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    Int& operator[](std::size_t i) { return values[i]; }
    const Int& operator[](std::size_t i) const { return values[i]; }

    bool operator==(const FiringScript& o) const { return values == o.values; }
};

FiringScript operator+(const FiringScript& a, const FiringScript& b);
FiringScript operator-(const FiringScript& a, const FiringScript& b);
FiringScript operator-(const FiringScript& a);

// Delta(f): coefficient at v is f(v) deg(v) - sum of f over N(v). Degree 0.
Divisor divisor_of(const Graph& g, const FiringScript& f);

// K = sum (deg(v) - 2) v, of total degree 2g - 2.
Divisor canonical_divisor(const Graph& g);

// Value -1 at p, 0 elsewhere. Its divisor is sum of N(p) minus deg(p) * p.
FiringScript indicator(const Graph& g, int p);

// D + Delta(-1_S): every member of S loses its out-degree into the
// complement, every outside vertex gains its edge count into S.
Divisor fire_set(const Graph& g, const Divisor& d, const std::vector<int>& s);

// G-parking test relative to q, by Dhar's burning algorithm: nonnegative
// off q and the fire started at q consumes the whole graph.
bool is_g_parking(const Graph& g, const Divisor& d, int q);

// Exponential subset-quantifier form of the definition. Test oracle only.
bool is_g_parking_bruteforce(const Graph& g, const Divisor& d, int q);

struct ReducedForm {
    int base = 0;
    Divisor reduced;
    FiringScript script;          // reduced == input + Delta(script)
    std::vector<int> burn_order;  // Dhar certificate from the final pass
};

// The unique q-reduced divisor equivalent to d, with the transforming
// script. Deterministic. Throws DisconnectedGraph.
ReducedForm reduce(const Graph& g, const Divisor& d, int q);

// Reusable q-reduction engine: precomputes the distance layering once and
// recycles scratch buffers, with an overflow-checked 64-bit fast path that
// falls back to exact big integers. Not thread-safe; use one per thread.
class Reducer {
  public:
    Reducer(const Graph& g, int q);

    ReducedForm run(const Divisor& d);

    // Turns d into the reduced coefficient vector, no script. Allocation
    // free on the 64-bit path, which is what enumeration loops hit.
    void reduce_values_inplace(std::vector<long long>& d);

    std::vector<long long> reduced_values(std::vector<long long> d) {
        reduce_values_inplace(d);
        return d;
    }

    // Winnability of the class of d: reduced value at the base is >= 0.
    // Clobbers d.
    bool winnable_scratch(std::vector<long long>& d) {
        reduce_values_inplace(d);
        return d[static_cast<std::size_t>(q_)] >= 0;
    }

    int base() const { return q_; }

  private:
    template <class I, bool TrackScript>
    void engine(std::vector<I>& d, std::vector<I>* script, std::vector<int>* burn_order);

    const Graph* g_;
    int q_;
    int n_;
    int ecc_;
    std::vector<int> dist_;
    std::vector<std::vector<int>> layers_;
    std::vector<int> inward_;   // neighbors one layer closer to q
    std::vector<int> outward_;  // neighbors one layer farther from q
    std::vector<int> cnt_;
    std::vector<char> burnt_;
    std::vector<long long> backup_;  // restore point for the big-int fallback
};

// Script f with Delta(f) == d, when d is principal.
std::optional<FiringScript> is_principal(const Graph& g, const Divisor& d);

// Script s with d2 == d1 + Delta(s), when the classes agree. The script is
// the net move-count vector of a chip-firing game between the two.
std::optional<FiringScript> linearly_equivalent(const Graph& g, const Divisor& d1,
                                                const Divisor& d2);

struct MonopoleCheck {
    Int alpha;  // pole order at p, i.e. -Delta_p(f)
    bool ok;    // Delta(f) nonnegative away from p
    // Set when G and G-p are connected and alpha > 0: whether f attains a
    // strict unique minimum at p.
    std::optional<bool> strict_min_at_p;
};

MonopoleCheck monopole_witness_valid(const Graph& g, const FiringScript& f, int p);

}  // namespace monopole
