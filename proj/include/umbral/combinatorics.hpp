#pragma once

#include <numeric>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// n!, served from a guarded table that grows to the largest index
/// requested. Returned by value: the table may reallocate under another
/// thread.
Integer factorial(unsigned n);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(unsigned long n, long k);

/// (sum parts)! / prod(part!). Parts must be nonempty.
Integer multinomial(std::span<const unsigned> parts);

/// n(n-1)...(n-s+1); 1 when s = 0. n may be negative.
Integer falling_factorial(long n, unsigned s);

/**
 * One m-tuple (v_1, ..., v_m) of nonnegative integers with v_1+...+v_m = n.
 */
struct Composition {
    std::vector<unsigned> parts;

    unsigned size() const { return static_cast<unsigned>(parts.size()); }
    unsigned sum() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
    /// v_1 + 2 v_2 + ... + m v_m.
    unsigned long weight() const {
        unsigned long w = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) w += (i + 1) * parts[i];
        return w;
    }
};

/**
 * Streams every composition of n into m nonnegative parts exactly once,
 * lexicographically descending on v_1 first: (n,0,...,0), (n-1,1,0,...), ...
 * ending at (0,...,0,n). Total count is C(n+m-1, m-1).
 *
 * The walk keeps the multinomial coefficient C(n; v_1..v_m) and the weight
 * v_1+2v_2+...+mv_m updated incrementally along the way, which is what the
 * power-sum enumeration consumes.
 */
class CompositionWalk {
  public:
    CompositionWalk(unsigned n, unsigned m);

    bool done() const { return done_; }
    void next();

    const Composition& current() const { return current_; }
    const Integer& multinomial() const { return multinomial_; }
    unsigned long weight() const { return weight_; }

  private:
    Composition current_;
    Integer multinomial_;
    unsigned long weight_ = 0;
    bool done_ = false;
};

inline CompositionWalk compositions(unsigned n, unsigned m) { return CompositionWalk(n, m); }

}  // namespace umbral
