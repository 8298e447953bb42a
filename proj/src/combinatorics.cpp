#include "umbral/combinatorics.hpp"

#include <mutex>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

std::mutex factorial_mutex;
std::vector<Integer> factorial_table = {Integer(1)};  // 0! = 1

}  // namespace

Integer factorial(unsigned n) {
    std::lock_guard lock(factorial_mutex);
    while (factorial_table.size() <= n) {
        factorial_table.push_back(factorial_table.back() * Integer(factorial_table.size()));
    }
    return factorial_table[n];
}

Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Integer multinomial(std::span<const unsigned> parts) {
    if (parts.empty()) throw Error("multinomial of empty part list");
    unsigned long total = 0;
    for (const unsigned p : parts) total += p;
    Integer r = factorial(static_cast<unsigned>(total));
    for (const unsigned p : parts) {
        if (p > 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(p).get_mpz_t());
    }
    return r;
}

Integer falling_factorial(long n, unsigned s) {
    Integer r(1);
    for (unsigned i = 0; i < s; ++i) r *= Integer(n - static_cast<long>(i));
    return r;
}

CompositionWalk::CompositionWalk(unsigned n, unsigned m) : multinomial_(1) {
    if (m == 0) throw Error("compositions need at least one part");
    current_.parts.assign(m, 0u);
    current_.parts[0] = n;      // first tuple: (n, 0, ..., 0)
    weight_ = n;                // 1 * v_1
}

void CompositionWalk::next() {
    auto& v = current_.parts;
    const std::size_t m = v.size();

    // Rightmost position before the last that still has something to move.
    std::size_t j = m - 1;
    while (j > 0 && v[j - 1] == 0) --j;
    if (j == 0) {  // everything sits in the last slot
        done_ = true;
        return;
    }
    --j;  // v[j] > 0, j < m-1

    // v[j] -= 1; v[j+1] = suffix + 1; zero the rest. Multinomial and weight
    // are patched per changed slot: mult *= old!/new! via factorial ratios.
    unsigned long suffix = 0;
    for (std::size_t i = j + 1; i < m; ++i) {
        suffix += v[i];
        if (v[i] > 1) multinomial_ *= factorial(v[i]);
        weight_ -= (i + 1) * static_cast<unsigned long>(v[i]);
        v[i] = 0;
    }
    multinomial_ *= v[j];  // v[j]! / (v[j]-1)!
    weight_ -= (j + 1);
    v[j] -= 1;

    const unsigned moved = static_cast<unsigned>(suffix) + 1;
    v[j + 1] = moved;
    weight_ += (j + 2) * static_cast<unsigned long>(moved);
    if (moved > 1) {
        mpz_divexact(multinomial_.get_mpz_t(), multinomial_.get_mpz_t(), factorial(moved).get_mpz_t());
    }
}

}  // namespace umbral
