#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mdlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "p" or "p/q" rendering.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

// Deterministic 64-bit generator (splitmix64). std::uniform_int_distribution
// is implementation-defined, so bounded draws are done by hand to keep
// seeded output stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi]; modulo bias is irrelevant at the ranges used here.
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Derive an independent stream, e.g. one per trial.
    std::uint64_t fork(std::uint64_t salt) {
        Rng r(state_ ^ (0xa0761d6478bd642fULL * (salt + 1)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace mdlab
