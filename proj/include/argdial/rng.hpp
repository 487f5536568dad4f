#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "argdial/errors.hpp"

namespace argdial {

// Seeded generator with self-contained draw helpers. The standard
// distributions are not specified bit-for-bit across implementations, so
// everything here derives from raw mt19937_64 output to keep seeded results
// reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform draw from [0, bound). Modulo bias is irrelevant at the bounds
    // used here (single digits) but must stay deterministic.
    int uniform_int(int bound) {
        if (bound <= 0) throw DomainError("uniform_int needs a positive bound");
        return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
    }

    bool bernoulli(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(static_cast<int>(i)));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace argdial
