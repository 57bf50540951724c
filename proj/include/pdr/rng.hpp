#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace pdr {

// splitmix64, used both as a seed mixer and for substream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Documented substream derivation: fold each index into the state with
// splitmix64.  derive_seed(s, {a,b,c}) is reproducible across platforms and
// is the scheme referred to in the README ("substream_seed").
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> indices) {
    std::uint64_t s = splitmix64(seed);
    for (std::uint64_t v : indices) s = splitmix64(s ^ (v + 0x9E3779B97F4A7C15ULL));
    return s;
}

// Deterministic random stream.  mt19937_64 is fully specified by the
// standard; all variate transforms below are explicit so that draws are
// bit-identical across compilers and platforms (std::*_distribution is not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform on [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1]
    double uniform_pos() { return 1.0 - uniform(); }

    // unit exponential
    double exponential() { return -std::log(uniform_pos()); }

    // standard normal (Box-Muller; one value per call, no cache)
    double normal() {
        double u1 = uniform_pos();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // Gamma(shape, scale 1), Marsaglia-Tsang; shape < 1 via the boost trick
    double gamma(double shape) {
        if (shape < 1.0) {
            double u = uniform_pos();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = uniform_pos();
            if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
        }
    }

    // Poisson(mean) by the product method, chunked so e^{-mean} never underflows
    long long poisson(double mean) {
        long long total = 0;
        while (mean > 500.0) {
            total += poisson_block(500.0);
            mean -= 500.0;
        }
        return total + poisson_block(mean);
    }

    // index in [0, k) with probabilities proportional to weights (linear scan;
    // block counts here are small)
    std::size_t categorical(std::span<const double> weights, double total) {
        double u = uniform() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.size() - 1;
    }

    std::uint64_t raw() { return eng_(); }

  private:
    long long poisson_block(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        long long count = -1;
        double prod = 1.0;
        do {
            prod *= uniform_pos();
            ++count;
        } while (prod > limit);
        return count;
    }

    std::mt19937_64 eng_;
};

}  // namespace pdr
