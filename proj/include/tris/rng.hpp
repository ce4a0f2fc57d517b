// tris-swipt -- TRIS transceiver SWIPT beamforming library
// SPDX-License-Identifier: Apache-2.0

#ifndef TRIS_RNG_HPP
#define TRIS_RNG_HPP

#include <cstdint>
#include <string_view>

#include "tris/linalg.hpp"

namespace tris {

// Counter-based splittable generator. Each (seed, stream-label) pair yields
// an independent stream that reproduces bit-identically across runs. The
// core is the SplitMix64 finalizer over key + counter.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : key_(seed) {}

    // Independent stream derived from this generator's key and a label.
    // Forking does not advance this generator.
    Rng fork(std::string_view label) const;

    std::uint64_t next_u64();

    // uniform in [0, 1)
    double uniform();
    double uniform(double lo, double hi);

    // standard normal, Box-Muller
    double normal();

    // CN(0,1): real and imaginary parts each N(0, 1/2)
    cplx cn01();

    // n i.i.d. CN(0,1) draws; n == 0 yields an empty vector
    CVec cn01_vec(std::size_t n);

  private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

}  // namespace tris

#endif
