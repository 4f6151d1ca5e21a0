#pragma once

#include <cstdint>

namespace specband {

// Thread budget for all OpenMP kernels. Reads SPECBAND_THREADS once; a
// value of 1 forces serial execution everywhere. Falls back to the
// OpenMP default when unset or unparsable.
int max_threads();

// Deterministic per-task seeding. splitmix64 is used to derive
// independent start vectors for iterative kernels so that results do
// not depend on the thread partition.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [-1, 1), deterministic given the state.
inline double uniform_pm1(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

}  // namespace specband
