#pragma once

#include "dsm/core.hpp"

#include <cstdint>

namespace dsm {

enum class GenKind { random_uniform, cyclic, paper3x3 };

struct GenSpec {
    GenKind kind = GenKind::random_uniform;
    int n = 0;           // paper3x3 forces n = 3
    std::uint64_t seed = 0;  // random_uniform only
};

// SplitMix64 stream (Steele/Lea/Flood constants): fixed named generator so
// identical seeds reproduce byte-identical instances on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

// Independent uniform permutations on both sides: one SplitMix64 stream,
// Fisher-Yates with modulo draws, men's lists first. Deterministic in
// (n, seed).
Instance gen_random(int n, std::uint64_t seed);

// Man i ranks women i, i+1, ... (mod n); woman j ranks men j+1, j+2, ...,
// j (mod n). At n = 3 this is the committed 3x3 fixture. Long chains: the
// reduction loop runs close to n times, which makes this the benchmark
// workload.
Instance gen_cyclic(int n);

// The committed fixtures/paper_3x3.txt instance.
Instance paper_3x3();

Instance generate(const GenSpec& spec);

}  // namespace dsm
