#include "dsm/gen.hpp"

#include <numeric>

namespace dsm {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D4A12AE38E9A2BULL;
    return z ^ (z >> 31);
}

namespace {

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace

Instance gen_random(int n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("gen_random: n must be >= 1");
    SplitMix64 rng(seed);
    Instance inst;
    inst.n = n;
    for (int i = 0; i < n; ++i)
        inst.men_prefs.push_back(random_permutation(n, rng));
    for (int j = 0; j < n; ++j)
        inst.women_prefs.push_back(random_permutation(n, rng));
    validate_instance(inst);
    return inst;
}

Instance gen_cyclic(int n) {
    if (n < 1)
        throw std::invalid_argument("gen_cyclic: n must be >= 1");
    Instance inst;
    inst.n = n;
    for (int i = 0; i < n; ++i) {
        std::vector<int> list(n);
        for (int k = 0; k < n; ++k)
            list[k] = (i + k) % n;
        inst.men_prefs.push_back(std::move(list));
    }
    for (int j = 0; j < n; ++j) {
        std::vector<int> list(n);
        for (int k = 0; k < n; ++k)
            list[k] = (j + 1 + k) % n;
        inst.women_prefs.push_back(std::move(list));
    }
    validate_instance(inst);
    return inst;
}

Instance paper_3x3() {
    return gen_cyclic(3);
}

Instance generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::random_uniform:
            return gen_random(spec.n, spec.seed);
        case GenKind::cyclic:
            return gen_cyclic(spec.n);
        case GenKind::paper3x3:
            if (spec.n != 3)
                throw std::invalid_argument("paper3x3 instances have n = 3");
            return paper_3x3();
    }
    throw std::invalid_argument("unknown generator kind");
}

}  // namespace dsm
