#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gkflow/corollaries.hpp"
#include "gkflow/poset.hpp"

namespace gkflow {

// Seeded generator wrapper; all sampling goes through the uniform helpers so
// corpora are reproducible for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    // Inclusive bounds.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }
    template <class T>
    void shuffle(std::vector<T>& items) {
        for (int i = static_cast<int>(items.size()) - 1; i > 0; --i)
            std::swap(items[i], items[uniform(0, i)]);
    }

private:
    std::mt19937_64 engine_;
};

// Random DAG (density drawn from a small palette) closed transitively.
// Elements are named e1..en.
Poset random_poset(int n, Rng& rng);

Labeling random_labeling(int n, Rng& rng);

enum class CpMode { Minimal, Full, Intermediate };

// Minimal: exactly the forced pairs. Full: every h-increasing pair.
// Intermediate: transitive closure of the forced pairs plus random
// h-increasing pairs (always a valid relation).
Instance random_instance(int n, CpMode mode, Rng& rng);

std::vector<int> random_permutation(int n, Rng& rng);

// Disjoint antichains grown greedily over a shuffled element order.
AntichainFamily random_antichain_family(const Instance& inst, Rng& rng);

} // namespace gkflow
