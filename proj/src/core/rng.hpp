// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace seglearn::core {

/// Deterministic random source. All randomness in the project (parameter
/// init, dropout masks, epoch shuffling) flows from one of these, seeded
/// from the config, so identical seeds give identical runs.
///
/// Raw draws come from std::mt19937_64; the uniform mappings below are done
/// by hand because std::uniform_real_distribution is not guaranteed to
/// produce the same stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [-scale, scale].
    double next_symmetric(double scale) {
        return (2.0 * next_unit() - 1.0) * scale;
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        // modulo bias is irrelevant at the sizes used here (shuffles of
        // corpora, not cryptography)
        return engine_() % n;
    }

private:
    std::mt19937_64 engine_;
};

/// Fisher-Yates shuffle driven by Rng, so permutations are reproducible.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace seglearn::core
