// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdlib>
#include <random>

namespace tautknot::testing {

// Property-test RNG; TAUTKNOT_SEED overrides the default seed so failures
// can be replayed.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
    std::uint64_t seed = 0x7a07;
    if (const char* env = std::getenv("TAUTKNOT_SEED")) seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(seed ^ (salt * 0x9e3779b97f4a7c15ull));
}

} // namespace tautknot::testing
