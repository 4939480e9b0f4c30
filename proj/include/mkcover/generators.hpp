#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mkcover/graph.hpp"

namespace mkcover {

// Same seed and parameters always produce a bit-identical graph, on every
// platform: mt19937_64 is fully specified by the standard and the shuffle
// below avoids std::shuffle's implementation-defined distribution.
struct Seed {
    std::uint64_t value = 0;
};

namespace detail {

template <typename T>
void fisher_yates(std::vector<T>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::swap(values[i - 1], values[rng() % i]);
    }
}

}  // namespace detail

// Extremal family achieving |M_k| = nk - (k+1 choose 2): with V' = {0..k-1},
// edges inside V' get the smallest weights, crossing edges the next block,
// and edges outside V' the largest. The seed shuffles weights within each
// class only.
WeightedGraph gen_tight(int n, int k, Seed seed);

// Complete graph whose weights are a seeded permutation of 1..n(n-1)/2.
WeightedGraph gen_random_complete(int n, Seed seed);

// K4 with cycle edges 0-1, 1-2, 2-3, 0-3 weighted 1..4 and diagonals 0-2, 1-3
// weighted 5, 6. Its M_2 is exactly the cycle.
WeightedGraph fixture_c4();

}  // namespace mkcover
