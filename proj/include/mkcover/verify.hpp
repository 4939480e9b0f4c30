#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mkcover/constructible.hpp"
#include "mkcover/mk_cover.hpp"

namespace mkcover {

// Builds a valid k-construction order by repeatedly appending a uniformly
// chosen pair whose endpoints are still at most (k-1)-connected. Stops at
// max_edges, or when no pair can be appended.
ConstructionOrder random_valid_order(int n, int k, std::mt19937_64& rng,
                                     std::optional<std::size_t> max_edges = std::nullopt);

struct SuiteParams {
    int n_min = 4;
    int n_max = 8;
    int seeds = 3;      // seeds 1..seeds per (n, k)
    int brute_max = 8;  // largest n for brute-force legs
    int k_max = 0;      // 0 = all k in 1..n-1
    std::uint64_t work_limit = kDefaultWorkLimit;
    int threads = 1;
};

enum class CellResult { pass, fail, skip };

struct SuiteCell {
    int n;
    int k;
    std::uint64_t seed;
    std::string check;
    CellResult result;
    std::string note;
};

struct SuiteReport {
    std::vector<SuiteCell> cells;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

// Batch driver: per (n, k, seed) cell it checks the edge bound, fast/brute
// equivalence, cover monotonicity, M_1 = MST, the construction-order property
// of the fast output, the weight-embedding property, and tight-instance
// equality. Brute-force legs above brute_max are skipped with a notice, and
// work-limit aborts mark the cell skipped rather than failing the run.
SuiteReport verify_suite(const SuiteParams& params);

}  // namespace mkcover
