#include "mkcover/verify.hpp"

#include <algorithm>
#include <functional>

#include "mkcover/connectivity.hpp"
#include "mkcover/generators.hpp"
#include "mkcover/mst.hpp"

namespace mkcover {

ConstructionOrder random_valid_order(int n, int k, std::mt19937_64& rng,
                                     std::optional<std::size_t> max_edges) {
    if (n < 0 || k < 1) throw GraphError("random_valid_order: need n >= 0 and k >= 1");

    ConstructionOrder order{k, n, {}};
    SimpleGraph current(n);
    while (!max_edges || order.sequence.size() < *max_edges) {
        std::vector<Edge> addable;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const Edge e(u, v);
                if (current.has_edge(e)) continue;
                if (local_connectivity(current, u, v, k) <= k - 1) addable.push_back(e);
            }
        }
        if (addable.empty()) break;
        const Edge pick = addable[rng() % addable.size()];
        current.add_edge(pick);
        order.sequence.push_back(pick);
    }
    return order;
}

namespace {

class CellRecorder {
  public:
    explicit CellRecorder(SuiteReport& report) : report_(report) {}

    void run(int n, int k, std::uint64_t seed, const std::string& check,
             const std::function<bool()>& body) {
        SuiteCell cell{n, k, seed, check, CellResult::fail, ""};
        try {
            cell.result = body() ? CellResult::pass : CellResult::fail;
        } catch (const WorkLimitError&) {
            cell.result = CellResult::skip;
            cell.note = "work-limit";
        } catch (const std::exception& e) {
            cell.result = CellResult::fail;
            cell.note = e.what();
        }
        record(cell);
    }

    void skip(int n, int k, std::uint64_t seed, const std::string& check,
              const std::string& note) {
        record(SuiteCell{n, k, seed, check, CellResult::skip, note});
    }

  private:
    void record(SuiteCell cell) {
        switch (cell.result) {
            case CellResult::pass: ++report_.passed; break;
            case CellResult::fail: ++report_.failed; break;
            case CellResult::skip: ++report_.skipped; break;
        }
        report_.cells.push_back(std::move(cell));
    }

    SuiteReport& report_;
};

}  // namespace

SuiteReport verify_suite(const SuiteParams& params) {
    if (params.n_min < 2 || params.n_max < params.n_min) {
        throw GraphError("verify_suite: need 2 <= n_min <= n_max");
    }
    if (params.seeds < 1) throw GraphError("verify_suite: need seeds >= 1");

    SuiteReport report;
    CellRecorder cells(report);

    for (int n = params.n_min; n <= params.n_max; ++n) {
        const int k_hi = params.k_max > 0 ? std::min(params.k_max, n - 1) : n - 1;
        const bool brute_ok = n <= params.brute_max;
        for (int k = 1; k <= k_hi; ++k) {
            for (int s = 1; s <= params.seeds; ++s) {
                const auto seed = static_cast<std::uint64_t>(s);
                const WeightedGraph g = gen_random_complete(n, Seed{seed});

                CoverReport fast;
                bool fast_ok = false;
                cells.run(n, k, seed, "bound", [&] {
                    fast = mk_fast(g, k);  // the bound is asserted inside
                    fast_ok = true;
                    return fast.cover_size <= fast.bound;
                });
                if (!fast_ok) continue;

                cells.run(n, k, seed, "cover-order", [&] {
                    return check_order(ConstructionOrder{k, n, fast.order}).valid;
                });

                if (brute_ok) {
                    cells.run(n, k, seed, "equivalence", [&] {
                        const auto brute =
                            mk_brute(g, k, params.work_limit, params.threads);
                        return brute.cover == fast.cover;
                    });
                } else {
                    cells.skip(n, k, seed, "equivalence", "brute-force skipped (n > brute-max)");
                }

                if (k <= n - 2) {
                    cells.run(n, k, seed, "monotone", [&] {
                        return check_monotone(g, k, CoverMethod::fast);
                    });
                }
                if (k == 1) {
                    cells.run(n, k, seed, "m1-mst", [&] { return fast.cover == mst(g); });
                }

                cells.run(n, k, seed, "tight", [&] {
                    const WeightedGraph tg = gen_tight(n, k, Seed{seed});
                    const auto rep = mk_fast(tg, k);
                    if (rep.cover_size != rep.bound) return false;
                    if (brute_ok) {
                        const auto brute =
                            mk_brute(tg, k, params.work_limit, params.threads);
                        if (brute.cover != rep.cover) return false;
                    }
                    return true;
                });

                if (brute_ok) {
                    cells.run(n, k, seed, "embedding", [&] {
                        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + n * 131 + k);
                        ConstructionOrder order = random_valid_order(n, k, rng);
                        if (!order.sequence.empty()) {
                            const std::size_t keep = 1 + rng() % order.sequence.size();
                            order.sequence.erase(order.sequence.begin() + keep,
                                                 order.sequence.end());
                        }
                        const WeightedGraph embedded = embed_weights(order);
                        const auto cover =
                            mk_brute(embedded, k, params.work_limit, params.threads).cover;
                        return std::all_of(order.sequence.begin(), order.sequence.end(),
                                           [&](const Edge& e) { return cover.contains(e); });
                    });
                } else {
                    cells.skip(n, k, seed, "embedding", "brute-force skipped (n > brute-max)");
                }
            }
        }
    }
    return report;
}

}  // namespace mkcover
