#ifndef QDG_CLASSIFY_HPP
#define QDG_CLASSIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qdg/discord.hpp"
#include "qdg/graph.hpp"

namespace qdg {

/// Cap on N for exhaustive labeling search (N! permutations, 8! = 40320).
inline constexpr int exhaustive_labeling_cap = 8;

struct LabelingSearchResult {
    Sign sign = Sign::laplacian;
    long long min_qd = 0;
    long long max_qd = 0;
    std::vector<int> min_labeling; // witness permutations
    std::vector<int> max_labeling;
    bool zero_discord_found = false;
    long long searched = 0;
    std::string mode; // "exhaustive" | "random"
};

/// Min/max of qd over vertex labelings of g with cluster shape (m, n).
/// Exhaustive mode enumerates all N! permutations and requires
/// N <= exhaustive_labeling_cap (DimensionError beyond); random mode draws
/// `trials` seeded permutations (the identity is always included, so the
/// reported minimum is never worse than the natural labeling).
LabelingSearchResult classify_labelings(const Graph& g, int m, int n, Sign s,
                                        bool exhaustive, long long trials,
                                        std::uint64_t seed);

} // namespace qdg

#endif // QDG_CLASSIFY_HPP
