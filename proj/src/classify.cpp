#include "qdg/classify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qdg/errors.hpp"
#include "qdg/generators.hpp"

namespace qdg {

LabelingSearchResult classify_labelings(const Graph& g, int m, int n, Sign s, bool exhaustive,
                                        long long trials, std::uint64_t seed) {
    const int N = g.vertex_count();
    if (N != m * n)
        throw DimensionError("classify: graph has " + std::to_string(N) + " vertices, m*n = " +
                             std::to_string(m * n));
    if (exhaustive && N > exhaustive_labeling_cap)
        throw DimensionError("classify: exhaustive search capped at N <= " +
                             std::to_string(exhaustive_labeling_cap));

    LabelingSearchResult out;
    out.sign = s;
    out.mode = exhaustive ? "exhaustive" : "random";

    bool first = true;
    auto consider = [&](const std::vector<int>& perm) {
        const long long value = qd(g, ClusterLabeling(m, n, perm), s).qd_total;
        if (first || value < out.min_qd) {
            out.min_qd = value;
            out.min_labeling = perm;
        }
        if (first || value > out.max_qd) {
            out.max_qd = value;
            out.max_labeling = perm;
        }
        first = false;
        ++out.searched;
    };

    if (exhaustive) {
        std::vector<int> perm(static_cast<std::size_t>(N));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            consider(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::vector<int> identity(static_cast<std::size_t>(N));
        std::iota(identity.begin(), identity.end(), 1);
        consider(identity);
        for (long long t = 0; t < trials; ++t)
            consider(gen::random_permutation(N, seed + static_cast<std::uint64_t>(t)));
    }
    out.zero_discord_found = out.min_qd == 0;
    return out;
}

} // namespace qdg
