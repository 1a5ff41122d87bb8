#include "causaldisc/random.hpp"

#include <numeric>

namespace causaldisc {

Dmg random_dmg(int n, double edge_density, double bidirected_density, std::uint64_t seed,
               const RandomDmgOptions& options) {
    if (edge_density < 0.0 || edge_density > 1.0 || bidirected_density < 0.0 || bidirected_density > 1.0)
        throw Error(ErrorCode::invalid_density, "densities must lie in [0,1]");
    const int contexts = options.jci ? options.jci->context_count : 0;
    const unsigned subset = options.jci ? options.jci->subset : 0u;
    if (contexts < 0 || contexts > n)
        throw Error(ErrorCode::validation_error, "context count out of range");

    std::vector<std::string> names;
    for (int k = 1; k <= contexts; ++k) names.push_back("C" + std::to_string(k));
    for (int k = 1; k <= n - contexts; ++k) names.push_back("X" + std::to_string(k));

    auto is_context = [&](int v) { return v < contexts; };

    Rng rng(seed);
    // Random topological order for the acyclic variant.
    std::vector<int> position(n);
    std::iota(position.begin(), position.end(), 0);
    if (options.acyclic_only) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        for (int k = 0; k < n; ++k) position[perm[k]] = k;
    }

    std::vector<std::pair<int, int>> dir, bidir;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (options.acyclic_only && position[i] > position[j]) continue;
            if (is_context(j) && !is_context(i) && (subset & 1u)) continue;  // no system -> context
            if (is_context(i) && is_context(j) && (subset & 4u)) continue;   // context blocks are purely bidirected
            if (rng.coin(edge_density)) dir.emplace_back(i, j);
        }
    const bool no_bidirected = options.causal_sufficiency;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool ctx_pair = is_context(i) && is_context(j);
            if (ctx_pair && (subset & 4u)) {
                bidir.emplace_back(i, j);
                continue;
            }
            if (no_bidirected) continue;
            if ((is_context(i) != is_context(j)) && (subset & 2u)) continue;  // no context <-> system
            if (rng.coin(bidirected_density)) bidir.emplace_back(i, j);
        }
    return Dmg(std::move(names), dir, bidir);
}

}  // namespace causaldisc
