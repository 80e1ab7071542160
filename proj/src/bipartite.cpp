#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "kconn/connectivity.hpp"
#include "kconn/enumeration.hpp"

namespace kconn {

namespace {

std::vector<unsigned> neighborhood_types(int x, bool semi_cubic, int min_y_degree) {
    std::vector<unsigned> types;
    for (unsigned mask = 1; mask < (1u << x); ++mask) {
        const int d = std::popcount(mask);
        if (semi_cubic ? d == 3 : d >= min_y_degree) types.push_back(mask);
    }
    return types;
}

unsigned permute_mask(unsigned mask, const std::vector<int>& perm) {
    unsigned out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if ((mask >> i) & 1u) out |= 1u << perm[i];
    }
    return out;
}

}  // namespace

Graph BipartiteInstance::graph() const {
    GraphBuilder b(x + static_cast<int>(y.size()));
    for (std::size_t j = 0; j < y.size(); ++j) {
        for (int u : y[j]) b.add_edge(u, x + static_cast<Vertex>(j));
    }
    return std::move(b).build();
}

std::vector<BipartiteInstance> bipartite_instances(int x, bool semi_cubic, int lo_y, int hi_y, int max_multiplicity) {
    if (x < 1 || x > 8) throw GraphError("bipartite_instances: |X| must be in 1..8");
    const int min_y_degree = 3;
    std::vector<unsigned> types = neighborhood_types(x, semi_cubic, min_y_degree);
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(x));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<unsigned>> seen;
    std::vector<unsigned> chosen;
    auto canonical = [&](const std::vector<unsigned>& masks) {
        std::vector<unsigned> best;
        for (const auto& p : perms) {
            std::vector<unsigned> image;
            for (unsigned m : masks) image.push_back(permute_mask(m, p));
            std::sort(image.begin(), image.end());
            if (best.empty() || image < best) best = std::move(image);
        }
        return best;
    };
    // Multisets of types as nondecreasing sequences of type indices.
    auto recurse = [&](auto&& self, std::size_t from, int used_of_last) -> void {
        const int size = static_cast<int>(chosen.size());
        if (size >= lo_y) seen.insert(canonical(chosen));
        if (size == hi_y) return;
        for (std::size_t t = from; t < types.size(); ++t) {
            const int used = (t == from && !chosen.empty() && chosen.back() == types[t]) ? used_of_last : 0;
            if (used >= max_multiplicity) continue;
            chosen.push_back(types[t]);
            self(self, t, used + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, 0);

    std::vector<BipartiteInstance> out;
    for (const auto& masks : seen) {
        BipartiteInstance inst;
        inst.x = x;
        for (unsigned m : masks) {
            std::vector<int> nbrs;
            for (int i = 0; i < x; ++i) {
                if ((m >> i) & 1u) nbrs.push_back(i);
            }
            inst.y.push_back(std::move(nbrs));
        }
        out.push_back(std::move(inst));
    }
    return out;
}

std::optional<std::pair<int, int>> find_k32(const BipartiteInstance& inst) {
    for (std::size_t i = 0; i < inst.y.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.y.size(); ++j) {
            if (inst.y[i].size() == 3 && inst.y[i] == inst.y[j]) return std::pair{static_cast<int>(i), static_cast<int>(j)};
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_neighborhood_witness(const BipartiteInstance& inst, bool with_internal,
                                                          bool proper) {
    const int ny = static_cast<int>(inst.y.size());
    if (ny > 20) throw GraphError("find_neighborhood_witness: too many Y-vertices");
    const Graph g = inst.graph();
    std::vector<unsigned> masks;
    for (unsigned z = 1; z < (1u << ny); ++z) masks.push_back(z);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (unsigned z : masks) {
        if (proper && z == (1u << ny) - 1) continue;
        if (std::popcount(z) < 3) continue;
        VertexSet closed;
        std::vector<bool> in(static_cast<std::size_t>(inst.x), false);
        for (int j = 0; j < ny; ++j) {
            if (!((z >> j) & 1u)) continue;
            for (int u : inst.y[static_cast<std::size_t>(j)]) in[static_cast<std::size_t>(u)] = true;
        }
        for (int u = 0; u < inst.x; ++u) {
            if (in[static_cast<std::size_t>(u)]) closed.push_back(u);
        }
        for (int j = 0; j < ny; ++j) {
            if ((z >> j) & 1u) closed.push_back(inst.x + j);
        }
        Relabeled h = induced_subgraph(g, closed);
        if (!is_k_connected(h.graph, 3)) continue;
        std::vector<int> zs;
        for (int j = 0; j < ny; ++j) {
            if ((z >> j) & 1u) zs.push_back(j);
        }
        if (!with_internal) return zs;
        for (int j : zs) {
            Vertex local = h.old_to_new[static_cast<std::size_t>(inst.x + j)];
            if (is_internally_3_connected(delete_vertex(h.graph, local).graph)) {
                zs.push_back(j);
                return zs;
            }
        }
    }
    return std::nullopt;
}

}  // namespace kconn
