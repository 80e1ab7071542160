#include "kconn/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "kconn/graph6.hpp"

namespace kconn {

namespace {

using Mask = std::uint32_t;
constexpr int kMax = kMaxCanonicalOrder;

struct Partition {
    std::array<Mask, kMax> cell{};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

using Rows = std::array<Mask, kMax>;
using Perm = std::array<std::int8_t, kMax>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()) {
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex u : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
        }
    }

    std::vector<Vertex> run() {
        std::vector<Vertex> labels(static_cast<std::size_t>(n_));
        if (n_ == 0) return labels;
        Partition root;
        root.cell[0] = n_ == 32 ? ~Mask{0} : ((Mask{1} << n_) - 1);
        root.count = 1;
        search(root, 0);
        for (int i = 0; i < n_; ++i) labels[static_cast<std::size_t>(best_seq_[static_cast<std::size_t>(i)])] = i;
        return labels;
    }

private:
    // Splits cells by neighbor counts into every cell until stable. Cell order is
    // fixed by the count signatures, so the result commutes with relabeling.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < p.count && !changed; ++i) {
                Mask m = p.cell[static_cast<std::size_t>(i)];
                if (std::popcount(m) <= 1) continue;
                std::array<std::pair<std::uint64_t, int>, kMax> items{};
                int cnt = 0;
                for (Mask rest = m; rest; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    std::uint64_t sig = 0;
                    for (int j = 0; j < p.count; ++j) {
                        sig = (sig << 4) |
                              static_cast<std::uint64_t>(std::popcount(adj_[static_cast<std::size_t>(v)] &
                                                                       p.cell[static_cast<std::size_t>(j)]));
                    }
                    items[static_cast<std::size_t>(cnt++)] = {sig, v};
                }
                std::sort(items.begin(), items.begin() + cnt);
                if (items[0].first == items[static_cast<std::size_t>(cnt - 1)].first) continue;

                std::array<Mask, kMax> groups{};
                int gcount = 0;
                for (int t = 0; t < cnt; ++t) {
                    if (t > 0 && items[static_cast<std::size_t>(t)].first != items[static_cast<std::size_t>(t - 1)].first) {
                        ++gcount;
                    }
                    groups[static_cast<std::size_t>(gcount)] |= Mask{1} << items[static_cast<std::size_t>(t)].second;
                }
                ++gcount;
                Partition next;
                next.count = 0;
                for (int j = 0; j < i; ++j) next.cell[static_cast<std::size_t>(next.count++)] = p.cell[static_cast<std::size_t>(j)];
                for (int j = 0; j < gcount; ++j) next.cell[static_cast<std::size_t>(next.count++)] = groups[static_cast<std::size_t>(j)];
                for (int j = i + 1; j < p.count; ++j) next.cell[static_cast<std::size_t>(next.count++)] = p.cell[static_cast<std::size_t>(j)];
                p = next;
                changed = true;
            }
        }
    }

    Rows encode(const Partition& p, std::array<int, kMax>& seq) const {
        std::array<int, kMax> label{};
        for (int i = 0; i < n_; ++i) {
            int v = std::countr_zero(p.cell[static_cast<std::size_t>(i)]);
            seq[static_cast<std::size_t>(i)] = v;
            label[static_cast<std::size_t>(v)] = i;
        }
        Rows rows{};
        for (int i = 0; i < n_; ++i) {
            Mask row = 0;
            for (Mask nb = adj_[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])]; nb; nb &= nb - 1) {
                row |= Mask{1} << (n_ - 1 - label[static_cast<std::size_t>(std::countr_zero(nb))]);
            }
            rows[static_cast<std::size_t>(i)] = row;
        }
        return rows;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
        return static_cast<int>(i);
    }

    void record_automorphism(const std::array<int, kMax>& from, const std::array<int, kMax>& to) {
        Perm gamma{};
        for (int i = 0; i < n_; ++i) {
            gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] =
                static_cast<std::int8_t>(to[static_cast<std::size_t>(i)]);
        }
        autos_.push_back(gamma);
    }

    // Returns the depth to resume at; equal to the caller's depth means "continue".
    int search(Partition p, int depth) {
        refine(p);
        if (p.discrete(n_)) {
            std::array<int, kMax> seq{};
            Rows rows = encode(p, seq);
            if (!have_leaf_) {
                have_leaf_ = true;
                first_rows_ = best_rows_ = rows;
                first_seq_ = best_seq_ = seq;
                first_path_ = best_path_ = path_;
                return depth;
            }
            if (rows == first_rows_) {
                record_automorphism(first_seq_, seq);
                return common_prefix(path_, first_path_);
            }
            int cmp = 0;
            for (int i = 0; i < n_ && cmp == 0; ++i) {
                if (rows[static_cast<std::size_t>(i)] != best_rows_[static_cast<std::size_t>(i)]) {
                    cmp = rows[static_cast<std::size_t>(i)] > best_rows_[static_cast<std::size_t>(i)] ? 1 : -1;
                }
            }
            if (cmp == 0) {
                record_automorphism(best_seq_, seq);
                return common_prefix(path_, best_path_);
            }
            if (cmp > 0) {
                best_rows_ = rows;
                best_seq_ = seq;
                best_path_ = path_;
            }
            return depth;
        }

        int target = 0;
        while (std::popcount(p.cell[static_cast<std::size_t>(target)]) <= 1) ++target;
        Mask cell = p.cell[static_cast<std::size_t>(target)];
        Mask explored = 0;
        for (Mask rest = cell; rest; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            if (explored && equivalent_to_explored(w, explored)) continue;
            explored |= Mask{1} << w;

            Partition child;
            child.count = 0;
            for (int j = 0; j < p.count; ++j) {
                if (j == target) {
                    child.cell[static_cast<std::size_t>(child.count++)] = Mask{1} << w;
                    child.cell[static_cast<std::size_t>(child.count++)] = cell & ~(Mask{1} << w);
                } else {
                    child.cell[static_cast<std::size_t>(child.count++)] = p.cell[static_cast<std::size_t>(j)];
                }
            }
            path_.push_back(w);
            int resume = search(child, depth + 1);
            path_.pop_back();
            if (resume < depth) return resume;
        }
        return depth;
    }

    // True when w shares an orbit with an explored sibling under the automorphisms
    // found so far that fix the current individualization path pointwise.
    bool equivalent_to_explored(int w, Mask explored) const {
        std::array<int, kMax> parent{};
        std::iota(parent.begin(), parent.begin() + n_, 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        bool any = false;
        for (const Perm& gamma : autos_) {
            bool fixes = true;
            for (int v : path_) {
                if (gamma[static_cast<std::size_t>(v)] != v) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n_; ++v) {
                int a = find(v);
                int b = find(gamma[static_cast<std::size_t>(v)]);
                if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        if (!any) return false;
        int rw = find(w);
        for (Mask rest = explored; rest; rest &= rest - 1) {
            if (find(std::countr_zero(rest)) == rw) return true;
        }
        return false;
    }

    int n_;
    std::array<Mask, kMax> adj_{};
    std::vector<Perm> autos_;
    std::vector<int> path_;
    bool have_leaf_ = false;
    Rows first_rows_{}, best_rows_{};
    std::array<int, kMax> first_seq_{}, best_seq_{};
    std::vector<int> first_path_, best_path_;
};

void check_cap(const Graph& g, int cap) {
    int limit = std::min(cap, kMaxCanonicalOrder);
    if (g.order() > limit) {
        throw GraphError("canonical form: order " + std::to_string(g.order()) + " exceeds cap " +
                         std::to_string(limit));
    }
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, int cap) {
    check_cap(g, cap);
    return Canonizer(g).run();
}

Graph canonical_form(const Graph& g, int cap) {
    std::vector<Vertex> labels = canonical_labeling(g, cap);
    GraphBuilder b(g.order());
    for (const Edge& e : g.edges()) {
        b.add_edge(labels[static_cast<std::size_t>(e.u)], labels[static_cast<std::size_t>(e.v)]);
    }
    return std::move(b).build();
}

std::string canonical_key(const Graph& g, int cap) { return to_graph6(canonical_form(g, cap)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_key(a, kMaxCanonicalOrder) == canonical_key(b, kMaxCanonicalOrder);
}

}  // namespace kconn
