#pragma once

// Unit vertex-capacity flow on the split digraph of a simple graph.

#include <deque>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn::detail {

class SplitFlow {
public:
    static constexpr int kInfinite = 1 << 20;

    /// Builds in(v) -> out(v) arcs of capacity 1 for every vertex except
    /// `source` and `sink`, and out(a) -> in(b) arcs of infinite capacity for
    /// every edge other than `skip`. One extra node is reserved as a super sink.
    SplitFlow(const Graph& g, Vertex source, Vertex sink, const Edge* skip = nullptr) : n_(g.order()) {
        head_.assign(static_cast<std::size_t>(2 * n_ + 1), -1);
        for (Vertex v = 0; v < n_; ++v) {
            if (v != source && v != sink) add_arc(in(v), out(v), 1);
        }
        for (const Edge& e : g.edges()) {
            if (skip && e == *skip) continue;
            add_arc(out(e.u), in(e.v), kInfinite);
            add_arc(out(e.v), in(e.u), kInfinite);
        }
    }

    int in(Vertex v) const { return 2 * v; }
    int out(Vertex v) const { return 2 * v + 1; }
    int super_sink() const { return 2 * n_; }

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    /// Augments from node s to node t until `limit` units flow or no path remains.
    int max_flow(int s, int t, int limit) {
        int total = 0;
        std::vector<int> via(head_.size());
        while (total < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{s};
            via[static_cast<std::size_t>(s)] = -2;
            while (!queue.empty() && via[static_cast<std::size_t>(t)] == -1) {
                int x = queue.front();
                queue.pop_front();
                for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
                    const Arc& arc = arcs_[static_cast<std::size_t>(a)];
                    if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
                        via[static_cast<std::size_t>(arc.to)] = a;
                        queue.push_back(arc.to);
                    }
                }
            }
            if (via[static_cast<std::size_t>(t)] == -1) break;
            for (int x = t; x != s;) {
                int a = via[static_cast<std::size_t>(x)];
                arcs_[static_cast<std::size_t>(a)].cap -= 1;
                arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
                x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
            }
            ++total;
        }
        return total;
    }

    /// Nodes reachable from s in the residual graph.
    std::vector<bool> residual_reach(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
                const Arc& arc = arcs_[static_cast<std::size_t>(a)];
                if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
                    seen[static_cast<std::size_t>(arc.to)] = true;
                    stack.push_back(arc.to);
                }
            }
        }
        return seen;
    }

    /// Decomposes the current flow out of `s` into vertex sequences of the
    /// original graph, ending at `sink` (or at the super sink when sink < 0).
    std::vector<std::vector<Vertex>> paths(Vertex s, Vertex sink) {
        const int t = sink >= 0 ? in(sink) : super_sink();
        std::vector<std::vector<Vertex>> out_paths;
        for (int a = head_[static_cast<std::size_t>(out(s))]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
            while (flow_on(a) > 0) {
                std::vector<Vertex> path{s};
                take(a);
                int x = arcs_[static_cast<std::size_t>(a)].to;
                while (x != t) {
                    if (x % 2 == 0) path.push_back(x / 2);
                    int next = -1;
                    for (int b = head_[static_cast<std::size_t>(x)]; b >= 0; b = arcs_[static_cast<std::size_t>(b)].next) {
                        if (b % 2 == 0 && flow_on(b) > 0) {
                            next = b;
                            break;
                        }
                    }
                    if (next < 0) break;
                    take(next);
                    x = arcs_[static_cast<std::size_t>(next)].to;
                }
                if (x == t && sink >= 0) path.push_back(sink);
                out_paths.push_back(std::move(path));
            }
        }
        return out_paths;
    }

private:
    struct Arc {
        int to;
        int cap;
        int next;
    };

    // Forward arcs have even indices; the flow they carry sits on the reverse arc.
    int flow_on(int a) const { return a % 2 == 0 ? arcs_[static_cast<std::size_t>(a ^ 1)].cap : 0; }
    void take(int a) {
        arcs_[static_cast<std::size_t>(a ^ 1)].cap -= 1;
        arcs_[static_cast<std::size_t>(a)].cap += 1;
    }

    int n_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

}  // namespace kconn::detail
