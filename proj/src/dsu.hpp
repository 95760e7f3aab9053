#pragma once

#include <vector>

namespace pardual::detail {

// Union-find with undo (union by size, no path compression) tracking the
// component count and per-component edge counts.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) { reset(n); }

    void reset(int n) {
        parent_.assign(static_cast<std::size_t>(n), -1);
        size_.assign(static_cast<std::size_t>(n), 1);
        edges_.assign(static_cast<std::size_t>(n), 0);
        ops_.clear();
        comps_ = n;
    }

    int find(int v) const {
        while (parent_[v] >= 0) v = parent_[v];
        return v;
    }

    // Registers edge (u, v); merges components or bumps the cycle count.
    void add_edge(int u, int v) {
        int a = find(u), b = find(v);
        if (a == b) {
            ++edges_[a];
            ops_.push_back({a, -1});
            return;
        }
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        edges_[a] += edges_[b] + 1;
        --comps_;
        ops_.push_back({a, b});
    }

    void undo() {
        auto [a, b] = ops_.back();
        ops_.pop_back();
        if (b < 0) {
            --edges_[a];
            return;
        }
        parent_[b] = -1;
        size_[a] -= size_[b];
        edges_[a] -= edges_[b] + 1;
        ++comps_;
    }

    std::size_t checkpoint() const { return ops_.size(); }
    void rewind(std::size_t mark) {
        while (ops_.size() > mark) undo();
    }

    int components() const { return comps_; }
    int component_size(int v) const { return size_[find(v)]; }
    int component_edges(int v) const { return edges_[find(v)]; }

private:
    std::vector<int> parent_, size_, edges_;
    std::vector<std::pair<int, int>> ops_;
    int comps_ = 0;
};

} // namespace pardual::detail
