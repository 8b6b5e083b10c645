#ifndef BGCTP_FRONTIER_HPP
#define BGCTP_FRONTIER_HPP

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "bgctp/graph.hpp"

namespace bgctp {

struct FrontierEntry {
    ObjectivePoint point;
    Tree tree; // one witness per point
};

/// Non-dominated set: gamma strictly increasing, tau strictly decreasing.
struct Frontier {
    std::vector<FrontierEntry> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    const FrontierEntry& operator[](std::size_t i) const { return entries[i]; }

    std::vector<ObjectivePoint> points() const {
        std::vector<ObjectivePoint> p;
        p.reserve(entries.size());
        for (const FrontierEntry& e : entries) p.push_back(e.point);
        return p;
    }
};

inline bool is_valid_frontier(const Frontier& f) {
    for (std::size_t i = 1; i < f.entries.size(); ++i) {
        if (f.entries[i - 1].point.gamma >= f.entries[i].point.gamma) return false;
        if (f.entries[i - 1].point.tau <= f.entries[i].point.tau) return false;
    }
    return true;
}

/// Keeps exactly the non-dominated points. Duplicates collapse to the first
/// witness in input order.
inline Frontier dominance_filter(std::vector<FrontierEntry> candidates) {
    std::vector<std::size_t> idx(candidates.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const ObjectivePoint& p = candidates[a].point;
        const ObjectivePoint& q = candidates[b].point;
        return std::pair(p.gamma, p.tau) < std::pair(q.gamma, q.tau);
    });

    Frontier out;
    for (std::size_t i : idx) {
        const ObjectivePoint& p = candidates[i].point;
        if (!out.entries.empty()) {
            const ObjectivePoint& last = out.entries.back().point;
            if (p.gamma == last.gamma || p.tau >= last.tau) continue; // dominated or duplicate
        }
        out.entries.push_back(std::move(candidates[i]));
    }
    return out;
}

} // namespace bgctp

#endif // BGCTP_FRONTIER_HPP
