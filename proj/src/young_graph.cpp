#include "syt/young_graph.hpp"

#include <functional>
#include <vector>

#include "syt/closedform.hpp"
#include "syt/errors.hpp"
#include "syt/partition.hpp"

namespace syt {

namespace {

constexpr const char* kArrowheads[3] = {"normal", "empty", "diamond"};

std::vector<Partition> lattice_points(std::size_t r, long max_coordinate) {
    std::vector<Partition> points;
    std::vector<long> acc;
    std::function<void(std::size_t, long)> rec = [&](std::size_t depth, long bound) {
        if (depth == r) {
            points.emplace_back(acc);
            return;
        }
        for (long v = bound; v >= 0; --v) {
            acc.push_back(v);
            rec(depth + 1, v);
            acc.pop_back();
        }
    };
    rec(0, max_coordinate);
    return points;
}

} // namespace

std::string young_graph_dot(std::size_t r, long max_coordinate) {
    if (r < 1 || r > 3)
        throw CapExceeded("graph export supports 1 <= r <= 3");
    if (max_coordinate < 0 || max_coordinate > 6)
        throw CapExceeded("graph export supports max coordinate <= 6");

    const auto points = lattice_points(r, max_coordinate);
    std::string dot = "digraph young {\n  rankdir=BT;\n  node [shape=ellipse];\n";
    for (const auto& p : points) {
        const Int count = count_closed(p, r).value;
        dot += "  \"" + p.to_string() + "\" [label=\"" + p.to_string() + " : " +
               to_decimal(count) + "\"];\n";
    }
    for (const auto& p : points) {
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<long> next(r);
            for (std::size_t j = 0; j < r; ++j) next[j] = p.part(j);
            ++next[i];
            if (next[i] > max_coordinate) continue;
            if (i > 0 && next[i] > next[i - 1]) continue;
            dot += "  \"" + p.to_string() + "\" -> \"" + Partition(next).to_string() +
                   "\" [arrowhead=" + kArrowheads[i] + "];\n";
        }
    }
    dot += "}\n";
    return dot;
}

} // namespace syt
