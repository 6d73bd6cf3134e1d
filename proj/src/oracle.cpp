#include "syt/oracle.hpp"

#include <algorithm>
#include <functional>

#include "syt/errors.hpp"

namespace syt {

bool Tableau::valid() const {
    long n = shape.size();
    std::vector<int> seen;
    if (rows.size() != shape.height()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<long>(rows[i].size()) != shape.part(i)) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (j > 0 && rows[i][j - 1] >= v) return false;
            if (i > 0 && j < rows[i - 1].size() && rows[i - 1][j] >= v) return false;
            seen.push_back(v);
        }
    }
    std::sort(seen.begin(), seen.end());
    for (long k = 0; k < n; ++k)
        if (seen[static_cast<std::size_t>(k)] != k + 1) return false;
    return true;
}

namespace {

void check_cap(const Partition& shape, long cell_cap) {
    if (shape.size() > cell_cap)
        throw ShapeTooLarge("shape has " + std::to_string(shape.size()) +
                            " cells, cap is " + std::to_string(cell_cap));
}

} // namespace

std::vector<Tableau> enumerate_tableaux(const Partition& shape, long cell_cap) {
    check_cap(shape, cell_cap);
    const long n = shape.size();
    const std::size_t h = shape.height();
    std::vector<Tableau> out;
    std::vector<long> len(h, 0);
    std::vector<long> choice;

    // Reconstruct a tableau from the row chosen at each step.
    auto materialize = [&] {
        Tableau t;
        t.shape = shape;
        t.rows.resize(h);
        for (std::size_t i = 0; i < h; ++i)
            t.rows[i].reserve(static_cast<std::size_t>(shape.part(i)));
        for (long k = 0; k < n; ++k)
            t.rows[static_cast<std::size_t>(choice[static_cast<std::size_t>(k)])]
                .push_back(static_cast<int>(k + 1));
        out.push_back(std::move(t));
    };

    std::function<void(long)> dfs = [&](long step) {
        if (step == n) {
            materialize();
            return;
        }
        for (std::size_t i = 0; i < h; ++i) {
            if (len[i] >= shape.part(i)) continue;
            if (i > 0 && len[i] >= len[i - 1]) continue;
            ++len[i];
            choice.push_back(static_cast<long>(i));
            dfs(step + 1);
            choice.pop_back();
            --len[i];
        }
    };
    dfs(0);
    return out;
}

Int count_oracle(const Partition& shape, long cell_cap) {
    check_cap(shape, cell_cap);
    const long n = shape.size();
    const std::size_t h = shape.height();
    std::vector<long> len(h, 0);
    Int total = 0;

    std::function<void(long)> dfs = [&](long step) {
        if (step == n) {
            ++total;
            return;
        }
        for (std::size_t i = 0; i < h; ++i) {
            if (len[i] >= shape.part(i)) continue;
            if (i > 0 && len[i] >= len[i - 1]) continue;
            ++len[i];
            dfs(step + 1);
            --len[i];
        }
    };
    dfs(0);
    return total;
}

} // namespace syt
