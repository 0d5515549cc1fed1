#include "adpt/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adpt {

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

WeightMatrix::WeightMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("WeightMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

std::optional<std::size_t> Matching::col_of(std::size_t row) const {
    for (const auto& [r, c] : pairs) {
        if (r == row) {
            return c;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> Matching::row_of(std::size_t col) const {
    for (const auto& [r, c] : pairs) {
        if (c == col) {
            return r;
        }
    }
    return std::nullopt;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(const WeightMatrix& w) {
    for (double x : w.data()) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("WeightMatrix: non-finite entry");
        }
    }
}

double tie_tolerance(const WeightMatrix& w) {
    double scale = 1.0;
    for (double x : w.data()) {
        scale = std::max(scale, std::abs(x));
    }
    return 1e-11 * scale;
}

/// Square min-cost assignment over `cost` (n*n, +inf = forbidden), shortest
/// augmenting paths with row/column potentials. The final potentials are
/// dual-optimal, so every optimal assignment lies on zero reduced-cost edges.
struct LapResult {
    std::vector<int> row_to_col;
    std::vector<double> u;
    std::vector<double> v;
};

LapResult solve_lap(const std::vector<double>& cost, int n) {
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    auto a = [&](int i, int j) { return cost[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = kInf;
            int j1 = -1;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) {
                    continue;
                }
                const double cur = a(i0, j) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (j1 < 0) {
                throw std::logic_error("solve_lap: no feasible assignment");
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    LapResult out;
    out.row_to_col.assign(n, -1);
    for (int j = 1; j <= n; ++j) {
        out.row_to_col[p[j] - 1] = j - 1;
    }
    out.u.assign(u.begin() + 1, u.end());
    out.v.assign(v.begin() + 1, v.end());
    return out;
}

/// Rewrites an optimal assignment into the lexicographically smallest optimal
/// one for rows [0, ordered_rows). Works on the equality subgraph of the dual.
std::vector<int> lexicographic_optimum(const std::vector<double>& cost, int n, const LapResult& lap,
                                       int ordered_rows, double tol) {
    std::vector<std::vector<int>> tight(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double c = cost[static_cast<std::size_t>(i) * n + j];
            if (c != kInf && std::abs(c - lap.u[i] - lap.v[j]) <= tol) {
                tight[i].push_back(j);
            }
        }
    }

    std::vector<int> row_to_col = lap.row_to_col;
    std::vector<int> col_to_row(n);
    for (int i = 0; i < n; ++i) {
        col_to_row[row_to_col[i]] = i;
    }
    std::vector<char> row_locked(n, 0), col_locked(n, 0);
    std::vector<int> parent_row(n);
    std::vector<int> queue;

    for (int r = 0; r < ordered_rows; ++r) {
        for (int c : tight[r]) {
            if (col_locked[c]) {
                continue;
            }
            if (row_to_col[r] == c) {
                break;
            }
            // Move r onto c: the displaced row must reach r's old column along
            // an alternating path of tight edges that avoids locked nodes.
            const int freed = row_to_col[r];
            const int start = col_to_row[c];
            std::fill(parent_row.begin(), parent_row.end(), -2);
            queue.assign(1, start);
            int found = -1;
            for (std::size_t head = 0; head < queue.size() && found < 0; ++head) {
                const int row = queue[head];
                for (int x : tight[row]) {
                    if (col_locked[x] || x == c || parent_row[x] != -2) {
                        continue;
                    }
                    parent_row[x] = row;
                    if (x == freed) {
                        found = x;
                        break;
                    }
                    queue.push_back(col_to_row[x]);
                }
            }
            if (found < 0) {
                continue;
            }
            for (int x = found; x != -1;) {
                const int row = parent_row[x];
                const int prev = row_to_col[row];
                row_to_col[row] = x;
                col_to_row[x] = row;
                x = (row == start) ? -1 : prev;
            }
            row_to_col[r] = c;
            col_to_row[c] = r;
            break;
        }
        row_locked[r] = 1;
        col_locked[row_to_col[r]] = 1;
    }
    return row_to_col;
}

Matching collect(const WeightMatrix& w, const std::vector<int>& row_to_col) {
    Matching m;
    for (std::size_t r = 0; r < w.rows(); ++r) {
        const int c = row_to_col[r];
        if (c >= 0 && static_cast<std::size_t>(c) < w.cols()) {
            m.pairs.emplace_back(r, static_cast<std::size_t>(c));
            m.total_weight += w(r, static_cast<std::size_t>(c));
        }
    }
    return m;
}

}  // namespace

Matching hungarian_max(const WeightMatrix& w, double min_weight) {
    require_finite(w);
    if (w.empty()) {
        return {};
    }
    const int rows = static_cast<int>(w.rows());
    const int cols = static_cast<int>(w.cols());
    const int n = rows + cols;

    // Padded square problem: row r may fall back to its private dummy column
    // cols + r, column c may be absorbed by dummy row rows + c.
    std::vector<double> cost(static_cast<std::size_t>(n) * n, kInf);
    auto at = [&](int i, int j) -> double& { return cost[static_cast<std::size_t>(i) * n + j]; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double x = w(r, c);
            if (x >= min_weight) {
                at(r, c) = -x;
            }
        }
        at(r, cols + r) = 0.0;
    }
    for (int c = 0; c < cols; ++c) {
        at(rows + c, c) = 0.0;
        for (int d = 0; d < rows; ++d) {
            at(rows + c, cols + d) = 0.0;
        }
    }

    const LapResult lap = solve_lap(cost, n);
    const auto row_to_col = lexicographic_optimum(cost, n, lap, rows, tie_tolerance(w));
    return collect(w, row_to_col);
}

Matching max_weight_perfect_matching(const WeightMatrix& w) {
    require_finite(w);
    if (w.rows() != w.cols()) {
        throw std::invalid_argument("max_weight_perfect_matching: matrix must be square");
    }
    if (w.empty()) {
        return {};
    }
    const int n = static_cast<int>(w.rows());
    std::vector<double> cost(w.data().begin(), w.data().end());
    for (double& x : cost) {
        x = -x;
    }
    const LapResult lap = solve_lap(cost, n);
    const auto row_to_col = lexicographic_optimum(cost, n, lap, n, tie_tolerance(w));
    return collect(w, row_to_col);
}

Matching brute_force_match(const WeightMatrix& w, double min_weight) {
    require_finite(w);
    if (w.rows() > 8 || w.cols() > 8) {
        throw std::invalid_argument("brute_force_match: dimensions above 8 are not supported");
    }
    const std::size_t rows = w.rows();
    const std::size_t cols = w.cols();
    const double tol = tie_tolerance(w);

    std::vector<int> current(rows, -1), best(rows, -1);
    std::vector<char> col_used(cols, 0);
    double best_total = -kInf;

    // Depth-first in lexicographic order (columns ascending, then "unmatched"),
    // so the first optimum met is the lexicographically smallest one.
    auto recurse = [&](auto&& self, std::size_t r, double total) -> void {
        if (r == rows) {
            if (total > best_total + tol) {
                best_total = total;
                best = current;
            }
            return;
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (col_used[c] || !(w(r, c) >= min_weight)) {
                continue;
            }
            col_used[c] = 1;
            current[r] = static_cast<int>(c);
            self(self, r + 1, total + w(r, c));
            col_used[c] = 0;
        }
        current[r] = -1;
        self(self, r + 1, total);
    };
    recurse(recurse, 0, 0.0);
    return collect(w, best);
}

}  // namespace adpt
