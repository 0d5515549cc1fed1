#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace adpt {

/// Dense row-major matrix of association weights (rows: tracks, cols: detections).
class WeightMatrix {
public:
    WeightMatrix() = default;
    WeightMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    WeightMatrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> data() const noexcept { return data_; }

    bool operator==(const WeightMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A partial assignment. Pairs are sorted by row; rows and cols are distinct.
struct Matching {
    std::vector<IndexPair> pairs;
    double total_weight = 0.0;

    std::optional<std::size_t> col_of(std::size_t row) const;
    std::optional<std::size_t> row_of(std::size_t col) const;

    bool operator==(const Matching&) const = default;
};

inline constexpr double kNoGate = -std::numeric_limits<double>::infinity();

/// Maximum-weight partial matching using only entries >= min_weight.
///
/// Rows and columns may stay unmatched. Among optimal matchings the one whose
/// row->column vector is lexicographically smallest wins, where "unmatched"
/// ranks after every column. Entries must be finite.
Matching hungarian_max(const WeightMatrix& w, double min_weight);

/// Maximum-weight perfect matching of a square matrix (every row matched).
/// Same tie-break rule as hungarian_max.
Matching max_weight_perfect_matching(const WeightMatrix& w);

/// Exhaustive oracle with the same contract and tie-break as hungarian_max.
/// Limited to 8x8.
Matching brute_force_match(const WeightMatrix& w, double min_weight);

}  // namespace adpt
