#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "adpt/assignment.hpp"

namespace adpt {

/// perm[i] is the node of layer k+1 grouped with node i of layer k.
using Permutation = std::vector<int>;

/// Layered assignment problem: n_layers layers of m nodes, arc values between
/// consecutive layers, and an optional bonus on each complete grouping.
struct MdaInstance {
    int m = 1;
    int n_layers = 2;
    std::vector<WeightMatrix> arcs;  ///< n_layers - 1 matrices of size m x m
    std::function<double(std::span<const int>)> grouping_bonus;

    int stages() const noexcept { return n_layers - 1; }
    void validate() const;
};

/// Controls u_0..u_{k-1}; a full history has one permutation per stage.
struct AssignmentHistory {
    std::vector<Permutation> controls;

    bool operator==(const AssignmentHistory&) const = default;
};

struct MdaSolution {
    AssignmentHistory history;
    double value = 0.0;
};

/// Sum over the m groupings of traversed arc values plus grouping bonus.
double grouping_value(const MdaInstance& inst, const AssignmentHistory& full);

/// Exact backward recursion over every reachable state. Limited to m <= 4 and
/// at most 4 stages. Ties resolve to the lexicographically smallest control sequence.
MdaSolution exact_solve(const MdaInstance& inst);

/// Returns the stage-k weight matrix given the controls chosen so far.
using CostProvider = std::function<WeightMatrix(int stage, const AssignmentHistory& so_far)>;

/// Forward pass choosing, at every stage, the max-weight perfect matching of
/// the provider's matrix.
MdaSolution avs_solve(const MdaInstance& inst, const CostProvider& provider);

/// Provider returning the instance's own arc values.
CostProvider arc_value_provider(const MdaInstance& inst);

/// Seeded instance with arc values in [0,1); with_bonus adds a random table
/// bonus in [0, 2) per grouping tuple, which couples the stages.
MdaInstance make_random_instance(std::uint64_t seed, int m, int n_layers, bool with_bonus);

}  // namespace adpt
