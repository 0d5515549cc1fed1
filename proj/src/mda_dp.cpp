#include "adpt/mda_dp.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "adpt/rng.hpp"

namespace adpt {

namespace {

bool is_permutation_of(const Permutation& p, int m) {
    if (static_cast<int>(p.size()) != m) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int x : p) {
        if (x < 0 || x >= m || seen[static_cast<std::size_t>(x)]) {
            return false;
        }
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<Permutation> out;
    Permutation p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

void MdaInstance::validate() const {
    if (m < 1 || n_layers < 2) {
        throw std::invalid_argument("MdaInstance: need m >= 1 and at least two layers");
    }
    if (static_cast<int>(arcs.size()) != stages()) {
        throw std::invalid_argument("MdaInstance: expected one arc matrix per stage");
    }
    for (const WeightMatrix& a : arcs) {
        if (static_cast<int>(a.rows()) != m || static_cast<int>(a.cols()) != m) {
            throw std::invalid_argument("MdaInstance: arc matrix must be m x m");
        }
        for (double x : a.data()) {
            if (!std::isfinite(x)) {
                throw std::invalid_argument("MdaInstance: non-finite arc value");
            }
        }
    }
}

double grouping_value(const MdaInstance& inst, const AssignmentHistory& full) {
    if (static_cast<int>(full.controls.size()) != inst.stages()) {
        throw std::invalid_argument("grouping_value: history does not cover every stage");
    }
    for (const Permutation& u : full.controls) {
        if (!is_permutation_of(u, inst.m)) {
            throw std::invalid_argument("grouping_value: control is not a permutation");
        }
    }
    std::vector<int> tuple(static_cast<std::size_t>(inst.n_layers));
    double total = 0.0;
    for (int start = 0; start < inst.m; ++start) {
        int node = start;
        tuple[0] = node;
        for (int k = 0; k < inst.stages(); ++k) {
            const int next = full.controls[static_cast<std::size_t>(k)][static_cast<std::size_t>(node)];
            total += inst.arcs[static_cast<std::size_t>(k)](static_cast<std::size_t>(node),
                                                             static_cast<std::size_t>(next));
            node = next;
            tuple[static_cast<std::size_t>(k) + 1] = node;
        }
        if (inst.grouping_bonus) {
            total += inst.grouping_bonus(tuple);
        }
    }
    return total;
}

MdaSolution exact_solve(const MdaInstance& inst) {
    inst.validate();
    if (inst.m > 4 || inst.stages() > 4) {
        throw std::invalid_argument("exact_solve: instance exceeds m <= 4, stages <= 4");
    }
    const auto perms = all_permutations(inst.m);
    const std::size_t p = perms.size();
    const int stages = inst.stages();

    auto decode = [&](std::size_t index, int length) {
        AssignmentHistory h;
        h.controls.resize(static_cast<std::size_t>(length));
        for (int k = length - 1; k >= 0; --k) {
            h.controls[static_cast<std::size_t>(k)] = perms[index % p];
            index /= p;
        }
        return h;
    };

    // value[k] holds J*_k over every state x_k = (u_0..u_{k-1}), encoded in base p.
    std::vector<std::vector<double>> value(static_cast<std::size_t>(stages) + 1);
    std::size_t count = 1;
    for (int k = 0; k < stages; ++k) {
        count *= p;
    }
    value[static_cast<std::size_t>(stages)].resize(count);
    for (std::size_t x = 0; x < count; ++x) {
        value[static_cast<std::size_t>(stages)][x] = grouping_value(inst, decode(x, stages));
    }
    for (int k = stages - 1; k >= 1; --k) {
        const auto& next = value[static_cast<std::size_t>(k) + 1];
        auto& cur = value[static_cast<std::size_t>(k)];
        cur.resize(next.size() / p);
        for (std::size_t x = 0; x < cur.size(); ++x) {
            cur[x] = *std::max_element(next.begin() + static_cast<std::ptrdiff_t>(x * p),
                                       next.begin() + static_cast<std::ptrdiff_t>((x + 1) * p));
        }
    }

    // Forward pass: first maximizer in lexicographic permutation order.
    MdaSolution sol;
    std::size_t state = 0;
    for (int k = 0; k < stages; ++k) {
        const auto& next = value[static_cast<std::size_t>(k) + 1];
        std::size_t best = 0;
        for (std::size_t u = 1; u < p; ++u) {
            if (next[state * p + u] > next[state * p + best]) {
                best = u;
            }
        }
        sol.history.controls.push_back(perms[best]);
        state = state * p + best;
    }
    sol.value = value[static_cast<std::size_t>(stages)][state];
    return sol;
}

MdaSolution avs_solve(const MdaInstance& inst, const CostProvider& provider) {
    inst.validate();
    MdaSolution sol;
    for (int k = 0; k < inst.stages(); ++k) {
        const WeightMatrix c = provider(k, sol.history);
        if (static_cast<int>(c.rows()) != inst.m || static_cast<int>(c.cols()) != inst.m) {
            throw std::invalid_argument("avs_solve: cost provider returned a matrix of the wrong shape");
        }
        const Matching match = max_weight_perfect_matching(c);
        Permutation u(static_cast<std::size_t>(inst.m));
        for (const auto& [r, col] : match.pairs) {
            u[r] = static_cast<int>(col);
        }
        sol.history.controls.push_back(std::move(u));
    }
    sol.value = grouping_value(inst, sol.history);
    return sol;
}

CostProvider arc_value_provider(const MdaInstance& inst) {
    return [arcs = inst.arcs](int stage, const AssignmentHistory&) { return arcs.at(static_cast<std::size_t>(stage)); };
}

MdaInstance make_random_instance(std::uint64_t seed, int m, int n_layers, bool with_bonus) {
    MdaInstance inst;
    inst.m = m;
    inst.n_layers = n_layers;
    CounterRng rng(seed, 0x6d6461);
    for (int k = 0; k + 1 < n_layers; ++k) {
        WeightMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                a(i, j) = rng.uniform();
            }
        }
        inst.arcs.push_back(std::move(a));
    }
    if (with_bonus) {
        std::size_t cells = 1;
        for (int k = 0; k < n_layers; ++k) {
            cells *= static_cast<std::size_t>(m);
        }
        auto table = std::make_shared<std::vector<double>>(cells);
        for (double& b : *table) {
            b = 2.0 * rng.uniform();
        }
        inst.grouping_bonus = [table, m](std::span<const int> tuple) {
            std::size_t index = 0;
            for (int node : tuple) {
                index = index * static_cast<std::size_t>(m) + static_cast<std::size_t>(node);
            }
            return (*table)[index];
        };
    }
    inst.validate();
    return inst;
}

}  // namespace adpt
