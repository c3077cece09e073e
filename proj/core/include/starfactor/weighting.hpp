#pragma once

// Does a graph admit ANY strictly positive edge weighting making all its
// star-factors equal in weight? Enumerate factors, set up the difference
// system chi(S_i) - chi(S_1) over the lexicographic edge order, compute its
// kernel exactly, and decide whether the kernel meets the strictly positive
// orthant (Fourier-Motzkin on the kernel's parametric form; w > 0 is
// equivalent to w >= 1 there by scaling).
//
// Factor enumeration is capped; a system built from a factor subset can
// still prove infeasibility (more rows only shrink the solution set), but a
// feasible answer on truncated input proves nothing — reported as such.

#include <cstdint>
#include <optional>
#include <vector>

#include "starfactor/graph.hpp"
#include "starfactor/rational.hpp"

namespace starfactor {

struct DifferenceSystem {
    std::vector<Edge> edge_order;        // lexicographic
    std::vector<std::vector<Rat>> rows;  // chi(S_i) - chi(S_1), i = 2..k
    std::uint64_t factor_count = 0;      // factors enumerated (capped)
    bool truncated = false;
};

// Throws std::invalid_argument when g has no star-factor.
DifferenceSystem difference_system(const Graph& g, std::uint64_t factor_cap = 100000);

// Rank of the row space (exact elimination).
int rank(const DifferenceSystem& system);

struct WeightingOptions {
    std::uint64_t factor_cap = 100000;
    std::size_t fm_row_cap = 200000;  // Fourier-Motzkin intermediate rows
};

struct WeightingSolution {
    enum class Status {
        Feasible,                 // weights below are a certificate
        Infeasible,               // no positive uniform weighting exists
        NoFactor,                 // no star-factor, question is moot
        TruncatedInfeasibleOnly,  // enumeration was cut short and the
                                  // truncated system is feasible: no verdict
    };

    Status status = Status::NoFactor;
    bool feasible = false;
    // Positive integers (stored as rationals), lexicographic edge order.
    std::optional<std::vector<Rat>> weights;
    int kernel_dimension = 0;
    std::uint64_t factor_count = 0;
    bool truncated = false;
};

// Throws std::runtime_error if Fourier-Motzkin exceeds fm_row_cap.
WeightingSolution solve_uniform_weighting(const Graph& g, WeightingOptions options = {});

}  // namespace starfactor
