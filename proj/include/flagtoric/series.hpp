#pragma once

#include <map>
#include <optional>
#include <vector>

#include "flagtoric/graph.hpp"

namespace flagtoric {

struct SeriesIndex {
    std::vector<long> roof; // m_1..m_l
    std::vector<long> box;  // m_b per box id
};

struct Coefficient {
    Rat a;  // exact rational
    Int b;  // integer numerator: product of binomials over the dual graph
};

// d_e = m_{h(w)} - m_{t(w)} per edge; nullopt when some d_e < 0.
std::optional<std::vector<long>> edge_degrees(const LadderGraph& g, const SeriesIndex& idx);

// B = prod binomial(m_{h(w)}, m_{t(w)}), A = B / prod (m_i!)^{k_i+k_{i+1}}.
Coefficient coefficient_closed_form(const LadderGraph& g, const SeriesIndex& idx);

// A = prod_e 1/d_e! over the edge degrees (0 when some d_e < 0). Must agree
// with the closed form.
Coefficient coefficient_degree_product(const LadderGraph& g, const SeriesIndex& idx);

// Literal truncated expansion of the integrand: exponential factors times the
// geometric roof/box series, constant y-coefficient at the given multidegree.
// Desk scale only; throws TruncationTooSmall if the cap is insufficient.
Rat constant_term_oracle(const LadderGraph& g, const SeriesIndex& idx, long cap);

// Box indices with all d_e >= 0 for the given roof degrees (finite by the
// monotone chain from every box to a roof; asserted during construction).
std::vector<std::vector<long>> admissible_box_indices(const LadderGraph& g,
                                                      const std::vector<long>& roof);

// Coefficients of q^m for all roof multidegrees with total <= max_deg,
// box degrees summed out (the q~ = 1 specialization).
std::map<std::vector<long>, Rat> phi_f(const LadderGraph& g, long max_deg);

// b_m = prod_j (sum_i d_j^(i) m_i)! a_m.
std::map<std::vector<long>, Rat> phi_x(const LadderGraph& g,
                                       const std::vector<std::vector<long>>& degrees,
                                       long max_deg);

// Constant-term period of the mirror family: geometric roof/box factors times
// the nef-partition factors 1/E_j, specialized at q~ = 1. Must equal phi_x.
Rat period_oracle(const LadderGraph& g, const std::vector<std::vector<long>>& degrees,
                  const std::vector<long>& roof_degs, long cap);

} // namespace flagtoric
