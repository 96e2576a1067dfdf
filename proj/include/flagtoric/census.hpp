#pragma once

#include <string>
#include <vector>

#include "flagtoric/shape.hpp"

namespace flagtoric {

using Splitting = std::vector<std::vector<int>>; // multiset of l-vectors, canonical order

// Component i is n_{i+1} - n_{i-1} = k_i + k_{i+1}.
std::vector<int> anticanonical(const FlagShape& shape);

struct FeasibleFlags {
    std::vector<FlagShape> kept;                 // canonical representatives, table order
    std::vector<FlagShape> excluded_projective;  // F(1,n) and F(n-1,n)
    std::vector<FlagShape> excluded_hypersurface; // the F(1,n-1,n) family
};

// Shapes with n <= n_max admitting a complete-intersection Calabi-Yau 3-fold,
// deduplicated under the duality isomorphism.
FeasibleFlags feasible_flags(int n_max);

struct CensusEntry {
    FlagShape shape;
    long dim = 0;
    std::vector<int> minus_k;
    long required_factors = 0; // dim - 3
    std::vector<Splitting> splittings; // exact enumeration, canonical order
    FlagShape dual_shape;
    bool self_dual = false;
};

// All multisets of exactly dim-3 nonzero nonnegative l-vectors summing to
// -K_F; for self-dual shapes with modulo_duality set, one representative per
// reversal orbit. Throws NotFeasible when dim <= 3.
CensusEntry enumerate_splittings(const FlagShape& shape, bool modulo_duality);

struct CensusRow {
    FlagShape shape;
    long dim = 0;
    std::vector<int> minus_k;
    std::vector<Splitting> published;  // the census listing being reproduced
    std::vector<Splitting> extra;      // enumerated but absent from the listing
    std::vector<Splitting> missing;    // listed but not enumerated (should be empty)
};

// The reference census of CY complete-intersection 3-folds in partial flag
// manifolds (21 rows, n = 4..7).
const std::vector<CensusRow>& reference_census();

// Reproduction of the reference census for n <= n_max, cross-validated
// against enumerate_splittings: every published splitting must be found by
// the enumeration; enumerated-only splittings are reported in `extra`.
std::vector<CensusRow> census_table(int n_max, bool modulo_duality);

std::string splitting_string(const Splitting& s);

} // namespace flagtoric
