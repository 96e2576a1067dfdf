#pragma once

#include <string>
#include <vector>

namespace flagtoric {

// The tuple (n_1,...,n_l, n) of a partial flag manifold. Root object for
// everything else in the library.
struct FlagShape {
    std::vector<int> steps; // n_1 < ... < n_l
    int ambient = 0;        // n

    int l() const { return static_cast<int>(steps.size()); }
    // n_j with n_0 = 0, n_{l+1} = n.
    int n_at(int j) const;
    // Block sizes k_j = n_j - n_{j-1}, j = 1..l+1.
    std::vector<int> blocks() const;
    // sum_i k_i (n - n_i); equals the number of cells of the ladder diagram.
    long dimension() const;
    // F(n - n_l, ..., n - n_1, n).
    FlagShape dual() const;
    bool self_dual() const;
    // "F(1,2,4)" for display.
    std::string name() const;
    // "1,2/4" round-trips through parse_shape.
    std::string spec_string() const;

    auto operator<=>(const FlagShape&) const = default;
};

FlagShape make_shape(std::vector<int> steps, int ambient);

// Grammar: comma-separated steps, "/", ambient. E.g. "1,2,4/5".
FlagShape parse_shape(const std::string& text);

// All valid shapes with ambient exactly n, deterministic order.
std::vector<FlagShape> all_shapes(int n);

} // namespace flagtoric
