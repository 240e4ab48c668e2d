#pragma once

#include <vector>

namespace trispec {

/// A +-1 walk on the positive integers starting at `start`.
struct Walk {
    int start = 1;
    std::vector<signed char> signs;

    [[nodiscard]] int length() const { return static_cast<int>(signs.size()); }
    /// delta_1..delta_L, the displacements after each step.
    [[nodiscard]] std::vector<int> partial_sums() const;
    /// j_0..j_L.
    [[nodiscard]] std::vector<int> vertices() const;
    /// Lower endpoints of the up-steps; each contributes one factor p_i = b_i c_i.
    [[nodiscard]] std::vector<int> up_step_origins() const;
};

/// Walks from n of the given length that return to n only at the end and
/// never leave {1, 2, ...}. Odd lengths give no walks.
std::vector<Walk> first_return_walks(int n, int length);

/// Closed walks j -> j of length k on {1, 2, ...} whose vertex set contains an
/// index <= n and an index >= n + 1, i.e. the walks whose rational function
/// has poles on both sides of the line Re lambda = n^2 + n. Only starts with
/// |j - n| <= k/2 are generated, since no other start can cross and return.
std::vector<Walk> crossing_walks(int n, int k);

} // namespace trispec
