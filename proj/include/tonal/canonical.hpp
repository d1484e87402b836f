#pragma once

#include <optional>
#include <vector>

#include "tonal/graph.hpp"

namespace tonal {

// Host order n and red-clique order r with r(r-1)/2 = n(n-1)/4 exactly,
// i.e. the red clique carries half of all edges. Equivalently the odd
// integers x = 2r-1, y = 2n-1 solve y^2 - 2x^2 = -1.
struct CanonicalSize {
    long long n = 0;
    long long r = 0;
    long long x = 0;
    long long y = 0;
    friend bool operator==(const CanonicalSize&, const CanonicalSize&) = default;
};

// All canonical sizes with n <= limit, ascending. Generated by the Pell
// recurrence (y,x) -> (3y+4x, 2y+3x) from (7,5); the degenerate solution
// n = 1 is excluded. limit < 4 yields an empty list.
std::vector<CanonicalSize> canonical_sizes(long long limit);

// The canonical size with this exact host order, if one exists.
std::optional<CanonicalSize> canonical_size_for(long long n);

// K_n with the clique A = {0,...,r-1} red and every other edge blue, so
// |R| = |B| = n(n-1)/4. Throws std::invalid_argument if size violates its
// invariants.
ColouredHost canonical_colouring(const CanonicalSize& size);

struct ObstructionReport {
    bool rbr_p4_found = false;     // some path a-b-c-d coloured red, blue, red
    bool k3_two_red_found = false; // some triangle with exactly two red edges
};

// Exhaustive scan of the host for both obstruction patterns. Bit-parallel
// over host rows and OpenMP-parallel over vertices.
ObstructionReport verify_obstructions(const ColouredHost& host);

}  // namespace tonal
