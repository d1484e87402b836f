#pragma once

#include <cstdint>
#include <vector>

#include "tonal/embed.hpp"
#include "tonal/graph.hpp"

namespace tonal {

// Closed-form omnitonal threshold for stars K_{1,k}:
//   floor((k-1)n/2)        for k <= 3,
//   (k-2)n - k(k-3)/2 - 1  for k >= 4.
// Requires n >= 4k and k >= 1; throws std::domain_error otherwise.
long long ot_star_formula(long long n, long long k);

// Class-level threshold bound M = (p_1+...+p_q+q-2)n for a star forest,
// valid for n >= 4(p_1+...+p_q+q-1); throws std::domain_error below that.
// part_sizes must be non-increasing and positive.
long long tot_star_forest_bound(long long n, const std::vector<int>& part_sizes);

// Per-n extremal quantity: the largest min{|R|,|B|} over all 2-colourings of
// K_n that fail coverage, with a witness attaining it. saturated means the
// value equals floor(n(n-1)/4): even perfectly balanced colourings fail, so
// no threshold separates good from bad at this n.
struct ExtremalResult {
    long long value = 0;
    bool saturated = false;
    CoverageLevel level = CoverageLevel::Tone;
    ColouredHost witness;
    uint64_t witness_mask = 0;      // enumeration encoding of the witness
    uint64_t hosts_scanned = 0;
};

struct SearchOptions {
    bool force = false;   // lift the n(n-1)/2 <= 30 enumeration guard
    bool prune = true;    // fix edge {0,1} red (complement symmetry halves the space)
    int workers = 0;      // parallelism hint; 0 = library default; never affects results
};

// Exhaustive enumeration of host colourings. The enumeration is a binary
// counter over the lexicographically sorted edge list: edge i occupies bit
// E-1-i of the counter (edge 0 is the most significant digit) and a set bit
// means red. Workers partition the space on a fixed prefix of edge colours;
// the reported witness is the first failing colouring, in counter order,
// attaining the maximum, independent of the worker count.
ExtremalResult ot_exact(int n, const Graph& g, const SearchOptions& opts = {});
ExtremalResult tot_exact(int n, const Graph& g, const SearchOptions& opts = {});

}  // namespace tonal
