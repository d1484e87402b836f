#pragma once

#include <optional>
#include <vector>

#include "tonal/canonical.hpp"
#include "tonal/embed.hpp"
#include "tonal/extremal.hpp"
#include "tonal/graph.hpp"

namespace tonal {

// Serial reference implementations. Each mirrors a production kernel with a
// deliberately naive, independent algorithm; they are kept for tests and the
// benchmark, never called from the production paths.

// Colour-exact copy by plain enumeration of injective maps in lexicographic
// order. Independent of the backtracking engine.
std::optional<Embedding> naive_find_embedding(const ColouredHost& host,
                                              const PatternColouring& pattern);

// Obstruction scan by direct loops: O(n^3) over triangles and O(n^4) over
// ordered quadruples.
ObstructionReport verify_obstructions_reference(const ColouredHost& host);

// All (n, r) with 2 <= r < n <= limit and r(r-1)/2 = n(n-1)/4, by scanning
// every pair. The oracle for the Pell recurrence.
std::vector<CanonicalSize> canonical_sizes_reference(long long limit);

// Unpruned serial enumeration of all 2^(n(n-1)/2) colourings, deciding
// coverage with naive_find_embedding on every class representative. Uses the
// same counter encoding as the production search.
ExtremalResult exhaustive_reference(int n, const Graph& g, CoverageLevel level);

}  // namespace tonal
