#pragma once

#include <optional>
#include <vector>

#include "tonal/graph.hpp"
#include "tonal/patterns.hpp"

namespace tonal {

// Injective vertex map certifying a colour-exact copy: pattern vertex i
// sits at host vertex map[i].
struct Embedding {
    std::vector<int> map;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

bool validate_embedding(const ColouredHost& host, const PatternColouring& pattern,
                        const Embedding& emb);

// Colour-exact copy of the pattern in the host, or absent when none exists.
// Backtracking over pattern vertices in decreasing-degree order (ties broken
// towards vertices adjacent to already-placed ones, then by index), pruning
// candidates by host red/blue degree against the pattern vertex's needs.
std::optional<Embedding> find_embedding(const ColouredHost& host,
                                        const PatternColouring& pattern);

enum class CoverageLevel { Tone, Class };

struct CoverageTarget {
    Tone tone;
    int class_index = -1;  // index into enumerate_pattern_classes(G); -1 at tone level
    PatternColouring representative;
    std::optional<Embedding> embedding;
};

struct CoverageReport {
    CoverageLevel level = CoverageLevel::Tone;
    std::vector<CoverageTarget> targets;

    bool complete() const {
        for (const auto& t : targets)
            if (!t.embedding) return false;
        return true;
    }
    std::vector<Tone> missing_tones() const {
        std::vector<Tone> out;
        for (const auto& t : targets)
            if (!t.embedding) out.push_back(t.tone);
        return out;
    }
    std::vector<int> missing_class_indices() const {
        std::vector<int> out;
        for (const auto& t : targets)
            if (!t.embedding) out.push_back(t.class_index);
        return out;
    }
};

// One target per tone (r,b), r = e(G)..0: does SOME colouring of G with that
// tone embed? Class representatives of the tone are tried in class order.
// Requires e(G) >= 1 and |V(G)| <= host order.
CoverageReport tone_coverage(const ColouredHost& host, const Graph& g);

// One target per pattern class of G, testing its representative.
CoverageReport class_coverage(const ColouredHost& host, const Graph& g);

// Constructive embedding of a coloured star forest, smallest star first:
// pick a centre whose residual red/blue degrees cover the star's needs
// (maximizing the smaller residual degree, ties to the lowest index), hand
// red leaves the lowest-indexed residual red neighbours, then blue leaves
// likewise, delete the used vertices and recurse. Preconditions, with
// s = p_1+...+p_q over the q edge-carrying components:
//   host.n >= |V(target)|,  host.n >= 4(s+q-1),  min{|R|,|B|} > (s+q-2)*host.n.
// Violations throw std::domain_error naming the failed inequality. Failure
// under valid preconditions throws std::logic_error: the construction is
// guaranteed to succeed there.
Embedding greedy_star_forest_embed(const ColouredHost& host, const PatternColouring& target);

}  // namespace tonal
