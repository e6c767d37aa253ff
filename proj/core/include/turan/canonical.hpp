#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Exact canonicalization regime. Larger graphs are cached by raw key only.
inline constexpr int kCanonicalMaxVertices = 16;

using CanonicalKey = std::string;  // graph6 bytes of the canonical relabeling

struct CanonicalResult {
    SmallGraph graph;           // the input, canonically relabeled
    CanonicalKey key;
    std::vector<int> labeling;  // input vertex -> canonical position
};

// Equitable-refinement plus backtracking over automorphism-pruned labelings.
// Two graphs on <= 16 vertices get equal keys iff they are isomorphic.
CanonicalResult canonical_form(const SmallGraph& g);
CanonicalKey canonical_key(const SmallGraph& g);
bool are_isomorphic(const SmallGraph& a, const SmallGraph& b);

}  // namespace turan
