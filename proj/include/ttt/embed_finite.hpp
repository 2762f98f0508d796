#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttt/tree.hpp"

namespace ttt {

// A rooted topological-minor embedding of T into S: an injective map
// that preserves the tree order and sends siblings into branches that
// meet exactly at the parent's image. Internal disjointness of the
// subdivision paths reduces to that sibling-meet condition: two paths
// out of distinct children of x can only share a vertex v > phi(x) if
// v lies below both images, i.e. below their meet.
struct EmbeddingWitness {
    std::vector<int> map;  // T vertex -> S vertex
};

// Decides T <= S (rooted, image root anywhere in S) by dynamic
// programming: anywhere[t][s] = "subtree at t embeds into subtree at s",
// at_root[t][s] = "... with t mapped to s exactly"; at_root is a
// bipartite matching of t's children against s's children over
// anywhere[][]. Deterministic witness: first fit in canonical order.
std::optional<EmbeddingWitness> embed_rooted(const FiniteTree& T, const FiniteTree& S);
bool embed_rooted_decide(const FiniteTree& T, const FiniteTree& S);

// Exhaustive reference decision. Enumerates injective, order-preserving
// maps and checks the sibling-meet condition; independent of the DP.
// Budget: |T| <= 7 and |S| <= 9; otherwise refuses with nullopt.
std::optional<bool> embed_rooted_oracle(const FiniteTree& T, const FiniteTree& S);

// Unrooted relation: some rooting of T and S admits a rooted embedding.
bool embed_unrooted(const FiniteTree& T, const FiniteTree& S);

// AHU-style bottom-up code; equal codes iff rooted-isomorphic.
std::string canonical_code(const FiniteTree& T);

// Independent check of the three witness invariants.
bool validate_witness(const FiniteTree& T, const FiniteTree& S, const EmbeddingWitness& w);

// The same underlying tree re-rooted at r (BFS order from r).
FiniteTree reroot(const FiniteTree& T, int r);

}  // namespace ttt
