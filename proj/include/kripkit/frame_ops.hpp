#pragma once

#include <vector>

#include "kripkit/frame.hpp"

// Relational and structural queries on frames: closures of the modality
// union, pretransitivity, clusters, skeleton, height, restrictions.

namespace kripkit {

// R_F: union of all modality relations.
Relation union_relation(const Frame& f);

// R_F^{≤m}.
Relation closure_leq(const Frame& f, int m);

// Reflexive transitive closure R_F^*. Equals closure_leq(f, n-1).
Relation star(const Frame& f);

// Least m with R_F^{≤m} = R_F^*. Bounded by n-1.
int pretransitivity_index(const Frame& f);

// Classes of ~_F = R_F^* ∩ (R_F^*)^{-1}.
Partition clusters(const Frame& f);

// Quotient of (X, R_F^*) by ~_F; a unimodal partial order over label "1".
Frame skeleton(const Frame& f);

// Longest chain in the skeleton.
int height(const Frame& f);

// Restriction to Y, worlds renumbered 0..|Y|-1 in ascending original order.
Frame restrict(const Frame& f, const WorldSet& y);
Frame restrict(const Frame& f, const std::vector<int>& y);

struct GeneratedSubframe {
    Frame frame;
    std::vector<int> worlds;  // original indices, ascending; records provenance
};

// Restriction to {v : w R_F^* v}.
GeneratedSubframe generated_subframe(const Frame& f, int w);

bool is_point_generated(const Frame& f);  // some world reaches all via R_F^*

// Size of the largest ~_F class.
int max_cluster_size(const Frame& f);

bool is_reflexive(const Relation& r);
bool is_transitive(const Relation& r);
bool is_symmetric(const Relation& r);
bool is_preorder(const Relation& r);
bool is_equivalence(const Relation& r);
bool is_partial_order(const Relation& r);

}  // namespace kripkit
