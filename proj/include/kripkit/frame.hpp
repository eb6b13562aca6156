#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kripkit/error.hpp"

namespace kripkit {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

// Ordered list of distinct modality names. Order is significant: it is the
// canonical iteration order everywhere (checks, reports, file formats).
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool contains(const std::string& label) const;
    int index_of(const std::string& label) const;  // throws on unknown label
    bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }
    bool disjoint_from(const Alphabet& other) const;

private:
    std::vector<std::string> labels_;
};

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);  // requires disjoint

// A set of worlds 0..n-1 backed by a word array.
class WorldSet {
public:
    WorldSet() = default;
    explicit WorldSet(int n, bool filled = false);

    int universe() const { return n_; }
    void add(int w);
    void remove(int w);
    bool contains(int w) const;
    int count() const;
    bool empty() const;
    bool operator==(const WorldSet& other) const;

    WorldSet& unite(const WorldSet& other);
    WorldSet& intersect(const WorldSet& other);
    WorldSet complement() const;
    bool intersects(const WorldSet& other) const;

    std::vector<int> to_vector() const;  // ascending
    static WorldSet of(int n, std::initializer_list<int> worlds);
    static WorldSet from_vector(int n, const std::vector<int>& worlds);

    std::uint64_t* words() { return bits_.data(); }
    const std::uint64_t* words() const { return bits_.data(); }
    std::size_t word_count() const { return bits_.size(); }
    void clear_tail();  // zero the bits at positions >= n

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Binary relation on 0..n-1 as a dense adjacency bit-matrix. This is the
// representation behind all relational algebra (composition, closures);
// frames keep sorted edge lists as the authoritative form and materialize
// a Relation on demand.
class Relation {
public:
    Relation() = default;
    explicit Relation(int n);
    Relation(int n, const EdgeList& edges);

    static Relation diagonal(int n);
    static Relation full(int n);

    int worlds() const { return n_; }
    std::size_t words_per_row() const { return wpr_; }

    void add(int a, int b);
    bool at(int a, int b) const;

    std::uint64_t* row(int a) { return bits_.data() + static_cast<std::size_t>(a) * wpr_; }
    const std::uint64_t* row(int a) const {
        return bits_.data() + static_cast<std::size_t>(a) * wpr_;
    }

    bool operator==(const Relation& other) const;
    Relation& unite(const Relation& other);
    bool subset_of(const Relation& other) const;
    Relation transpose() const;
    std::size_t edge_count() const;
    EdgeList edges() const;  // sorted

    WorldSet successors(int a) const;
    // Worlds with at least one successor inside `targets`.
    WorldSet preimage(const WorldSet& targets) const;

private:
    int n_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

Relation compose(const Relation& r, const Relation& s);  // a (r∘s) c iff ∃b: a r b, b s c
Relation closure_leq(const Relation& r, int m);           // ⋃_{i≤m} r^i, r^0 = diagonal
Relation star(const Relation& r);                         // reflexive transitive closure

// Finite multi-modal Kripke frame: worlds 0..n-1, one relation per modality
// label. Immutable after construction; relations are stored as sorted edge
// lists and materialized as bit-matrices on demand.
class Frame {
public:
    Frame(int n, Alphabet alphabet, std::vector<EdgeList> edges_per_label);

    int worlds() const { return n_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int modalities() const { return alphabet_.size(); }

    const EdgeList& edges(int label_index) const;
    const EdgeList& edges(const std::string& label) const;

    Relation relation(int label_index) const;
    Relation relation(const std::string& label) const;

    bool operator==(const Frame& other) const;

private:
    int n_ = 0;
    Alphabet alphabet_;
    std::vector<EdgeList> edges_;
};

// Disjoint cover of 0..n-1 by non-empty blocks. Canonical form: each block
// ascending, blocks ordered by minimum element.
class Partition {
public:
    Partition() = default;
    Partition(int n, std::vector<std::vector<int>> blocks);
    static Partition trivial(int n);     // one block
    static Partition discrete(int n);    // all singletons
    static Partition from_block_ids(const std::vector<int>& block_of);

    int universe() const { return n_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
    int block_of(int w) const { return block_of_.at(static_cast<std::size_t>(w)); }

    bool refines(const Partition& coarser) const;
    bool operator==(const Partition& other) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

}  // namespace kripkit
