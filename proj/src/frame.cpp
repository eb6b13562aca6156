#include "kripkit/frame.hpp"

#include <algorithm>
#include <set>

#include "kripkit/kernels/bitspan.hpp"

namespace kripkit {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + kWordBits - 1) / kWordBits; }
}  // namespace

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error("alphabet must be non-empty");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw Error("alphabet labels must be non-empty strings");
        if (!seen.insert(l).second) throw Error("duplicate modality label: " + l);
    }
}

bool Alphabet::contains(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int Alphabet::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error("unknown modality label: " + label);
    return static_cast<int>(it - labels_.begin());
}

bool Alphabet::disjoint_from(const Alphabet& other) const {
    for (const auto& l : labels_)
        if (other.contains(l)) return false;
    return true;
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
    if (!a.disjoint_from(b)) throw Error("alphabets overlap");
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    return Alphabet(labels);
}

WorldSet::WorldSet(int n, bool filled) : n_(n), bits_(words_for(n), 0) {
    if (n < 0) throw Error("world set universe must be non-negative");
    if (filled) {
        for (auto& w : bits_) w = ~std::uint64_t{0};
        clear_tail();
    }
}

void WorldSet::clear_tail() {
    const int rem = n_ % static_cast<int>(kWordBits);
    if (rem != 0 && !bits_.empty()) bits_.back() &= (std::uint64_t{1} << rem) - 1;
}

void WorldSet::add(int w) { bits_[static_cast<std::size_t>(w) / kWordBits] |= std::uint64_t{1} << (w % kWordBits); }

void WorldSet::remove(int w) {
    bits_[static_cast<std::size_t>(w) / kWordBits] &= ~(std::uint64_t{1} << (w % kWordBits));
}

bool WorldSet::contains(int w) const {
    return (bits_[static_cast<std::size_t>(w) / kWordBits] >> (w % kWordBits)) & 1;
}

int WorldSet::count() const {
    return static_cast<int>(kern::ops().popcount(bits_.data(), bits_.size()));
}

bool WorldSet::empty() const { return kern::ops().is_zero(bits_.data(), bits_.size()); }

bool WorldSet::operator==(const WorldSet& other) const {
    return n_ == other.n_ && kern::ops().equals(bits_.data(), other.bits_.data(), bits_.size());
}

WorldSet& WorldSet::unite(const WorldSet& other) {
    if (n_ != other.n_) throw Error("world set universe mismatch");
    kern::ops().or_into(bits_.data(), other.bits_.data(), bits_.size());
    return *this;
}

WorldSet& WorldSet::intersect(const WorldSet& other) {
    if (n_ != other.n_) throw Error("world set universe mismatch");
    kern::ops().and_into(bits_.data(), other.bits_.data(), bits_.size());
    return *this;
}

WorldSet WorldSet::complement() const {
    WorldSet out(n_);
    kern::ops().not_into(out.bits_.data(), bits_.data(), bits_.size());
    out.clear_tail();
    return out;
}

bool WorldSet::intersects(const WorldSet& other) const {
    if (n_ != other.n_) throw Error("world set universe mismatch");
    return kern::ops().and_any(bits_.data(), other.bits_.data(), bits_.size());
}

std::vector<int> WorldSet::to_vector() const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (contains(w)) out.push_back(w);
    return out;
}

WorldSet WorldSet::of(int n, std::initializer_list<int> worlds) {
    WorldSet s(n);
    for (int w : worlds) s.add(w);
    return s;
}

WorldSet WorldSet::from_vector(int n, const std::vector<int>& worlds) {
    WorldSet s(n);
    for (int w : worlds) {
        if (w < 0 || w >= n) throw Error("world index out of range");
        s.add(w);
    }
    return s;
}

Relation::Relation(int n) : n_(n), wpr_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_for(n), 0) {
    if (n < 1) throw Error("relation needs at least one world");
}

Relation::Relation(int n, const EdgeList& edges) : Relation(n) {
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw Error("edge endpoint out of range");
        add(a, b);
    }
}

Relation Relation::diagonal(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.add(i, i);
    return r;
}

Relation Relation::full(int n) {
    Relation r(n);
    for (int a = 0; a < n; ++a) {
        for (std::size_t w = 0; w < r.wpr_; ++w) r.row(a)[w] = ~std::uint64_t{0};
        const int rem = n % static_cast<int>(kWordBits);
        if (rem != 0) r.row(a)[r.wpr_ - 1] &= (std::uint64_t{1} << rem) - 1;
    }
    return r;
}

void Relation::add(int a, int b) {
    row(a)[static_cast<std::size_t>(b) / kWordBits] |= std::uint64_t{1} << (b % kWordBits);
}

bool Relation::at(int a, int b) const {
    return (row(a)[static_cast<std::size_t>(b) / kWordBits] >> (b % kWordBits)) & 1;
}

bool Relation::operator==(const Relation& other) const {
    return n_ == other.n_ && kern::ops().equals(bits_.data(), other.bits_.data(), bits_.size());
}

Relation& Relation::unite(const Relation& other) {
    if (n_ != other.n_) throw Error("relation world count mismatch");
    kern::ops().or_into(bits_.data(), other.bits_.data(), bits_.size());
    return *this;
}

bool Relation::subset_of(const Relation& other) const {
    if (n_ != other.n_) throw Error("relation world count mismatch");
    // a ⊆ b iff a & ~b == 0, checked row-wise to reuse the span kernels
    std::vector<std::uint64_t> tmp(wpr_);
    for (int a = 0; a < n_; ++a) {
        kern::ops().not_into(tmp.data(), other.row(a), wpr_);
        if (kern::ops().and_any(row(a), tmp.data(), wpr_)) return false;
    }
    return true;
}

Relation Relation::transpose() const {
    Relation out(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (at(a, b)) out.add(b, a);
    return out;
}

std::size_t Relation::edge_count() const {
    return kern::ops().popcount(bits_.data(), bits_.size());
}

EdgeList Relation::edges() const {
    EdgeList out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (at(a, b)) out.emplace_back(a, b);
    return out;
}

WorldSet Relation::successors(int a) const {
    WorldSet s(n_);
    kern::ops().or_into(s.words(), row(a), wpr_);
    return s;
}

WorldSet Relation::preimage(const WorldSet& targets) const {
    if (targets.universe() != n_) throw Error("world set universe mismatch");
    WorldSet s(n_);
    for (int a = 0; a < n_; ++a)
        if (kern::ops().and_any(row(a), targets.words(), wpr_)) s.add(a);
    return s;
}

Relation compose(const Relation& r, const Relation& s) {
    if (r.worlds() != s.worlds()) throw Error("compose: relation world count mismatch");
    const int n = r.worlds();
    Relation out(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (r.at(a, b)) kern::ops().or_into(out.row(a), s.row(b), out.words_per_row());
    }
    return out;
}

Relation closure_leq(const Relation& r, int m) {
    if (m < 0) throw Error("closure exponent must be non-negative");
    // R^{≤m} = (R ∪ Δ)^m
    Relation step = Relation::diagonal(r.worlds());
    step.unite(r);
    Relation acc = Relation::diagonal(r.worlds());
    for (int i = 0; i < m; ++i) {
        Relation next = compose(acc, step);
        if (next == acc) break;  // stabilized early
        acc = std::move(next);
    }
    return acc;
}

Relation star(const Relation& r) {
    // Warshall over R ∪ Δ, one row-OR per reachable pair
    const int n = r.worlds();
    Relation m = Relation::diagonal(n);
    m.unite(r);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m.at(i, k)) kern::ops().or_into(m.row(i), m.row(k), m.words_per_row());
    return m;
}

Frame::Frame(int n, Alphabet alphabet, std::vector<EdgeList> edges_per_label)
    : n_(n), alphabet_(std::move(alphabet)), edges_(std::move(edges_per_label)) {
    if (n < 1) throw Error("frames are non-empty: need at least one world");
    if (static_cast<int>(edges_.size()) != alphabet_.size())
        throw Error("frame needs exactly one relation per modality label");
    for (auto& list : edges_) {
        for (const auto& [a, b] : list)
            if (a < 0 || a >= n || b < 0 || b >= n) throw Error("edge endpoint out of range");
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

const EdgeList& Frame::edges(int label_index) const {
    return edges_.at(static_cast<std::size_t>(label_index));
}

const EdgeList& Frame::edges(const std::string& label) const {
    return edges(alphabet_.index_of(label));
}

Relation Frame::relation(int label_index) const {
    return Relation(n_, edges(label_index));
}

Relation Frame::relation(const std::string& label) const {
    return relation(alphabet_.index_of(label));
}

bool Frame::operator==(const Frame& other) const {
    return n_ == other.n_ && alphabet_ == other.alphabet_ && edges_ == other.edges_;
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(static_cast<std::size_t>(n), -1) {
    if (n < 1) throw Error("partition universe must be non-empty");
    for (auto& b : blocks_) {
        if (b.empty()) throw Error("partition blocks must be non-empty");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (int w : blocks_[i]) {
            if (w < 0 || w >= n) throw Error("partition world out of range");
            if (block_of_[static_cast<std::size_t>(w)] != -1)
                throw Error("partition blocks are not disjoint");
            block_of_[static_cast<std::size_t>(w)] = static_cast<int>(i);
        }
    }
    for (int w = 0; w < n; ++w)
        if (block_of_[static_cast<std::size_t>(w)] == -1)
            throw Error("partition does not cover all worlds");
}

Partition Partition::trivial(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) all[static_cast<std::size_t>(w)] = w;
    return Partition(n, {all});
}

Partition Partition::discrete(int n) {
    std::vector<std::vector<int>> blocks;
    for (int w = 0; w < n; ++w) blocks.push_back({w});
    return Partition(n, std::move(blocks));
}

Partition Partition::from_block_ids(const std::vector<int>& block_of) {
    if (block_of.empty()) throw Error("partition universe must be non-empty");
    int max_id = -1;
    for (int id : block_of) max_id = std::max(max_id, id);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_id + 1));
    for (std::size_t w = 0; w < block_of.size(); ++w) {
        if (block_of[w] < 0) throw Error("negative block id");
        blocks[static_cast<std::size_t>(block_of[w])].push_back(static_cast<int>(w));
    }
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    return Partition(static_cast<int>(block_of.size()), std::move(blocks));
}

bool Partition::refines(const Partition& coarser) const {
    if (n_ != coarser.n_) return false;
    for (const auto& b : blocks_) {
        const int target = coarser.block_of(b.front());
        for (int w : b)
            if (coarser.block_of(w) != target) return false;
    }
    return true;
}

bool Partition::operator==(const Partition& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
}

}  // namespace kripkit
