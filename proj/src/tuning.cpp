#include "kripkit/tuning.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "kripkit/constructions.hpp"

namespace kripkit {

std::string TunedVerdict::describe() const {
    if (ok) return "tuned";
    return "not <" + label + ">-tuned: block " + std::to_string(block_u) +
           " reaches block " + std::to_string(block_v) + " but world " +
           std::to_string(world) + " does not";
}

TunedVerdict is_tuned(const Frame& f, const Partition& p) {
    if (p.universe() != f.worlds()) throw Error("partition does not cover the frame");
    const int n = f.worlds();
    // Stamped marking keeps each splitter pass proportional to the edges
    // that actually enter it, so the check stays linear-ish even with 10^5
    // blocks.
    std::vector<int> mark_stamp(static_cast<std::size_t>(n), -1);
    std::vector<int> hit_stamp(static_cast<std::size_t>(p.size()), -1);
    std::vector<int> hits(static_cast<std::size_t>(p.size()), 0);
    std::vector<int> touched_blocks;
    int stamp = 0;
    for (int m = 0; m < f.modalities(); ++m) {
        std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
        for (const auto& [a, b] : f.edges(m)) rev[static_cast<std::size_t>(b)].push_back(a);
        for (int v = 0; v < p.size(); ++v) {
            ++stamp;
            touched_blocks.clear();
            for (int world : p.block(v))
                for (int pred : rev[static_cast<std::size_t>(world)]) {
                    if (mark_stamp[static_cast<std::size_t>(pred)] == stamp) continue;
                    mark_stamp[static_cast<std::size_t>(pred)] = stamp;
                    const int b = p.block_of(pred);
                    if (hit_stamp[static_cast<std::size_t>(b)] != stamp) {
                        hit_stamp[static_cast<std::size_t>(b)] = stamp;
                        hits[static_cast<std::size_t>(b)] = 0;
                        touched_blocks.push_back(b);
                    }
                    ++hits[static_cast<std::size_t>(b)];
                }
            for (int u : touched_blocks) {
                const auto& block = p.block(u);
                if (hits[static_cast<std::size_t>(u)] == static_cast<int>(block.size())) continue;
                TunedVerdict verdict;
                verdict.label = f.alphabet().label(m);
                verdict.block_u = u;
                verdict.block_v = v;
                for (int world : block)
                    if (mark_stamp[static_cast<std::size_t>(world)] != stamp) {
                        verdict.world = world;
                        break;
                    }
                return verdict;
            }
        }
    }
    TunedVerdict verdict;
    verdict.ok = true;
    return verdict;
}

namespace {

// Mutable block store for the worklist engine. Blocks keep stable ids; a
// split keeps the unmarked part under the old id and appends the marked part
// as a fresh block.
struct BlockStore {
    std::vector<std::vector<int>> members;
    std::vector<int> block_of;

    explicit BlockStore(const Partition& p)
        : members(p.blocks()), block_of(static_cast<std::size_t>(p.universe())) {
        for (int w = 0; w < p.universe(); ++w) block_of[static_cast<std::size_t>(w)] = p.block_of(w);
    }
};

}  // namespace

RefinementResult coarsest_tuned_refinement(const Frame& f, const Partition& p) {
    if (p.universe() != f.worlds()) throw Error("partition does not cover the frame");
    const int n = f.worlds();
    const int mods = f.modalities();

    std::vector<std::vector<std::vector<int>>> rev(static_cast<std::size_t>(mods));
    for (int m = 0; m < mods; ++m) {
        rev[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(n), {});
        for (const auto& [a, b] : f.edges(m))
            rev[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)].push_back(a);
    }

    BlockStore store(p);
    TuningReport report;
    report.input_size = p.size();

    // FIFO worklist of (modality, splitter block id); in_queue suppresses
    // duplicates. Stability of a pair (U, V) survives splits of U, so only
    // changed splitters need re-queueing.
    std::deque<std::pair<int, int>> queue;
    std::vector<std::vector<char>> in_queue(static_cast<std::size_t>(mods));
    auto enqueue = [&](int m, int block) {
        auto& flags = in_queue[static_cast<std::size_t>(m)];
        if (static_cast<std::size_t>(block) >= flags.size())
            flags.resize(static_cast<std::size_t>(block) + 1, 0);
        if (!flags[static_cast<std::size_t>(block)]) {
            flags[static_cast<std::size_t>(block)] = 1;
            queue.emplace_back(m, block);
        }
    };
    for (int m = 0; m < mods; ++m)
        for (int b = 0; b < p.size(); ++b) enqueue(m, b);

    std::vector<char> marked(static_cast<std::size_t>(n), 0);
    std::vector<int> touched_worlds;
    std::vector<int> touched_blocks;
    std::vector<int> hits;  // per touched block id

    while (!queue.empty()) {
        const auto [m, splitter] = queue.front();
        queue.pop_front();
        in_queue[static_cast<std::size_t>(m)][static_cast<std::size_t>(splitter)] = 0;
        ++report.rounds;

        touched_worlds.clear();
        touched_blocks.clear();
        for (int world : store.members[static_cast<std::size_t>(splitter)])
            for (int pred : rev[static_cast<std::size_t>(m)][static_cast<std::size_t>(world)]) {
                if (marked[static_cast<std::size_t>(pred)]) continue;
                marked[static_cast<std::size_t>(pred)] = 1;
                touched_worlds.push_back(pred);
                const int b = store.block_of[static_cast<std::size_t>(pred)];
                if (static_cast<std::size_t>(b) >= hits.size()) hits.resize(static_cast<std::size_t>(b) + 1, 0);
                if (hits[static_cast<std::size_t>(b)]++ == 0) touched_blocks.push_back(b);
            }

        std::sort(touched_blocks.begin(), touched_blocks.end());
        for (int b : touched_blocks) {
            auto& block = store.members[static_cast<std::size_t>(b)];
            const int h = hits[static_cast<std::size_t>(b)];
            hits[static_cast<std::size_t>(b)] = 0;
            if (h == static_cast<int>(block.size())) continue;  // uniformly marked

            // Split: unmarked worlds stay under id b, marked ones form a new
            // block. Member lists are kept sorted by construction.
            std::vector<int> stay, moved;
            stay.reserve(block.size() - static_cast<std::size_t>(h));
            moved.reserve(static_cast<std::size_t>(h));
            for (int world : block)
                (marked[static_cast<std::size_t>(world)] ? moved : stay).push_back(world);
            const int fresh = static_cast<int>(store.members.size());
            for (int world : moved) store.block_of[static_cast<std::size_t>(world)] = fresh;
            block = std::move(stay);
            store.members.push_back(std::move(moved));
            ++report.splits;
            for (int mm = 0; mm < mods; ++mm) {
                enqueue(mm, b);
                enqueue(mm, fresh);
            }
        }
        for (int world : touched_worlds) marked[static_cast<std::size_t>(world)] = 0;
    }

    Partition out(n, std::move(store.members));
    report.output_size = out.size();
    return RefinementResult{std::move(out), report};
}

namespace {

std::uint64_t bell_number(int n, std::uint64_t cap) {
    // Bell triangle with saturation at the cap.
    std::vector<std::uint64_t> row = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1);
        next[0] = row.back();
        for (int j = 0; j < i; ++j)
            next[static_cast<std::size_t>(j) + 1] =
                std::min(cap, next[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j)]);
        row = std::move(next);
        if (row[0] >= cap) return cap;
    }
    return row[0];
}

// All set partitions of 0..n-1 via restricted growth strings.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    std::vector<int> ids(static_cast<std::size_t>(n), 0);
    std::vector<int> max_prefix(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(ids);
        int i = n - 1;
        for (; i > 0; --i) {
            if (ids[static_cast<std::size_t>(i)] <= max_prefix[static_cast<std::size_t>(i) - 1]) {
                ++ids[static_cast<std::size_t>(i)];
                break;
            }
        }
        if (i == 0) return;
        max_prefix[static_cast<std::size_t>(i)] =
            std::max(max_prefix[static_cast<std::size_t>(i) - 1], ids[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            ids[static_cast<std::size_t>(j)] = 0;
            max_prefix[static_cast<std::size_t>(j)] = max_prefix[static_cast<std::size_t>(j) - 1];
        }
    }
}

}  // namespace

std::vector<int> tunability_profile(const Frame& f, int n_max, std::uint64_t budget) {
    const int n = f.worlds();
    if (n_max < 1) throw Error("profile needs n_max >= 1");
    if (bell_number(n, budget + 1) > budget)
        throw BudgetError("tunability profile refused: Bell(" + std::to_string(n) +
                          ") exceeds the enumeration budget");
    std::vector<int> best(static_cast<std::size_t>(n) + 1, 0);  // by partition size
    for_each_partition(n, [&](const std::vector<int>& ids) {
        const Partition p = Partition::from_block_ids(ids);
        const RefinementResult r = coarsest_tuned_refinement(f, p);
        auto& slot = best[static_cast<std::size_t>(p.size())];
        slot = std::max(slot, r.partition.size());
    });
    std::vector<int> profile(static_cast<std::size_t>(n_max), 0);
    int running = 0;
    for (int k = 1; k <= n_max; ++k) {
        if (k <= n) running = std::max(running, best[static_cast<std::size_t>(k)]);
        profile[static_cast<std::size_t>(k) - 1] = running;
    }
    return profile;
}

Partition product_refine_with_finite(const Frame& f, const Frame& g, const Partition& v) {
    if (!f.alphabet().disjoint_from(g.alphabet()))
        throw Error("product refinement needs disjoint alphabets");
    const int gn = g.worlds();
    if (v.universe() != f.worlds() * gn)
        throw Error("partition does not cover the product frame");

    // Partition of F induced by a ↦ (block of (a,b))_{b∈G}.
    std::map<std::vector<int>, int> class_ids;
    std::vector<int> f_class(static_cast<std::size_t>(f.worlds()));
    for (int a = 0; a < f.worlds(); ++a) {
        std::vector<int> key(static_cast<std::size_t>(gn));
        for (int b = 0; b < gn; ++b) key[static_cast<std::size_t>(b)] = v.block_of(a * gn + b);
        auto [it, inserted] = class_ids.try_emplace(std::move(key), static_cast<int>(class_ids.size()));
        f_class[static_cast<std::size_t>(a)] = it->second;
    }
    const Partition induced = Partition::from_block_ids(f_class);
    const Partition tuned_f = coarsest_tuned_refinement(f, induced).partition;

    // Pair with the G-coordinate: (a,b) ↦ ([a], b).
    std::vector<int> ids(static_cast<std::size_t>(v.universe()));
    for (int a = 0; a < f.worlds(); ++a)
        for (int b = 0; b < gn; ++b)
            ids[static_cast<std::size_t>(a * gn + b)] = tuned_f.block_of(a) * gn + b;
    // Renumber contiguously.
    std::map<int, int> renumber;
    for (int& id : ids) {
        auto [it, inserted] = renumber.try_emplace(id, static_cast<int>(renumber.size()));
        id = it->second;
    }
    return Partition::from_block_ids(ids);
}

}  // namespace kripkit
