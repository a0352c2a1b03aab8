#include "tracetopo/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace tracetopo {

MergePartition MergePartition::canonical(std::vector<std::vector<int>> blocks) {
    std::set<int> seen;
    for (auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("partition block is empty");
        std::sort(block.begin(), block.end());
        for (int id : block)
            if (!seen.insert(id).second)
                throw std::invalid_argument("star " + std::to_string(id) + " occurs in two blocks");
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return MergePartition{std::move(blocks)};
}

namespace {

void check_partition(const TraceSet& ts, const StarGraph& stars, const MergePartition& p) {
    std::set<int> covered;
    for (const auto& block : p.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            covered.insert(block[i]);
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (stars.has_edge(block[i], block[j]))
                    throw std::invalid_argument("block not independent: stars *" + std::to_string(block[i]) +
                                                " and *" + std::to_string(block[j]) + " conflict");
        }
    }
    if (covered != std::set<int>(ts.star_ids().begin(), ts.star_ids().end()))
        throw std::invalid_argument("partition does not cover the star set");
}

} // namespace

Topology induce_topology(const TraceSet& ts, const StarGraph& stars, const MergePartition& p) {
    return induce_topology(ts, build_canonic(ts), stars, p);
}

Topology induce_topology(const TraceSet& ts, const Topology& canonic, const StarGraph& stars,
                         const MergePartition& p) {
    check_partition(ts, stars, p);
    return contract_stars(canonic, p.blocks, ts.max_star_id() >= 10);
}

Ensemble enumerate_inferrable(const TraceSet& ts, const Alpha& alpha, const EnumerateOptions& options) {
    const int s = ts.stats().s;
    if (s > options.max_stars)
        throw limit_error("max_stars", "enumeration limited to " + std::to_string(options.max_stars) +
                                           " stars, trace set has " + std::to_string(s));

    const Topology canonic = build_canonic(ts);
    const StarGraph stars = build_star_graph(ts, canonic, alpha);
    const auto& ids = ts.star_ids();

    Ensemble out;

    // Candidate partitions in restricted-growth-string order, pruned so every
    // block stays independent in the star graph.
    std::vector<MergePartition> candidates;
    std::vector<std::vector<int>> blocks;
    bool truncated = false;
    auto walk = [&](auto&& self, std::size_t i) -> void {
        if (truncated) return;
        if (i == ids.size()) {
            if (static_cast<std::int64_t>(candidates.size()) >= options.max_partitions) {
                truncated = true;
                return;
            }
            candidates.push_back(MergePartition{blocks});
            return;
        }
        for (std::size_t b = 0; b < blocks.size() && !truncated; ++b) {
            bool ok = true;
            for (int member : blocks[b])
                if (stars.has_edge(member, ids[i])) { ok = false; break; }
            if (!ok) continue;
            blocks[b].push_back(ids[i]);
            self(self, i + 1);
            blocks[b].pop_back();
        }
        if (truncated) return;
        blocks.push_back({ids[i]});
        self(self, i + 1);
        blocks.pop_back();
    };
    if (ids.empty()) {
        candidates.push_back(MergePartition{});
    } else {
        walk(walk, 0);
    }
    out.truncated = truncated;

    // Verify candidates; chunked threads write into fixed slots, so the
    // result is independent of worker count.
    struct Slot {
        Topology topology;
        bool keep = false;
        Violation witness;
    };
    std::vector<Slot> slots(candidates.size());
    const int max_violations = 1; // one witness per rejection is enough here
    auto verify_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Topology g = contract_stars(canonic, candidates[i].blocks, ts.max_star_id() >= 10);
            const MappingFunction m = MappingFunction::for_blocks(ts, candidates[i].blocks);
            Verdict v = verify(ts, g, m, alpha, max_violations);
            slots[i].keep = v.passed;
            if (v.passed)
                slots[i].topology = std::move(g);
            else if (!v.violations.empty())
                slots[i].witness = std::move(v.violations.front());
        }
    };

    const int workers = std::max(1, options.workers);
    if (workers == 1 || candidates.size() < 2) {
        verify_range(0, candidates.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (candidates.size() + static_cast<std::size_t>(workers) - 1) /
                                  static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::size_t begin = static_cast<std::size_t>(w) * chunk;
            if (begin >= candidates.size()) break;
            const std::size_t end = std::min(candidates.size(), begin + chunk);
            pool.emplace_back(verify_range, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (slots[i].keep) {
            out.partitions.push_back(std::move(candidates[i]));
            out.topologies.push_back(std::move(slots[i].topology));
        } else if (options.collect_rejections) {
            out.rejections.push_back({std::move(candidates[i]), std::move(slots[i].witness)});
        }
    }
    return out;
}

BigInt bell_number(int s) {
    if (s < 0) throw std::invalid_argument("bell_number: negative argument");

    // Bell triangle.
    std::vector<BigInt> row{1};
    BigInt triangle = 1; // B_0
    for (int i = 1; i <= s; ++i) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
        triangle = row.front();
    }

    // Stirling-number sum, via the triangular recurrence.
    std::vector<BigInt> stirling{1}; // S(0, 0)
    for (int i = 1; i <= s; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i) + 1);
        for (int j = 1; j <= i; ++j)
            next[static_cast<std::size_t>(j)] =
                (j < i ? stirling[static_cast<std::size_t>(j)] * j : BigInt(0)) +
                (j - 1 < i ? stirling[static_cast<std::size_t>(j - 1)] : BigInt(0));
        stirling = std::move(next);
    }
    BigInt sum = 0;
    for (const BigInt& v : stirling) sum += v;

    if (sum != triangle) throw std::logic_error("bell_number: Stirling sum and Bell triangle disagree");
    return triangle;
}

} // namespace tracetopo
