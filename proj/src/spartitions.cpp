// SPDX-License-Identifier: Apache-2.0
#include "runtx/spartitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace runtx {

struct SPartitionBuilder {
    // Blocks must already be standard and sorted by first entry.
    static SPartition make(std::vector<std::vector<int>> blocks, int size) {
        SPartition p;
        p.blocks_ = std::move(blocks);
        p.size_ = size;
        return p;
    }
};

SPartition SPartition::from_blocks(std::vector<std::vector<int>> blocks) {
    int total = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        total += static_cast<int>(b.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
    for (const auto& b : blocks)
        for (int v : b) {
            if (v < 1 || v > total || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("support is not an initial segment without repeats");
            seen[static_cast<std::size_t>(v)] = true;
        }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return SPartitionBuilder::make(std::move(blocks), total);
}

bool SPartition::block_is_run(int i) const {
    const auto& b = blocks_[static_cast<std::size_t>(i)];
    for (std::size_t t = 1; t < b.size(); ++t)
        if (b[t] != b[t - 1] + 1) return false;
    return true;
}

int SPartition::run_count() const {
    int count = 0;
    for (int i = 0; i < block_count(); ++i)
        if (block_is_run(i)) ++count;
    return count;
}

bool SPartition::is_j_compatible(int j) const {
    for (const auto& b : blocks_)
        if (b.size() % static_cast<std::size_t>(j) != 0) return false;
    return true;
}

int SPartition::j_run_count(int j) const {
    if (j < 1) throw std::invalid_argument("j must be positive");
    if (!is_j_compatible(j)) throw std::invalid_argument("s-partition is not j-compatible");
    int count = 0;
    for (int i = 0; i < block_count(); ++i) {
        const auto& b = blocks_[static_cast<std::size_t>(i)];
        if (block_is_run(i) && b.size() % static_cast<std::size_t>(j) == 0 && b.back() % j == 0)
            ++count;
    }
    return count;
}

SPartition SPartition::insert_run(int i, int len) const {
    if (i < 0 || i > size_) throw std::invalid_argument("run insertion offset out of range");
    if (len < 1) throw std::invalid_argument("run length must be positive");
    std::vector<std::vector<int>> blocks = blocks_;
    for (auto& b : blocks)
        for (auto& v : b)
            if (v > i) v += len;
    std::vector<int> run(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) run[static_cast<std::size_t>(t)] = i + 1 + t;
    blocks.push_back(std::move(run));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return SPartitionBuilder::make(std::move(blocks), size_ + len);
}

SPartition SPartition::delete_run(int block_index) const {
    if (block_index < 0 || block_index >= block_count())
        throw std::invalid_argument("block index out of range");
    if (!block_is_run(block_index)) throw std::invalid_argument("block is not a run");
    std::vector<std::vector<int>> blocks;
    std::vector<int> remaining;
    for (int b = 0; b < block_count(); ++b) {
        if (b == block_index) continue;
        blocks.push_back(blocks_[static_cast<std::size_t>(b)]);
        for (int v : blocks.back()) remaining.push_back(v);
    }
    std::sort(remaining.begin(), remaining.end());
    std::map<int, int> rank;
    for (std::size_t t = 0; t < remaining.size(); ++t)
        rank[remaining[t]] = static_cast<int>(t) + 1;
    for (auto& b : blocks)
        for (auto& v : b) v = rank[v];
    // Block order by first entry is preserved by rank compression.
    return SPartitionBuilder::make(std::move(blocks),
                                   size_ - static_cast<int>(blocks_[static_cast<std::size_t>(block_index)].size()));
}

std::string SPartition::to_string() const {
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) os << '/';
        for (std::size_t t = 0; t < blocks_[b].size(); ++t) {
            if (t) os << ' ';
            os << blocks_[b][t];
        }
    }
    return os.str();
}

SPartition SPartition::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    std::string buf(text);
    std::istringstream splitter(buf);
    std::string part;
    while (std::getline(splitter, part, '/')) {
        std::istringstream bs(part);
        std::vector<int> block;
        int v;
        while (bs >> v) block.push_back(v);
        if (!block.empty())
            blocks.push_back(std::move(block));
        else if (part.find_first_not_of(" \t") != std::string::npos)
            throw std::invalid_argument("malformed block: " + part);
    }
    return from_blocks(std::move(blocks));
}

RunDeletionSequence run_deletion_sequence(const SPartition& p) {
    RunDeletionSequence out;
    SPartition cur = p;
    std::vector<RunInsertion> deleted;  // in deletion order
    for (;;) {
        int victim = -1;
        for (int b = 0; b < cur.block_count(); ++b)
            if (cur.block_is_run(b)) victim = b;  // blocks sorted by first entry
        if (victim < 0) break;
        const auto& blk = cur.block(victim);
        deleted.push_back(RunInsertion{blk.front(), static_cast<int>(blk.size())});
        cur = cur.delete_run(victim);
    }
    out.base = std::move(cur);
    out.entries.assign(deleted.rbegin(), deleted.rend());
    return out;
}

SPartition reconstruct(const SPartition& base, const std::vector<RunInsertion>& entries) {
    SPartition cur = base;
    for (const auto& e : entries) cur = cur.insert_run(e.first - 1, e.length);
    return cur;
}

bool validate_sequence(int base_size, const std::vector<RunInsertion>& entries) {
    if (base_size < 0) return false;
    int grown = base_size;
    int prev_first = 0;
    for (const auto& e : entries) {
        if (e.first <= 0 || e.length <= 0) return false;
        if (e.first <= prev_first) return false;
        if (e.first > grown + 1) return false;
        prev_first = e.first;
        grown += e.length;
    }
    return true;
}

FamilyId FamilyId::all() { return FamilyId(Kind::AllSPartitions, 0); }
FamilyId FamilyId::set_partitions() { return FamilyId(Kind::SetPartitions, 0); }
FamilyId FamilyId::noncrossing() { return FamilyId(Kind::NoncrossingSPartitions, 0); }
FamilyId FamilyId::nonoverlapping() { return FamilyId(Kind::NonoverlappingPartitions, 0); }
FamilyId FamilyId::permutation_cycles() { return FamilyId(Kind::PermutationCycles, 0); }

FamilyId FamilyId::fk(int k) {
    if (k == 1 || k < 0)
        throw std::invalid_argument("F_k is available for k = 0 and k >= 2 only");
    return FamilyId(Kind::Fk, k);
}

FamilyId FamilyId::j_compatible(int j, FamilyId inner) {
    if (j < 1) throw std::invalid_argument("j must be positive");
    FamilyId f(Kind::JCompatible, j);
    f.inner_ = std::make_shared<FamilyId>(std::move(inner));
    return f;
}

const FamilyId& FamilyId::inner() const {
    if (!inner_) throw std::logic_error("family has no inner component");
    return *inner_;
}

std::string FamilyId::name() const {
    switch (kind_) {
        case Kind::AllSPartitions: return "all";
        case Kind::SetPartitions: return "set-partitions";
        case Kind::NoncrossingSPartitions: return "noncrossing";
        case Kind::NonoverlappingPartitions: return "nonoverlapping";
        case Kind::PermutationCycles: return "cycles";
        case Kind::Fk: return "f" + std::to_string(param_);
        case Kind::JCompatible:
            return std::to_string(param_) + "-compatible-" + inner().name();
    }
    return "?";
}

namespace {

bool strictly_increasing(const std::vector<int>& b) {
    for (std::size_t t = 1; t < b.size(); ++t)
        if (b[t] <= b[t - 1]) return false;
    return true;
}

bool strictly_decreasing(const std::vector<int>& b) {
    for (std::size_t t = 1; t < b.size(); ++t)
        if (b[t] >= b[t - 1]) return false;
    return true;
}

// Two blocks cross iff their elements alternate X..Y..X..Y along the line.
bool blocks_cross(const std::vector<int>& xs, const std::vector<int>& ys) {
    std::vector<int> sx = xs, sy = ys;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    int switches = 0;
    int last = 0;  // 0 none, 1 X, 2 Y
    std::size_t i = 0, j = 0;
    while (i < sx.size() || j < sy.size()) {
        int origin;
        if (j >= sy.size() || (i < sx.size() && sx[i] < sy[j])) {
            origin = 1;
            ++i;
        } else {
            origin = 2;
            ++j;
        }
        if (origin != last) {
            if (last != 0) ++switches;
            last = origin;
        }
    }
    return switches >= 3;
}

bool underlying_noncrossing(const SPartition& p) {
    for (int a = 0; a < p.block_count(); ++a)
        for (int b = a + 1; b < p.block_count(); ++b)
            if (blocks_cross(p.block(a), p.block(b))) return false;
    return true;
}

bool nonoverlapping(const SPartition& p) {
    // Chords (min, max) of any two blocks must not cross.
    std::vector<std::pair<int, int>> spans;
    for (const auto& b : p.blocks()) {
        auto [lo, hi] = std::minmax_element(b.begin(), b.end());
        spans.emplace_back(*lo, *hi);
    }
    std::sort(spans.begin(), spans.end());
    for (std::size_t a = 0; a + 1 < spans.size(); ++a)
        for (std::size_t b = a + 1; b < spans.size(); ++b)
            if (spans[a].first < spans[b].first && spans[b].first < spans[a].second &&
                spans[a].second < spans[b].second)
                return false;
    return true;
}

bool fk_member(const SPartition& p, int k) {
    if (k == 0) {
        for (const auto& b : p.blocks())
            if (!strictly_increasing(b)) return false;
        return underlying_noncrossing(p);
    }
    int dec_index = -1;
    for (int i = 0; i < p.block_count(); ++i) {
        const auto& b = p.block(i);
        if (strictly_increasing(b)) continue;
        if (dec_index >= 0) return false;
        if (!strictly_decreasing(b) || static_cast<int>(b.size()) != k) return false;
        dec_index = i;
    }
    if (dec_index < 0) return false;
    if (!underlying_noncrossing(p)) return false;
    // The decreasing block must not be covered by entries of another block.
    const auto& d = p.block(dec_index);
    auto [dlo, dhi] = std::minmax_element(d.begin(), d.end());
    for (int i = 0; i < p.block_count(); ++i) {
        if (i == dec_index) continue;
        bool below = false, above = false;
        for (int v : p.block(i)) {
            below = below || v < *dlo;
            above = above || v > *dhi;
        }
        if (below && above) return false;
    }
    return true;
}

}  // namespace

bool family_membership(const SPartition& p, const FamilyId& fam) {
    switch (fam.kind()) {
        case FamilyId::Kind::AllSPartitions: return true;
        case FamilyId::Kind::SetPartitions:
            for (const auto& b : p.blocks())
                if (!strictly_increasing(b)) return false;
            return true;
        case FamilyId::Kind::NoncrossingSPartitions: return underlying_noncrossing(p);
        case FamilyId::Kind::NonoverlappingPartitions: return nonoverlapping(p);
        case FamilyId::Kind::PermutationCycles:
            for (const auto& b : p.blocks())
                if (b.front() != *std::min_element(b.begin(), b.end())) return false;
            return true;
        case FamilyId::Kind::Fk: return fk_member(p, fam.param());
        case FamilyId::Kind::JCompatible:
            return p.is_j_compatible(fam.param()) && family_membership(p, fam.inner());
    }
    return false;
}

namespace {

int checked_sp_budget(int requested, int budget) {
    const int limit = budget >= 0 ? budget : kSPartitionBudget;
    if (requested > limit)
        throw BudgetExceeded("s-partition enumeration size " + std::to_string(requested) +
                             " exceeds budget " + std::to_string(limit));
    return requested;
}

// Children of `cur` in the insertion tree: element e = size + 1 placed as a
// new singleton or at any position of any block. Each s-partition has a
// unique parent (remove its largest element), so the walk is duplicate-free.
template <typename Fn>
void spartition_children(const SPartition& cur, Fn&& fn) {
    const int e = cur.size() + 1;
    {
        auto blocks = cur.blocks();
        blocks.push_back({e});
        fn(SPartitionBuilder::make(std::move(blocks), e));
    }
    for (int b = 0; b < cur.block_count(); ++b) {
        const std::size_t len = cur.block(b).size();
        for (std::size_t pos = 0; pos <= len; ++pos) {
            auto blocks = cur.blocks();
            auto& target = blocks[static_cast<std::size_t>(b)];
            target.insert(target.begin() + static_cast<std::ptrdiff_t>(pos), e);
            if (pos == 0) {
                // Now starts with the maximum entry: belongs at the back.
                auto moved = std::move(blocks[static_cast<std::size_t>(b)]);
                blocks.erase(blocks.begin() + b);
                blocks.push_back(std::move(moved));
            }
            fn(SPartitionBuilder::make(std::move(blocks), e));
        }
    }
}

void spartition_walk(const SPartition& cur, int max_n,
                     const std::function<void(const SPartition&)>& visit) {
    visit(cur);
    if (cur.size() >= max_n) return;
    spartition_children(cur, [&](SPartition child) { spartition_walk(child, max_n, visit); });
}

}  // namespace

void for_each_spartition(int max_n, const std::function<void(const SPartition&)>& visit,
                         int budget) {
    checked_sp_budget(max_n, budget);
    spartition_walk(SPartition(), max_n, visit);
}

std::vector<SPartition> enumerate_spartitions(int n, int budget) {
    std::vector<SPartition> out;
    for_each_spartition(
        n,
        [&](const SPartition& p) {
            if (p.size() == n) out.push_back(p);
        },
        budget);
    return out;
}

bool closure_check(const FamilyId& fam, int max_n, int budget) {
    const bool jmode = fam.kind() == FamilyId::Kind::JCompatible;
    const int j = jmode ? fam.param() : 1;
    bool ok = true;
    for_each_spartition(
        max_n,
        [&](const SPartition& p) {
            if (!ok || !family_membership(p, fam)) return;
            for (int b = 0; b < p.block_count() && ok; ++b) {
                if (!p.block_is_run(b)) continue;
                const auto& blk = p.block(b);
                if (jmode && (blk.size() % static_cast<std::size_t>(j) != 0 || blk.back() % j != 0))
                    continue;  // only j-run deletions for j-families
                if (!family_membership(p.delete_run(b), fam)) ok = false;
            }
            for (int i = 0; i <= p.size() && ok; ++i) {
                if (jmode && i % j != 0) continue;
                for (int len = jmode ? j : 1; p.size() + len <= max_n; len += jmode ? j : 1) {
                    if (!family_membership(p.insert_run(i, len), fam)) {
                        ok = false;
                        break;
                    }
                }
            }
        },
        budget);
    return ok;
}

namespace {

struct FamilyAccumulator {
    const FamilyId& fam;
    RunMode mode;
    int j;  // 1 unless JCompatible

    void add(const SPartition& p, TruncatedSeries& acc) const {
        if (!family_membership(p, fam)) return;
        const int xpow = p.size() / j;
        if (xpow > acc.order()) return;
        const int runs = mode == RunMode::JRuns ? p.j_run_count(j) : p.run_count();
        acc.mutable_at(xpow).add_term(Monomial::var(VarId::y(), static_cast<unsigned>(runs)),
                                      BigInt(1));
    }
};

}  // namespace

TruncatedSeries family_distribution_serial(const FamilyId& fam, int max_support, RunMode mode,
                                           int budget) {
    checked_sp_budget(max_support, budget);
    const int j = fam.kind() == FamilyId::Kind::JCompatible ? fam.param() : 1;
    FamilyAccumulator accum{fam, mode, j};
    TruncatedSeries acc(max_support / j);
    for_each_spartition(max_support, [&](const SPartition& p) { accum.add(p, acc); }, budget);
    return acc;
}

TruncatedSeries family_distribution(const FamilyId& fam, int max_support, RunMode mode,
                                    int budget) {
#ifndef _OPENMP
    return family_distribution_serial(fam, max_support, mode, budget);
#else
    checked_sp_budget(max_support, budget);
    const int j = fam.kind() == FamilyId::Kind::JCompatible ? fam.param() : 1;
    FamilyAccumulator accum{fam, mode, j};
    const int order = max_support / j;
    TruncatedSeries base(order);

    const int split = std::min(max_support, 5);
    std::vector<SPartition> frontier;
    spartition_walk(SPartition(), split, [&](const SPartition& p) {
        if (p.size() == split)
            frontier.push_back(p);
        else
            accum.add(p, base);
    });
    if (split >= max_support) {
        for (const auto& p : frontier) accum.add(p, base);
        return base;
    }

    std::vector<TruncatedSeries> partial(frontier.size(), TruncatedSeries(order));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < frontier.size(); ++i)
        spartition_walk(frontier[i], max_support,
                        [&](const SPartition& p) { accum.add(p, partial[i]); });
    for (const auto& p : partial) base = base + p;
    return base;
#endif
}

std::vector<SPartition> closure_from_base(const SPartition& base, int max_n) {
    std::set<SPartition> seen;
    std::vector<SPartition> queue{base};
    seen.insert(base);
    while (!queue.empty()) {
        SPartition cur = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i <= cur.size(); ++i)
            for (int len = 1; cur.size() + len <= max_n; ++len) {
                SPartition next = cur.insert_run(i, len);
                if (seen.insert(next).second) queue.push_back(next);
            }
    }
    return std::vector<SPartition>(seen.begin(), seen.end());
}

namespace {

void require_dyck(const Path& p) {
    const PathSpec& s = p.spec();
    if (s.j != 1 || s.start_height != 0 || s.min_depth != 0 || s.allow_flat)
        throw std::invalid_argument("expected a Dyck path spec");
}

// Downsteps numbered 1..n left to right; each upstep inherits the label of
// its matching downstep. Returns the label lists of the maximal ascents, in
// path order, each read along the ascent.
std::vector<std::vector<int>> ascent_label_blocks(const std::vector<StepKind>& steps) {
    struct UpRef {
        int ascent;
        int pos;  // position within the ascent
    };
    std::vector<UpRef> stack;
    std::vector<std::vector<int>> blocks;
    int label = 0;
    bool in_ascent = false;
    for (StepKind st : steps) {
        if (st == StepKind::UpJ) {
            if (!in_ascent) blocks.emplace_back();
            in_ascent = true;
            auto& blk = blocks.back();
            blk.push_back(0);  // placeholder
            stack.push_back(UpRef{static_cast<int>(blocks.size()) - 1,
                                  static_cast<int>(blk.size()) - 1});
        } else if (st == StepKind::Down) {
            in_ascent = false;
            if (stack.empty()) throw std::invalid_argument("path dips below the axis");
            UpRef u = stack.back();
            stack.pop_back();
            blocks[static_cast<std::size_t>(u.ascent)][static_cast<std::size_t>(u.pos)] = ++label;
        } else {
            throw std::invalid_argument("flat step in a Dyck path");
        }
    }
    if (!stack.empty()) throw std::invalid_argument("path does not return to the axis");
    return blocks;
}

}  // namespace

SPartition simion(const Path& dyck) {
    require_dyck(dyck);
    auto blocks = ascent_label_blocks(dyck.steps());
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    return SPartition::from_blocks(std::move(blocks));
}

Path simion_inverse(const SPartition& p) {
    if (!family_membership(p, FamilyId::set_partitions()) ||
        !family_membership(p, FamilyId::noncrossing()))
        throw std::invalid_argument("simion inverse needs a noncrossing set partition");
    std::vector<int> block_of(static_cast<std::size_t>(p.size()) + 1, -1);
    for (int b = 0; b < p.block_count(); ++b)
        for (int v : p.block(b)) block_of[static_cast<std::size_t>(v)] = b;
    std::vector<StepKind> steps;
    for (int t = 1; t <= p.size(); ++t) {
        const auto& blk = p.block(block_of[static_cast<std::size_t>(t)]);
        if (blk.front() == t)
            steps.insert(steps.end(), blk.size(), StepKind::UpJ);
        steps.push_back(StepKind::Down);
    }
    return Path(PathSpec{1, 0, 0, false, SizeRule::Downs}, std::move(steps));
}

SPartition fk_map(const Path& p, int k) {
    if (k < 2) throw std::invalid_argument("fk_map needs k >= 2");
    const PathSpec& s = p.spec();
    if (s.j != 1 || s.start_height != k || s.min_depth != 0 || s.allow_flat)
        throw std::invalid_argument("fk_map expects a path starting at height k");
    std::vector<StepKind> steps(static_cast<std::size_t>(k), StepKind::UpJ);
    steps.insert(steps.end(), p.steps().begin(), p.steps().end());
    auto blocks = ascent_label_blocks(steps);  // each block decreasing
    if (blocks.empty() || static_cast<int>(blocks.front().size()) < k)
        throw std::logic_error("first ascent shorter than k");
    std::vector<std::vector<int>> out;
    std::vector<int>& first = blocks.front();
    out.emplace_back(first.begin(), first.begin() + k);
    if (static_cast<int>(first.size()) > k) {
        std::vector<int> rest(first.begin() + k, first.end());
        std::reverse(rest.begin(), rest.end());
        out.push_back(std::move(rest));
    }
    for (std::size_t b = 1; b < blocks.size(); ++b) {
        std::reverse(blocks[b].begin(), blocks[b].end());
        out.push_back(std::move(blocks[b]));
    }
    return SPartition::from_blocks(std::move(out));
}

}  // namespace runtx
