// SPDX-License-Identifier: Apache-2.0
#ifndef RUNTX_SPARTITIONS_HPP
#define RUNTX_SPARTITIONS_HPP

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "runtx/errors.hpp"
#include "runtx/paths.hpp"
#include "runtx/series.hpp"

namespace runtx {

struct SPartitionBuilder;

// Standard set-of-lists partition: ordered blocks of distinct positive
// integers whose union is {1..n}, blocks kept in increasing order of
// first entry.
class SPartition {
public:
    SPartition() = default;  // the empty partition
    static SPartition from_blocks(std::vector<std::vector<int>> blocks);

    int size() const { return size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<int>& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // A run is a block of the form (i, i+1, ..., i+l-1).
    bool block_is_run(int i) const;
    int run_count() const;
    // Blocks that are runs with length and last entry divisible by j.
    int j_run_count(int j) const;
    bool is_j_compatible(int j) const;

    // Adjoins the run (i+1, ..., i+len) after incrementing entries > i.
    SPartition insert_run(int i, int len) const;
    // Removes the indexed block (must be a run) and standardizes.
    SPartition delete_run(int block_index) const;

    std::string to_string() const;  // "1 12 10/2 6 8/3/4 5/7/9 11"
    static SPartition parse(std::string_view text);

    friend bool operator==(const SPartition&, const SPartition&) = default;
    friend std::strong_ordering operator<=>(const SPartition&, const SPartition&) = default;

private:
    friend struct SPartitionBuilder;
    std::vector<std::vector<int>> blocks_;
    int size_ = 0;
};

struct RunInsertion {
    int first = 0;   // a: first entry of the run at insertion time
    int length = 0;  // l

    friend bool operator==(const RunInsertion&, const RunInsertion&) = default;
};

// Result of pruning runs right to left: the run-free base plus the deleted
// runs in reverse order of deletion (= insertion order).
struct RunDeletionSequence {
    SPartition base;
    std::vector<RunInsertion> entries;
};

RunDeletionSequence run_deletion_sequence(const SPartition& p);
SPartition reconstruct(const SPartition& base, const std::vector<RunInsertion>& entries);

// True iff the a's are positive and strictly increasing and each
// a_i <= base_size + l_1 + ... + l_{i-1} + 1.
bool validate_sequence(int base_size, const std::vector<RunInsertion>& entries);

// Built-in run-closed families.
class FamilyId {
public:
    enum class Kind {
        AllSPartitions,
        SetPartitions,
        NoncrossingSPartitions,
        NonoverlappingPartitions,
        PermutationCycles,
        Fk,
        JCompatible
    };

    static FamilyId all();
    static FamilyId set_partitions();
    static FamilyId noncrossing();
    static FamilyId nonoverlapping();
    static FamilyId permutation_cycles();
    static FamilyId fk(int k);  // k != 1
    static FamilyId j_compatible(int j, FamilyId inner);

    Kind kind() const { return kind_; }
    int param() const { return param_; }  // k for Fk, j for JCompatible
    const FamilyId& inner() const;
    std::string name() const;

private:
    FamilyId(Kind kind, int param) : kind_(kind), param_(param) {}
    Kind kind_;
    int param_ = 0;
    std::shared_ptr<FamilyId> inner_;
};

bool family_membership(const SPartition& p, const FamilyId& fam);

// Default ceiling for exhaustive s-partition enumeration.
inline constexpr int kSPartitionBudget = 8;

// Visits every standard s-partition of size 0..max_n once, deterministic order.
void for_each_spartition(int max_n, const std::function<void(const SPartition&)>& visit,
                         int budget = -1);

// All standard s-partitions of exactly size n.
std::vector<SPartition> enumerate_spartitions(int n, int budget = -1);

// Closure test: every run deletion and every size-bounded run insertion
// keeps members inside the family (j-runs for JCompatible families).
bool closure_check(const FamilyId& fam, int max_n, int budget = -1);

enum class RunMode { Runs, JRuns };

// Sum over members of x^size y^(run count). For JCompatible families the
// support size is divided by j and j-runs are counted; max_support bounds
// the support size in all cases. OpenMP kernel.
TruncatedSeries family_distribution(const FamilyId& fam, int max_support,
                                    RunMode mode = RunMode::Runs, int budget = -1);
// Single-threaded reference implementation.
TruncatedSeries family_distribution_serial(const FamilyId& fam, int max_support,
                                           RunMode mode = RunMode::Runs, int budget = -1);

// All members of the run-closed family generated by `base`, up to size
// max_n (closure under run insertion, deduplicated, sorted).
std::vector<SPartition> closure_from_base(const SPartition& base, int max_n);

// The downstep-labeling bijection from Dyck paths to noncrossing
// partitions; pyramid ascents map to runs.
SPartition simion(const Path& dyck);
Path simion_inverse(const SPartition& p);

// The modified bijection from paths that start at (0,k), k >= 2, onto the
// family generated by the one-block base (k, k-1, ..., 1).
SPartition fk_map(const Path& p, int k);

}  // namespace runtx

#endif
