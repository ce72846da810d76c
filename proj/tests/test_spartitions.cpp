// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "runtx/spartitions.hpp"
#include "runtx/transform.hpp"

using namespace runtx;

namespace {

// All s-partitions of [n] whose blocks are increasing lists (ordinary set
// partitions), by direct filtering.
std::vector<SPartition> set_partitions(int n) {
    std::vector<SPartition> out;
    for (const SPartition& p : enumerate_spartitions(n))
        if (family_membership(p, FamilyId::set_partitions())) out.push_back(p);
    return out;
}

bool is_nonnesting(const SPartition& p) {
    for (int a = 0; a < p.block_count(); ++a)
        for (int b = 0; b < p.block_count(); ++b) {
            if (a == b) continue;
            for (int x1 : p.block(a))
                for (int x2 : p.block(a))
                    for (int y1 : p.block(b))
                        for (int y2 : p.block(b))
                            if (x1 < y1 && y1 <= y2 && y2 < x2 && x1 < x2) return false;
        }
    return true;
}

// Counts the entries of a run-deletion sequence that are disjoint from
// their immediate predecessor (the first entry counts vacuously).
int disjoint_from_predecessor(const std::vector<RunInsertion>& entries) {
    int count = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i == 0) {
            ++count;
            continue;
        }
        const int lo1 = entries[i - 1].first, hi1 = entries[i - 1].first + entries[i - 1].length - 1;
        const int lo2 = entries[i].first, hi2 = entries[i].first + entries[i].length - 1;
        if (hi1 < lo2 || hi2 < lo1) ++count;
    }
    return count;
}

void all_pruning_orders(const SPartition& p, std::set<SPartition>& bases) {
    bool any = false;
    for (int b = 0; b < p.block_count(); ++b) {
        if (!p.block_is_run(b)) continue;
        any = true;
        all_pruning_orders(p.delete_run(b), bases);
    }
    if (!any) bases.insert(p);
}

// Valid run-deletion sequences with total inserted length n - k, enumerated
// straight from the characterization.
int count_valid_sequences(int k, int n) {
    if (n == k) return 1;  // the empty sequence
    int total = 0;
    // entries e_1..e_r chosen depth-first
    std::function<void(int, int, int)> rec = [&](int grown, int last_first, int remaining) {
        if (remaining == 0) {
            ++total;
            return;
        }
        for (int len = 1; len <= remaining; ++len)
            for (int a = last_first + 1; a <= grown + 1; ++a) rec(grown + len, a, remaining - len);
    };
    rec(k, 0, n - k);
    return total;
}

}  // namespace

TEST_CASE("enumeration counts") {
    std::vector<std::size_t> expect{1, 1, 3, 13, 73, 501, 4051, 37633};
    std::vector<std::size_t> counts(8, 0);
    for_each_spartition(7, [&](const SPartition& p) { ++counts[static_cast<std::size_t>(p.size())]; });
    CHECK(counts == expect);

    std::set<std::string> two;
    for (const auto& p : enumerate_spartitions(2)) two.insert(p.to_string());
    CHECK(two == std::set<std::string>{"1 2", "2 1", "1/2"});
}

TEST_CASE("runs") {
    SPartition p = SPartition::parse("3 8 1/4 5 6/7 2/9");
    CHECK(p.run_count() == 2);
    CHECK(SPartition::parse("1").run_count() == 1);  // a singleton is a run
    CHECK(SPartition::parse("1 5 3/2 4").run_count() == 0);
}

TEST_CASE("run insertion and deletion") {
    SPartition p = SPartition::parse("1 5/3 4 2");
    CHECK(p.insert_run(3, 3).to_string() == "1 8/3 7 2/4 5 6");
    CHECK(SPartition().insert_run(0, 2).to_string() == "1 2");

    SPartition q = SPartition::parse("1 7 8/2 3/4 6 5/9");
    CHECK(q.delete_run(1).to_string() == "1 5 6/2 4 3/7");
    CHECK(SPartition::parse("1 2").delete_run(0) == SPartition());
    CHECK_THROWS_AS(SPartition::parse("2 1").delete_run(0), std::invalid_argument);

    for (int n = 0; n <= 5; ++n)
        for (const SPartition& base : enumerate_spartitions(n))
            for (int i = 0; i <= n; ++i)
                for (int len = 1; len <= 2; ++len) {
                    SPartition grown = base.insert_run(i, len);
                    // The inserted run is the block whose first entry is i+1.
                    int idx = -1;
                    for (int b = 0; b < grown.block_count(); ++b)
                        if (grown.block(b).front() == i + 1 &&
                            static_cast<int>(grown.block(b).size()) == len && grown.block_is_run(b))
                            idx = b;
                    REQUIRE(idx >= 0);
                    CHECK(grown.delete_run(idx) == base);
                }
}

TEST_CASE("pruning order is immaterial") {
    for (int n = 0; n <= 6; ++n)
        for (const SPartition& p : enumerate_spartitions(n)) {
            std::set<SPartition> bases;
            all_pruning_orders(p, bases);
            CHECK(bases.size() == 1);
            CHECK(*bases.begin() == run_deletion_sequence(p).base);
        }
}

TEST_CASE("run deletion sequence worked example") {
    SPartition p = SPartition::parse("1 12 10/2 6 8/3/4 5/7/9 11");
    RunDeletionSequence rds = run_deletion_sequence(p);
    CHECK(rds.base.to_string() == "1 5 3/2 4");
    REQUIRE(rds.entries.size() == 4);
    CHECK(rds.entries[0] == RunInsertion{2, 3});
    CHECK(rds.entries[1] == RunInsertion{3, 1});
    CHECK(rds.entries[2] == RunInsertion{4, 2});
    CHECK(rds.entries[3] == RunInsertion{7, 1});
    CHECK(reconstruct(rds.base, rds.entries) == p);

    SPartition runfree = SPartition::parse("1 5 3/2 4");
    RunDeletionSequence trivial = run_deletion_sequence(runfree);
    CHECK(trivial.base == runfree);
    CHECK(trivial.entries.empty());
}

TEST_CASE("run count equals the disjoint-from-predecessor rule") {
    for (int n = 0; n <= 6; ++n)
        for (const SPartition& p : enumerate_spartitions(n)) {
            RunDeletionSequence rds = run_deletion_sequence(p);
            CHECK(p.run_count() == disjoint_from_predecessor(rds.entries));
        }
}

TEST_CASE("sequence characterization") {
    CHECK(validate_sequence(5, {{2, 3}, {3, 1}, {4, 2}, {7, 1}}));
    CHECK_FALSE(validate_sequence(0, {{2, 1}}));
    CHECK(validate_sequence(0, {{1, 1}, {2, 1}}));

    // Bijection: s-partitions pruning to a fixed base <-> valid sequences.
    for (int n = 4; n <= 6; ++n) {
        std::map<SPartition, int> per_base;
        for (const SPartition& p : enumerate_spartitions(n)) {
            RunDeletionSequence rds = run_deletion_sequence(p);
            CHECK(validate_sequence(rds.base.size(), rds.entries));
            CHECK(reconstruct(rds.base, rds.entries) == p);
            per_base[rds.base] += 1;
        }
        for (const auto& [base, members] : per_base)
            CHECK(members == count_valid_sequences(base.size(), n));
    }
}

TEST_CASE("equal-size bases have identical closure distributions") {
    // Run-free bases of size 3, plus the size-0 and size-2 ones.
    std::vector<std::vector<SPartition>> by_size(4);
    for (int n = 0; n <= 3; ++n)
        for (const SPartition& p : enumerate_spartitions(n))
            if (p.run_count() == 0) by_size[static_cast<std::size_t>(n)].push_back(p);
    CHECK(by_size[0].size() == 1);
    CHECK(by_size[1].empty());
    CHECK(by_size[2].size() == 1);
    CHECK(by_size[3].size() == 5);

    const int max_n = 6;
    for (const auto& group : by_size) {
        if (group.size() < 2) continue;
        auto distribution = [&](const SPartition& base) {
            std::map<std::pair<int, int>, int> hist;
            for (const SPartition& p : closure_from_base(base, max_n))
                hist[{p.size(), p.run_count()}] += 1;
            return hist;
        };
        auto first = distribution(group.front());
        for (std::size_t i = 1; i < group.size(); ++i) CHECK(distribution(group[i]) == first);
    }
}

TEST_CASE("noncrossing partitions contain runs and close over the empty base") {
    for (int n = 1; n <= 8; ++n) {
        long nonempty = 0;
        for (const SPartition& p : set_partitions(n))
            if (family_membership(p, FamilyId::noncrossing())) {
                CHECK(p.run_count() >= 1);
                ++nonempty;
            }
        CHECK(nonempty > 0);
    }

    auto closure = closure_from_base(SPartition(), 7);
    std::set<SPartition> closure_set(closure.begin(), closure.end());
    std::set<SPartition> expect;
    for (int n = 0; n <= 7; ++n)
        for (const SPartition& p : set_partitions(n))
            if (family_membership(p, FamilyId::noncrossing())) expect.insert(p);
    CHECK(closure_set == expect);
}

TEST_CASE("family membership") {
    CHECK_FALSE(family_membership(SPartition::parse("1 3/2 4"), FamilyId::noncrossing()));
    CHECK(family_membership(SPartition::parse("1 4/2 3"), FamilyId::noncrossing()));
    CHECK(family_membership(SPartition::parse("1 5 3/2 4"), FamilyId::permutation_cycles()));
    CHECK_FALSE(family_membership(SPartition::parse("2 1/3"), FamilyId::permutation_cycles()));
    CHECK(family_membership(SPartition::parse("1 2/4/6 7 8/9 5 3/10 11"), FamilyId::fk(3)));
    CHECK_FALSE(family_membership(SPartition::parse("1 2/4/6 7 8/9 5 3/10 11"), FamilyId::fk(2)));
    CHECK_FALSE(family_membership(SPartition::parse("1 3/2 4"), FamilyId::nonoverlapping()));
    CHECK(family_membership(SPartition::parse("1 4/2 3"), FamilyId::nonoverlapping()));
    CHECK(family_membership(SPartition::parse("1 4/3 2"), FamilyId::nonoverlapping()));
    CHECK(family_membership(SPartition::parse("2 1"), FamilyId::fk(2)));
    CHECK_FALSE(family_membership(SPartition::parse("1 2"), FamilyId::fk(2)));
    CHECK_THROWS_AS(FamilyId::fk(1), std::invalid_argument);
}

TEST_CASE("j-run counting") {
    SPartition p = SPartition::parse("3 4/1 2");
    CHECK(p.j_run_count(2) == 2);  // both blocks are 2-runs
    SPartition q = SPartition::parse("2 3/1 4");
    CHECK(q.j_run_count(2) == 0);  // (2,3) ends at an odd entry
    SPartition r = SPartition::parse("1 2 3");
    CHECK_THROWS_AS(r.j_run_count(2), std::invalid_argument);
    CHECK(r.j_run_count(1) == r.run_count());
}

TEST_CASE("closure checks") {
    CHECK(closure_check(FamilyId::all(), 5));
    CHECK(closure_check(FamilyId::noncrossing(), 6));
    CHECK(closure_check(FamilyId::set_partitions(), 5));
    CHECK(closure_check(FamilyId::nonoverlapping(), 5));
    CHECK(closure_check(FamilyId::permutation_cycles(), 5));
    CHECK(closure_check(FamilyId::fk(2), 5));
    CHECK(closure_check(FamilyId::j_compatible(2, FamilyId::permutation_cycles()), 6));

    // Nonnesting partitions are not run-closed: inserting 23 into 12 nests.
    SPartition p = SPartition::parse("1 2");
    CHECK(is_nonnesting(p));
    SPartition grown = p.insert_run(1, 2);
    CHECK(grown.to_string() == "1 4/2 3");
    CHECK_FALSE(is_nonnesting(grown));
}

TEST_CASE("simion bijection") {
    const PathSpec dyck{1, 0, 0, false, SizeRule::Downs};
    CHECK(simion(Path::parse(dyck, "UD")).to_string() == "1");
    SPartition s = simion(Path::parse(dyck, "UUDD"));
    CHECK(s.to_string() == "1 2");
    CHECK(s.run_count() == 1);

    for (int n = 0; n <= 7; ++n) {
        std::set<SPartition> images;
        std::map<std::pair<int, int>, int> path_hist, part_hist;
        for (const Path& p : enumerate_paths(dyck, n)) {
            SPartition img = simion(p);
            CHECK(family_membership(img, FamilyId::set_partitions()));
            CHECK(family_membership(img, FamilyId::noncrossing()));
            CHECK(img.size() == n);
            CHECK(img.run_count() == p.pyramid_ascent_count(AscentMode::All));
            CHECK(simion_inverse(img) == p);
            images.insert(img);
            path_hist[{n, p.pyramid_ascent_count(AscentMode::All)}] += 1;
        }
        for (const SPartition& q : set_partitions(n))
            if (family_membership(q, FamilyId::noncrossing()))
                part_hist[{q.size(), q.run_count()}] += 1;
        CHECK(images.size() == enumerate_paths(dyck, n).size());
        CHECK(path_hist == part_hist);
    }
    CHECK_THROWS_AS(simion_inverse(SPartition::parse("1 3/2 4")), std::invalid_argument);
}

TEST_CASE("fk map") {
    PathSpec spec3{1, 3, 0, false, SizeRule::Downs};
    Path example = Path::parse(spec3, "UUDDDUDDUUUDDDDUUDD");
    CHECK(fk_map(example, 3).to_string() == "1 2/4/6 7 8/9 5 3/10 11");

    // The upstep-free path: only the prepended block survives.
    PathSpec spec2{1, 2, 0, false, SizeRule::Downs};
    CHECK(fk_map(Path(spec2, std::vector<StepKind>(2, StepKind::Down)), 2).to_string() == "2 1");

    for (int k = 2; k <= 3; ++k) {
        PathSpec spec{1, k, 0, false, SizeRule::Downs};
        std::map<std::pair<int, int>, int> path_hist, fam_hist;
        std::set<SPartition> images;
        for (int n = k; n <= 6; ++n)
            for (const Path& p : enumerate_paths(spec, n)) {
                SPartition img = fk_map(p, k);
                CHECK(family_membership(img, FamilyId::fk(k)));
                CHECK(img.size() == n);
                CHECK(img.run_count() == p.pyramid_ascent_count(AscentMode::All));
                images.insert(img);
                path_hist[{n, p.pyramid_ascent_count(AscentMode::All)}] += 1;
            }
        int family_members = 0;
        for (int n = 0; n <= 6; ++n)
            for (const SPartition& q : enumerate_spartitions(n))
                if (family_membership(q, FamilyId::fk(k))) {
                    fam_hist[{q.size(), q.run_count()}] += 1;
                    ++family_members;
                }
        CHECK(static_cast<int>(images.size()) == family_members);
        CHECK(path_hist == fam_hist);
        // The family distribution is a shifted power of the bivariate series.
        CHECK(family_distribution(FamilyId::fk(k), 6) ==
              catalan_bivariate(6).pow(static_cast<unsigned>(k + 1)).shifted_x(k));
    }
}

TEST_CASE("family distributions") {
    // Set partitions: the y^0 column counts partitions with no run block.
    // Exhaustive oracle at n = 4: of the 15 partitions only 13/24 qualifies.
    int direct = 0;
    for (const SPartition& p : set_partitions(4))
        if (p.run_count() == 0) ++direct;
    CHECK(direct == 1);

    TruncatedSeries sets = family_distribution(FamilyId::set_partitions(), 4);
    TruncatedSeries col0 = sets.substitute({{VarId::y(), BigInt(0)}});
    CHECK(col0 == series_from_sequence({BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(1)}, 4));

    TruncatedSeries cycles = family_distribution(FamilyId::permutation_cycles(), 5);
    TruncatedSeries totals = cycles.substitute({{VarId::y(), BigInt(1)}});
    CHECK(totals ==
          series_from_sequence({BigInt(1), BigInt(1), BigInt(2), BigInt(6), BigInt(24), BigInt(120)}, 5));

    TruncatedSeries even =
        family_distribution(FamilyId::j_compatible(2, FamilyId::permutation_cycles()), 4,
                            RunMode::JRuns);
    TruncatedSeries even_totals = even.substitute({{VarId::y(), BigInt(1)}});
    CHECK(even_totals == series_from_sequence({BigInt(1), BigInt(1), BigInt(9)}, 2));

    CHECK(family_distribution(FamilyId::all(), 6) ==
          family_distribution_serial(FamilyId::all(), 6));
    CHECK(even == family_distribution_serial(FamilyId::j_compatible(2, FamilyId::permutation_cycles()),
                                             4, RunMode::JRuns));
}

TEST_CASE("budgets") {
    CHECK_THROWS_AS(enumerate_spartitions(9), BudgetExceeded);
    CHECK_THROWS_AS(family_distribution(FamilyId::all(), 9), BudgetExceeded);
    CHECK_NOTHROW(enumerate_spartitions(3, 3));
}
