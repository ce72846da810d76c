// SPDX-License-Identifier: Apache-2.0
#ifndef RUNTX_PATHS_HPP
#define RUNTX_PATHS_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "runtx/errors.hpp"
#include "runtx/series.hpp"

namespace runtx {

// Step alphabet. UpJ advances (j, j) with j from the enclosing spec,
// Flat advances (2, 0), Down advances (1, -1).
enum class StepKind { UpJ, Flat, Down };

// How the size of a path is measured.
enum class SizeRule {
    Downs,                   // #D
    DownsOverJ,              // floor(#D / j)
    FlatsPlusDowns,          // #F + #D
    FloorFlatsPlusDownsOverJ // floor((#D + #F) / j)
};

// Which pyramid ascents count toward the y statistic.
enum class AscentMode { All, HeightModJ, AbscissaModJ };

struct PathSpec {
    int j = 1;               // unit upsteps per UpJ step
    int start_height = 0;    // m: the path runs from (0, m) to the x-axis
    int min_depth = 0;       // d: the path minimum is exactly -d
    bool allow_flat = false;
    SizeRule size_rule = SizeRule::Downs;

    friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

// One maximal ascent, read off the step sequence.
struct AscentInfo {
    int unit_length = 0;          // in unit upsteps
    long end_height = 0;
    long end_abscissa = 0;
    int following_descent = 0;    // unit length of the descent right after, 0 if none

    friend bool operator==(const AscentInfo&, const AscentInfo&) = default;
};

class Path {
public:
    Path(PathSpec spec, std::vector<StepKind> steps)
        : spec_(spec), steps_(std::move(steps)) {}

    const PathSpec& spec() const { return spec_; }
    const std::vector<StepKind>& steps() const { return steps_; }

    int count(StepKind k) const;
    int size() const;
    long min_level() const;
    std::vector<AscentInfo> ascents() const;
    // Ascents whose immediately following descent is at least as long,
    // filtered by the niceness mode on the ascent's endpoint.
    int pyramid_ascent_count(AscentMode mode) const;
    // Flatstep counts per level; levels may be negative.
    std::map<long, int> flat_profile() const;

    // Text over {U, F, D}, U repeated j times per UpJ step.
    std::string to_string() const;
    static Path parse(const PathSpec& spec, std::string_view text);

    friend bool operator==(const Path&, const Path&) = default;

private:
    PathSpec spec_;
    std::vector<StepKind> steps_;
};

// Default enumeration ceilings (overridable via the budget arguments).
int default_path_budget(const PathSpec& spec);

// Visits every path of the family with size <= max_size, in lexicographic
// step order (UpJ < Flat < Down). Throws BudgetExceeded when max_size is
// beyond the budget.
void for_each_path(const PathSpec& spec, int max_size,
                   const std::function<void(const Path&)>& visit, int budget = -1);

// All paths of the given exact size, deterministic order.
std::vector<Path> enumerate_paths(const PathSpec& spec, int size, int budget = -1);

struct MarkOptions {
    AscentMode y_mode = AscentMode::All;
    bool track_z = false;
};

// Sum over paths of size n <= order of x^n y^(pyramid ascents) prod z_l^(flats at l).
// The OpenMP kernel; results are identical to the serial reference.
TruncatedSeries path_distribution(const PathSpec& spec, int order, MarkOptions marks,
                                  int budget = -1);
// Single-threaded reference implementation.
TruncatedSeries path_distribution_serial(const PathSpec& spec, int order, MarkOptions marks,
                                         int budget = -1);

// The j series F_0..F_{j-1} for j-Dyck paths, where F_i marks with y the
// pyramid ascents ending at height = i (mod j). Computed in one pass.
std::vector<TruncatedSeries> jdyck_residue_distributions(int j, int order, int budget = -1);

// Distribution (y = all pyramid ascents, z tracked) of nonempty flat-step
// paths from the origin that begin with a pyramid.
TruncatedSeries pyramid_prefix_distribution(int order, int budget = -1);

}  // namespace runtx

#endif
