// SPDX-License-Identifier: Apache-2.0
#include "runtx/paths.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace runtx {

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

bool counts_flats(SizeRule rule) {
    return rule == SizeRule::FlatsPlusDowns || rule == SizeRule::FloorFlatsPlusDownsOverJ;
}

int size_of(const PathSpec& spec, int downs, int flats) {
    switch (spec.size_rule) {
        case SizeRule::Downs: return downs;
        case SizeRule::DownsOverJ: return downs / spec.j;
        case SizeRule::FlatsPlusDowns: return downs + flats;
        case SizeRule::FloorFlatsPlusDownsOverJ: return (downs + flats) / spec.j;
    }
    return 0;
}

std::vector<AscentInfo> ascents_of(const PathSpec& spec, const std::vector<StepKind>& steps) {
    std::vector<AscentInfo> out;
    long height = spec.start_height;
    long abscissa = 0;
    std::size_t i = 0;
    while (i < steps.size()) {
        if (steps[i] != StepKind::UpJ) {
            if (steps[i] == StepKind::Flat) abscissa += 2;
            else { abscissa += 1; height -= 1; }
            ++i;
            continue;
        }
        AscentInfo a;
        while (i < steps.size() && steps[i] == StepKind::UpJ) {
            a.unit_length += spec.j;
            height += spec.j;
            abscissa += spec.j;
            ++i;
        }
        a.end_height = height;
        a.end_abscissa = abscissa;
        std::size_t k = i;
        while (k < steps.size() && steps[k] == StepKind::Down) {
            ++a.following_descent;
            ++k;
        }
        out.push_back(a);
    }
    return out;
}

int pyramid_count(const PathSpec& spec, const std::vector<AscentInfo>& ascents,
                  AscentMode mode) {
    int count = 0;
    for (const auto& a : ascents) {
        if (a.following_descent < a.unit_length) continue;
        switch (mode) {
            case AscentMode::All: break;
            case AscentMode::HeightModJ:
                if (((a.end_height % spec.j) + spec.j) % spec.j != 0) continue;
                break;
            case AscentMode::AbscissaModJ:
                if (a.end_abscissa % spec.j != 0) continue;
                break;
        }
        ++count;
    }
    return count;
}

std::map<long, int> flat_profile_of(const PathSpec& spec, const std::vector<StepKind>& steps) {
    std::map<long, int> profile;
    long height = spec.start_height;
    for (StepKind s : steps) {
        switch (s) {
            case StepKind::UpJ: height += spec.j; break;
            case StepKind::Flat: ++profile[height]; break;
            case StepKind::Down: --height; break;
        }
    }
    return profile;
}

}  // namespace

int Path::count(StepKind k) const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), k));
}

int Path::size() const { return size_of(spec_, count(StepKind::Down), count(StepKind::Flat)); }

long Path::min_level() const {
    long height = spec_.start_height;
    long lowest = height;
    for (StepKind s : steps_) {
        if (s == StepKind::UpJ) height += spec_.j;
        else if (s == StepKind::Down) --height;
        lowest = std::min(lowest, height);
    }
    return lowest;
}

std::vector<AscentInfo> Path::ascents() const { return ascents_of(spec_, steps_); }

int Path::pyramid_ascent_count(AscentMode mode) const {
    return pyramid_count(spec_, ascents(), mode);
}

std::map<long, int> Path::flat_profile() const { return flat_profile_of(spec_, steps_); }

std::string Path::to_string() const {
    std::string s;
    for (StepKind k : steps_) {
        switch (k) {
            case StepKind::UpJ: s.append(static_cast<std::size_t>(spec_.j), 'U'); break;
            case StepKind::Flat: s.push_back('F'); break;
            case StepKind::Down: s.push_back('D'); break;
        }
    }
    return s;
}

Path Path::parse(const PathSpec& spec, std::string_view text) {
    std::vector<StepKind> steps;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == 'U') {
            std::size_t run = 0;
            while (i < text.size() && text[i] == 'U') { ++run; ++i; }
            if (run % static_cast<std::size_t>(spec.j) != 0)
                throw std::invalid_argument("ascent length not a multiple of j");
            steps.insert(steps.end(), run / static_cast<std::size_t>(spec.j), StepKind::UpJ);
        } else if (c == 'F') {
            if (!spec.allow_flat) throw std::invalid_argument("flat step in a flat-free family");
            steps.push_back(StepKind::Flat);
            ++i;
        } else if (c == 'D') {
            steps.push_back(StepKind::Down);
            ++i;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in path");
        }
    }
    return Path(spec, std::move(steps));
}

int default_path_budget(const PathSpec& spec) {
    if (spec.j == 1 && !spec.allow_flat) return 12;  // Dyck-like
    return 8;
}

namespace {

// Shared enumeration state; the tree is walked in fixed child order
// (UpJ, Flat, Down) so output order is lexicographic and reproducible.
struct Enumerator {
    PathSpec spec;
    int max_size;
    long downs_flats_cap;  // cap on #D (+ #F when the rule counts flats)

    explicit Enumerator(const PathSpec& s, int max) : spec(s), max_size(max) {
        const bool over_j =
            s.size_rule == SizeRule::DownsOverJ || s.size_rule == SizeRule::FloorFlatsPlusDownsOverJ;
        downs_flats_cap = over_j ? static_cast<long>(s.j) * (max + 1) - 1 : max;
    }

    struct State {
        std::vector<StepKind> steps;
        long height = 0;
        long min_level = 0;
        int ups = 0, flats = 0, downs = 0;
    };

    State root() const {
        State st;
        st.height = spec.start_height;
        st.min_level = spec.start_height;
        return st;
    }

    // Minimum number of downsteps any completion still needs.
    long future_downs(long height, bool depth_attained) const {
        const long j = spec.j;
        const long d = spec.min_depth;
        if (!depth_attained) return height + j * ceil_div(d, j);
        if (height >= 0) return height;
        return j * ceil_div(-height, j) + height;
    }

    bool may_extend(const State& st, long new_height, long new_measure) const {
        if (new_height < -spec.min_depth) return false;
        const bool attained = std::min(st.min_level, new_height) <= -spec.min_depth;
        return new_measure + future_downs(new_height, attained) <= downs_flats_cap;
    }

    long measure(int downs, int flats) const {
        return downs + (counts_flats(spec.size_rule) ? flats : 0);
    }

    bool complete(const State& st) const {
        return st.height == 0 && st.min_level == -spec.min_depth &&
               size_of(spec, st.downs, st.flats) <= max_size;
    }

    // Depth-first walk with in-place backtracking; `visit` sees the state
    // at every complete node.
    template <typename Fn>
    void walk(State& st, Fn&& visit) const {
        if (complete(st)) visit(const_cast<const State&>(st));
        {
            const long h = st.height + spec.j;
            if (may_extend(st, h, measure(st.downs, st.flats))) {
                const long saved = st.height;
                st.steps.push_back(StepKind::UpJ);
                st.height = h;
                ++st.ups;
                walk(st, visit);
                --st.ups;
                st.height = saved;
                st.steps.pop_back();
            }
        }
        if (spec.allow_flat &&
            may_extend(st, st.height, measure(st.downs, st.flats + 1))) {
            st.steps.push_back(StepKind::Flat);
            ++st.flats;
            walk(st, visit);
            --st.flats;
            st.steps.pop_back();
        }
        {
            const long h = st.height - 1;
            if (may_extend(st, h, measure(st.downs + 1, st.flats))) {
                const long saved_h = st.height;
                const long saved_min = st.min_level;
                st.steps.push_back(StepKind::Down);
                st.height = h;
                st.min_level = std::min(saved_min, h);
                ++st.downs;
                walk(st, visit);
                --st.downs;
                st.min_level = saved_min;
                st.height = saved_h;
                st.steps.pop_back();
            }
        }
    }

    // Child snapshots, used only while building the parallel frontier.
    template <typename Fn>
    void children(const State& st, Fn&& fn) const {
        {
            long h = st.height + spec.j;
            if (may_extend(st, h, measure(st.downs, st.flats))) {
                State nx = st;
                nx.steps.push_back(StepKind::UpJ);
                nx.height = h;
                ++nx.ups;
                fn(std::move(nx));
            }
        }
        if (spec.allow_flat) {
            if (may_extend(st, st.height, measure(st.downs, st.flats + 1))) {
                State nx = st;
                nx.steps.push_back(StepKind::Flat);
                ++nx.flats;
                fn(std::move(nx));
            }
        }
        {
            long h = st.height - 1;
            if (may_extend(st, h, measure(st.downs + 1, st.flats))) {
                State nx = st;
                nx.steps.push_back(StepKind::Down);
                nx.height = h;
                nx.min_level = std::min(nx.min_level, h);
                ++nx.downs;
                fn(std::move(nx));
            }
        }
    }
};

// Per-thread scratch turning a complete enumeration state into one term of
// the distribution without fresh allocations on the hot path.
class DistAccumulator {
public:
    DistAccumulator(const PathSpec& spec, MarkOptions marks, int order)
        : spec_(spec), marks_(marks), order_(order) {
        const bool over_j = spec.size_rule == SizeRule::DownsOverJ ||
                            spec.size_rule == SizeRule::FloorFlatsPlusDownsOverJ;
        const long cap = over_j ? static_cast<long>(spec.j) * (order + 1) - 1 : order;
        // Heights stay within [-d, start + cap]; flats index by level + d.
        level_offset_ = spec.min_depth;
        flat_count_.assign(static_cast<std::size_t>(spec.min_depth + spec.start_height + cap + 2),
                           0);
    }

    void add(const Enumerator::State& st, TruncatedSeries& acc) {
        const int n = size_of(spec_, st.downs, st.flats);
        if (n > order_) return;
        int pyramids = 0;
        long height = spec_.start_height;
        long abscissa = 0;
        long min_touched = static_cast<long>(flat_count_.size()), max_touched = -1;
        const auto& steps = st.steps;
        for (std::size_t i = 0; i < steps.size();) {
            switch (steps[i]) {
                case StepKind::Flat: {
                    const std::size_t slot = static_cast<std::size_t>(height + level_offset_);
                    if (flat_count_[slot]++ == 0) {
                        min_touched = std::min(min_touched, height + level_offset_);
                        max_touched = std::max(max_touched, height + level_offset_);
                    }
                    abscissa += 2;
                    ++i;
                    break;
                }
                case StepKind::Down:
                    --height;
                    ++abscissa;
                    ++i;
                    break;
                case StepKind::UpJ: {
                    int unit = 0;
                    while (i < steps.size() && steps[i] == StepKind::UpJ) {
                        unit += spec_.j;
                        height += spec_.j;
                        abscissa += spec_.j;
                        ++i;
                    }
                    int descent = 0;
                    std::size_t k = i;
                    while (k < steps.size() && steps[k] == StepKind::Down) {
                        ++descent;
                        ++k;
                    }
                    if (descent >= unit) {
                        bool nice = true;
                        if (marks_.y_mode == AscentMode::HeightModJ)
                            nice = ((height % spec_.j) + spec_.j) % spec_.j == 0;
                        else if (marks_.y_mode == AscentMode::AbscissaModJ)
                            nice = abscissa % spec_.j == 0;
                        if (nice) ++pyramids;
                    }
                    break;
                }
            }
        }
        entries_.clear();
        if (pyramids > 0)
            entries_.emplace_back(VarId::y(), static_cast<unsigned>(pyramids));
        if (max_touched >= 0) {
            for (long slot = min_touched; slot <= max_touched; ++slot) {
                int& c = flat_count_[static_cast<std::size_t>(slot)];
                if (c == 0) continue;
                if (marks_.track_z)
                    entries_.emplace_back(VarId::z(static_cast<int>(slot - level_offset_)),
                                          static_cast<unsigned>(c));
                c = 0;
            }
        }
        acc.mutable_at(n).add_term(Monomial::from_sorted(entries_), BigInt(1));
    }

private:
    PathSpec spec_;
    MarkOptions marks_;
    int order_;
    long level_offset_;
    std::vector<int> flat_count_;
    std::vector<std::pair<VarId, unsigned>> entries_;
};

int checked_budget(const PathSpec& spec, int requested, int budget) {
    if (spec.j < 1) throw std::invalid_argument("j must be positive");
    if (spec.start_height < 0 || spec.min_depth < 0)
        throw std::invalid_argument("start height and depth must be nonnegative");
    if (spec.allow_flat && !counts_flats(spec.size_rule))
        throw std::invalid_argument("size rule ignores flat steps; enumeration would not terminate");
    const int limit = budget >= 0 ? budget : default_path_budget(spec);
    if (requested > limit)
        throw BudgetExceeded("path enumeration size " + std::to_string(requested) +
                             " exceeds budget " + std::to_string(limit));
    return requested;
}

}  // namespace

void for_each_path(const PathSpec& spec, int max_size,
                   const std::function<void(const Path&)>& visit, int budget) {
    checked_budget(spec, max_size, budget);
    Enumerator e(spec, max_size);
    Enumerator::State st = e.root();
    e.walk(st, [&](const Enumerator::State& s) { visit(Path(spec, s.steps)); });
}

std::vector<Path> enumerate_paths(const PathSpec& spec, int size, int budget) {
    std::vector<Path> out;
    for_each_path(
        spec, size,
        [&](const Path& p) {
            if (p.size() == size) out.push_back(p);
        },
        budget);
    return out;
}

TruncatedSeries path_distribution_serial(const PathSpec& spec, int order, MarkOptions marks,
                                         int budget) {
    checked_budget(spec, order, budget);
    Enumerator e(spec, order);
    TruncatedSeries acc(order);
    DistAccumulator stats(spec, marks, order);
    Enumerator::State st = e.root();
    e.walk(st, [&](const Enumerator::State& s) { stats.add(s, acc); });
    return acc;
}

TruncatedSeries path_distribution(const PathSpec& spec, int order, MarkOptions marks,
                                  int budget) {
#ifndef _OPENMP
    return path_distribution_serial(spec, order, marks, budget);
#else
    checked_budget(spec, order, budget);
    Enumerator e(spec, order);
    TruncatedSeries base(order);
    DistAccumulator base_stats(spec, marks, order);

    // Expand the tree breadth-first until there is enough work to share.
    const int want = 8 * std::max(1, omp_get_max_threads());
    std::vector<Enumerator::State> frontier{e.root()};
    for (int depth = 0; static_cast<int>(frontier.size()) < want && depth < 64; ++depth) {
        std::vector<Enumerator::State> next;
        for (const auto& st : frontier) {
            if (e.complete(st)) base_stats.add(st, base);
            e.children(st, [&](Enumerator::State nx) { next.push_back(std::move(nx)); });
        }
        frontier = std::move(next);
        if (frontier.empty()) return base;
    }

    std::vector<TruncatedSeries> partial(frontier.size(), TruncatedSeries(order));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        DistAccumulator stats(spec, marks, order);
        Enumerator::State st = frontier[i];
        e.walk(st, [&](const Enumerator::State& s) { stats.add(s, partial[i]); });
    }
    // Deterministic merge in frontier order.
    for (const auto& p : partial) base = base + p;
    return base;
#endif
}

std::vector<TruncatedSeries> jdyck_residue_distributions(int j, int order, int budget) {
    PathSpec spec{j, 0, 0, false, SizeRule::DownsOverJ};
    checked_budget(spec, order, budget);
    std::vector<TruncatedSeries> out(static_cast<std::size_t>(j), TruncatedSeries(order));
    for_each_path(
        spec, order,
        [&](const Path& p) {
            const int n = p.size();
            auto asc = p.ascents();
            for (int r = 0; r < j; ++r) {
                int count = 0;
                for (const auto& a : asc)
                    if (a.following_descent >= a.unit_length &&
                        ((a.end_height % j) + j) % j == r)
                        ++count;
                out[static_cast<std::size_t>(r)].mutable_at(n).add_term(
                    Monomial::var(VarId::y(), static_cast<unsigned>(count)), BigInt(1));
            }
        },
        budget);
    return out;
}

TruncatedSeries pyramid_prefix_distribution(int order, int budget) {
    PathSpec spec{1, 0, 0, true, SizeRule::FlatsPlusDowns};
    checked_budget(spec, order, budget);
    TruncatedSeries acc(order);
    for_each_path(
        spec, order,
        [&](const Path& p) {
            if (p.steps().empty() || p.steps().front() != StepKind::UpJ) return;
            auto asc = p.ascents();
            if (asc.front().following_descent < asc.front().unit_length) return;
            Monomial mono;
            const int pyr = p.pyramid_ascent_count(AscentMode::All);
            if (pyr > 0) mono = mono.times(Monomial::var(VarId::y(), static_cast<unsigned>(pyr)));
            for (const auto& [level, cnt] : p.flat_profile())
                mono = mono.times(
                    Monomial::var(VarId::z(static_cast<int>(level)), static_cast<unsigned>(cnt)));
            acc.mutable_at(p.size()).add_term(mono, BigInt(1));
        },
        budget);
    return acc;
}

}  // namespace runtx
