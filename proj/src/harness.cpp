// SPDX-License-Identifier: Apache-2.0
#include "runtx/harness.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace runtx {

namespace {

using Clock = std::chrono::steady_clock;

std::string kind_name(CaseKind k) {
    switch (k) {
        case CaseKind::CatalanTriangle: return "catalan";
        case CaseKind::TheoremNk: return "nk";
        case CaseKind::JDyck: return "jdyck";
        case CaseKind::JMD: return "jmd";
        case CaseKind::JMDClosedForm: return "jmd-closedform";
        case CaseKind::JDyckIdentities: return "jdyck-identities";
        case CaseKind::RunClosedFamily: return "runclosed";
        case CaseKind::BellRemark: return "bell";
        case CaseKind::EvenCycles: return "evencycles";
        case CaseKind::SchroederBase: return "schroeder";
        case CaseKind::SchroederRecursion: return "schroeder-recursion";
        case CaseKind::H0Identity: return "h0";
        case CaseKind::AmdTheorem: return "amd";
        case CaseKind::Conjecture: return "conjecture";
    }
    return "?";
}

bool uses_j(CaseKind k) {
    return k == CaseKind::JDyck || k == CaseKind::JMD || k == CaseKind::JMDClosedForm ||
           k == CaseKind::JDyckIdentities || k == CaseKind::Conjecture;
}

bool uses_md(CaseKind k) {
    return k == CaseKind::JMD || k == CaseKind::JMDClosedForm || k == CaseKind::AmdTheorem ||
           k == CaseKind::Conjecture;
}

std::optional<Discrepancy> first_discrepancy(const TruncatedSeries& expected,
                                             const TruncatedSeries& actual) {
    for (int n = 0; n <= expected.order(); ++n) {
        const MultiPoly& e = expected.at(n);
        const MultiPoly& a = actual.at(n);
        if (e == a) continue;
        // Walk the union of monomials in canonical order.
        auto ei = e.terms().begin();
        auto ai = a.terms().begin();
        MonomialOrder before;
        const Monomial* where = nullptr;
        while (ei != e.terms().end() || ai != a.terms().end()) {
            if (ai == a.terms().end() || (ei != e.terms().end() && before(ei->first, ai->first))) {
                where = &ei->first;
                break;
            }
            if (ei == e.terms().end() || before(ai->first, ei->first)) {
                where = &ai->first;
                break;
            }
            if (ei->second != ai->second) {
                where = &ei->first;
                break;
            }
            ++ei, ++ai;
        }
        Discrepancy d;
        d.x_power = n;
        if (where != nullptr) {
            d.monomial = MultiPoly::term(*where, BigInt(1)).to_string();
            d.expected = e.coefficient(*where).get_str();
            d.actual = a.coefficient(*where).get_str();
        }
        return d;
    }
    return std::nullopt;
}

std::set<int> z_levels_of(const TruncatedSeries& s) {
    std::set<int> levels;
    for (int n = 0; n <= s.order(); ++n)
        for (const auto& [mono, c] : s.at(n).terms())
            for (const auto& [v, e] : mono.entries())
                if (v.kind == VarId::Kind::Z) levels.insert(v.level);
    return levels;
}

Report finish_compare(CaseId id, int order, Clock::time_point start,
                      const TruncatedSeries& oracle, const TruncatedSeries& transformed) {
    Report r;
    r.id = std::move(id);
    r.order = order;
    auto disc = first_discrepancy(oracle, transformed);
    if (!disc) {
        r.status = CaseStatus::Pass;
    } else {
        r.status = CaseStatus::Fail;
        r.discrepancy = disc;
        // A theorem may survive the z := 1 specialization even when the
        // per-level comparison fails; note that in the report.
        std::map<VarId, BigInt> ones;
        for (int level : z_levels_of(oracle)) ones[VarId::z(level)] = 1;
        for (int level : z_levels_of(transformed)) ones[VarId::z(level)] = 1;
        if (!ones.empty() && oracle.substitute(ones) == transformed.substitute(ones))
            r.z_specialized_pass = true;
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return r;
}

Report budget_report(CaseId id, int order, Clock::time_point start) {
    Report r;
    r.id = std::move(id);
    r.order = order;
    r.status = CaseStatus::BudgetExceeded;
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return r;
}

TruncatedSeries oracle_distribution(const CaseId& id, int order, int budget) {
    switch (id.kind) {
        case CaseKind::CatalanTriangle:
            return path_distribution(PathSpec{1, 0, 0, false, SizeRule::Downs}, order,
                                     MarkOptions{AscentMode::All, false}, budget);
        case CaseKind::TheoremNk:
            return path_distribution(PathSpec{1, id.k, 0, false, SizeRule::Downs}, order,
                                     MarkOptions{AscentMode::All, false}, budget);
        case CaseKind::JDyck:
            return path_distribution(PathSpec{id.j, 0, 0, false, SizeRule::DownsOverJ}, order,
                                     MarkOptions{AscentMode::HeightModJ, false}, budget);
        case CaseKind::JMD:
            return path_distribution(PathSpec{id.j, id.m, id.d, false, SizeRule::DownsOverJ},
                                     order, MarkOptions{AscentMode::HeightModJ, false}, budget);
        case CaseKind::RunClosedFamily:
            return family_distribution(*id.family, order, RunMode::Runs, budget);
        case CaseKind::EvenCycles:
            return family_distribution(FamilyId::j_compatible(2, FamilyId::permutation_cycles()),
                                       2 * order, RunMode::JRuns, budget);
        case CaseKind::SchroederBase:
            return path_distribution(PathSpec{1, 0, 0, true, SizeRule::FlatsPlusDowns}, order,
                                     MarkOptions{AscentMode::All, true}, budget);
        case CaseKind::AmdTheorem:
            return path_distribution(PathSpec{1, id.m, id.d, true, SizeRule::FlatsPlusDowns},
                                     order, MarkOptions{AscentMode::All, true}, budget);
        case CaseKind::Conjecture:
            return path_distribution(
                PathSpec{id.j, id.m, id.d, id.flats, SizeRule::FloorFlatsPlusDownsOverJ}, order,
                MarkOptions{AscentMode::AbscissaModJ, true}, budget);
        default: break;
    }
    throw std::logic_error("case has no oracle distribution");
}

TruncatedSeries one_minus_x(int order) {
    TruncatedSeries s = TruncatedSeries::constant(1, order);
    if (order >= 1) s.set(1, MultiPoly(-1L));
    return s;
}

TruncatedSeries one_minus_xy(int order) {
    TruncatedSeries s = TruncatedSeries::constant(1, order);
    if (order >= 1) s.set(1, -poly_y());
    return s;
}

// F_0 for j-Dyck paths solved from its defining equation
// (1-x)^j - (1-x)^{j-1}(1-xy) F + x(1-xy)^j F^{j+1} = 0.
TruncatedSeries jdyck_base_series(int j, int order) {
    TruncatedSeries omx = one_minus_x(order);
    TruncatedSeries omxy = one_minus_xy(order);
    TruncatedSeries denom_inv =
        (omx.pow(static_cast<unsigned>(j - 1)) * omxy).inverted();
    TruncatedSeries lead = omx.pow(static_cast<unsigned>(j));
    TruncatedSeries xfac =
        TruncatedSeries::monomial(MultiPoly(1L), 1, order) * omxy.pow(static_cast<unsigned>(j));
    return series_fixed_point(TruncatedSeries(order), [&](const TruncatedSeries& f) {
        return (lead + xfac * f.pow(static_cast<unsigned>(j + 1))) * denom_inv;
    });
}

Report bell_remark_case(CaseId id, int order, int budget) {
    auto start = Clock::now();
    try {
        TruncatedSeries dist = family_distribution(FamilyId::set_partitions(), order,
                                                   RunMode::Runs, budget);
        std::vector<BigInt> bell = bell_numbers(order);
        TruncatedSeries omx = one_minus_x(order);
        TruncatedSeries omxy_inv = one_minus_xy(order).inverted();
        TruncatedSeries formula(order);
        for (int n = 0; n <= order; ++n) {
            TruncatedSeries term =
                TruncatedSeries::monomial(MultiPoly(bell[static_cast<std::size_t>(n)]), n, order);
            formula = formula + term * omx.pow(static_cast<unsigned>(n + 1)) *
                                    omxy_inv.pow(static_cast<unsigned>(n + 1));
        }
        Report r = finish_compare(id, order, start, dist, formula);
        if (!r.passed()) return r;
        // Column y = 0 against (1-x) * sum B_n (x(1-x))^n.
        TruncatedSeries col0 = dist.substitute({{VarId::y(), BigInt(0)}});
        TruncatedSeries xomx = TruncatedSeries::monomial(MultiPoly(1L), 1, order) * omx;
        TruncatedSeries runfree(order);
        for (int n = 0; n <= order; ++n)
            runfree = runfree +
                      TruncatedSeries::constant(MultiPoly(bell[static_cast<std::size_t>(n)]), order) *
                          xomx.pow(static_cast<unsigned>(n));
        runfree = omx * runfree;
        return finish_compare(r.id, order, start, col0, runfree);
    } catch (const BudgetExceeded&) {
        return budget_report(id, order, start);
    }
}

}  // namespace

std::string CaseId::name() const {
    std::ostringstream os;
    os << kind_name(kind);
    std::vector<std::string> params;
    if (uses_j(kind) || kind == CaseKind::EvenCycles)
        params.push_back("j=" + std::to_string(kind == CaseKind::EvenCycles ? 2 : j));
    if (kind == CaseKind::TheoremNk) params.push_back("k=" + std::to_string(k));
    if (uses_md(kind)) {
        params.push_back("m=" + std::to_string(m));
        params.push_back("d=" + std::to_string(d));
    }
    if (kind == CaseKind::RunClosedFamily && family) params.push_back(family->name());
    if (kind == CaseKind::Conjecture) params.push_back(flats ? "flats" : "no-flats");
    if (!params.empty()) {
        os << '(';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os << ',';
            os << params[i];
        }
        os << ')';
    }
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["case"] = kind_name(id.kind);
    nlohmann::json params = nlohmann::json::object();
    if (uses_j(id.kind)) params["j"] = id.j;
    if (id.kind == CaseKind::TheoremNk) params["k"] = id.k;
    if (uses_md(id.kind)) {
        params["m"] = id.m;
        params["d"] = id.d;
    }
    if (id.kind == CaseKind::RunClosedFamily && id.family) params["family"] = id.family->name();
    if (id.kind == CaseKind::Conjecture) params["flats"] = id.flats;
    j["params"] = params;
    j["order"] = order;
    switch (status) {
        case CaseStatus::Pass: j["status"] = "pass"; break;
        case CaseStatus::Fail: j["status"] = "fail"; break;
        case CaseStatus::BudgetExceeded: j["status"] = "budget-exceeded"; break;
    }
    if (discrepancy) {
        j["discrepancy"] = {{"xpow", discrepancy->x_power},
                            {"monomial", discrepancy->monomial},
                            {"expected", discrepancy->expected},
                            {"actual", discrepancy->actual}};
        if (z_specialized_pass) j["z_specialized_pass"] = true;
    }
    j["millis"] = millis;
    return j.dump();
}

Report run_case(const CaseId& id, int order, int budget) {
    auto start = Clock::now();
    if (id.kind == CaseKind::BellRemark) return bell_remark_case(id, order, budget);
    if (id.kind == CaseKind::JMDClosedForm) return closed_form_check_jmd(id.j, id.m, id.d, order, budget);
    if (id.kind == CaseKind::JDyckIdentities) return jdyck_identity_check(id.j, order, budget);
    if (id.kind == CaseKind::SchroederRecursion) return schroeder_recursion_check(order, budget);
    if (id.kind == CaseKind::H0Identity) return h0_identity_check(order, budget);
    try {
        TruncatedSeries oracle = oracle_distribution(id, order, budget);
        TruncatedSeries g = oracle.substitute({{VarId::y(), BigInt(1)}});
        TruncatedSeries transformed = run_transform(g, order);
        return finish_compare(id, order, start, oracle, transformed);
    } catch (const BudgetExceeded&) {
        return budget_report(id, order, start);
    }
}

Report closed_form_check_jmd(int j, int m, int d, int order, int budget) {
    CaseId id;
    id.kind = CaseKind::JMDClosedForm;
    id.j = j, id.m = m, id.d = d;
    auto start = Clock::now();
    try {
        TruncatedSeries brute =
            path_distribution(PathSpec{j, m, d, false, SizeRule::DownsOverJ}, order,
                              MarkOptions{AscentMode::HeightModJ, false}, budget);
        const int k = m / j;
        TruncatedSeries ratio = one_minus_xy(order) * one_minus_x(order).inverted();
        TruncatedSeries closed =
            jdyck_base_series(j, order).pow(static_cast<unsigned>(m + 1 + (j + 1) * d)) *
            ratio.pow(static_cast<unsigned>(m + j * d - k));
        closed = closed.shifted_x(k + d);
        return finish_compare(id, order, start, brute, closed);
    } catch (const BudgetExceeded&) {
        return budget_report(id, order, start);
    }
}

Report jdyck_identity_check(int j, int order, int budget) {
    CaseId id;
    id.kind = CaseKind::JDyckIdentities;
    id.j = j;
    auto start = Clock::now();
    try {
        std::vector<TruncatedSeries> f = jdyck_residue_distributions(j, order, budget);
        TruncatedSeries prod = TruncatedSeries::constant(1, order);
        for (const auto& fi : f) prod = prod * fi;
        TruncatedSeries x = TruncatedSeries::monomial(MultiPoly(1L), 1, order);
        TruncatedSeries omx_inv = one_minus_x(order).inverted();
        TruncatedSeries geom = (TruncatedSeries::constant(1, order) - x * prod).inverted();
        // F_0 = 1 + (y-1) F_0 x/(1-x) + xF/(1-xF)
        TruncatedSeries rhs0 =
            TruncatedSeries::constant(1, order) +
            f[0].scaled(poly_y() - MultiPoly(1L)) * x * omx_inv + x * prod * geom;
        if (f[0] != rhs0) return finish_compare(id, order, start, f[0], rhs0);
        // F_i = 1/(1-xF) and F_i = (1-xy)/(1-x) F_0 for i != 0 (mod j)
        TruncatedSeries ratio0 = one_minus_xy(order) * omx_inv * f[0];
        for (int i = 1; i < j; ++i) {
            if (f[static_cast<std::size_t>(i)] != geom)
                return finish_compare(id, order, start, f[static_cast<std::size_t>(i)], geom);
            if (f[static_cast<std::size_t>(i)] != ratio0)
                return finish_compare(id, order, start, f[static_cast<std::size_t>(i)], ratio0);
        }
        // (1-x)^j - (1-x)^{j-1}(1-xy) F_0 + x(1-xy)^j F_0^{j+1} = 0
        TruncatedSeries omx = one_minus_x(order);
        TruncatedSeries omxy = one_minus_xy(order);
        TruncatedSeries residual = omx.pow(static_cast<unsigned>(j)) -
                                   omx.pow(static_cast<unsigned>(j - 1)) * omxy * f[0] +
                                   x * omxy.pow(static_cast<unsigned>(j)) *
                                       f[0].pow(static_cast<unsigned>(j + 1));
        return finish_compare(id, order, start, TruncatedSeries(order), residual);
    } catch (const BudgetExceeded&) {
        return budget_report(id, order, start);
    }
}

Report schroeder_recursion_check(int order, int budget) {
    CaseId id;
    id.kind = CaseKind::SchroederRecursion;
    auto start = Clock::now();
    try {
        TruncatedSeries f = path_distribution(PathSpec{1, 0, 0, true, SizeRule::FlatsPlusDowns},
                                              order, MarkOptions{AscentMode::All, true}, budget);
        TruncatedSeries lhs = one_minus_xy(order) * one_minus_x(order).inverted() * f;
        TruncatedSeries rhs = TruncatedSeries::constant(1, order);
        for (int r = 1; r <= order; ++r) {
            TruncatedSeries prod = TruncatedSeries::constant(1, order);
            for (int t = r - 1; t >= 0; --t) prod = prod * f.shift_z(t);
            TruncatedSeries weight =
                TruncatedSeries::constant(MultiPoly(1L) + poly_z(r - 1), order);
            rhs = rhs + TruncatedSeries::monomial(MultiPoly(1L), r, order) * weight * prod;
        }
        return finish_compare(id, order, start, lhs, rhs);
    } catch (const BudgetExceeded&) {
        return budget_report(id, order, start);
    }
}

Report h0_identity_check(int order, int budget) {
    CaseId id;
    id.kind = CaseKind::H0Identity;
    auto start = Clock::now();
    try {
        TruncatedSeries h0 = pyramid_prefix_distribution(order, budget);
        TruncatedSeries f = path_distribution(PathSpec{1, 0, 0, true, SizeRule::FlatsPlusDowns},
                                              order, MarkOptions{AscentMode::All, true}, budget);
        TruncatedSeries rhs = TruncatedSeries::monomial(poly_y(), 1, order) * f *
                              one_minus_x(order).inverted();
        return finish_compare(id, order, start, h0, rhs);
    } catch (const BudgetExceeded&) {
        return budget_report(id, order, start);
    }
}

std::vector<Report> conjecture_scan(const std::vector<int>& js, const std::vector<int>& ms,
                                    const std::vector<int>& ds, int order,
                                    bool include_flat_free, int budget) {
    std::vector<CaseId> cells;
    for (int j : js)
        for (int m : ms)
            for (int d : ds)
                for (int f = 0; f < (include_flat_free ? 2 : 1); ++f) {
                    CaseId id;
                    id.kind = CaseKind::Conjecture;
                    id.j = j, id.m = m, id.d = d;
                    id.flats = (f == 0);
                    cells.push_back(id);
                }
    std::vector<Report> reports(cells.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < cells.size(); ++i)
        reports[i] = run_case(cells[i], order, budget);
    return reports;
}

std::vector<std::pair<CaseId, int>> default_catalogue() {
    std::vector<std::pair<CaseId, int>> cat;
    auto add = [&](CaseKind kind, int order, auto setup) {
        CaseId id;
        id.kind = kind;
        setup(id);
        cat.emplace_back(id, order);
    };
    auto nop = [](CaseId&) {};
    add(CaseKind::CatalanTriangle, 12, nop);
    for (int k = 1; k <= 3; ++k)
        add(CaseKind::TheoremNk, 8, [&](CaseId& c) { c.k = k; });
    for (int j : {2, 3}) {
        add(CaseKind::JDyck, 8, [&](CaseId& c) { c.j = j; });
        add(CaseKind::JDyckIdentities, 8, [&](CaseId& c) { c.j = j; });
    }
    for (int j : {2, 3})
        for (int m = 0; m <= 3; ++m)
            for (int d = 0; d <= 2; ++d) {
                add(CaseKind::JMD, 6, [&](CaseId& c) { c.j = j, c.m = m, c.d = d; });
                add(CaseKind::JMDClosedForm, 6, [&](CaseId& c) { c.j = j, c.m = m, c.d = d; });
            }
    auto families = {FamilyId::all(), FamilyId::set_partitions(), FamilyId::noncrossing(),
                     FamilyId::nonoverlapping(), FamilyId::permutation_cycles()};
    for (const auto& fam : families)
        add(CaseKind::RunClosedFamily, 8, [&](CaseId& c) { c.family = fam; });
    add(CaseKind::BellRemark, 8, nop);
    add(CaseKind::EvenCycles, 4, nop);
    add(CaseKind::SchroederBase, 6, nop);
    add(CaseKind::SchroederRecursion, 6, nop);
    add(CaseKind::H0Identity, 6, nop);
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 2; ++d)
            add(CaseKind::AmdTheorem, 6, [&](CaseId& c) { c.m = m, c.d = d; });
    for (int j : {1, 2, 3})
        for (int m = 0; m <= 3; ++m)
            for (int d = 0; d <= 2; ++d)
                for (bool flats : {true, false})
                    add(CaseKind::Conjecture, 5, [&](CaseId& c) {
                        c.j = j, c.m = m, c.d = d, c.flats = flats;
                    });
    return cat;
}

std::string summary_table(const std::vector<Report>& reports) {
    std::ostringstream os;
    std::size_t width = 4;
    for (const auto& r : reports) width = std::max(width, r.id.name().size());
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& r : reports) {
        std::string name = r.id.name();
        os << name << std::string(width - name.size() + 2, ' ');
        os << "order " << r.order << "  ";
        switch (r.status) {
            case CaseStatus::Pass:
                os << "pass";
                ++pass;
                break;
            case CaseStatus::Fail:
                os << "FAIL at x^" << (r.discrepancy ? r.discrepancy->x_power : -1);
                if (r.discrepancy)
                    os << " [" << r.discrepancy->monomial << "] expected "
                       << r.discrepancy->expected << " got " << r.discrepancy->actual;
                if (r.z_specialized_pass) os << " (z:=1 specialization agrees)";
                ++fail;
                break;
            case CaseStatus::BudgetExceeded:
                os << "budget-exceeded";
                ++skipped;
                break;
        }
        os << "  (" << r.millis << " ms)\n";
    }
    os << pass << " pass, " << fail << " fail, " << skipped << " budget-exceeded\n";
    return os.str();
}

}  // namespace runtx
