// SPDX-License-Identifier: Apache-2.0
#ifndef RUNTX_HARNESS_HPP
#define RUNTX_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "runtx/spartitions.hpp"
#include "runtx/transform.hpp"

namespace runtx {

enum class CaseKind {
    CatalanTriangle,
    TheoremNk,
    JDyck,
    JMD,
    JMDClosedForm,
    JDyckIdentities,
    RunClosedFamily,
    BellRemark,
    EvenCycles,
    SchroederBase,
    SchroederRecursion,
    H0Identity,
    AmdTheorem,
    Conjecture
};

struct CaseId {
    CaseKind kind = CaseKind::CatalanTriangle;
    int j = 1, m = 0, d = 0, k = 0;
    std::optional<FamilyId> family;
    bool flats = true;  // Conjecture only: whether flat steps are enabled

    std::string name() const;
};

enum class CaseStatus { Pass, Fail, BudgetExceeded };

struct Discrepancy {
    int x_power = 0;
    std::string monomial;
    std::string expected;  // oracle side
    std::string actual;    // transform side
};

struct Report {
    CaseId id;
    int order = 0;
    CaseStatus status = CaseStatus::Pass;
    std::optional<Discrepancy> discrepancy;
    // Set when the full z-tracked comparison fails but the z := 1
    // specialization agrees.
    bool z_specialized_pass = false;
    long millis = 0;

    bool passed() const { return status == CaseStatus::Pass; }
    std::string to_json() const;  // one JSON object per line
};

// Computes the oracle distribution for the case, specializes y := 1,
// applies the run transform and compares coefficient by coefficient.
Report run_case(const CaseId& id, int order, int budget = -1);

// Brute-force (j,m,d) distribution against the closed form assembled from
// the j-Dyck base series.
Report closed_form_check_jmd(int j, int m, int d, int order, int budget = -1);

// Series identities satisfied by the brute-force j-Dyck residue series.
Report jdyck_identity_check(int j, int order, int budget = -1);

// The recursion satisfied by the flat-step distribution with level marks.
Report schroeder_recursion_check(int order, int budget = -1);

// Paths that begin with a pyramid: H0 = x y F / (1 - x).
Report h0_identity_check(int order, int budget = -1);

// Full grid of Conjecture cases (flats on, plus flat-free variants when
// include_flat_free). Reports come back in grid order.
std::vector<Report> conjecture_scan(const std::vector<int>& js, const std::vector<int>& ms,
                                    const std::vector<int>& ds, int order,
                                    bool include_flat_free = true, int budget = -1);

// The named case catalogue with per-case default orders.
std::vector<std::pair<CaseId, int>> default_catalogue();

// Lines of a human-readable summary table.
std::string summary_table(const std::vector<Report>& reports);

}  // namespace runtx

#endif
