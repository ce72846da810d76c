// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: run transforms, enumerate path and partition
// families, run the verification cases, and export triangles.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "runtx/harness.hpp"

using namespace runtx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::vector<BigInt> parse_sequence(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) throw std::invalid_argument("empty sequence entry");
        out.push_back(parse_bigint(item.substr(begin, end - begin + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty sequence");
    return out;
}

std::vector<BigInt> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::vector<BigInt> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        if (line[begin] == '#') continue;
        const auto end = line.find_last_not_of(" \t\r");
        out.push_back(parse_bigint(line.substr(begin, end - begin + 1)));
    }
    if (out.empty()) throw std::invalid_argument("no integers in " + path);
    return out;
}

std::string join_sequence(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    return os.str();
}

std::string sequence_bfile(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << i << ' ' << v[i].get_str() << '\n';
    return os.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << payload;
}

struct VerifyOptions {
    bool all = false;
    std::string case_name;
    std::string family = "all";
    int order = -1;
    int j = 2, m = 0, d = 0, k = 1;
    bool no_flats = false;
    int budget = -1;
    std::string out_path;
};

FamilyId family_by_name(const std::string& name) {
    if (name == "all") return FamilyId::all();
    if (name == "set-partitions" || name == "setpartitions") return FamilyId::set_partitions();
    if (name == "noncrossing") return FamilyId::noncrossing();
    if (name == "nonoverlapping") return FamilyId::nonoverlapping();
    if (name == "cycles" || name == "permutations") return FamilyId::permutation_cycles();
    throw std::invalid_argument("unknown family: " + name);
}

int default_order_for(CaseKind kind, const std::optional<FamilyId>& family) {
    switch (kind) {
        case CaseKind::CatalanTriangle: return 10;
        case CaseKind::TheoremNk: return 7;
        case CaseKind::JDyck: return 6;
        case CaseKind::JMD: return 5;
        case CaseKind::JMDClosedForm: return 5;
        case CaseKind::JDyckIdentities: return 6;
        case CaseKind::RunClosedFamily:
            return family && family->kind() == FamilyId::Kind::SetPartitions ? 8 : 7;
        case CaseKind::BellRemark: return 8;
        case CaseKind::EvenCycles: return 4;
        case CaseKind::SchroederBase: return 5;
        case CaseKind::SchroederRecursion: return 6;
        case CaseKind::H0Identity: return 6;
        case CaseKind::AmdTheorem: return 5;
        case CaseKind::Conjecture: return 5;
    }
    return 5;
}

CaseKind kind_by_name(const std::string& name) {
    if (name == "catalan") return CaseKind::CatalanTriangle;
    if (name == "nk") return CaseKind::TheoremNk;
    if (name == "jdyck") return CaseKind::JDyck;
    if (name == "jmd") return CaseKind::JMD;
    if (name == "jmd-closedform") return CaseKind::JMDClosedForm;
    if (name == "jdyck-identities") return CaseKind::JDyckIdentities;
    if (name == "runclosed") return CaseKind::RunClosedFamily;
    if (name == "bell") return CaseKind::BellRemark;
    if (name == "evencycles") return CaseKind::EvenCycles;
    if (name == "schroeder") return CaseKind::SchroederBase;
    if (name == "schroeder-recursion") return CaseKind::SchroederRecursion;
    if (name == "h0") return CaseKind::H0Identity;
    if (name == "amd") return CaseKind::AmdTheorem;
    if (name == "conjecture") return CaseKind::Conjecture;
    throw std::invalid_argument("unknown case: " + name);
}

int run_verify(const VerifyOptions& opt) {
    std::vector<std::pair<CaseId, int>> selected;
    if (opt.all) {
        selected = default_catalogue();
        if (opt.order >= 0)
            for (auto& [id, order] : selected) order = opt.order;
    } else {
        CaseId id;
        id.kind = kind_by_name(opt.case_name);
        id.j = opt.j, id.m = opt.m, id.d = opt.d, id.k = opt.k;
        id.flats = !opt.no_flats;
        if (id.kind == CaseKind::RunClosedFamily) id.family = family_by_name(opt.family);
        selected.emplace_back(id, opt.order >= 0 ? opt.order
                                                 : default_order_for(id.kind, id.family));
    }

    std::vector<Report> reports;
    reports.reserve(selected.size());
    for (const auto& [id, order] : selected) reports.push_back(run_case(id, order, opt.budget));

    std::ostringstream jsonl;
    for (const auto& r : reports) jsonl << r.to_json() << '\n';
    write_output(opt.out_path, jsonl.str());
    std::cout << summary_table(reports);

    bool any_fail = false, any_budget = false;
    for (const auto& r : reports) {
        any_fail = any_fail || r.status == CaseStatus::Fail;
        any_budget = any_budget || r.status == CaseStatus::BudgetExceeded;
    }
    if (any_budget) std::cerr << "warning: some cases exceeded the enumeration budget\n";
    return any_fail ? kExitVerificationFailure : kExitOk;
}

struct TransformOptions {
    std::string seq;
    std::string file;
    int order = -1;
    std::string format = "pretty";
    std::string out_path;
};

int run_transform_cmd(const TransformOptions& opt) {
    std::vector<BigInt> b = !opt.file.empty() ? read_sequence_file(opt.file)
                                              : parse_sequence(opt.seq);
    const int order = opt.order >= 0 ? opt.order : static_cast<int>(b.size()) - 1;
    if (static_cast<int>(b.size()) < order + 1) {
        std::cerr << "error: need at least " << order + 1 << " sequence entries for order "
                  << order << '\n';
        return kExitUsage;
    }
    Triangle t = to_triangle(run_transform(series_from_sequence(b, order), order));
    std::vector<BigInt> head(b.begin(), b.begin() + order + 1);
    std::vector<BigInt> a = decompose(head);

    std::string payload;
    if (opt.format == "csv") payload = t.to_csv();
    else if (opt.format == "json") payload = t.to_json() + "\n";
    else if (opt.format == "bfile") payload = t.to_bfile();
    else if (opt.format == "pretty") {
        std::ostringstream os;
        for (const auto& row : t.rows) {
            for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k].get_str();
            os << '\n';
        }
        payload = os.str();
    } else {
        std::cerr << "error: unknown format " << opt.format << '\n';
        return kExitUsage;
    }
    write_output(opt.out_path, payload);
    std::cout << "a: " << join_sequence(a) << '\n';
    std::cout << "transform: " << (t.is_nonnegative() ? "nonnegative" : "has negative entries")
              << '\n';
    return kExitOk;
}

struct EnumerateOptions {
    bool dyck = false, schroeder = false, spartitions = false, jdyck = false, jmd = false,
         ufd = false;
    int size = 3;
    int j = 2, m = 0, d = 0;
    bool stats = false;
    std::string family;
    int budget = -1;
};

int run_enumerate(const EnumerateOptions& opt) {
    const int picked = opt.dyck + opt.schroeder + opt.spartitions + opt.jdyck + opt.jmd + opt.ufd;
    if (picked != 1) {
        std::cerr << "error: pick exactly one of --dyck --schroeder --spartitions --jdyck --jmd "
                     "--ufd\n";
        return kExitUsage;
    }
    if (opt.spartitions) {
        std::optional<FamilyId> filter;
        if (!opt.family.empty()) filter = family_by_name(opt.family);
        long total = 0;
        for (const SPartition& p : enumerate_spartitions(opt.size, opt.budget)) {
            if (filter && !family_membership(p, *filter)) continue;
            ++total;
            std::cout << (p.size() == 0 ? "(empty)" : p.to_string());
            if (opt.stats) std::cout << "  size=" << p.size() << " runs=" << p.run_count();
            std::cout << '\n';
        }
        std::cout << "total " << total << '\n';
        return kExitOk;
    }
    PathSpec spec;
    AscentMode mode = AscentMode::All;
    if (opt.dyck) spec = PathSpec{1, 0, 0, false, SizeRule::Downs};
    if (opt.schroeder) spec = PathSpec{1, opt.m, opt.d, true, SizeRule::FlatsPlusDowns};
    if (opt.jdyck) {
        spec = PathSpec{opt.j, 0, 0, false, SizeRule::DownsOverJ};
        mode = AscentMode::HeightModJ;
    }
    if (opt.jmd) {
        spec = PathSpec{opt.j, opt.m, opt.d, false, SizeRule::DownsOverJ};
        mode = AscentMode::HeightModJ;
    }
    if (opt.ufd) {
        spec = PathSpec{opt.j, opt.m, opt.d, true, SizeRule::FloorFlatsPlusDownsOverJ};
        mode = AscentMode::AbscissaModJ;
    }
    long total = 0;
    for (const Path& p : enumerate_paths(spec, opt.size, opt.budget)) {
        ++total;
        std::cout << (p.steps().empty() ? "(empty)" : p.to_string());
        if (opt.stats) {
            std::cout << "  size=" << p.size() << " pyramids=" << p.pyramid_ascent_count(mode);
            auto flats = p.flat_profile();
            if (!flats.empty()) {
                std::cout << " flats={";
                bool first = true;
                for (const auto& [level, count] : flats) {
                    if (!first) std::cout << ',';
                    first = false;
                    std::cout << level << ':' << count;
                }
                std::cout << '}';
            }
        }
        std::cout << '\n';
    }
    std::cout << "total " << total << '\n';
    return kExitOk;
}

struct ExportOptions {
    std::string seq;
    std::string file;
    bool catalan = false;
    int order = 10;
    std::string what = "triangle";
    std::string format = "bfile";
    std::string out_path;
};

int run_export(const ExportOptions& opt) {
    std::vector<BigInt> b;
    if (opt.catalan) b = catalan_numbers(opt.order);
    else if (!opt.file.empty()) b = read_sequence_file(opt.file);
    else if (!opt.seq.empty()) b = parse_sequence(opt.seq);
    else {
        std::cerr << "error: provide --seq, --file, or --catalan\n";
        return kExitUsage;
    }
    if (static_cast<int>(b.size()) < opt.order + 1) {
        std::cerr << "error: need at least " << opt.order + 1 << " sequence entries\n";
        return kExitUsage;
    }
    Triangle t = to_triangle(run_transform(series_from_sequence(b, opt.order), opt.order));

    std::string payload;
    if (opt.what == "triangle") {
        if (opt.format == "bfile") payload = t.to_bfile();
        else if (opt.format == "csv") payload = t.to_csv();
        else if (opt.format == "json") payload = t.to_json() + "\n";
        else {
            std::cerr << "error: unknown format " << opt.format << '\n';
            return kExitUsage;
        }
    } else if (opt.what == "rowsums" || opt.what == "col0") {
        std::vector<BigInt> v = opt.what == "rowsums" ? t.row_sums() : t.column(0);
        payload = opt.format == "csv" ? join_sequence(v) + "\n" : sequence_bfile(v);
    } else {
        std::cerr << "error: unknown export target " << opt.what << '\n';
        return kExitUsage;
    }
    write_output(opt.out_path, payload);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the run transform and its combinatorial models"};
    app.require_subcommand(1);

    TransformOptions topt;
    CLI::App* transform = app.add_subcommand("transform", "transform a sequence into its triangle");
    transform->add_option("--seq", topt.seq, "comma-separated integers");
    transform->add_option("--file", topt.file, "file with one integer per line");
    transform->add_option("--order", topt.order, "truncation order (default: sequence length - 1)");
    transform->add_option("--format", topt.format, "pretty | csv | json | bfile");
    transform->add_option("--out", topt.out_path, "write the triangle to a file");

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "run oracle-vs-transform verification cases");
    verify->add_flag("--all", vopt.all, "run the full case catalogue");
    verify->add_option("--case", vopt.case_name, "case name (catalan, nk, jdyck, jmd, "
                                                 "jmd-closedform, jdyck-identities, runclosed, "
                                                 "bell, evencycles, schroeder, schroeder-recursion, "
                                                 "h0, amd, conjecture)");
    verify->add_option("--family", vopt.family, "family for runclosed (all, set-partitions, "
                                                "noncrossing, nonoverlapping, cycles)");
    verify->add_option("--order", vopt.order, "truncation order");
    verify->add_option("--j", vopt.j, "j parameter");
    verify->add_option("--m", vopt.m, "start height m");
    verify->add_option("--d", vopt.d, "depth d");
    verify->add_option("--k", vopt.k, "k parameter for nk");
    verify->add_flag("--no-flats", vopt.no_flats, "disable flat steps (conjecture)");
    verify->add_option("--budget", vopt.budget, "override the enumeration budget");
    verify->add_option("--out", vopt.out_path, "write JSON-line reports to a file");

    EnumerateOptions eopt;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list a family exhaustively");
    enumerate->add_flag("--dyck", eopt.dyck, "plain nonnegative up-down paths");
    enumerate->add_flag("--schroeder", eopt.schroeder, "paths with flat steps");
    enumerate->add_flag("--spartitions", eopt.spartitions, "set-of-lists partitions");
    enumerate->add_flag("--jdyck", eopt.jdyck, "paths with j-upsteps");
    enumerate->add_flag("--jmd", eopt.jmd, "j-upstep paths from height m with depth d");
    enumerate->add_flag("--ufd", eopt.ufd, "j-upstep paths with flat steps");
    enumerate->add_option("--size", eopt.size, "object size");
    enumerate->add_option("--j", eopt.j, "j parameter");
    enumerate->add_option("--m", eopt.m, "start height m");
    enumerate->add_option("--d", eopt.d, "depth d");
    enumerate->add_flag("--stats", eopt.stats, "print statistics columns");
    enumerate->add_option("--family", eopt.family, "membership filter for --spartitions");
    enumerate->add_option("--budget", eopt.budget, "override the enumeration budget");

    ExportOptions xopt;
    CLI::App* exportc = app.add_subcommand("export", "write a triangle or derived sequence");
    exportc->add_option("--seq", xopt.seq, "comma-separated integers");
    exportc->add_option("--file", xopt.file, "file with one integer per line");
    exportc->add_flag("--catalan", xopt.catalan, "use the catalan numbers as input");
    exportc->add_option("--order", xopt.order, "truncation order");
    exportc->add_option("--what", xopt.what, "triangle | rowsums | col0");
    exportc->add_option("--format", xopt.format, "bfile | csv | json");
    exportc->add_option("--out", xopt.out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*transform) return run_transform_cmd(topt);
        if (*verify) return run_verify(vopt);
        if (*enumerate) return run_enumerate(eopt);
        if (*exportc) return run_export(xopt);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
