#include "zncomb/serialize.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace zn {

Json to_json(const BoundReport& r) {
    return Json{
        {"k", r.k},
        {"v", r.v},
        {"actual", r.actual},
        {"ruzsa", r.ruzsa},
        {"energy", r.energy},
        {"olson", r.olson},
        {"olson_applicable", r.olson_applicable},
        {"mann", r.mann},
        {"mann_applicable", r.mann_applicable},
        {"fourier", r.fourier},
        {"full", r.full},
    };
}

Json to_json(const Finding& f) {
    return Json{{"finding", f.claim}, {"k", f.k}, {"witness", f.witness}};
}

Json to_json(const ScanRecord& r) {
    Json findings = Json::array();
    for (const Finding& f : r.findings) findings.push_back(to_json(f));
    return Json{
        {"k", r.k},
        {"condf_overall", r.condf_overall},
        {"failing_units", r.failing_units},
        {"min_sumset_size", r.min_sumset_size},
        {"mann_empty", r.mann_empty},
        {"dichotomy_verdict", r.dichotomy_verdict},
        {"stabilizer_size", r.stabilizer_size},
        {"polarity_count", r.polarity_count},
        {"energy", r.energy},
        {"energy_matches_poly", r.energy_matches_poly},
        {"findings", std::move(findings)},
    };
}

Json to_json(const CondfStatus& s) {
    Json units = Json::array();
    for (const UnitCoverage& u : s.units) {
        const auto shown = std::min(u.missing.size(), kMissingCap);
        units.push_back(Json{
            {"v", u.v},
            {"covers", u.covers},
            {"sumset_size", u.sumset_size},
            {"missing_count", u.missing.size()},
            {"missing", std::vector<Residue>(u.missing.begin(), u.missing.begin() + shown)},
        });
    }
    return Json{{"k", s.k}, {"overall", s.overall}, {"units", std::move(units)}};
}

Json to_json(const DichotomyVerdict& d) {
    return Json{
        {"verdict", d.verdict},
        {"polarity", d.polarity ? Json(d.polarity->to_string()) : Json(nullptr)},
        {"stabilizer_size", d.stabilizer_size},
        {"polarity_count", d.polarity_count},
        {"reason", d.reason},
    };
}

Json to_json(const Table1Row& row) {
    return Json{
        {"k", row.k},
        {"energy", row.energy},
        {"energy_bound", row.energy_bound},
        {"coverage_fraction", row.coverage_fraction},
    };
}

void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows) {
    out << "k,energy,energy_bound,coverage_fraction\n";
    for (const Table1Row& r : rows) {
        out << fmt::format("{},{},{},{}\n", r.k, r.energy, format_real(r.energy_bound),
                           format_real(r.coverage_fraction));
    }
}

std::string format_real(double x) { return fmt::format("{}", x); }

std::string format_fixed(double x) { return fmt::format("{:.4f}", x); }

}  // namespace zn
