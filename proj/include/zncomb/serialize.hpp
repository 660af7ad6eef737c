#pragma once

// JSON and CSV encodings of the library's report types.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zncomb/bounds.hpp"
#include "zncomb/dichotomy.hpp"
#include "zncomb/family_a.hpp"
#include "zncomb/fourier.hpp"

namespace zn {

using Json = nlohmann::ordered_json;

/// Serialized missing-residue lists are truncated to this many entries.
inline constexpr std::size_t kMissingCap = 16;

/// Keys: k, v, actual, ruzsa, energy, olson, olson_applicable, mann,
/// mann_applicable, fourier, full.
Json to_json(const BoundReport& r);
Json to_json(const Finding& f);
Json to_json(const ScanRecord& r);
Json to_json(const CondfStatus& s);
Json to_json(const DichotomyVerdict& d);
Json to_json(const Table1Row& row);

/// "k,energy,energy_bound,coverage_fraction" followed by one line per row.
void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows);

/// Shortest decimal string that reads back as the same double.
std::string format_real(double x);
/// Fixed four decimals, used by every text-mode report.
std::string format_fixed(double x);

}  // namespace zn
