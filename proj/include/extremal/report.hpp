#pragma once

// Report assembly behind the command-line tool. Every run_* function returns
// an ordered JSON document; render() turns it into JSON, CSV or a table.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "extremal/cm_lattice.hpp"
#include "extremal/curve_spectra.hpp"

namespace extremal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "extremal 0.1.0";

enum class Format { Json, Csv, Table };

/// "json" | "csv" | "table"; throws Error(InvalidInput) otherwise.
Format parse_format(const std::string& name);

/// Parses "1,2,3" into integers. With `ascending`, the list must be strictly
/// increasing. Throws Error(InvalidInput) on malformed text.
std::vector<int> parse_int_list(const std::string& text, bool ascending);

Json cm_type_json(const CmType& set);
Json orbit_class_json(const OrbitClass& cls);
/// Classification row: orbit data merged with the isolation verdicts.
Json classification_row(const PrimeContext& ctx, const OrbitClass& cls);
Json stratum_json(const StratumReport& stratum);
Json lattice_json(const PolarizationForm& pol, const PeriodData& data,
                  const AutomorphismReport& checks, int bound);

struct ClassifyOptions {
  bool with_lattice = false;
  int bound = 5;  // widest polarization search box tried
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// Enumerate, form orbits, classify, and optionally realize each class as a
/// polarized lattice. The Burnside count must match the orbit count.
Json run_classify(int p, const ClassifyOptions& options);
Json run_orbits(int p, std::uint64_t cap = kDefaultEnumerationCap);
Json run_stabilizer(int p, const std::vector<int>& set);
/// g defaults to the sum of the multiplicities when not positive.
Json run_dim(int q, const std::vector<int>& multiplicities, int g = 0);
Json run_polarize(int p, const std::vector<int>& set, int bound);
/// Polarization found by widening the box 1..bound, then the period point.
Json run_period(int p, const std::vector<int>& set, int bound);
Json run_spectrum(int p, const std::vector<int>& exponents);

/// Smallest-box polarization, trying bounds 1..max_bound in turn.
std::pair<PolarizationForm, int> widening_polarization(const PrimeContext& ctx, const CmType& set,
                                                       int max_bound);

/// Deterministic JSON text; floating-point values carry 17 significant digits.
std::string write_json(const Json& doc);

/// Rows are doc["classes"] when present, the elements of an array document,
/// or the document itself.
std::string render(const Json& doc, Format format);

}  // namespace extremal
