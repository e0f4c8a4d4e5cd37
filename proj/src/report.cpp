#include "extremal/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <sstream>

#include "extremal/error.hpp"

namespace extremal {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw Error(ErrorKind::InvalidInput, "unknown format '" + name + "'");
}

std::vector<int> parse_int_list(const std::string& text, bool ascending) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw Error(ErrorKind::InvalidInput, "malformed integer list '" + text + "'");
    if (ascending && !out.empty() && value <= out.back())
      throw Error(ErrorKind::InvalidInput, "list '" + text + "' is not strictly ascending");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Json cm_type_json(const CmType& set) {
  return Json{{"p", set.ctx().p()}, {"set", set.members()}};
}

Json orbit_class_json(const OrbitClass& cls) {
  return Json{{"canonical", cls.canonical.members()},
              {"orbit_size", cls.orbit_size},
              {"stabilizer", cls.stabilizer.elements},
              {"stabilizer_order", cls.stabilizer.order}};
}

Json stratum_json(const StratumReport& s) {
  return Json{{"q", s.q},
              {"theta", s.theta},
              {"multiplicities", s.profile.multiplicities},
              {"dim", s.dimension},
              {"dim_lower_bound", 1},
              {"dim_source", "formula"}};
}

Json classification_row(const PrimeContext& ctx, const OrbitClass& cls) {
  Json strata = Json::array();
  for (const auto& s : containing_strata(ctx, cls.canonical)) strata.push_back(stratum_json(s));
  const bool isolated = is_isolated(ctx, cls.canonical);
  if (isolated != cls.stabilizer.trivial() || isolated != strata.empty())
    throw Error(ErrorKind::InternalConsistency, "isolation verdicts disagree");
  return Json{{"canonical", cls.canonical.members()},
              {"orbit_size", cls.orbit_size},
              {"isolated", isolated},
              {"simple", is_simple(ctx, cls.canonical)},
              {"sum_mod_p", cls.canonical.sum_mod_p()},
              {"stabilizer", cls.stabilizer.elements},
              {"stabilizer_order", cls.stabilizer.order},
              {"containing_strata", strata}};
}

namespace {

Json complex_part(const Eigen::MatrixXcd& m, bool imaginary) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imaginary ? m(i, j).imag() : m(i, j).real());
    rows.push_back(row);
  }
  return rows;
}

Json bigint_json(const BigInt& v) {
  if (abs(v) <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
  return v.str();
}

PrimeContext context_for_lattice(int p) {
  PrimeContext ctx(p);
  if (p > 31)
    throw Error(ErrorKind::InvalidInput, "period computations are supported for p <= 31");
  return ctx;
}

}  // namespace

Json lattice_json(const PolarizationForm& pol, const PeriodData& data,
                  const AutomorphismReport& checks, int bound) {
  return Json{{"p", data.ctx.p()},
              {"set", data.cm_type.members()},
              {"bound", bound},
              {"c", pol.c},
              {"pfaffian", bigint_json(pol.pfaffian)},
              {"tau_re", complex_part(data.tau, false)},
              {"tau_im", complex_part(data.tau, true)},
              {"block_swapped", data.block_swapped},
              {"checks",
               {{"MEM", checks.preserves_form},
                {"Rp", checks.order_p},
                {"symplectic", checks.symplectic},
                {"fixes_tau", checks.fixes_tau},
                {"spectrum", checks.spectrum}}}};
}

std::pair<PolarizationForm, int> widening_polarization(const PrimeContext& ctx, const CmType& set,
                                                       int max_bound) {
  if (max_bound < 1) throw Error(ErrorKind::InvalidInput, "search bound must be at least 1");
  for (int b = 1;; ++b) {
    try {
      return {find_polarization(ctx, set, b), b};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PolarizationExhausted || b >= max_bound) throw;
    }
  }
}

namespace {

Json realize(const PrimeContext& ctx, const CmType& set, int bound) {
  auto [pol, used] = widening_polarization(ctx, set, bound);
  const PeriodData data = period_matrix(embed(ctx, set), pol);
  const AutomorphismReport checks = automorphism_check(data);
  if (!checks.all())
    throw Error(ErrorKind::InternalConsistency, "automorphism checks failed for the period point");
  return lattice_json(pol, data, checks, used);
}

}  // namespace

Json run_classify(int p, const ClassifyOptions& options) {
  const PrimeContext ctx(p);
  if (options.with_lattice) context_for_lattice(p);
  const auto classes = orbit_classes(ctx, options.cap);
  const BigInt burnside = burnside_count(ctx);
  if (burnside != classes.size())
    throw Error(ErrorKind::InternalConsistency, "Burnside count " + burnside.str() +
                                                    " disagrees with " + std::to_string(classes.size()) +
                                                    " orbits");
  Json rows = Json::array();
  for (const auto& cls : classes) {
    Json row = classification_row(ctx, cls);
    if (options.with_lattice) row["lattice"] = realize(ctx, cls.canonical, options.bound);
    rows.push_back(std::move(row));
  }
  return Json{{"version", kVersion},
              {"p", p},
              {"g", ctx.g()},
              {"burnside_count", bigint_json(burnside)},
              {"classes", rows}};
}

Json run_orbits(int p, std::uint64_t cap) {
  const PrimeContext ctx(p);
  Json rows = Json::array();
  for (const auto& cls : orbit_classes(ctx, cap)) rows.push_back(orbit_class_json(cls));
  return Json{{"version", kVersion}, {"p", p}, {"g", ctx.g()}, {"classes", rows}};
}

Json run_stabilizer(int p, const std::vector<int>& set) {
  const PrimeContext ctx(p);
  const CmType s(ctx, set);
  const Stabilizer h = stabilizer(ctx, s);
  Json strata = Json::array();
  for (const auto& st : containing_strata(ctx, s)) strata.push_back(stratum_json(st));
  return Json{{"version", kVersion},
              {"p", p},
              {"set", s.members()},
              {"canonical", canonical_form(ctx, s).members()},
              {"stabilizer", h.elements},
              {"stabilizer_order", h.order},
              {"generator", h.generator},
              {"isolated", h.trivial()},
              {"simple", h.trivial()},
              {"sum_mod_p", s.sum_mod_p()},
              {"sum_criterion", sum_criterion(ctx, s) == SumVerdict::GuaranteedTrivial
                                    ? "guaranteed_trivial"
                                    : "inconclusive"},
              {"containing_strata", strata}};
}

Json run_dim(int q, const std::vector<int>& multiplicities, int g) {
  SpectrumProfile profile{q, g, multiplicities};
  if (g <= 0) {
    profile.g = 0;
    for (int m : multiplicities) profile.g += m;
  }
  return Json{{"version", kVersion},
              {"q", q},
              {"g", profile.g},
              {"multiplicities", multiplicities},
              {"dim", stratum_dimension(profile)}};
}

Json run_polarize(int p, const std::vector<int>& set, int bound) {
  const PrimeContext ctx(p);
  const CmType s(ctx, set);
  const PolarizationForm pol = find_polarization(ctx, s, bound);
  return Json{{"version", kVersion},
              {"p", p},
              {"set", s.members()},
              {"bound", bound},
              {"c", pol.c},
              {"pfaffian", bigint_json(pol.pfaffian)},
              {"alpha_imag", pol.alpha_imag}};
}

Json run_period(int p, const std::vector<int>& set, int bound) {
  const PrimeContext ctx = context_for_lattice(p);
  Json doc{{"version", kVersion}, {"p", p}, {"set", CmType(ctx, set).members()}};
  doc.update(realize(ctx, CmType(ctx, set), bound));
  return doc;
}

Json run_spectrum(int p, const std::vector<int>& exponents) {
  const PrimeContext ctx(p);
  const CyclicCoverSpec spec(ctx, exponents);
  const std::vector<int> mult = cw_spectrum(spec);
  const int genus = cover_genus(spec);
  int total = 0;
  for (int m : mult) total += m;
  if (total != genus)
    throw Error(ErrorKind::InternalConsistency, "spectrum does not sum to the genus");
  const ResidueSet support = spectrum_support(mult);
  Json doc{{"version", kVersion},
           {"p", p},
           {"exponents", exponents},
           {"genus", genus},
           {"multiplicities", std::vector<int>(mult.begin() + 1, mult.end())},
           {"support", support}};
  if (is_cm_type(ctx, support)) {
    const SpectrumClass cls = spectrum_class(ctx, support);
    doc["class_canonical"] = cls.canonical.members();
    doc["isolated"] = cls.isolated;
  } else {
    doc["class_canonical"] = nullptr;
    doc["isolated"] = nullptr;
  }
  return doc;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void write_scalar(std::ostringstream& os, const Json& j) {
  if (j.is_number_float())
    os << format_double(j.get<double>());
  else
    os << j.dump();
}

void write_compact(std::ostringstream& os, const Json& j) {
  if (j.is_array()) {
    os << '[';
    bool first = true;
    for (const auto& v : j) {
      if (!first) os << ',';
      first = false;
      write_compact(os, v);
    }
    os << ']';
  } else if (j.is_object()) {
    os << '{';
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) os << ',';
      first = false;
      os << Json(k).dump() << ':';
      write_compact(os, v);
    }
    os << '}';
  } else {
    write_scalar(os, j);
  }
}

void write_pretty(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_array()) {
    if (j.empty() || std::all_of(j.begin(), j.end(), scalar)) {
      write_compact(os, j);
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write_pretty(os, j[i], depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close << ']';
  } else if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << pad << Json(k).dump() << ": ";
      write_pretty(os, v, depth + 1);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << close << '}';
  } else {
    write_scalar(os, j);
  }
}

std::string cell_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  std::ostringstream os;
  write_compact(os, j);
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string write_json(const Json& doc) {
  std::ostringstream os;
  write_pretty(os, doc, 0);
  os << '\n';
  return os.str();
}

std::string render(const Json& doc, Format format) {
  if (format == Format::Json) return write_json(doc);

  Json rows;
  std::string preamble = "# ";
  if (doc.is_object() && doc.contains("classes")) {
    rows = doc["classes"];
    preamble += doc.value("version", std::string(kVersion));
    for (const char* key : {"p", "g", "burnside_count"})
      if (doc.contains(key)) preamble += std::string(" ") + key + "=" + cell_text(doc[key]);
  } else if (doc.is_array()) {
    rows = doc;
    preamble += kVersion;
  } else {
    Json row = doc;
    preamble += row.value("version", std::string(kVersion));
    row.erase("version");
    rows = Json::array({row});
  }

  std::vector<std::string> header;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);

  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& k : header) line.push_back(row.contains(k) ? cell_text(row[k]) : "");
    cells.push_back(std::move(line));
  }

  std::ostringstream os;
  os << preamble << '\n';
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_escape(header[i]);
    os << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_escape(line[i]);
      os << '\n';
    }
    return os.str();
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = header[i].size();
    for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << text << '\n';
  };
  emit(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : cells) emit(line);
  return os.str();
}

}  // namespace extremal
