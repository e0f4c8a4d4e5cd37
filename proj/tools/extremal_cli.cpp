// Command-line front end: classification of extremal p.p.a.v., orbit and
// stabilizer queries, stratum dimensions, polarized lattices and cyclic
// cover spectra.
//
// Exit codes: 0 success, 2 invalid input, 3 enumeration cap exceeded,
// 4 polarization search exhausted, 5 internal consistency failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "extremal/error.hpp"
#include "extremal/report.hpp"

namespace {

using extremal::Json;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isolation of extremal principally polarized abelian varieties in Sing A_g"};
  app.set_version_flag("--version", extremal::kVersion);
  app.require_subcommand(1);

  int p = 0, q = 0, g = 0, bound = 5;
  bool with_lattice = false;
  std::uint64_t cap = extremal::kDefaultEnumerationCap;
  std::string format = "json", set_text, mults_text, exponents_text;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  };

  auto* classify = app.add_subcommand("classify", "classify every orbit of CM types for p");
  classify->add_option("--p", p, "odd prime p = 2g+1")->required();
  classify->add_flag("--with-lattice", with_lattice, "attach a polarized lattice and period matrix per class");
  classify->add_option("--bound", bound, "largest polarization search box")->capture_default_str();
  classify->add_option("--cap", cap, "enumeration cap on 2^g")->capture_default_str();
  add_format(classify);

  auto* orbits = app.add_subcommand("orbits", "orbits of CM types under F_p^*");
  orbits->add_option("--p", p)->required();
  orbits->add_option("--cap", cap)->capture_default_str();
  add_format(orbits);

  auto* stab = app.add_subcommand("stabilizer", "isotropy group and verdicts for one CM type");
  stab->add_option("--p", p)->required();
  stab->add_option("--set", set_text, "comma-separated ascending residues")->required();
  add_format(stab);

  auto* dim = app.add_subcommand("dim", "dimension of the stratum with given eigenspace multiplicities");
  dim->add_option("--q", q)->required();
  dim->add_option("--mults", mults_text, "n_0,...,n_{q-1}")->required();
  dim->add_option("--g", g, "ambient dimension (default: sum of multiplicities)");
  add_format(dim);

  auto* polarize = app.add_subcommand("polarize", "search for a principal Riemann form");
  polarize->add_option("--p", p)->required();
  polarize->add_option("--set", set_text)->required();
  polarize->add_option("--bound", bound)->capture_default_str();
  add_format(polarize);

  auto* period = app.add_subcommand("period", "period matrix and automorphism checks");
  period->add_option("--p", p)->required();
  period->add_option("--set", set_text)->required();
  period->add_option("--bound", bound)->capture_default_str();
  add_format(period);

  auto* spectrum = app.add_subcommand("spectrum", "character spectrum of a cyclic p-cover of P^1");
  spectrum->add_option("--p", p)->required();
  spectrum->add_option("--exponents", exponents_text, "branch exponents a_1,...,a_m")->required();
  add_format(spectrum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(extremal::ErrorKind::InvalidInput);
  }

  try {
    Json doc;
    if (*classify) {
      doc = extremal::run_classify(p, {with_lattice, bound, cap});
    } else if (*orbits) {
      doc = extremal::run_orbits(p, cap);
    } else if (*stab) {
      doc = extremal::run_stabilizer(p, extremal::parse_int_list(set_text, true));
    } else if (*dim) {
      doc = extremal::run_dim(q, extremal::parse_int_list(mults_text, false), g);
    } else if (*polarize) {
      doc = extremal::run_polarize(p, extremal::parse_int_list(set_text, true), bound);
    } else if (*period) {
      doc = extremal::run_period(p, extremal::parse_int_list(set_text, true), bound);
    } else if (*spectrum) {
      doc = extremal::run_spectrum(p, extremal::parse_int_list(exponents_text, false));
    }
    std::cout << extremal::render(doc, extremal::parse_format(format));
  } catch (const extremal::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return static_cast<int>(extremal::ErrorKind::InternalConsistency);
  }
  return 0;
}
