// Command-line front end.  Every command prints machine-readable output with
// a fixed key order; see the README for the schemas.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hnstrata/connectivity.hpp"
#include "hnstrata/json_io.hpp"
#include "hnstrata/oracle.hpp"
#include "hnstrata/poset.hpp"

namespace {

using namespace hnstrata;

i64 parse_int(const std::string& text, const std::string& what) {
  i64 value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(errc::parse_error, "invalid integer for " + what + ": '" + text + "'");
  return value;
}

SurfaceBundleSpec parse_surface(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    tokens.push_back(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (tokens.empty()) fail(errc::parse_error, "empty surface spec");

  SurfaceBundleSpec spec;
  if (tokens[0] == "orientable")
    spec.kind = SurfaceBundleSpec::Kind::orientable;
  else if (tokens[0] == "nonorientable")
    spec.kind = SurfaceBundleSpec::Kind::non_orientable;
  else
    fail(errc::parse_error, "surface spec must start with 'orientable' or 'nonorientable'");

  bool have_genus = false, have_rank = false, have_chern = false;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::size_t eq = tokens[i].find('=');
    if (eq == std::string::npos) fail(errc::parse_error, "expected key=value, got '" + tokens[i] + "'");
    const std::string key = tokens[i].substr(0, eq);
    const std::string value = tokens[i].substr(eq + 1);
    if (key == "g" || key == "gt") {
      const bool wants_cover = (key == "gt");
      if (wants_cover != (spec.kind == SurfaceBundleSpec::Kind::non_orientable))
        fail(errc::parse_error, "use g= for orientable surfaces and gt= for non-orientable ones");
      spec.genus = parse_int(value, key);
      have_genus = true;
    } else if (key == "n") {
      spec.rank = parse_int(value, key);
      have_rank = true;
    } else if (key == "k") {
      if (spec.kind == SurfaceBundleSpec::Kind::non_orientable)
        fail(errc::parse_error, "k is not part of a non-orientable spec");
      spec.chern = parse_int(value, key);
      have_chern = true;
    } else if (key == "class") {
      if (spec.kind == SurfaceBundleSpec::Kind::orientable)
        fail(errc::parse_error, "class applies only to non-orientable specs");
      if (value == "plus")
        spec.bundle_class = BundleClass::plus;
      else if (value == "minus")
        spec.bundle_class = BundleClass::minus;
      else
        fail(errc::parse_error, "class must be plus or minus");
    } else {
      fail(errc::parse_error, "unknown surface key '" + key + "'");
    }
  }
  if (!have_genus) fail(errc::parse_error, "surface spec needs a genus (g= or gt=)");
  if (!have_rank) fail(errc::parse_error, "surface spec needs a rank (n=)");
  (void)have_chern;  // k defaults to 0 in orientable mode
  return spec;
}

std::string csv_quote(const std::string& raw) { return "\"" + raw + "\""; }

int run_codim(const std::string& mu_text, i64 genus, const std::string& format) {
  const AdmissibleSequence mu = sequence_from_string(mu_text);
  const CodimensionReport report = codimension(mu, genus);
  if (format == "text") {
    std::cout << "c1  " << report.c1 << "\n"
              << "c2  " << report.c2 << "\n"
              << "c   " << report.c << "\n"
              << "l   " << report.critical_value.str() << "\n";
    return 0;
  }
  ordered_json j;
  j["c1"] = report.c1;
  j["c2"] = report.c2;
  j["c"] = report.c;
  j["l"] = report.critical_value.str();
  std::cout << j.dump() << "\n";
  return 0;
}

int run_enumerate(i64 n, i64 k, i64 genus, i64 bound, const std::string& format) {
  const StratumSet set = enumerate_strata(n, k, genus, bound);
  const bool csv = (format == "csv");
  if (csv) std::cout << "blocks,c1,c2,c,l,path\n";
  for (const AdmissibleSequence& mu : set.members) {
    const CodimensionReport report = codimension(mu, genus);
    const ConvexPath path = to_path(mu);
    if (csv) {
      std::cout << csv_quote(blocks_to_json(mu).dump()) << "," << report.c1 << "," << report.c2
                << "," << report.c << "," << csv_quote(report.critical_value.str()) << ","
                << csv_quote(path_to_json(path).dump()) << "\n";
    } else {
      ordered_json j;
      j["blocks"] = blocks_to_json(mu);
      j["c1"] = report.c1;
      j["c2"] = report.c2;
      j["c"] = report.c;
      j["l"] = report.critical_value.str();
      j["path"] = path_to_json(path);
      std::cout << j.dump() << "\n";
    }
  }
  return 0;
}

int run_linearize(i64 n, i64 k, i64 genus, i64 bound) {
  const StratumSet set = enumerate_strata(n, k, genus, bound);
  const LinearExtension ext = linear_extension(set);
  for (std::size_t i = 0; i < ext.order.size(); ++i) {
    ordered_json j;
    j["index"] = static_cast<i64>(i);
    j["level"] = ext.levels[i];
    j["blocks"] = blocks_to_json(ext.order[i]);
    j["c"] = codimension(ext.order[i], genus).c;
    std::cout << j.dump() << "\n";
  }
  if (!validate_extension(ext)) {
    std::cerr << "error: linear extension failed validation\n";
    return 1;
  }
  return 0;
}

int run_covers(const std::string& mu_text) {
  const AdmissibleSequence mu = sequence_from_string(mu_text);
  for (const AdmissibleSequence& cover : minimal_covers(mu))
    std::cout << blocks_to_json(cover).dump() << "\n";
  return 0;
}

int run_connectivity(const std::string& surface) {
  const SurfaceBundleSpec spec = parse_surface(surface);
  const ConnectivityResult result = connectivity_for(spec);
  std::cout << connectivity_to_json(result).dump() << "\n";
  return 0;
}

int run_verify(const std::string& suite, i64 n_max, i64 k_max, i64 genus_max, i64 bound, i64 n,
               i64 k_bound) {
  auto pick = [](i64 value, i64 fallback) { return value >= 0 ? value : fallback; };
  VerifyReport report;
  if (suite == "cyclic") {
    report = verify_cyclic_sweep(pick(n_max, 12), pick(k_max, 12));
  } else if (suite == "monotone") {
    report = verify_monotone_sweep(pick(n_max, 6), pick(k_max, 6), pick(bound, 20));
  } else if (suite == "reductions") {
    report = verify_reductions(pick(n, 6), pick(k_bound, 6), pick(genus_max, 3));
  } else if (suite == "enumeration") {
    report = verify_enumeration(pick(n_max, 5), pick(k_max, 5), pick(genus_max, 3), pick(bound, 15));
  } else if (suite == "covers") {
    report = verify_covers(pick(n_max, 5), pick(k_max, 5), pick(bound, 20));
  } else {
    fail(errc::parse_error,
         "unknown suite '" + suite + "' (expected cyclic, monotone, reductions, enumeration, covers)");
  }
  std::cout << report_to_json(report).dump() << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of the Harder-Narasimhan / Yang-Mills stratification"};
  app.require_subcommand(1);

  std::string mu_text, format = "json", surface, suite;
  hnstrata::i64 n = 0, k = 0, genus = 1, bound = 1;
  hnstrata::i64 n_max = -1, k_max = -1, genus_max = -1, sweep_bound = -1, red_n = -1, k_bound = -1;

  auto* codim = app.add_subcommand("codim", "codimension and critical value of one sequence");
  codim->add_option("--mu", mu_text, "sequence as JSON [[n1,k1],...]")->required();
  codim->add_option("--genus", genus, "surface genus (>= 1)")->required();
  codim->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "all strata with codimension below a bound");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--genus", genus)->required();
  enumerate->add_option("--bound", bound)->required();
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* linearize = app.add_subcommand("linearize", "dominance-compatible linear order with levels");
  linearize->add_option("--n", n)->required();
  linearize->add_option("--k", k)->required();
  linearize->add_option("--genus", genus)->required();
  linearize->add_option("--bound", bound)->required();

  auto* covers = app.add_subcommand("covers", "minimal covers of a sequence in dominance order");
  covers->add_option("--mu", mu_text, "sequence as JSON [[n1,k1],...]")->required();

  auto* connectivity = app.add_subcommand("connectivity", "connectivity of the central stratum");
  connectivity->add_option("--surface", surface,
                           "e.g. \"orientable,g=2,n=6,k=2\" or \"nonorientable,gt=1,n=4,class=minus\"")
      ->required();

  auto* verify = app.add_subcommand("verify", "run a brute-force verification suite");
  verify->add_option("--suite", suite, "cyclic | monotone | reductions | enumeration | covers")
      ->required();
  verify->add_option("--n-max", n_max);
  verify->add_option("--k-max", k_max);
  verify->add_option("--genus-max", genus_max);
  verify->add_option("--bound", sweep_bound);
  verify->add_option("--n", red_n);
  verify->add_option("--k-bound", k_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*codim) return run_codim(mu_text, genus, format);
    if (*enumerate) return run_enumerate(n, k, genus, bound, format);
    if (*linearize) return run_linearize(n, k, genus, bound);
    if (*covers) return run_covers(mu_text);
    if (*connectivity) return run_connectivity(surface);
    if (*verify) return run_verify(suite, n_max, k_max, genus_max, sweep_bound, red_n, k_bound);
  } catch (const hnstrata::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
