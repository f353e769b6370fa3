#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schublas/bases.hpp"
#include "schublas/composition.hpp"
#include "schublas/errors.hpp"
#include "schublas/expansion.hpp"
#include "schublas/hilbert.hpp"
#include "schublas/limits.hpp"
#include "schublas/permutation.hpp"
#include "schublas/pipedream.hpp"
#include "schublas/polynomial.hpp"
#include "schublas/snp.hpp"
#include "schublas/tableau.hpp"
#include "schublas/verify.hpp"

namespace schublas::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Limits and output format from a JSON config file. Command-line --format
// wins over the file.
void apply_config(const std::string& path, std::string& format,
                  bool format_from_flag) {
  json cfg;
  try {
    cfg = json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("config: ") + e.what());
  }
  if (!cfg.is_object()) fail(ErrorKind::InvalidInput, "config: expected an object");
  for (const auto& [key, value] : cfg.items()) {
    try {
      if (key == "term_limit") {
        limits::set_term_limit(value.get<std::size_t>());
      } else if (key == "step_limit") {
        limits::set_step_limit(value.get<std::size_t>());
      } else if (key == "cache_entries") {
        limits::set_cache_entries(value.get<std::size_t>());
      } else if (key == "parallelism") {
        limits::set_threads(value.get<int>());
      } else if (key == "format") {
        std::string v = value.get<std::string>();
        if (v != "text" && v != "json")
          fail(ErrorKind::InvalidInput, "config: format must be text or json");
        if (!format_from_flag) format = v;
      } else {
        fail(ErrorKind::InvalidInput, "config: unknown key " + key);
      }
    } catch (const json::exception& e) {
      fail(ErrorKind::InvalidInput, "config: bad value for " + key + ": " + e.what());
    }
  }
}

void print_polynomial(std::ostream& out, const Polynomial& f,
                      const std::string& format) {
  if (format == "json") {
    out << json::parse(f.to_json()).dump(2) << "\n";
  } else {
    out << f.to_text() << "\n";
  }
}

json grid_json(const PipeGrid& g, const WeakComposition& weight) {
  json j = json::parse(g.to_json());
  j["weight"] = weight.entries();
  return j;
}

void print_grids(std::ostream& out, const std::vector<PipeGrid>& grids,
                 const std::vector<WeakComposition>& weights,
                 const Polynomial& sum, const std::string& format,
                 bool render) {
  if (format == "json") {
    json j;
    j["count"] = grids.size();
    j["grids"] = json::array();
    for (std::size_t i = 0; i < grids.size(); ++i)
      j["grids"].push_back(grid_json(grids[i], weights[i]));
    j["sum"] = json::parse(sum.to_json());
    out << j.dump(2) << "\n";
    return;
  }
  out << "count " << grids.size() << "\n";
  for (std::size_t i = 0; i < grids.size(); ++i) {
    out << "grid " << i + 1 << " weight " << weights[i].str() << "\n";
    if (render)
      for (const std::string& row : grids[i].render_ascii()) out << row << "\n";
  }
  out << "sum " << sum.to_text() << "\n";
}

void print_expansion(std::ostream& out, const SchubertExpansion& e,
                     const std::string& format) {
  if (format == "json") {
    out << json::parse(expansion_to_json(e)).dump(2) << "\n";
  } else {
    out << expansion_to_text(e) << "\n";
  }
}

void print_expansion(std::ostream& out, const CompositionExpansion& e,
                     const std::string& label, const std::string& basis,
                     const std::string& format) {
  if (format == "json") {
    out << json::parse(expansion_to_json(e, basis)).dump(2) << "\n";
  } else {
    out << expansion_to_text(e, label) << "\n";
  }
}

struct Options {
  std::string format = "text";
  std::string config;
  std::string perm;
  std::string comp;
  std::string method = "recursive";
  std::string render;
  std::string input;
  std::string basis = "schubert";
  std::string left;
  std::string right;
  std::string alpha;
  std::string gamma;
  std::string delta;
  int m1 = 0;
  int m2 = 0;
  int n = 0;
  int m = 0;
  int max_degree = 0;
  std::string suite = "all";
  int max_n = 4;
  std::string support_schubert;
  std::string support_toplascoux;
};

// Every subcommand shares --format so it can appear before or after the
// subcommand name.
CLI::Option* add_format(CLI::App* app, Options& opt) {
  return app
      ->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Schubert, key, and top Lascoux polynomial calculator"};
  app.require_subcommand(1);
  CLI::Option* root_format = add_format(&app, opt);
  app.add_option("--config", opt.config, "JSON config with limits and defaults");

  std::vector<CLI::Option*> format_opts{root_format};

  CLI::App* schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  schubert->add_option("--perm", opt.perm, "Permutation in one-line notation, e.g. 2,1,4,3")
      ->required();
  format_opts.push_back(add_format(schubert, opt));

  CLI::App* key = app.add_subcommand("key", "Key polynomial of a weak composition");
  key->add_option("--comp", opt.comp, "Weak composition, e.g. 0,2,1")->required();
  format_opts.push_back(add_format(key, opt));

  CLI::App* toplascoux =
      app.add_subcommand("toplascoux", "Top Lascoux polynomial of a snowy weak composition");
  toplascoux->add_option("--comp", opt.comp, "Snowy weak composition")->required();
  toplascoux
      ->add_option("--method", opt.method,
                   "Computation route: operator recursion, grid enumeration, or "
                   "reverse complement transfer")
      ->check(CLI::IsMember({"recursive", "bpd", "reverse"}));
  format_opts.push_back(add_format(toplascoux, opt));

  CLI::App* bpd = app.add_subcommand("bpd", "Bumpless pipe dreams of a permutation");
  bpd->add_option("--perm", opt.perm, "Permutation in one-line notation")->required();
  bpd->add_option("--render", opt.render, "Also draw each grid")
      ->check(CLI::IsMember({"ascii"}));
  format_opts.push_back(add_format(bpd, opt));

  CLI::App* ltbpd =
      app.add_subcommand("ltbpd", "Left-to-top pipe dreams of a snowy weak composition");
  ltbpd->add_option("--comp", opt.comp, "Snowy weak composition")->required();
  ltbpd->add_option("--render", opt.render, "Also draw each grid")
      ->check(CLI::IsMember({"ascii"}));
  format_opts.push_back(add_format(ltbpd, opt));

  CLI::App* support = app.add_subcommand("support", "Monomial support from tableaux");
  CLI::Option_group* which = support->add_option_group("source");
  which->add_option("--schubert", opt.support_schubert, "Permutation in one-line notation");
  which->add_option("--toplascoux", opt.support_toplascoux, "Snowy weak composition");
  which->require_option(1);
  format_opts.push_back(add_format(support, opt));

  CLI::App* snp = app.add_subcommand("snp", "Saturated support check for a polynomial");
  snp->add_option("--input", opt.input, "JSON polynomial file")
      ->required()
      ->check(CLI::ExistingFile);
  format_opts.push_back(add_format(snp, opt));

  CLI::App* product = app.add_subcommand("product", "Expand a product in the same basis");
  product->add_option("--basis", opt.basis, "Basis of the factors and the expansion")
      ->check(CLI::IsMember({"schubert", "key", "toplascoux"}));
  product->add_option("--left", opt.left, "Left factor index")->required();
  product->add_option("--right", opt.right, "Right factor index")->required();
  format_opts.push_back(add_format(product, opt));

  CLI::App* structconst = app.add_subcommand(
      "structconst", "Top Lascoux structure constants via Schubert constants");
  structconst->add_option("--alpha", opt.alpha, "First snowy weak composition")->required();
  structconst->add_option("--gamma", opt.gamma, "Second snowy weak composition")->required();
  structconst->add_option("--m1", opt.m1, "Box height for alpha")
      ->required()
      ->check(CLI::PositiveNumber);
  structconst->add_option("--m2", opt.m2, "Box height for gamma")
      ->required()
      ->check(CLI::PositiveNumber);
  structconst->add_option("--n", opt.n, "Box width (number of parts)")
      ->required()
      ->check(CLI::PositiveNumber);
  structconst->add_option("--delta", opt.delta,
                          "Single snowy index; omit to compare all constants");
  format_opts.push_back(add_format(structconst, opt));

  CLI::App* keyexpand =
      app.add_subcommand("keyexpand", "Key expansion of a top Lascoux polynomial");
  keyexpand->add_option("--comp", opt.comp, "Snowy weak composition")->required();
  keyexpand->add_option("--m", opt.m, "Box height")->required()->check(CLI::PositiveNumber);
  keyexpand->add_option("--n", opt.n, "Box width")->required()->check(CLI::PositiveNumber);
  format_opts.push_back(add_format(keyexpand, opt));

  CLI::App* hilbert =
      app.add_subcommand("hilbert", "Degree counts of snowy weak compositions");
  hilbert->add_option("--max-degree", opt.max_degree, "Largest degree to report")
      ->required()
      ->check(CLI::NonNegativeNumber);
  format_opts.push_back(add_format(hilbert, opt));

  CLI::App* verify = app.add_subcommand("verify", "Run cross-check suites");
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  verify->add_option("--suite", opt.suite, "Suite name or all")
      ->check(CLI::IsMember(suites));
  verify->add_option("--max-n", opt.max_n, "Bound for exhaustive sweeps")
      ->check(CLI::PositiveNumber);
  format_opts.push_back(add_format(verify, opt));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    bool format_from_flag = std::any_of(
        format_opts.begin(), format_opts.end(),
        [](const CLI::Option* o) { return o->count() > 0; });
    if (!opt.config.empty()) apply_config(opt.config, opt.format, format_from_flag);

    if (schubert->parsed()) {
      print_polynomial(out, schubert_polynomial(Permutation::parse(opt.perm)), opt.format);
    } else if (key->parsed()) {
      print_polynomial(out, key_polynomial(WeakComposition::parse(opt.comp)), opt.format);
    } else if (toplascoux->parsed()) {
      WeakComposition alpha = WeakComposition::parse(opt.comp);
      Polynomial f;
      if (opt.method == "bpd") {
        f = ltbpd_polynomial(alpha);
      } else if (opt.method == "reverse") {
        int m = std::max(alpha.max_entry(), 1);
        int n = std::max(alpha.size(), 1);
        f = top_lascoux_via_reverse(alpha, m, n);
      } else {
        f = top_lascoux_polynomial(alpha);
      }
      print_polynomial(out, f, opt.format);
    } else if (bpd->parsed()) {
      Permutation w = Permutation::parse(opt.perm);
      std::vector<PipeGrid> grids = bpd_list(w);
      std::vector<WeakComposition> weights;
      Polynomial sum;
      for (const PipeGrid& g : grids) {
        weights.push_back(bpd_weight(g));
        sum += Polynomial::monomial(weights.back());
      }
      print_grids(out, grids, weights, sum, opt.format, opt.render == "ascii");
    } else if (ltbpd->parsed()) {
      WeakComposition alpha = WeakComposition::parse(opt.comp);
      std::vector<PipeGrid> grids = ltbpd_list(alpha);
      std::vector<WeakComposition> weights;
      Polynomial sum;
      for (const PipeGrid& g : grids) {
        weights.push_back(ltbpd_weight(g));
        sum += Polynomial::monomial(weights.back());
      }
      print_grids(out, grids, weights, sum, opt.format, opt.render == "ascii");
    } else if (support->parsed()) {
      std::vector<WeakComposition> weights =
          opt.support_schubert.empty()
              ? top_lascoux_support(WeakComposition::parse(opt.support_toplascoux))
              : schubert_support(Permutation::parse(opt.support_schubert));
      if (opt.format == "json") {
        json j;
        j["weights"] = json::array();
        for (const WeakComposition& w : weights) j["weights"].push_back(w.entries());
        out << j.dump(2) << "\n";
      } else {
        for (const WeakComposition& w : weights) out << w.str() << "\n";
      }
    } else if (snp->parsed()) {
      Polynomial f = Polynomial::from_json(read_file(opt.input));
      SnpReport report = check_snp(f);
      if (opt.format == "json") {
        json j;
        j["saturated"] = report.saturated;
        j["witness"] = report.witness ? json(report.witness->entries()) : json(nullptr);
        j["candidates_checked"] = report.candidates_checked;
        out << j.dump(2) << "\n";
      } else if (report.saturated) {
        out << "saturated (" << report.candidates_checked << " candidates checked)\n";
      } else {
        out << "not saturated, missing exponent " << report.witness->str() << " ("
            << report.candidates_checked << " candidates checked)\n";
      }
      return report.saturated ? 0 : 1;
    } else if (product->parsed()) {
      if (opt.basis == "schubert") {
        SchubertExpansion e = schubert_product_expansion(Permutation::parse(opt.left),
                                                         Permutation::parse(opt.right));
        print_expansion(out, e, opt.format);
      } else if (opt.basis == "key") {
        Polynomial f = key_polynomial(WeakComposition::parse(opt.left)) *
                       key_polynomial(WeakComposition::parse(opt.right));
        print_expansion(out, expand_in_key(f), "K", "key", opt.format);
      } else {
        CompositionExpansion e = top_lascoux_product_expansion(
            WeakComposition::parse(opt.left), WeakComposition::parse(opt.right));
        print_expansion(out, e, "L", "toplascoux", opt.format);
      }
    } else if (structconst->parsed()) {
      WeakComposition alpha = WeakComposition::parse(opt.alpha);
      WeakComposition gamma = WeakComposition::parse(opt.gamma);
      if (!opt.delta.empty()) {
        Rational d = top_lascoux_structure_constant(alpha, gamma,
                                                    WeakComposition::parse(opt.delta),
                                                    opt.m1, opt.m2, opt.n);
        if (opt.format == "json") {
          json j;
          j["alpha"] = alpha.entries();
          j["gamma"] = gamma.entries();
          j["delta"] = WeakComposition::parse(opt.delta).entries();
          j["m1"] = opt.m1;
          j["m2"] = opt.m2;
          j["n"] = opt.n;
          j["coeff"] = rational_str(d);
          out << j.dump(2) << "\n";
        } else {
          out << rational_str(d) << "\n";
        }
      } else {
        StructureReport report =
            top_lascoux_structure_report(alpha, gamma, opt.m1, opt.m2, opt.n);
        if (opt.format == "json") {
          json j;
          j["u"] = report.u.one_line();
          j["v"] = report.v.one_line();
          j["rows"] = json::array();
          for (const StructureRow& row : report.rows) {
            json r;
            r["delta"] = row.delta.entries();
            r["w"] = row.w.one_line();
            r["d"] = rational_str(row.d);
            r["c"] = rational_str(row.c);
            r["equal"] = row.equal;
            j["rows"].push_back(r);
          }
          j["all_equal"] = report.all_equal;
          out << j.dump(2) << "\n";
        } else {
          out << "u " << report.u.str() << "\n";
          out << "v " << report.v.str() << "\n";
          for (const StructureRow& row : report.rows) {
            out << "delta=" << row.delta.str() << " w=" << row.w.str()
                << " d=" << rational_str(row.d) << " c=" << rational_str(row.c)
                << (row.equal ? " equal" : " DIFFER") << "\n";
          }
          out << (report.all_equal ? "all equal" : "MISMATCH") << "\n";
        }
        return report.all_equal ? 0 : 1;
      }
    } else if (keyexpand->parsed()) {
      CompositionExpansion e =
          key_expand_top_lascoux(WeakComposition::parse(opt.comp), opt.m, opt.n);
      print_expansion(out, e, "K", "key", opt.format);
    } else if (hilbert->parsed()) {
      std::vector<Integer> series = snowy_degree_series(opt.max_degree);
      if (opt.format == "json") {
        json j;
        j["coefficients"] = json::array();
        for (const Integer& c : series) j["coefficients"].push_back(c.str());
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < series.size(); ++i)
          out << (i ? ", " : "") << series[i].str();
        out << "\n";
      }
    } else if (verify->parsed()) {
      VerifyReport report = run_verify_suite(opt.suite, opt.max_n);
      out << (opt.format == "json" ? report.to_json() + "\n" : report.to_text());
      return report.all_passed() ? 0 : 1;
    }
  } catch (const SchubError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceLimit ? 3 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace schublas::cli
