#include "treeub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "treeub/relaxation.hpp"

namespace treeub::cli {

std::string format_real(double value) {
  std::ostringstream os;
  os << std::setprecision(12) << value;
  return os.str();
}

namespace {

std::string join_witnesses(const std::vector<StarSignature>& ws, bool tuples) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += tuples ? ", " : ";";
    out += tuples ? ws[i].to_tuple() : ws[i].to_string();
  }
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad real '" + item + "' in '" + text + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ValidationError("bad real '" + item + "' in '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("expected comma-separated reals");
  return out;
}

std::string join_reals(std::span<const double> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_real(xs[i]);
  }
  return out;
}

}  // namespace

std::string csv_header(bool with_all_trees) {
  return with_all_trees ? "n,max_ub,witnesses,all_trees_max_ub,dominance" : "n,max_ub,witnesses";
}

std::string csv_row(const MaximizerRecord& record) {
  return std::to_string(record.order) + "," + std::to_string(record.max_ub) + ",\"" +
         join_witnesses(record.witnesses, false) + "\"";
}

std::string csv_row(const DominanceReport& report) {
  return csv_row(report.stars) + "," + std::to_string(report.all_trees.max_ub) + "," +
         (report.holds ? "true" : "false");
}

std::string markdown_header(bool with_all_trees) {
  return with_all_trees ? "| n | max uB | maximizers | all trees max uB | dominance |\n"
                          "|---|---|---|---|---|"
                        : "| n | max uB | maximizers |\n|---|---|---|";
}

std::string markdown_row(const MaximizerRecord& record) {
  return "| " + std::to_string(record.order) + " | " + std::to_string(record.max_ub) + " | " +
         join_witnesses(record.witnesses, true) + " |";
}

std::string markdown_row(const DominanceReport& report) {
  return markdown_row(report.stars) + " " + std::to_string(report.all_trees.max_ub) + " | " +
         (report.holds ? "yes" : "no") + " |";
}

std::vector<StarSignature> parse_witnesses(const std::string& field) {
  std::string body = field;
  if (body.size() >= 2 && body.front() == '"' && body.back() == '"') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<StarSignature> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(StarSignature::parse(item));
  if (out.empty()) throw ValidationError("empty witness list");
  return out;
}

namespace {

int cmd_ub(const std::string& file, const std::string& star, std::ostream& out) {
  if (file.empty() == star.empty()) {
    throw ValidationError("ub: give exactly one of a tree file or --star");
  }
  if (!star.empty()) {
    const auto sig = StarSignature::parse(star);
    const auto b = ub_closed_form(sig);
    out << "signature: " << sig.to_tuple() << '\n'
        << "order: " << sig.order() << '\n'
        << "ub1: " << b.ub1 << '\n'
        << "ub2: " << b.ub2 << '\n'
        << "ub3: " << b.ub3 << '\n'
        << "ub4: " << b.ub4 << '\n'
        << "ub: " << b.total << '\n'
        << "mostar: " << mostar_index(build_tree(sig)) << '\n';
    return kOk;
  }
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open tree file '" + file + "'");
  const auto tree = read_tree(in);
  const auto dist = all_pairs_distances(tree);
  out << "order: " << tree.order() << '\n'
      << "ub: " << ub_oracle(dist) << '\n'
      << "mostar: " << mostar_index(tree, dist) << '\n';
  return kOk;
}

int cmd_search(int from, int to, bool all_trees, const std::string& format, unsigned threads,
               std::ostream& out) {
  if (from < 4 || from > to) throw ValidationError("search: need 4 <= --from <= --to");
  if (to > kMaxOrder) throw ValidationError("search: --to exceeds maximum order");
  if (all_trees && to > kAllTreesCap) {
    throw ValidationError("search: --all-trees requires --to <= " + std::to_string(kAllTreesCap));
  }
  const bool csv = format == "csv";
  out << (csv ? csv_header(all_trees) : markdown_header(all_trees)) << '\n';
  bool ok = true;
  for (int n = from; n <= to; ++n) {
    if (all_trees) {
      const auto report = dominance_report(n, {threads});
      ok = ok && report.holds;
      out << (csv ? csv_row(report) : markdown_row(report)) << '\n';
    } else {
      const auto record = max_ub_subdivided_stars(n, {threads});
      out << (csv ? csv_row(record) : markdown_row(record)) << '\n';
    }
  }
  return ok ? kOk : kInvariantFailure;
}

int cmd_relax_eval(const std::string& text, std::ostream& out) {
  const BranchFractions x(parse_reals(text));
  const double closed = f_closed(x);
  const double quad = f_quadrature(x);
  out << "x: " << join_reals(x.values()) << '\n'
      << "f_closed: " << format_real(closed) << '\n'
      << "f_quadrature: " << format_real(quad) << '\n'
      << "difference: " << format_real(closed - quad) << '\n';
  return kOk;
}

int cmd_relax_max(int k, int restarts, std::uint64_t seed, unsigned threads, std::ostream& out) {
  if (k < 1 || k > 64) throw ValidationError("relax max: k must be in [1, 64]");
  MaximizeConfig config;
  config.restarts = restarts;
  config.seed = seed;
  config.threads = threads;
  const auto r = maximize_f(k, config);
  const double target = f_uniform(k);
  out << "k: " << k << '\n'
      << "x: " << join_reals(r.x.values()) << '\n'
      << "value: " << format_real(r.value) << '\n'
      << "f_uniform: " << format_real(target) << '\n'
      << "gap: " << format_real(target - r.value) << '\n'
      << "stationarity: " << format_real(r.stationarity) << '\n'
      << "converged: " << (r.converged ? "true" : "false") << '\n';
  return r.converged ? kOk : kInvariantFailure;
}

int cmd_relax_bound_check(int to, std::ostream& out) {
  if (to < 2 || to > 200) throw ValidationError("bound-check: --to must be in [2, 200]");
  double worst_ratio = 0.0;
  std::string worst = "-";
  std::int64_t count = 0;
  for (int n = 2; n <= to; ++n) {
    for_each_signature(n, [&](std::span<const int> parts) {
      const StarSignature sig(std::vector<int>(parts.begin(), parts.end()));
      const auto g = lemma1_gap(sig);
      const double ratio = g.gap / g.bound;
      ++count;
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst = sig.to_tuple();
      }
    });
  }
  out << "orders: 2.." << to << '\n'
      << "signatures: " << count << '\n'
      << "max_ratio: " << format_real(worst_ratio) << '\n'
      << "worst: " << worst << '\n'
      << "status: " << (worst_ratio <= 1.0 ? "ok" : "violated") << '\n';
  return worst_ratio <= 1.0 ? kOk : kInvariantFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-unbalancedness of trees and subdivided stars", "treeub"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for searches (0: all cores)")
      ->envname("TREEUB_THREADS");

  std::string tree_file;
  std::string star;
  auto* ub = app.add_subcommand("ub", "uB and Mostar index of a tree file or a subdivided star");
  ub->add_option("file", tree_file, "Tree file: `n` then n-1 lines `u v`");
  ub->add_option("--star", star, "Signature such as 2,1,1");

  int from = 0;
  int to = 0;
  bool all_trees = false;
  std::string format = "csv";
  auto* search = app.add_subcommand("search", "Maximum uB over subdivided stars per order");
  search->add_option("--from", from)->required();
  search->add_option("--to", to)->required();
  search->add_flag("--all-trees", all_trees, "Also search all trees (n <= 15)");
  search->add_option("--format", format)->check(CLI::IsMember({"csv", "md"}));

  auto* relax = app.add_subcommand("relax", "Continuous relaxation tools");
  relax->require_subcommand(1);
  std::string eval_x;
  auto* eval = relax->add_subcommand("eval", "Evaluate f by closed form and quadrature");
  eval->add_option("x", eval_x, "Comma-separated branch fractions")->required();
  int k = 0;
  int restarts = 32;
  std::uint64_t seed = MaximizeConfig{}.seed;
  auto* max = relax->add_subcommand("max", "Maximize f over k branch fractions");
  max->add_option("k", k)->required();
  max->add_option("--restarts", restarts);
  max->add_option("--seed", seed);
  int bound_to = 0;
  auto* bound = relax->add_subcommand("bound-check", "Check the (4+k)n^2 gap bound");
  bound->add_option("--to", bound_to)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    if (*ub) return cmd_ub(tree_file, star, out);
    if (*search) return cmd_search(from, to, all_trees, format, threads, out);
    if (*eval) return cmd_relax_eval(eval_x, out);
    if (*max) return cmd_relax_max(k, restarts, seed, threads, out);
    if (*bound) return cmd_relax_bound_check(bound_to, out);
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << '\n';
    return kInvariantFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace treeub::cli
