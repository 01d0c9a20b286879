#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "stirsym/identities.hpp"
#include "stirsym/json.hpp"
#include "stirsym/moduli.hpp"
#include "stirsym/noncrossing.hpp"
#include "stirsym/posets.hpp"
#include "stirsym/stirling.hpp"
#include "stirsym/trees.hpp"

namespace stirsym::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not a rational");
    }
  }
  return out;
}

std::string set_partition_string(const SetPartition& pi) {
  std::string out;
  for (const auto& b : pi) {
    out += "{";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
    out += "}";
  }
  return out.empty() ? "{}" : out;
}

std::string render(const SymFunc& f, const std::string& format) {
  if (format == "latex") return to_latex(f);
  if (format == "json") return json::to_json(f).dump();
  return to_string(f);
}

// Everything the verbs read, filled by CLI11.
struct Options {
  std::optional<int> n;
  int r = 1;
  std::string basis;
  std::string type = "AA";
  std::string format = "text";
  std::string out_path;
  std::string kind;
  std::string alphabet = "lyn";
  std::string mu;
  std::string identity;
  std::optional<int> order;
  bool as_json = false;
  std::string coeffs;
  std::string route = "both";
  std::string lambda;
  std::string poset;
  bool verify = false;
};

int do_expand(const Options& o, std::ostream& out) {
  TypeChoice type = TypeChoice::parse(o.type);
  if (!o.n) {
    if (o.format == "json") {
      json::json all = json::json::array();
      for (int n = 0; n <= 6; ++n) {
        SymFunc f = sp(n, o.r, type);
        json::json row = {{"n", n}, {"r", o.r}};
        for (Basis b : kAllBases) row[std::string(basis_name(b))] = json::to_json(convert(f, b));
        all.push_back(row);
      }
      out << all.dump(2) << "\n";
    } else {
      out << golden_table(o.r);
    }
    return 0;
  }
  SymFunc f = sp(*o.n, o.r, type);
  if (!o.basis.empty() && o.basis != "all") {
    out << render(convert(f, parse_basis(o.basis)), o.format) << "\n";
    return 0;
  }
  for (Basis b : kAllBases) out << basis_name(b) << ": " << render(convert(f, b), o.format) << "\n";
  return 0;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (!o.n && o.kind != "colored") throw UsageError("enumerate: --n is required");
  if (o.kind == "stirling") {
    for (const auto& theta : enumerate_stirling(*o.n, o.r)) {
      out << (o.format == "json" ? json::to_json(theta).dump() : theta.to_string()) << "\n";
    }
  } else if (o.kind == "trees" || o.kind == "colored") {
    std::vector<BinaryTree> trees = o.kind == "trees"
                                        ? enumerate_normalized(*o.n)
                                        : enumerate_colored(parse_tree_kind(o.alphabet), WeakComposition(parse_ints(o.mu, "--mu")));
    for (const auto& t : trees) {
      if (o.format == "json") out << json::to_json(t).dump() << "\n";
      else if (o.format == "ascii") out << t.ascii() << "\n";
      else out << t.to_string() << "\n";
    }
  } else if (o.kind == "noncrossing") {
    for (const auto& pi : noncrossing_partitions(*o.n)) out << set_partition_string(pi) << "\n";
  } else {
    throw UsageError("enumerate: unknown --kind '" + o.kind + "' (stirling, trees, colored, noncrossing)");
  }
  return 0;
}

int do_eulerian(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("eulerian: --n is required");
  TPoly a = eulerian(*o.n, o.r);
  out << (o.format == "json" ? json::to_json(a).dump() : a.to_string()) << "\n";
  return 0;
}

int do_verify(const Options& o, std::ostream& out) {
  std::vector<VerificationReport> reports;
  if (o.identity == "all") {
    for (const auto& info : identity_registry()) reports.push_back(info.run(o.order.value_or(info.default_order)));
  } else {
    const IdentityInfo* info = find_identity(o.identity);
    if (!info) throw UsageError("verify: unknown --identity '" + o.identity + "'");
    reports.push_back(info->run(o.order.value_or(info->default_order)));
    reports.back().identity = o.identity;
  }
  bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  if (o.as_json) {
    if (reports.size() == 1) {
      out << json::to_json(reports.front()).dump() << "\n";
    } else {
      json::json arr = json::json::array();
      for (const auto& r : reports) arr.push_back(json::to_json(r));
      out << arr.dump() << "\n";
    }
  } else {
    for (const auto& r : reports) out << to_text(r);
  }
  return pass ? 0 : 1;
}

int do_invert(const Options& o, std::ostream& out, std::ostream& err) {
  auto f = parse_rationals(o.coeffs, "--coeffs");
  if (f.empty()) throw UsageError("invert: --coeffs is empty");
  InversionKind kind;
  if (o.kind == "mult") kind = InversionKind::multiplicative;
  else if (o.kind == "comp") kind = InversionKind::compositional;
  else throw UsageError("invert: --kind must be mult or comp");
  int order = o.order.value_or(static_cast<int>(f.size()) - 1);
  if (order < 0 || order > SymRing::kDefaultDegreeCap) {
    throw UsageError("invert: --order out of range");
  }
  std::vector<Rational> g;
  if (o.route == "sp") {
    g = invert_egf_numeric(kind, f, order);
  } else if (o.route == "series") {
    g = invert_egf_series(kind, f, order);
  } else if (o.route == "both") {
    g = invert_egf_series(kind, f, order);
    if (invert_egf_numeric(kind, f, order) != g) {
      err << "invert: the two routes disagree\n";
      return 1;
    }
  } else {
    throw UsageError("invert: --route must be sp, series or both");
  }
  if (o.format == "json") {
    out << json::to_json(Series<Rational>::from_egf_coefficients(order, g)).dump() << "\n";
  } else {
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i].to_string();
    out << "\n";
  }
  return 0;
}

int do_wp(const Options& o, std::ostream& out) {
  Partition lambda = Partition::from_unsorted(parse_ints(o.lambda, "--lambda"));
  out << wp_volume(lambda).to_string() << "\n";
  return 0;
}

int do_mobius(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("mobius: --n is required");
  PosetKind kind = parse_poset_kind(o.poset);
  WeakComposition mu(parse_ints(o.mu, "--mu"));
  Interval iv = interval(kind, *o.n, mu);
  long value = mobius_invariant(iv);
  out << value << "\n";
  if (!o.verify) return 0;
  long predicted = predicted_mobius(kind, *o.n, mu);
  out << "elements: " << iv.size() << "\n";
  out << "predicted: " << predicted << " (" << (value == predicted ? "match" : "MISMATCH") << ")\n";
  return value == predicted ? 0 : 1;
}

}  // namespace

std::string golden_table(int r, int max_n) {
  std::string out;
  for (int n = 0; n <= max_n; ++n) {
    SymFunc f = sp(n, r);
    out += "SP^(" + std::to_string(r) + ")_" + std::to_string(n) + "\n";
    for (Basis b : kAllBases) out += "  " + std::string(basis_name(b)) + ": " + to_string(convert(f, b)) + "\n";
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric functions from Stirling permutations and trees"};
  app.name("stirsym");
  app.require_subcommand(1);
  Options o;

  auto* expand = app.add_subcommand("expand", "SP^(r)_n in one or all bases; without --n, the table for n = 0..6");
  expand->add_option("--n", o.n, "degree")->check(CLI::Range(0, 8));
  expand->add_option("--r", o.r, "multiplicity")->check(CLI::Range(1, 8));
  expand->add_option("--basis", o.basis, "m, e, h, p, s or all")->check(CLI::IsMember({"m", "e", "h", "p", "s", "all"}));
  expand->add_option("--type", o.type, "AA, DA, TNj or INj");
  expand->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  expand->add_option("--out", o.out_path, "write to this file instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "list Stirling permutations, trees or noncrossing partitions");
  enumerate->add_option("--kind", o.kind, "stirling, trees, colored or noncrossing")->required();
  enumerate->add_option("--n", o.n, "size")->check(CLI::Range(0, 9));
  enumerate->add_option("--r", o.r, "multiplicity (stirling)")->check(CLI::Range(1, 8));
  enumerate->add_option("--alphabet", o.alphabet, "lyn or comb (colored)");
  enumerate->add_option("--mu", o.mu, "content, e.g. 2,0,1 (colored)");
  enumerate->add_option("--format", o.format, "text, json or ascii")->check(CLI::IsMember({"text", "json", "ascii"}));
  enumerate->add_option("--out", o.out_path, "output file");

  auto* eul = app.add_subcommand("eulerian", "descent polynomial A^(r)_n(t)");
  eul->add_option("--n", o.n, "size")->check(CLI::Range(0, 9));
  eul->add_option("--r", o.r, "multiplicity")->check(CLI::Range(1, 8));
  eul->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  eul->add_option("--out", o.out_path, "output file");

  auto* verify = app.add_subcommand("verify", "run an identity check");
  verify->add_option("--identity", o.identity, "identity name, alias or all")->required();
  auto* order_opt = verify->add_option("--order", o.order, "truncation order / size")->check(CLI::Range(0, 8));
  verify->add_option("--n", o.order, "same as --order")->excludes(order_opt)->check(CLI::Range(0, 8));
  verify->add_flag("--json", o.as_json, "emit the report as JSON");
  verify->add_option("--out", o.out_path, "output file");

  auto* invert = app.add_subcommand("invert", "inverse of an EGF given by its semantic coefficients");
  invert->add_option("--kind", o.kind, "mult or comp")->required();
  invert->add_option("--coeffs", o.coeffs, "f_0,f_1,... e.g. 1,1,1/2")->required();
  invert->add_option("--order", o.order, "truncation order");
  invert->add_option("--route", o.route, "sp, series or both");
  invert->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  invert->add_option("--out", o.out_path, "output file");

  auto* wp = app.add_subcommand("wp", "higher Weil-Petersson volume WP(lambda)");
  wp->add_option("--lambda", o.lambda, "parts, e.g. 2,1")->required();
  wp->add_option("--out", o.out_path, "output file");

  auto* mobius = app.add_subcommand("mobius", "Möbius invariant of a maximal weighted interval");
  mobius->add_option("--poset", o.poset, "pi or b")->required();
  mobius->add_option("--n", o.n, "ground set size")->check(CLI::Range(1, 5));
  mobius->add_option("--mu", o.mu, "weight, e.g. 2,0,1")->required();
  mobius->add_flag("--verify", o.verify, "compare with the SP coefficient");
  mobius->add_option("--out", o.out_path, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "cannot open " << o.out_path << " for writing\n";
      return 2;
    }
    sink = &file;
  }

  try {
    if (expand->parsed()) return do_expand(o, *sink);
    if (enumerate->parsed()) return do_enumerate(o, *sink);
    if (eul->parsed()) return do_eulerian(o, *sink);
    if (verify->parsed()) return do_verify(o, *sink);
    if (invert->parsed()) return do_invert(o, *sink, err);
    if (wp->parsed()) return do_wp(o, *sink);
    if (mobius->parsed()) return do_mobius(o, *sink);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace stirsym::cli
