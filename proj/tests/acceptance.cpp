// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "stirsym/identities.hpp"
#include "stirsym/json.hpp"
#include "stirsym/moduli.hpp"
#include "stirsym/noncrossing.hpp"
#include "stirsym/posets.hpp"
#include "stirsym/stirling.hpp"
#include "stirsym/trees.hpp"

using namespace stirsym;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

// Accumulates failures; the first one becomes the note.
struct Tally {
  Outcome out;
  void require(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.note = what;
    }
  }
  void report(const VerificationReport& r) {
    std::string where = r.identity;
    if (r.discrepancy) where += " at " + r.discrepancy->location + ": expected " + r.discrepancy->expected + ", got " + r.discrepancy->actual;
    require(r.pass, where);
  }
};

int cli_run(std::vector<std::string> args, std::string* captured = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (captured) *captured = out.str();
  return code;
}

Outcome appendix_via_cli(int r) {
  Tally t;
  int rows = 0;
  for (const auto& row : oracle::load_appendix()) {
    if (row.r != r) continue;
    ++rows;
    std::string text;
    std::string basis(basis_name(row.value.basis()));
    int code = cli_run({"expand", "--n", std::to_string(row.n), "--r", std::to_string(r), "--basis", basis, "--format", "json"}, &text);
    t.require(code == 0, "expand exit code");
    auto got = json::symfunc_from_json(nlohmann::json::parse(text));
    t.require(got.terms() == row.value.terms(), "n=" + std::to_string(row.n) + " basis " + basis);
  }
  t.require(rows == 35, "appendix rows for r=" + std::to_string(r));
  return t.out;
}

Outcome ac1() {
  auto o = appendix_via_cli(1);
  Tally t{o};
  t.require(convert(sp(6, 1), Basis::m).coefficient({1, 1, 1, 1, 1, 1}) == 90921, "m(1^6) = 90921");
  t.require(convert(sp(6, 1), Basis::p).coefficient({1, 1, 1, 1, 1, 1}) == Rational(30307, 240), "p(1^6) = 30307/240");
  return t.out;
}

Outcome ac2() {
  auto o = appendix_via_cli(2);
  Tally t{o};
  std::string h4;
  cli_run({"expand", "--n", "4", "--r", "2", "--basis", "h"}, &h4);
  t.require(h4 == "-h(4) + 15*h(3,1) + 10*h(2,2) - 105*h(2,1,1) + 105*h(1,1,1,1)\n", "h-row of SP^(2)_4");
  t.require(convert(sp(6, 2), Basis::p).coefficient({1, 1, 1, 1, 1, 1}) == Rational(882989, 240), "p(1^6) = 882989/240");
  t.require(stirling_count(6, 2) == 10395, "|Q_6| = 10395");
  return t.out;
}

Outcome ac3() {
  Tally t;
  t.report(check_sp1_inverse(6));
  return t.out;
}

Outcome ac4() {
  Tally t;
  t.report(check_sp2_compinv(7));
  return t.out;
}

Outcome ac5() {
  Tally t;
  t.report(check_h_e_inverse(6));
  t.report(check_noncrossing_compinv(6));
  for (int n = 0; n <= 7; ++n)
    t.require(static_cast<long>(noncrossing_partitions(n).size()) == oracle::catalan(n), "|NC_n| = Catalan");
  return t.out;
}

Outcome ac6() {
  Tally t;
  t.report(check_riordan(8));
  t.report(check_eulerian2_compinv(8));
  for (int r = 1; r <= 2; ++r)
    for (int n = 0; n <= 6; ++n) {
      auto tally = oracle::brute_eulerian(n, r);
      auto poly = eulerian(n, r);
      for (std::size_t d = 0; d < tally.size(); ++d)
        t.require(poly.coefficient(static_cast<int>(d)) == tally[d],
                  "brute-force descents n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  return t.out;
}

Outcome ac7() {
  Tally t;
  for (int n = 1; n <= 6; ++n) t.report(check_equidistribution(n, 2));
  for (int n = 1; n <= 5; ++n) t.report(check_equidistribution(n, 3));
  auto rows = oracle::load_table1();
  t.require(rows.size() == 15, "15 table rows");
  for (const auto& row : rows) {
    auto q = StirlingPerm::parse(row.word, 2);
    auto s = stats(q);
    bool ok = s.des == row.des && s.asc == row.asc && s.pla_total() == row.pla && type_aa(q) == row.aa &&
              type_da(q) == row.da && type_tn(q, 1) == row.tn && type_in(q, 1) == row.in;
    t.require(ok, "table row " + row.word);
  }
  return t.out;
}

Outcome ac8() {
  Tally t;
  t.report(check_tree_types(7));
  for (int n = 2; n <= 7; ++n)
    t.require(static_cast<long>(enumerate_normalized(n).size()) == oracle::double_factorial(2 * n - 3), "|Nor_n|");
  return t.out;
}

Outcome ac9() {
  Tally t;
  t.report(check_lyn_comb_count(4));
  return t.out;
}

Outcome ac10() {
  Tally t;
  t.report(check_forbidden_trees(5));
  return t.out;
}

Outcome ac11() {
  Tally t;
  t.report(check_h_to_e(8));
  return t.out;
}

Outcome ac12() {
  Tally t;
  t.report(check_sp_inversion(6));
  const int N = 6;
  std::vector<Rational> ones(N + 1, Rational(1));
  auto inv = invert_egf_numeric(InversionKind::multiplicative, ones, N);
  for (int n = 0; n <= N; ++n) t.require(inv[n] == Rational(n % 2 ? -1 : 1), "e^y inverse");
  ones[0] = 0;
  auto log1p = invert_egf_numeric(InversionKind::compositional, ones, N);
  for (int n = 1; n <= N; ++n)
    t.require(log1p[n] == Rational(factorial(n - 1)) * Rational(n % 2 ? 1 : -1), "log(1+y)");
  return t.out;
}

Outcome ac13() {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  t.report(check_mobius_pi(4));
  t.report(check_mobius_b(3));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(secs < 120, "runtime over two minutes");
  return t.out;
}

Outcome ac14() {
  Tally t;
  auto r = check_wp_signs(5);
  t.report(r);
  int named = 0;
  for (const auto& line : r.details)
    if (line.find("uniform sign rule (-1)^(n-l)") != std::string::npos) ++named;
  t.require(named == 6, "a uniform rule named for each n = 0..5");
  return t.out;
}

Outcome ac15() {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  std::string text;
  int code = cli_run({"verify", "--identity", "all"}, &text);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(code == 0, "verify --identity all exit code " + std::to_string(code));
  t.require(text.find("FAIL") == std::string::npos, "a check failed");
  t.require(secs < 180, "runtime over three minutes");
  return t.out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 appendix table SP^(1), n=0..6, all bases", ac1},
      {"AC2 appendix table SP^(2), n=0..6, all bases", ac2},
      {"AC3 EGF inverse gives SP^(1) to order 6", ac3},
      {"AC4 EGF compositional inverse gives SP^(2) to order 7", ac4},
      {"AC5 OGF identities with noncrossing partitions to order 6", ac5},
      {"AC6 Eulerian identities over Q[t] to order 8, brute-force descents", ac6},
      {"AC7 type equidistribution and the Q_3 table", ac7},
      {"AC8 tree types against permutation types, n <= 7", ac8},
      {"AC9 |Lyn_mu| = |Comb_mu| for |mu| <= 4", ac9},
      {"AC10 forbidden-tree EGFs to order 5", ac10},
      {"AC11 h_n through compositions and E(h_n), n <= 8", ac11},
      {"AC12 two-route inversion and analytic pairs", ac12},
      {"AC13 Mobius invariants of weighted intervals", ac13},
      {"AC14 uniform sign rule for the WP expansion, n <= 5", ac14},
      {"AC15 full verification suite", ac15},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " [" << ms << " ms]";
    if (!o.pass) std::cout << " -- " << o.note;
    std::cout << "\n";
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria pass\n");
  return failures ? 1 : 0;
}
