#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirsym/rational.hpp"
#include "stirsym/report.hpp"
#include "stirsym/series.hpp"
#include "stirsym/symfunc.hpp"

namespace stirsym {

/// sum_{n>=0} (-1)^n h_n y^n (ogf) or y^n/n! (egf).
Series<SymFunc> signed_h_series(Flavor flavor, int order);
/// sum_{n>=1} (-1)^{n-1} h_{n-1} y^n (ogf) or y^n/n! (egf).
Series<SymFunc> shifted_signed_h_series(Flavor flavor, int order);

/// First coefficient where two symmetric functions differ, compared in the
/// basis of `expected`. `where` prefixes the location.
std::optional<Discrepancy> first_difference(const std::string& where, const SymFunc& expected, const SymFunc& actual);
std::optional<Discrepancy> first_difference(const std::string& where, const TPoly& expected, const TPoly& actual);

// OGF: the inverse of sum (-1)^n h_n y^n is sum e_n y^n.
VerificationReport check_h_e_inverse(int order = 6);
// OGF: the compositional inverse of sum (-1)^{n-1} h_{n-1} y^n is
// sum omega PF_{n-1} y^n, with omega PF built from noncrossing partitions.
VerificationReport check_noncrossing_compinv(int order = 6);
// EGF: the inverse of sum (-1)^n h_n y^n/n! is sum SP^(1)_n y^n/n!.
VerificationReport check_sp1_inverse(int order = 6);
// EGF: the compositional inverse of sum (-1)^{n-1} h_{n-1} y^n/n! is
// sum SP^(2)_{n-1} y^n/n!.
VerificationReport check_sp2_compinv(int order = 7);
// (1-t)/(1-t e^{(1-t)y}) = sum A_n(t) y^n/n! over Q[t], plus the image of
// the SP^(1) identity under e_i -> t.
VerificationReport check_riordan(int order = 8);
// ((1-t)y + (1-e^{(1-t)y})t)/(1-t)^2 has compositional inverse
// sum A^(2)_{n-1}(t) y^n/n!, plus the image of the SP^(2) identity.
VerificationReport check_eulerian2_compinv(int order = 8);
// h_n = (-1)^n sum_{compositions} (-1)^l e_{sorted} and E(h_n) = t(t-1)^{n-1}.
VerificationReport check_h_to_e(int n = 8);

enum class InversionKind { multiplicative, compositional };

/// Semantic EGF coefficients g_0..g_order of the multiplicative or
/// compositional inverse of the EGF with semantic coefficients f, computed
/// by evaluating the h-expansion of SP^(1)_n (resp. SP^(2)_{n-1}) at
/// h_i = f_i/f_0 (resp. h_i = f_{i+1}/f_1). Missing f entries are zero.
/// Throws std::domain_error when f_0 = 0 (multiplicative) or f_0 != 0 or
/// f_1 = 0 (compositional).
std::vector<Rational> invert_egf_numeric(InversionKind kind, const std::vector<Rational>& f, int order);
/// The same inverse via the series module.
std::vector<Rational> invert_egf_series(InversionKind kind, const std::vector<Rational>& f, int order);
// Both routes agree on analytic pairs and on 50 random EGFs per kind.
VerificationReport check_sp_inversion(int order = 6);

/// Type multisets AA, DA, TN_j, IN_j agree on Q_n(r), and
/// l(AA) = des, l(DA) = asc, l(TN_j) = l(IN_j) = pla_j on every word.
VerificationReport check_equidistribution(int n, int r);
// check_equidistribution for r = 1, 2 up to `order` and r = 3 up to order-1.
VerificationReport check_type_equidistribution(int order = 6);
// Nor_n against Q_{n-1}(2): Lyndon types vs AA, comb types vs TN_1, and
// |Nor_n| = (2n-3)!!.
VerificationReport check_tree_types(int n = 7);
// |Lyn_mu| = |Comb_mu| for every weight of size <= `size` on `size` colors.
VerificationReport check_lyn_comb_count(int size = 4);
// Forbidden-tree EGFs equal sum (-1)^{n-1} h_{n-1} y^n/n! for both kinds.
VerificationReport check_forbidden_trees(int order = 5);
// Compositional inverse of each forbidden-tree EGF is the colored-tree EGF,
// which in turn equals the type generating function.
VerificationReport check_drake(int order = 6);

struct IdentityInfo {
  std::string name;
  std::vector<std::string> aliases;
  std::string summary;
  int default_order;
  std::function<VerificationReport(int)> run;
};

const std::vector<IdentityInfo>& identity_registry();
/// Lookup by name or alias; nullptr if unknown.
const IdentityInfo* find_identity(std::string_view name);
/// Every registered check at its default order.
std::vector<VerificationReport> verify_all();

}  // namespace stirsym
