#pragma once

#include "stirsym/partition.hpp"
#include "stirsym/rational.hpp"
#include "stirsym/report.hpp"

namespace stirsym {

/// Higher Weil-Petersson volume by the closed formula
///   n! sum_k (-1)^{l-k} C(n+k, k) sum_{lambda = nu^1 + ... + nu^k}
///        prod_j C(m_j; m_j(nu^1), ..., m_j(nu^k)) / prod_i (|nu^i| + 1)!
/// with n = |lambda|, l = l(lambda), over ordered decompositions into
/// nonempty sub-multisets.
Rational wp_volume(const Partition& lambda);

/// For every n' <= n compares [p_lambda] SP^(2)_{n'} with
/// sign * WP(lambda) / z_lambda under the two candidate sign rules
/// (-1)^{n-l} and (-1)^{n-1-l}. Passes iff every n' has a rule matching all
/// lambda at once; the details name the rule per n'.
VerificationReport check_wp_signs(int n);

}  // namespace stirsym
