#include <doctest.h>

#include "oracles.hpp"
#include "stirsym/stirling.hpp"

using namespace stirsym;

// Both appendix tables, transcribed into data/appendix.txt, against sp().

TEST_CASE("appendix data file is complete") {
  auto rows = oracle::load_appendix();
  CHECK(rows.size() == 2 * 7 * 5);
}

TEST_CASE("SP^(1) and SP^(2) in all five bases, n = 0..6") {
  for (const auto& row : oracle::load_appendix()) {
    CAPTURE(row.r);
    CAPTURE(row.n);
    CAPTURE(basis_name(row.value.basis()));
    auto got = convert(sp(row.n, row.r), row.value.basis());
    CHECK(got.terms() == row.value.terms());
  }
}

TEST_CASE("spot values") {
  CHECK(convert(sp(6, 1), Basis::m).coefficient({1, 1, 1, 1, 1, 1}) == 90921);
  CHECK(convert(sp(6, 1), Basis::p).coefficient({1, 1, 1, 1, 1, 1}) == Rational(30307, 240));
  CHECK(convert(sp(6, 2), Basis::p).coefficient({1, 1, 1, 1, 1, 1}) == Rational(882989, 240));
  CHECK(convert(sp(6, 2), Basis::m).coefficient({1, 1, 1, 1, 1, 1}) == 2648967);
  auto h4 = convert(sp(4, 2), Basis::h);
  CHECK(to_string(h4) == "-h(4) + 15*h(3,1) + 10*h(2,2) - 105*h(2,1,1) + 105*h(1,1,1,1)");
}

TEST_CASE("m(1^n) coefficient from the words directly") {
  // [m(1^n)] e_lambda = n!/prod(lambda_i!)
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 6; ++n) {
      Integer total = 0;
      for (const auto& t : enumerate_stirling(n, r)) total += multinomial(type_aa(t).parts());
      std::vector<int> ones(static_cast<std::size_t>(n), 1);
      CHECK(convert(sp(n, r), Basis::m).coefficient(Partition(ones)) == Rational(total));
    }
}
