#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stirsym {

/// First coefficient at which two sides of an identity differ.
struct Discrepancy {
  std::string location;  // e.g. "n=4 h(2,1,1)"
  std::string expected;
  std::string actual;
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// Outcome of one identity check. A failed report always carries a
/// discrepancy.
struct VerificationReport {
  std::string identity;
  int order = 0;
  bool pass = true;
  std::optional<Discrepancy> discrepancy;
  std::vector<std::string> details;

  static VerificationReport passed(std::string identity, int order, std::vector<std::string> details = {});
  static VerificationReport failed(std::string identity, int order, Discrepancy where,
                                   std::vector<std::string> details = {});

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// "PASS thm13 (order 6)" followed by indented detail lines.
std::string to_text(const VerificationReport& report);

}  // namespace stirsym
