#include "stirsym/report.hpp"

#include <utility>

namespace stirsym {

VerificationReport VerificationReport::passed(std::string identity, int order, std::vector<std::string> details) {
  return {std::move(identity), order, true, std::nullopt, std::move(details)};
}

VerificationReport VerificationReport::failed(std::string identity, int order, Discrepancy where,
                                              std::vector<std::string> details) {
  return {std::move(identity), order, false, std::move(where), std::move(details)};
}

std::string to_text(const VerificationReport& report) {
  std::string out = (report.pass ? "PASS " : "FAIL ") + report.identity + " (order " + std::to_string(report.order) + ")\n";
  if (report.discrepancy) {
    out += "  first discrepancy at " + report.discrepancy->location + ": expected " + report.discrepancy->expected +
           ", got " + report.discrepancy->actual + "\n";
  }
  for (const auto& d : report.details) out += "  " + d + "\n";
  return out;
}

}  // namespace stirsym
