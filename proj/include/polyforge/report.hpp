#pragma once

#include <string>
#include <vector>

namespace polyforge {

// Structured pass/fail record for one identity checked on one instance.
// pass means the two sides agreed exactly; detail carries the witness
// (left/right renderings) on failure, or notes like "vacuous".
struct IdentityReport {
  std::string identity;
  std::string instance;
  bool pass = false;
  std::string detail;
};

inline IdentityReport report_pass(std::string identity, std::string instance,
                                  std::string detail = "") {
  return {std::move(identity), std::move(instance), true, std::move(detail)};
}

inline IdentityReport report_fail(std::string identity, std::string instance,
                                  std::string left, std::string right) {
  return {std::move(identity), std::move(instance), false,
          "left=" + left + " right=" + right};
}

inline bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace polyforge
