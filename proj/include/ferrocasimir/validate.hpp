#pragma once

#include <string>
#include <vector>

#include "ferrocasimir/materials.hpp"

namespace ferrocasimir {

struct ValidationCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;   ///< observed error or value, per `detail`
  double tolerance = 0.0;  ///< gate the measurement is held against
  std::string detail;
};

/// Cross-checks the numerical engine against the closed-form thermal
/// asymptotics, the ideal-conductor limit, and the shipped database's
/// high-frequency transparency.  A fresh build on the shipped database
/// must pass every check.
std::vector<ValidationCheck> run_validation_suite(const MaterialDatabase& db);

bool all_passed(const std::vector<ValidationCheck>& checks);

}  // namespace ferrocasimir
