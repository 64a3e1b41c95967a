#pragma once

#include <string>
#include <vector>

namespace qgl11 {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  void append(const Report& r, const std::string& prefix = {}) {
    for (const auto& c : r.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace qgl11
