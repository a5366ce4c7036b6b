#pragma once

#include <string>
#include <vector>

namespace flownet {

struct Violation {
  std::string id;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string id, std::string message) { violations.push_back({std::move(id), std::move(message)}); }
  std::string summary() const;
};

}  // namespace flownet
