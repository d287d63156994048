#pragma once

#include <string>
#include <vector>

namespace zsg {

struct VerifyCheck {
  std::string id;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifySuite {
  std::string name;
  std::vector<VerifyCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Suite names accepted by run_verify, "all" excluded.
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite, or every suite for "all". Unknown names throw
/// std::invalid_argument.
std::vector<VerifySuite> run_verify(const std::string& name);

}  // namespace zsg
