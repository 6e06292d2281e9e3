#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qwb {

// Typed failure: a stable machine-readable code plus element-name witnesses.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what,
        std::vector<std::string> witness = {})
      : std::runtime_error(what),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::string code_;
  std::vector<std::string> witness_;
};

}  // namespace qwb
