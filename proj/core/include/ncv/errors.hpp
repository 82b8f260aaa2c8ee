#pragma once

#include <stdexcept>
#include <string>

namespace ncv {

/// Input exceeds a configured budget (CLI exit code 3).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input: graph6 lines, edge-list strings, corpus files.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter outside a closed formula's domain.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operands that must share one underlying graph do not.
struct GraphMismatchError : std::invalid_argument {
  explicit GraphMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Unknown named graph family or table id (CLI exit code 2).
struct UnknownNameError : std::invalid_argument {
  explicit UnknownNameError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ncv
