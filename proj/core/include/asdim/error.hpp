#pragma once

#include <stdexcept>
#include <string>

namespace asdim {

// Broad failure classes. The CLI maps these onto its exit-code contract.
enum class ErrorKind {
  kInvalidInput,      // malformed data, not-a-cover, bad metric
  kPrecondition,      // a construction's hypothesis is not met by the data
  kCertificate,       // a construction produced output violating its own claims
  kBudgetExhausted,   // a search hit its node or size budget
  kInsufficientData,  // e.g. curve ranges too short to decide domination
  kUsage,
};

// Every error carries a stable kebab-case code ("not-a-cover",
// "budget-exhausted", ...) so callers and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& code,
                       const std::string& detail = {});

}  // namespace asdim
