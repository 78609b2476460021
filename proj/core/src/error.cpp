#include "asdim/error.hpp"

namespace asdim {

Error::Error(ErrorKind kind, std::string code, const std::string& detail)
    : std::runtime_error(detail.empty() ? code : code + ": " + detail),
      kind_(kind),
      code_(std::move(code)) {}

void fail(ErrorKind kind, const std::string& code, const std::string& detail) {
  throw Error(kind, code, detail);
}

}  // namespace asdim
