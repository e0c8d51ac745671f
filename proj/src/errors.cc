#include "corefkit/errors.h"

namespace corefkit {
namespace {

std::string Compose(const std::string &file, int line,
                    const std::string &detail) {
  std::string out;
  if (!file.empty()) {
    out += file;
    if (line > 0) out += ":" + std::to_string(line);
    out += ": ";
  }
  return out + detail;
}

}  // namespace

DataError::DataError(std::string file, int line, const std::string &detail)
    : std::runtime_error(Compose(file, line, detail)),
      file_(std::move(file)),
      line_(line),
      detail_(detail) {}

void Diagnostics::Warn(const std::string &file, int line,
                       const std::string &message) {
  warnings.push_back(Compose(file, line, message));
}

}  // namespace corefkit
