#ifndef COREFKIT_ERRORS_H_
#define COREFKIT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace corefkit {

// Malformed or inconsistent input data. The message names the file, the
// line (when known) and the offending entity or mention.
class DataError : public std::runtime_error {
 public:
  DataError(std::string file, int line, const std::string &detail);
  explicit DataError(const std::string &detail) : DataError("", 0, detail) {}

  const std::string &file() const { return file_; }
  int line() const { return line_; }
  const std::string &detail() const { return detail_; }

 private:
  std::string file_;
  int line_;
  std::string detail_;
};

// Non-fatal findings collected while parsing (e.g. duplicated sent_id).
struct Diagnostics {
  std::vector<std::string> warnings;

  void Warn(const std::string &file, int line, const std::string &message);
};

}  // namespace corefkit

#endif  // COREFKIT_ERRORS_H_
