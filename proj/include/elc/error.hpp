#ifndef ELC_ERROR_HPP
#define ELC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace elc {

// Error categories, aligned with the CLI exit codes and the C API status codes:
// parse failures (1), structural invariant violations (2), mathematical
// verdicts such as a non-divergence-free stress (3).
enum class ErrorKind { parse = 1, invariant = 2, math = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline Error parse_error(const std::string& what) { return Error(ErrorKind::parse, what); }
inline Error invariant_error(const std::string& what) { return Error(ErrorKind::invariant, what); }
inline Error math_error(const std::string& what) { return Error(ErrorKind::math, what); }

} // namespace elc

#endif
