#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mink {

/// Machine-readable failure category, carried by every library exception.
enum class ErrorKind {
  domain,      // malformed input, dimension mismatch, zero normal
  size,        // a configured limit was exceeded
  degeneracy,  // affinely dependent or lower-dimensional input
  emptiness,   // an intersection came out empty
  unbounded,   // an H-polytope turned out to be unbounded
  parse,       // unreadable JSON / rational text
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::size: return "size";
    case ErrorKind::degeneracy: return "degeneracy";
    case ErrorKind::emptiness: return "emptiness";
    case ErrorKind::unbounded: return "unbounded";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(ErrorKind::domain, m) {}
};
struct SizeError : Error {
  explicit SizeError(const std::string& m) : Error(ErrorKind::size, m) {}
};
struct DegeneracyError : Error {
  explicit DegeneracyError(const std::string& m) : Error(ErrorKind::degeneracy, m) {}
};
struct EmptinessError : Error {
  explicit EmptinessError(const std::string& m) : Error(ErrorKind::emptiness, m) {}
};
struct UnboundedError : Error {
  explicit UnboundedError(const std::string& m) : Error(ErrorKind::unbounded, m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorKind::parse, m) {}
};

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b, std::string_view what) {
  if (a != b) {
    throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                      " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail
}  // namespace mink
