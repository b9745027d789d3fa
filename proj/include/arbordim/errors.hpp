#ifndef ARBORDIM_ERRORS_HPP
#define ARBORDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arbordim {

// Thrown when a computation would exceed a configured cap (tower degree,
// coefficient height, group enumeration size).  Callers that want partial
// results must ask for them explicitly; nothing is silently truncated.
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string &what)
      : std::runtime_error(what) {}
};

// Expression parse failure; `position` is a 0-based byte offset into the input.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string &what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

} // namespace arbordim

#endif
