#ifndef RAAG_ERROR_HPP
#define RAAG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace raag
{

class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed graph file or word string.
class parse_error : public error
{
public:
  parse_error(std::size_t line, std::string const &what)
  : error("line " + std::to_string(line) + ": " + what),
    _line(line)
  {}

  explicit parse_error(std::string const &what)
  : error(what),
    _line(0)
  {}

  std::size_t line() const { return _line; }

private:
  std::size_t _line;
};

// A vertex name or index that does not belong to the graph.
class unknown_vertex : public error
{
public:
  using error::error;
};

class size_bound_exceeded : public error
{
public:
  using error::error;
};

// An operation was called outside its documented precondition.
class precondition_error : public error
{
public:
  using error::error;
};

// A verification harness found a counterexample.
class verification_failure : public error
{
public:
  using error::error;
};

// Outcome of a mechanical check. A skipped check has nothing to verify on
// the given input and counts as passed.
struct CheckReport
{
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::vector<std::string> details;

  void fail(std::string detail)
  {
    passed = false;
    details.push_back(std::move(detail));
  }

  void note(std::string detail) { details.push_back(std::move(detail)); }
};

} // namespace raag

#endif // RAAG_ERROR_HPP
