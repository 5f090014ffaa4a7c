#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Raised by the arity/sort checkers. `path` locates the offending subterm,
// e.g. "sq/comp.1".
class SortError : public Error {
 public:
  SortError(std::string path, std::string expected, std::string found)
      : Error(path + ": expected " + expected + ", found " + found),
        path_(std::move(path)),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const std::string& path() const { return path_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::string path_;
  std::string expected_;
  std::string found_;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name)
      : Error("unknown symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::size_t steps)
      : Error("step budget exhausted after " + std::to_string(steps) + " steps"),
        steps_(steps) {}
  std::size_t steps() const { return steps_; }

 private:
  std::size_t steps_;
};

}  // namespace phalg
