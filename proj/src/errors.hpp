#pragma once

#include <stdexcept>
#include <string>

namespace fcai {

// A 2^|M| enumeration was requested for more attributes than the cap allows.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed context or implication text; carries the 1-based input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The equivalence and membership oracles contradicted each other.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Corpus generation hit the give-up threshold before enough contexts passed
// the filter.
class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad experiment spec, empty corpus, unreadable input file and the like.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fcai
