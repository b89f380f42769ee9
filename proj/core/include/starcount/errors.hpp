#pragma once

#include <stdexcept>
#include <string>

namespace starcount {

// A computation would exceed its configured work limit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: specs, edge lists, config files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// H does not fit into the ambient vertex set.
class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ratio whose denominator vanishes.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr unsigned long long kDefaultWorkLimit = 1000000000ULL;

}  // namespace starcount
