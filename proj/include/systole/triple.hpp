#pragma once

#include <array>
#include <string>

namespace systole {

struct Triple {
  int a = 0, b = 0, c = 0;
  std::array<int, 3> arr() const { return {a, b, c}; }
  std::string str() const;
  bool operator==(const Triple&) const = default;
};

// Throws std::domain_error unless 2 <= a <= b <= c and 1/a + 1/b + 1/c < 1.
void validate_hyperbolic(const Triple& t);

}  // namespace systole
