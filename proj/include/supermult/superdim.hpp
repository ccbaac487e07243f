#pragma once

#include <string>

namespace supermult {

/// An (even | odd) pair of non-negative dimensions.
struct SuperDim {
  long long even = 0;
  long long odd = 0;

  long long total() const { return even + odd; }

  SuperDim operator+(const SuperDim& o) const { return {even + o.even, odd + o.odd}; }
  SuperDim operator-(const SuperDim& o) const { return {even - o.even, odd - o.odd}; }
  SuperDim& operator+=(const SuperDim& o) {
    even += o.even;
    odd += o.odd;
    return *this;
  }
  bool operator==(const SuperDim&) const = default;

  std::string str() const { return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")"; }
};

}  // namespace supermult
