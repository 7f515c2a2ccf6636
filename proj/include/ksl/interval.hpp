#pragma once

#include <cstdint>

namespace ksl {

// The interval [offset+1, offset+length] of consecutive integers. When bound
// to a prime p it must sit inside [1, p-1].
struct Interval {
  int64_t offset = 0;  // K: interval starts at K+1
  int64_t length = 1;  // M >= 1

  int64_t first() const { return offset + 1; }
  int64_t last() const { return offset + length; }
  bool contains(int64_t v) const { return v >= first() && v <= last(); }
};

void validate_interval(const Interval& iv, uint64_t p);

}  // namespace ksl
