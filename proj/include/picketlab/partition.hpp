#pragma once

#include <compare>
#include <string>
#include <vector>

#include "picketlab/errors.hpp"

namespace picketlab {

// Weakly decreasing positive integer parts; the empty partition is allowed.
// Missing parts read as 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 0-based; parts beyond the end are 0.
  int part(int i) const {
    return (i >= 0 && i < size()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  int operator[](int i) const { return part(i); }

  long long weight() const;
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition transpose(const Partition& p);

// inner_i <= outer_i for all i.
bool contains(const Partition& outer, const Partition& inner);

struct SkewStrip {
  Partition outer;
  Partition inner;
  SkewStrip(Partition o, Partition i);  // requires contains(o, i)
  bool operator==(const SkewStrip&) const = default;
};

struct StripCheck {
  bool horizontal;      // every componentwise difference <= 1
  long long length;     // sum of differences
  int violation_index;  // first i with outer_i - inner_i > 1, or -1
};

StripCheck is_horizontal_strip(const SkewStrip& s);

// "5,3,1"; "" or "0" parses to the empty partition.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

}  // namespace picketlab
