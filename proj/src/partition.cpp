#include "picketlab/partition.hpp"

#include <numeric>
#include <sstream>

namespace picketlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw InvalidPartition("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidPartition("partition parts must be weakly decreasing");
  }
}

long long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0ll);
}

Partition transpose(const Partition& p) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(p.part(0)));
  for (int col = 1; col <= p.part(0); ++col) {
    int count = 0;
    for (int j = 0; j < p.size(); ++j)
      if (p[j] >= col) ++count;
    t.push_back(count);
  }
  return Partition(std::move(t));
}

bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

SkewStrip::SkewStrip(Partition o, Partition i)
    : outer(std::move(o)), inner(std::move(i)) {
  if (!contains(outer, inner))
    throw InvalidPartition("skew strip: inner must be contained in outer");
}

StripCheck is_horizontal_strip(const SkewStrip& s) {
  StripCheck out{true, 0, -1};
  for (int i = 0; i < s.outer.size(); ++i) {
    const int d = s.outer[i] - s.inner[i];
    out.length += d;
    if (d > 1 && out.horizontal) {
      out.horizontal = false;
      out.violation_index = i;
    }
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.empty() || text == "0") return Partition();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size())
      throw InvalidPartition("bad partition entry: " + item);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace picketlab
