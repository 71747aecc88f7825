#include "ecm/count_vector.hpp"

#include <numeric>

namespace ecm {

unsigned CountVector::height() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

std::string CountVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ']';
  return out;
}

namespace {

void compositions(std::vector<unsigned>& current, std::size_t pos, unsigned remaining,
                  std::vector<CountVector>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned take = remaining + 1; take-- > 0;) {
    current[pos] = take;
    compositions(current, pos + 1, remaining - take, out);
  }
}

}  // namespace

std::vector<CountVector> count_vectors_of_height(std::size_t colors, unsigned height) {
  std::vector<CountVector> out;
  if (colors == 0) {
    if (height == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> current(colors, 0);
  compositions(current, 0, height, out);
  return out;
}

}  // namespace ecm
