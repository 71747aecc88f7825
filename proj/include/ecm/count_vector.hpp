#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ecm {

/// Number of occurrences of each color among the edge-ends at a vertex.
class CountVector {
 public:
  CountVector() = default;
  explicit CountVector(std::vector<unsigned> entries) : entries_(std::move(entries)) {}
  CountVector(std::initializer_list<unsigned> entries) : entries_(entries) {}

  /// The all-zero vector of length `colors`.
  static CountVector zeros(std::size_t colors) { return CountVector(std::vector<unsigned>(colors, 0)); }

  std::size_t size() const { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  unsigned& operator[](std::size_t i) { return entries_[i]; }
  std::span<const unsigned> entries() const { return entries_; }

  /// Sum of the entries (the degree of a vertex with this color profile).
  unsigned height() const;

  /// Renders as "[1,0,2]".
  std::string to_string() const;

  auto operator<=>(const CountVector&) const = default;

 private:
  std::vector<unsigned> entries_;
};

/// All count vectors of length `colors` whose entries sum to `height`, in
/// lexicographically decreasing order of entries ([h,0,..] first).
std::vector<CountVector> count_vectors_of_height(std::size_t colors, unsigned height);

}  // namespace ecm
