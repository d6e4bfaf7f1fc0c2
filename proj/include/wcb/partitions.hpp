#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wcb {

/// A weakly decreasing list of positive integers. The empty partition has
/// size 0. Indices past the last part read as zero (see part_at).
class Partition {
 public:
  Partition() = default;
  /// Throws Error(parse) unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "2,1"; the empty string (or "∅") is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept;

  /// 1-based part with zero extension. Throws Error(invalid_index) for i < 1.
  int part_at(long i) const;

  /// Comma-separated parts, empty string for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Ordered pair (λ¹, λ²).
struct Bipartition {
  Partition first;
  Partition second;

  int size() const noexcept { return first.size() + second.size(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

bool is_symmetric(const Bipartition& b);

/// "λ¹ / λ²" with ∅ for empty components, e.g. "∅ / 1,1".
std::string to_string(const Bipartition& b);

/// All partitions of n in increasing lexicographic order of their part lists.
std::vector<Partition> enumerate_partitions(int n);

/// Every bipartition of n once, ordered lexicographically by (|λ¹|, λ¹, λ²)
/// where partitions of equal size compare by their part lists.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// (μ, μ) for μ ⊢ n/2, in the order of enumerate_partitions; empty for odd n.
std::vector<Bipartition> enumerate_symmetric_bipartitions(int n);

}  // namespace wcb
