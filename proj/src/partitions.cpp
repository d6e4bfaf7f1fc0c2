#include "wcb/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "wcb/error.hpp"

namespace wcb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_index: return "invalid-index";
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::unsupported_charge: return "unsupported-charge";
    case ErrorKind::malformed_tableau: return "malformed-tableau";
    case ErrorKind::malformed_result: return "malformed-result";
    case ErrorKind::undefined_displacement: return "undefined-displacement";
    case ErrorKind::prerequisite_failed: return "prerequisite-failed";
    case ErrorKind::range: return "range-error";
    case ErrorKind::domain: return "domain-error";
    case ErrorKind::theorem_contradiction: return "theorem-contradiction";
  }
  return "unknown";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorKind::parse, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::parse, "partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "∅") return Partition{};

  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(ErrorKind::parse, "bad partition part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part_at(long i) const {
  if (i < 1) throw Error(ErrorKind::invalid_index, "part index must be >= 1, got " + std::to_string(i));
  auto idx = static_cast<std::size_t>(i - 1);
  return idx < parts_.size() ? parts_[idx] : 0;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool is_symmetric(const Bipartition& b) { return b.first == b.second; }

std::string to_string(const Bipartition& b) {
  auto component = [](const Partition& p) { return p.empty() ? std::string("∅") : p.to_string(); };
  return component(b.first) + " / " + component(b.second);
}

namespace {

// Parts <= max_part summing to n, appended in decreasing lexicographic order.
void partitions_bounded(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_bounded(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_bounded(n, n, prefix, out);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k) {
    auto firsts = enumerate_partitions(k);
    auto seconds = enumerate_partitions(n - k);
    for (const auto& f : firsts)
      for (const auto& s : seconds) out.push_back({f, s});
  }
  return out;
}

std::vector<Bipartition> enumerate_symmetric_bipartitions(int n) {
  std::vector<Bipartition> out;
  if (n < 0 || n % 2 != 0) return out;
  for (const auto& mu : enumerate_partitions(n / 2)) out.push_back({mu, mu});
  return out;
}

}  // namespace wcb
