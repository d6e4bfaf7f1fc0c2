#include "wcb/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "wcb/error.hpp"

namespace wcb {

namespace {

bool strictly_increasing(const std::vector<int>& row) {
  return std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) == row.end();
}

}  // namespace

Charge TwoRowTableau::charge() const {
  validate(*this);
  const int first = top.front();
  return {first + static_cast<int>(bottom.size()) - 1, first + static_cast<int>(top.size()) - 1};
}

void validate(const TwoRowTableau& t) {
  if (t.top.empty() || t.bottom.empty())
    throw Error(ErrorKind::malformed_tableau, "rows must be nonempty");
  if (t.top.size() < t.bottom.size())
    throw Error(ErrorKind::malformed_tableau, "top row shorter than bottom row (s1 > s2)");
  if (!strictly_increasing(t.top) || !strictly_increasing(t.bottom))
    throw Error(ErrorKind::malformed_tableau, "rows must be strictly increasing");
  if (t.top.front() != t.bottom.front())
    throw Error(ErrorKind::malformed_tableau, "leftmost column entries differ");
}

bool is_valid(const TwoRowTableau& t) noexcept {
  try {
    validate(t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void require_supported(const Charge& s) {
  if (s.s1 > s.s2)
    throw Error(ErrorKind::unsupported_charge,
                "only s2 >= s1 is supported, got (" + std::to_string(s.s1) + "," + std::to_string(s.s2) + ")");
}

int minimal_depth(const ChargedBipartition& cb) {
  require_supported(cb.charge);
  const auto& [l1, l2] = cb.bipartition;
  const int gap = cb.charge.gap();
  int d = gap;
  while (l1.part_at(d + 1 - gap) != 0 || l2.part_at(d + 1) != 0) ++d;
  return d;
}

TwoRowTableau build_tableau(const ChargedBipartition& cb) { return build_tableau(cb, minimal_depth(cb)); }

TwoRowTableau build_tableau(const ChargedBipartition& cb, int depth) {
  require_supported(cb.charge);
  const int min_d = minimal_depth(cb);
  if (depth < min_d)
    throw Error(ErrorKind::range, "depth " + std::to_string(depth) + " below minimal depth " + std::to_string(min_d));

  const auto& [l1, l2] = cb.bipartition;
  const auto [s1, s2] = cb.charge;
  const int d = depth;
  TwoRowTableau t;
  for (int j = 1; j <= d + 1; ++j) t.top.push_back(s2 - d + (j - 1) + l2.part_at(d + 2 - j));
  for (int j = 1; j <= d + 1 + s1 - s2; ++j) t.bottom.push_back(s2 - d + (j - 1) + l1.part_at(d + 2 + s1 - s2 - j));
  return t;
}

ChargedBipartition to_charged_bipartition(const TwoRowTableau& t) {
  validate(t);
  const Charge s = t.charge();
  const int d = t.depth();
  const int base = s.s2 - d;

  // Entry j (1-based) of a row encodes the part with index len+1−j.
  auto decode = [&](const std::vector<int>& row, const char* which) {
    std::vector<int> parts;
    for (std::size_t m = 1; m <= row.size(); ++m) {
      const std::size_t j = row.size() + 1 - m;
      const int part = row[j - 1] - (base + static_cast<int>(j) - 1);
      if (part < 0) throw Error(ErrorKind::malformed_tableau, std::string("negative part in ") + which + " row");
      if (!parts.empty() && part > parts.back())
        throw Error(ErrorKind::malformed_tableau, std::string("parts not weakly decreasing in ") + which + " row");
      parts.push_back(part);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
  };

  return {{decode(t.bottom, "bottom"), decode(t.top, "top")}, s};
}

TwoRowTableau pad(const TwoRowTableau& t, int m) {
  if (m < 0) throw Error(ErrorKind::range, "padding must be nonnegative");
  validate(t);
  TwoRowTableau out;
  const int first = t.top.front();
  for (int i = m; i >= 1; --i) {
    out.top.push_back(first - i);
    out.bottom.push_back(first - i);
  }
  out.top.insert(out.top.end(), t.top.begin(), t.top.end());
  out.bottom.insert(out.bottom.end(), t.bottom.begin(), t.bottom.end());
  return out;
}

TwoRowTableau canonicalize(const TwoRowTableau& t) { return build_tableau(to_charged_bipartition(t)); }

std::string to_compact_string(const TwoRowTableau& t) {
  auto row = [](const std::vector<int>& r) {
    std::string out = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(r[i]);
    }
    return out + ")";
  };
  return row(t.top) + "/" + row(t.bottom);
}

std::string render(const TwoRowTableau& t) {
  std::size_t width = 1;
  for (const auto* row : {&t.top, &t.bottom})
    for (int v : *row) width = std::max(width, std::to_string(v).size());

  std::ostringstream out;
  for (const auto* row : {&t.top, &t.bottom}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      auto cell = std::to_string((*row)[i]);
      if (i) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wcb
