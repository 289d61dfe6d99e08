#pragma once

// Partitions, multipartitions and their (shifted) ell-residues.

#include "nilcone/dim_vector.hpp"
#include "nilcone/rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilcone {

/// Weakly decreasing sequence of positive integers; the empty sequence is the
/// empty partition.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  /// Number of rows of the Young diagram.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// Row j is 1-based, matching the Young diagram convention.
  int row(int j) const { return parts_[static_cast<std::size_t>(j - 1)]; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// `[2,1]`, `[]`.
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(parts_[k]);
    }
    return s + "]";
  }

  static Partition parse(std::string_view text) {
    auto s = detail::trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw ParseError("partition must look like [a,b,...]: '" + std::string(text) + "'");
    auto body = detail::trim(s.substr(1, s.size() - 2));
    std::vector<int> parts;
    if (!body.empty()) {
      for (auto tok : detail::split(body, ',')) {
        BigInt v = detail::parse_bigint(tok);
        if (v < 1 || v > 1'000'000) throw ParseError("partition part out of range in '" + std::string(text) + "'");
        parts.push_back(static_cast<int>(v));
      }
    }
    try {
      return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
  }

 private:
  std::vector<int> parts_;
};

/// Exactly ell partitions, indexed 0..ell-1.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {}

  static MultiPartition empty_of(int ell) {
    return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(ell)));
  }

  int ell() const { return static_cast<int>(components_.size()); }
  const std::vector<Partition>& components() const { return components_; }
  const Partition& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

  int size() const {
    int total = 0;
    for (const auto& p : components_) total += p.size();
    return total;
  }

  bool all_empty() const {
    for (const auto& p : components_)
      if (!p.empty()) return false;
    return true;
  }

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

  /// Semicolon-separated partitions, e.g. `[2];[]`.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += ';';
      s += components_[i].to_string();
    }
    return s;
  }

  static MultiPartition parse(std::string_view text) {
    auto s = detail::trim(text);
    if (s.empty()) throw ParseError("empty multipartition");
    std::vector<Partition> comps;
    for (auto tok : detail::split(s, ';')) comps.push_back(Partition::parse(tok));
    return MultiPartition(std::move(comps));
  }

 private:
  std::vector<Partition> components_;
};

/// Box of a Young diagram: `column` i is the index within a row, `row` j the row.
struct Box {
  int column = 1;
  int row = 1;

  bool in_diagram(const Partition& lambda) const {
    return row >= 1 && row <= lambda.length() && column >= 1 && column <= lambda.row(row);
  }
};

/// ct(box) = j - i.
constexpr int content(Box box) { return box.row - box.column; }

namespace detail {
inline int mod(long long a, int ell) { return static_cast<int>(((a % ell) + ell) % ell); }
}  // namespace detail

inline DimVector residue(const Partition& lambda, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  auto v = DimVector::zero(ell);
  for (int j = 1; j <= lambda.length(); ++j)
    for (int i = 1; i <= lambda.row(j); ++i) v[detail::mod(content({i, j}), ell)] += 1;
  return v;
}

inline DimVector shifted_residue(const MultiPartition& nu, int ell) {
  if (nu.ell() != ell)
    throw DimensionError("multipartition has " + std::to_string(nu.ell()) + " components, expected " +
                         std::to_string(ell));
  auto v = DimVector::zero(ell);
  for (int i = 0; i < ell; ++i) v += residue(nu[i], ell).rotated(i);
  return v;
}

/// All partitions of exactly `size`, reverse-lexicographic ((3), (2,1), (1,1,1)).
inline std::vector<Partition> partitions_of(int size) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, size, size);
  return out;
}

/// Every partition of size 0..max_size: size ascending, then reverse-lex.
inline std::vector<Partition> enumerate_partitions(int max_size) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k) {
    auto block = partitions_of(k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

/// Every ell-tuple of partitions of total size n. Order is lexicographic over
/// components, each component ranging size-descending then reverse-lex.
inline std::vector<MultiPartition> enumerate_multipartitions(int n, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  std::vector<MultiPartition> out;
  if (n < 0) return out;
  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= n; ++k) by_size.push_back(partitions_of(k));

  std::vector<Partition> cur;
  auto rec = [&](auto&& self, int component, int remaining) -> void {
    if (component == ell - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        cur.push_back(p);
        self(self, component + 1, remaining - k);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace nilcone
