#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace cmbal {

inline constexpr int kMaxVertices = 64;

/// A set of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(const std::vector<int>& elements) {
    VertexSet s;
    for (int v : elements) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  const std::uint64_t diff = a.bits() ^ b.bits();
  const int d = std::countr_zero(diff);
  const std::uint64_t above = d == 63 ? 0 : ~((std::uint64_t{2} << d) - 1);
  if (a.contains(d)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

/// Size first, then lexicographic: the enumeration order used for face lists.
constexpr bool graded_lex_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

/// Calls f on every subset of s (including the empty set and s itself).
template <class F>
void for_each_subset(VertexSet s, F&& f) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = full;
  while (true) {
    f(VertexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

}  // namespace cmbal

template <>
struct std::hash<cmbal::VertexSet> {
  std::size_t operator()(cmbal::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
