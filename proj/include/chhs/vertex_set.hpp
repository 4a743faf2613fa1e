#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace chhs {

using Vertex = std::uint32_t;

/// Canonical simplex form: strictly increasing vertex indices. Vertex
/// indices follow label order, so index order is label order.
using Simplex = std::vector<Vertex>;

/// Fixed-universe bitset over vertex indices. Links, saturations and
/// fingerprints are all VertexSets, so set algebra is word-parallel.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, const std::vector<Vertex>& members);

  std::size_t universe() const noexcept { return universe_; }

  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const noexcept = default;

  /// Lexicographic order on the sorted member lists.
  std::strong_ordering lex_compare(const VertexSet& other) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;
  /// Smallest member; the set must be nonempty.
  Vertex first() const noexcept;
  std::size_t hash() const noexcept;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace chhs
