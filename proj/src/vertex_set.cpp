#include "chhs/vertex_set.hpp"

#include "chhs/errors.hpp"

#include <algorithm>

namespace chhs {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::of(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering VertexSet::lex_compare(const VertexSet& other) const {
  const auto a = to_vector();
  const auto b = other.to_vector();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  }
  return 0;
}

std::size_t VertexSet::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::NotASimplex: return "NotASimplex";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::VertexNotInAmbient: return "VertexNotInAmbient";
    case ErrorKind::EmptyTarget: return "EmptyTarget";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::MismatchedBase: return "MismatchedBase";
    case ErrorKind::MaximalSimplex: return "MaximalSimplex";
    case ErrorKind::EmptyLink: return "EmptyLink";
    case ErrorKind::EmptySimplex: return "EmptySimplex";
    case ErrorKind::BadLevel: return "BadLevel";
    case ErrorKind::EdgeOutsideLink: return "EdgeOutsideLink";
    case ErrorKind::NotAlmostMaximal: return "NotAlmostMaximal";
    case ErrorKind::EndpointOutsideLink: return "EndpointOutsideLink";
    case ErrorKind::ActionNotSimplicial: return "ActionNotSimplicial";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::MaximalClass: return "MaximalClass";
    case ErrorKind::OrthogonalPair: return "OrthogonalPair";
    case ErrorKind::EqualClasses: return "EqualClasses";
    case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::OverlappingBlobs: return "OverlappingBlobs";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotMaximalSimplex: return "NotMaximalSimplex";
    case ErrorKind::InvalidPerturbation: return "InvalidPerturbation";
  }
  return "Unknown";
}

}  // namespace chhs
