#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chhs/flag_complex.hpp"
#include "chhs/xgraph.hpp"

namespace chhs {

/// Finite group by multiplication table; element 0 is not assumed to be the identity.
struct FiniteGroup {
  std::vector<std::vector<int>> table;
  int size() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int identity() const;
  int inverse(int a) const;
};

FiniteGroup symmetric_group(int n);
FiniteGroup cyclic_group(int n);
/// Closure of the given elements under multiplication.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);
/// Index of a permutation of {0..n-1} in symmetric_group(n).
int permutation_index(const std::vector<int>& perm);

struct AmalgamSpec {
  FiniteGroup a;
  FiniteGroup b;
  FiniteGroup c;
  /// Image of each element of C in A and in B.
  std::vector<int> c_in_a;
  std::vector<int> c_in_b;
  int radius = 1;
};

struct Amalgam {
  FlagComplex x;
  XGraph w;
  /// Group elements of word length <= radius - 1, and cosets with such a member.
  std::vector<std::string> interior;
  std::vector<std::string> group_vertices;
  std::vector<std::string> a_cosets;
  std::vector<std::string> b_cosets;
  std::size_t order_a = 0;
  std::size_t index_c_in_a = 0;
};

Amalgam gen_amalgam(const AmalgamSpec& spec);
/// A = B = S3, C = <(0 1)>, at the given radius.
AmalgamSpec s3_amalgam_spec(int radius);

struct BlowupSpec {
  std::vector<std::string> base_vertices;
  std::vector<std::pair<std::string, std::string>> base_edges;
  std::map<std::string, std::vector<std::string>> blobs;
};

struct Blowup {
  FlagComplex x;
  /// Image of each vertex of x in the base graph, by label.
  std::map<std::string, std::string> collapse;
  bool collapse_is_morphism = true;
};

Blowup gen_blowup(const BlowupSpec& spec);

enum class WRule { None, Complete, SharedCodim1Face };
WRule parse_w_rule(const std::string& name);
std::string to_string(WRule rule);
XGraph apply_w_rule(const FlagComplex& x, WRule rule);

FlagComplex gen_path(std::size_t n);
FlagComplex gen_cycle(std::size_t n);
FlagComplex gen_discrete(std::size_t n, const std::string& prefix);
FlagComplex gen_octahedron(std::size_t k);
FlagComplex gen_random_flag(std::size_t n, double p, std::uint64_t seed);

}  // namespace chhs
