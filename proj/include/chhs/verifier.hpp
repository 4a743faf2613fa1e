#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chhs/instance.hpp"
#include "chhs/metric_graph.hpp"
#include "chhs/rational.hpp"

namespace chhs {

struct VerifyOptions {
  std::size_t delta_cap = kDefaultDeltaCap;
  /// Y-space hyperbolicity and super-BGI diagnostics only run up to this many vertices.
  std::size_t diagnostic_vertex_cap = 64;
  bool lemma_checks = true;
};

struct ClassMetrics {
  std::size_t cls = 0;
  Rational delta_c;
  std::optional<std::pair<Vertex, Vertex>> delta_witness;
  Rational lambda;
  std::optional<std::pair<Vertex, Vertex>> lambda_witness;
  Dist diameter_c = 0;
  bool y_connected = true;
  std::optional<Rational> delta_y;
};

struct Condition3Witness {
  std::size_t delta_cls = 0;
  std::size_t sigma_cls = 0;
  std::vector<std::size_t> gammas;
};

struct Condition3Certificate {
  std::size_t delta_cls = 0;
  std::size_t sigma_cls = 0;
  VertexSet pi;
};

struct Condition3Outcome {
  Rational threshold;
  bool holds = true;
  std::size_t nonvacuous_pairs = 0;
  std::optional<Condition3Witness> witness;
};

struct Condition4Witness {
  VertexSet simplex;
  Vertex v = 0;
  Vertex w = 0;
};

struct Condition4Result {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<Condition4Witness> witness;
};

struct LemmaChecks {
  bool ran = false;
  bool c0_equals_c = true;
  bool sc_nesting = true;
  bool y_connected = true;
  std::string detail;
};

struct VerificationReport {
  int complexity_n = 0;
  int dimension = 0;
  std::vector<ClassMetrics> classes;
  Rational delta2;
  bool condition2 = true;
  std::optional<std::size_t> condition2_class;
  std::optional<std::pair<Vertex, Vertex>> condition2_pair;
  std::optional<Rational> delta_star;
  /// Smallest passing condition-3 threshold when condition 2 is infinite.
  std::optional<Rational> delta3;
  Condition3Outcome condition3;
  bool monotone_recheck = true;
  std::vector<Condition3Certificate> certificates;
  Condition4Result condition4;
  LemmaChecks lemmas;
  std::optional<Dist> super_bgi;
  bool pass = false;
};

VerificationReport verify_chhs(const Instance& inst, const VerifyOptions& options = {});

/// Condition 3 at a fixed threshold, given the diameter of C for every class.
Condition3Outcome check_condition3(const Instance& inst, const std::vector<Dist>& diameters, const Rational& threshold);

/// The (size, lex)-least simplex certifying condition 3 for a pair, if any.
std::optional<VertexSet> condition3_certificate(const Instance& inst, const std::vector<Dist>& diameters,
                                                const Rational& threshold, std::size_t delta_cls, std::size_t sigma_cls);

Condition4Result check_condition4(const Instance& inst);

/// Smallest half-integer >= r.
Rational ceil_half(const Rational& r);

}  // namespace chhs
