#pragma once

#include <string>
#include <vector>

#include "stabset/graph.hpp"
#include "stabset/invariants.hpp"
#include "stabset/limits.hpp"
#include "stabset/lp.hpp"
#include "stabset/polytope.hpp"

namespace stabset {

enum class CodegreeMethod {
  exact_lp,
  exact_facet,
  perfect_formula,
  matching_formula,
  matching_edmonds,
  h_perfect_formula,
};

// Relation pattern among (omega+1, codeg, chi+1): equality everywhere,
// strict on the left only, strict on the right only, strict on both.
enum class TripleClass { i, ii, iii, iv };

enum class BlockKind {
  facet,             // inequality known to be a facet of P
  valid_inequality,  // valid for P, tight or violated at the test point
  zero_direction,    // directional LP with maximum step 0
  outside,           // membership LP infeasible
};

// Why the all-ones point is not interior at k = codeg - 1.
struct BlockingCertificate {
  int k = 0;
  BlockKind kind = BlockKind::outside;
  Inequality inequality;  // facet / valid_inequality kinds
  int direction = 0;      // zero_direction kind: +i / -i for +/-e_i
};

struct CodegreeReport {
  int n = 0;  // ambient dimension of the polytope
  int omega_plus_1 = 0;
  int codeg = 0;
  int chi_plus_1 = 0;
  int degree = 0;  // n + 1 - codeg
  CodegreeMethod method = CodegreeMethod::exact_lp;
  int witness_k = 0;  // = codeg
  BlockingCertificate blocking;
  std::vector<Rational> interior_steps;  // 2n positive steps when the LP path ran
  TripleClass triple_class = TripleClass::i;
};

TripleClass classify_triple(int omega_plus_1, int codeg, int chi_plus_1);

// Smallest k with the all-ones point interior to k * P_G, by scanning
// k = omega+1 .. chi+1. Facet evaluation when the dimension is within the
// facet guard, directional LPs otherwise.
CodegreeReport codegree_exact(const Graph& g, const Limits& limits = {});

// Closed form for the matching polytope of g: max degree + 2 when the max
// degree is even and some component attaining it is complete, else max
// degree + 1. Ambient space is R^{E(g)}.
CodegreeReport codegree_matching_formula(const Graph& g, const Limits& limits = {});

// Independent oracle on the degree + odd-set description of the matching
// polytope, evaluated at the all-ones point, per connected component.
CodegreeReport codegree_matching_edmonds(const Graph& g, const Limits& limits = {});

// Dispatch: perfect -> omega+1; verified (or declared) h-perfect ->
// omega+1; line graph -> matching formula on the preimage; else exact.
CodegreeReport codegree_auto(const Graph& g, const Limits& limits = {},
                             bool declared_h_perfect = false);

std::string method_name(CodegreeMethod m);
std::string triple_class_name(TripleClass c);

}  // namespace stabset
