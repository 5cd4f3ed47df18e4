#pragma once

#include <stdexcept>
#include <string>

namespace stabset {

// Size guards for the exponential routines. These are configuration, not
// constants: every guarded routine takes a Limits and refuses loudly
// instead of hanging.
struct Limits {
  int max_n = 24;            // clique / coloring / stable-set enumeration
  int codegree_max_n = 16;   // codegree LP path (ambient dimension)
  int facet_max_n = 12;      // facet enumeration (ambient dimension)
  int ehrhart_max_n = 8;     // lattice-point window, Ehrhart interpolation
  int odd_subset_max_n = 16; // odd-set oracle (subsets enumerated per component)
  int idp_k_max = 3;         // bounded integer-decomposition check
  int sweep_max_n = 5;       // exhaustive labeled-graph sweeps

  // One-knob override used by the CLI --max-n flag.
  Limits& with_max_n(int n) {
    max_n = n;
    codegree_max_n = n;
    ehrhart_max_n = n;
    odd_subset_max_n = n;
    return *this;
  }
};

// A size guard was exceeded. Maps to CLI exit code 1.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_guard(bool ok, const std::string& what) {
  if (!ok) throw GuardError(what);
}

}  // namespace stabset
