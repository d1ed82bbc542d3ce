#pragma once

namespace orthomat {

// Size guards for the exhaustive procedures. All are raised from the CLI
// with --max-n (every n-limit) and --max-k.
struct Limits {
  int ordering_n = 6;    // B_n / D_n ordering enumeration (2^n n! at most)
  int linear_n = 7;      // classical Gale check over all n! orders of I
  int exhaustive_n = 6;  // pair checks over 2^n x 2^n subsets of I
  int chirotope_n = 6;   // tuple checks over I^k x I^k
  int chirotope_k = 3;
};

}  // namespace orthomat
