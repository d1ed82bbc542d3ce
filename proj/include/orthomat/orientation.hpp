#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthomat/ground_set.hpp"
#include "orthomat/kernels.hpp"
#include "orthomat/limits.hpp"
#include "orthomat/matrix.hpp"
#include "orthomat/representations.hpp"

namespace orthomat {

// Rank-k alternating sign map on I^k, stored on sorted k-subsets (bitmask of
// I) and extended to tuples on demand.
class Chirotope {
 public:
  Chirotope(int n, int k) : n_(n), k_(k) {}

  int ambient() const { return n_; }
  int rank() const { return k_; }

  // Value on a sorted subset; 0 unless |subset| = k.
  int value(const ElementSet& subset) const;
  void set(const ElementSet& subset, int sign);
  // Alternating extension: 0 on repeated entries, otherwise the sign of the
  // sorting permutation times the subset value. Entries are 1-based.
  int value(std::span<const int> tuple) const;

  const std::map<std::uint32_t, int>& nonzero() const& { return values_; }
  std::map<std::uint32_t, int> nonzero() && { return std::move(values_); }
  Chirotope negated() const;

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  int n_;
  int k_;
  std::map<std::uint32_t, int> values_;
};

// Map 2^I -> {+1,-1,0}, dense over subset bitmasks.
class DeltaSignMap {
 public:
  explicit DeltaSignMap(int n);

  int ambient() const { return n_; }
  int value(std::uint32_t subset) const { return values_[subset]; }
  int value(const ElementSet& s) const { return values_[s.plain_mask()]; }
  void set(std::uint32_t subset, int sign);
  std::size_t domain_size() const { return values_.size(); }
  DeltaSignMap negated() const;
  SetCollection support() const;

  friend bool operator==(const DeltaSignMap&, const DeltaSignMap&) = default;

 private:
  int n_;
  std::vector<std::int8_t> values_;
};

// Map 2^I -> Q, the candidate twisted Pfaffian maps.
class RationalDeltaMap {
 public:
  explicit RationalDeltaMap(int n);

  int ambient() const { return n_; }
  const Rational& value(std::uint32_t subset) const { return values_[subset]; }
  void set(std::uint32_t subset, Rational v) { values_[subset] = std::move(v); }
  std::size_t domain_size() const { return values_.size(); }
  DeltaSignMap signs() const;

 private:
  int n_;
  std::vector<Rational> values_;
};

// Map J_n -> {+1,-1,0}; only nonzero values are stored.
class LagrangianSignMap {
 public:
  explicit LagrangianSignMap(int n) : n_(n) {}

  int ambient() const { return n_; }
  int value(const ElementSet& b) const;
  // Throws DomainError unless b is an admissible n-set.
  void set(const ElementSet& b, int sign);
  const std::map<ElementSet, int>& nonzero() const& { return values_; }
  std::map<ElementSet, int> nonzero() && { return std::move(values_); }
  BasisCollection support() const;
  LagrangianSignMap negated() const;

  friend bool operator==(const LagrangianSignMap&, const LagrangianSignMap&) = default;

 private:
  int n_;
  std::map<ElementSet, int> values_;
};

// Canonical class representatives: the colex-first support set gets +1.
Chirotope canonical(const Chirotope& x);
DeltaSignMap canonical(const DeltaSignMap& p);
LagrangianSignMap canonical(const LagrangianSignMap& p);

bool signmaps_equivalent(const LagrangianSignMap& p, const LagrangianSignMap& q);
bool signmaps_equivalent(const DeltaSignMap& p, const DeltaSignMap& q);
bool signmaps_equivalent(const Chirotope& p, const Chirotope& q);

// p'(S) = p(S ∪ (I∖S)*).
DeltaSignMap delta_restriction(const LagrangianSignMap& p);
// χ widened to 2^I with zero off rank k.
DeltaSignMap widen(const Chirotope& x);
// Inverse of widen; nullopt if some support set has size != k or the map is
// identically zero.
std::optional<Chirotope> restrict_to_rank(const DeltaSignMap& p, int k);

// --- verifiers ------------------------------------------------------------

struct ChirotopeWitness {
  int axiom;           // 1: identically zero, 3: sign condition
  std::vector<int> x;  // 1-based tuples, empty for axiom 1
  std::vector<int> y;
};

struct DeltaWitness {
  int axiom;  // 1: identically zero, 2: parity, 3: exchange relation
  ElementSet a;
  ElementSet b;
  int w = 0;  // set for oriented-Δ axiom 3
};

template <class W>
struct Verdict {
  bool holds = false;
  std::optional<W> witness;
  explicit operator bool() const { return holds; }
};

std::string describe(const ChirotopeWitness& w);
std::string describe(const DeltaWitness& w);

// Exhaustive over I^k x I^k. Alternation holds by construction of Chirotope.
Verdict<ChirotopeWitness> check_chirotope_axioms(const Chirotope& x, const Limits& limits = {},
                                                 Execution exec = Execution::Parallel);
// Exhaustive over all pairs A, B ⊆ I; axiom 3 checked as an exact sum.
Verdict<DeltaWitness> check_twisted_pfaffian(const RationalDeltaMap& p, const Limits& limits = {},
                                             Execution exec = Execution::Parallel);
// Exhaustive over all pairs A, B ⊆ I and w = ±1.
Verdict<DeltaWitness> check_oriented_delta(const DeltaSignMap& p, const Limits& limits = {},
                                           Execution exec = Execution::Parallel);

// --- constructions ----------------------------------------------------------

// χ(S) = sign det(columns S).
Chirotope chirotope_from_rep(const ClassicalRepresentation& r, Execution exec = Execution::Parallel);

// p(B) = Pf(a restricted to B Δ t), rational valued.
RationalDeltaMap pfaffian_map(const SkewSymmetricMatrix& a, const ElementSet& t,
                              Execution exec = Execution::Parallel);
// Signs of pfaffian_map.
DeltaSignMap oriented_delta_from_matrix(const SkewSymmetricMatrix& a, const ElementSet& t,
                                        Execution exec = Execution::Parallel);

struct DeltaRepresentation {
  SkewSymmetricMatrix a;
  ElementSet t;
};

// a_ij = det(T Δ {i,j}) / det(T) for i < j (columns of r, zero when the set
// does not have k elements), a_ji = -a_ij. Throws PreconditionError if t is
// not a basis.
DeltaRepresentation delta_orientation_from_chirotope(const ClassicalRepresentation& r, const ElementSet& t);

// Indices below are 1-based elements of I.

// -1 iff the pairs {i<j} and {k<l} interleave.
int epsilon_ijkl(int i, int j, int k, int l);
// -1 iff i <= k < j.
int rho_ijk(int i, int j, int k);

// Exchange columns i, j of (a | I_n) with those of I_n and row-reduce back to
// (B | I_n). Requires i < j and a_ij != 0 (PivotError otherwise).
SkewSymmetricMatrix pivot_transform(const SkewSymmetricMatrix& a, int i, int j);
// The same matrix from the closed-form entries in terms of a and its 4x4
// Pfaffian minors.
SkewSymmetricMatrix pivot_transform_closed_form(const SkewSymmetricMatrix& a, int i, int j);

// c_kl = rho_ijk rho_ijl b_kl.
SkewSymmetricMatrix sign_rescale(const SkewSymmetricMatrix& b, int i, int j);

// Pfaffian orientation of an orthogonal Lagrangian representation from the
// basis f (default_basis(r) when omitted): standard form A', T = f ∩ I,
// a_ij = eps_i eps_j a'_ij with eps flipping at each element of T, and
// p(B) = sign Pf(A restricted to (B Δ f) ∩ I).
LagrangianSignMap orient_orthogonal_rep(const IsotropicRepresentation& r, std::optional<ElementSet> f = std::nullopt,
                                        Execution exec = Execution::Parallel);

// orient_orthogonal_rep(embed_classical_rep(r)).
LagrangianSignMap orient_embedded_classical(const ClassicalRepresentation& r, Execution exec = Execution::Parallel);

}  // namespace orthomat
