#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orthomat/ground_set.hpp"
#include "orthomat/kernels.hpp"
#include "orthomat/limits.hpp"

namespace orthomat {

enum class GaleFamily { Classical, Bn, Dn };

struct EmptyCollectionWitness {
  friend bool operator==(const EmptyCollectionWitness&, const EmptyCollectionWitness&) = default;
};

// A, B ∈ ℬ and i for which no exchange partner j exists.
struct ExchangeWitness {
  ElementSet a;
  ElementSet b;
  GroundElement i;
  friend bool operator==(const ExchangeWitness&, const ExchangeWitness&) = default;
};

// First ordering (in enumeration order) under which ℬ has no Gale maximum.
// Classical orders are stored as B_n orderings with an unstarred base.
struct GaleWitness {
  GaleFamily family;
  AdmissibleOrdering ordering;
  friend bool operator==(const GaleWitness&, const GaleWitness&) = default;
};

// The flag does not apply to this shape of collection.
struct NotApplicableWitness {
  std::string reason;
  friend bool operator==(const NotApplicableWitness&, const NotApplicableWitness&) = default;
};

using AxiomWitness = std::variant<EmptyCollectionWitness, ExchangeWitness, GaleWitness, NotApplicableWitness>;

std::string describe(const AxiomWitness& w);

struct AxiomCheck {
  bool holds = false;
  std::optional<AxiomWitness> witness;
  explicit operator bool() const { return holds; }
};

// For all A,B ∈ ℬ, i ∈ A∖B there is j ∈ B∖A with AΔ{i,j} ∈ ℬ.
// Throws FlavorError if a basis contains starred elements.
AxiomCheck check_classical_exchange(const BasisCollection& c, Execution exec = Execution::Parallel);

// For all A,B ∈ ℬ, i ∈ AΔB there is j ∈ AΔB with AΔ{i,j} ∈ ℬ (j = i allowed).
AxiomCheck check_symmetric_exchange(const SetCollection& c, Execution exec = Execution::Parallel);

// The same axiom on admissible n-sets with AΔ{i,j,i*,j*}.
// Throws FlavorError unless every basis is an admissible n-set.
AxiomCheck check_symmetric_matroid_exchange(const BasisCollection& c,
                                            Execution exec = Execution::Parallel);

// For every ordering of the family there is a Gale-maximum basis. Classical
// quantifies over all n! linear orders of I; B_n / D_n over
// enumerate_orderings. Throws ResourceError past the limits.
AxiomCheck check_gale_maximality(const BasisCollection& c, GaleFamily family, const Limits& limits = {},
                                 Execution exec = Execution::Parallel);

// Gale maximum of `c` under one ordering, if it exists.
std::optional<ElementSet> gale_maximum(const BasisCollection& c, const AdmissibleOrdering& ord);

// |B ∩ I| mod 2 constant over ℬ.
bool is_even(const BasisCollection& c);

struct FlagWitness {
  std::string flag;
  AxiomWitness witness;
};

struct MatroidClassification {
  bool is_classical = false;
  bool is_delta = false;
  bool is_symplectic = false;
  bool is_orthogonal = false;
  bool is_lagrangian = false;
  bool is_even = false;
  std::vector<FlagWitness> witnesses;  // one per failed flag
};

// Fills every flag. For Lagrangian-shaped input the maximality answers are
// cross-checked against symmetric exchange and evenness, and for classical
// input the exchange answer against Gale maximality; any disagreement
// throws InternalConsistencyError.
MatroidClassification classify(const BasisCollection& c, const Limits& limits = {},
                               Execution exec = Execution::Parallel);

}  // namespace orthomat
