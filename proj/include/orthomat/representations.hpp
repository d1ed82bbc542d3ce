#pragma once

#include <optional>

#include "orthomat/ground_set.hpp"
#include "orthomat/kernels.hpp"
#include "orthomat/matrix.hpp"

namespace orthomat {

// k x n matrix of full row rank; columns are the elements 1..n of I.
class ClassicalRepresentation {
 public:
  // Throws RankError if rank < rows.
  explicit ClassicalRepresentation(RationalMatrix m);

  const RationalMatrix& matrix() const { return m_; }
  int rank() const { return static_cast<int>(m_.rows()); }
  int ambient() const { return static_cast<int>(m_.cols()); }

 private:
  RationalMatrix m_;
};

enum class FormKind { Symplectic, Orthogonal };

const char* to_string(FormKind f);

// k x 2n matrix (A | B) with columns 1..n, 1*..n* spanning a totally
// isotropic subspace: AB^t symmetric (symplectic) or skew (orthogonal).
class IsotropicRepresentation {
 public:
  const RationalMatrix& matrix() const { return m_; }
  FormKind form() const { return form_; }
  int rank() const { return static_cast<int>(m_.rows()); }
  int ambient() const { return static_cast<int>(m_.cols() / 2); }
  bool is_lagrangian() const { return rank() == ambient(); }

 private:
  friend IsotropicRepresentation validate_isotropy(const RationalMatrix&, FormKind);
  IsotropicRepresentation(RationalMatrix m, FormKind f) : m_(std::move(m)), form_(f) {}

  RationalMatrix m_;
  FormKind form_;
};

// Checks rank and the AB^t condition exactly. Throws RankError, or
// IsotropyError carrying the first offending (r, s) entry (0-based) of
// AB^t -/+ (AB^t)^t.
IsotropicRepresentation validate_isotropy(const RationalMatrix& m, FormKind form);

// Bouchet normal form: collection { S Δ twist : det(core_S) != 0 }.
struct StandardForm {
  RationalMatrix core;  // symmetric (s = +1) or skew (s = -1)
  ElementSet twist;     // T ⊆ I
  int s = -1;
};

// Determinant of the columns listed in `columns` (colex order of the set).
Rational column_minor(const RationalMatrix& m, const ElementSet& columns);

// { S ∈ I_k : det(columns S) != 0 }. Throws RankError if not full row rank.
BasisCollection bases_from_classical_rep(const ClassicalRepresentation& r,
                                         Execution exec = Execution::Parallel);
BasisCollection bases_from_isotropic_rep(const IsotropicRepresentation& r,
                                         Execution exec = Execution::Parallel);

// Gale maximum of the represented Lagrangian matroid under
// 1 < 2 < ... < n < n* < ... < 1*.
ElementSet default_basis(const IsotropicRepresentation& r);

// Swap columns j <-> j* for j ∈ f ∩ I (negating the column moved to j* in
// the symplectic case), then row-reduce the right block to the identity.
// `f` defaults to default_basis(r). Throws FlavorError for k < n and
// PreconditionError if f is not a basis.
StandardForm standard_form(const IsotropicRepresentation& r, std::optional<ElementSet> f = std::nullopt);

// { S Δ T : S ⊆ I, det of the principal minor of core on S != 0 }.
SetCollection bouchet_delta_matroid(const StandardForm& sf, Execution exec = Execution::Parallel);

// [[B, 0], [0, D]] with D = orthogonal_complement(B): a Lagrangian
// representation that is at once symplectic and orthogonal. The returned
// object is tagged orthogonal.
IsotropicRepresentation embed_classical_rep(const ClassicalRepresentation& r);

}  // namespace orthomat
