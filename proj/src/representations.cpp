#include "orthomat/representations.hpp"

#include <bit>

#include "orthomat/axioms.hpp"
#include "orthomat/errors.hpp"
#include "orthomat/linalg.hpp"

namespace orthomat {
namespace {

BasisCollection nonzero_minors(const RationalMatrix& m, int n, int k, std::vector<ElementSet> candidates,
                               Execution exec) {
  auto nonzero = kernels::map_indices<char>(
      candidates.size(), [&](std::size_t i) -> char { return column_minor(m, candidates[i]) != 0; }, exec);
  std::vector<ElementSet> bases;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (nonzero[i]) bases.push_back(candidates[i]);
  return BasisCollection(n, k, std::move(bases));
}

}  // namespace

ClassicalRepresentation::ClassicalRepresentation(RationalMatrix m) : m_(std::move(m)) {
  if (m_.cols() > static_cast<std::size_t>(kMaxAmbient)) throw DomainError("too many columns");
  if (orthomat::rank(m_) != m_.rows()) throw RankError("classical representation is not of full row rank");
}

const char* to_string(FormKind f) { return f == FormKind::Symplectic ? "symplectic" : "orthogonal"; }

IsotropicRepresentation validate_isotropy(const RationalMatrix& m, FormKind form) {
  if (m.cols() % 2 != 0) throw DimensionError("isotropic representation needs an even number of columns");
  const std::size_t n = m.cols() / 2;
  if (n > static_cast<std::size_t>(kMaxAmbient)) throw DomainError("ambient n too large");
  if (m.rows() > n) throw DimensionError("totally isotropic subspaces have dimension at most n");
  if (rank(m) != m.rows()) throw RankError("isotropic representation is not of full row rank");
  const RationalMatrix a = m.block(0, 0, m.rows(), n);
  const RationalMatrix b = m.block(0, n, m.rows(), n);
  const RationalMatrix abt = a * b.transpose();
  for (std::size_t r = 0; r < abt.rows(); ++r)
    for (std::size_t s = r; s < abt.cols(); ++s) {
      Rational defect = form == FormKind::Symplectic ? Rational(abt(r, s) - abt(s, r)) : Rational(abt(r, s) + abt(s, r));
      if (defect != 0)
        throw IsotropyError(std::string("AB^t is not ") +
                                (form == FormKind::Symplectic ? "symmetric" : "skew-symmetric") +
                                ": entry (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ") of AB^t " +
                                (form == FormKind::Symplectic ? "- " : "+ ") + "(AB^t)^t is " + to_string(defect),
                            r, s);
    }
  RationalMatrix labeled = m;
  std::vector<GroundElement> labels;
  for (std::size_t bit = 0; bit < 2 * n; ++bit) labels.push_back(element_at_bit(static_cast<int>(bit), n));
  labeled.set_labels(std::move(labels));
  return IsotropicRepresentation(std::move(labeled), form);
}

Rational column_minor(const RationalMatrix& m, const ElementSet& columns) {
  if (static_cast<std::size_t>(columns.size()) != m.rows()) return 0;
  std::vector<std::size_t> idx;
  for (std::uint64_t s = columns.mask(); s != 0; s &= s - 1) idx.push_back(std::countr_zero(s));
  return determinant(m.columns(idx));
}

BasisCollection bases_from_classical_rep(const ClassicalRepresentation& r, Execution exec) {
  const int n = r.ambient(), k = r.rank();
  return nonzero_minors(r.matrix(), n, k, plain_subsets(n, k), exec);
}

BasisCollection bases_from_isotropic_rep(const IsotropicRepresentation& r, Execution exec) {
  const int n = r.ambient(), k = r.rank();
  auto out = nonzero_minors(r.matrix(), n, k, admissible_subsets(n, k), exec);
  if (out.empty()) throw InternalConsistencyError("isotropic representation produced no admissible bases");
  return out;
}

ElementSet default_basis(const IsotropicRepresentation& r) {
  const int n = r.ambient();
  std::vector<GroundElement> seq;
  for (int i = 1; i <= n; ++i) seq.push_back({i, false});
  auto top = gale_maximum(bases_from_isotropic_rep(r), AdmissibleOrdering(OrderingKind::Bn, seq));
  if (!top) throw InternalConsistencyError("representable collection has no Gale maximum");
  return *top;
}

StandardForm standard_form(const IsotropicRepresentation& r, std::optional<ElementSet> f) {
  if (!r.is_lagrangian()) throw FlavorError("standard form needs a Lagrangian representation (k = n)");
  const int n = r.ambient();
  const ElementSet basis = f ? *f : default_basis(r);
  if (basis.ambient() != n || basis.size() != n || !is_admissible(basis) || column_minor(r.matrix(), basis) == 0)
    throw PreconditionError(to_string(basis) + " is not a basis of the represented matroid");
  RationalMatrix m = r.matrix();
  for (int j = 1; j <= n; ++j) {
    if (!basis.contains({j, false})) continue;
    const std::size_t left = j - 1, right = n + j - 1;
    m.swap_columns(left, right);
    if (r.form() == FormKind::Symplectic)
      for (std::size_t row = 0; row < m.rows(); ++row) m(row, right) = -m(row, right);
  }
  RationalMatrix reduced = reduce_right_block_to_identity(m);
  StandardForm out{reduced.block(0, 0, n, n), basis.plain_part(), r.form() == FormKind::Symplectic ? 1 : -1};
  if (out.s == 1 ? !is_symmetric(out.core) : !is_skew_symmetric(out.core))
    throw InternalConsistencyError("standard form core lost its (skew-)symmetry");
  return out;
}

SetCollection bouchet_delta_matroid(const StandardForm& sf, Execution exec) {
  const int n = static_cast<int>(sf.core.rows());
  const std::size_t count = std::size_t{1} << n;
  auto nonzero = kernels::map_indices<char>(
      count,
      [&](std::size_t s) -> char {
        return determinant(principal_submatrix(sf.core, static_cast<std::uint32_t>(s))) != 0;
      },
      exec);
  std::vector<ElementSet> sets;
  for (std::size_t s = 0; s < count; ++s)
    if (nonzero[s]) sets.push_back(sym_diff(ElementSet::from_plain(n, static_cast<std::uint32_t>(s)), sf.twist));
  return SetCollection(n, std::move(sets));
}

IsotropicRepresentation embed_classical_rep(const ClassicalRepresentation& r) {
  const std::size_t k = r.rank(), n = r.ambient();
  const RationalMatrix d = orthogonal_complement(r.matrix());
  RationalMatrix m(n, 2 * n);
  for (std::size_t row = 0; row < k; ++row)
    for (std::size_t c = 0; c < n; ++c) m(row, c) = r.matrix()(row, c);
  for (std::size_t row = 0; row < n - k; ++row)
    for (std::size_t c = 0; c < n; ++c) m(k + row, n + c) = d(row, c);
  return validate_isotropy(m, FormKind::Orthogonal);
}

}  // namespace orthomat
