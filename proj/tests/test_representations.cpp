#include <doctest.h>

#include "orthomat/axioms.hpp"
#include "orthomat/errors.hpp"
#include "orthomat/representations.hpp"
#include "support.hpp"

using namespace orthomat;
using oracle::OSet;

namespace {

BasisCollection C(int n, std::vector<OSet> sets) {
  std::vector<ElementSet> v;
  for (const auto& s : sets) v.push_back(oracle::eset(n, s));
  return BasisCollection::from_sets(n, std::move(v));
}

RationalMatrix skew_with_identity(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  RationalMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1;
  }
  return m;
}

// Nonzero maximal minors by Leibniz, over the given candidate column sets.
std::vector<OSet> oracle_bases(const RationalMatrix& m, int n, const std::vector<ElementSet>& candidates) {
  std::vector<OSet> out;
  for (const auto& s : candidates) {
    oracle::Grid g(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (auto e : s.elements()) g[r].push_back(m(r, bit_of(e, n)));
    if (oracle::det(g) != 0) out.push_back(oracle::oset(s));
  }
  return out;
}

}  // namespace

TEST_CASE("classical bases examples") {
  auto r = ClassicalRepresentation(RationalMatrix::from_ints(2, 3, {1, 0, 1, 0, 1, 1}));
  CHECK(bases_from_classical_rep(r) == C(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(bases_from_classical_rep(ClassicalRepresentation(RationalMatrix::identity(3))) == C(3, {{1, 2, 3}}));
  CHECK(bases_from_classical_rep(ClassicalRepresentation(RationalMatrix::from_ints(2, 3, {1, 0, 0, 0, 1, 0}))) ==
        C(3, {{1, 2}}));
  CHECK_THROWS_AS(ClassicalRepresentation(RationalMatrix::from_ints(2, 3, {1, 1, 1, 2, 2, 2})), RankError);
}

TEST_CASE("isotropy validation") {
  auto skew = RationalMatrix::from_ints(2, 2, {0, 1, -1, 0});
  CHECK_NOTHROW(validate_isotropy(skew_with_identity(skew), FormKind::Orthogonal));
  auto sym = RationalMatrix::from_ints(2, 2, {1, 2, 2, 0});
  CHECK_THROWS_AS(validate_isotropy(skew_with_identity(sym), FormKind::Orthogonal), IsotropyError);
  auto m = RationalMatrix::from_ints(2, 4, {1, 0, 0, 1, 0, 1, 1, 0});
  CHECK_NOTHROW(validate_isotropy(m, FormKind::Symplectic));
  try {
    validate_isotropy(m, FormKind::Orthogonal);
    FAIL("expected IsotropyError");
  } catch (const IsotropyError& e) {
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
  }
  CHECK_THROWS_AS(validate_isotropy(RationalMatrix(1, 3), FormKind::Symplectic), DimensionError);
  CHECK_THROWS_AS(validate_isotropy(RationalMatrix(3, 4), FormKind::Symplectic), DimensionError);
  CHECK_THROWS_AS(validate_isotropy(RationalMatrix(1, 4), FormKind::Symplectic), RankError);
  auto labeled = validate_isotropy(m, FormKind::Symplectic);
  CHECK((*labeled.matrix().labels())[3] == GroundElement{2, true});
}

TEST_CASE("isotropic bases examples") {
  auto r = validate_isotropy(skew_with_identity(RationalMatrix::from_ints(2, 2, {0, 1, -1, 0})), FormKind::Orthogonal);
  CHECK(bases_from_isotropic_rep(r) == C(2, {{1, 2}, {-1, -2}}));
  auto zero = validate_isotropy(skew_with_identity(RationalMatrix(3, 3)), FormKind::Orthogonal);
  CHECK(bases_from_isotropic_rep(zero) == C(3, {{-1, -2, -3}}));
}

TEST_CASE("standard form examples") {
  auto a = RationalMatrix::from_ints(2, 2, {0, 1, -1, 0});
  auto r = validate_isotropy(skew_with_identity(a), FormKind::Orthogonal);
  auto sf = standard_form(r, oracle::eset(2, {-1, -2}));
  CHECK(sf.core == a);
  CHECK(sf.twist.empty());
  CHECK(sf.s == -1);
  auto swapped = standard_form(r, oracle::eset(2, {1, 2}));
  CHECK(swapped.core == RationalMatrix::from_ints(2, 2, {0, -1, 1, 0}));
  CHECK(swapped.twist == oracle::eset(2, {1, 2}));

  auto s = validate_isotropy(skew_with_identity(RationalMatrix::from_ints(2, 2, {1, 0, 0, 0})), FormKind::Symplectic);
  auto ssf = standard_form(s, oracle::eset(2, {1, -2}));
  CHECK(ssf.core == RationalMatrix::from_ints(2, 2, {-1, 0, 0, 0}));
  CHECK(ssf.twist == oracle::eset(2, {1}));
  CHECK(ssf.s == 1);

  CHECK_THROWS_AS(standard_form(r, oracle::eset(2, {1, -2})), PreconditionError);
  auto partial = validate_isotropy(RationalMatrix::from_ints(1, 4, {1, 0, 0, 0}), FormKind::Symplectic);
  CHECK_THROWS_AS(standard_form(partial), FlavorError);
}

TEST_CASE("embedding examples") {
  auto e = embed_classical_rep(ClassicalRepresentation(RationalMatrix::from_ints(2, 3, {1, 0, 1, 0, 1, 1})));
  CHECK(e.matrix() == RationalMatrix::from_ints(3, 6, {1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, -1}));
  CHECK(bases_from_isotropic_rep(e) == C(3, {{1, 2, -3}, {1, 3, -2}, {2, 3, -1}}));
  auto id = embed_classical_rep(ClassicalRepresentation(RationalMatrix::identity(3)));
  CHECK(bases_from_isotropic_rep(id) == C(3, {{1, 2, 3}}));
  auto line = embed_classical_rep(ClassicalRepresentation(RationalMatrix::from_ints(1, 2, {1, 1})));
  CHECK(line.matrix() == RationalMatrix::from_ints(2, 4, {1, 1, 0, 0, 0, 0, 1, -1}));
  CHECK(bases_from_isotropic_rep(line) == C(2, {{1, -2}, {2, -1}}));
  // Both forms vanish on the embedded space.
  CHECK_NOTHROW(validate_isotropy(e.matrix(), FormKind::Symplectic));
}

TEST_CASE("minor enumeration agrees with the Leibniz oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4, k = 1 + trial % n;
    auto r = gen::classical(rng, k, n, 1);
    CHECK(oracle::osets(bases_from_classical_rep(r)) == oracle_bases(r.matrix(), n, plain_subsets(n, k)));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    auto form = trial % 2 ? FormKind::Symplectic : FormKind::Orthogonal;
    auto r = gen::lagrangian(rng, n, form, true);
    CHECK(oracle::osets(bases_from_isotropic_rep(r)) == oracle_bases(r.matrix(), n, admissible_subsets(n, n)));
  }
}

TEST_CASE("extracted bases are invariant under row operations") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 3, k = 1 + trial % (n - 1);
    auto r = gen::classical(rng, k, n, 1);
    auto moved = ClassicalRepresentation(gen::invertible(rng, k) * r.matrix());
    CHECK(bases_from_classical_rep(r) == bases_from_classical_rep(moved));
    auto iso = gen::lagrangian(rng, 3, trial % 2 ? FormKind::Symplectic : FormKind::Orthogonal, true);
    auto iso_moved = validate_isotropy(gen::invertible(rng, 3) * iso.matrix(), iso.form());
    CHECK(bases_from_isotropic_rep(iso) == bases_from_isotropic_rep(iso_moved));
  }
}

TEST_CASE("standard form: core shape and Bouchet round trip for every basis choice") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    auto form = trial % 2 ? FormKind::Symplectic : FormKind::Orthogonal;
    auto r = gen::lagrangian(rng, n, form, trial % 3 == 0);
    auto bases = bases_from_isotropic_rep(r);
    auto expected = plain_parts(bases);
    CHECK(bases.bases().back() >= default_basis(r));
    for (const auto& f : bases.bases()) {
      auto sf = standard_form(r, f);
      CHECK(sf.twist == f.plain_part());
      CHECK((form == FormKind::Symplectic ? is_symmetric(sf.core) : is_skew_symmetric(sf.core)));
      CHECK(bouchet_delta_matroid(sf) == expected);
    }
  }
}

TEST_CASE("representable collections satisfy the axioms") {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    auto form = trial % 2 ? FormKind::Symplectic : FormKind::Orthogonal;
    auto c = bases_from_isotropic_rep(gen::lagrangian(rng, n, form, true));
    auto cls = classify(c);
    CHECK(cls.is_symplectic);
    CHECK(cls.is_delta);
    if (form == FormKind::Orthogonal) {
      CHECK(cls.is_orthogonal);
      CHECK(cls.is_even);
    }
  }
}

TEST_CASE("embedding: bases are the Lagrangian completions of the classical bases") {
  std::mt19937 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4, k = 1 + trial % (n - 1);
    auto r = gen::classical(rng, k, n, 1);
    auto e = embed_classical_rep(r);
    CHECK(e.form() == FormKind::Orthogonal);
    CHECK_NOTHROW(validate_isotropy(e.matrix(), FormKind::Symplectic));
    std::vector<ElementSet> completed;
    for (const auto& s : bases_from_classical_rep(r).bases()) completed.push_back(s.lagrangian_completion());
    CHECK(bases_from_isotropic_rep(e) == BasisCollection(n, n, completed));
  }
}
