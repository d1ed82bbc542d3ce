#include "orthomat/orientation.hpp"

#include <bit>

#include "orthomat/errors.hpp"
#include "orthomat/linalg.hpp"

namespace orthomat {
namespace {

int sign_of(int v) { return (v > 0) - (v < 0); }

void check_sign(int s) {
  if (s < -1 || s > 1) throw DomainError("sign values must be -1, 0 or +1");
}

void check_exhaustive(int n, const Limits& limits) {
  if (n > limits.exhaustive_n)
    throw ResourceError("exhaustive pair check over 2^" + std::to_string(n) + " subsets exceeds the limit n<=" +
                            std::to_string(limits.exhaustive_n),
                        "--max-n");
}

// Sorts a small tuple in place; returns the permutation sign, or 0 when an
// entry repeats.
int sort_with_sign(std::vector<int>& t) {
  int s = 1;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (t[a] == t[b]) return 0;
      if (t[a] > t[b]) {
        std::swap(t[a], t[b]);
        s = -s;
      }
    }
  return s;
}

std::vector<int> bits_ascending(std::uint32_t m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Generic pair verifier over 2^I x 2^I. `pair_ok(a, b, w)` returns true when
// the pair satisfies axiom 3, filling `w` for the witness.
template <class Values, class PairCheck>
Verdict<DeltaWitness> delta_axioms(int n, const Values& nonzero, const Limits& limits, PairCheck&& pair_ok,
                                   Execution exec) {
  check_exhaustive(n, limits);
  const std::uint32_t count = std::uint32_t{1} << n;
  std::optional<std::uint32_t> first;
  for (std::uint32_t s = 0; s < count; ++s)
    if (nonzero(s)) {
      first = s;
      break;
    }
  if (!first) return {false, DeltaWitness{1, ElementSet(n), ElementSet(n)}};
  const int parity = std::popcount(*first) % 2;
  for (std::uint32_t s = *first + 1; s < count; ++s)
    if (nonzero(s) && std::popcount(s) % 2 != parity)
      return {false, DeltaWitness{2, ElementSet::from_plain(n, *first), ElementSet::from_plain(n, s)}};

  auto first_bad_b = [&](std::uint32_t a, int& w) -> std::optional<std::uint32_t> {
    for (std::uint32_t b = 0; b < count; ++b)
      if (!pair_ok(a, b, w)) return b;
    return std::nullopt;
  };
  auto bad_a = kernels::first_failure(
      count,
      [&](std::size_t a) {
        int w = 0;
        return !first_bad_b(static_cast<std::uint32_t>(a), w).has_value();
      },
      exec);
  if (!bad_a) return {true, std::nullopt};
  int w = 0;
  auto a = static_cast<std::uint32_t>(*bad_a);
  auto b = *first_bad_b(a, w);
  return {false, DeltaWitness{3, ElementSet::from_plain(n, a), ElementSet::from_plain(n, b), w}};
}

SkewSymmetricMatrix exact_skew(RationalMatrix m, const char* what) {
  if (!is_skew_symmetric(m)) throw InternalConsistencyError(std::string(what) + " is not skew-symmetric");
  return SkewSymmetricMatrix(std::move(m));
}

void check_pivot(const SkewSymmetricMatrix& a, int i, int j) {
  const int n = static_cast<int>(a.dim());
  if (i < 1 || j > n || i >= j) throw PivotError("pivot needs 1 <= i < j <= n");
  if (a(i - 1, j - 1) == 0) throw PivotError("pivot entry a_" + std::to_string(i) + std::to_string(j) + " is zero");
}

}  // namespace

// --- Chirotope ---------------------------------------------------------------

int Chirotope::value(const ElementSet& subset) const {
  if (subset.size() != k_) return 0;
  auto it = values_.find(subset.plain_mask());
  return it == values_.end() ? 0 : it->second;
}

void Chirotope::set(const ElementSet& subset, int sign) {
  check_sign(sign);
  if (!subset.is_subset_of_plain() || subset.size() != k_ || subset.ambient() != n_)
    throw DomainError("chirotope values live on k-subsets of I");
  if (sign == 0)
    values_.erase(subset.plain_mask());
  else
    values_[subset.plain_mask()] = sign;
}

int Chirotope::value(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != k_) throw DimensionError("tuple length differs from chirotope rank");
  std::vector<int> t(tuple.begin(), tuple.end());
  std::uint32_t mask = 0;
  for (int e : t) {
    if (e < 1 || e > n_) throw IndexError("tuple entry outside I");
    mask |= 1U << (e - 1);
  }
  int s = sort_with_sign(t);
  if (s == 0) return 0;
  auto it = values_.find(mask);
  return it == values_.end() ? 0 : s * it->second;
}

Chirotope Chirotope::negated() const {
  Chirotope out = *this;
  for (auto& [m, v] : out.values_) v = -v;
  return out;
}

// --- DeltaSignMap / RationalDeltaMap -----------------------------------------

DeltaSignMap::DeltaSignMap(int n) : n_(n) {
  if (n < 0 || n > 24) throw DomainError("Δ sign maps are dense over 2^n; n must be at most 24");
  values_.assign(std::size_t{1} << n, 0);
}

void DeltaSignMap::set(std::uint32_t subset, int sign) {
  check_sign(sign);
  if (subset >= values_.size()) throw IndexError("subset outside I");
  values_[subset] = static_cast<std::int8_t>(sign);
}

DeltaSignMap DeltaSignMap::negated() const {
  DeltaSignMap out = *this;
  for (auto& v : out.values_) v = static_cast<std::int8_t>(-v);
  return out;
}

SetCollection DeltaSignMap::support() const {
  std::vector<ElementSet> sets;
  for (std::uint32_t s = 0; s < values_.size(); ++s)
    if (values_[s] != 0) sets.push_back(ElementSet::from_plain(n_, s));
  return SetCollection(n_, std::move(sets));
}

RationalDeltaMap::RationalDeltaMap(int n) : n_(n) {
  if (n < 0 || n > 24) throw DomainError("Δ maps are dense over 2^n; n must be at most 24");
  values_.assign(std::size_t{1} << n, Rational(0));
}

DeltaSignMap RationalDeltaMap::signs() const {
  DeltaSignMap out(n_);
  for (std::uint32_t s = 0; s < values_.size(); ++s) out.set(s, sign(values_[s]));
  return out;
}

// --- LagrangianSignMap -------------------------------------------------------

int LagrangianSignMap::value(const ElementSet& b) const {
  auto it = values_.find(b);
  return it == values_.end() ? 0 : it->second;
}

void LagrangianSignMap::set(const ElementSet& b, int sign) {
  check_sign(sign);
  if (b.ambient() != n_ || b.size() != n_ || !is_admissible(b))
    throw DomainError(to_string(b) + " is not an admissible n-set");
  if (sign == 0)
    values_.erase(b);
  else
    values_[b] = sign;
}

BasisCollection LagrangianSignMap::support() const {
  std::vector<ElementSet> bases;
  for (const auto& [b, v] : values_) bases.push_back(b);
  return BasisCollection(n_, n_, std::move(bases));
}

LagrangianSignMap LagrangianSignMap::negated() const {
  LagrangianSignMap out = *this;
  for (auto& [b, v] : out.values_) v = -v;
  return out;
}

Chirotope canonical(const Chirotope& x) {
  if (x.nonzero().empty() || x.nonzero().begin()->second > 0) return x;
  return x.negated();
}

DeltaSignMap canonical(const DeltaSignMap& p) {
  for (std::uint32_t s = 0; s < p.domain_size(); ++s)
    if (p.value(s) != 0) return p.value(s) > 0 ? p : p.negated();
  return p;
}

LagrangianSignMap canonical(const LagrangianSignMap& p) {
  if (p.nonzero().empty() || p.nonzero().begin()->second > 0) return p;
  return p.negated();
}

bool signmaps_equivalent(const LagrangianSignMap& p, const LagrangianSignMap& q) {
  if (p.ambient() != q.ambient()) return false;
  return canonical(p) == canonical(q);
}

bool signmaps_equivalent(const DeltaSignMap& p, const DeltaSignMap& q) {
  if (p.ambient() != q.ambient()) return false;
  return canonical(p) == canonical(q);
}

bool signmaps_equivalent(const Chirotope& p, const Chirotope& q) {
  if (p.ambient() != q.ambient() || p.rank() != q.rank()) return false;
  return canonical(p) == canonical(q);
}

DeltaSignMap delta_restriction(const LagrangianSignMap& p) {
  DeltaSignMap out(p.ambient());
  for (const auto& [b, v] : p.nonzero()) out.set(b.plain_mask(), v);
  return out;
}

DeltaSignMap widen(const Chirotope& x) {
  DeltaSignMap out(x.ambient());
  for (const auto& [m, v] : x.nonzero()) out.set(m, v);
  return out;
}

std::optional<Chirotope> restrict_to_rank(const DeltaSignMap& p, int k) {
  Chirotope out(p.ambient(), k);
  for (std::uint32_t s = 0; s < p.domain_size(); ++s) {
    if (p.value(s) == 0) continue;
    if (std::popcount(s) != k) return std::nullopt;
    out.set(ElementSet::from_plain(p.ambient(), s), p.value(s));
  }
  if (out.nonzero().empty()) return std::nullopt;
  return out;
}

// --- verifiers -----------------------------------------------------------------

namespace {

std::string tuple_string(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

}  // namespace

std::string describe(const ChirotopeWitness& w) {
  if (w.axiom == 1) return "chirotope is identically zero";
  return "sign condition fails for x=" + tuple_string(w.x) + " y=" + tuple_string(w.y);
}

std::string describe(const DeltaWitness& w) {
  switch (w.axiom) {
    case 1:
      return "map is identically zero";
    case 2:
      return "support sets " + to_string(w.a) + " and " + to_string(w.b) + " differ in parity";
    default: {
      std::string out = "exchange relation fails for A=" + to_string(w.a) + " B=" + to_string(w.b);
      if (w.w != 0) out += std::string(" w=") + (w.w > 0 ? "+1" : "-1");
      return out;
    }
  }
}

Verdict<ChirotopeWitness> check_chirotope_axioms(const Chirotope& x, const Limits& limits, Execution exec) {
  const int n = x.ambient(), k = x.rank();
  if (k > limits.chirotope_k)
    throw ResourceError("chirotope check for rank " + std::to_string(k) + " exceeds the limit k<=" +
                            std::to_string(limits.chirotope_k),
                        "--max-k");
  if (n > limits.chirotope_n)
    throw ResourceError("chirotope check for n=" + std::to_string(n) + " exceeds the limit n<=" +
                            std::to_string(limits.chirotope_n),
                        "--max-n");
  if (x.nonzero().empty()) return {false, ChirotopeWitness{1, {}, {}}};

  std::size_t count = 1;
  for (int t = 0; t < k; ++t) count *= static_cast<std::size_t>(n);
  auto tuple_at = [&](std::size_t idx) {
    std::vector<int> t(k);
    for (int p = k - 1; p >= 0; --p) {
      t[p] = static_cast<int>(idx % n) + 1;
      idx /= n;
    }
    return t;
  };
  // Returns the first y violating the sign condition against x.
  auto first_bad_y = [&](const std::vector<int>& xs) -> std::optional<std::vector<int>> {
    const int chi_x = x.value(xs);
    if (chi_x == 0) return std::nullopt;
    std::vector<int> left(k), right(k);
    for (std::size_t yi = 0; yi < count; ++yi) {
      auto ys = tuple_at(yi);
      if (chi_x * x.value(ys) >= 0) continue;
      bool all_nonneg = true;
      for (int i = 0; i < k && all_nonneg; ++i) {
        left = xs;
        left[0] = ys[i];
        right = ys;
        right[i] = xs[0];
        if (x.value(left) * x.value(right) < 0) all_nonneg = false;
      }
      if (all_nonneg) return ys;
    }
    return std::nullopt;
  };
  auto bad = kernels::first_failure(
      count, [&](std::size_t xi) { return !first_bad_y(tuple_at(xi)).has_value(); }, exec);
  if (!bad) return {true, std::nullopt};
  auto xs = tuple_at(*bad);
  return {false, ChirotopeWitness{3, xs, *first_bad_y(xs)}};
}

Verdict<DeltaWitness> check_twisted_pfaffian(const RationalDeltaMap& p, const Limits& limits, Execution exec) {
  const int n = p.ambient();
  return delta_axioms(
      n, [&](std::uint32_t s) { return p.value(s) != 0; }, limits,
      [&](std::uint32_t a, std::uint32_t b, int&) {
        Rational sum = 0;
        int j = 0;
        for (int bit : bits_ascending(a ^ b)) {
          ++j;
          const std::uint32_t flip = 1U << bit;
          Rational term = p.value(a ^ flip) * p.value(b ^ flip);
          if (j % 2 == 1)
            sum -= term;
          else
            sum += term;
        }
        return sum == 0;
      },
      exec);
}

Verdict<DeltaWitness> check_oriented_delta(const DeltaSignMap& p, const Limits& limits, Execution exec) {
  const int n = p.ambient();
  return delta_axioms(
      n, [&](std::uint32_t s) { return p.value(s) != 0; }, limits,
      [&](std::uint32_t a, std::uint32_t b, int& w) {
        bool positive = false, negative = false;
        int j = 0;
        for (int bit : bits_ascending(a ^ b)) {
          ++j;
          const std::uint32_t flip = 1U << bit;
          int term = (j % 2 == 1 ? -1 : 1) * p.value(a ^ flip) * p.value(b ^ flip);
          positive |= term > 0;
          negative |= term < 0;
        }
        // With w chosen to make every nonzero kappa_j positive, all kappa_j >= 0
        // but not all zero.
        if (positive != negative) {
          w = positive ? 1 : -1;
          return false;
        }
        return true;
      },
      exec);
}

// --- constructions -------------------------------------------------------------

Chirotope chirotope_from_rep(const ClassicalRepresentation& r, Execution exec) {
  const int n = r.ambient(), k = r.rank();
  auto subsets = plain_subsets(n, k);
  auto signs = kernels::map_indices<int>(
      subsets.size(), [&](std::size_t i) { return sign(column_minor(r.matrix(), subsets[i])); }, exec);
  Chirotope out(n, k);
  for (std::size_t i = 0; i < subsets.size(); ++i) out.set(subsets[i], signs[i]);
  return out;
}

RationalDeltaMap pfaffian_map(const SkewSymmetricMatrix& a, const ElementSet& t, Execution exec) {
  const int n = static_cast<int>(a.dim());
  if (t.ambient() != n || !t.is_subset_of_plain()) throw DomainError("twist must be a subset of I with matching n");
  RationalDeltaMap out(n);
  const std::size_t count = std::size_t{1} << n;
  auto values = kernels::map_indices<Rational>(
      count, [&](std::size_t s) { return pfaffian_minor(a, static_cast<std::uint32_t>(s) ^ t.plain_mask()); }, exec);
  for (std::size_t s = 0; s < count; ++s) out.set(static_cast<std::uint32_t>(s), std::move(values[s]));
  return out;
}

DeltaSignMap oriented_delta_from_matrix(const SkewSymmetricMatrix& a, const ElementSet& t, Execution exec) {
  return pfaffian_map(a, t, exec).signs();
}

DeltaRepresentation delta_orientation_from_chirotope(const ClassicalRepresentation& r, const ElementSet& t) {
  const int n = r.ambient();
  if (t.ambient() != n || !t.is_subset_of_plain() || t.size() != r.rank())
    throw PreconditionError(to_string(t) + " is not a k-subset of I");
  const Rational det_t = column_minor(r.matrix(), t);
  if (det_t == 0) throw PreconditionError(to_string(t) + " is not a basis");
  SkewSymmetricMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::uint32_t flip = (1U << i) | (1U << j);
      ElementSet s = ElementSet::from_plain(n, t.plain_mask() ^ flip);
      a.set(i, j, column_minor(r.matrix(), s) / det_t);
    }
  return {a, t};
}

int rho_ijk(int i, int j, int k) { return (i <= k && k < j) ? -1 : 1; }

int epsilon_ijkl(int i, int j, int k, int l) {
  if (i == j || i == k || i == l || j == k || j == l || k == l)
    throw DomainError("epsilon_ijkl needs four distinct indices");
  if (i > j || k > l) throw DomainError("epsilon_ijkl needs i < j and k < l");
  if ((i < k && k < j && j < l) || (k < i && i < l && l < j)) return -1;
  return 1;
}

SkewSymmetricMatrix pivot_transform(const SkewSymmetricMatrix& a, int i, int j) {
  check_pivot(a, i, j);
  const std::size_t n = a.dim();
  RationalMatrix compound(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) compound(r, c) = a(r, c);
    compound(r, n + r) = 1;
  }
  compound.swap_columns(i - 1, n + i - 1);
  compound.swap_columns(j - 1, n + j - 1);
  RationalMatrix reduced = reduce_right_block_to_identity(compound);
  return exact_skew(reduced.block(0, 0, n, n), "pivot transform");
}

SkewSymmetricMatrix pivot_transform_closed_form(const SkewSymmetricMatrix& a, int i, int j) {
  check_pivot(a, i, j);
  const int n = static_cast<int>(a.dim());
  const Rational& aij = a(i - 1, j - 1);
  auto A = [&](int r, int c) -> const Rational& { return a(r - 1, c - 1); };
  SkewSymmetricMatrix b(n);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      Rational v;
      if (k == i && l == j)
        v = -1 / aij;
      else if (k == i)
        v = A(l, j) / aij;
      else if (k == j)
        v = A(i, l) / aij;
      else if (l == i)
        v = A(j, k) / aij;
      else if (l == j)
        v = A(k, i) / aij;
      else {
        std::uint32_t four = (1U << (i - 1)) | (1U << (j - 1)) | (1U << (k - 1)) | (1U << (l - 1));
        v = epsilon_ijkl(i, j, k, l) * pfaffian_minor(a, four) / aij;
      }
      b.set(k - 1, l - 1, v);
    }
  return b;
}

SkewSymmetricMatrix sign_rescale(const SkewSymmetricMatrix& b, int i, int j) {
  const int n = static_cast<int>(b.dim());
  if (i < 1 || j > n || i >= j) throw DomainError("sign rescale needs 1 <= i < j <= n");
  SkewSymmetricMatrix c(n);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) c.set(k - 1, l - 1, rho_ijk(i, j, k) * rho_ijk(i, j, l) * b(k - 1, l - 1));
  return c;
}

LagrangianSignMap orient_orthogonal_rep(const IsotropicRepresentation& r, std::optional<ElementSet> f,
                                        Execution exec) {
  if (r.form() != FormKind::Orthogonal) throw FlavorError("Pfaffian orientation needs an orthogonal representation");
  if (!r.is_lagrangian()) throw FlavorError("Pfaffian orientation needs a Lagrangian representation (k = n)");
  const int n = r.ambient();
  const StandardForm sf = standard_form(r, f);
  std::vector<int> eps(n);
  int running = 1;
  for (int i = 0; i < n; ++i) {
    if (sf.twist.contains({i + 1, false})) running = -running;
    eps[i] = running;
  }
  SkewSymmetricMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.set(i, j, eps[i] * eps[j] * sf.core(i, j));
  const DeltaSignMap shifted = oriented_delta_from_matrix(a, sf.twist, exec);
  LagrangianSignMap out(n);
  for (std::uint32_t s = 0; s < shifted.domain_size(); ++s)
    if (shifted.value(s) != 0) out.set(ElementSet::from_plain(n, s).lagrangian_completion(), shifted.value(s));
  return out;
}

LagrangianSignMap orient_embedded_classical(const ClassicalRepresentation& r, Execution exec) {
  return orient_orthogonal_rep(embed_classical_rep(r), std::nullopt, exec);
}

}  // namespace orthomat
