#pragma once

// Test-side oracles. These deliberately avoid the library's algorithms:
// sets are std::set<int> with i* encoded as -i, orders are explicit relation
// tables, and determinants/Pfaffians are summed over full symmetric groups.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "orthomat/ground_set.hpp"
#include "orthomat/linalg.hpp"
#include "orthomat/matrix.hpp"
#include "orthomat/representations.hpp"

namespace oracle {

using orthomat::Rational;
using OSet = std::set<int>;  // i -> i, i* -> -i
using Grid = std::vector<std::vector<Rational>>;

inline Grid grid(const orthomat::RationalMatrix& m) {
  Grid g(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

inline int perm_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 ? -1 : 1;
}

// Leibniz expansion.
inline Rational det(const Grid& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = perm_sign(p);
    for (int i = 0; i < n && term != 0; ++i) term *= a[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// (1 / 2^m m!) * sum over all of S_2m of sgn(σ) prod a_{σ(2i-1) σ(2i)}.
inline Rational pf(const Grid& a) {
  const int n = static_cast<int>(a.size());
  if (n % 2) return 0;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = perm_sign(p);
    for (int i = 0; i < n; i += 2) term *= a[p[i]][p[i + 1]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  Rational norm = 1;
  for (int i = 1; i <= n / 2; ++i) norm *= 2 * i;
  return total / norm;
}

inline Grid principal(const Grid& a, const OSet& idx) {
  std::vector<int> v(idx.begin(), idx.end());
  Grid g(v.size(), std::vector<Rational>(v.size()));
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) g[r][c] = a[v[r] - 1][v[c] - 1];
  return g;
}

inline OSet oset(const orthomat::ElementSet& s) {
  OSet out;
  for (auto e : s.elements()) out.insert(e.starred ? -e.index : e.index);
  return out;
}

inline orthomat::ElementSet eset(int n, const OSet& s) {
  orthomat::ElementSet out(n);
  for (int x : s) out.insert({std::abs(x), x < 0});
  return out;
}

inline OSet symdiff(const OSet& a, const OSet& b) {
  OSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline OSet minus(const OSet& a, const OSet& b) {
  OSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline std::vector<OSet> osets(const orthomat::BasisCollection& c) {
  std::vector<OSet> out;
  for (const auto& b : c.bases()) out.push_back(oset(b));
  return out;
}

// All subsets of {1..n}.
inline std::vector<OSet> power_set(int n) {
  std::vector<OSet> out;
  for (int m = 0; m < (1 << n); ++m) {
    OSet s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s.insert(i + 1);
    out.push_back(s);
  }
  return out;
}

// Explicit partial order on J as a relation table over signed elements.
struct Order {
  int n;
  std::map<std::pair<int, int>, bool> leq;
  bool operator()(int x, int y) const { return leq.at({x, y}); }
  bool operator<(const Order& o) const { return leq < o.leq; }
  bool operator==(const Order& o) const { return leq == o.leq; }
};

// Chain a1 < ... < an < an* < ... < a1*, with an, an* incomparable for Dn.
inline Order make_order(const std::vector<int>& base, bool dn) {
  const int n = static_cast<int>(base.size());
  std::vector<int> chain(base);
  for (int i = n - 1; i >= 0; --i) chain.push_back(-base[i]);
  Order o{n, {}};
  for (int p = 0; p < 2 * n; ++p)
    for (int q = 0; q < 2 * n; ++q) {
      bool rel = p <= q;
      if (dn && ((p == n - 1 && q == n) || (p == n && q == n - 1))) rel = false;
      o.leq[{chain[p], chain[q]}] = rel;
    }
  return o;
}

// Every B_n (or D_n) admissible order as a distinct relation, deduplicated.
inline std::vector<Order> all_orders(int n, bool dn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<Order> seen;
  std::vector<Order> out;
  do {
    for (int stars = 0; stars < (1 << n); ++stars) {
      std::vector<int> base(perm);
      for (int i = 0; i < n; ++i)
        if (stars >> i & 1) base[i] = -base[i];
      Order o = make_order(base, dn);
      if (seen.insert(o).second) out.push_back(o);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Linear orders of I only (classical Gale), as relations on 1..n.
inline std::vector<Order> linear_orders(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Order> out;
  do {
    Order o{n, {}};
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) o.leq[{perm[p], perm[q]}] = p <= q;
    out.push_back(o);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// A ⪯ B iff some bijection φ: A -> B has x ⪯ φ(x); tried over all of S_k.
inline bool gale_leq(const OSet& a, const OSet& b, const Order& o) {
  if (a.size() != b.size()) return false;
  std::vector<int> av(a.begin(), a.end()), bv(b.begin(), b.end());
  std::sort(bv.begin(), bv.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < av.size() && ok; ++i) ok = o(av[i], bv[i]);
    if (ok) return true;
  } while (std::next_permutation(bv.begin(), bv.end()));
  return false;
}

inline bool has_gale_max(const std::vector<OSet>& c, const Order& o) {
  for (const auto& top : c) {
    bool ok = true;
    for (const auto& x : c) ok = ok && gale_leq(x, top, o);
    if (ok) return true;
  }
  return false;
}

inline bool gale_max_everywhere(const std::vector<OSet>& c, const std::vector<Order>& orders) {
  if (c.empty()) return false;
  for (const auto& o : orders)
    if (!has_gale_max(c, o)) return false;
  return true;
}

inline bool contains(const std::vector<OSet>& c, const OSet& s) { return std::find(c.begin(), c.end(), s) != c.end(); }

inline bool classical_exchange(const std::vector<OSet>& c) {
  if (c.empty()) return false;
  for (const auto& a : c)
    for (const auto& b : c)
      for (int i : minus(a, b)) {
        bool found = false;
        for (int j : minus(b, a)) {
          OSet t = a;
          t.erase(i);
          t.insert(j);
          found = found || contains(c, t);
        }
        if (!found) return false;
      }
  return true;
}

// Symmetric exchange on subsets of I: j ranges over AΔB, j = i allowed.
inline bool symmetric_exchange(const std::vector<OSet>& c) {
  if (c.empty()) return false;
  for (const auto& a : c)
    for (const auto& b : c) {
      OSet d = symdiff(a, b);
      for (int i : d) {
        bool found = false;
        for (int j : d) {
          OSet t = symdiff(a, i == j ? OSet{i} : OSet{i, j});
          found = found || contains(c, t);
        }
        if (!found) return false;
      }
    }
  return true;
}

inline bool even(const std::vector<OSet>& c) {
  std::set<int> parities;
  for (const auto& b : c) parities.insert(static_cast<int>(std::count_if(b.begin(), b.end(), [](int x) { return x > 0; })) % 2);
  return parities.size() <= 1;
}

}  // namespace oracle

namespace gen {

using orthomat::Rational;
using orthomat::RationalMatrix;

inline Rational small_rational(std::mt19937& rng, int range = 3, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline orthomat::SkewSymmetricMatrix skew(std::mt19937& rng, int n, int range = 3, int max_den = 3) {
  orthomat::SkewSymmetricMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational q = small_rational(rng, range, max_den);
      q.canonicalize();
      a.set(i, j, q);
    }
  return a;
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range = 2) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = small_rational(rng, range, 2);
      m(r, c).canonicalize();
    }
  return m;
}

inline RationalMatrix invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m = random_matrix(rng, n, n);
    if (orthomat::determinant(m) != 0) return m;
  }
}

inline orthomat::ClassicalRepresentation classical(std::mt19937& rng, int k, int n, int range = 2) {
  for (;;) {
    RationalMatrix m = random_matrix(rng, k, n, range);
    if (orthomat::rank(m) == static_cast<std::size_t>(k)) return orthomat::ClassicalRepresentation(m);
  }
}

// (A | I) with A skew (orthogonal) or symmetric (symplectic), then a random
// set of form-preserving swaps j <-> j* and a random change of row basis.
inline orthomat::IsotropicRepresentation lagrangian(std::mt19937& rng, int n, orthomat::FormKind form,
                                                   bool sparse = false) {
  RationalMatrix core(n, n);
  std::uniform_int_distribution<int> coin(0, sparse ? 2 : 5);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (form == orthomat::FormKind::Orthogonal && i == j) continue;
      Rational q = coin(rng) == 0 ? Rational(0) : small_rational(rng);
      q.canonicalize();
      core(i, j) = q;
      core(j, i) = form == orthomat::FormKind::Orthogonal ? Rational(-q) : q;
    }
  RationalMatrix m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = core(i, j);
    m(i, n + i) = 1;
  }
  std::uniform_int_distribution<int> flip(0, 1);
  for (int j = 0; j < n; ++j)
    if (flip(rng)) {
      m.swap_columns(j, n + j);
      if (form == orthomat::FormKind::Symplectic)
        for (int r = 0; r < n; ++r) m(r, n + j) = -m(r, n + j);
    }
  return orthomat::validate_isotropy(invertible(rng, n) * m, form);
}

}  // namespace gen
