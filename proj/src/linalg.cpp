#include "orthomat/linalg.hpp"

#include <bit>

#include "orthomat/errors.hpp"

namespace orthomat {
namespace {

// Integer copy of `m` with each row multiplied by the lcm of its
// denominators; `scale` receives the product of those multipliers.
std::vector<Integer> integer_rows(const RationalMatrix& m, Integer& scale) {
  std::vector<Integer> out(m.rows() * m.cols());
  scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out[r * m.cols() + c] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  return out;
}

Rational pfaffian_expand(const RationalMatrix& a, std::vector<std::size_t>& idx, std::size_t len) {
  if (len == 0) return 1;
  // idx[0..len) holds the remaining indices in increasing order. Pair the
  // smallest with each other index; the sign alternates with its position.
  const std::size_t first = idx[0];
  Rational total = 0;
  for (std::size_t j = 1; j < len; ++j) {
    const Rational& entry = a(first, idx[j]);
    if (entry == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(len - 2);
    for (std::size_t t = 1; t < len; ++t)
      if (t != j) rest.push_back(idx[t]);
    Rational sub = pfaffian_expand(a, rest, rest.size());
    if (j % 2 == 1)
      total += entry * sub;
    else
      total -= entry * sub;
  }
  return total;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale;
  std::vector<Integer> a = integer_rows(m, scale);
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(sign * at(n - 1, n - 1), scale);
  det.canonicalize();
  return det;
}

EchelonForm reduced_row_echelon(const RationalMatrix& m) {
  EchelonForm out{m, {}};
  RationalMatrix& a = out.matrix;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    Rational inv = 1 / a(row, col);
    for (auto& x : a.row(row)) x *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto e = reduced_row_echelon(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw RankError("matrix is singular");
  return e.matrix.block(0, n, n, n);
}

Rational pfaffian_by_definition(const SkewSymmetricMatrix& m) {
  const std::size_t n = m.dim();
  if (n % 2 == 1) return 0;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return pfaffian_expand(m.matrix(), idx, n);
}

Rational pfaffian_by_elimination(const SkewSymmetricMatrix& m) {
  const std::size_t n = m.dim();
  if (n % 2 == 1) return 0;
  RationalMatrix a = m.matrix();
  Rational pf = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p) == 0) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      // Simultaneous row/column swap: a congruence by a transposition.
      a.swap_rows(k + 1, p);
      a.swap_columns(k + 1, p);
      pf = -pf;
    }
    const Rational pivot = a(k, k + 1);
    pf *= pivot;
    for (std::size_t i = k + 2; i < n; ++i) {
      // col_i -= (a_ki / a_k,k+1) col_{k+1}, then the matching row operation.
      Rational f = a(k, i) / pivot;
      if (f != 0) {
        for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k + 1);
        for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k + 1, c);
      }
      // col_i -= (a_{k+1,i} / a_{k+1,k}) col_k, likewise.
      Rational g = a(k + 1, i) / a(k + 1, k);
      if (g != 0) {
        for (std::size_t r = k; r < n; ++r) a(r, i) -= g * a(r, k);
        for (std::size_t c = k; c < n; ++c) a(i, c) -= g * a(k, c);
      }
    }
  }
  return pf;
}

Rational pfaffian(const SkewSymmetricMatrix& m) {
  return m.dim() <= 8 ? pfaffian_by_definition(m) : pfaffian_by_elimination(m);
}

RationalMatrix principal_submatrix(const RationalMatrix& m, std::uint32_t plain_mask) {
  if (!m.is_square()) throw DimensionError("principal submatrix of a non-square matrix");
  if (m.rows() < 32 && (plain_mask >> m.rows()) != 0) throw IndexError("principal index out of range");
  std::vector<std::size_t> idx;
  for (std::uint32_t s = plain_mask; s != 0; s &= s - 1) idx.push_back(std::countr_zero(s));
  RationalMatrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

SkewSymmetricMatrix principal_submatrix(const SkewSymmetricMatrix& m, std::uint32_t plain_mask) {
  return SkewSymmetricMatrix(principal_submatrix(m.matrix(), plain_mask));
}

Rational pfaffian_minor(const SkewSymmetricMatrix& m, std::uint32_t plain_mask) {
  if (std::popcount(plain_mask) % 2 == 1) {
    if (m.dim() < 32 && (plain_mask >> m.dim()) != 0) throw IndexError("principal index out of range");
    return 0;
  }
  return pfaffian(principal_submatrix(m, plain_mask));
}

Rational pfaffian_minor(const SkewSymmetricMatrix& m, const ElementSet& index_set) {
  if (!index_set.is_subset_of_plain()) throw IndexError("Pfaffian minor index set contains starred elements");
  return pfaffian_minor(m, index_set.plain_mask());
}

RationalMatrix reduce_right_block_to_identity(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != 2 * n) throw DimensionError("expected an n x 2n matrix");
  RationalMatrix right = m.block(0, n, n, n);
  RationalMatrix inv;
  try {
    inv = inverse(right);
  } catch (const RankError&) {
    throw RankError("right " + std::to_string(n) + "x" + std::to_string(n) +
                    " block (columns " + std::to_string(n + 1) + ".." + std::to_string(2 * n) +
                    ") is singular");
  }
  RationalMatrix out = inv * m;
  if (m.labels()) out.set_labels(*m.labels());
  return out;
}

RationalMatrix orthogonal_complement(const RationalMatrix& m) {
  auto e = reduced_row_echelon(m);
  if (e.pivots.size() != m.rows())
    throw RankError("orthogonal complement needs full row rank; rank " + std::to_string(e.pivots.size()) +
                    " < " + std::to_string(m.rows()) + " rows");
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  RationalMatrix d(n - e.pivots.size(), n);
  std::size_t out_row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    d(out_row, f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) d(out_row, e.pivots[r]) = -e.matrix(r, f);
    Rational lead = 0;
    for (const auto& x : d.row(out_row))
      if (x != 0) {
        lead = x;
        break;
      }
    for (auto& x : d.row(out_row)) x /= lead;
    ++out_row;
  }
  return d;
}

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) return false;
  RationalMatrix stacked(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) stacked(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) stacked(a.rows() + r, c) = b(r, c);
  const std::size_t rs = rank(stacked);
  return rank(a) == rs && rank(b) == rs;
}

}  // namespace orthomat
