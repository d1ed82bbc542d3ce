#include "orthomat/ground_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "orthomat/errors.hpp"

namespace orthomat {
namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxAmbient)
    throw DomainError("ambient n must lie in 0.." + std::to_string(kMaxAmbient));
}

std::uint64_t ground_mask(int n) {
  return n == kMaxAmbient ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n)) - 1;
}

void sort_unique(std::vector<ElementSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string to_string(GroundElement e) {
  return std::to_string(e.index) + (e.starred ? "*" : "");
}

GroundElement parse_element(std::string_view text) {
  GroundElement e;
  if (!text.empty() && text.back() == '*') {
    e.starred = true;
    text.remove_suffix(1);
  }
  if (text.empty() || text.size() > 3 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.front() == '0')
    throw DomainError("malformed element '" + std::string(text) + "'");
  e.index = std::stoi(std::string(text));
  if (e.index < 1) throw DomainError("element index must be at least 1");
  return e;
}

ElementSet::ElementSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  check_ambient(n);
  if ((mask & ~ground_mask(n)) != 0) throw DomainError("set exceeds ground set J");
}

ElementSet::ElementSet(int n, const std::vector<GroundElement>& members) : n_(n) {
  check_ambient(n);
  for (auto e : members) insert(e);
}

ElementSet ElementSet::from_plain(int n, std::uint32_t plain_mask) {
  return ElementSet(n, std::uint64_t{plain_mask});
}

std::uint32_t ElementSet::plain_mask() const {
  return static_cast<std::uint32_t>(mask_ & ((std::uint64_t{1} << n_) - 1));
}

std::uint32_t ElementSet::starred_mask() const {
  return static_cast<std::uint32_t>(mask_ >> n_);
}

int ElementSet::size() const { return std::popcount(mask_); }

bool ElementSet::contains(GroundElement e) const {
  if (e.index < 1 || e.index > n_) return false;
  return (mask_ >> bit_of(e, n_)) & 1U;
}

void ElementSet::insert(GroundElement e) {
  if (e.index < 1 || e.index > n_)
    throw IndexError("element " + to_string(e) + " outside J for n=" + std::to_string(n_));
  mask_ |= std::uint64_t{1} << bit_of(e, n_);
}

void ElementSet::erase(GroundElement e) {
  if (e.index < 1 || e.index > n_) return;
  mask_ &= ~(std::uint64_t{1} << bit_of(e, n_));
}

std::vector<GroundElement> ElementSet::elements() const {
  std::vector<GroundElement> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1)
    out.push_back(element_at_bit(std::countr_zero(m), n_));
  return out;
}

ElementSet ElementSet::starred_image() const {
  return ElementSet(n_, (std::uint64_t{plain_mask()} << n_) | starred_mask());
}

ElementSet ElementSet::lagrangian_completion() const {
  std::uint32_t full = n_ == kMaxAmbient ? ~0U : (1U << n_) - 1;
  std::uint32_t s = plain_mask();
  return ElementSet(n_, std::uint64_t{s} | (std::uint64_t{full & ~s} << n_));
}

bool is_admissible(const ElementSet& s) { return (s.plain_mask() & s.starred_mask()) == 0; }

ElementSet sym_diff(const ElementSet& a, const ElementSet& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("symmetric difference across different ambient n");
  return ElementSet(a.ambient(), a.mask() ^ b.mask());
}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto e : s.elements()) {
    if (!first) out += ",";
    out += to_string(e);
    first = false;
  }
  return out + "}";
}

AdmissibleOrdering::AdmissibleOrdering(OrderingKind kind, std::vector<GroundElement> base_sequence)
    : kind_(kind), base_(std::move(base_sequence)) {
  const int n = ambient();
  check_ambient(n);
  ElementSet seen(n);
  for (auto e : base_) {
    if (e.index < 1 || e.index > n) throw DomainError("ordering element outside J");
    if (seen.contains(e) || seen.contains(star(e)))
      throw DomainError("ordering base sequence is not admissible");
    seen.insert(e);
  }
  rank_by_bit_.assign(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    rank_by_bit_[bit_of(base_[i], n)] = i;
    rank_by_bit_[bit_of(star(base_[i]), n)] = 2 * n - 1 - i;
  }
}

bool AdmissibleOrdering::leq(GroundElement x, GroundElement y) const {
  if (x == y) return true;
  int rx = rank(x), ry = rank(y);
  if (kind_ == OrderingKind::Dn && rx == ambient() - 1 && ry == ambient()) return false;
  return rx < ry;
}

std::string to_string(const AdmissibleOrdering& ord) {
  const auto& seq = ord.base_sequence();
  const int n = ord.ambient();
  std::string out = ord.kind() == OrderingKind::Bn ? "Bn:" : "Dn:";
  for (int i = 0; i < n; ++i) {
    out += " " + to_string(seq[i]);
    if (ord.kind() == OrderingKind::Dn && i == n - 1)
      out += "|" + to_string(star(seq[i]));
  }
  for (int i = n - 1; i >= 0; --i) {
    if (ord.kind() == OrderingKind::Dn && i == n - 1) continue;
    out += " " + to_string(star(seq[i]));
  }
  return out;
}

std::vector<AdmissibleOrdering> enumerate_orderings(int n, OrderingKind kind, int limit) {
  check_ambient(n);
  if (n > limit)
    throw ResourceError("ordering enumeration for n=" + std::to_string(n) +
                            " exceeds the limit n<=" + std::to_string(limit),
                        "--max-n");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<AdmissibleOrdering> out;
  const std::uint32_t patterns = 1U << n;
  do {
    for (std::uint32_t stars = 0; stars < patterns; ++stars) {
      if (kind == OrderingKind::Dn && n > 0 && ((stars >> (n - 1)) & 1U)) continue;
      std::vector<GroundElement> seq(n);
      for (int i = 0; i < n; ++i) seq[i] = {perm[i], static_cast<bool>((stars >> i) & 1U)};
      out.emplace_back(kind, std::move(seq));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

void check_comparable(const ElementSet& a, const ElementSet& b, const AdmissibleOrdering& ord) {
  if (a.size() != b.size()) throw DimensionError("Gale comparison of sets with different cardinality");
  if (a.ambient() != ord.ambient() || b.ambient() != ord.ambient())
    throw DimensionError("Gale comparison across different ambient n");
}

bool augment(int x, const std::vector<std::vector<int>>& adj, std::vector<int>& match_of_right,
             std::vector<char>& visited) {
  for (int y : adj[x]) {
    if (visited[y]) continue;
    visited[y] = 1;
    if (match_of_right[y] < 0 || augment(match_of_right[y], adj, match_of_right, visited)) {
      match_of_right[y] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

bool gale_leq(const ElementSet& a, const ElementSet& b, const AdmissibleOrdering& ord) {
  check_comparable(a, b, ord);
  if (ord.kind() == OrderingKind::Dn) return gale_leq_by_matching(a, b, ord);
  std::vector<int> ra, rb;
  for (auto e : a.elements()) ra.push_back(ord.rank(e));
  for (auto e : b.elements()) rb.push_back(ord.rank(e));
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (ra[i] > rb[i]) return false;
  return true;
}

bool gale_leq_by_matching(const ElementSet& a, const ElementSet& b, const AdmissibleOrdering& ord) {
  check_comparable(a, b, ord);
  auto xs = a.elements();
  auto ys = b.elements();
  std::vector<std::vector<int>> adj(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (ord.leq(xs[i], ys[j])) adj[i].push_back(static_cast<int>(j));
  std::vector<int> match_of_right(ys.size(), -1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<char> visited(ys.size(), 0);
    if (!augment(static_cast<int>(i), adj, match_of_right, visited)) return false;
  }
  return true;
}

BasisCollection::BasisCollection(int n, int k, std::vector<ElementSet> bases)
    : n_(n), k_(k), bases_(std::move(bases)) {
  check_ambient(n);
  if (k < 0 || k > 2 * n) throw DomainError("rank out of range");
  for (const auto& b : bases_) {
    if (b.ambient() != n) throw DimensionError("basis with wrong ambient n");
    if (b.size() != k)
      throw DimensionError("basis " + to_string(b) + " does not have cardinality " + std::to_string(k));
  }
  sort_unique(bases_);
}

BasisCollection BasisCollection::from_sets(int n, std::vector<ElementSet> bases) {
  int k = bases.empty() ? 0 : bases.front().size();
  return BasisCollection(n, k, std::move(bases));
}

bool BasisCollection::contains(const ElementSet& s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

bool BasisCollection::all_plain() const {
  return std::all_of(bases_.begin(), bases_.end(), [](const ElementSet& b) { return b.is_subset_of_plain(); });
}

bool BasisCollection::all_admissible() const {
  return std::all_of(bases_.begin(), bases_.end(), [](const ElementSet& b) { return is_admissible(b); });
}

SetCollection::SetCollection(int n, std::vector<ElementSet> sets) : n_(n), sets_(std::move(sets)) {
  check_ambient(n);
  for (const auto& s : sets_) {
    if (s.ambient() != n) throw DimensionError("set with wrong ambient n");
    if (!s.is_subset_of_plain()) throw FlavorError("Δ-matroid sets must be subsets of I; got " + to_string(s));
  }
  sort_unique(sets_);
}

bool SetCollection::contains(const ElementSet& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

SetCollection plain_parts(const BasisCollection& c) {
  std::vector<ElementSet> out;
  out.reserve(c.size());
  for (const auto& b : c.bases()) out.push_back(b.plain_part());
  return SetCollection(c.ambient(), std::move(out));
}

BasisCollection lagrangian_completion(const SetCollection& c) {
  std::vector<ElementSet> out;
  out.reserve(c.sets().size());
  for (const auto& s : c.sets()) out.push_back(s.lagrangian_completion());
  return BasisCollection(c.ambient(), c.ambient(), std::move(out));
}

std::vector<ElementSet> plain_subsets(int n, int k) {
  check_ambient(n);
  std::vector<ElementSet> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {ElementSet(n)};
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    out.emplace_back(n, s);
    // Gosper: next larger integer with the same popcount.
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

std::vector<ElementSet> admissible_subsets(int n, int k) {
  std::vector<ElementSet> out;
  for (const auto& base : plain_subsets(n, k)) {
    std::uint32_t plain = base.plain_mask();
    // Every sub-pattern of `plain` chooses which of those indices are starred.
    for (std::uint32_t star = plain;; star = (star - 1) & plain) {
      std::uint64_t mask = std::uint64_t{plain & ~star} | (std::uint64_t{star} << n);
      out.emplace_back(n, mask);
      if (star == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orthomat
