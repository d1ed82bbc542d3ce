#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orthomat {

// Largest ambient n representable by ElementSet (two bits per index).
inline constexpr int kMaxAmbient = 32;

// An element i or i* of J = {1..n, 1*..n*}.
struct GroundElement {
  int index = 1;
  bool starred = false;

  friend auto operator<=>(const GroundElement&, const GroundElement&) = default;
};

inline GroundElement star(GroundElement e) { return {e.index, !e.starred}; }

// Bit position of `e` inside an ElementSet of ambient n: i -> i-1, i* -> n+i-1.
// This is also the column position of `e` in a k x 2n representation.
inline int bit_of(GroundElement e, int n) {
  return e.starred ? n + e.index - 1 : e.index - 1;
}

inline GroundElement element_at_bit(int bit, int n) {
  return bit < n ? GroundElement{bit + 1, false} : GroundElement{bit - n + 1, true};
}

std::string to_string(GroundElement e);
// Accepts `3` or `3*`; throws DomainError on anything else.
GroundElement parse_element(std::string_view text);

// A subset of J for a fixed ambient n, stored as a bitmask. Numeric order of
// the mask is the colexicographic order on sets, which is the canonical
// enumeration order throughout the library.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n, std::uint64_t mask = 0);
  ElementSet(int n, const std::vector<GroundElement>& members);

  // Subset of I with the given unstarred bitmask.
  static ElementSet from_plain(int n, std::uint32_t plain_mask);

  int ambient() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  std::uint32_t plain_mask() const;
  std::uint32_t starred_mask() const;

  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(GroundElement e) const;
  void insert(GroundElement e);
  void erase(GroundElement e);

  // Members in colex order: 1..n then 1*..n*.
  std::vector<GroundElement> elements() const;

  bool is_subset_of_plain() const { return starred_mask() == 0; }
  // B ∩ I.
  ElementSet plain_part() const { return from_plain(n_, plain_mask()); }
  // Image under the star involution.
  ElementSet starred_image() const;
  // S ∪ (I∖S)* for S ⊆ I: the admissible n-set whose plain part is S.
  ElementSet lagrangian_completion() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.mask_ <=> b.mask_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

bool is_admissible(const ElementSet& s);
ElementSet sym_diff(const ElementSet& a, const ElementSet& b);
std::string to_string(const ElementSet& s);

enum class OrderingKind { Bn, Dn };

// B_n: a1 < ... < an < an* < ... < a1* (total).
// D_n: same but an and an* incomparable.
class AdmissibleOrdering {
 public:
  AdmissibleOrdering(OrderingKind kind, std::vector<GroundElement> base_sequence);

  OrderingKind kind() const { return kind_; }
  int ambient() const { return static_cast<int>(base_.size()); }
  const std::vector<GroundElement>& base_sequence() const { return base_; }

  // Position in the underlying chain; for D_n, an and an* sit at n-1 and n
  // but are not comparable.
  int rank(GroundElement e) const { return rank_by_bit_[bit_of(e, ambient())]; }
  int rank_of_bit(int bit) const { return rank_by_bit_[bit]; }
  // Non-strict comparison x ⪯ y.
  bool leq(GroundElement x, GroundElement y) const;

  friend bool operator==(const AdmissibleOrdering& a, const AdmissibleOrdering& b) {
    return a.kind_ == b.kind_ && a.base_ == b.base_;
  }

 private:
  OrderingKind kind_;
  std::vector<GroundElement> base_;
  std::vector<int> rank_by_bit_;
};

std::string to_string(const AdmissibleOrdering& ord);

inline constexpr int kDefaultOrderingLimit = 6;

// All B_n orderings (2^n n!) or one representative per D_n partial order
// (2^(n-1) n!, with an unstarred). Deterministic order: base permutations in
// lexicographic order, star patterns ascending within each.
std::vector<AdmissibleOrdering> enumerate_orderings(int n, OrderingKind kind,
                                                    int limit = kDefaultOrderingLimit);

// Gale order A ⪯ B. B_n: sort and compare componentwise. D_n: existence of a
// bijection phi: A -> B with x ⪯ phi(x).
bool gale_leq(const ElementSet& a, const ElementSet& b, const AdmissibleOrdering& ord);
// Matching criterion for either kind; agrees with gale_leq on total orders.
bool gale_leq_by_matching(const ElementSet& a, const ElementSet& b,
                          const AdmissibleOrdering& ord);

// Equicardinal collection of subsets of J, sorted colex, duplicate free.
class BasisCollection {
 public:
  BasisCollection(int n, int k, std::vector<ElementSet> bases);
  // Rank inferred from the first member; empty input gives rank 0.
  static BasisCollection from_sets(int n, std::vector<ElementSet> bases);

  int ambient() const { return n_; }
  int rank() const { return k_; }
  const std::vector<ElementSet>& bases() const& { return bases_; }
  std::vector<ElementSet> bases() && { return std::move(bases_); }
  std::size_t size() const { return bases_.size(); }
  bool empty() const { return bases_.empty(); }
  bool contains(const ElementSet& s) const;

  bool all_plain() const;
  bool all_admissible() const;
  bool is_lagrangian_shaped() const { return k_ == n_ && all_admissible(); }

  friend bool operator==(const BasisCollection&, const BasisCollection&) = default;

 private:
  int n_;
  int k_;
  std::vector<ElementSet> bases_;
};

// Not-necessarily-equicardinal collection of subsets of I (Δ-matroid
// candidates). Sorted colex, duplicate free.
class SetCollection {
 public:
  SetCollection(int n, std::vector<ElementSet> sets);

  int ambient() const { return n_; }
  const std::vector<ElementSet>& sets() const& { return sets_; }
  std::vector<ElementSet> sets() && { return std::move(sets_); }
  bool empty() const { return sets_.empty(); }
  bool contains(const ElementSet& s) const;

  friend bool operator==(const SetCollection&, const SetCollection&) = default;

 private:
  int n_;
  std::vector<ElementSet> sets_;
};

// {B ∩ I : B ∈ c}.
SetCollection plain_parts(const BasisCollection& c);
// Inverse of plain_parts for Δ-matroids: each S ↦ S ∪ (I∖S)*.
BasisCollection lagrangian_completion(const SetCollection& c);

// All subsets of I of size k, colex.
std::vector<ElementSet> plain_subsets(int n, int k);
// All admissible k-subsets of J, colex.
std::vector<ElementSet> admissible_subsets(int n, int k);

}  // namespace orthomat
