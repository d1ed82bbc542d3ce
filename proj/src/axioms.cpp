#include "orthomat/axioms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "orthomat/errors.hpp"

namespace orthomat {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Gale comparison on rank masks (bit r set when the set holds the element
// of rank r). By Hall's theorem A ⪯ B iff |A ∩ U| <= |B ∩ U| for every
// up-set U. Up-sets of a chain are its suffixes; D_n adds the single
// up-set {a_n} ∪ {rank > n}.
class GaleComparator {
 public:
  explicit GaleComparator(const AdmissibleOrdering& ord) : ord_(ord), n_(ord.ambient()) {
    if (ord.kind() == OrderingKind::Dn && n_ > 0) {
      std::uint64_t above = (n_ + 1 >= 64) ? 0 : ~((std::uint64_t{1} << (n_ + 1)) - 1);
      extra_upset_ = above | (std::uint64_t{1} << (n_ - 1));
      has_extra_ = true;
    }
  }

  std::uint64_t rank_mask(const ElementSet& s) const {
    std::uint64_t out = 0;
    for (std::uint64_t m = s.mask(); m != 0; m &= m - 1)
      out |= std::uint64_t{1} << ord_.rank_of_bit(std::countr_zero(m));
    return out;
  }

  bool leq(std::uint64_t a, std::uint64_t b) const {
    for (int t = 0; t < 2 * n_; ++t)
      if (std::popcount(a >> t) > std::popcount(b >> t)) return false;
    if (has_extra_ && std::popcount(a & extra_upset_) > std::popcount(b & extra_upset_)) return false;
    return true;
  }

 private:
  const AdmissibleOrdering& ord_;
  int n_;
  std::uint64_t extra_upset_ = 0;
  bool has_extra_ = false;
};

bool has_gale_maximum(const std::vector<ElementSet>& bases, const AdmissibleOrdering& ord) {
  GaleComparator cmp(ord);
  std::vector<std::uint64_t> ranks(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) ranks[i] = cmp.rank_mask(bases[i]);
  // If a maximum M exists the scan lands on it and never leaves.
  std::size_t cur = 0;
  for (std::size_t i = 1; i < ranks.size(); ++i)
    if (cmp.leq(ranks[cur], ranks[i])) cur = i;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (!cmp.leq(ranks[i], ranks[cur])) return false;
  return !ranks.empty();
}

std::vector<AdmissibleOrdering> linear_orderings(int n, int limit) {
  if (n > limit)
    throw ResourceError("classical Gale check over all orders of I for n=" + std::to_string(n) +
                            " exceeds the limit n<=" + std::to_string(limit),
                        "--max-n");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<AdmissibleOrdering> out;
  do {
    std::vector<GroundElement> seq;
    for (int i : perm) seq.push_back({i, false});
    out.emplace_back(OrderingKind::Bn, std::move(seq));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> bits_of(std::uint64_t m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

template <class Contains>
std::optional<ExchangeWitness> first_exchange_failure_from(const std::vector<ElementSet>& sets, std::size_t ai,
                                                           bool classical, bool symmetric_completion,
                                                           Contains&& contains) {
  const ElementSet& a = sets[ai];
  const int n = a.ambient();
  for (const ElementSet& b : sets) {
    std::uint64_t diff = a.mask() ^ b.mask();
    std::uint64_t from = classical ? (a.mask() & ~b.mask()) : diff;
    std::uint64_t to = classical ? (b.mask() & ~a.mask()) : diff;
    for (int i : bits_of(from)) {
      bool found = false;
      for (int j : bits_of(to)) {
        std::uint64_t flip = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        if (symmetric_completion) {
          flip |= std::uint64_t{1} << bit_of(star(element_at_bit(i, n)), n);
          flip |= std::uint64_t{1} << bit_of(star(element_at_bit(j, n)), n);
        }
        if (contains(ElementSet(n, a.mask() ^ flip))) {
          found = true;
          break;
        }
      }
      if (!found) return ExchangeWitness{a, b, element_at_bit(i, n)};
    }
  }
  return std::nullopt;
}

template <class Contains>
AxiomCheck exchange_check(const std::vector<ElementSet>& sets, bool classical, bool symmetric_completion,
                          Contains&& contains, Execution exec) {
  if (sets.empty()) return {false, EmptyCollectionWitness{}};
  auto bad = kernels::first_failure(
      sets.size(),
      [&](std::size_t ai) {
        return !first_exchange_failure_from(sets, ai, classical, symmetric_completion, contains).has_value();
      },
      exec);
  if (!bad) return {true, std::nullopt};
  return {false, *first_exchange_failure_from(sets, *bad, classical, symmetric_completion, contains)};
}

}  // namespace

std::string describe(const AxiomWitness& w) {
  return std::visit(
      overloaded{
          [](const EmptyCollectionWitness&) -> std::string { return "empty collection has no bases"; },
          [](const ExchangeWitness& x) -> std::string {
            return "A=" + to_string(x.a) + " B=" + to_string(x.b) + " i=" + to_string(x.i) +
                   " has no exchange partner";
          },
          [](const GaleWitness& g) -> std::string {
            std::string order;
            if (g.family == GaleFamily::Classical) {
              order = "linear order";
              for (auto e : g.ordering.base_sequence()) order += " " + to_string(e);
            } else {
              order = to_string(g.ordering);
            }
            return "no Gale maximum under " + order;
          },
          [](const NotApplicableWitness& x) -> std::string { return x.reason; },
      },
      w);
}

AxiomCheck check_classical_exchange(const BasisCollection& c, Execution exec) {
  if (!c.all_plain()) throw FlavorError("classical exchange needs bases inside I; starred elements present");
  return exchange_check(
      c.bases(), true, false, [&](const ElementSet& s) { return c.contains(s); }, exec);
}

AxiomCheck check_symmetric_exchange(const SetCollection& c, Execution exec) {
  return exchange_check(
      c.sets(), false, false, [&](const ElementSet& s) { return c.contains(s); }, exec);
}

AxiomCheck check_symmetric_matroid_exchange(const BasisCollection& c, Execution exec) {
  if (c.rank() != c.ambient() || !c.all_admissible())
    throw FlavorError("symmetric matroid exchange needs admissible n-sets");
  return exchange_check(
      c.bases(), false, true, [&](const ElementSet& s) { return c.contains(s); }, exec);
}

std::optional<ElementSet> gale_maximum(const BasisCollection& c, const AdmissibleOrdering& ord) {
  if (c.ambient() != ord.ambient()) throw DimensionError("ordering and collection differ in n");
  const auto& bases = c.bases();
  if (bases.empty()) return std::nullopt;
  GaleComparator cmp(ord);
  std::size_t cur = 0;
  for (std::size_t i = 1; i < bases.size(); ++i)
    if (cmp.leq(cmp.rank_mask(bases[cur]), cmp.rank_mask(bases[i]))) cur = i;
  const auto top = cmp.rank_mask(bases[cur]);
  for (const auto& b : bases)
    if (!cmp.leq(cmp.rank_mask(b), top)) return std::nullopt;
  return bases[cur];
}

AxiomCheck check_gale_maximality(const BasisCollection& c, GaleFamily family, const Limits& limits,
                                 Execution exec) {
  std::vector<AdmissibleOrdering> orders;
  if (family == GaleFamily::Classical) {
    if (!c.all_plain()) throw FlavorError("classical Gale check needs bases inside I");
    orders = linear_orderings(c.ambient(), limits.linear_n);
  } else {
    if (!c.all_admissible()) throw FlavorError("symplectic/orthogonal Gale check needs admissible bases");
    orders = enumerate_orderings(c.ambient(), family == GaleFamily::Bn ? OrderingKind::Bn : OrderingKind::Dn,
                                 limits.ordering_n);
  }
  if (c.empty()) return {false, EmptyCollectionWitness{}};
  auto bad = kernels::first_failure(
      orders.size(), [&](std::size_t i) { return has_gale_maximum(c.bases(), orders[i]); }, exec);
  if (!bad) return {true, std::nullopt};
  return {false, GaleWitness{family, orders[*bad]}};
}

bool is_even(const BasisCollection& c) {
  if (c.empty()) return true;
  const int parity = std::popcount(c.bases().front().plain_mask()) % 2;
  return std::all_of(c.bases().begin(), c.bases().end(),
                     [&](const ElementSet& b) { return std::popcount(b.plain_mask()) % 2 == parity; });
}

MatroidClassification classify(const BasisCollection& c, const Limits& limits, Execution exec) {
  MatroidClassification out;
  auto record = [&](bool& flag, const char* name, const AxiomCheck& check) {
    flag = check.holds;
    if (!check.holds && check.witness) out.witnesses.push_back({name, *check.witness});
  };
  if (c.empty()) {
    for (const char* name : {"classical", "delta", "symplectic", "orthogonal", "lagrangian", "even"})
      out.witnesses.push_back({name, EmptyCollectionWitness{}});
    return out;
  }

  const bool plain = c.all_plain();
  const bool admissible = c.all_admissible();
  const bool lagrangian_shape = c.rank() == c.ambient() && admissible && c.ambient() >= 1;

  if (plain) {
    auto exchange = check_classical_exchange(c, exec);
    if (c.ambient() <= limits.linear_n) {
      auto gale = check_gale_maximality(c, GaleFamily::Classical, limits, exec);
      if (gale.holds != exchange.holds)
        throw InternalConsistencyError("classical exchange and classical Gale maximality disagree");
    }
    record(out.is_classical, "classical", exchange);
  } else {
    out.witnesses.push_back({"classical", NotApplicableWitness{"bases contain starred elements"}});
  }

  if (plain) {
    std::vector<ElementSet> sets(c.bases().begin(), c.bases().end());
    record(out.is_delta, "delta", check_symmetric_exchange(SetCollection(c.ambient(), sets), exec));
  } else if (lagrangian_shape) {
    record(out.is_delta, "delta", check_symmetric_exchange(plain_parts(c), exec));
  } else {
    out.witnesses.push_back({"delta", NotApplicableWitness{"bases are neither subsets of I nor admissible n-sets"}});
  }

  if (admissible) {
    record(out.is_symplectic, "symplectic", check_gale_maximality(c, GaleFamily::Bn, limits, exec));
    record(out.is_orthogonal, "orthogonal", check_gale_maximality(c, GaleFamily::Dn, limits, exec));
    out.is_even = is_even(c);
    if (!out.is_even) out.witnesses.push_back({"even", NotApplicableWitness{"|B ∩ I| takes both parities"}});
  } else {
    for (const char* name : {"symplectic", "orthogonal", "even"})
      out.witnesses.push_back({name, NotApplicableWitness{"collection contains a non-admissible set"}});
  }

  out.is_lagrangian = out.is_symplectic && lagrangian_shape;
  if (!out.is_lagrangian)
    out.witnesses.push_back({"lagrangian", NotApplicableWitness{out.is_symplectic ? "rank is below n"
                                                                                  : "not a symplectic matroid"}});

  if (lagrangian_shape) {
    const bool symmetric = check_symmetric_matroid_exchange(c, exec).holds;
    if (symmetric != out.is_symplectic)
      throw InternalConsistencyError("B_n maximality and symmetric exchange disagree on a Lagrangian collection");
    if ((symmetric && out.is_even) != out.is_orthogonal)
      throw InternalConsistencyError("D_n maximality and symmetric exchange + evenness disagree");
  }
  if (out.is_orthogonal && !out.is_symplectic)
    throw InternalConsistencyError("orthogonal collection failed the symplectic check");
  return out;
}

}  // namespace orthomat
