#ifndef SPOS_CONGRUENCE_HPP_
#define SPOS_CONGRUENCE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spos/core.hpp"
#include "spos/relation.hpp"

namespace spos {

  using PairSet = std::vector<std::pair<elem, elem>>;

  /// An S-poset congruence together with the order on its quotient.
  ///
  /// Stored as the element-level preorder a ≤θ b :⇔ [a] ≤ [b]; the classes
  /// are its symmetric part. Classes are numbered by least element, so two
  /// congruences are equal iff their preorders are. Congruences with the same
  /// partition but different quotient orders are different objects.
  class OrderedCongruence {
   public:
    // `preorder` must be reflexive and transitive (InputError otherwise).
    explicit OrderedCongruence(Relation preorder);

    // From an explicit partition and an order on its blocks (indexed as
    // given). Throws InputError if `classes` is not a partition of
    // {0, ..., m-1} or `class_leq` has the wrong size. The class relation is
    // taken as given; validate_congruence() reports whether it is an order.
    static OrderedCongruence from_classes(
        std::size_t                           m,
        std::vector<std::vector<elem>> const& classes,
        Relation const&                       class_leq);

    std::size_t base_size() const noexcept {
      return _class_of.size();
    }
    std::size_t class_count() const noexcept {
      return _class_leq.size();
    }
    elem class_of(elem a) const noexcept {
      return _class_of[a];
    }
    std::vector<elem> const& class_map() const noexcept {
      return _class_of;
    }
    std::vector<std::vector<elem>> classes() const;
    Relation const& class_leq() const noexcept {
      return _class_leq;
    }
    Relation const& preorder() const noexcept {
      return _preorder;
    }

    bool related(elem a, elem b) const noexcept {
      return _class_of[a] == _class_of[b];
    }
    // [a] ≤ [b]
    bool below(elem a, elem b) const noexcept {
      return _preorder(a, b);
    }

    bool same_partition(OrderedCongruence const& other) const noexcept {
      return _class_of == other._class_of;
    }
    bool operator==(OrderedCongruence const& other) const noexcept {
      return _class_of == other._class_of && _class_leq == other._class_leq;
    }
    bool operator!=(OrderedCongruence const& other) const noexcept {
      return !(*this == other);
    }

   private:
    OrderedCongruence() = default;

    std::vector<elem> _class_of;
    Relation          _class_leq;
    Relation          _preorder;
  };

  // Act congruence, class order a partial order compatible with the induced
  // action, natural map monotone.
  Validation validate_congruence(SPoset const& A, OrderedCongruence const& c);

  void check_pairs(SPoset const& A, PairSet const& H);

  // ≤σ: reachability along order steps and σ-steps.
  Relation chain_leq(SPoset const& A, Relation const& sigma);

  // α(H): reflexive-transitive closure of {(h s, h' s) | (h, h') in H}.
  Relation alpha_of_H(SPoset const& A, PairSet const& H);

  // ν(H): classes are the symmetric part of ≤α(H), ordered by ≤α(H).
  OrderedCongruence induced_congruence(SPoset const& A, PairSet const& H);

  // θ(H) = ν(H ∪ H^op).
  OrderedCongruence generated_congruence(SPoset const& A, PairSet const& H);

  OrderedCongruence identity_congruence(SPoset const& A);
  OrderedCongruence full_congruence(SPoset const& A);

  // Throws ValidationError if c is not an ordered congruence on A.
  SPoset    quotient(SPoset const& A, OrderedCongruence const& c);
  SPosetMap natural_map(OrderedCongruence const& c);

  // ker λ_s on S_S: x ≤ y iff s x ≤ s y.
  OrderedCongruence ker_lambda(Pomonoid const& S, elem s);

  // K_{λ_s} as a pair set.
  PairSet directed_kernel(Pomonoid const& S, elem s);

  // Least s with rho ≤ ker λ_s, if any.
  std::optional<elem> subannihilator_witness(Pomonoid const&          S,
                                             OrderedCongruence const& rho);
  bool is_subannihilator(Pomonoid const& S, OrderedCongruence const& rho);
  // Pos_S(S/rho, S_S) ≠ ∅, decided by homomorphism search.
  bool subannihilator_by_hom(Pomonoid const& S, OrderedCongruence const& rho);

  // l(a, b) = {s | s a ≤ s b}.
  std::vector<elem> l_set(Pomonoid const& S, elem a, elem b);

  // c1's classes refine c2's and c1's order refines c2's.
  bool congruence_leq(OrderedCongruence const& c1, OrderedCongruence const& c2);

  // Intersection. Throws InputError if the re-closed class order is not
  // antisymmetric.
  OrderedCongruence congruence_meet(OrderedCongruence const& c1,
                                    OrderedCongruence const& c2);

  // Every ordered congruence on A, sorted by preorder. Grows the set from the
  // identity congruence by joining one pair at a time.
  std::vector<OrderedCongruence> all_congruences(SPoset const& A);

}  // namespace spos

#endif  // SPOS_CONGRUENCE_HPP_
