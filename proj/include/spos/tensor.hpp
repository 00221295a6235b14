#ifndef SPOS_TENSOR_HPP_
#define SPOS_TENSOR_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spos/core.hpp"
#include "spos/relation.hpp"

namespace spos {

  using ElemPair = std::pair<elem, elem>;

  // One edge of the tensor preorder on A × B.
  //   order_left:  (a, b) → (a', b)   with a ≤ a'
  //   order_right: (a, b) → (a, b')   with b ≤ b'
  //   balance_out: (a s, b) → (a, s b)
  //   balance_in:  (a, s b) → (a s, b)
  enum class TossKind { order_left, order_right, balance_out, balance_in };

  struct TossStep {
    TossKind kind;
    ElemPair from;
    ElemPair to;
    elem     scalar;  // s for balance steps, 0 otherwise

    bool operator==(TossStep const&) const = default;
  };

  struct TossingCertificate {
    ElemPair              from;
    ElemPair              to;
    std::vector<TossStep> steps;
  };

  // Rows (a_i, s_i, t_i, b_i), i = 1..n, of a tossing scheme from (a, b) to
  // (a', b'), with b_1 = b:
  //   a ≤ a_1 s_1,
  //   a_i t_i ≤ a_{i+1} s_{i+1},   s_i b_i ≤ t_i b_{i+1}   (i < n),
  //   a_n t_n ≤ a',                s_n b_n ≤ t_n b'.
  struct SchemeRow {
    elem a, s, t, b;
    bool operator==(SchemeRow const&) const = default;
  };

  struct TossingScheme {
    std::vector<SchemeRow> rows;
  };

  /// A ⊗_S B for a right S-poset A and a left S-poset B.
  ///
  /// The order is the reachability preorder generated by the four step
  /// kinds above; tensor classes are its strongly connected components and
  /// a ⊗ b ≤ a' ⊗ b' iff (a, b) reaches (a', b').
  class TensorPoset {
   public:
    TensorPoset(SPoset right, SPoset left);

    SPoset const& right() const noexcept {
      return _right;
    }
    SPoset const& left() const noexcept {
      return _left;
    }

    std::size_t node(elem a, elem b) const noexcept {
      return a * _left.size() + b;
    }
    ElemPair pair(std::size_t node) const noexcept {
      return {node / _left.size(), node % _left.size()};
    }

    std::size_t class_count() const noexcept {
      return _class_leq.size();
    }
    elem class_of(elem a, elem b) const noexcept {
      return _class_of[node(a, b)];
    }
    Relation const& class_leq() const noexcept {
      return _class_leq;
    }
    // Least pair of each class.
    std::vector<ElemPair> const& witness() const noexcept {
      return _witness;
    }
    std::vector<std::vector<ElemPair>> classes() const;

    // a ⊗ b ≤ a' ⊗ b'
    bool leq(elem a, elem b, elem a2, elem b2) const noexcept {
      return _reach(node(a, b), node(a2, b2));
    }

    // Outgoing steps of a node, sorted by target node, then kind, then scalar.
    std::vector<TossStep> const& steps_from(std::size_t node) const noexcept {
      return _adjacency[node];
    }

   private:
    SPoset                             _right;
    SPoset                             _left;
    std::vector<std::vector<TossStep>> _adjacency;
    Relation                           _reach;
    std::vector<elem>                  _class_of;
    Relation                           _class_leq;
    std::vector<ElemPair>              _witness;
  };

  // Throws InputError unless A is right, B is left, over the same pomonoid.
  TensorPoset tensor(SPoset const& A, SPoset const& B);

  // Shortest path from (a, b) to (a2, b2); ties broken towards the smallest
  // next node. Empty certificate for a pair to itself.
  std::optional<TossingCertificate> tensor_leq_certificate(TensorPoset const& T,
                                                           elem               a,
                                                           elem               b,
                                                           elem               a2,
                                                           elem b2);

  // Checks every step against the tables and that the steps chain from
  // `from` to `to`.
  bool replay(SPoset const&             A,
              SPoset const&             B,
              TossingCertificate const& cert);

  // Rewrites each step as a one-row scheme and concatenates.
  TossingScheme to_scheme(TossingCertificate const& cert);

  bool verify_scheme(SPoset const&        A,
                     SPoset const&        B,
                     TossingScheme const& scheme,
                     ElemPair             from,
                     ElemPair             to);

  struct EmbeddingTest {
    bool holds = true;
    // (a, u, a', u') with a ⊗ u ≤ a' ⊗ u' in A ⊗ S but not in A ⊗ J; u, u'
    // are elements of S.
    std::optional<std::array<elem, 4>> failing;
  };

  // Does A ⊗ − turn the inclusion J ↪ S of a left ideal into an order
  // embedding? Throws InputError if J is not a left ideal.
  EmbeddingTest canonical_embedding_test(SPoset const&            A,
                                         std::vector<elem> const& J);

}  // namespace spos

#endif  // SPOS_TENSOR_HPP_
