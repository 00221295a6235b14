#ifndef SPOS_RELATION_HPP_
#define SPOS_RELATION_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace spos {

  /// Square boolean matrix over {0, ..., n-1}, stored as packed 64-bit rows.
  ///
  /// Every order, preorder and closure in the library is one of these. Row i
  /// holds the set {j | (i, j) in R}.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n);

    static Relation identity(std::size_t n);
    static Relation full(std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }

    bool operator()(std::size_t i, std::size_t j) const noexcept {
      return (_bits[i * _stride + (j >> 6)] >> (j & 63)) & 1U;
    }

    void set(std::size_t i, std::size_t j, bool value = true) noexcept {
      std::uint64_t& w    = _bits[i * _stride + (j >> 6)];
      std::uint64_t  mask = std::uint64_t(1) << (j & 63);
      w = value ? (w | mask) : (w & ~mask);
    }

    // Reflexive-transitive closure (Warshall over packed rows).
    void close();
    // Transitive closure only.
    void transitive_closure();

    Relation converse() const;
    Relation symmetric_part() const;  // R ∩ R^op

    Relation& operator|=(Relation const& other);
    Relation& operator&=(Relation const& other);

    bool operator==(Relation const& other) const noexcept {
      return _n == other._n && _bits == other._bits;
    }
    bool operator!=(Relation const& other) const noexcept {
      return !(*this == other);
    }
    bool operator<(Relation const& other) const noexcept {
      return _n != other._n ? _n < other._n : _bits < other._bits;
    }

    bool subset_of(Relation const& other) const noexcept;

    bool is_reflexive() const noexcept;
    bool is_transitive() const noexcept;
    bool is_antisymmetric() const noexcept;
    bool is_partial_order() const noexcept {
      return is_reflexive() && is_transitive() && is_antisymmetric();
    }

    // First (i, j, k) with iRj, jRk and not iRk, if any.
    bool find_transitivity_failure(std::size_t& i,
                                   std::size_t& j,
                                   std::size_t& k) const noexcept;

    // Number of pairs in the relation.
    std::size_t count() const noexcept;

    // Pairs (i, j), i != j, in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
    // Covering pairs of a partial order (Hasse diagram edges).
    std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

    // Image of the relation under a relabelling: result(p[i], p[j]) = R(i, j).
    Relation relabel(std::vector<std::size_t> const& p) const;

    std::uint64_t const* row(std::size_t i) const noexcept {
      return _bits.data() + i * _stride;
    }
    std::size_t stride() const noexcept {
      return _stride;
    }

   private:
    std::uint64_t* mutable_row(std::size_t i) noexcept {
      return _bits.data() + i * _stride;
    }

    std::size_t                _n      = 0;
    std::size_t                _stride = 0;
    std::vector<std::uint64_t> _bits;
  };

}  // namespace spos

#endif  // SPOS_RELATION_HPP_
