#ifndef SPOS_CORE_HPP_
#define SPOS_CORE_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spos/relation.hpp"

namespace spos {

  using elem = std::size_t;

  inline constexpr elem kUnassigned = std::numeric_limits<elem>::max();

  // Malformed input: wrong table shape, index out of range, bad file.
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // First failed axiom of a candidate structure, with the elements that
  // witness the failure.
  struct Violation {
    std::string       axiom;
    std::vector<elem> witness;

    std::string describe() const;
  };

  class ValidationError : public std::runtime_error {
   public:
    explicit ValidationError(Violation v);
    Violation const& violation() const noexcept {
      return _violation;
    }

   private:
    Violation _violation;
  };

  using Validation = std::optional<Violation>;

  ////////////////////////////////////////////////////////////////////////
  // Pomonoid
  ////////////////////////////////////////////////////////////////////////

  // Checks the tables of a candidate pomonoid on {0, ..., n-1} with identity
  // 0. Throws InputError on shape or range errors; returns the first failed
  // axiom otherwise.
  Validation validate_pomonoid(std::size_t              n,
                               std::vector<elem> const& mul,
                               Relation const&          leq);

  /// A finite partially ordered monoid with identity 0.
  ///
  /// Immutable handle: copies share the tables. The constructor validates and
  /// throws ValidationError on the first violated axiom.
  class Pomonoid {
   public:
    static constexpr elem one = 0;

    Pomonoid(std::size_t n, std::vector<elem> mul, Relation leq);

    static Pomonoid trivial();

    std::size_t size() const noexcept {
      return _data->n;
    }
    elem mul(elem a, elem b) const noexcept {
      return _data->mul[a * _data->n + b];
    }
    bool leq(elem a, elem b) const noexcept {
      return _data->leq(a, b);
    }
    Relation const& order() const noexcept {
      return _data->leq;
    }
    std::vector<elem> const& table() const noexcept {
      return _data->mul;
    }

    bool operator==(Pomonoid const& other) const noexcept;
    bool operator!=(Pomonoid const& other) const noexcept {
      return !(*this == other);
    }

   private:
    struct Data {
      std::size_t       n;
      std::vector<elem> mul;
      Relation          leq;
    };
    std::shared_ptr<Data const> _data;
  };

  // Same tables with every product reversed: a *op b = b * a.
  Pomonoid opposite(Pomonoid const& S);

  std::vector<elem> idempotents(Pomonoid const& S);

  ////////////////////////////////////////////////////////////////////////
  // S-posets
  ////////////////////////////////////////////////////////////////////////

  enum class Side { right, left };

  // act[a * |S| + s] is a·s for right S-posets and s·a for left ones.
  Validation validate_sposet(Pomonoid const&          S,
                             Side                     side,
                             std::size_t              m,
                             std::vector<elem> const& act,
                             Relation const&          leq);

  /// A finite poset with a monotone action of a pomonoid.
  ///
  /// The side flag decides how act() composes; every algorithm in the
  /// library consults it rather than using a separate dual type.
  class SPoset {
   public:
    SPoset(Pomonoid monoid,
           Side              side,
           std::size_t       m,
           std::vector<elem> act,
           Relation          leq);

    Pomonoid const& monoid() const noexcept {
      return _monoid;
    }
    Side side() const noexcept {
      return _side;
    }
    std::size_t size() const noexcept {
      return _m;
    }
    // a·s (right) or s·a (left).
    elem act(elem a, elem s) const noexcept {
      return _act[a * _monoid.size() + s];
    }
    bool leq(elem a, elem b) const noexcept {
      return _leq(a, b);
    }
    Relation const& order() const noexcept {
      return _leq;
    }
    std::vector<elem> const& table() const noexcept {
      return _act;
    }

    // aS (right) or Sa (left), ascending.
    std::vector<elem> orbit(elem a) const;

    bool operator==(SPoset const& other) const noexcept;
    bool operator!=(SPoset const& other) const noexcept {
      return !(*this == other);
    }

   private:
    Pomonoid          _monoid;
    Side              _side;
    std::size_t       _m;
    std::vector<elem> _act;
    Relation          _leq;
  };

  ////////////////////////////////////////////////////////////////////////
  // Maps
  ////////////////////////////////////////////////////////////////////////

  struct SPosetMap {
    std::vector<elem> image;

    elem operator()(elem a) const noexcept {
      return image[a];
    }
    bool operator==(SPosetMap const&) const = default;
    auto operator<=>(SPosetMap const&) const = default;
  };

  Validation validate_map(SPoset const&    source,
                          SPoset const&    target,
                          SPosetMap const& f);

  // x ↦ second(first(x)).
  SPosetMap compose(SPosetMap const& first, SPosetMap const& second);

  SPosetMap identity_map(SPoset const& A);

  // f(a) ≤ f(a') iff a ≤ a'.
  bool is_order_embedding(SPoset const&    source,
                          SPoset const&    target,
                          SPosetMap const& f);

  bool is_surjective(SPoset const& target, SPosetMap const& f);

  ////////////////////////////////////////////////////////////////////////
  // Down-sets
  ////////////////////////////////////////////////////////////////////////

  // (X] = {p | p ≤ x for some x in X}. Throws InputError if X is empty.
  std::vector<elem> down_set(Relation const& leq, std::vector<elem> const& X);
  std::vector<elem> down_set(SPoset const& P, std::vector<elem> const& X);
  std::vector<elem> down_set(Pomonoid const& S, std::vector<elem> const& X);

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism search
  ////////////////////////////////////////////////////////////////////////

  enum class HomMode { all, exists, surjective };

  // Visits every S-poset map A → B that agrees with `fixed` (kUnassigned
  // entries are free). Stops when `visit` returns false. Elements are
  // assigned in descending orbit size; each assignment propagates along the
  // whole orbit before monotonicity is checked.
  void search_homomorphisms(
      SPoset const&                                      A,
      SPoset const&                                      B,
      std::vector<elem> const&                           fixed,
      std::function<bool(std::vector<elem> const&)> const& visit);

  // Maps in lexicographic order of their image tables. `exists` returns at
  // most one map.
  std::vector<SPosetMap> find_homomorphisms(SPoset const& A,
                                            SPoset const& B,
                                            HomMode       mode = HomMode::all);

  std::optional<SPosetMap> find_homomorphism(SPoset const&            A,
                                             SPoset const&            B,
                                             std::vector<elem> const& fixed
                                             = {});

  bool hom_exists(SPoset const& A, SPoset const& B);

}  // namespace spos

#endif  // SPOS_CORE_HPP_
