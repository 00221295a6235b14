#ifndef SPOS_CONSTRUCTIONS_HPP_
#define SPOS_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "spos/core.hpp"

namespace spos {

  inline constexpr std::size_t kDefaultProductCap = 4096;

  // S acting on itself by right (resp. left) multiplication, with S's order.
  SPoset regular_right(Pomonoid const& S);
  SPoset regular_left(Pomonoid const& S);

  // The one-element S-poset Θ.
  SPoset one_point(Pomonoid const& S, Side side = Side::right);

  // A sub-S-poset with restricted order. embedding[i] is the element of the
  // parent that i stands for; the carrier is listed ascending.
  struct SubPoset {
    SPoset            poset;
    std::vector<elem> embedding;

    SPosetMap inclusion() const {
      return SPosetMap{embedding};
    }
  };

  // Throws InputError unless `carrier` is nonempty and closed under the action.
  SubPoset restrict_to(SPoset const& A, std::vector<elem> carrier);

  // aS (right) or Sa (left) with the restricted order and action.
  SubPoset cyclic_subposet(SPoset const& A, elem a);

  bool is_right_ideal(Pomonoid const& S, std::vector<elem> const& I);
  bool is_left_ideal(Pomonoid const& S, std::vector<elem> const& J);

  std::vector<elem> principal_right_ideal(Pomonoid const& S, elem s);
  std::vector<elem> principal_left_ideal(Pomonoid const& S, elem s);

  // All right (resp. left) ideals, each sorted ascending, the list in
  // ascending lexicographic order.
  std::vector<std::vector<elem>> right_ideals(Pomonoid const& S);
  std::vector<std::vector<elem>> left_ideals(Pomonoid const& S);

  // A right ideal as a right S-poset, a left ideal as a left S-poset.
  SubPoset right_ideal_poset(Pomonoid const& S, std::vector<elem> const& I);
  SubPoset left_ideal_poset(Pomonoid const& S, std::vector<elem> const& J);

  ////////////////////////////////////////////////////////////////////////
  // A(I): two copies of S glued along a proper right ideal I
  ////////////////////////////////////////////////////////////////////////

  enum class AmalgamTag { x, y, z };

  struct AmalgamPoset {
    SPoset                                     poset;
    std::vector<std::pair<AmalgamTag, elem>> tags;

    // Index of (tag, s); throws InputError if there is no such element.
    elem index_of(AmalgamTag tag, elem s) const;
    std::string label(elem a) const;
  };

  // Carrier ({x,y} × (S∖I)) ∪ ({z} × I), listed as the x-block, the y-block
  // and the z-block, each ascending in S. Throws InputError if I is not a
  // proper right ideal and ValidationError (with the witness) if the
  // resulting tables are not an S-poset.
  AmalgamPoset amalgam(Pomonoid const& S, std::vector<elem> const& I);

  ////////////////////////////////////////////////////////////////////////
  // Products and coproducts
  ////////////////////////////////////////////////////////////////////////

  // Componentwise order and action. Tuples are indexed in mixed radix with
  // the first factor most significant. Throws InputError on an empty list,
  // mismatched pomonoids/sides, or when the size exceeds `cap`.
  SPoset product(std::vector<SPoset> const& factors,
                 std::size_t                cap = kDefaultProductCap);

  // Coordinates of a product element.
  std::vector<elem> product_coordinates(std::vector<SPoset> const& factors,
                                        elem                       x);
  elem product_index(std::vector<SPoset> const& factors,
                     std::vector<elem> const&   coordinates);

  SPosetMap projection(std::vector<SPoset> const& factors, std::size_t i);

  // D(S) = S_S × S_S.
  SPoset diagonal(Pomonoid const& S);
  // S^k with componentwise right action, k ≥ 1.
  SPoset power(Pomonoid const& S,
               std::size_t     k,
               std::size_t     cap = kDefaultProductCap);

  // Disjoint union; elements of B are shifted by |A|.
  SPoset coproduct(SPoset const& A, SPoset const& B);

}  // namespace spos

#endif  // SPOS_CONSTRUCTIONS_HPP_
