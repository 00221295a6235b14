#ifndef SPOS_ENUMERATION_HPP_
#define SPOS_ENUMERATION_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "spos/core.hpp"

namespace spos {

  inline constexpr std::size_t kMaxPomonoidOrder = 4;
  inline constexpr std::size_t kMaxSPosetSize    = 5;

  /// Byte string identifying a structure up to isomorphism: size, then the
  /// multiplication (or action) table, then the order matrix, minimised over
  /// all relabellings (identity pinned at 0 for pomonoids).
  struct CanonicalKey {
    std::string bytes;

    std::string hex() const;
    auto operator<=>(CanonicalKey const&) const = default;
  };

  // result.mul(p[a], p[b]) = p[S.mul(a, b)]; p must fix 0.
  Pomonoid relabel(Pomonoid const& S, std::vector<elem> const& p);
  // result.act(p[a], s) = p[A.act(a, s)].
  SPoset relabel(SPoset const& A, std::vector<elem> const& p);

  CanonicalKey canonical_key(Pomonoid const& S);
  CanonicalKey canonical_key(SPoset const& A);

  // The relabelling that attains the canonical key.
  Pomonoid canonical_form(Pomonoid const& S);
  SPoset   canonical_form(SPoset const& A);

  struct IsoResult {
    bool              isomorphic = false;
    std::vector<elem> permutation;  // X element ↦ Y element

    explicit operator bool() const noexcept {
      return isomorphic;
    }
  };

  // Bijections preserving multiplication (or action) and order in both
  // directions. S-posets over different pomonoids or sides are never
  // isomorphic.
  IsoResult are_isomorphic(Pomonoid const& X, Pomonoid const& Y);
  IsoResult are_isomorphic(SPoset const& X, SPoset const& Y);

  template <typename T>
  struct CatalogEntry {
    CanonicalKey                key;
    T                           structure;
    std::map<std::string, bool> flags;
  };

  // Entries have distinct keys, sorted ascending.
  template <typename T>
  struct Catalog {
    std::vector<CatalogEntry<T>> entries;

    std::size_t size() const noexcept {
      return entries.size();
    }
  };

  // All labelled partial orders on n points, built one point at a time by
  // choosing a compatible (down-set, up-set) pair for the new point.
  std::vector<Relation> all_partial_orders(std::size_t n);

  // All multiplication tables on {0..n-1} with identity 0 (labelled).
  std::vector<std::vector<elem>> monoid_tables(std::size_t n);

  // Monoids of order n up to isomorphism, ignoring order (discrete order).
  // Throws InputError if n is zero or exceeds kMaxPomonoidOrder.
  Catalog<Pomonoid> enumerate_monoids(std::size_t n, std::size_t workers = 1);

  // Pomonoids of order n up to isomorphism. Throws InputError if n is zero
  // or exceeds `max_order`.
  Catalog<Pomonoid> enumerate_pomonoids(std::size_t n,
                                        std::size_t workers   = 1,
                                        std::size_t max_order = kMaxPomonoidOrder);

  // S-posets with m elements over S up to isomorphism.
  Catalog<SPoset> enumerate_sposets(Pomonoid const& S,
                                    std::size_t     m,
                                    std::size_t     workers  = 1,
                                    Side            side     = Side::right,
                                    std::size_t     max_size = kMaxSPosetSize);

  // Catalog entries for sizes 1..max, concatenated in size order.
  std::vector<Pomonoid> pomonoids_up_to(std::size_t max_order,
                                        std::size_t workers = 1);
  std::vector<SPoset> sposets_up_to(Pomonoid const& S,
                                    std::size_t     max_size,
                                    std::size_t     workers = 1,
                                    Side            side    = Side::right);

}  // namespace spos

#endif  // SPOS_ENUMERATION_HPP_
