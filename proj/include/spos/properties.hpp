#ifndef SPOS_PROPERTIES_HPP_
#define SPOS_PROPERTIES_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spos/congruence.hpp"
#include "spos/core.hpp"

namespace spos {

  // Two independent decision routes for the same property disagreed. This
  // is always a bug in the library, never a property of the input.
  class RouteDisagreement : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  struct PropertyVerdict {
    std::string            property;
    bool                   holds = true;
    // Counterexample tuple when the property fails; a property-specific
    // certificate (possibly empty) when it holds.
    std::vector<elem>      witness;
    std::vector<SPosetMap> maps;
    std::string            note;

    explicit operator bool() const noexcept {
      return holds;
    }

    // property=<name> holds=<true|false> witness=[..] [maps=[..]] [note=..]
    std::string to_line() const;
  };

  ////////////////////////////////////////////////////////////////////////
  // Flatness-type conditions on right S-posets
  ////////////////////////////////////////////////////////////////////////

  // ∀ a, s, t with as ≤ at ∃ a', u: a = a'u and us ≤ ut. Witness (a, s, t).
  PropertyVerdict cond_E(SPoset const& A);

  // ∀ a, a', s, t with as ≤ a't ∃ a'', u, v: a = a''u, a' = a''v, us ≤ vt.
  // Witness (a, a', s, t).
  PropertyVerdict cond_P(SPoset const& A);

  PropertyVerdict strongly_flat(SPoset const& A);

  // Principal weak po-flatness by the embedding test for every Ss; witness
  // (s, a, u, a', u') with a ⊗ u ≤ a' ⊗ u' in A ⊗ S but not in A ⊗ Ss.
  PropertyVerdict pw_po_flat_embedding(SPoset const& A);
  // as ≤ a's ⇒ a ⊗ s ≤ a' ⊗ s in A ⊗ Ss; witness (a, a', s).
  PropertyVerdict pw_po_flat_criterion(SPoset const& A);
  // Both routes; throws RouteDisagreement if they differ.
  PropertyVerdict pw_po_flat(SPoset const& A);

  // Embedding test for every left ideal J; witness (k, a, u, a', u') where
  // k indexes left_ideals(S).
  PropertyVerdict w_po_flat_embedding(SPoset const& A);
  // pw_po_flat ∧ cond_W.
  PropertyVerdict w_po_flat_criterion(SPoset const& A);
  PropertyVerdict w_po_flat(SPoset const& A);

  // ∀ a, a', x, y with ax ≤ a'y ∃ a'', p ∈ Sx, q ∈ Sy: p ≤ q, ax ≤ a''p and
  // a''q ≤ a'y. Witness (a, a', x, y).
  PropertyVerdict cond_W(SPoset const& A);
  // As cond_W, restricted to x, y with Sx ∩ (Sy] nonempty.
  PropertyVerdict cond_Wprime(SPoset const& A);
  PropertyVerdict almost_w_po_flat(SPoset const& A);

  // {c | sc ≤ s'c ⇒ s ≤ s'}, ascending.
  std::vector<elem> right_po_cancellables(Pomonoid const& S);
  // ac ≤ a'c ⇒ a ≤ a' for every right po-cancellable c; witness (a, a', c).
  PropertyVerdict po_torsion_free(SPoset const& A);

  // Every a has an S-poset map f: aS → S with a f(a) = a; such an f is
  // as ↦ xs for an x with ax = a and (as ≤ at ⇒ xs ≤ xt). Witness on
  // failure: the element a; on success: the chosen x for each a.
  PropertyVerdict i_regular(SPoset const& A);

  ////////////////////////////////////////////////////////////////////////
  // Cyclic projectivity, generators, retracts
  ////////////////////////////////////////////////////////////////////////

  struct ProjectivityReadings {
    // Least idempotent e with rho = ker λ_e as ordered congruences.
    std::optional<elem> ordered;
    // Least idempotent e whose kernel has the same partition as rho.
    std::optional<elem> partition;
    // Least idempotent e with S/rho ≅ eS.
    std::optional<elem> retract;
  };

  // rho must be a congruence on S_S.
  ProjectivityReadings projectivity_readings(Pomonoid const&          S,
                                             OrderedCongruence const& rho);

  // Ordered reading; witness {e} on success. Throws RouteDisagreement if the
  // isomorphism test disagrees with the kernel test.
  PropertyVerdict cyclic_projective(Pomonoid const&          S,
                                    OrderedCongruence const& rho);

  // A surjective S-poset map f: A → S_S and its splitting g(s) = a s for
  // the least a with f(a) = 1; maps = {f, g}.
  PropertyVerdict is_generator(SPoset const& A);

  // B is a retract of A: maps = {f: A → B, g: B → A} with f ∘ g = id.
  PropertyVerdict is_retract(SPoset const& A, SPoset const& B);

  ////////////////////////////////////////////////////////////////////////
  // Pomonoid properties
  ////////////////////////////////////////////////////////////////////////

  // ∀ s ∃ x: s = sxs. Witness s.
  PropertyVerdict pomonoid_regular(Pomonoid const& S);
  // ∀ s, t: Ss ∩ (St] nonempty. Witness (s, t).
  PropertyVerdict weakly_right_reversible(Pomonoid const& S);
  // ∀ a ∃ idempotent e: a = ea and (sa ≤ ta ⇒ se ≤ te). Witness a.
  PropertyVerdict left_PP(Pomonoid const& S);
  // ∀ x: ker λ_x is cyclic projective. Witness x.
  PropertyVerdict right_PP(Pomonoid const& S);

  // Some y with xy = 1.
  bool right_invertible(Pomonoid const& S, elem x);

  // H(s, t) = {(us, vt) | us ≤ vt}, ascending.
  PairSet H_set(Pomonoid const& S, elem s, elem t);
  // Ŝ(p, q) = {(u, v) | ∃ w: u ≤ wp, wq ≤ v}, ascending.
  PairSet S_hat(Pomonoid const& S, elem p, elem q);
  // ∀ x, y with H(x, y) nonempty ∃ (p, q) ∈ H(x, y): H(x, y) ⊆ Ŝ(p, q).
  // Witness (x, y).
  PropertyVerdict coherence_criterion(Pomonoid const& S);

  struct KernelMeetReadings {
    std::optional<elem> ordered;
    std::optional<elem> partition;
  };

  // E must be a nonempty set of idempotents.
  KernelMeetReadings ker_intersection_readings(Pomonoid const&          S,
                                               std::vector<elem> const& E);
  // Ordered reading; the partition reading is recorded in the note.
  PropertyVerdict ker_intersection_criterion(Pomonoid const&          S,
                                             std::vector<elem> const& E);

  // ∀ a, a', x, y with ax ≤ a'y ∃ a'', x1, y1 and idempotents u, v: ux = x,
  // vy = y, x1 x ≤ y1 y, au ≤ a'' x1, a'' y1 ≤ a'v. Throws InputError unless
  // S is left PP; throws RouteDisagreement if the verdict differs from
  // w_po_flat. Witness (a, a', x, y).
  PropertyVerdict PP_wpoflat_criterion(SPoset const& A);

  ////////////////////////////////////////////////////////////////////////
  // Lookup by name
  ////////////////////////////////////////////////////////////////////////

  // Names accepted by check_property, in a fixed order.
  std::vector<std::string> const& sposet_property_names();
  std::vector<std::string> const& pomonoid_property_names();

  // Throws InputError for unknown names.
  PropertyVerdict check_property(SPoset const& A, std::string const& name);
  PropertyVerdict check_property(Pomonoid const& S, std::string const& name);

}  // namespace spos

#endif  // SPOS_PROPERTIES_HPP_
