#include "spos/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "spos/congruence.hpp"
#include "spos/constructions.hpp"
#include "spos/enumeration.hpp"
#include "spos/parallel.hpp"
#include "spos/properties.hpp"

namespace spos::verify {

  namespace {

    std::vector<std::string> const kTags{
        "GEN-TFAE",     "COR-SI",       "COR-IDEALS",   "MONO-SF-PROJ",
        "MAINE",        "CYCPROJ",      "REGULAR-TFAE", "WPOFLAT-TFAE",
        "WRR-COLLAPSE", "WLCOHERE",     "IREG-TFAE",    "PTF-TFAE",
        "IMPLICATIONS", "RETRACT-TRANSFER"};

    // Properties preserved by retracts, for the generator theorem.
    std::vector<std::string> const kRetractClosed{"condition-e", "w-po-flat",
                                                  "i-regular"};

    ////////////////////////////////////////////////////////////////////////
    // Torsion freeness in the unordered sense; only used to look for
    // instances separating it from po-torsion freeness.
    ////////////////////////////////////////////////////////////////////////

    std::vector<elem> right_cancellables(Pomonoid const& S) {
      std::vector<elem> out;
      for (elem c = 0; c < S.size(); ++c) {
        bool ok = true;
        for (elem s = 0; s < S.size() && ok; ++s) {
          for (elem s2 = 0; s2 < S.size() && ok; ++s2) {
            ok = S.mul(s, c) != S.mul(s2, c) || s == s2;
          }
        }
        if (ok) {
          out.push_back(c);
        }
      }
      return out;
    }

    PropertyVerdict torsion_free(SPoset const& A) {
      for (elem c : right_cancellables(A.monoid())) {
        for (elem a = 0; a < A.size(); ++a) {
          for (elem a2 = 0; a2 < A.size(); ++a2) {
            if (a != a2 && A.act(a, c) == A.act(a2, c)) {
              return {"torsion-free", false, {a, a2, c}, {}, {}};
            }
          }
        }
      }
      return {"torsion-free", true, {}, {}, {}};
    }

    PropertyVerdict sposet_property(SPoset const& A, std::string const& name) {
      if (name == "torsion-free") {
        return torsion_free(A);
      }
      return check_property(A, name);
    }

    // Every right po-cancellable element is right invertible; witness c.
    PropertyVerdict cancellables_invertible(Pomonoid const& S) {
      for (elem c : right_po_cancellables(S)) {
        if (!right_invertible(S, c)) {
          return {"cancellables-invertible", false, {c}, {}, {}};
        }
      }
      return {"cancellables-invertible", true, {}, {}, {}};
    }

    PropertyVerdict pomonoid_property(Pomonoid const& S,
                                      std::string const& name) {
      if (name == "cancellables-invertible") {
        return cancellables_invertible(S);
      }
      return check_property(S, name);
    }

    ////////////////////////////////////////////////////////////////////////
    // Evidence claims: re-evaluable statements attached to records
    ////////////////////////////////////////////////////////////////////////

    json claim(PropertyVerdict const& v) {
      return json{{"property", v.property},
                  {"holds", v.holds},
                  {"witness", v.witness}};
    }

    json sposet_claim(SPoset const& A, PropertyVerdict const& v) {
      json j         = claim(v);
      j["kind"]      = "sposet";
      j["structure"] = io::to_json(A);
      return j;
    }

    json pomonoid_claim(Pomonoid const& S, PropertyVerdict const& v) {
      json j         = claim(v);
      j["kind"]      = "pomonoid";
      j["structure"] = io::to_json(S);
      return j;
    }

    // Property of S/rho, or of rho itself for "cyclic-projective" and
    // "subannihilator".
    PropertyVerdict quotient_property(Pomonoid const&          S,
                                      OrderedCongruence const& rho,
                                      std::string const&       name) {
      if (name == "cyclic-projective") {
        return cyclic_projective(S, rho);
      }
      if (name == "subannihilator") {
        auto s = subannihilator_witness(S, rho);
        return {"subannihilator", s.has_value(),
                s ? std::vector<elem>{*s} : std::vector<elem>{}, {}, {}};
      }
      return sposet_property(quotient(regular_right(S), rho), name);
    }

    json quotient_claim(Pomonoid const&          S,
                        OrderedCongruence const& rho,
                        PropertyVerdict const&   v) {
      json j          = claim(v);
      j["kind"]       = "quotient";
      j["pomonoid"]   = io::to_json(S);
      j["congruence"] = io::to_json(rho);
      return j;
    }

    PropertyVerdict nu_below_kernel(Pomonoid const& S, elem e) {
      auto nu = induced_congruence(regular_right(S), {{Pomonoid::one, e}});
      return {"nu-below-kernel", congruence_leq(nu, ker_lambda(S, e)), {e},
              {}, {}};
    }

    json cycproj_claim(Pomonoid const& S, PropertyVerdict const& v) {
      json j        = claim(v);
      j["kind"]     = "cycproj";
      j["pomonoid"] = io::to_json(S);
      return j;
    }

    json kernel_meet_claim(Pomonoid const&          S,
                           std::vector<elem> const& E,
                           PropertyVerdict const&   v) {
      json j           = claim(v);
      j["kind"]        = "kernel-meet";
      j["pomonoid"]    = io::to_json(S);
      j["idempotents"] = E;
      return j;
    }

    json retract_claim(SPoset const& A, SPoset const& B, bool holds) {
      return json{{"kind", "retract"},
                  {"property", "retract"},
                  {"holds", holds},
                  {"source", io::to_json(A)},
                  {"target", io::to_json(B)}};
    }

    ////////////////////////////////////////////////////////////////////////
    // The bounded universe for one pomonoid
    ////////////////////////////////////////////////////////////////////////

    // posets = U0 ++ amalgams ++ {S × X | X in U0 ++ amalgams}, where U0 is
    // the enumerated right S-posets of size ≤ max_poset and the amalgams are
    // A(I) for the proper right ideals I.
    class Universe {
     public:
      Universe(Pomonoid S, Scope const& scope)
          : _S(std::move(S)), _R(regular_right(_S)) {
        _posets = sposets_up_to(_S, scope.max_poset, 1);
        _enumerated = _posets.size();
        for (auto const& I : right_ideals(_S)) {
          if (I.size() < _S.size()) {
            _amalgam_index[I] = _posets.size();
            _posets.push_back(amalgam(_S, I).poset);
          }
        }
        _base = _posets.size();
        for (std::size_t i = 0; i < _base; ++i) {
          _posets.push_back(product({_R, _posets[i]}));
        }
        _hom.assign(_posets.size(), -1);
        _gen.assign(_posets.size(), -1);
        _memo.resize(_posets.size());
      }

      Pomonoid const& S() const noexcept {
        return _S;
      }
      SPoset const& R() const noexcept {
        return _R;
      }
      std::size_t size() const noexcept {
        return _posets.size();
      }
      std::size_t enumerated() const noexcept {
        return _enumerated;
      }
      // Indices ≥ base() are the products S × X.
      std::size_t base() const noexcept {
        return _base;
      }
      SPoset const& operator[](std::size_t i) const {
        return _posets[i];
      }
      std::size_t amalgam_index(std::vector<elem> const& I) const {
        return _amalgam_index.at(I);
      }

      bool hom_to_S(std::size_t i) {
        if (_hom[i] < 0) {
          _hom[i] = hom_exists(_posets[i], _R);
        }
        return _hom[i];
      }

      bool generator(std::size_t i) {
        if (_gen[i] < 0) {
          _gen[i] = verdict(i, "generator").holds;
        }
        return _gen[i];
      }

      PropertyVerdict const& verdict(std::size_t i, std::string const& name) {
        auto it = _memo[i].find(name);
        if (it == _memo[i].end()) {
          it = _memo[i].emplace(name, sposet_property(_posets[i], name)).first;
        }
        return it->second;
      }

      std::vector<OrderedCongruence> const& congruences() {
        if (!_congruences) {
          _congruences = all_congruences(_R);
        }
        return *_congruences;
      }

     private:
      Pomonoid                                                _S;
      SPoset                                                  _R;
      std::vector<SPoset>                                     _posets;
      std::size_t                                             _enumerated = 0;
      std::size_t                                             _base       = 0;
      std::map<std::vector<elem>, std::size_t>                _amalgam_index;
      std::vector<int>                                        _hom;
      std::vector<int>                                        _gen;
      std::vector<std::map<std::string, PropertyVerdict>>     _memo;
      std::optional<std::vector<OrderedCongruence>>           _congruences;
    };

    ////////////////////////////////////////////////////////////////////////
    // Sides of equivalences
    ////////////////////////////////////////////////////////////////////////

    struct Outcome {
      std::size_t       instances = 0;
      std::vector<json> violations;
      std::vector<json> findings;
      double            seconds = 0;
    };

    struct SideValue {
      std::string         label;
      bool                holds = true;
      std::optional<json> evidence;

      void fail(json e) {
        if (holds) {
          holds    = false;
          evidence = std::move(e);
        }
      }
    };

    // ∀ i in scope: posets[i] has the property.
    template <typename InScope>
    SideValue forall(Universe&          U,
                     std::string        label,
                     std::string const& property,
                     InScope&&          in_scope,
                     Outcome&           out) {
      SideValue side{std::move(label), true, std::nullopt};
      for (std::size_t i = 0; i < U.size(); ++i) {
        if (!in_scope(i)) {
          continue;
        }
        ++out.instances;
        auto const& v = U.verdict(i, property);
        if (!v.holds) {
          side.fail(sposet_claim(U[i], v));
          break;
        }
      }
      return side;
    }

    json record(std::string const& tag, Pomonoid const& S, std::string check) {
      return json{{"tag", tag}, {"pomonoid", io::to_json(S)}, {"check", check}};
    }

    void equivalence(std::string const&            tag,
                     Pomonoid const&               S,
                     std::string const&            property,
                     std::vector<SideValue> const& sides,
                     Outcome&                      out) {
      bool all_same = true;
      for (auto const& s : sides) {
        all_same = all_same && s.holds == sides.front().holds;
      }
      if (all_same) {
        return;
      }
      json r        = record(tag, S, "equivalence");
      r["property"] = property;
      r["sides"]    = json::object();
      r["evidence"] = json::array();
      for (auto const& s : sides) {
        r["sides"][s.label] = s.holds;
        if (s.evidence) {
          r["evidence"].push_back(*s.evidence);
        }
      }
      out.violations.push_back(std::move(r));
    }

    void implication(std::string const& tag,
                     Pomonoid const&    S,
                     std::string const& premise,
                     std::string const& conclusion,
                     json               evidence,
                     Outcome&           out) {
      json r          = record(tag, S, "implication");
      r["premise"]    = premise;
      r["conclusion"] = conclusion;
      r["evidence"]   = std::move(evidence);
      out.violations.push_back(std::move(r));
    }

    ////////////////////////////////////////////////////////////////////////
    // Theorem checks, one pomonoid at a time
    ////////////////////////////////////////////////////////////////////////

    void gen_tfae(Universe& U, Scope const&, Outcome& out) {
      for (auto const& P : kRetractClosed) {
        auto i   = forall(U, "(i)", P, [&](std::size_t k) { return U.generator(k); }, out);
        auto ii  = forall(U, "(ii)", P, [&](std::size_t k) { return k >= U.base(); }, out);
        auto iii = forall(U, "(iii)", P, [&](std::size_t k) { return U.hom_to_S(k); }, out);
        equivalence("GEN-TFAE", U.S(), P, {i, ii, iii}, out);
      }
    }

    void cor_si(Universe& U, Scope const& scope, Outcome& out) {
      for (auto const& P : kRetractClosed) {
        auto iii = forall(U, "(iii)", P, [&](std::size_t k) { return U.hom_to_S(k); }, out);
        if (!iii.holds) {
          continue;
        }
        for (std::size_t k = 1; k <= scope.power_cap; ++k) {
          SPoset X = power(U.S(), k);
          auto   v = sposet_property(X, P);
          ++out.instances;
          if (!v.holds) {
            implication("COR-SI", U.S(), "(iii) for " + P,
                        "S^" + std::to_string(k) + " has " + P,
                        json::array({sposet_claim(X, v)}), out);
          }
        }
      }
    }

    void cor_ideals(Universe& U, Scope const&, Outcome& out) {
      for (auto const& P : kRetractClosed) {
        auto iii = forall(U, "(iii)", P, [&](std::size_t k) { return U.hom_to_S(k); }, out);
        if (!iii.holds) {
          continue;
        }
        for (auto const& I : right_ideals(U.S())) {
          SPoset X = right_ideal_poset(U.S(), I).poset;
          auto   v = sposet_property(X, P);
          ++out.instances;
          if (!v.holds) {
            implication("COR-IDEALS", U.S(), "(iii) for " + P,
                        "right ideal has " + P,
                        json::array({sposet_claim(X, v)}), out);
          }
        }
      }
    }

    void mono_sf_proj(Universe& U, Scope const&, Outcome& out) {
      Pomonoid const& S = U.S();
      for (elem s = 0; s < S.size(); ++s) {
        for (elem t = 0; t < S.size(); ++t) {
          ++out.instances;
          auto nu = induced_congruence(U.R(), {{s, t}});
          auto sf = strongly_flat(quotient(U.R(), nu));
          if (!sf.holds) {
            continue;
          }
          auto cp = cyclic_projective(S, nu);
          if (!cp.holds) {
            json r        = record("MONO-SF-PROJ", S, "pair");
            r["pair"]     = {s, t};
            r["evidence"] = {quotient_claim(S, nu, sf),
                             quotient_claim(S, nu, cp)};
            out.violations.push_back(std::move(r));
          }
        }
      }
    }

    void maine(Universe& U, Scope const&, Outcome& out) {
      Pomonoid const& S = U.S();
      SideValue       v{"(v)", true, std::nullopt};
      SideValue       vi{"(vi)", true, std::nullopt};
      for (elem x = 0; x < S.size(); ++x) {
        for (elem y = 0; y < S.size(); ++y) {
          if (l_set(S, x, y).empty()) {
            continue;
          }
          ++out.instances;
          auto nu  = induced_congruence(U.R(), {{x, y}});
          auto e   = cond_E(quotient(U.R(), nu));
          auto cp  = cyclic_projective(S, nu);
          auto rd  = projectivity_readings(S, nu);
          auto sub = quotient_property(S, nu, "subannihilator");
          if (!e.holds) {
            v.fail(quotient_claim(S, nu, e));
          }
          if (!cp.holds) {
            vi.fail(quotient_claim(S, nu, cp));
          }
          if (e.holds != cp.holds) {
            json r        = record("MAINE", S, "pair");
            r["pair"]     = {x, y};
            r["sides"]    = {{"(v)", e.holds}, {"(vi)", cp.holds}};
            r["evidence"] = {quotient_claim(S, nu, e), quotient_claim(S, nu, cp)};
            out.violations.push_back(std::move(r));
          }
          if (rd.partition.has_value() != rd.ordered.has_value()) {
            json r        = record("MAINE", S, "reading");
            r["pair"]     = {x, y};
            r["ordered"]  = rd.ordered.has_value();
            r["partition"] = rd.partition.has_value();
            r["evidence"] = {quotient_claim(S, nu, cp)};
            out.findings.push_back(std::move(r));
          }
          if (sub.holds != subannihilator_by_hom(S, nu)) {
            throw RouteDisagreement("subannihilator: kernel test and "
                                    "homomorphism test disagree");
          }
          if (!sub.holds) {
            json r        = record("MAINE", S, "subannihilator");
            r["pair"]     = {x, y};
            r["evidence"] = {quotient_claim(S, nu, sub)};
            out.violations.push_back(std::move(r));
          }
        }
      }
      SideValue iv{"(iv)", true, std::nullopt};
      for (auto const& rho : U.congruences()) {
        if (!is_subannihilator(S, rho)) {
          continue;
        }
        ++out.instances;
        auto e = cond_E(quotient(U.R(), rho));
        if (!e.holds) {
          iv.fail(quotient_claim(S, rho, e));
          break;
        }
      }
      auto iii = forall(U, "(iii)", "condition-e", [&](std::size_t k) { return U.hom_to_S(k); }, out);
      equivalence("MAINE", S, "condition-e", {iii, iv, v, vi}, out);
    }

    void cycproj(Universe& U, Scope const&, Outcome& out) {
      for (elem e : idempotents(U.S())) {
        ++out.instances;
        auto v = nu_below_kernel(U.S(), e);
        if (!v.holds) {
          json r        = record("CYCPROJ", U.S(), "idempotent");
          r["evidence"] = {cycproj_claim(U.S(), v)};
          out.violations.push_back(std::move(r));
        }
      }
    }

    // For s not satisfying the pomonoid-side condition, A(sS) must fail P.
    void amalgam_witness(std::string const&     tag,
                         Universe&              U,
                         elem                   s,
                         PropertyVerdict const& pomonoid_side,
                         std::string const&     P,
                         Outcome&               out) {
      auto I = principal_right_ideal(U.S(), s);
      ++out.instances;
      if (I.size() == U.S().size()) {
        throw std::logic_error(tag + ": sS is not proper");
      }
      std::size_t k = U.amalgam_index(I);
      auto const& v = U.verdict(k, P);
      if (v.holds) {
        json r        = record(tag, U.S(), "amalgam");
        r["element"]  = s;
        r["evidence"] = {pomonoid_claim(U.S(), pomonoid_side), sposet_claim(U[k], v)};
        out.violations.push_back(std::move(r));
      }
    }

    void regular_tfae(Universe& U, Scope const&, Outcome& out) {
      Pomonoid const& S   = U.S();
      auto            reg = pomonoid_regular(S);
      ++out.instances;
      SideValue iii{"(iii)", reg.holds, std::nullopt};
      if (!reg.holds) {
        iii.evidence = pomonoid_claim(S, reg);
      }
      auto ii = forall(U, "(ii)", "pw-po-flat", [](std::size_t) { return true; }, out);
      auto i  = forall(U, "(i)", "pw-po-flat", [&](std::size_t k) { return U.generator(k); }, out);
      equivalence("REGULAR-TFAE", S, "pw-po-flat", {i, ii, iii}, out);
      for (elem s = 0; s < S.size(); ++s) {
        bool regular_s = false;
        for (elem x = 0; x < S.size() && !regular_s; ++x) {
          regular_s = S.mul(S.mul(s, x), s) == s;
        }
        if (!regular_s) {
          PropertyVerdict side{"regular", false, {s}, {}, {}};
          amalgam_witness("REGULAR-TFAE", U, s, side, "pw-po-flat", out);
        }
      }
    }

    void ptf_tfae(Universe& U, Scope const&, Outcome& out) {
      Pomonoid const& S   = U.S();
      auto            can = cancellables_invertible(S);
      ++out.instances;
      SideValue iii{"(iii)", can.holds, std::nullopt};
      if (!can.holds) {
        iii.evidence = pomonoid_claim(S, can);
      }
      auto ii = forall(U, "(ii)", "po-torsion-free", [](std::size_t) { return true; }, out);
      auto i  = forall(U, "(i)", "po-torsion-free", [&](std::size_t k) { return U.generator(k); }, out);
      equivalence("PTF-TFAE", S, "po-torsion-free", {i, ii, iii}, out);
      for (elem c : right_po_cancellables(S)) {
        if (!right_invertible(S, c)) {
          PropertyVerdict side{"cancellables-invertible", false, {c}, {}, {}};
          amalgam_witness("PTF-TFAE", U, c, side, "po-torsion-free", out);
        }
      }
      // Instances separating po-torsion freeness from torsion freeness.
      bool seen[2] = {false, false};
      for (std::size_t k = 0; k < U.size(); ++k) {
        auto const& ptf = U.verdict(k, "po-torsion-free");
        auto const& tf  = U.verdict(k, "torsion-free");
        if (ptf.holds == tf.holds || seen[ptf.holds]) {
          continue;
        }
        seen[ptf.holds] = true;
        json r          = record("PTF-TFAE", S, "separation");
        r["evidence"]   = {sposet_claim(U[k], ptf), sposet_claim(U[k], tf)};
        out.findings.push_back(std::move(r));
      }
    }

    void ireg_tfae(Universe& U, Scope const& scope, Outcome& out) {
      Pomonoid const& S = U.S();
      auto i   = forall(U, "(i)", "i-regular", [&](std::size_t k) { return U.generator(k); }, out);
      auto ii  = forall(U, "(ii)", "i-regular", [&](std::size_t k) { return k >= U.base(); }, out);
      auto iii = forall(U, "(iii)", "i-regular", [&](std::size_t k) { return U.hom_to_S(k); }, out);
      SideValue iv{"(iv)", true, std::nullopt};
      for (auto const& rho : U.congruences()) {
        if (!is_subannihilator(S, rho)) {
          continue;
        }
        ++out.instances;
        auto v = i_regular(quotient(U.R(), rho));
        if (!v.holds) {
          iv.fail(quotient_claim(S, rho, v));
          break;
        }
      }
      equivalence("IREG-TFAE", S, "i-regular", {i, ii, iii, iv}, out);

      // Products over right PP pomonoids.
      if (!right_PP(S).holds) {
        return;
      }
      SideValue d{"D(S)", true, std::nullopt};
      {
        SPoset D = diagonal(S);
        auto   v = i_regular(D);
        ++out.instances;
        if (!v.holds) {
          d.fail(sposet_claim(D, v));
        }
      }
      SideValue pk{"S^k", true, std::nullopt};
      for (std::size_t k = 1; k <= scope.power_cap && pk.holds; ++k) {
        SPoset X = power(S, k);
        auto   v = i_regular(X);
        ++out.instances;
        if (!v.holds) {
          pk.fail(sposet_claim(X, v));
        }
      }
      SideValue km{"kernel-meet", true, std::nullopt};
      auto      idem = idempotents(S);
      for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << idem.size()); ++mask) {
        std::vector<elem> E;
        for (std::size_t b = 0; b < idem.size(); ++b) {
          if (mask >> b & 1) {
            E.push_back(idem[b]);
          }
        }
        ++out.instances;
        auto v = ker_intersection_criterion(S, E);
        if (!v.holds) {
          km.fail(kernel_meet_claim(S, E, v));
        }
        if (!v.note.empty()) {
          json r          = record("IREG-TFAE", S, "reading");
          r["idempotents"] = E;
          r["note"]       = v.note;
          r["evidence"]   = {kernel_meet_claim(S, E, v)};
          out.findings.push_back(std::move(r));
        }
      }
      equivalence("IREG-TFAE", S, "products", {d, pk, km}, out);
    }

    void wpoflat_tfae(Universe& U, Scope const&, Outcome& out) {
      auto i   = forall(U, "(i)", "w-po-flat", [&](std::size_t k) { return U.generator(k); }, out);
      auto ii  = forall(U, "(ii)", "w-po-flat", [&](std::size_t k) { return k >= U.base(); }, out);
      auto iii = forall(U, "(iii)", "w-po-flat", [&](std::size_t k) { return U.hom_to_S(k); }, out);
      auto iv  = forall(U, "(iv)", "almost-w-po-flat", [](std::size_t) { return true; }, out);
      equivalence("WPOFLAT-TFAE", U.S(), "w-po-flat", {i, ii, iii, iv}, out);
    }

    void wrr_collapse(Universe& U, Scope const&, Outcome& out) {
      ++out.instances;
      if (!weakly_right_reversible(U.S()).holds) {
        return;
      }
      auto gen = forall(U, "generators", "w-po-flat", [&](std::size_t k) { return U.generator(k); }, out);
      auto all = forall(U, "all", "w-po-flat", [](std::size_t) { return true; }, out);
      equivalence("WRR-COLLAPSE", U.S(), "w-po-flat", {gen, all}, out);
    }

    void wlcohere(Universe& U, Scope const& scope, Outcome& out) {
      Pomonoid const& S = U.S();
      ++out.instances;
      if (!left_PP(S).holds) {
        return;
      }
      auto      coh = coherence_criterion(S);
      SideValue c{"coherence", coh.holds, std::nullopt};
      if (!coh.holds) {
        c.evidence = pomonoid_claim(S, coh);
      }
      SideValue pk{"S^k", true, std::nullopt};
      for (std::size_t k = 1; k <= scope.power_cap && pk.holds; ++k) {
        SPoset X = power(S, k);
        auto   v = w_po_flat(X);
        ++out.instances;
        if (!v.holds) {
          pk.fail(sposet_claim(X, v));
        }
      }
      SideValue products{"products", true, std::nullopt};
      std::vector<std::size_t> flat;
      for (std::size_t k = 0; k < U.enumerated(); ++k) {
        if (U.verdict(k, "w-po-flat").holds) {
          flat.push_back(k);
        }
      }
      for (std::size_t a = 0; a < flat.size() && products.holds; ++a) {
        for (std::size_t b = a; b < flat.size() && products.holds; ++b) {
          SPoset X = product({U[flat[a]], U[flat[b]]});
          auto   v = w_po_flat(X);
          ++out.instances;
          if (!v.holds) {
            products.fail(sposet_claim(X, v));
          }
        }
      }
      equivalence("WLCOHERE", S, "w-po-flat", {c, pk, products}, out);
    }

    void implications(Universe& U, Scope const&, Outcome& out) {
      static std::vector<std::pair<std::string, std::string>> const chain{
          {"strongly-flat", "condition-p"},
          {"strongly-flat", "condition-e"},
          {"w-po-flat", "almost-w-po-flat"},
          {"almost-w-po-flat", "pw-po-flat"},
          {"pw-po-flat", "po-torsion-free"}};
      for (std::size_t k = 0; k < U.size(); ++k) {
        ++out.instances;
        for (auto const& [from, to] : chain) {
          auto const& p = U.verdict(k, from);
          auto const& q = U.verdict(k, to);
          if (p.holds && !q.holds) {
            implication("IMPLICATIONS", U.S(), from, to,
                        {sposet_claim(U[k], p), sposet_claim(U[k], q)}, out);
          }
        }
      }
    }

    using Check = void (*)(Universe&, Scope const&, Outcome&);

    std::map<std::string, Check> const kChecks{
        {"GEN-TFAE", gen_tfae},         {"COR-SI", cor_si},
        {"COR-IDEALS", cor_ideals},     {"MONO-SF-PROJ", mono_sf_proj},
        {"MAINE", maine},               {"CYCPROJ", cycproj},
        {"REGULAR-TFAE", regular_tfae}, {"WPOFLAT-TFAE", wpoflat_tfae},
        {"WRR-COLLAPSE", wrr_collapse}, {"WLCOHERE", wlcohere},
        {"IREG-TFAE", ireg_tfae},       {"PTF-TFAE", ptf_tfae},
        {"IMPLICATIONS", implications}};

    ////////////////////////////////////////////////////////////////////////
    // Retract transfer over seeded pairs
    ////////////////////////////////////////////////////////////////////////

    struct Sample {
      std::size_t monoid;
      std::string construction;
      SPoset      source;
      SPoset      target;
    };

    Outcome retract_sample(Sample const& s) {
      Outcome out;
      ++out.instances;
      auto r = is_retract(s.source, s.target);
      if (!r.holds) {
        json v          = record("RETRACT-TRANSFER", s.source.monoid(), "construction");
        v["construction"] = s.construction;
        v["evidence"]   = {retract_claim(s.source, s.target, false)};
        out.violations.push_back(std::move(v));
        return out;
      }
      for (auto const& P : kRetractClosed) {
        auto a = check_property(s.source, P);
        if (!a.holds) {
          continue;
        }
        auto b = check_property(s.target, P);
        if (!b.holds) {
          json v            = record("RETRACT-TRANSFER", s.source.monoid(), "transfer");
          v["construction"] = s.construction;
          v["property"]     = P;
          v["evidence"]     = {retract_claim(s.source, s.target, true),
                               sposet_claim(s.source, a),
                               sposet_claim(s.target, b)};
          out.violations.push_back(std::move(v));
        }
      }
      return out;
    }

    std::vector<Sample> draw_samples(std::vector<Pomonoid> const&            monoids,
                                     std::vector<std::vector<SPoset>> const& base,
                                     Scope const&                            scope) {
      std::mt19937_64     rng(scope.seed);
      std::vector<Sample> out;
      out.reserve(scope.samples);
      while (out.size() < scope.samples) {
        std::size_t const i    = rng() % monoids.size();
        auto const&       U0   = base[i];
        SPoset const&     B    = U0[rng() % U0.size()];
        SPoset const&     C    = U0[rng() % U0.size()];
        bool const        prod = rng() % 2 == 0;
        SPoset const      R    = regular_right(monoids[i]);
        // B is a retract of B × C when Pos(B, C) is nonempty (graph of a
        // map), and of B ⊔ C when Pos(C, B) is nonempty (fold).
        auto try_product = [&]() -> std::optional<Sample> {
          if (hom_exists(B, C)) {
            return Sample{i, "product", product({B, C}), B};
          }
          return std::nullopt;
        };
        auto try_coproduct = [&]() -> std::optional<Sample> {
          if (hom_exists(C, B)) {
            return Sample{i, "coproduct", coproduct(B, C), B};
          }
          return std::nullopt;
        };
        auto s = prod ? try_product() : try_coproduct();
        if (!s) {
          s = prod ? try_coproduct() : try_product();
        }
        if (!s && hom_exists(B, R)) {
          s = Sample{i, "product-with-S", product({R, B}), B};
        }
        if (!s) {
          s = Sample{i, "product-with-point", product({B, one_point(monoids[i])}), B};
        }
        out.push_back(std::move(*s));
      }
      return out;
    }

    void check_scope(Scope const& scope) {
      if (scope.max_order == 0 || scope.max_order > kMaxPomonoidOrder) {
        throw InputError("verify: --max-order must be between 1 and "
                         + std::to_string(kMaxPomonoidOrder));
      }
      if (scope.max_poset == 0 || scope.max_poset > kMaxSPosetSize) {
        throw InputError("verify: --max-poset must be between 1 and "
                         + std::to_string(kMaxSPosetSize));
      }
      if (scope.power_cap == 0) {
        throw InputError("verify: --power-cap must be positive");
      }
      if (scope.workers == 0) {
        throw InputError("verify: --workers must be positive");
      }
    }

    json internal_error(std::string const& tag, Pomonoid const& S, char const* what) {
      json r       = record(tag, S, "internal");
      r["message"] = what;
      r["evidence"] = json::array();
      return r;
    }

    std::string monoid_line(std::size_t     index,
                            Pomonoid const& S,
                            Outcome const&  o) {
      std::ostringstream os;
      os << "pomonoid index=" << index << " size=" << S.size()
         << " key=" << canonical_key(S).hex() << " instances=" << o.instances
         << " violations=" << o.violations.size()
         << " findings=" << o.findings.size();
      return os.str();
    }

    std::vector<std::string> notes_for(std::string const& tag, Scope const& scope) {
      std::vector<std::string> notes;
      if (tag == "RETRACT-TRANSFER") {
        notes.push_back("evidence=sampled pairs=" + std::to_string(scope.samples)
                        + " drawn from S-posets of size <= "
                        + std::to_string(scope.max_poset));
        return notes;
      }
      notes.push_back("evidence=bounded universe: right S-posets of size <= "
                      + std::to_string(scope.max_poset)
                      + ", A(I) for proper right ideals I, and S x X for each "
                        "of these");
      if (tag == "COR-SI" || tag == "WLCOHERE" || tag == "IREG-TFAE") {
        notes.push_back("evidence=finite powers S^k for k <= "
                        + std::to_string(scope.power_cap));
      }
      if (tag == "WPOFLAT-TFAE") {
        notes.push_back("open=side (iv) ranges over all right S-posets; no "
                        "finite sufficient family is known, so only the "
                        "bounded universe is checked");
      }
      if (tag == "MAINE" || tag == "IREG-TFAE") {
        notes.push_back("reading=kernels compared as ordered congruences; "
                        "partition-only agreement is reported as a finding");
      }
      return notes;
    }
  }  // namespace

  std::vector<std::string> const& tags() {
    return kTags;
  }

  std::string TheoremReport::text() const {
    std::ostringstream os;
    os << "report theorem=" << id << " max_order=" << scope.max_order
       << " max_poset=" << scope.max_poset << " power_cap=" << scope.power_cap
       << " seed=" << scope.seed;
    if (id == "RETRACT-TRANSFER") {
      os << " samples=" << scope.samples;
    }
    os << '\n';
    for (auto const& l : lines) {
      os << l << '\n';
    }
    for (auto const& v : violations) {
      os << "violation " << v.dump() << '\n';
    }
    for (auto const& f : findings) {
      os << "finding " << f.dump() << '\n';
    }
    for (auto const& n : notes) {
      os << "note " << n << '\n';
    }
    os << "summary theorem=" << id << " pomonoids=" << pomonoids
       << " instances=" << instances << " violations=" << violations.size()
       << " findings=" << findings.size() << " result="
       << (passed() ? "pass" : "fail") << '\n';
    return os.str();
  }

  std::vector<TheoremReport> run_all(std::vector<std::string> const& wanted,
                                     Scope const&                    scope) {
    check_scope(scope);
    for (auto const& t : wanted) {
      if (std::find(kTags.begin(), kTags.end(), t) == kTags.end()) {
        throw InputError("verify: unknown theorem tag '" + t + "'");
      }
    }
    auto const monoids = pomonoids_up_to(scope.max_order, scope.workers);

    std::vector<std::string> per_monoid;
    bool                     transfer = false;
    for (auto const& t : wanted) {
      if (t == "RETRACT-TRANSFER") {
        transfer = true;
      } else {
        per_monoid.push_back(t);
      }
    }

    using Clock = std::chrono::steady_clock;
    // outcomes[i][t] for pomonoid i and tag t of per_monoid.
    auto outcomes = parallel_map(
        monoids.size(), scope.workers, [&](std::size_t i) {
          std::vector<Outcome> out(per_monoid.size());
          if (per_monoid.empty()) {
            return out;
          }
          Universe U(monoids[i], scope);
          for (std::size_t t = 0; t < per_monoid.size(); ++t) {
            auto start = Clock::now();
            try {
              kChecks.at(per_monoid[t])(U, scope, out[t]);
            } catch (std::exception const& e) {
              out[t].violations.push_back(
                  internal_error(per_monoid[t], monoids[i], e.what()));
            }
            out[t].seconds
                = std::chrono::duration<double>(Clock::now() - start).count();
          }
          return out;
        });

    std::vector<TheoremReport> reports;
    for (auto const& tag : wanted) {
      TheoremReport rep;
      rep.id        = tag;
      rep.scope     = scope;
      rep.pomonoids = monoids.size();
      rep.notes     = notes_for(tag, scope);
      if (tag != "RETRACT-TRANSFER") {
        std::size_t t = std::find(per_monoid.begin(), per_monoid.end(), tag)
                        - per_monoid.begin();
        for (std::size_t i = 0; i < monoids.size(); ++i) {
          auto& o = outcomes[i][t];
          rep.lines.push_back(monoid_line(i, monoids[i], o));
          rep.instances += o.instances;
          rep.wall_seconds += o.seconds;
          for (auto& v : o.violations) {
            rep.violations.push_back(std::move(v));
          }
          for (auto& f : o.findings) {
            rep.findings.push_back(std::move(f));
          }
        }
      }
      reports.push_back(std::move(rep));
    }

    if (transfer) {
      auto start = Clock::now();
      std::vector<std::vector<SPoset>> base;
      for (auto const& S : monoids) {
        base.push_back(sposets_up_to(S, scope.max_poset, scope.workers));
      }
      auto samples = draw_samples(monoids, base, scope);
      auto results = parallel_map(samples.size(), scope.workers, [&](std::size_t k) {
        try {
          return retract_sample(samples[k]);
        } catch (std::exception const& e) {
          Outcome o;
          o.instances = 1;
          o.violations.push_back(internal_error(
              "RETRACT-TRANSFER", samples[k].source.monoid(), e.what()));
          return o;
        }
      });
      auto& rep = *std::find_if(reports.begin(), reports.end(), [](auto const& r) {
        return r.id == "RETRACT-TRANSFER";
      });
      std::vector<Outcome> by_monoid(monoids.size());
      for (std::size_t k = 0; k < samples.size(); ++k) {
        auto& o = by_monoid[samples[k].monoid];
        o.instances += results[k].instances;
        for (auto& v : results[k].violations) {
          o.violations.push_back(std::move(v));
        }
      }
      for (std::size_t i = 0; i < monoids.size(); ++i) {
        rep.lines.push_back(monoid_line(i, monoids[i], by_monoid[i]));
        rep.instances += by_monoid[i].instances;
        for (auto& v : by_monoid[i].violations) {
          rep.violations.push_back(std::move(v));
        }
      }
      rep.wall_seconds
          = std::chrono::duration<double>(Clock::now() - start).count();
    }
    return reports;
  }

  TheoremReport run(std::string const& tag, Scope const& scope) {
    return run_all({tag}, scope).front();
  }

  ////////////////////////////////////////////////////////////////////////
  // Replay
  ////////////////////////////////////////////////////////////////////////

  namespace {
    PropertyVerdict evaluate(json const& c) {
      std::string const kind = c.at("kind");
      std::string const prop = c.at("property");
      if (kind == "sposet") {
        return sposet_property(io::sposet_from_json(c.at("structure")), prop);
      }
      if (kind == "pomonoid") {
        return pomonoid_property(io::pomonoid_from_json(c.at("structure")), prop);
      }
      Pomonoid S = kind == "retract"
                       ? io::sposet_from_json(c.at("source")).monoid()
                       : io::pomonoid_from_json(c.at("pomonoid"));
      if (kind == "quotient") {
        return quotient_property(
            S, io::congruence_from_json(c.at("congruence"), S.size()), prop);
      }
      if (kind == "cycproj") {
        return nu_below_kernel(S, c.at("witness").at(0).get<elem>());
      }
      if (kind == "kernel-meet") {
        return ker_intersection_criterion(
            S, c.at("idempotents").get<std::vector<elem>>());
      }
      if (kind == "retract") {
        auto v = is_retract(io::sposet_from_json(c.at("source")),
                            io::sposet_from_json(c.at("target")));
        v.witness.clear();
        return v;
      }
      throw InputError("replay: unknown claim kind '" + kind + "'");
    }
  }  // namespace

  ReplayOutcome replay(json const& r) {
    try {
      auto const& evidence = r.at("evidence");
      if (evidence.empty()) {
        return {false, "record carries no evidence"};
      }
      for (std::size_t k = 0; k < evidence.size(); ++k) {
        auto const& c = evidence[k];
        auto        v = evaluate(c);
        bool const  holds = c.at("holds").get<bool>();
        auto const  witness
            = c.contains("witness") ? c["witness"].get<std::vector<elem>>()
                                    : std::vector<elem>{};
        if (v.holds != holds || (c.contains("witness") && v.witness != witness)) {
          return {false, "claim " + std::to_string(k) + " (" + c.at("property").get<std::string>()
                             + ") evaluates to " + v.to_line()};
        }
      }
      return {true, std::to_string(evidence.size()) + " claims reproduced"};
    } catch (json::exception const& e) {
      return {false, std::string("malformed record: ") + e.what()};
    } catch (std::exception const& e) {
      return {false, e.what()};
    }
  }

  ReplayOutcome replay_line(std::string const& line) {
    auto space = line.find(' ');
    if (space == std::string::npos) {
      return {false, "not a record line"};
    }
    std::string head = line.substr(0, space);
    if (head != "violation" && head != "finding") {
      return {false, "not a violation or finding line"};
    }
    try {
      return replay(json::parse(line.substr(space + 1)));
    } catch (json::exception const& e) {
      return {false, std::string("malformed record: ") + e.what()};
    }
  }

}  // namespace spos::verify
