#include "spos/congruence.hpp"

#include <algorithm>
#include <set>

#include "spos/constructions.hpp"

namespace spos {

  ////////////////////////////////////////////////////////////////////////
  // OrderedCongruence
  ////////////////////////////////////////////////////////////////////////

  OrderedCongruence::OrderedCongruence(Relation preorder)
      : _preorder(std::move(preorder)) {
    if (!_preorder.is_reflexive() || !_preorder.is_transitive()) {
      throw InputError("ordered congruence: relation is not a preorder");
    }
    std::size_t const m = _preorder.size();
    _class_of.assign(m, kUnassigned);
    std::vector<elem> leader;
    for (elem a = 0; a < m; ++a) {
      if (_class_of[a] != kUnassigned) {
        continue;
      }
      elem const id = leader.size();
      leader.push_back(a);
      for (elem b = a; b < m; ++b) {
        if (_preorder(a, b) && _preorder(b, a)) {
          _class_of[b] = id;
        }
      }
    }
    _class_leq = Relation(leader.size());
    for (elem i = 0; i < leader.size(); ++i) {
      for (elem j = 0; j < leader.size(); ++j) {
        _class_leq.set(i, j, _preorder(leader[i], leader[j]));
      }
    }
  }

  OrderedCongruence OrderedCongruence::from_classes(
      std::size_t                           m,
      std::vector<std::vector<elem>> const& classes,
      Relation const&                       class_leq) {
    if (class_leq.size() != classes.size()) {
      throw InputError("ordered congruence: class order has wrong size");
    }
    std::vector<elem> given(m, kUnassigned);
    for (elem k = 0; k < classes.size(); ++k) {
      if (classes[k].empty()) {
        throw InputError("ordered congruence: empty class");
      }
      for (elem a : classes[k]) {
        if (a >= m || given[a] != kUnassigned) {
          throw InputError("ordered congruence: classes are not a partition");
        }
        given[a] = k;
      }
    }
    if (std::find(given.begin(), given.end(), kUnassigned) != given.end()) {
      throw InputError("ordered congruence: classes do not cover the base");
    }
    // Renumber blocks by least element.
    std::vector<elem> renumber(classes.size(), kUnassigned);
    elem              next = 0;
    for (elem a = 0; a < m; ++a) {
      if (renumber[given[a]] == kUnassigned) {
        renumber[given[a]] = next++;
      }
    }
    OrderedCongruence c;
    c._class_of.resize(m);
    for (elem a = 0; a < m; ++a) {
      c._class_of[a] = renumber[given[a]];
    }
    c._class_leq = class_leq.relabel(renumber);
    c._preorder  = Relation(m);
    for (elem a = 0; a < m; ++a) {
      for (elem b = 0; b < m; ++b) {
        c._preorder.set(a, b, c._class_leq(c._class_of[a], c._class_of[b]));
      }
    }
    return c;
  }

  std::vector<std::vector<elem>> OrderedCongruence::classes() const {
    std::vector<std::vector<elem>> out(class_count());
    for (elem a = 0; a < _class_of.size(); ++a) {
      out[_class_of[a]].push_back(a);
    }
    return out;
  }

  namespace {
    void require_base(SPoset const& A, OrderedCongruence const& c) {
      if (c.base_size() != A.size()) {
        throw InputError("congruence has base size "
                         + std::to_string(c.base_size()) + " but S-poset has "
                         + std::to_string(A.size()) + " elements");
      }
    }
  }  // namespace

  Validation validate_congruence(SPoset const& A, OrderedCongruence const& c) {
    require_base(A, c);
    std::size_t const m = A.size();
    std::size_t const n = A.monoid().size();
    for (elem a = 0; a < m; ++a) {
      for (elem b = a + 1; b < m; ++b) {
        if (!c.related(a, b)) {
          continue;
        }
        for (elem s = 0; s < n; ++s) {
          if (!c.related(A.act(a, s), A.act(b, s))) {
            return Violation{"act-congruence", {a, b, s}};
          }
        }
      }
    }
    Relation const& q = c.class_leq();
    for (elem i = 0; i < q.size(); ++i) {
      if (!q(i, i)) {
        return Violation{"class-reflexivity", {i}};
      }
    }
    for (elem i = 0; i < q.size(); ++i) {
      for (elem j = i + 1; j < q.size(); ++j) {
        if (q(i, j) && q(j, i)) {
          return Violation{"class-antisymmetry", {i, j}};
        }
      }
    }
    std::size_t i, j, k;
    if (q.find_transitivity_failure(i, j, k)) {
      return Violation{"class-transitivity", {i, j, k}};
    }
    for (elem a = 0; a < m; ++a) {
      for (elem b = 0; b < m; ++b) {
        if (A.leq(a, b) && !c.below(a, b)) {
          return Violation{"natural-map-monotone", {a, b}};
        }
        if (!c.below(a, b)) {
          continue;
        }
        for (elem s = 0; s < n; ++s) {
          if (!c.below(A.act(a, s), A.act(b, s))) {
            return Violation{"class-order-compatible", {a, b, s}};
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closures
  ////////////////////////////////////////////////////////////////////////

  void check_pairs(SPoset const& A, PairSet const& H) {
    for (auto [h, k] : H) {
      if (h >= A.size() || k >= A.size()) {
        throw InputError("pair (" + std::to_string(h) + ", "
                         + std::to_string(k) + ") is out of range");
      }
    }
  }

  Relation chain_leq(SPoset const& A, Relation const& sigma) {
    if (sigma.size() != A.size()) {
      throw InputError("chain_leq: relation has the wrong size");
    }
    Relation r = A.order();
    r |= sigma;
    r.close();
    return r;
  }

  Relation alpha_of_H(SPoset const& A, PairSet const& H) {
    check_pairs(A, H);
    Relation r(A.size());
    for (auto [h, k] : H) {
      for (elem s = 0; s < A.monoid().size(); ++s) {
        r.set(A.act(h, s), A.act(k, s));
      }
    }
    r.close();
    return r;
  }

  OrderedCongruence induced_congruence(SPoset const& A, PairSet const& H) {
    return OrderedCongruence(chain_leq(A, alpha_of_H(A, H)));
  }

  OrderedCongruence generated_congruence(SPoset const& A, PairSet const& H) {
    PairSet both = H;
    for (auto [h, k] : H) {
      both.emplace_back(k, h);
    }
    return induced_congruence(A, both);
  }

  OrderedCongruence identity_congruence(SPoset const& A) {
    return OrderedCongruence(A.order());
  }

  OrderedCongruence full_congruence(SPoset const& A) {
    return OrderedCongruence(Relation::full(A.size()));
  }

  SPoset quotient(SPoset const& A, OrderedCongruence const& c) {
    if (auto v = validate_congruence(A, c)) {
      throw ValidationError(*v);
    }
    std::size_t const k = c.class_count();
    std::size_t const n = A.monoid().size();
    std::vector<elem> act(k * n);
    for (elem a = 0; a < A.size(); ++a) {
      for (elem s = 0; s < n; ++s) {
        act[c.class_of(a) * n + s] = c.class_of(A.act(a, s));
      }
    }
    return SPoset(A.monoid(), A.side(), k, std::move(act), c.class_leq());
  }

  SPosetMap natural_map(OrderedCongruence const& c) {
    return SPosetMap{c.class_map()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Left translations
  ////////////////////////////////////////////////////////////////////////

  OrderedCongruence ker_lambda(Pomonoid const& S, elem s) {
    if (s >= S.size()) {
      throw InputError("ker_lambda: element out of range");
    }
    Relation k(S.size());
    for (elem x = 0; x < S.size(); ++x) {
      for (elem y = 0; y < S.size(); ++y) {
        k.set(x, y, S.leq(S.mul(s, x), S.mul(s, y)));
      }
    }
    return OrderedCongruence(std::move(k));
  }

  PairSet directed_kernel(Pomonoid const& S, elem s) {
    PairSet out;
    for (elem x = 0; x < S.size(); ++x) {
      for (elem y = 0; y < S.size(); ++y) {
        if (S.leq(S.mul(s, x), S.mul(s, y))) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  std::optional<elem> subannihilator_witness(Pomonoid const&          S,
                                             OrderedCongruence const& rho) {
    for (elem s = 0; s < S.size(); ++s) {
      if (congruence_leq(rho, ker_lambda(S, s))) {
        return s;
      }
    }
    return std::nullopt;
  }

  bool is_subannihilator(Pomonoid const& S, OrderedCongruence const& rho) {
    return subannihilator_witness(S, rho).has_value();
  }

  bool subannihilator_by_hom(Pomonoid const& S, OrderedCongruence const& rho) {
    SPoset R = regular_right(S);
    return hom_exists(quotient(R, rho), R);
  }

  std::vector<elem> l_set(Pomonoid const& S, elem a, elem b) {
    if (a >= S.size() || b >= S.size()) {
      throw InputError("l_set: element out of range");
    }
    std::vector<elem> out;
    for (elem s = 0; s < S.size(); ++s) {
      if (S.leq(S.mul(s, a), S.mul(s, b))) {
        out.push_back(s);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice operations
  ////////////////////////////////////////////////////////////////////////

  bool congruence_leq(OrderedCongruence const& c1,
                      OrderedCongruence const& c2) {
    if (c1.base_size() != c2.base_size()) {
      throw InputError("congruence_leq: different bases");
    }
    return c1.preorder().subset_of(c2.preorder());
  }

  OrderedCongruence congruence_meet(OrderedCongruence const& c1,
                                    OrderedCongruence const& c2) {
    if (c1.base_size() != c2.base_size()) {
      throw InputError("congruence_meet: different bases");
    }
    std::size_t const m = c1.base_size();
    // Blocks of the meet: pairs of blocks (one from each side).
    std::vector<elem>                block(m);
    std::vector<std::pair<elem, elem>> keys;
    for (elem a = 0; a < m; ++a) {
      std::pair<elem, elem> key{c1.class_of(a), c2.class_of(a)};
      auto it = std::find(keys.begin(), keys.end(), key);
      block[a] = static_cast<elem>(it - keys.begin());
      if (it == keys.end()) {
        keys.push_back(key);
      }
    }
    Relation order(keys.size());
    for (elem a = 0; a < m; ++a) {
      for (elem b = 0; b < m; ++b) {
        if (c1.below(a, b) && c2.below(a, b)) {
          order.set(block[a], block[b]);
        }
      }
    }
    order.close();
    if (!order.is_antisymmetric()) {
      throw InputError("congruence_meet: intersected class order is not "
                       "antisymmetric");
    }
    std::vector<std::vector<elem>> classes(keys.size());
    for (elem a = 0; a < m; ++a) {
      classes[block[a]].push_back(a);
    }
    return OrderedCongruence::from_classes(m, classes, order);
  }

  std::vector<OrderedCongruence> all_congruences(SPoset const& A) {
    std::size_t const  m = A.size();
    std::set<Relation> seen{A.order()};
    std::vector<Relation> frontier{A.order()};
    std::vector<Relation> single(m * m);
    for (elem a = 0; a < m; ++a) {
      for (elem b = 0; b < m; ++b) {
        single[a * m + b] = alpha_of_H(A, {{a, b}});
      }
    }
    while (!frontier.empty()) {
      std::vector<Relation> next;
      for (auto const& p : frontier) {
        for (elem a = 0; a < m; ++a) {
          for (elem b = 0; b < m; ++b) {
            if (p(a, b)) {
              continue;
            }
            Relation q = p;
            q |= single[a * m + b];
            q.close();
            if (seen.insert(q).second) {
              next.push_back(std::move(q));
            }
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<OrderedCongruence> out;
    out.reserve(seen.size());
    for (auto const& p : seen) {
      out.emplace_back(p);
    }
    return out;
  }

}  // namespace spos
