#include "spos/constructions.hpp"

#include <algorithm>
#include <set>

namespace spos {

  SPoset regular_right(Pomonoid const& S) {
    return SPoset(S, Side::right, S.size(), S.table(), S.order());
  }

  SPoset regular_left(Pomonoid const& S) {
    std::size_t const n = S.size();
    std::vector<elem> act(n * n);
    for (elem b = 0; b < n; ++b) {
      for (elem s = 0; s < n; ++s) {
        act[b * n + s] = S.mul(s, b);
      }
    }
    return SPoset(S, Side::left, n, std::move(act), S.order());
  }

  SPoset one_point(Pomonoid const& S, Side side) {
    return SPoset(S, side, 1, std::vector<elem>(S.size(), 0),
                  Relation::identity(1));
  }

  SubPoset restrict_to(SPoset const& A, std::vector<elem> carrier) {
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (carrier.empty()) {
      throw InputError("sub-S-poset: empty carrier");
    }
    std::vector<elem> local(A.size(), kUnassigned);
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (carrier[i] >= A.size()) {
        throw InputError("sub-S-poset: element out of range");
      }
      local[carrier[i]] = i;
    }
    std::size_t const n = A.monoid().size();
    std::size_t const m = carrier.size();
    std::vector<elem> act(m * n);
    Relation          leq(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (elem s = 0; s < n; ++s) {
        elem image = local[A.act(carrier[i], s)];
        if (image == kUnassigned) {
          throw InputError("sub-S-poset: carrier is not closed under the "
                           "action");
        }
        act[i * n + s] = image;
      }
      for (std::size_t j = 0; j < m; ++j) {
        leq.set(i, j, A.leq(carrier[i], carrier[j]));
      }
    }
    return SubPoset{SPoset(A.monoid(), A.side(), m, std::move(act), leq),
                    std::move(carrier)};
  }

  SubPoset cyclic_subposet(SPoset const& A, elem a) {
    if (a >= A.size()) {
      throw InputError("cyclic_subposet: element out of range");
    }
    return restrict_to(A, A.orbit(a));
  }

  bool is_right_ideal(Pomonoid const& S, std::vector<elem> const& I) {
    if (I.empty()) {
      return false;
    }
    std::vector<bool> in(S.size(), false);
    for (elem i : I) {
      if (i >= S.size()) {
        return false;
      }
      in[i] = true;
    }
    for (elem i : I) {
      for (elem s = 0; s < S.size(); ++s) {
        if (!in[S.mul(i, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_left_ideal(Pomonoid const& S, std::vector<elem> const& J) {
    return is_right_ideal(opposite(S), J);
  }

  std::vector<elem> principal_right_ideal(Pomonoid const& S, elem s) {
    std::set<elem> out;
    for (elem t = 0; t < S.size(); ++t) {
      out.insert(S.mul(s, t));
    }
    return {out.begin(), out.end()};
  }

  std::vector<elem> principal_left_ideal(Pomonoid const& S, elem s) {
    std::set<elem> out;
    for (elem t = 0; t < S.size(); ++t) {
      out.insert(S.mul(t, s));
    }
    return {out.begin(), out.end()};
  }

  namespace {
    // Ideals are unions of principal ones, so close the set of principal
    // ideals under union.
    std::vector<std::vector<elem>>
    ideals_from_principal(std::vector<std::vector<elem>> const& principal,
                          std::size_t                           n) {
      std::set<std::vector<bool>> seen;
      std::vector<std::vector<bool>> frontier;
      for (auto const& p : principal) {
        std::vector<bool> mask(n, false);
        for (elem x : p) {
          mask[x] = true;
        }
        if (seen.insert(mask).second) {
          frontier.push_back(mask);
        }
      }
      while (!frontier.empty()) {
        std::vector<std::vector<bool>> next;
        for (auto const& f : frontier) {
          for (auto const& p : principal) {
            std::vector<bool> mask = f;
            for (elem x : p) {
              mask[x] = true;
            }
            if (seen.insert(mask).second) {
              next.push_back(mask);
            }
          }
        }
        frontier = std::move(next);
      }
      std::vector<std::vector<elem>> out;
      for (auto const& mask : seen) {
        std::vector<elem> ideal;
        for (elem x = 0; x < n; ++x) {
          if (mask[x]) {
            ideal.push_back(x);
          }
        }
        out.push_back(std::move(ideal));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  std::vector<std::vector<elem>> right_ideals(Pomonoid const& S) {
    std::vector<std::vector<elem>> principal;
    for (elem s = 0; s < S.size(); ++s) {
      principal.push_back(principal_right_ideal(S, s));
    }
    return ideals_from_principal(principal, S.size());
  }

  std::vector<std::vector<elem>> left_ideals(Pomonoid const& S) {
    std::vector<std::vector<elem>> principal;
    for (elem s = 0; s < S.size(); ++s) {
      principal.push_back(principal_left_ideal(S, s));
    }
    return ideals_from_principal(principal, S.size());
  }

  SubPoset right_ideal_poset(Pomonoid const& S, std::vector<elem> const& I) {
    if (!is_right_ideal(S, I)) {
      throw InputError("right_ideal_poset: not a right ideal");
    }
    return restrict_to(regular_right(S), I);
  }

  SubPoset left_ideal_poset(Pomonoid const& S, std::vector<elem> const& J) {
    if (!is_left_ideal(S, J)) {
      throw InputError("left_ideal_poset: not a left ideal");
    }
    return restrict_to(regular_left(S), J);
  }

  ////////////////////////////////////////////////////////////////////////
  // A(I)
  ////////////////////////////////////////////////////////////////////////

  elem AmalgamPoset::index_of(AmalgamTag tag, elem s) const {
    for (elem i = 0; i < tags.size(); ++i) {
      if (tags[i].first == tag && tags[i].second == s) {
        return i;
      }
    }
    throw InputError("amalgam: no element with the requested tag");
  }

  std::string AmalgamPoset::label(elem a) const {
    char const* names[] = {"x", "y", "z"};
    return std::string("(") + names[static_cast<int>(tags[a].first)] + ","
           + std::to_string(tags[a].second) + ")";
  }

  AmalgamPoset amalgam(Pomonoid const& S, std::vector<elem> const& I) {
    if (!is_right_ideal(S, I)) {
      throw InputError("amalgam: I is not a right ideal");
    }
    std::vector<bool> in_ideal(S.size(), false);
    for (elem i : I) {
      in_ideal[i] = true;
    }
    if (in_ideal[Pomonoid::one]) {
      throw InputError("amalgam: I must be a proper right ideal");
    }

    std::vector<std::pair<AmalgamTag, elem>> tags;
    for (AmalgamTag t : {AmalgamTag::x, AmalgamTag::y}) {
      for (elem s = 0; s < S.size(); ++s) {
        if (!in_ideal[s]) {
          tags.emplace_back(t, s);
        }
      }
    }
    for (elem s = 0; s < S.size(); ++s) {
      if (in_ideal[s]) {
        tags.emplace_back(AmalgamTag::z, s);
      }
    }

    std::size_t const m = tags.size();
    std::size_t const n = S.size();
    auto              find = [&](AmalgamTag t, elem s) {
      for (elem i = 0; i < m; ++i) {
        if (tags[i].first == t && tags[i].second == s) {
          return i;
        }
      }
      return kUnassigned;
    };

    std::vector<elem> act(m * n);
    for (elem a = 0; a < m; ++a) {
      auto [w, u] = tags[a];
      for (elem s = 0; s < n; ++s) {
        elem us          = S.mul(u, s);
        act[a * n + s]   = in_ideal[us] ? find(AmalgamTag::z, us) : find(w, us);
      }
    }

    // (w1, s) ≤ (w2, t) iff (w1 = w2 and s ≤ t) or
    //                      (w1 ≠ w2 and s ≤ i ≤ t for some i in I)
    Relation leq(m);
    for (elem a = 0; a < m; ++a) {
      for (elem b = 0; b < m; ++b) {
        auto [w1, s] = tags[a];
        auto [w2, t] = tags[b];
        bool below   = false;
        if (w1 == w2) {
          below = S.leq(s, t);
        } else {
          for (elem i : I) {
            if (S.leq(s, i) && S.leq(i, t)) {
              below = true;
              break;
            }
          }
        }
        leq.set(a, b, below);
      }
    }
    return AmalgamPoset{SPoset(S, Side::right, m, std::move(act), leq),
                        std::move(tags)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  std::vector<elem> product_coordinates(std::vector<SPoset> const& factors,
                                        elem                       x) {
    std::vector<elem> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = x % factors[i].size();
      x /= factors[i].size();
    }
    return c;
  }

  elem product_index(std::vector<SPoset> const& factors,
                     std::vector<elem> const&   coordinates) {
    elem x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      x = x * factors[i].size() + coordinates[i];
    }
    return x;
  }

  SPoset product(std::vector<SPoset> const& factors, std::size_t cap) {
    if (factors.empty()) {
      throw InputError("product: no factors");
    }
    std::size_t m = 1;
    for (auto const& f : factors) {
      if (f.monoid() != factors[0].monoid() || f.side() != factors[0].side()) {
        throw InputError("product: factors over different pomonoids or sides");
      }
      m *= f.size();
      if (m > cap) {
        throw InputError("product: size exceeds the cap of "
                         + std::to_string(cap));
      }
    }
    std::size_t const n = factors[0].monoid().size();
    std::vector<std::vector<elem>> coords(m);
    for (elem x = 0; x < m; ++x) {
      coords[x] = product_coordinates(factors, x);
    }
    std::vector<elem> act(m * n);
    std::vector<elem> c(factors.size());
    for (elem x = 0; x < m; ++x) {
      for (elem s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
          c[i] = factors[i].act(coords[x][i], s);
        }
        act[x * n + s] = product_index(factors, c);
      }
    }
    Relation leq(m);
    for (elem x = 0; x < m; ++x) {
      for (elem y = 0; y < m; ++y) {
        bool below = true;
        for (std::size_t i = 0; i < factors.size() && below; ++i) {
          below = factors[i].leq(coords[x][i], coords[y][i]);
        }
        leq.set(x, y, below);
      }
    }
    return SPoset(factors[0].monoid(), factors[0].side(), m, std::move(act),
                  leq);
  }

  SPosetMap projection(std::vector<SPoset> const& factors, std::size_t i) {
    std::size_t m = 1;
    for (auto const& f : factors) {
      m *= f.size();
    }
    SPosetMap p;
    p.image.resize(m);
    for (elem x = 0; x < m; ++x) {
      p.image[x] = product_coordinates(factors, x)[i];
    }
    return p;
  }

  SPoset diagonal(Pomonoid const& S) {
    SPoset R = regular_right(S);
    return product({R, R});
  }

  SPoset power(Pomonoid const& S, std::size_t k, std::size_t cap) {
    if (k == 0) {
      throw InputError("power: exponent must be positive");
    }
    return product(std::vector<SPoset>(k, regular_right(S)), cap);
  }

  SPoset coproduct(SPoset const& A, SPoset const& B) {
    if (A.monoid() != B.monoid() || A.side() != B.side()) {
      throw InputError("coproduct: different pomonoids or sides");
    }
    std::size_t const n = A.monoid().size();
    std::size_t const m = A.size() + B.size();
    std::vector<elem> act(m * n);
    Relation          leq(m);
    for (elem a = 0; a < A.size(); ++a) {
      for (elem s = 0; s < n; ++s) {
        act[a * n + s] = A.act(a, s);
      }
      for (elem b = 0; b < A.size(); ++b) {
        leq.set(a, b, A.leq(a, b));
      }
    }
    for (elem a = 0; a < B.size(); ++a) {
      elem const x = A.size() + a;
      for (elem s = 0; s < n; ++s) {
        act[x * n + s] = A.size() + B.act(a, s);
      }
      for (elem b = 0; b < B.size(); ++b) {
        leq.set(x, A.size() + b, B.leq(a, b));
      }
    }
    return SPoset(A.monoid(), A.side(), m, std::move(act), leq);
  }

}  // namespace spos
