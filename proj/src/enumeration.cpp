#include "spos/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "spos/parallel.hpp"

namespace spos {

  std::string CanonicalKey::hex() const {
    static char const digits[] = "0123456789abcdef";
    std::string       out;
    out.reserve(2 * bytes.size());
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relabelling and canonical keys
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_permutation(std::vector<elem> const& p, std::size_t n) {
      if (p.size() != n) {
        throw InputError("relabel: permutation has the wrong length");
      }
      std::vector<bool> hit(n, false);
      for (elem x : p) {
        if (x >= n || hit[x]) {
          throw InputError("relabel: not a permutation");
        }
        hit[x] = true;
      }
    }

    std::vector<elem> inverse(std::vector<elem> const& p) {
      std::vector<elem> q(p.size());
      for (elem i = 0; i < p.size(); ++i) {
        q[p[i]] = i;
      }
      return q;
    }

    // Key of the structure relabelled by q (new label ↦ old label). `cols` is
    // the row length of the table; when `square` the table entries in each
    // column are relabelled too (multiplication rather than action).
    std::string encode(std::size_t              m,
                       std::size_t              cols,
                       bool                     square,
                       std::vector<elem> const& table,
                       Relation const&          leq,
                       std::vector<elem> const& q,
                       std::vector<elem> const& p,
                       char                     tag) {
      std::string out;
      out.reserve(2 + m * cols + m * m);
      out.push_back(tag);
      out.push_back(static_cast<char>(m));
      for (elem i = 0; i < m; ++i) {
        for (elem j = 0; j < cols; ++j) {
          elem const col = square ? q[j] : j;
          out.push_back(static_cast<char>(p[table[q[i] * cols + col]]));
        }
      }
      for (elem i = 0; i < m; ++i) {
        for (elem j = 0; j < m; ++j) {
          out.push_back(leq(q[i], q[j]) ? 1 : 0);
        }
      }
      return out;
    }

    struct Best {
      std::string       bytes;
      std::vector<elem> q;  // new ↦ old
    };

    Best minimise(std::size_t              m,
                  std::size_t              cols,
                  bool                     square,
                  std::vector<elem> const& table,
                  Relation const&          leq,
                  char                     tag) {
      std::vector<elem> q(m);
      std::iota(q.begin(), q.end(), 0);
      // Pomonoids keep the identity at 0.
      auto const first = square ? q.begin() + 1 : q.begin();
      Best       best;
      bool       have = false;
      do {
        std::string key = encode(m, cols, square, table, leq, q, inverse(q), tag);
        if (!have || key < best.bytes) {
          best = {std::move(key), q};
          have = true;
        }
      } while (first < q.end() && std::next_permutation(first, q.end()));
      return best;
    }

    bool compatible_pomonoid(std::size_t              n,
                             std::vector<elem> const& mul,
                             Relation const&          leq) {
      for (elem a = 0; a < n; ++a) {
        for (elem b = 0; b < n; ++b) {
          if (a == b || !leq(a, b)) {
            continue;
          }
          for (elem c = 0; c < n; ++c) {
            if (!leq(mul[a * n + c], mul[b * n + c])
                || !leq(mul[c * n + a], mul[c * n + b])) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool compatible_sposet(Pomonoid const&          S,
                           std::size_t              m,
                           std::vector<elem> const& act,
                           Relation const&          leq) {
      std::size_t const n = S.size();
      for (elem a = 0; a < m; ++a) {
        for (elem b = 0; b < m; ++b) {
          if (a != b && leq(a, b)) {
            for (elem s = 0; s < n; ++s) {
              if (!leq(act[a * n + s], act[b * n + s])) {
                return false;
              }
            }
          }
        }
      }
      for (elem s = 0; s < n; ++s) {
        for (elem t = 0; t < n; ++t) {
          if (s != t && S.leq(s, t)) {
            for (elem a = 0; a < m; ++a) {
              if (!leq(act[a * n + s], act[a * n + t])) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  Pomonoid relabel(Pomonoid const& S, std::vector<elem> const& p) {
    std::size_t const n = S.size();
    check_permutation(p, n);
    if (p[0] != 0) {
      throw InputError("relabel: permutation must fix the identity");
    }
    std::vector<elem> mul(n * n);
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        mul[p[a] * n + p[b]] = p[S.mul(a, b)];
      }
    }
    return Pomonoid(n, std::move(mul), S.order().relabel(p));
  }

  SPoset relabel(SPoset const& A, std::vector<elem> const& p) {
    std::size_t const m = A.size();
    std::size_t const n = A.monoid().size();
    check_permutation(p, m);
    std::vector<elem> act(m * n);
    for (elem a = 0; a < m; ++a) {
      for (elem s = 0; s < n; ++s) {
        act[p[a] * n + s] = p[A.act(a, s)];
      }
    }
    return SPoset(A.monoid(), A.side(), m, std::move(act), A.order().relabel(p));
  }

  CanonicalKey canonical_key(Pomonoid const& S) {
    return {minimise(S.size(), S.size(), true, S.table(), S.order(), 'M').bytes};
  }

  CanonicalKey canonical_key(SPoset const& A) {
    char const tag = A.side() == Side::right ? 'R' : 'L';
    return {minimise(A.size(), A.monoid().size(), false, A.table(), A.order(),
                     tag)
                .bytes};
  }

  Pomonoid canonical_form(Pomonoid const& S) {
    auto best = minimise(S.size(), S.size(), true, S.table(), S.order(), 'M');
    return relabel(S, inverse(best.q));
  }

  SPoset canonical_form(SPoset const& A) {
    auto best = minimise(A.size(), A.monoid().size(), false, A.table(),
                         A.order(), A.side() == Side::right ? 'R' : 'L');
    return relabel(A, inverse(best.q));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Backtracking over bijections X → Y in increasing order of x;
    // `consistent(x, map)` checks the new pair against the assigned ones and
    // elements with different invariants are never matched.
    template <typename Consistent>
    IsoResult find_bijection(std::size_t                   m,
                             std::vector<elem> const&      inv_x,
                             std::vector<elem> const&      inv_y,
                             std::vector<elem>             map,
                             Consistent&&                  consistent) {
      std::vector<bool> used(m, false);
      for (elem x = 0; x < m; ++x) {
        if (map[x] != kUnassigned) {
          used[map[x]] = true;
        }
      }
      std::function<bool(elem)> go = [&](elem x) -> bool {
        if (x == m) {
          return true;
        }
        if (map[x] != kUnassigned) {
          return go(x + 1);
        }
        for (elem y = 0; y < m; ++y) {
          if (used[y] || inv_x[x] != inv_y[y]) {
            continue;
          }
          map[x] = y;
          if (consistent(x, map)) {
            used[y] = true;
            if (go(x + 1)) {
              return true;
            }
            used[y] = false;
          }
          map[x] = kUnassigned;
        }
        return false;
      };
      IsoResult out;
      if (go(0)) {
        out.isomorphic  = true;
        out.permutation = std::move(map);
      }
      return out;
    }

    std::vector<elem> order_invariant(Relation const& leq, elem x) {
      elem below = 0, above = 0;
      for (elem y = 0; y < leq.size(); ++y) {
        below += leq(y, x);
        above += leq(x, y);
      }
      return {below, above};
    }
  }  // namespace

  IsoResult are_isomorphic(Pomonoid const& X, Pomonoid const& Y) {
    std::size_t const n = X.size();
    if (Y.size() != n) {
      return {};
    }
    auto invariants = [n](Pomonoid const& S) {
      std::vector<std::vector<elem>> raw(n);
      for (elem x = 0; x < n; ++x) {
        raw[x] = order_invariant(S.order(), x);
        raw[x].push_back(S.mul(x, x) == x);
        std::vector<bool> right(n), left(n);
        for (elem s = 0; s < n; ++s) {
          right[S.mul(x, s)] = true;
          left[S.mul(s, x)]  = true;
        }
        raw[x].push_back(std::count(right.begin(), right.end(), true));
        raw[x].push_back(std::count(left.begin(), left.end(), true));
      }
      // Compress to small integers comparable across X and Y.
      return raw;
    };
    auto rx = invariants(X);
    auto ry = invariants(Y);
    std::vector<std::vector<elem>> all = rx;
    all.insert(all.end(), ry.begin(), ry.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto code = [&](std::vector<std::vector<elem>> const& r) {
      std::vector<elem> out(n);
      for (elem x = 0; x < n; ++x) {
        out[x] = std::lower_bound(all.begin(), all.end(), r[x]) - all.begin();
      }
      return out;
    };
    std::vector<elem> start(n, kUnassigned);
    start[0] = 0;
    return find_bijection(
        n, code(rx), code(ry), start, [&](elem x, std::vector<elem> const& f) {
          for (elem z = 0; z <= x; ++z) {
            if (f[z] == kUnassigned) {
              continue;
            }
            if (X.leq(x, z) != Y.leq(f[x], f[z])
                || X.leq(z, x) != Y.leq(f[z], f[x])) {
              return false;
            }
            for (auto [a, b] : {std::pair{x, z}, std::pair{z, x}}) {
              elem const p = f[X.mul(a, b)];
              if (p != kUnassigned && p != Y.mul(f[a], f[b])) {
                return false;
              }
            }
          }
          // Products of earlier elements that land on x.
          for (elem a = 0; a < n; ++a) {
            for (elem b = 0; b < n; ++b) {
              if (f[a] != kUnassigned && f[b] != kUnassigned
                  && X.mul(a, b) == x && Y.mul(f[a], f[b]) != f[x]) {
                return false;
              }
            }
          }
          return true;
        });
  }

  IsoResult are_isomorphic(SPoset const& X, SPoset const& Y) {
    std::size_t const m = X.size();
    std::size_t const n = X.monoid().size();
    if (Y.size() != m || X.side() != Y.side() || X.monoid() != Y.monoid()) {
      return {};
    }
    auto invariants = [&](SPoset const& A) {
      std::vector<std::vector<elem>> raw(m);
      for (elem a = 0; a < m; ++a) {
        raw[a] = order_invariant(A.order(), a);
        raw[a].push_back(A.orbit(a).size());
        for (elem s = 0; s < n; ++s) {
          raw[a].push_back(A.act(a, s) == a);
        }
      }
      return raw;
    };
    auto rx = invariants(X);
    auto ry = invariants(Y);
    std::vector<std::vector<elem>> all = rx;
    all.insert(all.end(), ry.begin(), ry.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto code = [&](std::vector<std::vector<elem>> const& r) {
      std::vector<elem> out(m);
      for (elem x = 0; x < m; ++x) {
        out[x] = std::lower_bound(all.begin(), all.end(), r[x]) - all.begin();
      }
      return out;
    };
    return find_bijection(
        m, code(rx), code(ry), std::vector<elem>(m, kUnassigned),
        [&](elem x, std::vector<elem> const& f) {
          for (elem z = 0; z < m; ++z) {
            if (f[z] == kUnassigned) {
              continue;
            }
            if (X.leq(x, z) != Y.leq(f[x], f[z])
                || X.leq(z, x) != Y.leq(f[z], f[x])) {
              return false;
            }
            for (elem s = 0; s < n; ++s) {
              elem const p = f[X.act(z, s)];
              if (p != kUnassigned && p != Y.act(f[z], s)) {
                return false;
              }
              if (X.act(z, s) == x && Y.act(f[z], s) != f[x]) {
                return false;
              }
            }
          }
          return true;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial orders and tables
  ////////////////////////////////////////////////////////////////////////

  std::vector<Relation> all_partial_orders(std::size_t n) {
    std::vector<Relation> level{Relation(0)};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Relation> next;
      for (auto const& P : level) {
        // Choose the elements below and above the new point k.
        for (std::uint64_t down = 0; down < (std::uint64_t(1) << k); ++down) {
          bool ok = true;
          for (elem x = 0; x < k && ok; ++x) {
            for (elem y = 0; y < k && ok; ++y) {
              if ((down >> x & 1) && P(y, x) && !(down >> y & 1)) {
                ok = false;
              }
            }
          }
          if (!ok) {
            continue;
          }
          for (std::uint64_t up = 0; up < (std::uint64_t(1) << k); ++up) {
            if (up & down) {
              continue;
            }
            bool good = true;
            for (elem x = 0; x < k && good; ++x) {
              if (!(up >> x & 1)) {
                continue;
              }
              for (elem y = 0; y < k && good; ++y) {
                if (P(x, y) && !(up >> y & 1)) {
                  good = false;
                }
                if ((down >> y & 1) && !P(y, x)) {
                  good = false;
                }
              }
            }
            if (!good) {
              continue;
            }
            Relation Q(k + 1);
            for (elem x = 0; x < k; ++x) {
              for (elem y = 0; y < k; ++y) {
                Q.set(x, y, P(x, y));
              }
              Q.set(x, k, down >> x & 1);
              Q.set(k, x, up >> x & 1);
            }
            Q.set(k, k);
            next.push_back(std::move(Q));
          }
        }
      }
      level = std::move(next);
    }
    return level;
  }

  std::vector<std::vector<elem>> monoid_tables(std::size_t n) {
    if (n == 0) {
      return {};
    }
    std::vector<elem> mul(n * n, kUnassigned);
    for (elem a = 0; a < n; ++a) {
      mul[a]         = a;
      mul[a * n]     = a;
    }
    std::vector<std::pair<elem, elem>> cells;
    for (elem a = 1; a < n; ++a) {
      for (elem b = 1; b < n; ++b) {
        cells.emplace_back(a, b);
      }
    }
    auto associative_so_far = [&] {
      for (elem x = 1; x < n; ++x) {
        for (elem y = 1; y < n; ++y) {
          elem const xy = mul[x * n + y];
          if (xy == kUnassigned) {
            continue;
          }
          for (elem z = 1; z < n; ++z) {
            elem const yz = mul[y * n + z];
            if (yz == kUnassigned) {
              continue;
            }
            elem const l = mul[xy * n + z];
            elem const r = mul[x * n + yz];
            if (l != kUnassigned && r != kUnassigned && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::vector<std::vector<elem>> out;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == cells.size()) {
        out.push_back(mul);
        return;
      }
      auto [a, b] = cells[i];
      for (elem v = 0; v < n; ++v) {
        mul[a * n + b] = v;
        if (associative_so_far()) {
          go(i + 1);
        }
      }
      mul[a * n + b] = kUnassigned;
    };
    go(0);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalogs
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename T>
    using Found = std::vector<std::pair<std::string, T>>;

    template <typename T>
    Catalog<T> merge(std::vector<Found<T>>&& parts) {
      std::map<std::string, T> all;
      for (auto& part : parts) {
        for (auto& [key, value] : part) {
          all.try_emplace(std::move(key), std::move(value));
        }
      }
      Catalog<T> out;
      out.entries.reserve(all.size());
      for (auto& [key, value] : all) {
        out.entries.push_back({CanonicalKey{key}, std::move(value), {}});
      }
      return out;
    }

    Catalog<Pomonoid> pomonoid_catalog(std::size_t                  n,
                                       std::size_t                  workers,
                                       std::vector<Relation> const& orders) {
      auto tables = monoid_tables(n);
      auto parts  = parallel_map(tables.size(), workers, [&](std::size_t i) {
        std::map<std::string, Pomonoid> local;
        auto const&                     mul = tables[i];
        for (auto const& leq : orders) {
          if (!compatible_pomonoid(n, mul, leq)) {
            continue;
          }
          auto best = minimise(n, n, true, mul, leq, 'M');
          if (local.count(best.bytes) == 0) {
            Pomonoid S(n, mul, leq);
            local.emplace(std::move(best.bytes), relabel(S, inverse(best.q)));
          }
        }
        return Found<Pomonoid>(local.begin(), local.end());
      });
      return merge(std::move(parts));
    }
  }  // namespace

  Catalog<Pomonoid> enumerate_monoids(std::size_t n, std::size_t workers) {
    if (n == 0 || n > kMaxPomonoidOrder) {
      throw InputError("enumerate: order must be between 1 and "
                       + std::to_string(kMaxPomonoidOrder));
    }
    return pomonoid_catalog(n, workers, {Relation::identity(n)});
  }

  Catalog<Pomonoid> enumerate_pomonoids(std::size_t n,
                                        std::size_t workers,
                                        std::size_t max_order) {
    if (n == 0 || n > max_order) {
      throw InputError("enumerate: order must be between 1 and "
                       + std::to_string(max_order));
    }
    return pomonoid_catalog(n, workers, all_partial_orders(n));
  }

  Catalog<SPoset> enumerate_sposets(Pomonoid const& S,
                                    std::size_t     m,
                                    std::size_t     workers,
                                    Side            side,
                                    std::size_t     max_size) {
    if (m == 0 || m > max_size) {
      throw InputError("enumerate: S-poset size must be between 1 and "
                       + std::to_string(max_size));
    }
    std::size_t const n = S.size();
    // (a·s)·t = a·c(s, t)
    auto compose = [&](elem s, elem t) {
      return side == Side::right ? S.mul(s, t) : S.mul(t, s);
    };
    std::vector<elem> act(m * n, kUnassigned);
    for (elem a = 0; a < m; ++a) {
      act[a * n] = a;
    }
    auto consistent = [&] {
      for (elem a = 0; a < m; ++a) {
        for (elem s = 0; s < n; ++s) {
          elem const as = act[a * n + s];
          if (as == kUnassigned) {
            continue;
          }
          for (elem t = 0; t < n; ++t) {
            elem const l = act[as * n + t];
            elem const r = act[a * n + compose(s, t)];
            if (l != kUnassigned && r != kUnassigned && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::vector<std::vector<elem>>   tables;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == m * n) {
        tables.push_back(act);
        return;
      }
      if (i % n == 0) {
        go(i + 1);
        return;
      }
      for (elem v = 0; v < m; ++v) {
        act[i] = v;
        if (consistent()) {
          go(i + 1);
        }
      }
      act[i] = kUnassigned;
    };
    go(0);

    auto       orders = all_partial_orders(m);
    char const tag    = side == Side::right ? 'R' : 'L';
    auto parts = parallel_map(tables.size(), workers, [&](std::size_t i) {
      std::map<std::string, SPoset> local;
      auto const&                   table = tables[i];
      for (auto const& leq : orders) {
        if (!compatible_sposet(S, m, table, leq)) {
          continue;
        }
        auto best = minimise(m, n, false, table, leq, tag);
        if (local.count(best.bytes) == 0) {
          SPoset A(S, side, m, table, leq);
          local.emplace(std::move(best.bytes), relabel(A, inverse(best.q)));
        }
      }
      return Found<SPoset>(local.begin(), local.end());
    });
    return merge(std::move(parts));
  }

  std::vector<Pomonoid> pomonoids_up_to(std::size_t max_order,
                                        std::size_t workers) {
    std::vector<Pomonoid> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto& e : enumerate_pomonoids(n, workers, max_order).entries) {
        out.push_back(std::move(e.structure));
      }
    }
    return out;
  }

  std::vector<SPoset> sposets_up_to(Pomonoid const& S,
                                    std::size_t     max_size,
                                    std::size_t     workers,
                                    Side            side) {
    std::vector<SPoset> out;
    for (std::size_t m = 1; m <= max_size; ++m) {
      for (auto& e :
           enumerate_sposets(S, m, workers, side, std::max(max_size,
                                                           kMaxSPosetSize))
               .entries) {
        out.push_back(std::move(e.structure));
      }
    }
    return out;
  }

}  // namespace spos
