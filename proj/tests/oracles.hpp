// Brute-force reference implementations. They read only the raw tables of
// the structures and share no code with the library algorithms.
#ifndef SPOS_TESTS_ORACLES_HPP_
#define SPOS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spos/congruence.hpp"
#include "spos/core.hpp"
#include "spos/enumeration.hpp"
#include "spos/tensor.hpp"

namespace oracle {

  using spos::elem;
  using spos::Pomonoid;
  using spos::SPoset;

  ////////////////////////////////////////////////////////////////////////
  // Ordered congruences on S-posets with at most 4 elements, as 16-bit
  // relation masks (bit i*4+j means i ≤ j).
  ////////////////////////////////////////////////////////////////////////

  inline int bit(elem i, elem j) {
    return static_cast<int>(i * 4 + j);
  }

  inline bool has(std::uint16_t r, elem i, elem j) {
    return r >> bit(i, j) & 1;
  }

  inline std::uint16_t leq_mask(SPoset const& A) {
    std::uint16_t r = 0;
    for (elem i = 0; i < A.size(); ++i) {
      for (elem j = 0; j < A.size(); ++j) {
        if (A.leq(i, j)) {
          r |= std::uint16_t(1) << bit(i, j);
        }
      }
    }
    return r;
  }

  // Every compatible preorder containing the order of A.
  inline std::vector<std::uint16_t> all_ordered_congruences(SPoset const& A) {
    std::size_t const n = A.size();
    std::size_t const k = A.monoid().size();
    std::vector<std::pair<elem, elem>> off;
    for (elem i = 0; i < n; ++i) {
      for (elem j = 0; j < n; ++j) {
        if (i != j) {
          off.push_back({i, j});
        }
      }
    }
    std::uint16_t diag = 0;
    for (elem i = 0; i < n; ++i) {
      diag |= std::uint16_t(1) << bit(i, i);
    }
    std::uint16_t const    base = leq_mask(A);
    std::vector<std::uint16_t> out;
    for (std::uint32_t sub = 0; sub < (1u << off.size()); ++sub) {
      std::uint16_t r = diag;
      for (std::size_t b = 0; b < off.size(); ++b) {
        if (sub >> b & 1) {
          r |= std::uint16_t(1) << bit(off[b].first, off[b].second);
        }
      }
      if ((r & base) != base) {
        continue;
      }
      bool ok = true;
      for (elem x = 0; x < n && ok; ++x) {
        for (elem y = 0; y < n && ok; ++y) {
          if (!has(r, x, y)) {
            continue;
          }
          for (elem z = 0; z < n && ok; ++z) {
            ok = !has(r, y, z) || has(r, x, z);
          }
          for (elem s = 0; s < k && ok; ++s) {
            ok = has(r, A.act(x, s), A.act(y, s));
          }
        }
      }
      if (ok) {
        out.push_back(r);
      }
    }
    return out;
  }

  // Meet of all congruences containing h; every listed relation is a
  // congruence and the full relation always qualifies.
  inline std::uint16_t least_containing(std::vector<std::uint16_t> const& all,
                                        std::uint16_t                     h) {
    std::uint16_t meet = 0xffff;
    for (auto r : all) {
      if ((r & h) == h) {
        meet &= r;
      }
    }
    return meet;
  }

  struct Sweep {
    std::size_t instances  = 0;
    std::size_t mismatches = 0;
    std::string first;
  };

  // induced_congruence against the least ordered congruence, for all right
  // S-posets of size ≤ max_a over pomonoids of order ≤ max_s and all H with
  // |H| ≤ 2.
  inline Sweep congruence_sweep(std::size_t max_s, std::size_t max_a) {
    Sweep out;
    for (auto const& S : spos::pomonoids_up_to(max_s)) {
      for (auto const& A : spos::sposets_up_to(S, max_a)) {
        std::size_t const n   = A.size();
        auto const        all = all_ordered_congruences(A);
        std::vector<std::pair<elem, elem>> pairs;
        for (elem i = 0; i < n; ++i) {
          for (elem j = 0; j < n; ++j) {
            pairs.push_back({i, j});
          }
        }
        std::vector<spos::PairSet> hs{{}};
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          hs.push_back({pairs[p]});
          for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            hs.push_back({pairs[p], pairs[q]});
          }
        }
        for (auto const& H : hs) {
          ++out.instances;
          std::uint16_t h = 0;
          for (auto [x, y] : H) {
            h |= std::uint16_t(1) << bit(x, y);
          }
          std::uint16_t const want = least_containing(all, h);
          auto const          got  = spos::induced_congruence(A, H);
          bool                same = true;
          for (elem x = 0; x < n && same; ++x) {
            for (elem y = 0; y < n && same; ++y) {
              bool const le = has(want, x, y);
              bool const eq = le && has(want, y, x);
              same = got.below(x, y) == le
                     && (got.class_of(x) == got.class_of(y)) == eq
                     && got.class_leq()(got.class_of(x), got.class_of(y)) == le;
            }
          }
          if (!same && out.mismatches++ == 0) {
            std::ostringstream os;
            os << "|S|=" << S.size() << " |A|=" << n << " |H|=" << H.size();
            out.first = os.str();
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tossing schemes
  ////////////////////////////////////////////////////////////////////////

  // (a, b) ≤ (a2, b2) iff there are rows (a_i, s_i, t_i, b_i), i = 1..n with
  // n ≤ rows, b_1 = b and
  //   a ≤ a_1 s_1,  a_i t_i ≤ a_{i+1} s_{i+1},  s_i b_i ≤ t_i b_{i+1},
  //   a_n t_n ≤ a2, s_n b_n ≤ t_n b2.
  // Layered search over states (a_i, s_i, b_i); at most 64 states.
  class SchemeSearch {
   public:
    explicit SchemeSearch(SPoset const& A) : _A(A), _k(A.monoid().size()) {
      // right[a][t]: the (a2, s2) with a t ≤ a2 s2, as bits a2*k + s2.
      _right.assign(A.size() * _k, 0);
      for (elem a = 0; a < A.size(); ++a) {
        for (elem t = 0; t < _k; ++t) {
          for (elem a2 = 0; a2 < A.size(); ++a2) {
            for (elem s2 = 0; s2 < _k; ++s2) {
              if (A.leq(A.act(a, t), A.act(a2, s2))) {
                _right[a * _k + t] |= std::uint64_t(1) << (a2 * _k + s2);
              }
            }
          }
        }
      }
    }

    // rel[(a*m + b)*(n*m) + (a2*m + b2)] for the left S-poset B of size m.
    std::vector<char> order(SPoset const& B) const {
      std::size_t const n = _A.size(), m = B.size(), k = _k;
      std::size_t const states = n * k * m;
      auto state = [&](elem a, elem s, elem b) { return (a * k + s) * m + b; };
      // left[s][b][t]: the b2 with s b ≤ t b2.
      std::vector<std::uint64_t> left(k * m * k, 0);
      for (elem s = 0; s < k; ++s) {
        for (elem b = 0; b < m; ++b) {
          for (elem t = 0; t < k; ++t) {
            for (elem b2 = 0; b2 < m; ++b2) {
              if (B.leq(B.act(b, s), B.act(b2, t))) {
                left[(s * m + b) * k + t] |= std::uint64_t(1) << b2;
              }
            }
          }
        }
      }
      std::vector<std::uint64_t> next(states, 0), finish(states, 0);
      for (elem a = 0; a < n; ++a) {
        for (elem s = 0; s < k; ++s) {
          for (elem b = 0; b < m; ++b) {
            std::uint64_t& nx = next[state(a, s, b)];
            std::uint64_t& fi = finish[state(a, s, b)];
            for (elem t = 0; t < k; ++t) {
              std::uint64_t const rs = _right[a * k + t];
              std::uint64_t const ls = left[(s * m + b) * k + t];
              for (elem a2 = 0; a2 < n; ++a2) {
                for (elem s2 = 0; s2 < k; ++s2) {
                  if (rs >> (a2 * k + s2) & 1) {
                    nx |= ls << state(a2, s2, 0);
                  }
                }
                // Final row: a t ≤ a2 = a2·1 (s2 = 1 is index 0).
                if (rs >> (a2 * k) & 1) {
                  fi |= ls << (a2 * m);
                }
              }
            }
          }
        }
      }
      std::vector<char> rel(n * m * n * m, 0);
      for (elem a = 0; a < n; ++a) {
        for (elem b = 0; b < m; ++b) {
          std::uint64_t layer = 0;
          for (elem a1 = 0; a1 < n; ++a1) {
            for (elem s1 = 0; s1 < k; ++s1) {
              if (_A.leq(a, _A.act(a1, s1))) {
                layer |= std::uint64_t(1) << state(a1, s1, b);
              }
            }
          }
          // Rows 2..n*m.
          for (std::size_t r = 1; r < n * m; ++r) {
            std::uint64_t grown = layer;
            for (std::size_t st = 0; st < states; ++st) {
              if (layer >> st & 1) {
                grown |= next[st];
              }
            }
            if (grown == layer) {
              break;
            }
            layer = grown;
          }
          std::uint64_t ends = 0;
          for (std::size_t st = 0; st < states; ++st) {
            if (layer >> st & 1) {
              ends |= finish[st];
            }
          }
          for (std::size_t e = 0; e < n * m; ++e) {
            rel[(a * m + b) * n * m + e] = ends >> e & 1;
          }
        }
      }
      return rel;
    }

   private:
    SPoset const&              _A;
    std::size_t                _k;
    std::vector<std::uint64_t> _right;
  };

  // Tensor order against scheme search for all pairs of a right and a left
  // S-poset of size ≤ max_a over pomonoids of order ≤ max_s. Instances are
  // (A, B) pairs.
  inline Sweep tensor_sweep(std::size_t max_s, std::size_t max_a) {
    Sweep out;
    for (auto const& S : spos::pomonoids_up_to(max_s)) {
      auto const rights = spos::sposets_up_to(S, max_a);
      auto const lefts  = spos::sposets_up_to(S, max_a, 1, spos::Side::left);
      for (auto const& A : rights) {
        SchemeSearch search(A);
        for (auto const& B : lefts) {
          ++out.instances;
          auto const        T   = spos::tensor(A, B);
          auto const        rel = search.order(B);
          std::size_t const n = A.size(), m = B.size();
          bool              same = true;
          for (elem a = 0; a < n && same; ++a) {
            for (elem b = 0; b < m && same; ++b) {
              for (elem a2 = 0; a2 < n && same; ++a2) {
                for (elem b2 = 0; b2 < m && same; ++b2) {
                  same = T.leq(a, b, a2, b2)
                         == (rel[(a * m + b) * n * m + a2 * m + b2] != 0);
                }
              }
            }
          }
          if (!same && out.mismatches++ == 0) {
            std::ostringstream os;
            os << "|S|=" << S.size() << " |A|=" << n << " |B|=" << m;
            out.first = os.str();
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pomonoid counts by exhaustive tables and an isomorphism filter
  ////////////////////////////////////////////////////////////////////////

  struct RawPomonoid {
    std::vector<elem> mul;  // n*n
    std::vector<char> leq;  // n*n
  };

  // Order-n monoids (discrete order if !ordered) up to isomorphism.
  inline std::size_t brute_count(std::size_t n, bool ordered) {
    std::size_t cells = n * n;
    std::size_t tables = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      tables *= n;
    }
    std::vector<RawPomonoid> found;
    std::vector<elem>        perm(n);
    for (std::size_t code = 0; code < tables; ++code) {
      std::vector<elem> mul(cells);
      std::size_t       c = code;
      for (auto& x : mul) {
        x = c % n;
        c /= n;
      }
      bool is_monoid = false;
      for (elem e = 0; e < n && !is_monoid; ++e) {
        bool unit = true;
        for (elem x = 0; x < n; ++x) {
          unit = unit && mul[e * n + x] == x && mul[x * n + e] == x;
        }
        is_monoid = unit;
      }
      for (elem x = 0; x < n && is_monoid; ++x) {
        for (elem y = 0; y < n && is_monoid; ++y) {
          for (elem z = 0; z < n && is_monoid; ++z) {
            is_monoid = mul[mul[x * n + y] * n + z] == mul[x * n + mul[y * n + z]];
          }
        }
      }
      if (!is_monoid) {
        continue;
      }
      std::size_t const orders = ordered ? std::size_t(1) << (cells - n) : 1;
      for (std::size_t o = 0; o < orders; ++o) {
        std::vector<char> leq(cells, 0);
        std::size_t       b = 0;
        for (elem x = 0; x < n; ++x) {
          for (elem y = 0; y < n; ++y) {
            leq[x * n + y] = x == y ? 1 : (o >> b++ & 1);
          }
        }
        bool ok = true;
        for (elem x = 0; x < n && ok; ++x) {
          for (elem y = 0; y < n && ok; ++y) {
            if (!leq[x * n + y]) {
              continue;
            }
            ok = x == y || !leq[y * n + x];
            for (elem z = 0; z < n && ok; ++z) {
              ok = (!leq[y * n + z] || leq[x * n + z])
                   && leq[mul[x * n + z] * n + mul[y * n + z]]
                   && leq[mul[z * n + x] * n + mul[z * n + y]];
            }
          }
        }
        if (!ok) {
          continue;
        }
        bool seen = false;
        for (auto const& f : found) {
          std::iota(perm.begin(), perm.end(), 0);
          do {
            bool iso = true;
            for (elem x = 0; x < n && iso; ++x) {
              for (elem y = 0; y < n && iso; ++y) {
                iso = f.mul[perm[x] * n + perm[y]] == perm[mul[x * n + y]]
                      && f.leq[perm[x] * n + perm[y]] == leq[x * n + y];
              }
            }
            seen = iso;
          } while (!seen && std::next_permutation(perm.begin(), perm.end()));
          if (seen) {
            break;
          }
        }
        if (!seen) {
          found.push_back({mul, leq});
        }
      }
    }
    return found.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms by listing all |B|^|A| tables
  ////////////////////////////////////////////////////////////////////////

  inline std::set<std::vector<elem>> brute_homs(SPoset const& A, SPoset const& B) {
    std::set<std::vector<elem>> out;
    std::size_t const           n = A.size(), m = B.size();
    std::vector<elem>           f(n, 0);
    while (true) {
      bool ok = true;
      for (elem x = 0; x < n && ok; ++x) {
        for (elem s = 0; s < A.monoid().size() && ok; ++s) {
          ok = f[A.act(x, s)] == B.act(f[x], s);
        }
        for (elem y = 0; y < n && ok; ++y) {
          ok = !A.leq(x, y) || B.leq(f[x], f[y]);
        }
      }
      if (ok) {
        out.insert(f);
      }
      std::size_t i = 0;
      while (i < n && ++f[i] == m) {
        f[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // SPOS_TESTS_ORACLES_HPP_
