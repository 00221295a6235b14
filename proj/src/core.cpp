#include "spos/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spos {

  std::string Violation::describe() const {
    std::ostringstream os;
    os << axiom << " (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      os << (i == 0 ? "" : ", ") << witness[i];
    }
    os << ")";
    return os.str();
  }

  ValidationError::ValidationError(Violation v)
      : std::runtime_error("axiom violated: " + v.describe()),
        _violation(std::move(v)) {}

  namespace {
    Validation order_violation(Relation const& leq) {
      std::size_t const n = leq.size();
      for (elem a = 0; a < n; ++a) {
        if (!leq(a, a)) {
          return Violation{"reflexivity", {a}};
        }
      }
      for (elem a = 0; a < n; ++a) {
        for (elem b = a + 1; b < n; ++b) {
          if (leq(a, b) && leq(b, a)) {
            return Violation{"antisymmetry", {a, b}};
          }
        }
      }
      std::size_t i, j, k;
      if (leq.find_transitivity_failure(i, j, k)) {
        return Violation{"transitivity", {i, j, k}};
      }
      return std::nullopt;
    }

    void check_range(std::vector<elem> const& table,
                     std::size_t              bound,
                     char const*              what) {
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= bound) {
          throw InputError(std::string(what) + ": entry " + std::to_string(i)
                           + " = " + std::to_string(table[i])
                           + " is out of range [0, " + std::to_string(bound)
                           + ")");
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Pomonoid
  ////////////////////////////////////////////////////////////////////////

  Validation validate_pomonoid(std::size_t              n,
                               std::vector<elem> const& mul,
                               Relation const&          leq) {
    if (n == 0) {
      throw InputError("pomonoid: size must be positive");
    }
    if (mul.size() != n * n) {
      throw InputError("pomonoid: multiplication table has "
                       + std::to_string(mul.size()) + " entries, expected "
                       + std::to_string(n * n));
    }
    if (leq.size() != n) {
      throw InputError("pomonoid: order has size " + std::to_string(leq.size())
                       + ", expected " + std::to_string(n));
    }
    check_range(mul, n, "pomonoid multiplication");

    auto m = [&](elem a, elem b) { return mul[a * n + b]; };
    for (elem a = 0; a < n; ++a) {
      if (m(0, a) != a || m(a, 0) != a) {
        return Violation{"identity", {a}};
      }
    }
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        for (elem c = 0; c < n; ++c) {
          if (m(m(a, b), c) != m(a, m(b, c))) {
            return Violation{"associativity", {a, b, c}};
          }
        }
      }
    }
    if (auto v = order_violation(leq)) {
      return v;
    }
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        if (a == b || !leq(a, b)) {
          continue;
        }
        for (elem c = 0; c < n; ++c) {
          if (!leq(m(a, c), m(b, c)) || !leq(m(c, a), m(c, b))) {
            return Violation{"compatibility", {a, b, c}};
          }
        }
      }
    }
    return std::nullopt;
  }

  Pomonoid::Pomonoid(std::size_t n, std::vector<elem> mul, Relation leq) {
    if (auto v = validate_pomonoid(n, mul, leq)) {
      throw ValidationError(*v);
    }
    _data = std::make_shared<Data const>(Data{n, std::move(mul), std::move(leq)});
  }

  Pomonoid Pomonoid::trivial() {
    return Pomonoid(1, {0}, Relation::identity(1));
  }

  bool Pomonoid::operator==(Pomonoid const& other) const noexcept {
    return _data == other._data
           || (_data->n == other._data->n && _data->mul == other._data->mul
               && _data->leq == other._data->leq);
  }

  Pomonoid opposite(Pomonoid const& S) {
    std::size_t const n = S.size();
    std::vector<elem> mul(n * n);
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        mul[a * n + b] = S.mul(b, a);
      }
    }
    return Pomonoid(n, std::move(mul), S.order());
  }

  std::vector<elem> idempotents(Pomonoid const& S) {
    std::vector<elem> out;
    for (elem e = 0; e < S.size(); ++e) {
      if (S.mul(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SPoset
  ////////////////////////////////////////////////////////////////////////

  Validation validate_sposet(Pomonoid const&          S,
                             Side                     side,
                             std::size_t              m,
                             std::vector<elem> const& act,
                             Relation const&          leq) {
    std::size_t const n = S.size();
    if (m == 0) {
      throw InputError("sposet: size must be positive");
    }
    if (act.size() != m * n) {
      throw InputError("sposet: action table has " + std::to_string(act.size())
                       + " entries, expected " + std::to_string(m * n));
    }
    if (leq.size() != m) {
      throw InputError("sposet: order has size " + std::to_string(leq.size())
                       + ", expected " + std::to_string(m));
    }
    check_range(act, m, "sposet action");

    auto x = [&](elem a, elem s) { return act[a * n + s]; };
    for (elem a = 0; a < m; ++a) {
      if (x(a, Pomonoid::one) != a) {
        return Violation{"action-identity", {a}};
      }
    }
    for (elem a = 0; a < m; ++a) {
      for (elem s = 0; s < n; ++s) {
        for (elem t = 0; t < n; ++t) {
          // right: (a s) t = a (s t); left: s (t a) = (s t) a
          elem lhs = side == Side::right ? x(x(a, s), t) : x(x(a, t), s);
          if (lhs != x(a, S.mul(s, t))) {
            return Violation{"action-associativity", {a, s, t}};
          }
        }
      }
    }
    if (auto v = order_violation(leq)) {
      return v;
    }
    for (elem a = 0; a < m; ++a) {
      for (elem b = 0; b < m; ++b) {
        if (a == b || !leq(a, b)) {
          continue;
        }
        for (elem s = 0; s < n; ++s) {
          if (!leq(x(a, s), x(b, s))) {
            return Violation{"monotone-element", {a, b, s}};
          }
        }
      }
    }
    for (elem s = 0; s < n; ++s) {
      for (elem t = 0; t < n; ++t) {
        if (s == t || !S.leq(s, t)) {
          continue;
        }
        for (elem a = 0; a < m; ++a) {
          if (!leq(x(a, s), x(a, t))) {
            return Violation{"monotone-scalar", {a, s, t}};
          }
        }
      }
    }
    return std::nullopt;
  }

  SPoset::SPoset(Pomonoid          monoid,
                 Side              side,
                 std::size_t       m,
                 std::vector<elem> act,
                 Relation          leq)
      : _monoid(std::move(monoid)),
        _side(side),
        _m(m),
        _act(std::move(act)),
        _leq(std::move(leq)) {
    if (auto v = validate_sposet(_monoid, _side, _m, _act, _leq)) {
      throw ValidationError(*v);
    }
  }

  std::vector<elem> SPoset::orbit(elem a) const {
    std::vector<bool> seen(_m, false);
    for (elem s = 0; s < _monoid.size(); ++s) {
      seen[act(a, s)] = true;
    }
    std::vector<elem> out;
    for (elem b = 0; b < _m; ++b) {
      if (seen[b]) {
        out.push_back(b);
      }
    }
    return out;
  }

  bool SPoset::operator==(SPoset const& other) const noexcept {
    return _side == other._side && _m == other._m && _act == other._act
           && _leq == other._leq && _monoid == other._monoid;
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_compatible(SPoset const& A, SPoset const& B) {
      if (A.monoid() != B.monoid()) {
        throw InputError("S-posets are over different pomonoids");
      }
      if (A.side() != B.side()) {
        throw InputError("S-posets act from different sides");
      }
    }
  }  // namespace

  Validation validate_map(SPoset const&    source,
                          SPoset const&    target,
                          SPosetMap const& f) {
    require_compatible(source, target);
    if (f.image.size() != source.size()) {
      throw InputError("map: image table has " + std::to_string(f.image.size())
                       + " entries, expected "
                       + std::to_string(source.size()));
    }
    check_range(f.image, target.size(), "map image");
    for (elem a = 0; a < source.size(); ++a) {
      for (elem s = 0; s < source.monoid().size(); ++s) {
        if (f(source.act(a, s)) != target.act(f(a), s)) {
          return Violation{"action-preserving", {a, s}};
        }
      }
    }
    for (elem a = 0; a < source.size(); ++a) {
      for (elem b = 0; b < source.size(); ++b) {
        if (source.leq(a, b) && !target.leq(f(a), f(b))) {
          return Violation{"monotone", {a, b}};
        }
      }
    }
    return std::nullopt;
  }

  SPosetMap compose(SPosetMap const& first, SPosetMap const& second) {
    SPosetMap out;
    out.image.reserve(first.image.size());
    for (elem x : first.image) {
      out.image.push_back(second(x));
    }
    return out;
  }

  SPosetMap identity_map(SPoset const& A) {
    SPosetMap f;
    f.image.resize(A.size());
    std::iota(f.image.begin(), f.image.end(), elem(0));
    return f;
  }

  bool is_order_embedding(SPoset const&    source,
                          SPoset const&    target,
                          SPosetMap const& f) {
    for (elem a = 0; a < source.size(); ++a) {
      for (elem b = 0; b < source.size(); ++b) {
        if (source.leq(a, b) != target.leq(f(a), f(b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_surjective(SPoset const& target, SPosetMap const& f) {
    std::vector<bool> hit(target.size(), false);
    for (elem x : f.image) {
      hit[x] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Down-sets
  ////////////////////////////////////////////////////////////////////////

  std::vector<elem> down_set(Relation const& leq, std::vector<elem> const& X) {
    if (X.empty()) {
      throw InputError("down_set: the generating set is empty");
    }
    std::vector<elem> out;
    for (elem p = 0; p < leq.size(); ++p) {
      for (elem x : X) {
        if (x >= leq.size()) {
          throw InputError("down_set: element " + std::to_string(x)
                           + " out of range");
        }
        if (leq(p, x)) {
          out.push_back(p);
          break;
        }
      }
    }
    return out;
  }

  std::vector<elem> down_set(SPoset const& P, std::vector<elem> const& X) {
    return down_set(P.order(), X);
  }

  std::vector<elem> down_set(Pomonoid const& S, std::vector<elem> const& X) {
    return down_set(S.order(), X);
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class HomSearch {
     public:
      HomSearch(SPoset const&                                        A,
                SPoset const&                                        B,
                std::function<bool(std::vector<elem> const&)> const& visit)
          : _A(A),
            _B(B),
            _visit(visit),
            _img(A.size(), kUnassigned),
            _order(A.size()) {
        std::vector<std::size_t> orbit_size(A.size());
        for (elem a = 0; a < A.size(); ++a) {
          orbit_size[a] = A.orbit(a).size();
        }
        std::iota(_order.begin(), _order.end(), elem(0));
        std::stable_sort(_order.begin(), _order.end(), [&](elem x, elem y) {
          return orbit_size[x] > orbit_size[y];
        });
      }

      bool preset(std::vector<elem> const& fixed) {
        for (elem a = 0; a < fixed.size(); ++a) {
          if (fixed[a] == kUnassigned) {
            continue;
          }
          if (fixed[a] >= _B.size()) {
            throw InputError("homomorphism search: preset image out of range");
          }
          if (!assign(a, fixed[a])) {
            return false;
          }
        }
        return true;
      }

      // Returns false once the visitor asked to stop.
      bool run(std::size_t pos = 0) {
        while (pos < _order.size() && _img[_order[pos]] != kUnassigned) {
          ++pos;
        }
        if (pos == _order.size()) {
          return _visit(_img);
        }
        elem const a = _order[pos];
        for (elem b = 0; b < _B.size(); ++b) {
          std::size_t mark = _trail.size();
          bool        keep = true;
          if (assign(a, b)) {
            keep = run(pos + 1);
          }
          undo(mark);
          if (!keep) {
            return false;
          }
        }
        return true;
      }

     private:
      bool assign(elem a, elem b) {
        std::size_t const start = _trail.size();
        std::size_t const n     = _A.monoid().size();
        for (elem s = 0; s < n; ++s) {
          elem x = _A.act(a, s);
          elem y = _B.act(b, s);
          if (_img[x] == kUnassigned) {
            _img[x] = y;
            _trail.push_back(x);
          } else if (_img[x] != y) {
            return false;
          }
        }
        for (std::size_t i = start; i < _trail.size(); ++i) {
          elem x = _trail[i];
          for (elem z = 0; z < _A.size(); ++z) {
            if (_img[z] == kUnassigned) {
              continue;
            }
            if (_A.leq(x, z) && !_B.leq(_img[x], _img[z])) {
              return false;
            }
            if (_A.leq(z, x) && !_B.leq(_img[z], _img[x])) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _img[_trail.back()] = kUnassigned;
          _trail.pop_back();
        }
      }

      SPoset const&                                        _A;
      SPoset const&                                        _B;
      std::function<bool(std::vector<elem> const&)> const& _visit;
      std::vector<elem>                                    _img;
      std::vector<elem>                                    _order;
      std::vector<elem>                                    _trail;
    };
  }  // namespace

  void search_homomorphisms(
      SPoset const&                                        A,
      SPoset const&                                        B,
      std::vector<elem> const&                             fixed,
      std::function<bool(std::vector<elem> const&)> const& visit) {
    require_compatible(A, B);
    if (!fixed.empty() && fixed.size() != A.size()) {
      throw InputError("homomorphism search: preset has wrong length");
    }
    HomSearch search(A, B, visit);
    if (search.preset(fixed)) {
      search.run();
    }
  }

  std::vector<SPosetMap> find_homomorphisms(SPoset const& A,
                                            SPoset const& B,
                                            HomMode       mode) {
    std::vector<SPosetMap> out;
    search_homomorphisms(A, B, {}, [&](std::vector<elem> const& img) {
      SPosetMap f{img};
      if (mode == HomMode::surjective && !is_surjective(B, f)) {
        return true;
      }
      out.push_back(std::move(f));
      return mode != HomMode::exists;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<SPosetMap> find_homomorphism(SPoset const&            A,
                                             SPoset const&            B,
                                             std::vector<elem> const& fixed) {
    std::optional<SPosetMap> out;
    search_homomorphisms(A, B, fixed, [&](std::vector<elem> const& img) {
      out = SPosetMap{img};
      return false;
    });
    return out;
  }

  bool hom_exists(SPoset const& A, SPoset const& B) {
    return find_homomorphism(A, B).has_value();
  }

}  // namespace spos
