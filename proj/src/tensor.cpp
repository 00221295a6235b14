#include "spos/tensor.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

#include "spos/constructions.hpp"

namespace spos {

  TensorPoset::TensorPoset(SPoset right, SPoset left)
      : _right(std::move(right)), _left(std::move(left)) {
    if (_right.side() != Side::right || _left.side() != Side::left) {
      throw InputError("tensor: expected a right S-poset and a left S-poset");
    }
    if (_right.monoid() != _left.monoid()) {
      throw InputError("tensor: S-posets over different pomonoids");
    }
    SPoset const&     A     = _right;
    SPoset const&     B     = _left;
    std::size_t const n     = A.monoid().size();
    std::size_t const nodes = A.size() * B.size();

    _adjacency.assign(nodes, {});
    auto add = [&](TossKind k, ElemPair from, ElemPair to, elem s) {
      if (from != to) {
        _adjacency[node(from.first, from.second)].push_back({k, from, to, s});
      }
    };
    for (elem a = 0; a < A.size(); ++a) {
      for (elem b = 0; b < B.size(); ++b) {
        for (elem a2 = 0; a2 < A.size(); ++a2) {
          if (A.leq(a, a2)) {
            add(TossKind::order_left, {a, b}, {a2, b}, 0);
          }
        }
        for (elem b2 = 0; b2 < B.size(); ++b2) {
          if (B.leq(b, b2)) {
            add(TossKind::order_right, {a, b}, {a, b2}, 0);
          }
        }
        for (elem s = 0; s < n; ++s) {
          add(TossKind::balance_out, {A.act(a, s), b}, {a, B.act(b, s)}, s);
          add(TossKind::balance_in, {a, B.act(b, s)}, {A.act(a, s), b}, s);
        }
      }
    }
    _reach = Relation(nodes);
    for (std::size_t v = 0; v < nodes; ++v) {
      auto& adj = _adjacency[v];
      std::sort(adj.begin(), adj.end(), [&](auto const& x, auto const& y) {
        return std::make_tuple(node(x.to.first, x.to.second), x.kind, x.scalar)
               < std::make_tuple(node(y.to.first, y.to.second), y.kind,
                                 y.scalar);
      });
      for (auto const& step : adj) {
        _reach.set(v, node(step.to.first, step.to.second));
      }
    }
    _reach.close();

    _class_of.assign(nodes, kUnassigned);
    std::vector<std::size_t> leader;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (_class_of[v] != kUnassigned) {
        continue;
      }
      elem const id = leader.size();
      leader.push_back(v);
      _witness.push_back(pair(v));
      for (std::size_t w = v; w < nodes; ++w) {
        if (_reach(v, w) && _reach(w, v)) {
          _class_of[w] = id;
        }
      }
    }
    _class_leq = Relation(leader.size());
    for (elem i = 0; i < leader.size(); ++i) {
      for (elem j = 0; j < leader.size(); ++j) {
        _class_leq.set(i, j, _reach(leader[i], leader[j]));
      }
    }
  }

  std::vector<std::vector<ElemPair>> TensorPoset::classes() const {
    std::vector<std::vector<ElemPair>> out(class_count());
    for (std::size_t v = 0; v < _class_of.size(); ++v) {
      out[_class_of[v]].push_back(pair(v));
    }
    return out;
  }

  TensorPoset tensor(SPoset const& A, SPoset const& B) {
    return TensorPoset(A, B);
  }

  std::optional<TossingCertificate> tensor_leq_certificate(TensorPoset const& T,
                                                           elem               a,
                                                           elem               b,
                                                           elem               a2,
                                                           elem b2) {
    SPoset const& A = T.right();
    SPoset const& B = T.left();
    if (a >= A.size() || a2 >= A.size() || b >= B.size() || b2 >= B.size()) {
      throw InputError("tensor certificate: element out of range");
    }
    TossingCertificate cert{{a, b}, {a2, b2}, {}};
    if (!T.leq(a, b, a2, b2)) {
      return std::nullopt;
    }
    std::size_t const nodes  = A.size() * B.size();
    std::size_t const source = T.node(a, b);
    std::size_t const target = T.node(a2, b2);

    // Distances to the target along reversed edges.
    std::vector<std::vector<std::size_t>> reverse(nodes);
    for (std::size_t v = 0; v < nodes; ++v) {
      for (auto const& step : T.steps_from(v)) {
        reverse[T.node(step.to.first, step.to.second)].push_back(v);
      }
    }
    std::vector<std::size_t> dist(nodes, kUnassigned);
    std::deque<std::size_t>  queue{target};
    dist[target] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u : reverse[v]) {
        if (dist[u] == kUnassigned) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    // Steps are sorted by target node, so the first improving step is the
    // lexicographically least choice.
    std::size_t v = source;
    while (v != target) {
      for (auto const& step : T.steps_from(v)) {
        std::size_t w = T.node(step.to.first, step.to.second);
        if (dist[w] + 1 == dist[v]) {
          cert.steps.push_back(step);
          v = w;
          break;
        }
      }
    }
    return cert;
  }

  namespace {
    bool step_valid(SPoset const& A, SPoset const& B, TossStep const& st) {
      auto [a, b]   = st.from;
      auto [a2, b2] = st.to;
      switch (st.kind) {
        case TossKind::order_left:
          return b == b2 && A.leq(a, a2);
        case TossKind::order_right:
          return a == a2 && B.leq(b, b2);
        case TossKind::balance_out:
          return st.scalar < A.monoid().size() && a == A.act(a2, st.scalar)
                 && b2 == B.act(b, st.scalar);
        case TossKind::balance_in:
          return st.scalar < A.monoid().size() && b == B.act(b2, st.scalar)
                 && a2 == A.act(a, st.scalar);
      }
      return false;
    }
  }  // namespace

  bool replay(SPoset const&             A,
              SPoset const&             B,
              TossingCertificate const& cert) {
    ElemPair at = cert.from;
    for (auto const& st : cert.steps) {
      if (st.from != at || st.from.first >= A.size()
          || st.from.second >= B.size() || st.to.first >= A.size()
          || st.to.second >= B.size() || !step_valid(A, B, st)) {
        return false;
      }
      at = st.to;
    }
    return at == cert.to;
  }

  TossingScheme to_scheme(TossingCertificate const& cert) {
    TossingScheme scheme;
    if (cert.steps.empty()) {
      scheme.rows.push_back({cert.from.first, 0, 0, cert.from.second});
      return scheme;
    }
    for (auto const& st : cert.steps) {
      auto [a, b] = st.from;
      auto [a2, b2] = st.to;
      switch (st.kind) {
        case TossKind::order_left:
        case TossKind::order_right:
          scheme.rows.push_back({a, 0, 0, b});
          break;
        case TossKind::balance_out:
          // (a2 s, b) → (a2, s b)
          scheme.rows.push_back({a2, st.scalar, 0, b});
          break;
        case TossKind::balance_in:
          // (a, s b2) → (a s, b2)
          scheme.rows.push_back({a, 0, st.scalar, b});
          break;
      }
    }
    return scheme;
  }

  bool verify_scheme(SPoset const&        A,
                     SPoset const&        B,
                     TossingScheme const& scheme,
                     ElemPair             from,
                     ElemPair             to) {
    auto const&       rows = scheme.rows;
    std::size_t const n    = A.monoid().size();
    if (rows.empty()) {
      return false;
    }
    for (auto const& r : rows) {
      if (r.a >= A.size() || r.b >= B.size() || r.s >= n || r.t >= n) {
        return false;
      }
    }
    if (rows.front().b != from.second
        || !A.leq(from.first, A.act(rows[0].a, rows[0].s))) {
      return false;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto const& r     = rows[i];
      bool const  last  = i + 1 == rows.size();
      elem const  a_to  = last ? to.first : A.act(rows[i + 1].a, rows[i + 1].s);
      elem const  b_nxt = last ? to.second : rows[i + 1].b;
      if (!A.leq(A.act(r.a, r.t), a_to)) {
        return false;
      }
      if (!B.leq(B.act(r.b, r.s), B.act(b_nxt, r.t))) {
        return false;
      }
    }
    return true;
  }

  EmbeddingTest canonical_embedding_test(SPoset const&            A,
                                         std::vector<elem> const& J) {
    Pomonoid const& S = A.monoid();
    if (!is_left_ideal(S, J)) {
      throw InputError("canonical_embedding_test: J is not a left ideal");
    }
    SubPoset    ideal = left_ideal_poset(S, J);
    TensorPoset small(A, ideal.poset);
    TensorPoset big(A, regular_left(S));
    auto const& emb = ideal.embedding;

    EmbeddingTest out;
    for (elem a = 0; a < A.size(); ++a) {
      for (elem u = 0; u < emb.size(); ++u) {
        for (elem a2 = 0; a2 < A.size(); ++a2) {
          for (elem u2 = 0; u2 < emb.size(); ++u2) {
            bool in_ideal = small.leq(a, u, a2, u2);
            bool in_s     = big.leq(a, emb[u], a2, emb[u2]);
            if (in_ideal && !in_s) {
              throw std::logic_error(
                  "canonical_embedding_test: A ⊗ J → A ⊗ S is not monotone");
            }
            if (in_s && !in_ideal && out.holds) {
              out.holds   = false;
              out.failing = {a, emb[u], a2, emb[u2]};
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace spos
