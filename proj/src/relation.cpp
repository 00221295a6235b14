#include "spos/relation.hpp"

namespace spos {

  Relation::Relation(std::size_t n)
      : _n(n), _stride((n + 63) / 64), _bits(n * ((n + 63) / 64), 0) {}

  Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.set(i, i);
    }
    return r;
  }

  Relation Relation::full(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r.set(i, j);
      }
    }
    return r;
  }

  void Relation::close() {
    for (std::size_t i = 0; i < _n; ++i) {
      set(i, i);
    }
    transitive_closure();
  }

  void Relation::transitive_closure() {
    for (std::size_t k = 0; k < _n; ++k) {
      std::uint64_t const* rk = row(k);
      for (std::size_t i = 0; i < _n; ++i) {
        if (i != k && (*this)(i, k)) {
          std::uint64_t* ri = mutable_row(i);
          for (std::size_t w = 0; w < _stride; ++w) {
            ri[w] |= rk[w];
          }
        }
      }
    }
  }

  Relation Relation::converse() const {
    Relation r(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if ((*this)(i, j)) {
          r.set(j, i);
        }
      }
    }
    return r;
  }

  Relation Relation::symmetric_part() const {
    Relation r = converse();
    r &= *this;
    return r;
  }

  Relation& Relation::operator|=(Relation const& other) {
    for (std::size_t w = 0; w < _bits.size(); ++w) {
      _bits[w] |= other._bits[w];
    }
    return *this;
  }

  Relation& Relation::operator&=(Relation const& other) {
    for (std::size_t w = 0; w < _bits.size(); ++w) {
      _bits[w] &= other._bits[w];
    }
    return *this;
  }

  bool Relation::subset_of(Relation const& other) const noexcept {
    for (std::size_t w = 0; w < _bits.size(); ++w) {
      if (_bits[w] & ~other._bits[w]) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_reflexive() const noexcept {
    for (std::size_t i = 0; i < _n; ++i) {
      if (!(*this)(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_transitive() const noexcept {
    std::size_t i, j, k;
    return !find_transitivity_failure(i, j, k);
  }

  bool Relation::find_transitivity_failure(std::size_t& i,
                                           std::size_t& j,
                                           std::size_t& k) const noexcept {
    for (i = 0; i < _n; ++i) {
      for (j = 0; j < _n; ++j) {
        if (!(*this)(i, j)) {
          continue;
        }
        for (k = 0; k < _n; ++k) {
          if ((*this)(j, k) && !(*this)(i, k)) {
            return true;
          }
        }
      }
    }
    return false;
  }

  bool Relation::is_antisymmetric() const noexcept {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = i + 1; j < _n; ++j) {
        if ((*this)(i, j) && (*this)(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t Relation::count() const noexcept {
    std::size_t c = 0;
    for (auto w : _bits) {
      c += static_cast<std::size_t>(__builtin_popcountll(w));
    }
    return c;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  Relation::strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if (i != j && (*this)(i, j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  Relation::covering_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [i, j] : strict_pairs()) {
      bool covers = true;
      for (std::size_t k = 0; k < _n && covers; ++k) {
        if (k != i && k != j && (*this)(i, k) && (*this)(k, j)) {
          covers = false;
        }
      }
      if (covers) {
        out.emplace_back(i, j);
      }
    }
    return out;
  }

  Relation Relation::relabel(std::vector<std::size_t> const& p) const {
    Relation r(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if ((*this)(i, j)) {
          r.set(p[i], p[j]);
        }
      }
    }
    return r;
  }

}  // namespace spos
