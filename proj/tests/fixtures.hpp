#ifndef SPOS_TESTS_FIXTURES_HPP_
#define SPOS_TESTS_FIXTURES_HPP_

#include <filesystem>

#include "spos/constructions.hpp"
#include "spos/core.hpp"

namespace fixtures {

  using spos::elem;

  // {1, e}: 1 = 0, e = 1, e² = e, discrete order.
  inline spos::Pomonoid sl2() {
    return spos::Pomonoid(2, {0, 1, 1, 1}, spos::Relation::identity(2));
  }

  // {1, e} with e ≤ 1.
  inline spos::Pomonoid sl2_ordered() {
    spos::Relation leq = spos::Relation::identity(2);
    leq.set(1, 0);
    return spos::Pomonoid(2, {0, 1, 1, 1}, leq);
  }

  // {1, g}: g² = 1, discrete order.
  inline spos::Pomonoid z2() {
    return spos::Pomonoid(2, {0, 1, 1, 0}, spos::Relation::identity(2));
  }

  inline constexpr elem one = 0;
  inline constexpr elem e   = 1;

  inline std::filesystem::path data(char const* name) {
    return std::filesystem::path(SPOS_DATA_DIR) / name;
  }

}  // namespace fixtures

#endif  // SPOS_TESTS_FIXTURES_HPP_
