#ifndef SPOS_VERIFY_HPP_
#define SPOS_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spos/io.hpp"

namespace spos::verify {

  using json = io::json;

  struct Scope {
    std::size_t   max_order = 3;  // pomonoids of order 1..max_order
    std::size_t   max_poset = 3;  // enumerated S-posets of size 1..max_poset
    std::size_t   power_cap = 2;  // S^k for k ≤ power_cap
    std::uint64_t seed      = 0;
    std::size_t   workers   = 1;
    std::size_t   samples   = 1000;  // RETRACT-TRANSFER pairs
  };

  // Registered theorem tags, in report order.
  std::vector<std::string> const& tags();

  struct TheoremReport {
    std::string              id;
    Scope                    scope;
    std::size_t              pomonoids = 0;
    std::size_t              instances = 0;
    std::vector<std::string> lines;  // one per pomonoid (or sample block)
    std::vector<json>        violations;
    std::vector<json>        findings;
    std::vector<std::string> notes;
    double                   wall_seconds = 0;  // not part of text()

    bool passed() const noexcept {
      return violations.empty();
    }

    // Deterministic for a fixed scope (the worker count is not recorded).
    std::string text() const;
  };

  // Throws InputError for an unknown tag or a scope outside the
  // enumeration caps.
  TheoremReport run(std::string const& tag, Scope const& scope);

  // Runs several tags sharing one universe per pomonoid.
  std::vector<TheoremReport> run_all(std::vector<std::string> const& tags,
                                     Scope const&                    scope);

  struct ReplayOutcome {
    bool        reproduced = false;
    std::string detail;
  };

  // Re-evaluates every evidence claim of a violation or finding record
  // with the properties module.
  ReplayOutcome replay(json const& record);
  // Accepts a report line "violation {...}" or "finding {...}".
  ReplayOutcome replay_line(std::string const& line);

}  // namespace spos::verify

#endif  // SPOS_VERIFY_HPP_
