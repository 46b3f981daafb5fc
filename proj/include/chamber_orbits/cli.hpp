#pragma once

// Command implementations behind the chamber-orbits executable.
//
// Each command validates its configuration, refuses work whose estimated
// size exceeds the configured budgets (exit code 2), and otherwise writes
// one deterministic report to the given stream: byte-identical output for
// identical configuration, regardless of thread count.  Internal failures
// exit 1 with a message on stderr.

#include "chamber_orbits/arrangement.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace chamber_orbits {

struct RunConfig {
    Family family = Family::catalan;
    int m = 3;
    std::string format = "text";  // json | csv | text
    int threads = 1;
    std::int64_t budget_grid = 200'000'000;  // max p^l for any finite-field scan
    std::int64_t budget_chambers = 200'000;  // max chambers to enumerate
    std::uint64_t seed = 0;                  // drives random spot checks in verify
};

// Chamber counts (coxeter part, stable part, full), fiber sizes, and the
// enumeration-vs-Zaslavsky agreement flag.
int cmd_chambers(const RunConfig& config, std::ostream& out);

// Characteristic polynomial, chamber and orbit counts, primes used.
int cmd_charpoly(const RunConfig& config, std::ostream& out);

// Orbits of the stable part's chambers: representative, size, stabilizer
// order, fiber size, and the conjugacy classes of the stabilizers.
int cmd_orbits(const RunConfig& config, std::ostream& out);

// Stabilizer subgroups with their invariant average points and (for the
// symmetric group) the block composition.
int cmd_isotropy(const RunConfig& config, std::ostream& out);

// Unit-shift family only: the order relations of the stable-part chambers
// and the interval indexing of the fiber over the decreasing chamber.
int cmd_semiorders(const RunConfig& config, std::ostream& out);

// Runs the identity suite and the family property suite; exits 0 only if
// every check passes.
int cmd_verify(const RunConfig& config, std::ostream& out);

}  // namespace chamber_orbits
