#ifndef DISCRECT_VERIFY_SUITES_HPP
#define DISCRECT_VERIFY_SUITES_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace discrect::verify {

struct Check {
    std::string name;   // dotted, no spaces
    bool ok;
    std::string detail; // free text, includes the failing instance on failure
};

using Report = std::vector<Check>;

// desk-scale exhaustive/regression suites; deterministic output order
Report suite_sequence();     // published alpha(3,2k) values
Report suite_identities();   // engine agreement + exact identities
Report suite_bijection();    // Phi round trip, walk counts, column census
Report suite_majorization(); // decreasing criterion, psi, transfer chains
Report suite_asymptotics();  // trend + terminal-tolerance properties, exact tails

bool all_ok(const Report& report);

// one line per check: "ok <name> <detail>" / "FAIL <name> <detail>"
void print_report(std::ostream& os, const Report& report);

} // namespace discrect::verify

#endif
