#pragma once

#include "dunklpoly/dde.hpp"
#include "dunklpoly/moments.hpp"
#include "dunklpoly/report.hpp"

namespace dunklpoly {

/// Canonical check vocabulary: riccati, theorem21, dde, pearson,
/// orthogonality, appell, shift, structure, qdecomp, hankel.
const std::vector<std::string>& known_checks();

/// appell is Hermite-only, shift is Gegenbauer-only; everything else applies
/// to both families.
bool check_applicable(const std::string& name, const FamilySpec& family);

/// Runs the named check suites for a family at horizon N. "all" expands to
/// every applicable check. Unknown names throw std::invalid_argument;
/// explicitly requested inapplicable checks produce skip records.
VerificationReport verify_family(const FamilySpec& family, int N,
                                 const std::vector<std::string>& checks);

/// Dunkl-classicality test for an arbitrary symmetric recurrence: builds the
/// Q sequence and reports whether it is again orthogonal (only the theorem21
/// check applies). The negative-control entry point.
VerificationReport verify_custom(const Rational& mu, const SymmetricRecurrence& gammas, int N,
                                 const std::vector<std::string>& checks);

}  // namespace dunklpoly
