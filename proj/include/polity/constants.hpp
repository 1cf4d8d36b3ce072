#ifndef POLITY_CONSTANTS_HPP
#define POLITY_CONSTANTS_HPP

namespace polity {

// Row sums of ingested matrices may deviate from 1 by this much; rows are
// renormalized exactly after validation.
inline constexpr double kRowTol = 1e-9;

// A substochastic block must have every row sum below 1 - kSubTol.
inline constexpr double kSubTol = 1e-12;

// Entries below this magnitude in a dominated matrix are structural zeros.
inline constexpr double kExactZeroTol = 1e-14;

// Relative pivot threshold for rank / singularity decisions.
inline constexpr double kRankTol = 1e-10;

// Default iteration tolerance for library calls; the CLI default is looser.
inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kCliTol = 1e-10;

// Solves with estimated condition beyond this are flagged near-singular.
inline constexpr double kNearSingularCond = 1e12;

inline constexpr long kMaxIters = 1000000;

// Exhaustive family listing is refused beyond this society size.
inline constexpr int kEnumLimit = 20;

// Safety caps for the Monte Carlo walks.
inline constexpr long kWalkLimit = 1000000;
inline constexpr long kResampleLimit = 10000;

}  // namespace polity

#endif
