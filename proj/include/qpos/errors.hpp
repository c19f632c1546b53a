#pragma once

#include <stdexcept>

namespace qpos {

// Error taxonomy shared across the library. Everything derives from Error so
// callers can catch the whole family at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : Error { using Error::Error; };        // label outside the ground set
struct CycleError : Error { using Error::Error; };        // transitive closure is not a strict order
struct FlagError : Error { using Error::Error; };         // blocks do not form a flag of ideals
struct WeightError : Error { using Error::Error; };       // composition weight does not match the poset
struct SizeError : Error { using Error::Error; };         // beyond a documented brute-force bound
struct ConnectivityError : Error { using Error::Error; }; // operation defined for connected posets only
struct ParseError : Error { using Error::Error; };        // malformed poset document

}  // namespace qpos
