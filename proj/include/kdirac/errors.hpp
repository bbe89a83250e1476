// Error taxonomy shared by the whole library.
//
// The three classes map 1:1 onto process exit codes in the CLI driver:
//   InvalidParameter  -> 2   (unsupported rank, malformed input, bad flag combo)
//   DominanceViolation-> 3   (a weight fails the dominance test for a marking)
//   StructuralError   -> 4   (an internal invariant broke: arithmetic overflow,
//                             impossible classification, inconsistent diagram)
// Anything not raised through these is a programming error and is allowed to
// terminate via the default handler.

#pragma once

#include <stdexcept>
#include <string>

namespace kdirac {

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DominanceViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kdirac
