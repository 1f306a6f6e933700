// SPDX-License-Identifier: Apache-2.0
//
// The `forget` command line. Kept apart from main() so tests can drive it
// with string streams.

#pragma once

#include <iosfwd>

namespace forget::cli {

/// Process exit statuses.
enum Exit : int {
  kOk = 0,
  kMismatch = 1,     // check found disagreeing outputs, or bench found a mismatch
  kUsage = 2,        // bad flags or arguments
  kParseError = 3,   // malformed formula or variable list
  kIoError = 4,      // unreadable input, unwritable output
  kTimeout = 5,      // the run hit its deadline
  kContractError = 6 // precondition violated or enumeration guard exceeded
};

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace forget::cli
