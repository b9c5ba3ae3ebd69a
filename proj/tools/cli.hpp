#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tourney/representation.hpp"

namespace tourney::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kConsistencyError = 3,
};

/// Lets tests tamper with an embedding between construction and the
/// `embed --check` re-verification.
using EmbeddingHook = std::function<void(Embedding&)>;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const EmbeddingHook& hook = {});

/// 64-bit FNV-1a, hex encoded; used as the report's input digest.
std::string fnv1a_hex(const std::string& text);

}  // namespace tourney::cli
