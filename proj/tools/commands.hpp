#pragma once

#include <string>
#include <vector>

namespace glrip::cli {

inline constexpr const char* kToolName = "glrip";
inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kTimeoutPartial = 4;

// Writes content to a temporary sibling file and renames it into place, so
// readers never observe a half-written artifact.
void atomic_write(const std::string& path, const std::string& content);

// 64-bit FNV-1a digest as fixed-width hex.
std::string text_hash(const std::string& text);
std::string file_hash(const std::string& path);

// Full argument-vector entry point (argv[0] is the program name).
int run_cli(int argc, const char* const* argv);

// Convenience overload for in-process callers: args exclude the program name.
int run_cli(const std::vector<std::string>& args);

} // namespace glrip::cli
