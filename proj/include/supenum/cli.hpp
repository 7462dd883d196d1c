// Command implementations behind the supenum binary.  Each command writes to
// the supplied streams and returns the process exit code:
//   0  success / all applicable verdicts hold
//   1  a verified identity failed (or fuzzing found a failure)
//   2  input error (unreadable file, parse error, bad flags)
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "supenum/code.hpp"
#include "supenum/fuzz.hpp"

namespace supenum {

struct AnalyzeOptions {
    std::string path;
    bool json = false;
    std::uint64_t enum_cap = kDefaultEnumCap;
};
int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);

struct DualOptions {
    std::string path;
};
int cmd_dual(const DualOptions& opt, std::ostream& out, std::ostream& err);

struct FamiliesOptions {
    std::string name;              // simplex | hamming | repetition | extended-hamming-8-4
    unsigned field_order = 2;      // --q / --p
    unsigned m = 3;                // simplex / hamming parameter
    std::size_t n = 3;             // repetition length
};
int cmd_families(const FamiliesOptions& opt, std::ostream& out, std::ostream& err);

struct FuzzOptions {
    FuzzConfig config;
    std::vector<unsigned> field_orders;  // empty = default pool
    bool json = false;
};
int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err);

/// Parse argv-style arguments (excluding the program name) and dispatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supenum
