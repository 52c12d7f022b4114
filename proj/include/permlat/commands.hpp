#pragma once

#include <string>

namespace permlat {

/// Exit codes: 0 success (and "is a permutation" / "theorem verified"),
/// 1 negative verdict, 2 parse or semantic error, 3 internal assertion
/// failure (or TheoremViolated for the end-to-end check).
struct CmdResult {
    int code = 0;
    std::string out;  // the machine-readable report
    std::string err;  // diagnostics
};

CmdResult cmd_info(const std::string& path);
CmdResult cmd_subgroups(const std::string& path);
CmdResult cmd_brauer(const std::string& path, const std::string& lattice, const std::string& P);
CmdResult cmd_cover(const std::string& path, const std::string& lattice, unsigned seed);
CmdResult cmd_recognize(const std::string& path, const std::string& lattice,
                        const std::string& method, unsigned seed);
CmdResult cmd_weiss(const std::string& path, const std::string& lattice, const std::string& N);
CmdResult cmd_h1(const std::string& path, const std::string& lattice, const std::string& H);
CmdResult cmd_mackey(const std::string& path, const std::string& lattice, const std::string& H,
                     const std::string& L);

}  // namespace permlat
