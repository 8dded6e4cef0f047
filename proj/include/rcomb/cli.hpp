#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace rcomb {

struct Invocation {
    std::string command;      // count, table, comb, digraph, metatiles, cycles, recurrence, gf, verify, bijection, oracle
    std::string mode;         // bijection: perm-jm, perm-1m, subword
    std::string q_spec;       // "1,2,4"; "" or "0" for the empty set
    int n = 32;
    bool triangle = false;
    bool json = false;
    bool dot = false;
    std::optional<int> max_len;
    std::string omega;
    int m = 2;
    int j = 1;
};

// Exit status: 0 success, 1 a cross-check failed, 2 bad input or a size guard.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

} // namespace rcomb
