#include <iostream>

#include "CLI11.hpp"

#include "rcomb/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Counting subsets with disallowed differences via comb tilings"};
    rcomb::Invocation inv;
    std::string arg;
    app.add_option("command", inv.command,
                   "count | table | comb | digraph | metatiles | cycles | recurrence | gf | verify | bijection | oracle")
        ->required();
    app.add_option("Q", arg, "difference set, e.g. 1,2,4 ('' or 0 for none); for bijection: perm-jm | perm-1m | subword");
    app.add_option("--n", inv.n, "largest n (default 32)");
    app.add_flag("--triangle", inv.triangle, "refine by subset size k");
    app.add_flag("--json", inv.json, "JSON output");
    app.add_flag("--dot", inv.dot, "DOT output for digraph (the default)");
    app.add_option("--max-len", inv.max_len, "metatile length bound");
    app.add_option("--omega", inv.omega, "subword, e.g. 10110");
    app.add_option("--m", inv.m, "permutation parameter m");
    app.add_option("--j", inv.j, "permutation parameter j");
    CLI11_PARSE(app, argc, argv);

    if (inv.command == "bijection")
        inv.mode = arg;
    else
        inv.q_spec = arg;
    return rcomb::run(inv, std::cout, std::cerr);
}
