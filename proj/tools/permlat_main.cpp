#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permlat/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"permlat: exact permutation-lattice tools for finite p-groups"};
    app.require_subcommand(1);

    std::string file, lattice, sub, sub2, method = "cover";
    unsigned seed = 0;

    auto add_file = [&](CLI::App* c) {
        c->add_option("file", file, "input document")->required();
    };
    auto add_lat = [&](CLI::App* c) {
        c->add_option("-l,--lattice", lattice, "lattice name")->required();
    };

    CLI::App* info = app.add_subcommand("info", "group order, subgroup classes, lattice ranks");
    add_file(info);

    CLI::App* subs = app.add_subcommand("subgroups", "subgroup lattice with classes");
    add_file(subs);

    CLI::App* brauer = app.add_subcommand("brauer", "fixed-point quotients at a base subgroup");
    add_file(brauer);
    add_lat(brauer);
    brauer->add_option("-P,--subgroup", sub, "base point subgroup")->required();

    CLI::App* cover = app.add_subcommand("cover", "explicit permutation cover");
    add_file(cover);
    add_lat(cover);
    cover->add_option("--seed", seed, "lift choice seed (default 0)");

    CLI::App* rec = app.add_subcommand("recognize", "permutation-lattice recognition");
    add_file(rec);
    add_lat(rec);
    rec->add_option("-m,--method", method, "cover|cliffweiss (default cover)");
    rec->add_option("--seed", seed, "lift choice seed (default 0)");

    CLI::App* weiss = app.add_subcommand("weiss", "end-to-end hypothesis check");
    add_file(weiss);
    add_lat(weiss);
    weiss->add_option("-N,--subgroup", sub, "normal subgroup")->required();

    CLI::App* h1c = app.add_subcommand("h1", "first cohomology of a subgroup on a lattice");
    add_file(h1c);
    add_lat(h1c);
    h1c->add_option("-H,--subgroup", sub, "subgroup")->required();

    CLI::App* mackey = app.add_subcommand("mackey", "double-coset decomposition check");
    add_file(mackey);
    add_lat(mackey);
    mackey->add_option("-H,--subgroup", sub, "restriction subgroup H")->required();
    mackey->add_option("-L,--subgroup2", sub2, "second subgroup L")->required();

    CLI11_PARSE(app, argc, argv);

    permlat::CmdResult r;
    if (info->parsed()) r = permlat::cmd_info(file);
    else if (subs->parsed()) r = permlat::cmd_subgroups(file);
    else if (brauer->parsed()) r = permlat::cmd_brauer(file, lattice, sub);
    else if (cover->parsed()) r = permlat::cmd_cover(file, lattice, seed);
    else if (rec->parsed()) r = permlat::cmd_recognize(file, lattice, method, seed);
    else if (weiss->parsed()) r = permlat::cmd_weiss(file, lattice, sub);
    else if (h1c->parsed()) r = permlat::cmd_h1(file, lattice, sub);
    else if (mackey->parsed()) r = permlat::cmd_mackey(file, lattice, sub, sub2);

    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
