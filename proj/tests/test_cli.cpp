#include <doctest.h>

#include <fstream>
#include <sstream>

#include "permlat/commands.hpp"
#include "permlat/inputdoc.hpp"
#include "permlat/recognize.hpp"

using namespace permlat;

#ifndef PERMLAT_FIXTURE_DIR
#define PERMLAT_FIXTURE_DIR "tests/fixtures"
#endif

namespace {
std::string fixture(const std::string& name) {
    return std::string(PERMLAT_FIXTURE_DIR) + "/" + name;
}

// lines of the report without the timing, for golden comparisons
std::vector<std::string> stable_lines(const std::string& out) {
    std::vector<std::string> lines;
    std::istringstream is(out);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind("time_ms", 0) != 0 && line.rfind("input", 0) != 0)
            lines.push_back(line);
    return lines;
}
}  // namespace

TEST_CASE("input parsing") {
    InputDocument doc = load_input(fixture("d8_perm.example"));
    CHECK(doc.group->order() == 8);
    CHECK(doc.ring == Ring::integers(2));
    CHECK(doc.lattice("M")->rank == 4);
    CHECK(doc.group->subgroup(doc.subgroup("Z")).order() == 2);
    CHECK(doc.group->subgroup(doc.subgroup("S")).order() == 2);
    CHECK_THROWS_AS(doc.lattice("missing"), value_error);
    CHECK_THROWS_AS(doc.subgroup("missing"), value_error);
}

TEST_CASE("input parsing rejects bad documents") {
    CHECK_THROWS_AS(parse_input("mode integers\ngroup\n  generator a (1 2)\nend\n"), parse_error);
    CHECK_THROWS_AS(parse_input("prime 4\nmode integers\n"), value_error);
    CHECK_THROWS_AS(parse_input("prime 2\nmode integers\ngroup\nend\n"), parse_error);
    CHECK_THROWS_AS(parse_input("prime 2\nmode integers\ngroup\n  generator a (1 2)\n"),
                    parse_error);
    CHECK_THROWS_AS(
        parse_input("prime 2\nmode integers\ngroup\n  generator a (1 2)\nend\nlattice M\n  rank 1\n"
                    "  action a [[1,0],[0,1]]\nend\n"),
        parse_error);
    // non-equivariant / non-consistent action
    CHECK_THROWS_AS(
        parse_input("prime 2\nmode integers\ngroup\n  generator a (1 2)\nend\nlattice M\n  rank 1\n"
                    "  action a [[2]]\nend\n"),
        value_error);
}

TEST_CASE("subgroup words") {
    InputDocument doc = parse_input(
        "prime 2\nmode truncated 2\ngroup\n  generator a (1 2 3 4)\n  generator b (2 4)\nend\n"
        "subgroup K\n  element a^2*b\nend\n");
    CHECK(doc.ring == Ring::truncated(2, 2));
    CHECK(doc.group->subgroup(doc.subgroup("K")).order() == 2);
    CHECK_THROWS_AS(
        parse_input("prime 2\nmode integers\ngroup\n  generator a (1 2)\nend\n"
                    "subgroup K\n  element c\nend\n"),
        parse_error);
}

TEST_CASE("cmd_recognize on the shipped coset lattice") {
    CmdResult r = cmd_recognize(fixture("d8_perm.example"), "M", "cover", 0);
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict permutation") != std::string::npos);
    CHECK(r.out.find("mult 1") != std::string::npos);

    CmdResult cw = cmd_recognize(fixture("d8_perm.example"), "M", "cliffweiss", 0);
    CHECK(cw.code == 0);
    CHECK(cw.out.find("coflasque true") != std::string::npos);
    CHECK(cw.out.find("modp_permutation true") != std::string::npos);
}

TEST_CASE("cmd_recognize negative verdict and errors") {
    CmdResult r = cmd_recognize(fixture("c4_sign.example"), "SGN", "cover", 0);
    CHECK(r.code == 1);
    CHECK(r.out.find("verdict not-permutation") != std::string::npos);
    CHECK(r.out.find("kernel_rank 1") != std::string::npos);

    CHECK(cmd_recognize(fixture("c4_sign.example"), "NOPE", "cover", 0).code == 2);
    CHECK(cmd_recognize(fixture("c4_sign.example"), "SGN", "bogus", 0).code == 2);
    CHECK(cmd_recognize("no-such-file.example", "M", "cover", 0).code == 2);
}

TEST_CASE("cmd_weiss on the shipped counterexample") {
    CmdResult r = cmd_weiss(fixture("klein_counterexample.example"), "U", "N");
    CHECK(r.code == 1);
    CHECK(r.out.find("status HypothesisFailed") != std::string::npos);
    CHECK(r.out.find("hypothesis_1 ok") != std::string::npos);
    CHECK(r.out.find("hypothesis_2 failed") != std::string::npos);
    CHECK(r.err.find("hypothesis 2") != std::string::npos);

    // the same lattice restricted along <b> is honestly free, theorem applies
    CmdResult v = cmd_weiss(fixture("klein_counterexample.example"), "U", "B");
    CHECK(v.code == 1);  // hypothesis 1 fails there instead
    CHECK(v.out.find("hypothesis_1 failed") != std::string::npos);
}

TEST_CASE("cmd_info and parse failure exit code") {
    CmdResult ok = cmd_info(fixture("d8_perm.example"));
    CHECK(ok.code == 0);
    CHECK(ok.out.find("group_order 8") != std::string::npos);
    CHECK(ok.out.find("lattice M rank 4 action_check ok") != std::string::npos);

    CmdResult bad = cmd_info(fixture("bad_parse.example"));
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("cmd_subgroups") {
    CmdResult r = cmd_subgroups(fixture("d8_perm.example"));
    CHECK(r.code == 0);
    CHECK(stable_lines(r.out).size() >= 12);  // 10 subgroups + header lines
    CHECK(r.out.find("class_count 8") != std::string::npos);
}

TEST_CASE("cmd_h1 and cmd_brauer and cmd_mackey") {
    CmdResult h = cmd_h1(fixture("c4_sign.example"), "SGN", "G");
    CHECK(h.code == 0);
    CHECK(h.out.find("factors [2]") != std::string::npos);

    CmdResult b = cmd_brauer(fixture("c4_sign.example"), "REG", "G");
    CHECK(b.code == 0);
    CHECK(b.out.find("double_dim 0") != std::string::npos);

    CmdResult m = cmd_mackey(fixture("d8_perm.example"), "M", "Z", "S");
    CHECK(m.code == 0);
    CHECK(m.out.find("iso_verified true") != std::string::npos);
}

TEST_CASE("cover report round-trips and re-verifies") {
    CmdResult r = cmd_cover(fixture("d8_perm.example"), "M", 0);
    REQUIRE(r.code == 0);

    // parse the report back with the same tokenizer
    auto lines = tokenize_document(r.out);
    std::string theta_tok, kernel_rank;
    std::map<int, int> structure;
    bool in_structure = false;
    for (const auto& l : lines) {
        if (l.tokens[0] == "structure") in_structure = true;
        else if (l.tokens[0] == "end" && in_structure) in_structure = false;
        else if (in_structure && l.tokens[0] == "class")
            structure[std::stoi(l.tokens[1])] = std::stoi(l.tokens[l.tokens.size() - 1]);
        else if (l.tokens[0] == "theta") theta_tok = l.tokens[1];
        else if (l.tokens[0] == "kernel_rank") kernel_rank = l.tokens[1];
    }
    REQUIRE(!theta_tok.empty());
    CHECK(kernel_rank == "0");

    // rebuild everything from the original input and the reported data
    InputDocument doc = load_input(fixture("d8_perm.example"));
    LatPtr lat = doc.lattice("M");
    PermStructure st;
    st.mult = structure;
    LatPtr cover = perm_module_from_structure(doc.group, doc.ring, st);
    Mat theta = parse_matrix_token(theta_tok, doc.ring, 0);
    LatticeMap rebuilt = make_map(cover, lat, theta);  // equivariance re-checked here
    CHECK(map_kernel(rebuilt).rows() == 0);
    CHECK(is_surjective_p_locally(rebuilt));
}

TEST_CASE("golden: recognize output is stable") {
    CmdResult a = cmd_recognize(fixture("c4_sign.example"), "SGN", "cover", 0);
    CmdResult b = cmd_recognize(fixture("c4_sign.example"), "SGN", "cover", 0);
    CHECK(stable_lines(a.out) == stable_lines(b.out));
    std::vector<std::string> expect{
        "report recognize",
        "command recognize --lattice SGN --method cover --seed 0",
        "ring integers p=2",
        "group_order 4",
        "lattice SGN rank 1",
        "verdict not-permutation",
        "kernel_rank 1",
        "kernel [[1,1]]",
        "end",
    };
    CHECK(stable_lines(a.out) == expect);
}
