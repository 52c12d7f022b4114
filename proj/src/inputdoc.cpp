#include "permlat/inputdoc.hpp"

#include <fstream>
#include <sstream>

namespace permlat {

const LatPtr& InputDocument::lattice(const std::string& name) const {
    auto it = lattices.find(name);
    PERMLAT_REQUIRE(it != lattices.end(), "unknown lattice '" + name + "'");
    return it->second;
}

int InputDocument::subgroup(const std::string& name) const {
    auto it = subgroups.find(name);
    PERMLAT_REQUIRE(it != subgroups.end(), "unknown subgroup '" + name + "'");
    return it->second;
}

int InputDocument::element_from_word(const std::string& word, int lineno) const {
    int acc = group->identity();
    std::string factor;
    for (char c : word + "*") {
        if (c != '*') {
            factor += c;
            continue;
        }
        if (factor.empty()) throw parse_error(lineno, "empty factor in word '" + word + "'");
        std::string name = factor;
        long exp = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            try {
                exp = std::stol(factor.substr(caret + 1));
            } catch (...) {
                throw parse_error(lineno, "bad exponent in word '" + word + "'");
            }
        }
        int base;
        if (name == "e" || name == "1") {
            base = group->identity();
        } else {
            auto it = element_names.find(name);
            if (it == element_names.end())
                throw parse_error(lineno, "unknown element name '" + name + "'");
            base = it->second;
        }
        acc = group->mul(acc, group->pow(base, static_cast<int>(exp)));
        factor.clear();
    }
    return acc;
}

namespace {

Perm parse_cycles(const std::string& tok, int lineno) {
    // e.g. (1 2 3)(4 5); points are 1-based; "()" is the identity
    std::vector<std::vector<int>> cycles;
    std::vector<int> cur;
    std::string num;
    bool open = false;
    int maxpt = 0;
    auto flushnum = [&]() {
        if (num.empty()) return;
        int v = std::stoi(num);
        if (v < 1) throw parse_error(lineno, "cycle points are 1-based");
        cur.push_back(v - 1);
        maxpt = std::max(maxpt, v);
        num.clear();
    };
    for (char c : tok) {
        if (c == '(') {
            if (open) throw parse_error(lineno, "nested '(' in cycle");
            open = true;
            cur.clear();
        } else if (c == ')') {
            if (!open) throw parse_error(lineno, "unbalanced ')'");
            flushnum();
            open = false;
            if (!cur.empty()) cycles.push_back(cur);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            num += c;
        } else if (c == ' ' || c == ',') {
            flushnum();
        } else {
            throw parse_error(lineno, std::string("bad character '") + c + "' in cycle");
        }
    }
    if (open) throw parse_error(lineno, "unterminated cycle");
    Perm p(std::max(maxpt, 1));
    for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    for (const auto& cyc : cycles) {
        // validate disjointness through overwrite detection
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (p[from] != from && p[from] != to)
                throw parse_error(lineno, "cycles are not disjoint");
            p[from] = to;
        }
    }
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (seen[v]) throw parse_error(lineno, "not a permutation (repeated image)");
        seen[v] = 1;
    }
    return p;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    auto lines = tokenize_document(text);
    InputDocument doc;
    bool have_prime = false, have_mode = false, have_group = false;
    long prime = 2;
    int mode_e = 0;  // 0 = integers

    size_t i = 0;
    auto need = [&](const DocLine& l, size_t count, const std::string& what) {
        if (l.tokens.size() != count) throw parse_error(l.lineno, "expected: " + what);
    };

    // header
    for (; i < lines.size(); ++i) {
        const DocLine& l = lines[i];
        const std::string& key = l.tokens[0];
        if (key == "prime") {
            need(l, 2, "prime P");
            prime = std::stol(l.tokens[1]);
            PERMLAT_REQUIRE(is_prime(prime), "prime must be a prime number");
            have_prime = true;
        } else if (key == "mode") {
            if (l.tokens.size() == 2 && l.tokens[1] == "integers") {
                mode_e = 0;
            } else if (l.tokens.size() == 3 && l.tokens[1] == "truncated") {
                mode_e = std::stoi(l.tokens[2]);
                if (mode_e < 1) throw parse_error(l.lineno, "truncation exponent must be >= 1");
            } else {
                throw parse_error(l.lineno, "expected: mode integers | mode truncated E");
            }
            have_mode = true;
        } else {
            break;
        }
    }
    if (!have_prime) throw parse_error(1, "missing 'prime P' header");
    if (!have_mode) throw parse_error(1, "missing 'mode' header");
    doc.ring = mode_e == 0 ? Ring::integers(prime) : Ring::truncated(prime, mode_e);

    // group block
    if (i >= lines.size() || lines[i].tokens[0] != "group")
        throw parse_error(i < lines.size() ? lines[i].lineno : 1, "expected 'group' block");
    {
        int open_line = lines[i].lineno;
        ++i;
        std::vector<Perm> gens;
        std::vector<std::string> gen_names;
        std::vector<std::vector<int>> table;
        std::vector<std::string> elem_names;
        bool closed = false;
        for (; i < lines.size(); ++i) {
            const DocLine& l = lines[i];
            const std::string& key = l.tokens[0];
            if (key == "end") {
                closed = true;
                ++i;
                break;
            } else if (key == "generator") {
                if (l.tokens.size() < 3)
                    throw parse_error(l.lineno, "expected: generator NAME CYCLES");
                std::string cyc;
                for (size_t t = 2; t < l.tokens.size(); ++t) cyc += l.tokens[t];
                gen_names.push_back(l.tokens[1]);
                gens.push_back(parse_cycles(cyc, l.lineno));
            } else if (key == "table") {
                need(l, 2, "table [[...]]");
                Mat m = parse_matrix_token(l.tokens[1], Ring::integers(2), l.lineno);
                table.assign(m.rows(), std::vector<int>(m.cols()));
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c)
                        table[r][c] = static_cast<int>(m.at(r, c).convert_to<long>());
            } else if (key == "names") {
                for (size_t t = 1; t < l.tokens.size(); ++t) elem_names.push_back(l.tokens[t]);
            } else {
                throw parse_error(l.lineno, "unexpected '" + key + "' in group block");
            }
        }
        if (!closed) throw parse_error(open_line, "group block not closed with 'end'");
        if (!gens.empty() && !table.empty())
            throw parse_error(open_line, "give either generators or a table, not both");
        if (!gens.empty()) {
            doc.group = Group::from_generators(prime, gens, gen_names);
            // generators() is in declaration order, identity generators dropped
            size_t gi = 0;
            for (size_t k = 0; k < gen_names.size(); ++k) {
                bool is_id = true;
                for (size_t t = 0; t < gens[k].size(); ++t) is_id = is_id && gens[k][t] == static_cast<int>(t);
                if (is_id) {
                    doc.element_names[gen_names[k]] = doc.group->identity();
                } else {
                    PERMLAT_ASSERT(gi < doc.group->generators().size(), "generator bookkeeping");
                    doc.element_names[gen_names[k]] = doc.group->generators()[gi++];
                }
            }
        } else if (!table.empty()) {
            doc.group = Group::from_table(prime, table, elem_names);
            for (int e = 0; e < doc.group->order(); ++e)
                doc.element_names[doc.group->label(e)] = e;
        } else {
            throw parse_error(open_line, "empty group block");
        }
        have_group = true;
    }
    PERMLAT_ASSERT(have_group, "group block parsed");

    // lattice and subgroup blocks
    while (i < lines.size()) {
        const DocLine& l = lines[i];
        const std::string& key = l.tokens[0];
        if (key == "lattice") {
            need(l, 2, "lattice NAME");
            std::string name = l.tokens[1];
            int open_line = l.lineno;
            ++i;
            int rank = -1;
            std::map<int, Mat> gen_action;
            bool closed = false;
            for (; i < lines.size(); ++i) {
                const DocLine& b = lines[i];
                if (b.tokens[0] == "end") {
                    closed = true;
                    ++i;
                    break;
                } else if (b.tokens[0] == "rank") {
                    need(b, 2, "rank R");
                    rank = std::stoi(b.tokens[1]);
                } else if (b.tokens[0] == "action") {
                    need(b, 3, "action NAME MATRIX");
                    int elem = doc.element_from_word(b.tokens[1], b.lineno);
                    Mat m = parse_matrix_token(b.tokens[2], doc.ring, b.lineno);
                    if (rank >= 0 && (m.rows() != rank || m.cols() != rank))
                        throw parse_error(b.lineno, "action matrix does not match the rank");
                    gen_action.emplace(elem, std::move(m));
                } else {
                    throw parse_error(b.lineno, "unexpected '" + b.tokens[0] + "' in lattice block");
                }
            }
            if (!closed) throw parse_error(open_line, "lattice block not closed with 'end'");
            if (rank == 0) {
                doc.lattices[name] = trivial_lattice(doc.group, doc.ring, 0);
            } else {
                if (gen_action.empty())
                    throw parse_error(open_line, "lattice block needs action lines");
                doc.lattices[name] =
                    lattice_from_generator_action(doc.group, doc.ring, gen_action);
            }
            doc.lattice_order.push_back(name);
        } else if (key == "subgroup") {
            need(l, 2, "subgroup NAME");
            std::string name = l.tokens[1];
            int open_line = l.lineno;
            ++i;
            std::vector<int> elems;
            bool closed = false;
            for (; i < lines.size(); ++i) {
                const DocLine& b = lines[i];
                if (b.tokens[0] == "end") {
                    closed = true;
                    ++i;
                    break;
                } else if (b.tokens[0] == "element") {
                    if (b.tokens.size() < 2)
                        throw parse_error(b.lineno, "expected: element WORD...");
                    for (size_t t = 1; t < b.tokens.size(); ++t)
                        elems.push_back(doc.element_from_word(b.tokens[t], b.lineno));
                } else {
                    throw parse_error(b.lineno,
                                      "unexpected '" + b.tokens[0] + "' in subgroup block");
                }
            }
            if (!closed) throw parse_error(open_line, "subgroup block not closed with 'end'");
            std::vector<int> closure = doc.group->closure(elems);
            doc.subgroups[name] = doc.group->subgroup_index(closure);
            doc.subgroup_order.push_back(name);
        } else {
            throw parse_error(l.lineno, "unexpected '" + key + "' at top level");
        }
    }
    return doc;
}

InputDocument load_input(const std::string& path) {
    std::ifstream in(path);
    PERMLAT_REQUIRE(in.good(), "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

}  // namespace permlat
