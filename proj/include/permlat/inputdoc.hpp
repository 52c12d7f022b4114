#pragma once

#include <map>
#include <string>

#include "permlat/docio.hpp"
#include "permlat/lattice.hpp"

namespace permlat {

/// A parsed input document: ring, one group, named lattices, named subgroups.
struct InputDocument {
    Ring ring = Ring::integers(2);
    GroupPtr group;
    std::map<std::string, int> element_names;  // generator / element name -> index
    std::vector<std::string> lattice_order;
    std::map<std::string, LatPtr> lattices;
    std::vector<std::string> subgroup_order;
    std::map<std::string, int> subgroups;  // name -> subgroup index

    const LatPtr& lattice(const std::string& name) const;
    int subgroup(const std::string& name) const;
    /// "a^2*b" or "a^2 b ..." resolved through element_names; "e" is identity.
    int element_from_word(const std::string& word, int lineno) const;
};

InputDocument parse_input(const std::string& text);
InputDocument load_input(const std::string& path);

}  // namespace permlat
