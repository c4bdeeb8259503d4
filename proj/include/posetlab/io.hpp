#pragma once

#include <string>

#include "posetlab/freeset.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// Poset text format: first content line "n=<count>", then one cover pair
// "i<j" per line; '#' starts a comment. Serialization emits the transitive
// reduction in lex order, so parse(serialize(p)) == p.
Poset parse_poset_text(const std::string& text);
std::string serialize_poset(const Poset& p);

// A poset source is either a named constructor ("bm?m=4&r=2",
// "blev?m=3&levels=1,2", "chain?n=5", "antichain?n=3", "powerset?m=3") or a
// path to a file in the text format.
Poset poset_from_source(const std::string& source);

// Set-mapping text format: header "N=<n> r=<r>", then one "X -> Y" line per
// stored entry, subsets as comma lists ("-" is the empty set). Entries are
// serialized sorted by (key size, key value); empty values are omitted, so
// serialization round-trips exactly.
SetMapping parse_set_mapping(const std::string& text);
std::string serialize_set_mapping(const SetMapping& f);

// File path, or one of "cyclic?n=3&r=1&shift=1", "block?n=6&r=2",
// "random?n=8&r=2&density=0.3&seed=1".
SetMapping mapping_from_source(const std::string& source);

std::string read_file(const std::string& path);

// Renders a subset mask as "{0,2}" ("{}" when empty).
std::string subset_label(std::uint64_t mask);

}  // namespace posetlab
