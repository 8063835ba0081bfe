#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hypermatch/kgraph.hpp"

namespace hypermatch {

// Text format: a header line "k n", then one edge per line as k ascending
// space-separated 1-based vertices. Lines starting with '#' are ignored.
// serialize() writes edges in lexicographic order, so parse/serialize is a
// byte-exact round trip on canonical files.

KGraph parse_kgraph(std::string_view text);
KGraph read_kgraph(std::istream& in);
KGraph load_kgraph(const std::filesystem::path& path);

std::string serialize(const KGraph& h);
void write_kgraph(std::ostream& out, const KGraph& h);

}  // namespace hypermatch
