#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crossint/family.hpp"

namespace crossint {

// Family text format v1:
//   n=<int>
//   k=<int>            (optional)
//   1,2,5              (one set per line, increasing 1-based elements)
// Blank lines and lines starting with '#' are ignored. The empty set is
// written as "{}".

/// Throws std::runtime_error with a line number on malformed input.
Family read_family(std::istream& in);
Family parse_family(const std::string& text);

/// comments are emitted first, one "# ..." line each.
void write_family(std::ostream& out, const Family& f, const std::vector<std::string>& comments = {});
std::string format_family(const Family& f, const std::vector<std::string>& comments = {});

Family load_family(const std::string& path);
void save_family(const std::string& path, const Family& f,
                 const std::vector<std::string>& comments = {});

}  // namespace crossint
