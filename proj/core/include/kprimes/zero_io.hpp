#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "kprimes/lfunc.hpp"

namespace kprimes {

/// Parses a zero file: "#" header lines ("# key: zeta", "# key: q=<q1> chi=<e1,e2>",
/// "# height: <T>"), then one ordinate per line. Unknown header lines are ignored.
/// Without a height line the height is the last ordinate.
ZeroList read_zeros(std::istream& in, ZeroKey fallback_key = ZeroKey::zeta());
ZeroList import_zeros(const std::filesystem::path& path);

/// Ordinates are written with 15 significant digits.
void write_zeros(std::ostream& out, const ZeroList& zeros);
void export_zeros(const ZeroList& zeros, const std::filesystem::path& path);

/// "zeta" or "q=<q1> chi=<e1,e2>" back to a key.
ZeroKey parse_zero_key(const std::string& text);

std::string format_ordinate(double gamma);

}  // namespace kprimes
