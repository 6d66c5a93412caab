#pragma once

#include <iosfwd>
#include <string>

#include "pnfkit/bitword.hpp"
#include "pnfkit/pnf.hpp"

namespace pnfkit {

/// Reads one newline-terminated word. Surrounding blanks and a trailing CR are ignored.
BinaryWord read_word(std::istream& in);
/// Writes the word followed by a newline.
void write_word(std::ostream& out, const BinaryWord& w);

/// "v0,v1,...,vn"
std::string format_profile(const OnesProfile& profile);
/// Header line "k=0..n" followed by the comma-separated values.
void write_profile_csv(std::ostream& out, const OnesProfile& profile);

/// "PNF1=<word>\nPNF0=<word>\n"
void write_pnf_pair(std::ostream& out, const PnfPair& pair);

/// Header "zeros,ones" and one row per member in increasing order.
void write_parikh_set_csv(std::ostream& out, const ParikhSet& set);

}  // namespace pnfkit
