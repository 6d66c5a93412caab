#include "pnfkit/io.hpp"

#include <istream>
#include <ostream>

namespace pnfkit {

BinaryWord read_word(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) && line.empty()) throw ParseError("no word in input");
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return parse_word(std::string_view(line).substr(first, last - first + 1));
}

void write_word(std::ostream& out, const BinaryWord& w) { out << w.to_string() << '\n'; }

std::string format_profile(const OnesProfile& profile) {
  std::string text;
  for (std::size_t k = 0; k <= profile.length(); ++k) {
    if (k != 0) text += ',';
    text += std::to_string(profile[k]);
  }
  return text;
}

void write_profile_csv(std::ostream& out, const OnesProfile& profile) {
  out << "k=0.." << profile.length() << '\n' << format_profile(profile) << '\n';
}

void write_pnf_pair(std::ostream& out, const PnfPair& pair) {
  out << "PNF1=" << pair.pnf1.to_string() << '\n' << "PNF0=" << pair.pnf0.to_string() << '\n';
}

void write_parikh_set_csv(std::ostream& out, const ParikhSet& set) {
  out << "zeros,ones\n";
  for (const ParikhVector& v : set.members()) out << v.zeros << ',' << v.ones << '\n';
}

}  // namespace pnfkit
