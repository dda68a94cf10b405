#include "tourn/core/text_io.hpp"

#include "tourn/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace tourn {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

Tournament read_trn(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("TRN: missing vertex-count line");
  line = trim(line);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line, &used);
    if (used != line.size()) throw FormatError("TRN: bad vertex count '" + line + "'");
  } catch (const std::logic_error&) {
    throw FormatError("TRN: bad vertex count '" + line + "'");
  }
  if (n < 0) throw FormatError("TRN: negative vertex count");
  std::string bits;
  if (std::getline(in, bits)) bits = trim(bits);
  return Tournament::from_pair_bits(n, bits);
}

void write_trn(std::ostream& out, const Tournament& t) { out << t.size() << '\n' << t.pair_bits() << '\n'; }

std::string to_trn(const Tournament& t) {
  std::ostringstream os;
  write_trn(os, t);
  return os.str();
}

Tournament parse_trn(const std::string& text) {
  std::istringstream is(text);
  return read_trn(is);
}

Ordering read_ordering(std::istream& in) {
  std::string line;
  std::getline(in, line);
  std::istringstream is(line);
  std::vector<int> perm;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw FormatError("ordering: bad entry '" + tok + "'");
      perm.push_back(v);
    } catch (const std::logic_error&) {
      throw FormatError("ordering: bad entry '" + tok + "'");
    }
  }
  try {
    return Ordering(std::move(perm));
  } catch (const DomainError& e) {
    throw FormatError(std::string("ordering: ") + e.what());
  }
}

void write_ordering(std::ostream& out, const Ordering& order) {
  for (int i = 0; i < order.size(); ++i) out << (i ? " " : "") << order.at(i);
  out << '\n';
}

Tournament load_trn(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_trn(in);
}

Ordering load_ordering(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_ordering(in);
}

}  // namespace tourn
