#include "tourn/core/errors.hpp"
#include "tourn/smooth.hpp"

#include <fstream>
#include <sstream>

namespace tourn::smooth {

void write_structure(std::ostream& out, const SmoothStructure& chi) {
  out << "c=" << to_string(chi.c()) << " lambda=" << to_string(chi.lambda()) << " w=" << chi.w_string() << '\n';
  for (const auto& b : chi.blocks()) {
    out << (b.transitive ? 'T' : 'L');
    for (int v : b.vertices) out << ' ' << v;
    out << '\n';
  }
}

RawStructure read_structure(std::istream& in) {
  RawStructure raw;
  std::string line;
  if (!std::getline(in, line)) throw FormatError("structure: missing header");
  std::istringstream header(line);
  bool have_c = false, have_l = false, have_w = false;
  for (std::string tok; header >> tok;) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw FormatError("structure: bad header token '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "c") {
      raw.c = parse_rational(val);
      have_c = true;
    } else if (key == "lambda") {
      raw.lambda = parse_rational(val);
      have_l = true;
    } else if (key == "w") {
      for (char ch : val) {
        if (ch != '0' && ch != '1') throw FormatError("structure: w must be a 0/1 string");
        raw.w.push_back(ch - '0');
      }
      have_w = true;
    } else {
      throw FormatError("structure: unknown header key '" + key + "'");
    }
  }
  if (!have_c || !have_l || !have_w) throw FormatError("structure: header needs c, lambda and w");
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind != "L" && kind != "T") throw FormatError("structure: block line must start with L or T");
    std::vector<int> vs;
    for (std::string tok; ls >> tok;) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw FormatError("");
        vs.push_back(v);
      } catch (const std::exception&) {
        throw FormatError("structure: bad vertex '" + tok + "'");
      }
    }
    int expect = raw.blocks.size() < raw.w.size() ? raw.w[raw.blocks.size()] : -1;
    if (expect != (kind == "T" ? 1 : 0)) throw FormatError("structure: block kinds disagree with w");
    raw.blocks.push_back(std::move(vs));
  }
  if (raw.blocks.size() != raw.w.size()) throw FormatError("structure: block count differs from |w|");
  return raw;
}

RawStructure load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_structure(in);
}

}  // namespace tourn::smooth
