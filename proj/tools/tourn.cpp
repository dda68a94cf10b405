// Command-line front end for the tournament engine.

#include "tourn/core/errors.hpp"
#include "tourn/core/text_io.hpp"
#include "tourn/embed.hpp"
#include "tourn/harness.hpp"
#include "tourn/hat.hpp"
#include "tourn/patterns.hpp"
#include "tourn/smooth.hpp"
#include "tourn/transitive.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace tourn;
using nlohmann::json;

namespace {

struct Global {
  std::uint64_t seed = 1;
  int threads = 1;
  int cap = -1;  // -1: use the environment or the built-in default
};

// Explicit --cap wins, then the named environment variable, then `fallback`.
long long cap_for(const Global& g, const char* env, long long fallback) {
  if (g.cap >= 0) return g.cap;
  if (const char* v = std::getenv(env)) {
    char* end = nullptr;
    long long x = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0' || x < 0) throw DomainError(std::string(env) + " must be a non-negative integer");
    return x;
  }
  return fallback;
}

// Reports show vertex labels 1-based; files keep them 0-based.
std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + 1);
  return s;
}

std::vector<int> one_based(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

std::string bits(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += static_cast<char>('0' + x);
  return s;
}

json component_json(const patterns::Component& c) {
  json j{{"kind", patterns::to_string(c.cls.kind)}, {"vertices", one_based(c.vertices)}};
  if (c.cls.star) j["roles"] = {{"center", c.cls.star->center + 1}, {"leaves", one_based(c.cls.star->leaves)}};
  if (c.cls.boat)
    j["roles"] = {{"x", c.cls.boat->x + 1}, {"u", c.cls.boat->u + 1}, {"v", c.cls.boat->v + 1}, {"y", c.cls.boat->y + 1}};
  return j;
}

int cmd_tr(const Global& g, const std::string& path) {
  Tournament t = load_trn(path);
  auto r = transitive::tr(t, static_cast<int>(cap_for(g, "TOURN_TR_CAP", transitive::kDefaultTableCap)));
  std::cout << "tr " << r.size << "\nwitness " << join(r.witness) << '\n';
  return 0;
}

int cmd_critical(const Global& g, const std::string& path, const std::string& eps) {
  Tournament t = load_trn(path);
  auto r = transitive::is_epsilon_critical(t, parse_rational(eps),
                                           static_cast<int>(cap_for(g, "TOURN_TR_CAP", transitive::kDefaultTableCap)));
  std::cout << (r.critical ? "critical" : "not-critical") << "\ntr " << r.tr_whole << '\n';
  if (r.whole_not_below) std::cout << "reason tr(T) >= n^eps\n";
  if (r.violating_subset) std::cout << "violating-subset " << join(*r.violating_subset) << '\n';
  return r.critical ? 0 : 1;
}

int cmd_recognize(const Global& g, const std::string& path, const std::string& ord_path) {
  Tournament t = load_trn(path);
  std::optional<Ordering> order;
  if (!ord_path.empty()) {
    order = load_ordering(ord_path);
  } else {
    order = patterns::find_flotilla_galaxy_ordering(
        t, static_cast<int>(cap_for(g, "TOURN_ORDER_CAP", patterns::kDefaultOrderingCap)), g.threads);
    if (!order) {
      std::cout << json{{"flavor", patterns::to_string(patterns::Flavor::NotRecognized)}, {"found", false}}.dump()
                << '\n';
      return 1;
    }
  }
  auto d = patterns::decompose(t, *order);
  for (const auto& c : d.components) std::cout << component_json(c).dump() << '\n';
  json summary{{"flavor", patterns::to_string(d.flavor)}, {"regular", d.regular}, {"ordering", one_based(order->perm())}};
  if (!d.violation.empty()) summary["violation"] = d.violation;
  std::cout << summary.dump() << '\n';
  return d.recognized() ? 0 : 1;
}

int cmd_hat(const std::string& trn, const std::string& ord, const std::string& mode) {
  auto hd = hat::hat(load_trn(trn), load_ordering(ord));
  auto sig = hat::signature(hd, hat::parse_mode(mode));
  std::cout << hat::to_text(hd);
  std::cout << "s " << bits(sig.s) << "\ns_c " << bits(sig.s_c) << "\ndelta ";
  for (std::size_t i = 0; i < sig.delta.size(); ++i) std::cout << (i ? " " : "") << sig.delta[i];
  std::cout << '\n';
  // The pairing of boats with stars is a convention of this tool, so say which.
  std::cout << "pairing boats-by-first-interior stars-by-first-leaf\n";
  for (std::size_t k = 0; k < hd.couples.size(); ++k) {
    const auto& cp = hd.couples[k];
    std::cout << "couple " << k + 1;
    if (cp.boat >= 0) {
      const auto& b = hd.boats[cp.boat];
      std::cout << " boat " << (b.left ? "left " : "right ")
                << join({b.roles.x, b.roles.u, b.roles.v, b.roles.y}) << " z" << cp.boat + 1;
    }
    if (cp.star >= 0) {
      const auto& st = hd.stars[cp.star];
      std::cout << " star " << (st.left ? "left " : "right ") << st.roles.center + 1 << ';'
                << join(st.roles.leaves);
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_embed(const Global& g, const std::string& trn, const std::string& chi_path, const std::string& h_trn,
              const std::string& h_ord, const std::string& mode_text) {
  Tournament t = load_trn(trn);
  Tournament h = load_trn(h_trn);
  auto hd = hat::hat(h, load_ordering(h_ord));
  auto mode = hat::parse_mode(mode_text);
  auto sig = hat::signature(hd, mode);
  auto raw = smooth::load_structure(chi_path);
  auto chi = smooth::make_structure(t, raw.blocks, sig, raw.c, raw.lambda);
  auto report = smooth::verify_smooth(t, chi);
  if (!report.pass) {
    std::cout << "structure not smooth: " << report.violations.front().describe() << '\n';
    return 1;
  }
  embed::EmbedOptions opt;
  opt.node_budget = static_cast<std::uint64_t>(cap_for(g, "TOURN_NODE_BUDGET", 50'000'000));
  auto r = embed::embed_hat(t, chi, hd, mode, opt);
  if (!r.embedding) {
    std::cout << "not-found nodes " << r.nodes << '\n';
    return 1;
  }
  // Hat labels print as v1..vh for H and z1..zl for the added vertices.
  std::cout << "embedding";
  const int h_size = h.size();
  for (int a = 0; a < static_cast<int>(r.embedding->f.size()); ++a)
    std::cout << ' ' << (a < h_size ? 'v' : 'z') << (a < h_size ? a + 1 : a - h_size + 1) << "->"
              << r.embedding->f[a] + 1;
  std::cout << '\n';
  auto x = embed::extract_copy(t, *r.embedding, hd);
  for (std::size_t k = 0; k < x.cases.size(); ++k)
    std::cout << "boat " << k + 1 << ' ' << embed::to_string(x.cases[k]) << ' ' << embed::to_string(x.orderings[k]) << '\n';
  std::cout << "copy " << join(x.vertices) << '\n';
  auto w = embed::certify(t, x, h);
  std::cout << (w ? "certified " + join(*w) : std::string("uncertified")) << '\n';
  return w ? 0 : 1;
}

int cmd_contains(const Global& g, const std::string& trn, const std::string& h_trn) {
  auto w = embed::contains(load_trn(trn), load_trn(h_trn), g.threads);
  std::cout << (w ? join(*w) : std::string("none")) << '\n';
  return 0;
}

harness::Caps caps_from(const Global& g) {
  auto caps = harness::Caps::from_env({});
  if (g.cap >= 0) caps.labeled_max_n = caps.canonical_max_n = caps.sampling_max_n = g.cap;
  return caps;
}

int cmd_enumerate(const Global& g, int n, const std::string& mode, bool count_only) {
  std::uint64_t count = 0;
  harness::for_each_tournament(
      n, harness::parse_enum_mode(mode),
      [&](const Tournament& t) {
        ++count;
        if (!count_only) std::cout << t.pair_bits() << '\n';
      },
      caps_from(g));
  if (count_only) std::cout << count << '\n';
  return 0;
}

int cmd_gen(const Global& g, int n, const std::string& fixture_h, const std::string& fixture_ord, int block,
            const std::string& noise, const std::string& struct_out, const std::string& out_path) {
  Tournament t;
  if (fixture_h.empty()) {
    t = harness::random_tournament(n, g.seed);
  } else {
    auto hd = hat::hat(load_trn(fixture_h), load_ordering(fixture_ord));
    auto sig = hat::signature(hd);
    smooth::FixtureOptions opt;
    opt.seed = g.seed;
    opt.plant = &hd;
    opt.lambda_noise = parse_rational(noise);
    auto fx = smooth::blowup_fixture(sig, block, opt);
    t = fx.t;
    if (!struct_out.empty()) {
      std::ofstream s(struct_out);
      if (!s) throw FormatError("cannot write " + struct_out);
      smooth::write_structure(s, fx.chi);
    }
  }
  if (out_path.empty()) {
    write_trn(std::cout, t);
  } else {
    std::ofstream o(out_path);
    if (!o) throw FormatError("cannot write " + out_path);
    write_trn(o, t);
  }
  return 0;
}

int cmd_curve(const Global& g, const std::string& h_trn, int from, int to, const std::string& mode,
              const std::vector<std::string>& eps, std::uint64_t samples, const std::string& svg) {
  harness::CensusOptions o;
  o.mode = harness::parse_census_mode(mode);
  for (const auto& e : eps) o.eps.push_back(parse_rational(e));
  o.threads = g.threads;
  o.seed = g.seed;
  o.samples = samples;
  o.caps = caps_from(g);
  Tournament h = load_trn(h_trn);
  auto rows = harness::ehc_curve(h, from, to, o);
  const std::string id = std::filesystem::path(h_trn).stem().string();
  harness::write_csv(std::cout, rows, o, id);
  if (!svg.empty()) {
    std::ofstream s(svg);
    if (!s) throw FormatError("cannot write " + svg);
    harness::write_svg(s, rows, o, id);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournament engine: transitive subtournaments, flotilla-galaxy patterns, embeddings, census"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "seed for generators");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", g.cap, "size cap or search budget for the chosen subcommand");

  std::string a, b, c, d, mode = "galaxy", eps_text, ord, chi;
  int n = 0, from = 1, to = 6, block = 12;
  bool count_only = false;
  std::string fixture_h, fixture_ord, noise = "0", struct_out, out_path, svg;
  std::vector<std::string> eps_list;
  std::uint64_t samples = 1000;
  std::string census_mode = "labeled";

  auto* tr = app.add_subcommand("tr", "maximum transitive subtournament");
  tr->add_option("file", a)->required();
  auto* crit = app.add_subcommand("critical", "epsilon-criticality check");
  crit->add_option("file", a)->required();
  crit->add_option("--eps", eps_text, "exponent p/q")->required();
  auto* rec = app.add_subcommand("recognize", "flotilla-galaxy decomposition as JSON lines");
  rec->add_option("file", a)->required();
  rec->add_option("--ordering", ord, "ordering file; searched for when omitted");
  auto* hat_cmd = app.add_subcommand("hat", "hatted digraph and signature");
  hat_cmd->add_option("file", a)->required();
  hat_cmd->add_option("ordering", b)->required();
  hat_cmd->add_option("--mode", mode, "galaxy | flotilla | left | right");
  auto* emb = app.add_subcommand("embed", "embed the hatted digraph into a smooth structure");
  emb->add_option("host", a)->required();
  emb->add_option("structure", chi)->required();
  emb->add_option("pattern", c)->required();
  emb->add_option("ordering", d)->required();
  emb->add_option("--mode", mode, "galaxy | flotilla | left | right");
  auto* cont = app.add_subcommand("contains", "find a copy of H in T");
  cont->add_option("host", a)->required();
  cont->add_option("pattern", b)->required();
  auto* en = app.add_subcommand("enumerate", "list tournaments as pair bits");
  en->add_option("n", n)->required();
  en->add_option("--mode", census_mode, "labeled | canonical");
  en->add_flag("--count", count_only, "print only the number of tournaments");
  auto* gen = app.add_subcommand("gen", "random tournament or planted fixture (TRN)");
  gen->add_option("n", n, "size of a random tournament");
  gen->add_option("--fixture", fixture_h, "pattern H whose hatted digraph is planted");
  gen->add_option("--fixture-ordering", fixture_ord, "flotilla-galaxy ordering of H");
  gen->add_option("--block", block, "fixture block size");
  gen->add_option("--noise", noise, "fixture noise lambda p/q");
  gen->add_option("--struct-out", struct_out, "write the fixture's structure here");
  gen->add_option("-o,--output", out_path, "TRN output path (stdout by default)");
  auto* curve = app.add_subcommand("curve", "min tr over H-free tournaments, CSV");
  curve->add_option("pattern", a)->required();
  curve->add_option("--from", from);
  curve->add_option("--to", to);
  curve->add_option("--mode", census_mode, "labeled | canonical | sampling");
  curve->add_option("--eps", eps_list, "exponents p/q")->delimiter(',');
  curve->add_option("--samples", samples, "sampling mode sample count");
  curve->add_option("--svg", svg, "also write an SVG plot");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*tr) return cmd_tr(g, a);
    if (*crit) return cmd_critical(g, a, eps_text);
    if (*rec) return cmd_recognize(g, a, ord);
    if (*hat_cmd) return cmd_hat(a, b, mode);
    if (*emb) return cmd_embed(g, a, chi, c, d, mode);
    if (*cont) return cmd_contains(g, a, b);
    if (*en) return cmd_enumerate(g, n, census_mode, count_only);
    if (*gen) {
      if (!fixture_h.empty() && fixture_ord.empty()) throw DomainError("--fixture needs --fixture-ordering");
      return cmd_gen(g, n, fixture_h, fixture_ord, block, noise, struct_out, out_path);
    }
    if (*curve) return cmd_curve(g, a, from, to, census_mode, eps_list, samples, svg);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 4;
  } catch (const StructureError& e) {
    std::cerr << "structure error: " << e.what() << '\n';
    return 5;
  }
  return 0;
}
