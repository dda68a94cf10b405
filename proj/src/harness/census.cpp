#include "tourn/core/errors.hpp"
#include "tourn/core/prng.hpp"
#include "tourn/embed.hpp"
#include "tourn/harness.hpp"
#include "tourn/transitive.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <ostream>
#include <thread>

namespace tourn::harness {

const char* to_string(CensusMode m) {
  switch (m) {
    case CensusMode::Labeled: return "labeled";
    case CensusMode::Canonical: return "canonical";
    case CensusMode::Sampling: return "sampling";
  }
  return "?";
}

CensusMode parse_census_mode(const std::string& text) {
  if (text == "labeled") return CensusMode::Labeled;
  if (text == "canonical") return CensusMode::Canonical;
  if (text == "sampling") return CensusMode::Sampling;
  throw DomainError("unknown census mode '" + text + "'");
}

int eps_sign(int tr, int n, const Rational& eps) {
  if (eps < 0) throw DomainError("eps must be non-negative");
  if (eps == 0 || n <= 1) return tr > 1 ? 1 : (tr == 1 ? 0 : -1);
  return -compare_power(n, eps, tr);
}

namespace {

struct Tally {
  std::uint64_t examined = 0, hfree = 0;
  int min_tr = -1;
  std::string witness;

  void merge(const Tally& o) {
    examined += o.examined;
    hfree += o.hfree;
    if (o.min_tr < 0) return;
    if (min_tr < 0 || o.min_tr < min_tr) {
      min_tr = o.min_tr;
      witness = o.witness;
    } else if (o.min_tr == min_tr && o.witness < witness) {
      witness = o.witness;
    }
  }

  // Records t, whose canonical string is computed only when it can matter.
  void offer(const Tournament& t, const Tournament& h, const std::string* canon) {
    ++examined;
    if (embed::contains(t, h)) return;
    ++hfree;
    const int v = transitive::tr(t).size;
    if (min_tr >= 0 && v > min_tr) return;
    std::string c = canon ? *canon : canonical_bits(t);
    if (min_tr < 0 || v < min_tr || c < witness) {
      min_tr = v;
      witness = std::move(c);
    }
  }
};

// Runs `shards` work items over `threads` workers and merges the tallies in
// shard order, so the reduction is independent of scheduling.
template <class Work>
Tally sharded(std::size_t shards, int threads, Work work) {
  std::vector<Tally> parts(shards);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    try {
      for (std::size_t s = next++; s < shards; s = next++) work(s, parts[s]);
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  Tally all;
  for (const auto& p : parts) all.merge(p);
  return all;
}

Tally labeled(int n, const Tournament& h, const CensusOptions& o) {
  if (n > o.caps.labeled_max_n)
    throw ResourceError("labeled census of n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(o.caps.labeled_max_n));
  const std::size_t p = pair_count(n);
  const int prefix = static_cast<int>(std::min<std::size_t>(p, 6));
  const std::uint64_t per = std::uint64_t{1} << (p - static_cast<std::size_t>(prefix));
  return sharded(std::size_t{1} << prefix, o.threads, [&](std::size_t s, Tally& t) {
    std::string bits(p, '0');
    for (std::uint64_t low = 0; low < per; ++low) {
      std::uint64_t mask = (static_cast<std::uint64_t>(s) * per) + low;
      for (std::size_t k = 0; k < p; ++k) bits[k] = ((mask >> (p - 1 - k)) & 1u) ? '1' : '0';
      t.offer(Tournament::from_pair_bits(n, bits), h, nullptr);
    }
  });
}

Tally canonical(int n, const Tournament& h, const CensusOptions& o) {
  const auto classes = canonical_classes(n, o.caps, o.threads);
  return sharded(classes.size(), o.threads, [&](std::size_t s, Tally& t) {
    t.offer(Tournament::from_pair_bits(n, classes[s]), h, &classes[s]);
  });
}

Tally sampling(int n, const Tournament& h, const CensusOptions& o) {
  if (n > o.caps.sampling_max_n)
    throw ResourceError("sampling census of n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(o.caps.sampling_max_n));
  const CounterRng seeds(o.seed, static_cast<std::uint64_t>(n));
  constexpr std::uint64_t kChunk = 64;
  const std::size_t shards = static_cast<std::size_t>((o.samples + kChunk - 1) / kChunk);
  return sharded(shards, o.threads, [&](std::size_t s, Tally& t) {
    const std::uint64_t end = std::min<std::uint64_t>(o.samples, (s + 1) * kChunk);
    for (std::uint64_t i = s * kChunk; i < end; ++i) t.offer(random_tournament(n, seeds.at(i)), h, nullptr);
  });
}

}  // namespace

std::vector<CensusRow> ehc_curve(const Tournament& h, int n_min, int n_max, const CensusOptions& options) {
  if (n_min < 0 || n_max < n_min) throw DomainError("census: bad n range");
  if (options.threads < 1) throw DomainError("census: threads must be positive");
  std::vector<CensusRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    Tally t;
    switch (options.mode) {
      case CensusMode::Labeled: t = labeled(n, h, options); break;
      case CensusMode::Canonical: t = canonical(n, h, options); break;
      case CensusMode::Sampling: t = sampling(n, h, options); break;
    }
    CensusRow r;
    r.n = n;
    r.examined = t.examined;
    r.hfree = t.hfree;
    r.min_tr = t.min_tr;
    r.witness = t.witness;
    if (r.min_tr >= 0)
      for (const auto& e : options.eps) r.eps_sign.push_back(eps_sign(r.min_tr, n, e));
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<CensusRow>& rows, const CensusOptions& options,
               const std::string& pattern_id) {
  out << "# ehc-census v1 pattern=" << pattern_id << " mode=" << to_string(options.mode);
  if (options.mode == CensusMode::Sampling)
    out << " empirical=1 samples=" << options.samples << " seed=" << options.seed << " prng=" << CounterRng::kName;
  out << '\n' << "n,examined,hfree,min_tr,witness_trn";
  for (const auto& e : options.eps) out << ",eps_" << tourn::to_string(e);
  out << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.examined << ',' << r.hfree << ',';
    if (r.min_tr >= 0) {
      out << r.min_tr << ',' << r.witness;
    } else {
      out << "NA,NA";
    }
    for (std::size_t i = 0; i < options.eps.size(); ++i) {
      out << ',';
      if (i < r.eps_sign.size()) {
        out << r.eps_sign[i];
      } else {
        out << "NA";
      }
    }
    out << '\n';
  }
}

void write_svg(std::ostream& out, const std::vector<CensusRow>& rows, const CensusOptions& options,
               const std::string& pattern_id) {
  constexpr double W = 480, H = 320, M = 40;
  int n_lo = rows.empty() ? 0 : rows.front().n, n_hi = rows.empty() ? 1 : rows.back().n;
  if (n_hi == n_lo) ++n_hi;
  double y_hi = n_hi;
  auto px = [&](double n) { return M + (n - n_lo) / (n_hi - n_lo) * (W - 2 * M); };
  auto py = [&](double v) { return H - M - v / y_hi * (H - 2 * M); };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  out << "<title>min tr over " << pattern_id << "-free tournaments (" << to_string(options.mode) << ")</title>\n";
  out << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\"" << H - M
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\"" << H - M << "\" stroke=\"black\"/>\n";
  for (const auto& e : options.eps) {
    double ev = e.convert_to<double>();
    out << "<polyline fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\" points=\"";
    for (int n = n_lo; n <= n_hi; ++n) out << px(n) << ',' << py(std::pow(std::max(n, 1), ev)) << ' ';
    out << "\"><title>n^" << tourn::to_string(e) << "</title></polyline>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (const auto& r : rows)
    if (r.min_tr >= 0) out << px(r.n) << ',' << py(r.min_tr) << ' ';
  out << "\"/>\n";
  for (const auto& r : rows) {
    if (r.min_tr < 0) continue;
    out << "<circle cx=\"" << px(r.n) << "\" cy=\"" << py(r.min_tr) << "\" r=\"3\" fill=\"steelblue\"/>\n";
    out << "<text x=\"" << px(r.n) << "\" y=\"" << H - M + 14 << "\" font-size=\"10\" text-anchor=\"middle\">" << r.n
        << "</text>\n";
  }
  out << "</svg>\n";
}

bool recheck_row(const CensusRow& row, const Tournament& h) {
  if (row.min_tr < 0) return row.witness.empty() && row.hfree == 0;
  Tournament w = Tournament::from_pair_bits(row.n, row.witness);
  return !embed::contains(w, h) && transitive::tr(w).size == row.min_tr && canonical_bits(w) == row.witness;
}

}  // namespace tourn::harness
