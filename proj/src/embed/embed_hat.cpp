#include "tourn/core/errors.hpp"
#include "tourn/embed.hpp"

#include <algorithm>

namespace tourn::embed {

namespace {

class Embedder {
 public:
  Embedder(const Tournament& t, const smooth::SmoothStructure& chi, const hat::HatDigraph& hd,
           const hat::Signature& sig, const EmbedOptions& opt)
      : t_(t), chi_(chi), hd_(hd), sig_(sig), opt_(opt) {
    const int n = hd.size();
    f_.assign(static_cast<std::size_t>(n), -1);
    pos_couple_.assign(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < static_cast<int>(hd.couples.size()); ++k)
      for (int a : hd.couple_vertices(k)) pos_couple_[hd.order.position(a)] = k;
    for (int p = 0; p < n; ++p)
      if (pos_couple_[p] < 0) throw StructureError("hat vertex outside every couple");
    for (const auto& b : chi.blocks()) {
      std::vector<int> live;
      if (b.transitive) {
        for (const auto& run : b.runs) live.insert(live.end(), run.begin(), run.end());
      } else {
        live = b.vertices;
        std::sort(live.begin(), live.end());
      }
      alive_.push_back(std::move(live));
    }
  }

  bool run() { return couple(static_cast<int>(hd_.couples.size()) - 1); }

  std::vector<int> map() const { return f_; }
  const std::vector<StepRecord>& steps() const { return steps_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int block_of(int a) const { return sig_.slot[hd_.order.position(a)].first; }
  int run_of(int a) const { return sig_.slot[hd_.order.position(a)].second; }

  // Live candidates for hat vertex a: its block's survivors in its run.
  std::vector<int> candidates(int a) const {
    const int b = block_of(a), r = run_of(a);
    if (r == 0) return alive_[b];
    std::vector<int> out;
    for (int v : alive_[b])
      if (chi_.locate(v)->run == r) out.push_back(v);
    return out;
  }

  bool consistent(int a, int c) const {
    for (int b = 0; b < hd_.size(); ++b) {
      if (f_[b] < 0) continue;
      if (f_[b] == c) return false;
      if (hd_.graph.has_arc(a, b) && !t_.arc(c, f_[b])) return false;
      if (hd_.graph.has_arc(b, a) && !t_.arc(f_[b], c)) return false;
    }
    return true;
  }

  // Every unplaced vertex of the couple must keep a compatible candidate.
  bool lookahead(const std::vector<int>& seq, std::size_t from) const {
    for (std::size_t i = from; i < seq.size(); ++i) {
      bool any = false;
      for (int c : cand_[i])
        if (consistent(seq[i], c)) {
          any = true;
          break;
        }
      if (!any) return false;
    }
    return true;
  }

  // Placement order of couple k: x, y, u, v, z, then the star centre and leaves.
  std::vector<int> sequence(int k) const {
    std::vector<int> seq;
    const auto& cp = hd_.couples[k];
    if (cp.boat >= 0) {
      const auto& b = hd_.boats[cp.boat];
      seq = {b.roles.x, b.roles.y, b.roles.u, b.roles.v, b.z};
    }
    if (cp.star >= 0) {
      const auto& s = hd_.stars[cp.star].roles;
      seq.push_back(s.center);
      seq.insert(seq.end(), s.leaves.begin(), s.leaves.end());
    }
    return seq;
  }

  int star_case(int k) const {
    const auto& cp = hd_.couples[k];
    if (cp.star < 0) return 0;
    const auto& leaves = hd_.stars[cp.star].roles.leaves;
    const int f = block_of(leaves.front());
    for (int leaf : leaves)
      if (block_of(leaf) != f) throw StructureError("star leaves spread over several blocks");
    if (block_of(hd_.stars[cp.star].roles.center) == f) throw StructureError("star centre shares its leaves' block");
    if (cp.boat < 0) return 2;
    return block_of(hd_.boats[cp.boat].roles.u) == f ? 1 : 2;
  }

  bool couple(int k) {
    if (k < 0) return true;
    auto seq = sequence(k);
    auto saved = cand_;
    cand_.clear();
    for (int a : seq) cand_.push_back(candidates(a));
    bool ok = place(k, seq, 0);
    cand_ = std::move(saved);
    return ok;
  }

  bool place(int k, const std::vector<int>& seq, std::size_t i) {
    if (i == seq.size()) return finish(k, seq);
    for (int c : cand_[i]) {
      if (++nodes_ > opt_.node_budget) throw ResourceError("embed_hat: node budget exhausted");
      if (!consistent(seq[i], c)) continue;
      f_[seq[i]] = c;
      if (lookahead(seq, i + 1) && place(k, seq, i + 1)) return true;
      f_[seq[i]] = -1;
    }
    return false;
  }

  // Restricts every block that still has positions to fill, records the
  // step and recurses into couple k - 1.
  bool finish(int k, const std::vector<int>& seq) {
    StepRecord rec;
    rec.couple = k;
    rec.star_case = star_case(k);
    for (int a : seq) rec.placed.push_back(f_[a]);

    std::vector<char> pending(alive_.size(), 0);
    for (int p = 0; p < hd_.size(); ++p)
      if (pos_couple_[p] < k) pending[sig_.slot[p].first] = 1;

    auto saved = alive_;
    for (std::size_t j = 0; j < alive_.size(); ++j) {
      rec.sizes_before.push_back(static_cast<int>(alive_[j].size()));
      if (!pending[j]) {
        rec.sizes_after.push_back(rec.sizes_before.back());
        rec.bounds.push_back(rec.sizes_before.back());
        continue;
      }
      std::vector<int> outside;
      for (int y : rec.placed)
        if (chi_.locate(y)->block != static_cast<int>(j)) outside.push_back(y);
      auto r = smooth::restrict_block(t_, chi_, static_cast<int>(j), outside, alive_[j]);
      alive_[j] = std::move(r.vertices);
      rec.sizes_after.push_back(static_cast<int>(alive_[j].size()));
      rec.bounds.push_back(r.bound);
    }
    rec.lambda_after = measure();
    steps_.push_back(rec);
    if (couple(k - 1)) return true;
    steps_.pop_back();
    alive_ = std::move(saved);
    return false;
  }

  // Smoothness of the surviving blocks, or -1 when one of them is empty.
  // Runs play no part in the densities, so none are attached.
  Rational measure() const {
    std::vector<smooth::Block> blocks;
    for (std::size_t j = 0; j < alive_.size(); ++j) {
      if (alive_[j].empty()) return -1;
      blocks.push_back({chi_.blocks()[j].transitive, alive_[j], {}});
    }
    return smooth::smoothness_lambda(t_, smooth::SmoothStructure(std::move(blocks), chi_.c(), chi_.lambda()));
  }

  const Tournament& t_;
  const smooth::SmoothStructure& chi_;
  const hat::HatDigraph& hd_;
  const hat::Signature& sig_;
  const EmbedOptions& opt_;
  std::vector<int> f_;
  std::vector<int> pos_couple_;
  std::vector<std::vector<int>> alive_;
  std::vector<std::vector<int>> cand_;
  std::vector<StepRecord> steps_;
  std::uint64_t nodes_ = 0;
};

void check_divisibility(const smooth::SmoothStructure& chi, hat::Mode mode) {
  int d = mode == hat::Mode::Flotilla ? 6 : (mode == hat::Mode::FlotillaGalaxy ? 1 : 3);
  for (int j = 0; j < chi.size(); ++j)
    if (chi.blocks()[j].vertices.size() % static_cast<std::size_t>(d) != 0)
      throw DomainError("embed_hat: block " + std::to_string(j) + " size is not divisible by " + std::to_string(d));
}

}  // namespace

EmbedResult embed_hat(const Tournament& t, const smooth::SmoothStructure& chi, const hat::HatDigraph& hd,
                      hat::Mode mode, const EmbedOptions& options) {
  const hat::Signature sig = hat::signature(hd, mode);
  if (chi.w() != sig.s_c) throw DomainError("embed_hat: w of the structure differs from the signature");
  if (chi.delta() != sig.delta) throw DomainError("embed_hat: run counts differ from the signature");
  check_divisibility(chi, mode);
  for (int p = 0; p < hd.size(); ++p) {
    auto s = chi.slot_of(p + 1);
    if (s.block != sig.slot[p].first || s.run != sig.slot[p].second)
      throw StructureError("embed_hat: structure positions disagree with the signature");
  }
  for (const auto& b : chi.blocks())
    for (int v : b.vertices)
      if (v < 0 || v >= t.size()) throw DomainError("embed_hat: structure vertex outside the host");

  Embedder e(t, chi, hd, sig, options);
  EmbedResult out;
  bool found = e.run();
  out.nodes = e.nodes();
  if (!found) return out;
  out.steps = e.steps();
  out.embedding = make_embedding(hd, e.map());
  if (auto wc = is_well_contained(t, hd, chi, out.embedding->f); !wc)
    throw StructureError("embed_hat produced an embedding that is not well-contained: " + wc.violation);
  return out;
}

}  // namespace tourn::embed
