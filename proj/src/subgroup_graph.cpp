#include "linvol/subgroup_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace linvol {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
};

}  // namespace

// Worklist folding with union by adjacency size; arrows are kept in both
// directions and stale endpoints resolve lazily through the union-find, so
// the whole fold is near-linear in the total generator length.
SubgroupGraph SubgroupGraph::fold(std::span<const RWord> generators, int alphabetSize) {
  if (alphabetSize <= 0 || alphabetSize > 26) throw WordError("alphabet size must be in 1..26");

  std::vector<std::vector<std::pair<int, int>>> adj(1);  // (slot, target)
  auto newVertex = [&]() {
    adj.emplace_back();
    return static_cast<int>(adj.size()) - 1;
  };
  const auto slotFor = [alphabetSize](SignedLetter x) {
    return x.pos ? static_cast<int>(x.base) : alphabetSize + static_cast<int>(x.base);
  };
  for (const RWord& g : generators) {
    if (g.empty()) continue;
    for (int i = 0; i < g.size(); ++i)
      if (g.letter(i).base >= alphabetSize)
        throw WordError("generator letter outside the alphabet");
    int prev = 0;
    for (int i = 0; i < g.size(); ++i) {
      const int next = (i + 1 == g.size()) ? 0 : newVertex();
      const SignedLetter x = g.letter(i);
      adj[static_cast<size_t>(prev)].push_back({slotFor(x), next});
      adj[static_cast<size_t>(next)].push_back({slotFor(x.inverse()), prev});
      prev = next;
    }
  }

  UnionFind uf(adj.size());
  std::vector<int> queue;
  queue.reserve(adj.size());
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (uf.find(v) != v) continue;
    auto& arrows = adj[static_cast<size_t>(v)];
    for (auto& [slot, t] : arrows) t = uf.find(t);
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
    int mergeA = -1, mergeB = -1;
    for (size_t i = 0; i + 1 < arrows.size(); ++i) {
      if (arrows[i].first == arrows[i + 1].first) {
        mergeA = arrows[i].second;
        mergeB = arrows[i + 1].second;
        break;
      }
    }
    if (mergeA < 0) continue;
    int a = uf.find(mergeA), b = uf.find(mergeB);
    if (a != b) {
      if (adj[static_cast<size_t>(a)].size() < adj[static_cast<size_t>(b)].size())
        std::swap(a, b);
      uf.parent[static_cast<size_t>(b)] = a;
      auto& into = adj[static_cast<size_t>(a)];
      auto& from = adj[static_cast<size_t>(b)];
      into.insert(into.end(), from.begin(), from.end());
      from.clear();
      from.shrink_to_fit();
      queue.push_back(a);
    }
    queue.push_back(uf.find(v));  // v may still hold duplicate labels
  }

  // Compact representatives and fill the slot table.
  std::map<int, int> id;
  id[uf.find(0)] = 0;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if (uf.find(v) == v) id.try_emplace(v, static_cast<int>(id.size()));
  SubgroupGraph g;
  g.k_ = alphabetSize;
  g.out_.assign(id.size(), std::vector<int>(static_cast<size_t>(2 * alphabetSize), -1));
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (uf.find(v) != v) continue;
    const int s = id[v];
    for (const auto& [slot, t] : adj[static_cast<size_t>(v)])
      g.out_[static_cast<size_t>(s)][static_cast<size_t>(slot)] = id[uf.find(t)];
  }
  g.canonicalize();
  return g;
}

void SubgroupGraph::canonicalize() {
  const size_t n = out_.size();
  std::vector<int> order(n, -1);
  int next = 0;
  std::queue<int> bfs;
  order[0] = next++;
  bfs.push(0);
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (size_t s = 0; s < static_cast<size_t>(2 * k_); ++s) {
      const int w = out_[static_cast<size_t>(v)][s];
      if (w >= 0 && order[static_cast<size_t>(w)] < 0) {
        order[static_cast<size_t>(w)] = next++;
        bfs.push(w);
      }
    }
  }
  if (next != static_cast<int>(n))
    throw std::logic_error("subgroup graph is not connected");
  std::vector<std::vector<int>> renum(n, std::vector<int>(static_cast<size_t>(2 * k_), -1));
  for (size_t v = 0; v < n; ++v)
    for (size_t s = 0; s < static_cast<size_t>(2 * k_); ++s)
      if (out_[v][s] >= 0)
        renum[static_cast<size_t>(order[v])][s] = order[static_cast<size_t>(out_[v][s])];
  out_ = std::move(renum);
}

SubgroupGraph SubgroupGraph::bouquet(int alphabetSize) {
  std::vector<RWord> gens;
  for (int b = 0; b < alphabetSize; ++b)
    gens.push_back(RWord::single({static_cast<uint8_t>(b), true}));
  return fold(gens, alphabetSize);
}

SubgroupGraph SubgroupGraph::fromAction(const std::vector<std::vector<int>>& action) {
  const int k = static_cast<int>(action.size());
  if (k == 0 || action[0].empty()) throw WordError("empty action");
  const size_t d = action[0].size();
  SubgroupGraph g;
  g.k_ = k;
  g.out_.assign(d, std::vector<int>(static_cast<size_t>(2 * k), -1));
  for (int b = 0; b < k; ++b) {
    if (action[static_cast<size_t>(b)].size() != d) throw WordError("ragged action");
    std::vector<bool> hit(d, false);
    for (size_t v = 0; v < d; ++v) {
      const int w = action[static_cast<size_t>(b)][v];
      if (w < 0 || static_cast<size_t>(w) >= d || hit[static_cast<size_t>(w)])
        throw WordError("letter action is not a permutation");
      hit[static_cast<size_t>(w)] = true;
      g.out_[v][static_cast<size_t>(b)] = w;
      g.out_[static_cast<size_t>(w)][static_cast<size_t>(k + b)] = static_cast<int>(v);
    }
  }
  g.canonicalize();  // also rejects intransitive actions (disconnected graph)
  return g;
}

std::optional<int> SubgroupGraph::step(int v, SignedLetter x) const {
  if (v < 0 || v >= vertexCount() || x.base >= k_) return std::nullopt;
  const int w = out_[static_cast<size_t>(v)][slotOf(x)];
  if (w < 0) return std::nullopt;
  return w;
}

std::optional<int> SubgroupGraph::trace(int v, const RWord& w) const {
  std::optional<int> cur = v;
  for (int i = 0; i < w.size() && cur; ++i) cur = step(*cur, w.letter(i));
  return cur;
}

int SubgroupGraph::edgeCount() const {
  int e = 0;
  for (const auto& row : out_)
    for (int b = 0; b < k_; ++b)
      if (row[static_cast<size_t>(b)] >= 0) ++e;
  return e;
}

bool SubgroupGraph::complete() const {
  for (const auto& row : out_)
    for (int v : row)
      if (v < 0) return false;
  return true;
}

std::optional<int> SubgroupGraph::index() const {
  if (!complete()) return std::nullopt;
  return vertexCount();
}

std::vector<RWord> SubgroupGraph::basisWords() const {
  const size_t n = out_.size();
  std::vector<RWord> path(n);
  std::vector<bool> seen(n, false);
  std::set<std::pair<int, size_t>> treeArrow;
  std::queue<int> bfs;
  seen[0] = true;
  bfs.push(0);
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (size_t s = 0; s < static_cast<size_t>(2 * k_); ++s) {
      const int w = out_[static_cast<size_t>(v)][s];
      if (w < 0 || seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = true;
      const SignedLetter x = letterOfSlot(s);
      path[static_cast<size_t>(w)] = path[static_cast<size_t>(v)] * RWord::single(x);
      treeArrow.insert({v, s});
      treeArrow.insert({w, slotOf(x.inverse())});
      bfs.push(w);
    }
  }
  std::vector<RWord> basis;
  for (int v = 0; v < static_cast<int>(n); ++v) {
    for (int b = 0; b < k_; ++b) {  // each geometric edge once, positive side
      const int w = out_[static_cast<size_t>(v)][static_cast<size_t>(b)];
      if (w < 0 || treeArrow.count({v, static_cast<size_t>(b)})) continue;
      const SignedLetter x{static_cast<uint8_t>(b), true};
      basis.push_back(path[static_cast<size_t>(v)] * RWord::single(x) *
                      path[static_cast<size_t>(w)].inverse());
    }
  }
  return basis;
}

bool SubgroupGraph::sameSubgroup(const SubgroupGraph& other) const {
  if (k_ != other.k_) return false;
  for (const RWord& w : basisWords())
    if (!other.member(w)) return false;
  for (const RWord& w : other.basisWords())
    if (!member(w)) return false;
  return true;
}

std::string SubgroupGraph::serialize() const {
  std::ostringstream os;
  os << "vertices " << vertexCount() << "\nbase 0\n";
  for (int v = 0; v < vertexCount(); ++v)
    for (int b = 0; b < k_; ++b) {
      const int w = out_[static_cast<size_t>(v)][static_cast<size_t>(b)];
      if (w >= 0) os << "edge " << v << ' ' << char('a' + b) << ' ' << w << '\n';
    }
  return os.str();
}

std::string to_string(BasisVerdict v) {
  switch (v) {
    case BasisVerdict::Yes: return "yes";
    case BasisVerdict::NotSymmetric: return "not_symmetric";
    case BasisVerdict::NotFree: return "not_free";
    case BasisVerdict::WrongSubgroup: return "wrong_subgroup";
  }
  return "?";
}

BasisVerdict isSymmetricBasis(std::span<const RWord> x, const SubgroupGraph& target) {
  std::set<std::string> set;
  for (const RWord& w : x) set.insert(w.chars());
  if (set.count("")) return BasisVerdict::NotSymmetric;
  std::vector<RWord> words;
  for (const std::string& s : set) {
    const RWord w = RWord::parse(s, target.alphabetSize());
    if (!set.count(w.inverse().chars())) return BasisVerdict::NotSymmetric;
    words.push_back(w);
  }
  // In a free group only the empty word is its own inverse, so |set| is even.
  const int pairs = static_cast<int>(set.size()) / 2;
  const SubgroupGraph folded = SubgroupGraph::fold(words, target.alphabetSize());
  if (folded.rank() != pairs) return BasisVerdict::NotFree;
  if (!folded.sameSubgroup(target)) return BasisVerdict::WrongSubgroup;
  return BasisVerdict::Yes;
}

CosetLift::CosetLift(const LinearInvolution& t, const SubgroupGraph& g) : t_(&t), g_(&g) {
  if (!g.index()) throw WordError("coset lift needs a subgroup of finite index");
  if (g.alphabetSize() != t.alphabetSize())
    throw WordError("coset lift: alphabet sizes differ");
}

LiftedPt CosetLift::apply(const LiftedPt& p) const {
  const SignedLetter x = t_->locate(p.z);
  return {t_->apply(p.z), *g_->step(p.coset, x)};
}

LiftedPt CosetLift::applyInv(const LiftedPt& p) const {
  const Pt back = t_->applyInv(p.z);
  const SignedLetter x = t_->locate(back);
  return {back, *g_->step(p.coset, x.inverse())};
}

SubgroupGraph evenSubgroup(const LinearInvolution& t) {
  const int k = t.alphabetSize();
  bool anyOdd = false;
  for (int b = 0; b < k; ++b)
    if (!t.evenLetter(static_cast<uint8_t>(b))) anyOdd = true;
  if (!anyOdd) return SubgroupGraph::bouquet(k);
  std::vector<std::vector<int>> action(static_cast<size_t>(k));
  for (int b = 0; b < k; ++b)
    action[static_cast<size_t>(b)] =
        t.evenLetter(static_cast<uint8_t>(b)) ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
  return SubgroupGraph::fromAction(action);
}

}  // namespace linvol
