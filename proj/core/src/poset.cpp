#include "posetmod/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace posetmod {

// ---------------------------------------------------------------- Box

std::size_t Box::size() const {
  if (!valid()) return 0;
  std::size_t s = 1;
  for (std::size_t i = 0; i < dim(); ++i) s *= static_cast<std::size_t>(upper[i] - lower[i] + 1);
  return s;
}

bool Box::valid() const {
  if (lower.size() != upper.size()) return false;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) return false;
  return true;
}

bool Box::contains(const std::vector<int>& point) const {
  if (point.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (point[i] < lower[i] || point[i] > upper[i]) return false;
  return true;
}

bool Box::contains(const Box& other) const {
  return other.dim() == dim() && contains(other.lower) && contains(other.upper);
}

std::size_t Box::index_of(const std::vector<int>& point) const {
  if (!contains(point)) throw std::out_of_range("point " + format_point(point) + " outside box");
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    idx += static_cast<std::size_t>(point[i] - lower[i]) * stride;
    stride *= static_cast<std::size_t>(upper[i] - lower[i] + 1);
  }
  return idx;
}

std::vector<int> Box::point_of(std::size_t index) const {
  std::vector<int> p(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    auto extent = static_cast<std::size_t>(upper[i] - lower[i] + 1);
    p[i] = lower[i] + static_cast<int>(index % extent);
    index /= extent;
  }
  return p;
}

std::string format_point(const std::vector<int>& point) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < point.size(); ++i) os << (i ? "," : "") << point[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- FinitePoset

namespace {

std::string cycle_message(const std::vector<Element>& cycle) {
  std::ostringstream os;
  os << "relations contain a cycle:";
  for (auto e : cycle) os << " " << e;
  return os.str();
}

// Cycle through the unprocessed vertices left over by Kahn's algorithm.
std::vector<Element> find_cycle(const std::vector<std::vector<Element>>& succ, const std::vector<bool>& stuck) {
  std::size_t n = succ.size();
  std::vector<int> color(n, 0);
  std::vector<Element> stack;
  for (Element start = 0; start < n; ++start) {
    if (!stuck[start] || color[start] != 0) continue;
    // Iterative DFS with explicit edge cursors.
    std::vector<std::pair<Element, std::size_t>> frames{{start, 0}};
    color[start] = 1;
    stack = {start};
    while (!frames.empty()) {
      auto& [v, cursor] = frames.back();
      if (cursor == succ[v].size()) {
        color[v] = 2;
        frames.pop_back();
        stack.pop_back();
        continue;
      }
      Element w = succ[v][cursor++];
      if (!stuck[w]) continue;
      if (color[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        std::vector<Element> cycle(it, stack.end());
        cycle.push_back(w);
        return cycle;
      }
      if (color[w] == 0) {
        color[w] = 1;
        frames.push_back({w, 0});
        stack.push_back(w);
      }
    }
  }
  return {};
}

}  // namespace

CycleError::CycleError(std::vector<Element> cycle)
    : std::invalid_argument(cycle_message(cycle)), cycle_(std::move(cycle)) {}

PosetPtr FinitePoset::build(std::size_t n, const std::vector<std::pair<Element, Element>>& relations,
                            std::vector<std::string> labels) {
  std::vector<std::vector<Element>> succ(n);
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw std::out_of_range("relation index out of range");
    if (a == b) continue;
    succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  std::vector<std::size_t> indeg(n, 0);
  for (auto& s : succ)
    for (auto b : s) ++indeg[b];
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element a = 0; a < n; ++a)
    if (indeg[a] == 0) ready.push(a);
  std::vector<Element> topo;
  while (!ready.empty()) {
    Element a = ready.top();
    ready.pop();
    topo.push_back(a);
    for (auto b : succ[a])
      if (--indeg[b] == 0) ready.push(b);
  }
  if (topo.size() != n) {
    std::vector<bool> stuck(n, true);
    for (auto a : topo) stuck[a] = false;
    throw CycleError(find_cycle(succ, stuck));
  }

  auto p = std::shared_ptr<FinitePoset>(new FinitePoset());
  p->up_.assign(n, Bitset(n));
  p->down_.assign(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element a = *it;
    p->up_[a].set(a);
    for (auto b : succ[a]) p->up_[a] |= p->up_[b];
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = p->up_[a].find_first(); b != Bitset::npos; b = p->up_[a].find_next(b)) p->down_[b].set(a);

  p->upper_covers_.resize(n);
  p->lower_covers_.resize(n);
  for (Element a = 0; a < n; ++a) {
    Bitset strict = p->up_[a];
    strict.reset(a);
    Bitset above_strict(n);
    for (Element c = strict.find_first(); c != Bitset::npos; c = strict.find_next(c)) {
      Bitset t = p->up_[c];
      t.reset(c);
      above_strict |= t;
    }
    Bitset cov = strict - above_strict;
    for (Element b = cov.find_first(); b != Bitset::npos; b = cov.find_next(b)) {
      p->covers_.emplace_back(a, b);
      p->upper_covers_[a].push_back(b);
      p->lower_covers_[b].push_back(a);
    }
  }
  for (auto& l : p->lower_covers_) std::sort(l.begin(), l.end());
  p->topo_ = std::move(topo);

  if (labels.empty()) {
    labels.resize(n);
    for (Element a = 0; a < n; ++a) labels[a] = std::to_string(a);
  }
  if (labels.size() != n) throw std::invalid_argument("label count does not match element count");
  p->labels_ = std::move(labels);
  return p;
}

PosetPtr FinitePoset::grid(const Box& box) {
  if (!box.valid()) throw std::invalid_argument("invalid box");
  std::size_t n = box.size();
  std::vector<std::pair<Element, Element>> rel;
  std::vector<std::string> labels(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    auto pt = box.point_of(idx);
    labels[idx] = format_point(pt);
    for (std::size_t i = 0; i < box.dim(); ++i) {
      if (pt[i] == box.upper[i]) continue;
      auto q = pt;
      ++q[i];
      rel.emplace_back(idx, box.index_of(q));
    }
  }
  auto built = build(n, rel, std::move(labels));
  auto p = std::const_pointer_cast<FinitePoset>(built);
  p->box_ = box;
  return p;
}

std::optional<std::size_t> FinitePoset::cover_index(Element lower, Element upper) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), std::make_pair(lower, upper));
  if (it == covers_.end() || *it != std::make_pair(lower, upper)) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

std::optional<Element> FinitePoset::find_label(const std::string& label) const {
  for (Element a = 0; a < size(); ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

std::vector<int> FinitePoset::coordinates(Element a) const {
  if (!box_) throw std::logic_error("poset is not a grid");
  return box_->point_of(a);
}

Element FinitePoset::at(const std::vector<int>& point) const {
  if (!box_) throw std::logic_error("poset is not a grid");
  return box_->index_of(point);
}

PosetPtr FinitePoset::opposite() const {
  std::vector<std::pair<Element, Element>> rel;
  rel.reserve(covers_.size());
  for (auto [a, b] : covers_) rel.emplace_back(b, a);
  return build(size(), rel, labels_);
}

bool FinitePoset::same_as(const FinitePoset& other) const {
  return this == &other || (size() == other.size() && covers_ == other.covers_);
}

void require_same_poset(const PosetPtr& a, const PosetPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw std::invalid_argument("objects live over different posets");
}

std::vector<Element> elements_of(const Bitset& s) {
  std::vector<Element> out;
  for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

Bitset subset_of(std::size_t n, const std::vector<Element>& elements) {
  Bitset s(n);
  for (auto e : elements) {
    if (e >= n) throw std::out_of_range("element index out of range");
    s.set(e);
  }
  return s;
}

// ---------------------------------------------------------------- closures

bool is_upset(const FinitePoset& p, const Bitset& s) {
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a))
    if (!p.principal_up(a).is_subset_of(s)) return false;
  return true;
}

bool is_downset(const FinitePoset& p, const Bitset& s) {
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a))
    if (!p.principal_down(a).is_subset_of(s)) return false;
  return true;
}

Bitset up_closure(const FinitePoset& p, const Bitset& s) {
  Bitset out(p.size());
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) out |= p.principal_up(a);
  return out;
}

Bitset down_closure(const FinitePoset& p, const Bitset& s) {
  Bitset out(p.size());
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) out |= p.principal_down(a);
  return out;
}

std::vector<Element> minimal_elements(const FinitePoset& p, const Bitset& s) {
  std::vector<Element> out;
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) {
    Bitset below = p.principal_down(a) & s;
    if (below.count() == 1) out.push_back(a);
  }
  return out;
}

std::vector<Element> maximal_elements(const FinitePoset& p, const Bitset& s) {
  std::vector<Element> out;
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) {
    Bitset above = p.principal_up(a) & s;
    if (above.count() == 1) out.push_back(a);
  }
  return out;
}

Upset Upset::closure(PosetPtr poset, const std::vector<Element>& gens) {
  Upset u;
  u.members_ = up_closure(*poset, subset_of(poset->size(), gens));
  u.poset_ = std::move(poset);
  return u;
}

Upset Upset::from_members(PosetPtr poset, Bitset members) {
  if (members.size() != poset->size()) throw std::invalid_argument("upset member set has wrong size");
  if (!is_upset(*poset, members)) throw std::invalid_argument("subset is not an upset");
  Upset u;
  u.poset_ = std::move(poset);
  u.members_ = std::move(members);
  return u;
}

std::vector<Element> Upset::generators() const { return minimal_elements(*poset_, members_); }

Downset Upset::complement() const { return Downset::from_members(poset_, ~members_); }

Downset Downset::closure(PosetPtr poset, const std::vector<Element>& cogens) {
  Downset d;
  d.members_ = down_closure(*poset, subset_of(poset->size(), cogens));
  d.poset_ = std::move(poset);
  return d;
}

Downset Downset::from_members(PosetPtr poset, Bitset members) {
  if (members.size() != poset->size()) throw std::invalid_argument("downset member set has wrong size");
  if (!is_downset(*poset, members)) throw std::invalid_argument("subset is not a downset");
  Downset d;
  d.poset_ = std::move(poset);
  d.members_ = std::move(members);
  return d;
}

std::vector<Element> Downset::cogenerators() const { return maximal_elements(*poset_, members_); }

Upset Downset::complement() const { return Upset::from_members(poset_, ~members_); }

// ---------------------------------------------------------------- components

std::vector<std::vector<Element>> connected_components(const FinitePoset& p, const Bitset& s) {
  std::size_t n = p.size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) {
    Bitset above = p.principal_up(a) & s;
    for (auto b = above.find_first(); b != Bitset::npos; b = above.find_next(b)) {
      Element ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::map<Element, std::vector<Element>> groups;
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) groups[find(a)].push_back(a);
  std::vector<std::vector<Element>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

// ---------------------------------------------------------------- morphisms

PosetMorphism::PosetMorphism(PosetPtr source, PosetPtr target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_->size()) throw std::invalid_argument("morphism map has wrong length");
  for (auto v : map_)
    if (v >= target_->size()) throw std::invalid_argument("morphism image out of range");
  for (auto [a, b] : source_->covers())
    if (!target_->leq(map_[a], map_[b]))
      throw std::invalid_argument("map is not monotone on cover " + source_->label(a) + " < " + source_->label(b));
}

PosetMorphism PosetMorphism::identity(PosetPtr p) {
  std::vector<Element> m(p->size());
  std::iota(m.begin(), m.end(), 0);
  return PosetMorphism(p, p, std::move(m));
}

PosetMorphism PosetMorphism::then(const PosetMorphism& next) const {
  require_same_poset(target_, next.source_);
  std::vector<Element> m(map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = next.map_[map_[i]];
  return PosetMorphism(source_, next.target_, std::move(m));
}

Bitset PosetMorphism::preimage(const Bitset& s) const {
  Bitset out(source_->size());
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (s[map_[i]]) out.set(i);
  return out;
}

bool PosetMorphism::is_injective() const {
  std::vector<Element> sorted = map_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool PosetMorphism::is_order_embedding() const {
  if (!is_injective()) return false;
  for (Element a = 0; a < source_->size(); ++a)
    for (Element b = 0; b < source_->size(); ++b)
      if (source_->leq(a, b) != target_->leq(map_[a], map_[b])) return false;
  return true;
}

// ---------------------------------------------------------------- uptight

void UpsetFamily::validate() const {
  for (const auto& u : upsets) require_same_poset(poset, u.poset());
}

std::vector<std::vector<Element>> uptight_regions(const UpsetFamily& family) {
  family.validate();
  std::size_t n = family.poset->size();
  std::map<std::vector<bool>, std::vector<Element>> by_signature;
  std::vector<std::vector<bool>> signature(n, std::vector<bool>(family.upsets.size()));
  for (Element a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < family.upsets.size(); ++k) signature[a][k] = family.upsets[k].contains(a);
    by_signature[signature[a]].push_back(a);
  }
  std::vector<std::vector<Element>> regions;
  for (auto& [sig, members] : by_signature) regions.push_back(std::move(members));
  std::sort(regions.begin(), regions.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return regions;
}

std::string region_name(std::size_t index) {
  std::string s;
  ++index;
  while (index > 0) {
    --index;
    s.insert(s.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return s;
}

UptightPoset uptight_poset(const UpsetFamily& family) {
  UptightPoset out;
  out.regions = uptight_regions(family);
  const FinitePoset& q = *family.poset;
  std::size_t r = out.regions.size();
  out.region_of.assign(q.size(), 0);
  for (std::size_t k = 0; k < r; ++k)
    for (auto a : out.regions[k]) out.region_of[a] = k;

  std::vector<std::vector<bool>> raw(r, std::vector<bool>(r, false));
  for (Element a = 0; a < q.size(); ++a) {
    const Bitset& above = q.principal_up(a);
    for (auto b = above.find_first(); b != Bitset::npos; b = above.find_next(b)) {
      std::size_t ra = out.region_of[a], rb = out.region_of[b];
      if (ra != rb) raw[ra][rb] = true;
    }
  }
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      if (raw[x][y]) out.raw_relation.emplace_back(x, y);

  std::vector<std::string> names(r);
  for (std::size_t k = 0; k < r; ++k) names[k] = region_name(k);
  try {
    out.poset = FinitePoset::build(r, out.raw_relation, names);
  } catch (const CycleError& e) {
    throw std::logic_error(std::string("uptight relation is cyclic, which cannot happen: ") + e.what());
  }
  out.raw_transitive = true;
  for (std::size_t x = 0; x < r && out.raw_transitive; ++x)
    for (std::size_t y = 0; y < r; ++y)
      if (out.poset->less(x, y) && !raw[x][y]) {
        out.raw_transitive = false;
        break;
      }
  out.quotient = PosetMorphism(family.poset, out.poset, out.region_of);
  return out;
}

// ---------------------------------------------------------------- embedding

GridEmbedding embed_into_grid(const FinitePoset& p) {
  GridEmbedding e;
  std::size_t n = p.size();
  e.box.lower.assign(n, 0);
  e.box.upper.assign(n, 1);
  e.coordinates.assign(n, std::vector<int>(n, 0));
  for (Element a = 0; a < n; ++a) {
    const Bitset& down = p.principal_down(a);
    for (auto b = down.find_first(); b != Bitset::npos; b = down.find_next(b)) e.coordinates[a][b] = 1;
  }
  return e;
}

PosetMorphism GridEmbedding::as_morphism(PosetPtr source, std::size_t max_points) const {
  if (box.size() > max_points) throw std::length_error("grid embedding target too large to materialize");
  PosetPtr grid = FinitePoset::grid(box);
  std::vector<Element> m(coordinates.size());
  for (std::size_t a = 0; a < m.size(); ++a) m[a] = box.index_of(coordinates[a]);
  return PosetMorphism(std::move(source), std::move(grid), std::move(m));
}

}  // namespace posetmod
