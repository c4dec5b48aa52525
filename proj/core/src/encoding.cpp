#include "posetmod/encoding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace posetmod {

std::vector<std::size_t> ConstantSubdivision::region_of() const {
  std::vector<std::size_t> r(module.poset()->size(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < regions.size(); ++k)
    for (auto a : regions[k]) r[a] = k;
  return r;
}

std::string SubdivisionObstruction::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::not_a_partition:
      os << "regions do not partition the poset (element " << first_lower << ")";
      break;
    case Kind::dimension_mismatch:
      os << "region " << region_from << " mixes dimensions at elements " << first_lower << " and " << second_lower;
      break;
    case Kind::singular_witness:
      os << "non-invertible witness in region " << region_from << " at element " << first_lower;
      break;
    case Kind::monodromy:
      os << "monodromy from region " << region_from << " to region " << region_to << ": pair (" << first_lower << ","
         << first_upper << ") and pair (" << second_lower << "," << second_upper << ") induce different maps";
      break;
  }
  return os.str();
}

namespace {

std::optional<SubdivisionObstruction> check_partition(const FinitePoset& p,
                                                      const std::vector<std::vector<Element>>& regions) {
  std::vector<int> seen(p.size(), 0);
  for (const auto& r : regions)
    for (auto a : r) {
      if (a >= p.size() || seen[a]++) {
        SubdivisionObstruction o;
        o.kind = SubdivisionObstruction::Kind::not_a_partition;
        o.first_lower = a;
        return o;
      }
    }
  for (Element a = 0; a < p.size(); ++a)
    if (!seen[a]) {
      SubdivisionObstruction o;
      o.kind = SubdivisionObstruction::Kind::not_a_partition;
      o.first_lower = a;
      return o;
    }
  return std::nullopt;
}

}  // namespace

std::optional<SubdivisionObstruction> verify_constant_subdivision(const ConstantSubdivision& cs) {
  const PosetModule& m = cs.module;
  const FinitePoset& p = *m.poset();
  if (auto o = check_partition(p, cs.regions)) return o;
  if (cs.region_dims.size() != cs.regions.size() || cs.witnesses.size() != p.size())
    throw std::invalid_argument("constant subdivision data has wrong length");
  auto region = cs.region_of();

  std::vector<Matrix> inverses(p.size());
  for (Element a = 0; a < p.size(); ++a) {
    const Matrix& w = cs.witnesses[a];
    SubdivisionObstruction o;
    o.region_from = o.region_to = region[a];
    o.first_lower = o.first_upper = a;
    if (w.rows() != m.dim(a) || w.cols() != cs.region_dims[region[a]]) {
      o.kind = SubdivisionObstruction::Kind::dimension_mismatch;
      o.second_lower = o.second_upper = cs.regions[region[a]].front();
      return o;
    }
    auto inv = inverse(w);
    if (!inv) {
      o.kind = SubdivisionObstruction::Kind::singular_witness;
      return o;
    }
    inverses[a] = std::move(*inv);
  }

  struct Reference {
    Element lower, upper;
    Matrix composite;
  };
  std::map<std::pair<std::size_t, std::size_t>, Reference> seen;
  for (Element i = 0; i < p.size(); ++i) {
    const Bitset& above = p.principal_up(i);
    for (auto j = above.find_first(); j != Bitset::npos; j = above.find_next(j)) {
      Matrix c = inverses[j] * m.map(i, j) * cs.witnesses[i];
      auto key = std::make_pair(region[i], region[j]);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, Reference{i, j, std::move(c)});
      } else if (!(it->second.composite == c)) {
        SubdivisionObstruction o;
        o.kind = SubdivisionObstruction::Kind::monodromy;
        o.region_from = key.first;
        o.region_to = key.second;
        o.first_lower = it->second.lower;
        o.first_upper = it->second.upper;
        o.second_lower = i;
        o.second_upper = j;
        return o;
      }
    }
  }
  // A region's own composites must be the identity; (i, i) pairs pin that
  // down only when they are visited first, so check explicitly.
  for (auto& [key, ref] : seen)
    if (key.first == key.second && !(ref.composite == Matrix::identity(m.field(), cs.region_dims[key.first]))) {
      Element r0 = cs.regions[key.first].front();
      SubdivisionObstruction o;
      o.kind = SubdivisionObstruction::Kind::monodromy;
      o.region_from = o.region_to = key.first;
      o.first_lower = r0;
      o.first_upper = r0;
      o.second_lower = ref.lower;
      o.second_upper = ref.upper;
      return o;
    }
  return std::nullopt;
}

std::variant<ConstantSubdivision, SubdivisionObstruction> construct_witnesses(
    const PosetModule& m, const std::vector<std::vector<Element>>& partition) {
  const FinitePoset& p = *m.poset();
  if (auto o = check_partition(p, partition)) return *o;
  ConstantSubdivision cs;
  cs.module = m;
  cs.regions = partition;
  for (auto& r : cs.regions) std::sort(r.begin(), r.end());
  cs.witnesses.resize(p.size());
  for (std::size_t k = 0; k < cs.regions.size(); ++k) {
    const auto& reg = cs.regions[k];
    std::size_t d = m.dim(reg.front());
    for (auto a : reg)
      if (m.dim(a) != d) {
        SubdivisionObstruction o;
        o.kind = SubdivisionObstruction::Kind::dimension_mismatch;
        o.region_from = o.region_to = k;
        o.first_lower = reg.front();
        o.second_lower = a;
        return o;
      }
    cs.region_dims.push_back(d);

    std::vector<bool> done(p.size(), false);
    for (auto root : reg) {
      if (done[root]) continue;
      // M_I is identified with M_root for the root of each spanning tree.
      cs.witnesses[root] = Matrix::identity(m.field(), d);
      done[root] = true;
      std::vector<Element> frontier{root};
      for (std::size_t head = 0; head < frontier.size(); ++head) {
        Element a = frontier[head];
        for (auto b : reg) {
          if (done[b] || !p.comparable(a, b)) continue;
          if (p.leq(a, b)) {
            cs.witnesses[b] = m.map(a, b) * cs.witnesses[a];
          } else {
            auto inv = inverse(m.map(b, a));
            if (!inv) {
              SubdivisionObstruction o;
              o.kind = SubdivisionObstruction::Kind::singular_witness;
              o.region_from = o.region_to = k;
              o.first_lower = b;
              o.first_upper = a;
              return o;
            }
            cs.witnesses[b] = *inv * cs.witnesses[a];
          }
          if (!is_invertible(cs.witnesses[b])) {
            SubdivisionObstruction o;
            o.kind = SubdivisionObstruction::Kind::singular_witness;
            o.region_from = o.region_to = k;
            o.first_lower = b;
            o.first_upper = a;
            return o;
          }
          done[b] = true;
          frontier.push_back(b);
        }
      }
    }
  }
  if (auto o = verify_constant_subdivision(cs)) return *o;
  return cs;
}

UpsetFamily constant_upsets(const ConstantSubdivision& cs) {
  const PosetPtr& p = cs.module.poset();
  UpsetFamily fam;
  fam.poset = p;
  for (const auto& reg : cs.regions) {
    Bitset s = subset_of(p->size(), reg);
    fam.upsets.push_back(Upset::from_members(p, up_closure(*p, s)));
    fam.upsets.push_back(Upset::from_members(p, ~down_closure(*p, s)));
  }
  return fam;
}

std::optional<std::string> verify_encoding(const Encoding& e) {
  if (!e.pi.source() || !e.module.poset()->same_as(*e.pi.source())) return "encoding morphism source is not the module's poset";
  if (!e.h.poset()->same_as(*e.pi.target())) return "encoding module does not live on the morphism target";
  PosetModule pulled = pullback(e.pi, e.h);
  if (pulled.dims() != e.module.dims()) return "pullback dimensions differ from the module";
  if (!is_isomorphism_witness(pulled, e.module, e.witness)) return "witness maps are not a commuting isomorphism";
  return std::nullopt;
}

Encoding identity_encoding(const PosetModule& m) {
  Encoding e;
  e.pi = PosetMorphism::identity(m.poset());
  e.h = m;
  e.module = m;
  for (Element a = 0; a < m.poset()->size(); ++a) e.witness.push_back(Matrix::identity(m.field(), m.dim(a)));
  return e;
}

UptightEncoding uptight_encoding(const ConstantSubdivision& cs) {
  if (auto o = verify_constant_subdivision(cs)) throw std::invalid_argument("subdivision is not constant: " + o->message());
  const PosetModule& m = cs.module;
  const FinitePoset& q = *m.poset();
  const Field& f = m.field();
  auto input_region = cs.region_of();

  UptightEncoding out;
  out.family = constant_upsets(cs);
  out.uptight = uptight_poset(out.family);
  const auto& regions = out.uptight.regions;

  std::size_t r = cs.regions.size();
  if (2 * r < 63 && regions.size() > (std::size_t{1} << (2 * r)))
    throw std::logic_error("uptight region count exceeds 2^(2r)");

  // H_A = M_I for the least input region I meeting A.
  std::vector<std::size_t> chosen(regions.size());
  for (std::size_t k = 0; k < regions.size(); ++k) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (auto a : regions[k]) best = std::min(best, input_region[a]);
    chosen[k] = best;
  }

  // omega_a : M_{I_A} -> M_a through some i in I_A below a.
  std::vector<Matrix> omega(q.size());
  for (Element a = 0; a < q.size(); ++a) {
    std::size_t ir = chosen[out.uptight.region_of[a]];
    std::optional<Element> below;
    for (auto i : cs.regions[ir])
      if (q.leq(i, a)) {
        below = i;
        break;
      }
    if (!below) throw std::logic_error("uptight region not covered by its constant upset");
    omega[a] = m.map(*below, a) * cs.witnesses[*below];
    if (!is_invertible(omega[a])) throw std::logic_error("uptight transport is not an isomorphism");
  }

  const FinitePoset& pp = *out.uptight.poset;
  std::vector<std::size_t> hdims(regions.size());
  for (std::size_t k = 0; k < regions.size(); ++k) hdims[k] = cs.region_dims[chosen[k]];
  std::vector<Matrix> hedges;
  for (auto [x, y] : pp.covers()) {
    std::optional<std::pair<Element, Element>> pair;
    for (auto a : regions[x]) {
      for (auto b : regions[y])
        if (q.leq(a, b)) {
          pair = std::make_pair(a, b);
          break;
        }
      if (pair) break;
    }
    if (!pair) throw std::logic_error("uptight cover is not a raw relation");
    auto [a, b] = *pair;
    hedges.push_back(*inverse(omega[b]) * m.map(a, b) * omega[a]);
  }
  Encoding& e = out.encoding;
  e.pi = out.uptight.quotient;
  e.h = PosetModule::build(out.uptight.poset, f, std::move(hdims), std::move(hedges));
  e.module = m;
  e.witness = std::move(omega);
  if (auto err = verify_encoding(e)) throw std::logic_error("uptight encoding failed verification: " + *err);
  return out;
}

ConstantSubdivision fibers_as_subdivision(const Encoding& e) {
  const FinitePoset& q = *e.module.poset();
  std::map<Element, std::vector<Element>> fibers;
  for (Element a = 0; a < q.size(); ++a) fibers[e.pi(a)].push_back(a);
  ConstantSubdivision cs;
  cs.module = e.module;
  for (auto& [target, members] : fibers) {
    cs.regions.push_back(members);
    cs.region_dims.push_back(e.h.dim(target));
  }
  std::sort(cs.regions.begin(), cs.regions.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  cs.region_dims.clear();
  for (auto& reg : cs.regions) cs.region_dims.push_back(e.h.dim(e.pi(reg.front())));
  cs.witnesses = e.witness;
  return cs;
}

JointEncoding common_refinement(const Encoding& e1, const Encoding& e2) {
  require_same_poset(e1.module.poset(), e2.module.poset());
  const PosetPtr& q = e1.module.poset();
  std::map<std::pair<Element, Element>, Element> index;
  std::vector<std::pair<Element, Element>> points;
  std::vector<Element> joint_map(q->size());
  for (Element a = 0; a < q->size(); ++a) {
    auto key = std::make_pair(e1.pi(a), e2.pi(a));
    auto [it, inserted] = index.emplace(key, points.size());
    if (inserted) points.push_back(key);
    joint_map[a] = it->second;
  }
  const FinitePoset& p1 = *e1.pi.target();
  const FinitePoset& p2 = *e2.pi.target();
  std::vector<std::pair<Element, Element>> rel;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < points.size(); ++x) {
    labels.push_back("(" + p1.label(points[x].first) + "," + p2.label(points[x].second) + ")");
    for (std::size_t y = 0; y < points.size(); ++y)
      if (x != y && p1.leq(points[x].first, points[y].first) && p2.leq(points[x].second, points[y].second))
        rel.emplace_back(x, y);
  }
  PosetPtr j = FinitePoset::build(points.size(), rel, labels);
  std::vector<Element> m1, m2;
  for (auto& pt : points) {
    m1.push_back(pt.first);
    m2.push_back(pt.second);
  }
  JointEncoding out;
  out.pi = PosetMorphism(q, j, joint_map);
  out.to_first = PosetMorphism(j, e1.pi.target(), m1);
  out.to_second = PosetMorphism(j, e2.pi.target(), m2);
  out.first = {out.pi, pullback(out.to_first, e1.h), e1.module, e1.witness};
  out.second = {out.pi, pullback(out.to_second, e2.h), e2.module, e2.witness};
  return out;
}

std::optional<ModuleHom> descend_hom(const JointEncoding& joint, const ModuleHom& phi) {
  const Encoding& a = joint.first;
  const Encoding& b = joint.second;
  const FinitePoset& q = *a.module.poset();
  const FinitePoset& j = *joint.pi.target();
  std::vector<std::optional<Matrix>> comps(j.size());
  for (Element x = 0; x < q.size(); ++x) {
    Matrix local = *inverse(b.witness[x]) * phi.at(x) * a.witness[x];
    auto& slot = comps[joint.pi(x)];
    if (!slot)
      slot = std::move(local);
    else if (!(*slot == local))
      return std::nullopt;
  }
  std::vector<Matrix> out;
  for (auto& c : comps) out.push_back(std::move(*c));
  try {
    return ModuleHom(a.h, b.h, std::move(out));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace posetmod
