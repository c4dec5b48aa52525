#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace posetmod {

using Bitset = boost::dynamic_bitset<>;
using Element = std::size_t;

/// Lattice box [lower, upper] in Z^n. Grid element indices run with the
/// first coordinate fastest.
struct Box {
  std::vector<int> lower;
  std::vector<int> upper;

  std::size_t dim() const { return lower.size(); }
  std::size_t size() const;
  bool valid() const;
  bool contains(const std::vector<int>& point) const;
  bool contains(const Box& other) const;
  std::size_t index_of(const std::vector<int>& point) const;
  std::vector<int> point_of(std::size_t index) const;

  friend bool operator==(const Box&, const Box&) = default;
};

std::string format_point(const std::vector<int>& point);

class CycleError : public std::invalid_argument {
public:
  CycleError(std::vector<Element> cycle);
  const std::vector<Element>& cycle() const { return cycle_; }

private:
  std::vector<Element> cycle_;
};

class FinitePoset;
using PosetPtr = std::shared_ptr<const FinitePoset>;

/// A finite poset on elements 0..n-1, stored as its Hasse diagram plus the
/// principal upsets and downsets of every element.
///
/// Immutable once built; share through PosetPtr.
class FinitePoset {
public:
  /// Builds a poset from arbitrary relations (lower, upper). Redundant
  /// relations are dropped so that `covers()` is the Hasse diagram.
  /// Throws CycleError with the offending cycle if the relations are not
  /// antisymmetric, and std::out_of_range for bad indices.
  static PosetPtr build(std::size_t n, const std::vector<std::pair<Element, Element>>& relations,
                        std::vector<std::string> labels = {});

  /// The product-of-chains poset on a box in Z^n.
  static PosetPtr grid(const Box& box);

  std::size_t size() const { return up_.size(); }
  bool leq(Element a, Element b) const { return up_[a][b]; }
  bool less(Element a, Element b) const { return a != b && up_[a][b]; }
  bool comparable(Element a, Element b) const { return up_[a][b] || up_[b][a]; }

  const Bitset& principal_up(Element a) const { return up_[a]; }
  const Bitset& principal_down(Element a) const { return down_[a]; }

  /// Cover relations sorted lexicographically.
  const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }
  std::optional<std::size_t> cover_index(Element lower, Element upper) const;
  const std::vector<Element>& upper_covers(Element a) const { return upper_covers_[a]; }
  const std::vector<Element>& lower_covers(Element a) const { return lower_covers_[a]; }

  /// Linear extension: lowest available index first.
  const std::vector<Element>& topological_order() const { return topo_; }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find_label(const std::string& label) const;

  /// Set when the poset is a box grid.
  const std::optional<Box>& grid_box() const { return box_; }
  std::vector<int> coordinates(Element a) const;
  Element at(const std::vector<int>& point) const;

  /// Reverses every relation. Labels and grid box are kept (the box is
  /// dropped since the opposite is no longer the box order).
  PosetPtr opposite() const;

  Bitset empty_subset() const { return Bitset(size()); }
  Bitset full_subset() const { return Bitset(size()).set(); }

  bool same_as(const FinitePoset& other) const;

private:
  FinitePoset() = default;

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::pair<Element, Element>> covers_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<std::vector<Element>> lower_covers_;
  std::vector<Element> topo_;
  std::vector<std::string> labels_;
  std::optional<Box> box_;
};

/// Throws std::invalid_argument unless both handles describe the same poset.
void require_same_poset(const PosetPtr& a, const PosetPtr& b);

std::vector<Element> elements_of(const Bitset& s);
Bitset subset_of(std::size_t n, const std::vector<Element>& elements);

class Downset;

/// An upward-closed subset of a poset.
class Upset {
public:
  Upset() = default;
  /// Smallest upset containing `gens`.
  static Upset closure(PosetPtr poset, const std::vector<Element>& gens);
  /// Wraps a member set; throws std::invalid_argument if it is not upward closed.
  static Upset from_members(PosetPtr poset, Bitset members);

  const PosetPtr& poset() const { return poset_; }
  const Bitset& members() const { return members_; }
  bool contains(Element a) const { return members_[a]; }
  bool empty() const { return members_.none(); }
  std::size_t count() const { return members_.count(); }
  /// Minimal elements, increasing.
  std::vector<Element> generators() const;
  Downset complement() const;

  friend bool operator==(const Upset& a, const Upset& b) { return a.members_ == b.members_; }

private:
  PosetPtr poset_;
  Bitset members_;
};

/// A downward-closed subset of a poset.
class Downset {
public:
  Downset() = default;
  static Downset closure(PosetPtr poset, const std::vector<Element>& cogens);
  static Downset from_members(PosetPtr poset, Bitset members);

  const PosetPtr& poset() const { return poset_; }
  const Bitset& members() const { return members_; }
  bool contains(Element a) const { return members_[a]; }
  bool empty() const { return members_.none(); }
  std::size_t count() const { return members_.count(); }
  /// Maximal elements, increasing.
  std::vector<Element> cogenerators() const;
  Upset complement() const;

  friend bool operator==(const Downset& a, const Downset& b) { return a.members_ == b.members_; }

private:
  PosetPtr poset_;
  Bitset members_;
};

bool is_upset(const FinitePoset& p, const Bitset& s);
bool is_downset(const FinitePoset& p, const Bitset& s);
Bitset up_closure(const FinitePoset& p, const Bitset& s);
Bitset down_closure(const FinitePoset& p, const Bitset& s);
std::vector<Element> minimal_elements(const FinitePoset& p, const Bitset& s);
std::vector<Element> maximal_elements(const FinitePoset& p, const Bitset& s);

/// Zigzag-connected components of `s`: two elements share a component iff
/// a path of comparable pairs inside `s` joins them. Components are sorted
/// and listed by least element.
std::vector<std::vector<Element>> connected_components(const FinitePoset& p, const Bitset& s);

/// Monotone map between finite posets.
class PosetMorphism {
public:
  PosetMorphism() = default;
  /// Throws std::invalid_argument if the map is out of range or not monotone.
  PosetMorphism(PosetPtr source, PosetPtr target, std::vector<Element> map);

  static PosetMorphism identity(PosetPtr p);

  const PosetPtr& source() const { return source_; }
  const PosetPtr& target() const { return target_; }
  Element operator()(Element a) const { return map_[a]; }
  const std::vector<Element>& map() const { return map_; }

  PosetMorphism then(const PosetMorphism& next) const;
  /// Preimage of a subset of the target.
  Bitset preimage(const Bitset& s) const;
  bool is_injective() const;
  /// Injective, and a <= b exactly when their images compare.
  bool is_order_embedding() const;

private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<Element> map_;
};

/// A family of upsets of one poset.
struct UpsetFamily {
  PosetPtr poset;
  std::vector<Upset> upsets;

  /// Throws std::invalid_argument if some member has a different parent.
  void validate() const;
};

/// Partition into uptight regions: a, b share a region iff they lie in
/// exactly the same members of the family. Regions are listed by least element.
std::vector<std::vector<Element>> uptight_regions(const UpsetFamily& family);

struct UptightPoset {
  std::vector<std::vector<Element>> regions;
  std::vector<std::size_t> region_of;
  /// Strict raw relation A -> B (A != B): some a in A lies below some b in B.
  std::vector<std::pair<std::size_t, std::size_t>> raw_relation;
  bool raw_transitive = true;
  /// Transitive closure of the raw relation, labeled A, B, C, ...
  PosetPtr poset;
  PosetMorphism quotient;
};

UptightPoset uptight_poset(const UpsetFamily& family);

/// Region names A..Z, AA, AB, ...
std::string region_name(std::size_t index);

/// Order embedding of a finite poset into {0,1}^|P| sending each element
/// to the characteristic vector of its principal downset.
struct GridEmbedding {
  Box box;
  std::vector<std::vector<int>> coordinates;

  /// The embedding as a morphism into the full box grid. Throws
  /// std::length_error beyond `max_points` grid points.
  PosetMorphism as_morphism(PosetPtr source, std::size_t max_points = 1u << 16) const;
};

GridEmbedding embed_into_grid(const FinitePoset& p);

}  // namespace posetmod
