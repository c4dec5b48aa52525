#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetmod/resolve.hpp"

namespace posetmod {

/// A finitely determined Z^n-module stored on a box. Outside the box the
/// module is read off at the closest box point, so every x_i step leaving
/// the box is an isomorphism.
struct BoxModule {
  Box box;
  PosetModule module;  // over FinitePoset::grid(box)

  std::size_t n() const { return box.dim(); }
  /// Closest box point to x.
  std::vector<int> clamp(const std::vector<int>& x) const;
  std::size_t dim_at(const std::vector<int>& x) const;
};

/// Step from `point` to point + e_axis inside a grid window.
struct GridEdge {
  std::vector<int> point;
  std::size_t axis = 0;
  friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

class NotDetermined : public std::invalid_argument {
public:
  explicit NotDetermined(std::vector<GridEdge> edges);
  const std::vector<GridEdge>& edges() const { return edges_; }

private:
  std::vector<GridEdge> edges_;
};

/// Edges of the window module that must be isomorphisms for `box` to
/// determine it (those with x_i < lower_i or x_i >= upper_i) but are not.
/// Throws std::invalid_argument if `m` is not over a grid or `box` leaves it.
std::vector<GridEdge> determination_violations(const PosetModule& m, const Box& box);

/// Restriction of a window module to a determining box. Throws NotDetermined.
BoxModule convex_projection(const PosetModule& m, const Box& box);

/// Smallest determining box inside the window, per axis the span of the
/// non-isomorphism steps. Axes without such steps collapse to the window's
/// lower corner.
Box canonical_box(const PosetModule& m);

/// The same module on its canonical box.
BoxModule normalize(const BoxModule& m);

/// Box [-upper, -lower], dims mirrored, maps transposed.
BoxModule matlis_dual(const BoxModule& m);

enum class FaceKind { flat, injective };

/// Flat: k[c + Z tau + N^n]. Injective: k[c + Z tau - N^n]. Bit i of
/// `faces` marks axis i as belonging to tau.
struct FaceLabel {
  FaceKind kind = FaceKind::flat;
  std::vector<int> base;
  std::uint32_t faces = 0;

  bool in_face(std::size_t axis) const { return (faces >> axis) & 1u; }
  bool contains(const std::vector<int>& x) const;
  /// Flat labels take tau = {i : c_i = lower_i}, injective ones
  /// tau = {i : c_i = upper_i}.
  static FaceLabel canonical(FaceKind kind, const Box& box, std::vector<int> base);
  /// Swaps kind and negates the base point.
  FaceLabel dual() const;

  friend bool operator==(const FaceLabel&, const FaceLabel&) = default;
  friend auto operator<=>(const FaceLabel&, const FaceLabel&) = default;
};

std::string to_string(const FaceLabel& l);

/// Flat and injective degree sets meet: each axis is free in one of the
/// faces or the flat base lies below the injective base.
bool f_preceq_e(const FaceLabel& f, const FaceLabel& e);

/// Rows flat, columns injective, entries from row to column.
struct FlangePresentation {
  Box box;
  std::vector<FaceLabel> flats;
  std::vector<FaceLabel> injectives;
  Matrix entries;
  /// The same presentation on the box grid, with its factorization witness.
  FringePresentation fringe;
};

/// Minimal flat cover composed with minimal injective hull. Throws
/// std::logic_error if an entry violates f_preceq_e.
FlangePresentation flange_presentation(const BoxModule& m);

/// Face-labeled complex; rows of differentials[i] are terms[i], columns
/// terms[i + 1], following the IndicatorComplex conventions.
struct FaceComplex {
  Box box;
  Field field;
  Direction direction = Direction::cohomological;
  std::vector<std::vector<FaceLabel>> terms;
  std::vector<Matrix> differentials;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  std::vector<std::size_t> counts() const;
};

FaceComplex minimal_injective_resolution(const BoxModule& m);
/// Matlis dual of the injective resolution of the Matlis dual.
FaceComplex minimal_flat_resolution(const BoxModule& m);

/// Labels dualized, direction swapped, scalar blocks kept.
FaceComplex matlis_dual(const FaceComplex& c);

/// The complex over the box grid, labels as principal upsets/downsets.
IndicatorComplex to_indicator_complex(const FaceComplex& c);

}  // namespace posetmod
