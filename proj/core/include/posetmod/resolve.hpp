#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetmod/encoding.hpp"
#include "posetmod/indicator.hpp"

namespace posetmod {

/// Minimal surjection from a sum of principal upset modules.
struct ProjectiveCover {
  std::vector<IndicatorLabel> labels;
  /// Generating element of each summand.
  std::vector<Element> generators;
  /// Indexed by element: number of summands generated there.
  std::vector<std::size_t> betti;
  PosetModule module;
  ModuleHom map;  // module -> h
};

/// Minimal injection into a sum of principal downset modules.
struct InjectiveHull {
  std::vector<IndicatorLabel> labels;
  std::vector<Element> cogenerators;
  std::vector<std::size_t> betti;
  PosetModule module;
  ModuleHom map;  // h -> module
};

/// Generators at p span a complement of the images of all lower covers,
/// chosen as standard basis vectors by lowest index.
ProjectiveCover projective_cover(const PosetModule& h);
InjectiveHull injective_hull(const PosetModule& h);

enum class Direction { homological, cohomological };

/// Complex of indicator sums. Rows of differentials[i] are labeled by
/// terms[i] and columns by terms[i + 1]; homological complexes map
/// columns to rows, cohomological ones rows to columns.
struct IndicatorComplex {
  PosetPtr poset;
  Field field;
  Direction direction = Direction::homological;
  std::vector<std::vector<IndicatorLabel>> terms;
  std::vector<MonomialMatrix> differentials;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

/// A complex plus its augmentation: F_0 -> M for upset resolutions and
/// M -> E^0 for downset resolutions.
struct Resolution {
  IndicatorComplex complex;
  ModuleHom augmentation;
};

Resolution upset_resolution(const PosetModule& h);
Resolution downset_resolution(const PosetModule& h);

struct Presentations {
  MonomialMatrix upset;      // F_1 -> F_0 (columns to rows)
  ModuleHom upset_augmentation;
  MonomialMatrix downset;    // E^0 -> E^1 (rows to columns)
  ModuleHom downset_augmentation;
};

Presentations presentations(const PosetModule& h);

/// Evaluated differentials in complex order.
std::vector<ModuleHom> evaluate_complex(const IndicatorComplex& c);

/// homology[i][x] = dimension of the homology at terms[i], degree x.
std::vector<std::vector<std::size_t>> homology_dims(const IndicatorComplex& c);

/// Checks d∘d = 0, connectedness of every component, vanishing homology
/// away from position 0, and that the augmentation identifies the
/// position-0 homology with `m`. nullopt when all hold.
std::optional<std::string> verify_resolution(const Resolution& r, const PosetModule& m);

/// A nonzero entry between summands with identical labels: such a
/// component splits off and the complex is not minimal.
std::optional<EntryViolation> find_split_component(const MonomialMatrix& mm);

/// Fringe presentation F -> E whose image is M, with the factorization
/// F ->> M >-> E that witnesses it.
struct FringePresentation {
  MonomialMatrix mm;
  ModuleHom cover;  // F -> M
  ModuleHom hull;   // M -> E
};

FringePresentation fringe_presentation(const Encoding& e);

/// Checks cover surjective, hull injective and hull∘cover equal to the
/// evaluated matrix.
std::optional<std::string> verify_fringe(const FringePresentation& fp);

/// Labels replaced by their preimages along e.pi; scalars unchanged.
IndicatorComplex pullback_complex(const Encoding& e, const IndicatorComplex& c);
MonomialMatrix pullback_matrix(const PosetMorphism& pi, const MonomialMatrix& mm);

}  // namespace posetmod
