#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posetmod/module.hpp"

namespace posetmod {

/// A partition of the poset into regions, each with a reference vector
/// space M_I and isomorphisms M_I -> M_i for every element i of I.
struct ConstantSubdivision {
  PosetModule module;
  std::vector<std::vector<Element>> regions;
  std::vector<std::size_t> region_dims;
  /// Indexed by element: dim(M_i) x region_dims[region of i].
  std::vector<Matrix> witnesses;

  std::vector<std::size_t> region_of() const;
};

/// Why a proposed constant subdivision fails.
struct SubdivisionObstruction {
  enum class Kind {
    not_a_partition,
    dimension_mismatch,  // region elements with different dimensions
    singular_witness,    // a witness or a propagated structure map is not invertible
    monodromy,           // two comparable pairs between the same regions disagree
  };
  Kind kind = Kind::monodromy;
  std::size_t region_from = 0;
  std::size_t region_to = 0;
  /// For monodromy: (first_lower, first_upper) fixed the composite that
  /// (second_lower, second_upper) contradicts. Otherwise the offending elements.
  Element first_lower = 0;
  Element first_upper = 0;
  Element second_lower = 0;
  Element second_upper = 0;

  std::string message() const;
};

/// Checks every comparable pair i <= j (i == j included): the composite
/// M_I -> M_i -> M_j -> M_J must depend only on the regions I and J.
std::optional<SubdivisionObstruction> verify_constant_subdivision(const ConstantSubdivision& cs);

/// Propagates witnesses along a lowest-index-first spanning forest of each
/// region's comparability graph, then verifies.
std::variant<ConstantSubdivision, SubdivisionObstruction> construct_witnesses(
    const PosetModule& m, const std::vector<std::vector<Element>>& partition);

/// U_I for each region and the complement of D_I for each region, in
/// region order (2 * #regions upsets).
UpsetFamily constant_upsets(const ConstantSubdivision& cs);

/// pi: Q -> P with a P-module H and witness isomorphisms (pi*H)_q -> M_q.
struct Encoding {
  PosetMorphism pi;
  PosetModule h;
  PosetModule module;
  std::vector<Matrix> witness;
};

/// nullopt when the encoding is valid; otherwise a description of the failure.
std::optional<std::string> verify_encoding(const Encoding& e);

Encoding identity_encoding(const PosetModule& m);

struct UptightEncoding {
  Encoding encoding;
  UpsetFamily family;
  UptightPoset uptight;
};

/// Encoding by the uptight poset of the constant upsets of a verified
/// subdivision. Throws std::invalid_argument if `cs` does not verify and
/// std::logic_error if the construction itself fails its checks.
UptightEncoding uptight_encoding(const ConstantSubdivision& cs);

/// Fibers of pi as a constant subdivision with M_I = H_{pi(I)}.
ConstantSubdivision fibers_as_subdivision(const Encoding& e);

/// Product encoding pi x pi' restricted to its image J, with both modules
/// re-encoded over J.
struct JointEncoding {
  PosetMorphism pi;         // Q -> J
  PosetMorphism to_first;   // J -> P
  PosetMorphism to_second;  // J -> P'
  Encoding first;
  Encoding second;
};

JointEncoding common_refinement(const Encoding& e1, const Encoding& e2);

/// Transports phi: M -> N to a homomorphism of the encoded J-modules when
/// phi is constant on every fiber; nullopt otherwise.
std::optional<ModuleHom> descend_hom(const JointEncoding& joint, const ModuleHom& phi);

}  // namespace posetmod
