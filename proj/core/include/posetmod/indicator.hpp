#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "posetmod/module.hpp"

namespace posetmod {

enum class IndicatorKind { up, down };

/// An upset or downset used as a summand label.
struct IndicatorLabel {
  IndicatorKind kind = IndicatorKind::up;
  Bitset members;

  static IndicatorLabel of(const Upset& u) { return {IndicatorKind::up, u.members()}; }
  static IndicatorLabel of(const Downset& d) { return {IndicatorKind::down, d.members()}; }
  static IndicatorLabel principal_up(const FinitePoset& p, Element a) { return {IndicatorKind::up, p.principal_up(a)}; }
  static IndicatorLabel principal_down(const FinitePoset& p, Element a) {
    return {IndicatorKind::down, p.principal_down(a)};
  }

  /// Minimal generators for upsets, maximal cogenerators for downsets.
  std::vector<Element> boundary(const FinitePoset& p) const;
  /// Same kind, members replaced by their preimage.
  IndicatorLabel pullback(const PosetMorphism& f) const { return {kind, f.preimage(members)}; }

  friend bool operator==(const IndicatorLabel&, const IndicatorLabel&) = default;
};

/// k[U] or k[D] realized as a poset module.
struct IndicatorModule {
  IndicatorKind kind = IndicatorKind::up;
  Bitset region;
  PosetModule module;
};

IndicatorModule indicator_module(const Upset& u, Field field);
IndicatorModule indicator_module(const Downset& d, Field field);

/// Hom(k[S], k[T]) between indicator modules: one basis vector per listed
/// component, acting as 1 on that component and 0 elsewhere. Components are
/// ordered by least element.
struct HomSpace {
  std::size_t dimension = 0;
  std::vector<std::vector<Element>> components;
};

/// up -> down: components of U ∩ D. up -> up: components of the source
/// contained in the target. down -> down: components of the target
/// contained in the source. down -> up: components of D ∩ U that are closed
/// upward in Q and downward within D.
/// Throws std::invalid_argument if the modules live over different posets.
HomSpace hom_indicator(const IndicatorModule& source, const IndicatorModule& target);

/// The homomorphism sum_i coefficients[i] * (basis vector i).
ModuleHom realize_hom(const IndicatorModule& source, const IndicatorModule& target, const HomSpace& space,
                      const std::vector<Scalar>& coefficients);

/// Result of testing whether a map of indicator subquotients acts as one
/// scalar on the whole overlap of supports.
struct ConnectedScalar {
  bool connected = true;
  Scalar scalar{};
  /// Two overlap degrees carrying different scalars when not connected.
  std::optional<std::pair<Element, Element>> witness;
};

/// Requires every component of phi to be at most 1x1. Throws
/// std::invalid_argument otherwise.
ConnectedScalar connected_scalar(const ModuleHom& phi);

/// Which summands are the source of the homomorphism a monomial matrix
/// describes. Fringe presentations and downset resolutions map rows to
/// columns; upset resolutions map columns to rows.
enum class Flow { rows_to_cols, cols_to_rows };

/// Scalar array with indicator labels on rows and columns.
struct MonomialMatrix {
  PosetPtr poset;
  Flow flow = Flow::rows_to_cols;
  std::vector<IndicatorLabel> rows;
  std::vector<IndicatorLabel> cols;
  Matrix entries;

  const std::vector<IndicatorLabel>& source_labels() const { return flow == Flow::rows_to_cols ? rows : cols; }
  const std::vector<IndicatorLabel>& target_labels() const { return flow == Flow::rows_to_cols ? cols : rows; }
  /// Scalar on the component from source summand s to target summand t.
  const Scalar& component(std::size_t s, std::size_t t) const {
    return flow == Flow::rows_to_cols ? entries.at(s, t) : entries.at(t, s);
  }

  /// Fringe orientation: rows are birth upsets, columns death downsets.
  static MonomialMatrix fringe(PosetPtr poset, const std::vector<Upset>& rows, const std::vector<Downset>& cols,
                               Matrix entries);
};

/// True iff a nonzero connected homomorphism k[source] -> k[target] exists:
/// the overlap is nonempty and "1 on the overlap, 0 elsewhere" commutes.
bool admits_connected_hom(const FinitePoset& p, const IndicatorLabel& source, const IndicatorLabel& target);

struct EntryViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const EntryViolation&, const EntryViolation&) = default;
};

/// Every nonzero entry must connect labels admitting a connected
/// homomorphism; for fringe matrices this is U ∩ D nonempty.
std::vector<EntryViolation> validate_monomial_matrix(const MonomialMatrix& mm);

/// Direct sum of indicator modules in label order.
PosetModule indicator_sum(const PosetPtr& poset, const Field& field, const std::vector<IndicatorLabel>& labels);

/// Position of label k among the labels containing degree a, or npos.
std::size_t summand_position(const std::vector<IndicatorLabel>& labels, std::size_t k, Element a);

class InvalidMonomialMatrix : public std::invalid_argument {
public:
  explicit InvalidMonomialMatrix(std::vector<EntryViolation> v);
  const std::vector<EntryViolation>& violations() const { return violations_; }

private:
  std::vector<EntryViolation> violations_;
};

/// Degreewise realization: at x the entry for (s, t) is the scalar when x
/// lies in both labels, else 0. Throws InvalidMonomialMatrix.
ModuleHom evaluate_monomial_matrix(const MonomialMatrix& mm);

/// Image of the evaluated matrix with the factorization source ->> image >-> target.
ImageResult image_module(const MonomialMatrix& mm);

/// Inverse of evaluation for homs between indicator sums whose components
/// are connected: reads each component's scalar at a degree of the overlap.
MonomialMatrix extract_monomial_matrix(const ModuleHom& phi, Flow flow, const std::vector<IndicatorLabel>& source,
                                       const std::vector<IndicatorLabel>& target);

}  // namespace posetmod
