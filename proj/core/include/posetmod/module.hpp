#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetmod/matrix.hpp"
#include "posetmod/poset.hpp"

namespace posetmod {

/// Two cover paths from `lower` to `upper` whose composites disagree.
struct DiamondCertificate {
  Element lower = 0;
  Element upper = 0;
  std::vector<Element> path_a;
  std::vector<Element> path_b;
};

class NonCommutingError : public std::invalid_argument {
public:
  explicit NonCommutingError(DiamondCertificate cert);
  const DiamondCertificate& certificate() const { return cert_; }

private:
  DiamondCertificate cert_;
};

/// A representation of a finite poset: a vector space per element and a
/// linear map per cover edge, with all path composites agreeing.
///
/// Edge map for cover p < q is a dims(q) x dims(p) matrix. Composites for
/// every comparable pair are computed once at construction and shared
/// between copies.
class PosetModule {
public:
  PosetModule() = default;

  /// Validates shapes and commutativity. Throws std::invalid_argument on
  /// shape problems and NonCommutingError with a witness diamond.
  static PosetModule build(PosetPtr poset, Field field, std::vector<std::size_t> dims,
                           std::vector<Matrix> edge_maps);

  /// Non-throwing commutativity check; shapes must already be valid.
  static std::optional<DiamondCertificate> find_noncommuting_diamond(const PosetPtr& poset, const Field& field,
                                                                    const std::vector<std::size_t>& dims,
                                                                    const std::vector<Matrix>& edge_maps);

  static PosetModule zero(PosetPtr poset, Field field);
  /// k[S] for a subset S that is an intersection of an upset and a downset:
  /// k on S, identity maps inside S, zero elsewhere.
  static PosetModule indicator(PosetPtr poset, Field field, const Bitset& support);

  const PosetPtr& poset() const { return poset_; }
  const Field& field() const { return field_; }
  std::size_t dim(Element a) const { return dims_[a]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const std::vector<Matrix>& edge_maps() const { return edges_; }
  const Matrix& edge_map(std::size_t cover_index) const { return edges_[cover_index]; }
  /// Structure map M_a -> M_b for a <= b. Throws std::invalid_argument if a is not below b.
  const Matrix& map(Element a, Element b) const;

private:
  PosetPtr poset_;
  Field field_{};
  std::vector<std::size_t> dims_;
  std::vector<Matrix> edges_;
  // composites_[a] lists (b, M_a -> M_b) for b >= a, sorted by b.
  std::shared_ptr<const std::vector<std::vector<std::pair<Element, Matrix>>>> composites_;
};

/// Degree-preserving map of modules over one poset.
class ModuleHom {
public:
  ModuleHom() = default;
  /// Throws std::invalid_argument if shapes are wrong or some cover square
  /// fails to commute.
  ModuleHom(PosetModule source, PosetModule target, std::vector<Matrix> components);

  static ModuleHom zero(PosetModule source, PosetModule target);
  static ModuleHom identity(PosetModule m);

  const PosetModule& source() const { return source_; }
  const PosetModule& target() const { return target_; }
  const Matrix& at(Element a) const { return components_[a]; }
  const std::vector<Matrix>& components() const { return components_; }

  ModuleHom then(const ModuleHom& next) const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;

private:
  PosetModule source_;
  PosetModule target_;
  std::vector<Matrix> components_;
};

struct KernelResult {
  PosetModule module;
  ModuleHom inclusion;
};

struct CokernelResult {
  PosetModule module;
  ModuleHom projection;
};

struct ImageResult {
  PosetModule module;
  ModuleHom surjection;  // source -> image
  ModuleHom inclusion;   // image -> target
};

KernelResult kernel(const ModuleHom& phi);
CokernelResult cokernel(const ModuleHom& phi);
ImageResult image(const ModuleHom& phi);

PosetModule direct_sum(const PosetModule& a, const PosetModule& b);
PosetModule direct_sum(const std::vector<PosetModule>& parts, PosetPtr poset, Field field);

/// (f*H)_q = H_{f(q)}.
PosetModule pullback(const PosetMorphism& f, const PosetModule& h);
ModuleHom pullback(const PosetMorphism& f, const ModuleHom& phi);

/// Left Kan extension along an order embedding: the component at z is the
/// colimit of H over {p : i(p) <= z}. `restriction_witness[p]` is the
/// isomorphism H_p -> (i_*H)_{i(p)}.
struct Pushforward {
  PosetModule module;
  std::vector<Matrix> restriction_witness;
};
Pushforward pushforward(const PosetMorphism& embedding, const PosetModule& h);

/// Vector-space dual over the opposite poset, with transposed maps.
PosetModule dual(const PosetModule& m, const PosetPtr& opposite);
/// Dual of phi: M -> N is phi^T: N* -> M* over the opposite poset.
ModuleHom dual(const ModuleHom& phi, const PosetModule& source_dual, const PosetModule& target_dual);

struct RankEntry {
  Element lower = 0;
  Element upper = 0;
  std::size_t rank = 0;
  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// Rank of M_p -> M_q for all p <= q (p == q included), sorted by (p, q).
std::vector<RankEntry> rank_invariant(const PosetModule& m);

/// Witness isomorphisms a_p : A_p -> B_p commuting with every edge map.
bool is_isomorphism_witness(const PosetModule& a, const PosetModule& b, const std::vector<Matrix>& witness);

}  // namespace posetmod
