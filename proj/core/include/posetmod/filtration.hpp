#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetmod/encoding.hpp"

namespace posetmod {

/// A simplex with its entry grades: it is present at every grid point
/// above one of them.
struct FilteredSimplex {
  std::vector<std::size_t> vertices;    // sorted, distinct
  std::vector<std::vector<int>> entry;  // minimal grades

  std::size_t dimension() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct MultiFiltration {
  Box grid;
  std::vector<FilteredSimplex> simplices;
};

struct FiltrationViolation {
  enum class Kind {
    malformed_simplex,  // empty, unsorted or repeated vertices
    duplicate_simplex,
    grade_outside_grid,
    missing_face,       // a codimension-one face is not in the complex
    face_enters_late,   // a grade of the simplex lies outside the face's entry upset
  };
  Kind kind = Kind::malformed_simplex;
  std::size_t simplex = 0;
  std::size_t face = 0;  // for face_enters_late
  std::vector<int> grade;

  std::string message() const;
};

std::vector<FiltrationViolation> validate_filtration(const MultiFiltration& f);

/// Grid poset and, per simplex, its entry upset.
std::vector<Upset> entry_upsets(const MultiFiltration& f, const PosetPtr& grid);

/// H_i at every grid point with the chosen cycle representatives.
struct PHModule {
  PosetModule module;  // over FinitePoset::grid(f.grid)
  std::size_t degree = 0;
  /// Per grid point: global indices of the degree-i simplices present, in
  /// increasing order, and representatives as columns over them.
  std::vector<std::vector<std::size_t>> chains;
  std::vector<Matrix> representatives;
};

/// Throws std::invalid_argument if the filtration does not validate.
PHModule persistent_homology(const MultiFiltration& f, std::size_t degree, const Field& field);

/// Encoding through the poset of distinct realized subcomplexes ordered by
/// inclusion, with H the homology of each subcomplex and identity witnesses.
Encoding natural_encoding(const MultiFiltration& f, std::size_t degree, const Field& field);

/// Grid point where the alternating count of simplices differs from the
/// alternating sum of Betti numbers, if any.
std::optional<std::vector<int>> euler_characteristic_mismatch(const MultiFiltration& f, const Field& field);

}  // namespace posetmod
