#pragma once

// Small named instances shared by the unit tests and the acceptance run.

#include <functional>

#include "posetmod/filtration.hpp"
#include "posetmod/zn.hpp"

namespace fixtures {

posetmod::PosetPtr grid(std::vector<int> lower, std::vector<int> upper);

/// Builds a module from a rule giving the map on each cover.
posetmod::PosetModule module_from(
    const posetmod::PosetPtr& p, const posetmod::Field& f, std::vector<std::size_t> dims,
    const std::function<posetmod::Matrix(posetmod::Element, posetmod::Element)>& edge);

/// Minima L, R below maxima T, B; every map is 1 except R -> T, which is 2.
/// Elements are indexed L, R, T, B.
posetmod::PosetModule bowtie_module();

/// 2x2 grid with three identity edges and one zero edge.
posetmod::PosetModule noncommuting_square(const posetmod::Field& f);

/// k at the origin plus the constant module, on the grid [-2,2]^2.
posetmod::PosetModule skyscraper_plus_constant(const posetmod::Field& f);

/// k at the origin of Z^2 on the box [-1,1]^2.
posetmod::BoxModule skyscraper_box(const posetmod::Field& f, std::size_t n = 2);

/// The family of upsets <x^2,y>, <x^3,y>, <xy>, <x^2 y> clipped to [0,4]^2.
posetmod::UpsetFamily nontransitive_family();

/// Three vertices at the origin of [0,2]^2, with edge 01 entering at (1,0)
/// and edge 12 at (0,1).
posetmod::MultiFiltration desk_filtration();

}  // namespace fixtures
