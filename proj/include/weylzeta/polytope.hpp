#pragma once

#include <functional>
#include <vector>

#include "weylzeta/linalg.hpp"
#include "weylzeta/multipoly.hpp"

namespace weylzeta {

// Affine form offset + sum coeffs_j x_j with integer coefficients.
struct LinearForm {
    IVec coeffs;
    Rational offset;

    int dim() const { return static_cast<int>(coeffs.size()); }
    Rational eval(const QVec& x) const;
    Rational min_on_cube() const;
    Rational max_on_cube() const;
};

using Point = QVec;

struct Simplex {
    std::vector<Point> vertices; // d+1 points
};

// |det| of the edge matrix divided by d!.
Rational simplex_volume(const Simplex& s);

// One full-dimensional region of the unit cube on which every tracked form
// satisfies shifts[i] <= form_i(x) < shifts[i] + 1.
struct Cell {
    IVec shifts;
    std::vector<Point> vertices;
    std::vector<Simplex> simplices;
    Point interior_point; // vertex centroid
    Rational volume;
};

struct CellComplex {
    int dim = 1;
    std::vector<LinearForm> forms;
    std::vector<Cell> cells;

    Rational total_volume() const;
};

// Cuts [0,1]^d by the integer-shift hyperplanes of the given forms and
// triangulates every full-dimensional region; zero-volume regions are
// discarded by exact volume test. Throws dimension_error for d > 3.
CellComplex cut_unit_cube(int d, const std::vector<LinearForm>& forms);

// Exact integral of a per-cell polynomial over the whole complex.
Rational integrate_over_complex(const CellComplex& complex,
                                const std::function<MultiPoly(const Cell&)>& integrand_per_cell);

// A factor B(form(x)) of a product integrand: `poly` is univariate and is
// evaluated on the affine form in cell coordinates. Affine coefficients are
// rational here because per-cell shifts and simplex maps have been folded in.
struct ComposedFactor {
    MultiPoly poly; // univariate
    QVec coeffs;    // length = complex dim
    Rational offset;
};

// Same integral for integrands given in factored form; avoids composing the
// expanded product with every simplex map.
Rational integrate_factored_over_complex(
    const CellComplex& complex,
    const std::function<std::vector<ComposedFactor>(const Cell&)>& factors_per_cell);

} // namespace weylzeta
