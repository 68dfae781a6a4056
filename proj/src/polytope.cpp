#include "weylzeta/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "weylzeta/errors.hpp"

namespace weylzeta {

Rational LinearForm::eval(const QVec& x) const {
    Rational s = offset;
    for (size_t j = 0; j < coeffs.size(); ++j) s += Rational(coeffs[j]) * x[j];
    return s;
}

Rational LinearForm::min_on_cube() const {
    Rational s = offset;
    for (long c : coeffs)
        if (c < 0)
            s += Rational(c);
    return s;
}

Rational LinearForm::max_on_cube() const {
    Rational s = offset;
    for (long c : coeffs)
        if (c > 0)
            s += Rational(c);
    return s;
}

Rational simplex_volume(const Simplex& s) {
    const int d = static_cast<int>(s.vertices.size()) - 1;
    QMat edges(d, QVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) edges[i][j] = s.vertices[i + 1][j] - s.vertices[0][j];
    Rational det = qmat_det(edges).abs();
    return det / factorial_q(d);
}

Rational CellComplex::total_volume() const {
    Rational v(0);
    for (const auto& c : cells) v += c.volume;
    return v;
}

namespace {

// Hyperplane a . x = b, canonicalized over the integers for dedupe.
struct Plane {
    IVec a;
    Rational b;

    QVec key() const {
        // scale so that entries are integers with gcd 1 and first nonzero positive
        mpz_class den = b.den();
        mpz_class g = 0;
        for (long c : a) g = gcd(g, mpz_class(c) * den);
        g = gcd(g, b.num());
        if (g == 0)
            g = 1;
        int lead_sign = 0;
        for (long c : a)
            if (c != 0) {
                lead_sign = c > 0 ? 1 : -1;
                break;
            }
        if (lead_sign == 0)
            lead_sign = b.sign() >= 0 ? 1 : -1;
        QVec k;
        for (long c : a) k.push_back(Rational(mpz_class(c) * den * lead_sign, g));
        k.push_back(Rational(b.num() * lead_sign, g));
        return k;
    }

    Rational eval(const Point& x) const {
        Rational s(0);
        for (size_t j = 0; j < a.size(); ++j) s += Rational(a[j]) * x[j];
        return s;
    }
    bool contains(const Point& x) const { return eval(x) == b; }
};

std::optional<Point> solve_planes(const std::vector<const Plane*>& ps, int d) {
    QMat m(d, QVec(d));
    QVec rhs(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = Rational(ps[i]->a[j]);
        rhs[i] = ps[i]->b;
    }
    try {
        return qmat_solve(m, rhs);
    } catch (const computation_error&) {
        return std::nullopt;
    }
}

Point centroid(const std::vector<Point>& pts, int d) {
    Point c(d, Rational(0));
    for (const auto& p : pts)
        for (int j = 0; j < d; ++j) c[j] += p[j];
    const Rational n(static_cast<long>(pts.size()));
    for (int j = 0; j < d; ++j) c[j] /= n;
    return c;
}

// CCW order around a center by exact half-plane + cross-product comparison.
void sort_ccw(std::vector<Point>& pts, const Point& center, int ax, int ay) {
    auto half = [&](const Point& p) {
        const Rational dy = p[ay] - center[ay];
        const Rational dx = p[ax] - center[ax];
        if (dy.sign() > 0 || (dy.sign() == 0 && dx.sign() > 0))
            return 0;
        return 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
        const int hp = half(p), hq = half(q);
        if (hp != hq)
            return hp < hq;
        const Rational cross = (p[ax] - center[ax]) * (q[ay] - center[ay]) -
                               (p[ay] - center[ay]) * (q[ax] - center[ax]);
        if (cross.sign() != 0)
            return cross.sign() > 0;
        // collinear with the center: order by distance so duplicates stay adjacent
        const Rational dp = (p[ax] - center[ax]) * (p[ax] - center[ax]) +
                            (p[ay] - center[ay]) * (p[ay] - center[ay]);
        const Rational dq = (q[ax] - center[ax]) * (q[ax] - center[ax]) +
                            (q[ay] - center[ay]) * (q[ay] - center[ay]);
        return dp < dq;
    });
}

std::vector<Simplex> fan_triangles(const std::vector<Point>& ring) {
    std::vector<Simplex> out;
    for (size_t i = 1; i + 1 < ring.size(); ++i)
        out.push_back(Simplex{{ring[0], ring[i], ring[i + 1]}});
    return out;
}

void triangulate_cell(Cell& cell, int d, const std::vector<Plane>& planes) {
    cell.simplices.clear();
    if (d == 1) {
        auto [mn, mx] = std::minmax_element(
            cell.vertices.begin(), cell.vertices.end(),
            [](const Point& p, const Point& q) { return p[0] < q[0]; });
        if ((*mx)[0] != (*mn)[0])
            cell.simplices.push_back(Simplex{{*mn, *mx}});
    } else if (d == 2) {
        std::vector<Point> ring = cell.vertices;
        sort_ccw(ring, centroid(ring, d), 0, 1);
        for (auto& t : fan_triangles(ring))
            if (!simplex_volume(t).is_zero())
                cell.simplices.push_back(std::move(t));
    } else {
        const Point& apex = cell.vertices.front();
        for (const auto& pl : planes) {
            if (pl.contains(apex))
                continue;
            std::vector<Point> on_plane;
            for (const auto& v : cell.vertices)
                if (pl.contains(v))
                    on_plane.push_back(v);
            if (on_plane.size() < 3)
                continue;
            // project out the axis with the largest |normal| component
            int drop = 0;
            for (int j = 1; j < 3; ++j)
                if (std::abs(pl.a[j]) > std::abs(pl.a[drop]))
                    drop = j;
            const int ax = drop == 0 ? 1 : 0;
            const int ay = drop == 2 ? 1 : 2;
            sort_ccw(on_plane, centroid(on_plane, d), ax, ay);
            for (size_t i = 1; i + 1 < on_plane.size(); ++i) {
                Simplex tet{{apex, on_plane[0], on_plane[i], on_plane[i + 1]}};
                if (!simplex_volume(tet).is_zero())
                    cell.simplices.push_back(std::move(tet));
            }
        }
    }
    cell.volume = Rational(0);
    for (const auto& s : cell.simplices) cell.volume += simplex_volume(s);
}

} // namespace

CellComplex cut_unit_cube(int d, const std::vector<LinearForm>& forms) {
    if (d > 3)
        throw dimension_error("cube arrangement supports dimension <= 3");
    if (d < 1)
        throw dimension_error("dimension must be positive");
    for (const auto& f : forms)
        if (f.dim() != d)
            throw variable_mismatch_error("form dimension mismatch");

    CellComplex cx;
    cx.dim = d;
    cx.forms = forms;

    // global plane list: cube facets plus every integer level of every form
    std::vector<Plane> planes;
    std::map<QVec, size_t> seen;
    auto add_plane = [&](Plane p) {
        const QVec k = p.key();
        if (seen.emplace(k, planes.size()).second)
            planes.push_back(std::move(p));
    };
    for (int j = 0; j < d; ++j) {
        IVec e(d, 0);
        e[j] = 1;
        add_plane({e, Rational(0)});
        add_plane({e, Rational(1)});
    }
    std::vector<std::pair<long, long>> level_range;
    for (const auto& f : forms) {
        const long lo = static_cast<long>(f.min_on_cube().floor().get_si());
        long hi = static_cast<long>(f.max_on_cube().floor().get_si());
        if (f.max_on_cube() == Rational(mpz_class(hi)))
            --hi; // the topmost closed level opens no new region
        level_range.emplace_back(lo, hi);
        for (long m = lo; m <= hi + 1; ++m) add_plane({f.coeffs, Rational(m) - f.offset});
    }

    // candidate vertices: exact solutions of d-subsets, kept if inside the cube
    std::vector<Point> candidates;
    std::map<QVec, bool> vseen;
    std::vector<int> idx(d);
    const int np = static_cast<int>(planes.size());
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == d) {
            std::vector<const Plane*> ps;
            for (int i : idx) ps.push_back(&planes[i]);
            auto pt = solve_planes(ps, d);
            if (!pt)
                return;
            for (int j = 0; j < d; ++j)
                if ((*pt)[j] < Rational(0) || (*pt)[j] > Rational(1))
                    return;
            if (vseen.emplace(*pt, true).second)
                candidates.push_back(*pt);
            return;
        }
        for (int i = start; i < np; ++i) {
            idx[chosen] = i;
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);

    // cells: one per feasible floor vector
    IVec shifts(forms.size());
    std::function<void(size_t)> enumerate = [&](size_t fi) {
        if (fi == forms.size()) {
            Cell cell;
            cell.shifts = shifts;
            for (const auto& v : candidates) {
                bool ok = true;
                for (size_t i = 0; i < forms.size() && ok; ++i) {
                    const Rational val = forms[i].eval(v);
                    ok = val >= Rational(shifts[i]) && val <= Rational(shifts[i] + 1);
                }
                if (ok)
                    cell.vertices.push_back(v);
            }
            if (static_cast<int>(cell.vertices.size()) < d + 1)
                return;
            triangulate_cell(cell, d, planes);
            if (cell.volume.is_zero())
                return;
            cell.interior_point = centroid(cell.vertices, d);
            cx.cells.push_back(std::move(cell));
            return;
        }
        for (long m = level_range[fi].first; m <= level_range[fi].second; ++m) {
            shifts[fi] = m;
            enumerate(fi + 1);
        }
    };
    if (forms.empty()) {
        shifts.clear();
        Cell cell;
        cell.shifts = {};
        cell.vertices = candidates;
        triangulate_cell(cell, d, planes);
        cell.interior_point = centroid(cell.vertices, d);
        cx.cells.push_back(std::move(cell));
    } else {
        enumerate(0);
    }

    if (cx.total_volume() != Rational(1))
        throw computation_error("cube arrangement does not partition the cube");
    return cx;
}

namespace {

// x = v0 + M u mapping the standard simplex onto `s`; returns |det M|.
Rational simplex_map(const Simplex& s, int d, QMat& m, QVec& v0) {
    v0 = s.vertices[0];
    m.assign(d, QVec(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) m[j][k] = s.vertices[k + 1][j] - s.vertices[0][j];
    QMat edges(d, QVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) edges[i][j] = m[j][i];
    return qmat_det(edges).abs();
}

MultiPoly compose_univariate_affine(const MultiPoly& p, const QVec& coeffs,
                                    const Rational& offset, int nvars) {
    MultiPoly affine(nvars, offset);
    for (int k = 0; k < nvars; ++k)
        affine += MultiPoly::variable(nvars, k).scaled(coeffs[k]);
    // Horner
    MultiPoly acc(nvars, Rational(0));
    const int deg = p.degree();
    for (int k = deg; k >= 0; --k) {
        if (k != deg)
            acc *= affine;
        acc += MultiPoly(nvars, p.coeff(k));
    }
    return acc;
}

} // namespace

Rational integrate_over_complex(const CellComplex& complex,
                                const std::function<MultiPoly(const Cell&)>& integrand_per_cell) {
    const int d = complex.dim;
    Rational total(0);
    for (const auto& cell : complex.cells) {
        const MultiPoly p = integrand_per_cell(cell);
        if (p.nvars() != d)
            throw variable_mismatch_error("integrand has wrong arity");
        for (const auto& s : cell.simplices) {
            QMat m;
            QVec v0;
            const Rational jac = simplex_map(s, d, m, v0);
            std::vector<MultiPoly> subst;
            for (int j = 0; j < d; ++j) {
                MultiPoly f(d, v0[j]);
                for (int k = 0; k < d; ++k) f += MultiPoly::variable(d, k).scaled(m[j][k]);
                subst.push_back(std::move(f));
            }
            total += integrate_standard_simplex(p.compose(subst)) * jac;
        }
    }
    return total;
}

Rational integrate_factored_over_complex(
    const CellComplex& complex,
    const std::function<std::vector<ComposedFactor>(const Cell&)>& factors_per_cell) {
    const int d = complex.dim;
    Rational total(0);
    for (const auto& cell : complex.cells) {
        const auto factors = factors_per_cell(cell);
        for (const auto& s : cell.simplices) {
            QMat m;
            QVec v0;
            const Rational jac = simplex_map(s, d, m, v0);
            MultiPoly prod(d, Rational(1));
            for (const auto& f : factors) {
                QVec c(d, Rational(0));
                Rational off = f.offset;
                for (int j = 0; j < d; ++j) {
                    off += f.coeffs[j] * v0[j];
                    for (int k = 0; k < d; ++k) c[k] += f.coeffs[j] * m[j][k];
                }
                prod *= compose_univariate_affine(f.poly, c, off, d);
            }
            total += integrate_standard_simplex(prod) * jac;
        }
    }
    return total;
}

} // namespace weylzeta
