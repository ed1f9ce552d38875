"""Exact metric and enumerative invariants of lattice polytopes.

Volumes use the Euclidean normalization (unit cube = 1); relative volumes of
faces use the induced-lattice normalization (fundamental domain of the
affine lattice = 1), the convention compatible with Ehrhart coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .linalg import (
    det,
    dot,
    kernel_basis,
    rank,
    saturated_kernel,
    solve_exact,
    vec_sub,
)
from .polytope import (
    LatticePolytope,
    SubspacePolytope,
    faces_codim2,
    hull,
    pulling_triangulation,
)


class MeasureError(Exception):
    pass


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Coefficients a_0..a_n of k -> #(kP ∩ Z^n)."""

    coefficients: tuple    # of Fraction

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, k):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * k + c
        return acc


@lru_cache(maxsize=256)
def volume_and_barycenter(p: LatticePolytope):
    """Exact Euclidean volume and barycenter via a boundary triangulation.

    The polytope is coned from its first vertex over a pulling triangulation
    of each facet; the barycenter is the volume-weighted mean of simplex
    centroids (independent of the apex choice).
    """
    n = p.dim
    if n == 0:
        return Fraction(1), ()
    apex = p.vertices[0]
    nfact = factorial(n)
    vol = Fraction(0)
    weighted = [Fraction(0)] * n
    for t in pulling_triangulation(p):
        vs = [p.vertices[i] for i in t]
        if apex in vs:
            continue
        d = det([list(vec_sub(v, apex)) for v in vs])
        if d == 0:
            continue
        w = Fraction(abs(d), nfact)
        vol += w
        cent = [Fraction(apex[j] + sum(v[j] for v in vs), n + 1) for j in range(n)]
        for j in range(n):
            weighted[j] += w * cent[j]
    if vol == 0:
        raise MeasureError("polytope has zero volume")
    return vol, tuple(c / vol for c in weighted)


def volume(p: LatticePolytope):
    return volume_and_barycenter(p)[0]


def _fm_eliminate(cons):
    """Fourier-Motzkin elimination of the last variable.

    ``cons`` are (coeffs, rhs) meaning <coeffs, x> <= rhs.  Output constrains
    the remaining prefix variables; exact, with gcd reduction and dedup.
    """
    zeros, pos, neg = [], [], []
    for a, b in cons:
        c = a[-1]
        if c == 0:
            zeros.append((a[:-1], b))
        elif c > 0:
            pos.append((a, b))
        else:
            neg.append((a, b))
    out = dict(zeros)
    for a, b in pos:
        for c, e in neg:
            al, cl = a[-1], c[-1]
            coeffs = tuple(al * cj - cl * aj for aj, cj in zip(a[:-1], c[:-1]))
            rhs = al * e - cl * b
            g = 0
            for x in coeffs:
                g = gcd(g, abs(x))
            g = gcd(g, abs(rhs))
            if g > 1:
                coeffs = tuple(x // g for x in coeffs)
                rhs = rhs // g
            if not any(coeffs):
                if rhs < 0:
                    return None  # globally infeasible projection
                continue
            prev = out.get(coeffs)
            if prev is None or rhs < prev:
                out[coeffs] = rhs
    merged = {}
    for a, b in list(out.items()) + zeros:
        prev = merged.get(a)
        if prev is None or b < prev:
            merged[a] = b
    return [(a, b) for a, b in merged.items()]


def count_lattice_points(p: LatticePolytope, k=1):
    """Exact number of lattice points in the k-th dilate.

    Coordinate-recursive slicing: successive exact eliminations give the
    integer range of each coordinate given the previous ones.
    """
    if k < 1:
        raise MeasureError("dilation factor must be a positive integer")
    n = p.dim
    if n == 0:
        return 1
    # <u, x> >= k*rhs  as  <-u, x> <= -k*rhs
    systems = [None] * n
    cons = [(tuple(-x for x in f.normal), -k * f.rhs) for f in p.facets]
    systems[n - 1] = cons
    for d in range(n - 1, 0, -1):
        cons = _fm_eliminate(cons)
        if cons is None:
            return 0
        systems[d - 1] = cons

    def bounds(cons, prefix):
        lo, hi = None, None
        for a, b in cons:
            c = a[-1]
            rest = b - sum(aj * xj for aj, xj in zip(a, prefix))
            if c > 0:
                val = Fraction(rest, c)
                if hi is None or val < hi:
                    hi = val
            elif c < 0:
                val = Fraction(rest, c)
                if lo is None or val > lo:
                    lo = val
        return lo, hi

    def count_level(d, prefix):
        lo, hi = bounds(systems[d], prefix)
        if lo is None or hi is None:
            raise MeasureError("unbounded slice; input is not a polytope")
        ilo = -((-lo.numerator) // lo.denominator)  # ceil
        ihi = hi.numerator // hi.denominator        # floor
        if ihi < ilo:
            return 0
        if d == n - 1:
            return ihi - ilo + 1
        total = 0
        for x in range(ilo, ihi + 1):
            total += count_level(d + 1, prefix + (x,))
        return total

    return count_level(0, ())


def count_lattice_points_bruteforce(p: LatticePolytope, k=1):
    """Bounding-box enumeration oracle (small dimensions only)."""
    n = p.dim
    los = [min(v[j] for v in p.vertices) * k for j in range(n)]
    his = [max(v[j] for v in p.vertices) * k for j in range(n)]
    count = 0

    def rec(j, point):
        nonlocal count
        if j == n:
            if all(dot(f.normal, point) >= k * f.rhs for f in p.facets):
                count += 1
            return
        for x in range(los[j], his[j] + 1):
            rec(j + 1, point + (x,))

    rec(0, ())
    return count


def ehrhart(p: LatticePolytope) -> EhrhartPolynomial:
    """Exact interpolation of the lattice point counting polynomial."""
    n = p.dim
    counts = [1] + [count_lattice_points(p, k) for k in range(1, n + 1)]
    vandermonde = [[Fraction(k) ** i for i in range(n + 1)] for k in range(n + 1)]
    coeffs = solve_exact(vandermonde, [Fraction(c) for c in counts])
    return EhrhartPolynomial(coefficients=tuple(coeffs))


def relative_volume(face_vertices):
    """Lattice-normalized volume of a face in its affine hull.

    The face is mapped to Z^d via a basis of the full induced affine lattice
    (computed through Smith normal form saturation) and measured there with
    unit fundamental domain.  A single vertex counts 1 by convention.
    """
    vs = [tuple(int(x) for x in v) for v in face_vertices]
    if len(vs) == 1:
        return Fraction(1)
    n = len(vs[0])
    v0 = vs[0]
    diffs = [vec_sub(v, v0) for v in vs[1:]]
    d = rank(diffs)
    if d == n:
        return volume(hull(vs))
    normals = kernel_basis(diffs, ncols=n)
    lattice_basis = saturated_kernel(normals)
    assert len(lattice_basis) == d
    cols = list(zip(*lattice_basis))  # n x d
    coords = []
    for diff in diffs:
        # least-squares-free exact solve: pick d independent rows
        sub_rows = []
        sub_rhs = []
        for i in range(n):
            cand = sub_rows + [cols[i]]
            if rank(cand) > len(sub_rows):
                sub_rows.append(cols[i])
                sub_rhs.append(diff[i])
            if len(sub_rows) == d:
                break
        c = solve_exact(sub_rows, sub_rhs)
        assert all(x.denominator == 1 for x in c)
        coords.append(tuple(int(x) for x in c))
    coords.append((0,) * d)
    return volume(hull(coords))


def boundary_volume(p: LatticePolytope):
    """Sum of facet relative volumes (twice the a_{n-1} Ehrhart coefficient)."""
    total = Fraction(0)
    for f in p.facets:
        total += relative_volume(p.facet_vertices(f))
    return total


def codim2_volume(p: LatticePolytope):
    """Total relative volume of all ridges."""
    total = Fraction(0)
    for s, _ in faces_codim2(p):
        total += relative_volume([p.vertices[i] for i in sorted(s)])
    return total


def coefficient_of_asymmetry(s):
    """max over facet normals a (normalized to <a,x> <= 1) and vertices w of <a, -w>.

    Equals the supremum-of-reach-ratios definition for polytopes with the
    origin interior; accepts a LatticePolytope or a SubspacePolytope.
    Redundant valid inequalities cannot increase the maximum, so any complete
    constraint list works.
    """
    if isinstance(s, LatticePolytope):
        verts = s.vertices
        cons = [(f.normal, Fraction(f.rhs)) for f in s.facets]
    elif isinstance(s, SubspacePolytope):
        verts = s.vertices
        cons = list(s.constraints)
    else:
        raise TypeError("expected a polytope")
    if not cons or any(b >= 0 for _, b in cons):
        raise MeasureError("origin must be strictly interior")
    best = None
    for a, b in cons:
        scaled = [Fraction(x) / b for x in a]  # b < 0: <scaled, x> <= 1
        for w in verts:
            val = -dot(scaled, w)
            if best is None or val > best:
                best = val
    return best


def fano_index(p: LatticePolytope):
    """Largest i such that (P - v)/i is still a lattice polytope.

    Equals the gcd of all coordinates of vertex differences, which is
    independent of the base vertex.
    """
    if p.n_vertices < 2:
        raise MeasureError("need at least two vertices")
    v0 = p.vertices[0]
    g = 0
    for w in p.vertices[1:]:
        for x in vec_sub(w, v0):
            g = gcd(g, abs(x))
    return g


@dataclass(frozen=True)
class MeasureReport:
    volume: Fraction
    barycenter: tuple
    degree: Fraction       # n! * volume
    boundary_relvol: Fraction
    codim2_relvol: Fraction
    fano_index: int


def measure_report(p: LatticePolytope) -> MeasureReport:
    vol, bary = volume_and_barycenter(p)
    return MeasureReport(
        volume=vol,
        barycenter=bary,
        degree=factorial(p.dim) * vol,
        boundary_relvol=boundary_volume(p),
        codim2_relvol=codim2_volume(p),
        fano_index=fano_index(p),
    )
