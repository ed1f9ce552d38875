"""Lattice polytopes with paired vertex and facet representations.

Facet inequalities use the convention ``<normal, x> >= rhs`` with a primitive
integer normal, so a reflexive polytope is exactly one whose facets all read
``<u, x> >= -1``.  Vertex lists are kept lexicographically sorted; polytope
equality is equality of that canonical form.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd

from .linalg import (
    det,
    dot,
    kernel_basis,
    primitive,
    rank,
    solve_exact,
    vec_sub,
)


class PolytopeError(Exception):
    pass


class DimensionDeficiencyError(PolytopeError):
    pass


class DegenerateRestrictionError(PolytopeError):
    pass


@dataclass(frozen=True)
class Facet:
    normal: tuple          # primitive integer vector u
    rhs: int               # inequality <u, x> >= rhs
    vertex_indices: frozenset


@dataclass(frozen=True)
class LatticePolytope:
    dim: int
    vertices: tuple        # sorted tuple of integer coordinate tuples
    facets: tuple          # of Facet, sorted by (normal, rhs)

    @property
    def n_vertices(self):
        return len(self.vertices)

    def contains_origin_interior(self):
        return all(f.rhs < 0 for f in self.facets)

    def is_reflexive(self):
        return all(f.rhs == -1 for f in self.facets)

    def facet_vertices(self, facet):
        return [self.vertices[i] for i in sorted(facet.vertex_indices)]

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, vertices={self.n_vertices}, facets={len(self.facets)})"


@dataclass(frozen=True)
class DualPair:
    q: LatticePolytope     # Fano side
    p: LatticePolytope     # reflexive dual P = Q*


def assemble(vertices, halfspaces):
    """Canonical polytope from a vertex list and an irredundant facet list.

    ``halfspaces`` is a list of (primitive normal, rhs); incidence is
    recomputed from scratch.  Used by constructions that already know both
    representations exactly (dual, direct_product).
    """
    verts = sorted(set(tuple(int(x) for x in v) for v in vertices))
    n = len(verts[0])
    facets = []
    for u, b in halfspaces:
        inc = frozenset(i for i, v in enumerate(verts) if dot(u, v) == b)
        facets.append(Facet(normal=tuple(u), rhs=b, vertex_indices=inc))
    facets.sort(key=lambda f: (f.normal, f.rhs))
    return LatticePolytope(dim=n, vertices=tuple(verts), facets=tuple(facets))


def hull(points):
    """Convex hull of integer points: irredundant vertices, facets, incidence.

    Exhaustive search over supporting hyperplanes spanned by point subsets;
    exact, order-insensitive, and robust to redundant input points.
    """
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        raise DimensionDeficiencyError("no input points")
    n = len(pts[0])
    if len(pts) < n + 1:
        raise DimensionDeficiencyError("too few points to span the space")
    base = pts[0]
    diffs = [vec_sub(p, base) for p in pts[1:]]
    if rank(diffs) < n:
        raise DimensionDeficiencyError("points do not affinely span the space")

    seen = {}
    for idx in combinations(range(len(pts)), n):
        rows = [vec_sub(pts[i], pts[idx[0]]) for i in idx[1:]]
        ker = kernel_basis(rows, ncols=n) if rows else kernel_basis([], ncols=n)
        if len(ker) != 1:
            continue
        u = ker[0]
        b = dot(u, pts[idx[0]])
        key = (u, b)
        if key in seen or (tuple(-x for x in u), -b) in seen:
            continue
        vals = [dot(u, p) for p in pts]
        lo, hi = min(vals), max(vals)
        if lo == b and hi > b:
            seen[(u, b)] = frozenset(i for i, v in enumerate(vals) if v == b)
        elif hi == b and lo < b:
            u2 = tuple(-x for x in u)
            seen[(u2, -b)] = frozenset(i for i, v in enumerate(vals) if v == b)

    # vertices: points whose incident facet normals span the whole space
    incident = {i: [] for i in range(len(pts))}
    for (u, b), inc in seen.items():
        for i in inc:
            incident[i].append(u)
    vert_idx = [i for i in range(len(pts)) if len(incident[i]) >= n and rank(incident[i]) == n]
    verts = [pts[i] for i in vert_idx]
    return assemble(verts, [(u, b) for (u, b) in seen])


def is_smooth_fano(p: LatticePolytope):
    """Smooth Fano test with a certificate naming the first violation."""
    if not p.contains_origin_interior():
        return False, "origin is not strictly interior"
    for v in p.vertices:
        g = 0
        for x in v:
            g = gcd(g, abs(x))
        if g != 1:
            return False, f"vertex {v} is not primitive"
    for f in p.facets:
        vs = p.facet_vertices(f)
        if len(vs) != p.dim:
            return False, (
                f"facet with normal {f.normal} has {len(vs)} vertices, expected {p.dim}"
            )
        d = det([list(v) for v in vs])
        if d not in (1, -1):
            return False, (
                f"facet with normal {f.normal} has vertex matrix determinant {d}"
            )
    return True, None


def dual(q: LatticePolytope) -> DualPair:
    """Dual pair (Q, P) with P = {y : <y, x> >= -1 for all x in Q}.

    Requires Q reflexive (all facet rhs -1 once normals are primitive), which
    holds for every smooth Fano polytope; then P's vertices are exactly Q's
    facet normals and P's facets are Q's vertices.
    """
    if not q.contains_origin_interior():
        raise PolytopeError("dualization needs the origin strictly interior")
    if not q.is_reflexive():
        raise PolytopeError("dual polytope would not be a lattice polytope")
    p_vertices = [f.normal for f in q.facets]
    p_halfspaces = [(v, -1) for v in q.vertices]
    p = assemble(p_vertices, p_halfspaces)
    return DualPair(q=q, p=p)


def dual_pair_of(points) -> DualPair:
    return dual(hull(points))


def faces_codim2(p: LatticePolytope):
    """All ridges, each as (vertex index frozenset, (facet index, facet index))."""
    n = p.dim
    out = []
    for i, j in combinations(range(len(p.facets)), 2):
        s = p.facets[i].vertex_indices & p.facets[j].vertex_indices
        if len(s) < n - 1:
            continue
        vs = [p.vertices[k] for k in s]
        diffs = [vec_sub(v, vs[0]) for v in vs[1:]]
        if (n - 2 == 0 and len(s) == 1) or (diffs and rank(diffs) == n - 2):
            out.append((s, (i, j)))
    return out


def free_sum(q1: LatticePolytope, q2: LatticePolytope) -> LatticePolytope:
    """conv(Q1 x 0, 0 x Q2) in block coordinates."""
    if not (q1.contains_origin_interior() and q2.contains_origin_interior()):
        raise PolytopeError("free sum needs the origin interior on both sides")
    z1 = (0,) * q1.dim
    z2 = (0,) * q2.dim
    pts = [v + z2 for v in q1.vertices] + [z1 + w for w in q2.vertices]
    return hull(pts)


def segment() -> LatticePolytope:
    return hull([(-1,), (1,)])


def direct_product(p1: LatticePolytope, p2: LatticePolytope) -> LatticePolytope:
    """Cartesian product in block coordinates; vertices are all pairs."""
    if not (p1.contains_origin_interior() and p2.contains_origin_interior()):
        raise PolytopeError("product needs the origin interior on both sides")
    z1 = (0,) * p1.dim
    z2 = (0,) * p2.dim
    verts = [v + w for v in p1.vertices for w in p2.vertices]
    halfspaces = [(f.normal + z2, f.rhs) for f in p1.facets]
    halfspaces += [(z1 + f.normal, f.rhs) for f in p2.facets]
    return assemble(verts, halfspaces)


@dataclass(frozen=True)
class SubspacePolytope:
    """A polytope sliced out of an ambient polytope by a linear subspace.

    Lives in coordinates with respect to ``basis``; vertices may be rational.
    ``constraints`` are (coeffs, rhs) meaning <coeffs, c> >= rhs and contain
    one entry per ambient facet (possibly redundant after restriction).
    """

    dim: int
    basis: tuple           # subspace basis vectors in ambient coordinates
    vertices: tuple        # rational coordinate tuples w.r.t. basis
    constraints: tuple

    def ambient_vertices(self):
        out = []
        for c in self.vertices:
            v = [Fraction(0)] * len(self.basis[0]) if self.basis else []
            for cj, bj in zip(c, self.basis):
                v = [x + cj * y for x, y in zip(v, bj)]
            out.append(tuple(v))
        return out


def restrict_to_subspace(p: LatticePolytope, basis) -> SubspacePolytope:
    """P intersected with the span of ``basis``, in basis coordinates."""
    basis = [tuple(Fraction(x) for x in b) for b in basis]
    d = len(basis)
    if d == 0:
        if not p.contains_origin_interior():
            raise DegenerateRestrictionError("subspace misses the interior")
        return SubspacePolytope(dim=0, basis=(), vertices=((),), constraints=())
    if rank(basis) != d:
        raise DegenerateRestrictionError("basis is not linearly independent")
    if not p.contains_origin_interior():
        raise DegenerateRestrictionError("subspace misses the interior")
    cons = []
    for f in p.facets:
        coeffs = tuple(dot(f.normal, b) for b in basis)
        cons.append((coeffs, Fraction(f.rhs)))
    verts = set()
    for idx in combinations(range(len(cons)), d):
        a = [list(cons[i][0]) for i in idx]
        if rank(a) != d:
            continue
        x = solve_exact(a, [cons[i][1] for i in idx])
        if all(dot(c, x) >= b for c, b in cons):
            verts.add(tuple(x))
    return SubspacePolytope(
        dim=d,
        basis=tuple(basis),
        vertices=tuple(sorted(verts)),
        constraints=tuple(cons),
    )


@lru_cache(maxsize=256)
def face_children(p: LatticePolytope):
    """Face poset of the boundary, top-down.

    Returns (children, dims): ``children`` maps a face's vertex index set to
    the list of its facets (one dimension lower); ``dims`` maps each face to
    its dimension.  Faces are the intersections of facet vertex sets, so no
    rank computations are needed below the top level.
    """
    facet_sets = [f.vertex_indices for f in p.facets]
    children = {}
    dims = {}
    frontier = list(dict.fromkeys(facet_sets))
    for s in frontier:
        dims[s] = p.dim - 1
    while frontier:
        nxt = []
        for s in frontier:
            if s in children:
                continue
            cands = set()
            for fs in facet_sets:
                inter = s & fs
                if inter and inter != s:
                    cands.add(inter)
            maximal = [
                c for c in cands
                if not any(c < other for other in cands)
            ]
            children[s] = maximal
            for c in maximal:
                if c not in dims:
                    dims[c] = dims[s] - 1
                    nxt.append(c)
        frontier = nxt
    for s in dims:
        children.setdefault(s, [])
    return children, dims


@lru_cache(maxsize=256)
def pulling_triangulation(p: LatticePolytope):
    """Triangulation of the boundary: simplices as sorted vertex index tuples.

    Each facet is triangulated by recursively pulling its lexicographically
    first vertex; facet triangulations are independent, which is all the
    origin-cone volume computation needs.
    """
    children, dims = face_children(p)
    cache = {}

    def pull(s):
        if s in cache:
            return cache[s]
        if len(s) == dims[s] + 1:
            result = [tuple(sorted(s))]
        else:
            w = min(s)
            result = []
            for c in children[s]:
                if w not in c:
                    for t in pull(c):
                        result.append((w,) + t)
        cache[s] = result
        return result

    simplices = []
    for f in p.facets:
        simplices.extend(pull(f.vertex_indices))
    return simplices
