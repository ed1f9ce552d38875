"""Lattice automorphism groups of polytopes and their fixed subspaces.

The search anchors on one unimodular facet of the Fano-side polytope: every
automorphism maps that facet's vertex basis onto an ordered vertex tuple of
some facet, so candidates are enumerated facet by facet with backtracking.
Two invariants prune the search: a vertex's sorted profile of facet values,
and pairwise common-facet counts.
"""

from dataclasses import dataclass
from functools import cached_property

from .linalg import (
    dot,
    identity,
    kernel_basis,
    mat_mul,
    mat_vec,
    matrix_inverse_unimodular,
    transpose,
)
from .polytope import DualPair, LatticePolytope, PolytopeError


@dataclass(frozen=True)
class SymmetryGroup:
    """Finite group of unimodular matrices mapping a polytope onto itself."""

    dim: int
    elements: tuple        # sorted tuple of matrices (tuples of row tuples)
    polytope: LatticePolytope | None = None

    @property
    def order(self):
        return len(self.elements)

    @cached_property
    def generators(self):
        """A small generating sublist, found greedily by orbit closure."""
        gens = []
        known = {identity(self.dim)}
        for el in self.elements:
            if el in known:
                continue
            gens.append(el)
            frontier = list(known | {el})
            known.add(el)
            while frontier:
                nxt = []
                for a in frontier:
                    for g in gens:
                        prod = mat_mul(a, g)
                        if prod not in known:
                            known.add(prod)
                            nxt.append(prod)
                frontier = nxt
            if len(known) == len(self.elements):
                break
        return tuple(gens) if gens else (identity(self.dim),)


@dataclass(frozen=True)
class FixedSpace:
    dim: int
    basis: tuple           # primitive integer vectors, possibly empty


def trivial_group(dim, polytope=None):
    return SymmetryGroup(dim=dim, elements=(identity(dim),), polytope=polytope)


def polytope_automorphisms(q: LatticePolytope, prune=True) -> SymmetryGroup:
    """Full group of unimodular maps permuting vert(q).

    Requires some facet of q to have exactly ``dim`` vertices (true for every
    smooth Fano polytope).  ``prune=False`` disables both search invariants;
    the result must not change (used as an oracle in the test suite).
    """
    n = q.dim
    verts = q.vertices
    vindex = {v: i for i, v in enumerate(verts)}
    facets = q.facets
    anchor = next((f for f in facets if len(f.vertex_indices) == n), None)
    if anchor is None:
        raise PolytopeError("automorphism search needs a simplicial facet")

    profiles = []
    for v in verts:
        profiles.append(tuple(sorted(dot(f.normal, v) for f in facets)))
    nv = len(verts)
    common = [[0] * nv for _ in range(nv)]
    for f in facets:
        inc = sorted(f.vertex_indices)
        for a in inc:
            for b in inc:
                common[a][b] += 1

    base = sorted(anchor.vertex_indices)
    b0 = transpose([verts[i] for i in base])  # columns are the anchor basis
    b0_inv = matrix_inverse_unimodular(b0)

    vertex_set = set(verts)
    found = set()

    def accept(assignment):
        w = transpose([verts[i] for i in assignment])
        a = mat_mul(w, b0_inv)
        for v in verts:
            if mat_vec(a, v) not in vertex_set:
                return
        found.add(a)

    for facet in facets:
        targets = sorted(facet.vertex_indices)
        assignment = []
        used = set()

        def backtrack(pos):
            if pos == n:
                accept(assignment)
                return
            src = base[pos]
            for t in targets:
                if t in used:
                    continue
                if prune:
                    if profiles[t] != profiles[src]:
                        continue
                    if any(
                        common[t][assignment[j]] != common[src][base[j]]
                        for j in range(pos)
                    ):
                        continue
                assignment.append(t)
                used.add(t)
                backtrack(pos + 1)
                assignment.pop()
                used.discard(t)

        backtrack(0)

    return SymmetryGroup(dim=n, elements=tuple(sorted(found)), polytope=q)


def transport_group(g: SymmetryGroup, polytope=None) -> SymmetryGroup:
    """Inverse-transpose image of the group (the dual-side action)."""
    elems = tuple(sorted(transpose(matrix_inverse_unimodular(a)) for a in g.elements))
    return SymmetryGroup(dim=g.dim, elements=elems, polytope=polytope)


def automorphism_group(dp: DualPair, prune=True):
    """Groups of the Fano side and the dual side of a dual pair."""
    gq = polytope_automorphisms(dp.q, prune=prune)
    gp = transport_group(gq, polytope=dp.p)
    return gq, gp


def fixed_space(g: SymmetryGroup) -> FixedSpace:
    """Common fixed subspace, as a primitive integer basis."""
    n = g.dim
    rows = []
    ident = identity(n)
    for a in g.elements:
        for ra, ri in zip(a, ident):
            row = tuple(x - y for x, y in zip(ra, ri))
            if any(row):
                rows.append(row)
    if not rows:
        return FixedSpace(dim=n, basis=tuple(identity(n)))
    basis = kernel_basis(rows, ncols=n)
    return FixedSpace(dim=len(basis), basis=tuple(basis))


def is_symmetric(dp: DualPair, groups=None) -> bool:
    """True iff only the origin is fixed by the whole automorphism group.

    The fixed subspace is rational, so it contains a nonzero lattice point
    iff it is nonzero; the test is a fixed-space dimension check.
    """
    if groups is None:
        groups = automorphism_group(dp)
    gq, _ = groups
    return fixed_space(gq).dim == 0


def vertex_sum(q: LatticePolytope):
    """Coordinate-wise sum of all vertices."""
    out = [0] * q.dim
    for v in q.vertices:
        for i, x in enumerate(v):
            out[i] += x
    return tuple(out)
