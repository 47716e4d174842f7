"""Geometric certificates: exact smoothness, fixed loci, projection degrees.

Smoothness is decided in two stages.  A cheap vertex screen catches
coordinate points that lie on the hypersurface with no near-power monomial
(all partials vanish there, an explicit singular point).  The full test
checks that the Jacobian ideal contains every form of degree
e = (n+2)(d-2)+1: for a smooth hypersurface the partials are a regular
sequence whose Artinian quotient has socle degree (n+2)(d-2), so the degree-e
graded piece of the ideal fills up exactly when the hypersurface is smooth
(characteristic zero).  The surjectivity check is an exact rank computation
on a sparse matrix over the cyclotomic coefficient field; full rank proves
smoothness, a rank deficit proves a singular point exists (without naming
one).
"""

from __future__ import annotations

from dataclasses import dataclass

from .autgrp import CapExceededError, DiagAut, multiplier
from .cyclo import CycloNum, rational
from .poly import HomogPoly, Monomial, monomials_of_degree

DEFAULT_ENTRY_CAP = 200_000


# -- smoothness ----------------------------------------------------------------


@dataclass(frozen=True)
class SmoothnessCertificate:
    verdict: str                       # "smooth" | "singular" | "inconclusive"
    method: str | None                 # "vertex_screen" | "macaulay_rank"
    witness: tuple[int, ...] | None = None   # coordinate point, when known
    reason: str | None = None
    rank: int | None = None
    target_rank: int | None = None

    @property
    def is_smooth(self) -> bool:
        return self.verdict == "smooth"

    def witness_str(self) -> str | None:
        if self.witness is None:
            return None
        return "[" + ":".join(str(c) for c in self.witness) + "]"


def smoothness(F: HomogPoly, entry_cap: int = DEFAULT_ENTRY_CAP) -> SmoothnessCertificate:
    """Exact smoothness certificate for the hypersurface F = 0."""
    if F.is_zero():
        raise ValueError("the zero polynomial does not define a hypersurface")
    profile = F.support_queries()
    for i in profile.missing_near_power:
        point = tuple(1 if j == i else 0 for j in range(F.num_vars))
        return SmoothnessCertificate(
            verdict="singular",
            method="vertex_screen",
            witness=point,
            reason=f"all partials vanish at the coordinate point P{i}",
        )
    return _macaulay_certificate(F, entry_cap)


def _macaulay_certificate(F: HomogPoly, entry_cap: int) -> SmoothnessCertificate:
    v, d = F.num_vars, F.degree
    if d < 2:
        return SmoothnessCertificate(
            verdict="smooth", method="macaulay_rank",
            reason="degree below 2, a linear form is smooth",
        )
    e = v * (d - 2) + 1
    gdeg = e - (d - 1)
    partials = [F.partial(i) for i in range(v)]
    gmons = monomials_of_degree(v, gdeg)
    entries = sum(len(p.terms) for p in partials) * len(gmons)
    if entries > entry_cap:
        return SmoothnessCertificate(
            verdict="inconclusive", method="macaulay_rank",
            reason=f"matrix would hold {entries} entries, cap is {entry_cap}",
        )
    rows: list[dict[Monomial, CycloNum]] = []
    for p in partials:
        if p.is_zero():
            continue
        items = list(p.terms.items())
        for g in gmons:
            rows.append(
                {tuple(a + b for a, b in zip(g, m)): c for m, c in items}
            )
    target = len(monomials_of_degree(v, e))
    try:
        rank = _sparse_rank(rows, stop_at=target, fill_cap=max(16 * entry_cap, 10 ** 6))
    except CapExceededError as exc:
        return SmoothnessCertificate(
            verdict="inconclusive", method="macaulay_rank", reason=str(exc),
        )
    if rank == target:
        return SmoothnessCertificate(
            verdict="smooth", method="macaulay_rank", rank=rank, target_rank=target,
        )
    return SmoothnessCertificate(
        verdict="singular", method="macaulay_rank",
        reason=(
            f"the partial derivatives only span {rank} of the {target} "
            f"degree-{e} forms"
        ),
        rank=rank, target_rank=target,
    )


def _sparse_rank(rows, stop_at: int | None = None, fill_cap: int = 10 ** 7) -> int:
    """Exact rank of a sparse matrix given as row dicts over a field.

    Plain fraction-free-free elimination: rows are reduced against the pivot
    rows found so far.  Coefficients may be Fraction or CycloNum; both are
    exact.  Raises CapExceededError if fill-in exceeds fill_cap entries.
    """
    pivots: dict = {}
    rank = 0
    stored = 0
    for row in sorted(rows, key=len):
        r = dict(row)
        while True:
            hit = None
            for col in r:
                if col in pivots:
                    hit = col
                    break
            if hit is None:
                break
            factor = r.pop(hit)
            for col, val in pivots[hit].items():
                if col == hit:
                    continue
                cur = r.get(col)
                cur = -factor * val if cur is None else cur - factor * val
                if cur:
                    r[col] = cur
                else:
                    r.pop(col, None)
        if not r:
            continue
        lead = min(r)
        inv = r[lead]
        norm = {c: v / inv for c, v in r.items()}
        pivots[lead] = norm
        stored += len(norm)
        if stored > fill_cap:
            raise CapExceededError(
                f"elimination fill-in exceeded {fill_cap} stored entries"
            )
        rank += 1
        if stop_at is not None and rank >= stop_at:
            break
    return rank


# -- fixed locus -----------------------------------------------------------------


@dataclass(frozen=True)
class SliceInfo:
    """One eigenspace slice P(W) of the fixed locus."""

    indices: tuple[int, ...]
    eigen_exp: int
    ambient_dim: int            # dim P(W)
    restriction_zero: bool
    dim: int                    # dim of P(W) meet X; -1 when empty
    point_count: int | None     # exact count when the slice is finite


@dataclass(frozen=True)
class FixedLocusReport:
    n: int
    slices: tuple[SliceInfo, ...]
    codim_in_x: int | None      # None when the fixed locus is empty
    contains_line: bool | None  # None means undecided
    point_count: int | None     # total, when the fixed locus is finite

    def slices_of_codim_le(self, bound: int) -> tuple[SliceInfo, ...]:
        return tuple(s for s in self.slices if s.dim >= 0 and self.n - s.dim <= bound)


def fixed_locus(F: HomogPoly, g: DiagAut) -> FixedLocusReport:
    """Per-eigenspace decomposition of the fixed point set on X.

    Requires g to act on F by a single scalar; raises NotSemiInvariantError
    otherwise.  Isolated fixed points on one-dimensional slices are counted
    without multiplicity; for a verified-smooth hypersurface a repeated root
    of the restricted binary form cannot occur, so the distinction only
    matters on unverified inputs.  Line containment is decided only for full
    linear slices; a positive-dimensional slice that is a hypersurface in
    its eigenspace leaves contains_line undecided (None).
    """
    multiplier(F, g)
    n = F.num_vars - 2
    slices = []
    for block in g.eigen_structure().blocks:
        complement = [i for i in range(F.num_vars) if i not in block.indices]
        restriction = F.restrict(complement) if complement else F
        zero = restriction.is_zero()
        ambient = len(block.indices) - 1
        if zero:
            dim = ambient
            count = 1 if ambient == 0 else None
        elif ambient == 0:
            dim = -1
            count = 0
        else:
            dim = ambient - 1
            count = (
                _distinct_binary_roots(restriction, block.indices)
                if ambient == 1
                else None
            )
        slices.append(
            SliceInfo(
                indices=tuple(block.indices),
                eigen_exp=block.exp,
                ambient_dim=ambient,
                restriction_zero=zero,
                dim=dim,
                point_count=count,
            )
        )
    dims = [s.dim for s in slices if s.dim >= 0]
    codim = (n - max(dims)) if dims else None
    if any(s.restriction_zero and s.ambient_dim >= 1 for s in slices):
        line: bool | None = True
    elif all(s.dim <= 0 for s in slices):
        line = False
    else:
        line = None
    if dims and all(s.dim <= 0 for s in slices):
        total = sum(s.point_count for s in slices if s.dim == 0)
    else:
        total = None
    return FixedLocusReport(
        n=n,
        slices=tuple(slices),
        codim_in_x=codim,
        contains_line=line,
        point_count=total,
    )


def _distinct_binary_roots(restriction: HomogPoly, indices) -> int:
    """Distinct projective roots of a nonzero binary form, without multiplicity."""
    i, j = indices
    deg = restriction.degree
    coeffs = [rational(0)] * (deg + 1)
    for mon, c in restriction.terms.items():
        coeffs[mon[i]] = c
    # Dehomogenize with respect to X_j; the point with X_j = 0 is a root
    # exactly when the top coefficient vanishes.
    p = list(coeffs)
    while p and not p[-1]:
        p.pop()
    at_infinity = 1 if len(p) <= deg else 0
    dp = [p[k] * k for k in range(1, len(p))]
    g = _poly_gcd(p, dp)
    distinct_finite = (len(p) - 1) - (len(g) - 1)
    return distinct_finite + at_infinity


def _poly_gcd(a: list[CycloNum], b: list[CycloNum]) -> list[CycloNum]:
    a = [c for c in a]
    b = [c for c in b]
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    while b:
        a = _poly_mod(a, b)
        a, b = b, a
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _poly_mod(a, b):
    a = list(a)
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for k in range(len(b)):
            a[shift + k] = a[shift + k] - factor * b[k]
        while a and not a[-1]:
            a.pop()
    return a


# -- projections and the Galois criterion --------------------------------------


def projection_degree(F: HomogPoly, r_plane, complement) -> int:
    """Degree of the projection of X from the pair of coordinate subspaces.

    r_plane and complement are index sets spanning the two subspaces; they
    must partition the coordinates.  Each contained subspace (restriction of
    F identically zero on it) lowers the generic fiber count by one.
    """
    r_plane = sorted(set(r_plane))
    complement = sorted(set(complement))
    if sorted(r_plane + complement) != list(range(F.num_vars)):
        raise ValueError("index sets must partition the coordinates")
    if not r_plane or not complement:
        raise ValueError("both subspaces must be nonempty")
    first_in = F.restrict(complement).is_zero()
    second_in = F.restrict(r_plane).is_zero()
    return F.degree - int(first_in) - int(second_in)


@dataclass(frozen=True)
class GaloisVerdict:
    galois: bool
    m: int | None = None
    scaled_block: tuple[int, ...] | None = None   # coordinates carrying e_m
    unit_block: tuple[int, ...] | None = None
    galois_point: bool = False                    # projection from a single point
    theorem: str | None = None
    reason: str | None = None

    @classmethod
    def no(cls, reason: str) -> "GaloisVerdict":
        return cls(galois=False, reason=reason)


def galois_by_theorem(F: HomogPoly, g: DiagAut) -> GaloisVerdict:
    """Projection-is-Galois criterion for two-eigenvalue diagonal actions.

    Fires when g can be scaled to e_m on one coordinate block and 1 on the
    other with m equal to the degree of the induced projection; the quotient
    X / <g> is then rational (key thm-2.3).
    """
    try:
        multiplier(F, g)
    except Exception:
        return GaloisVerdict.no("not an automorphism of the hypersurface")
    structure = g.eigen_structure()
    if structure.r != 2:
        return GaloisVerdict.no(f"needs exactly 2 eigenvalues, found {structure.r}")
    m = g.order_in_pgl()
    if m < 2:
        return GaloisVerdict.no("the identity gives no projection")
    blocks = sorted(structure.blocks, key=lambda b: b.indices[0])
    for scaled, unit in ((blocks[0], blocks[1]), (blocks[1], blocks[0])):
        deg = projection_degree(F, scaled.indices, unit.indices)
        if deg == m:
            return GaloisVerdict(
                galois=True,
                m=m,
                scaled_block=tuple(scaled.indices),
                unit_block=tuple(unit.indices),
                galois_point=(len(scaled.indices) == 1),
                theorem="thm-2.3",
            )
    return GaloisVerdict.no(
        f"order {m} does not match the projection degree for either split"
    )
