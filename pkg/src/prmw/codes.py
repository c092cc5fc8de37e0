"""Generator matrices for RM(n,d) and PRM(n,d) over GF(q).

A code is built by evaluating a deterministic monomial list at the
canonical point enumeration and row-reducing.  Dimension is always the
numeric rank of the evaluation matrix; no closed dimension formula is
assumed anywhere.  The vanishing-ideal quotients are realized as the row
space (image) and the kernel of that matrix.

GF(q) linear algebra lives here too (rref, nullspace, inverse); matrices
are small numpy int64 arrays with mod-q arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .errors import DomainError
from .gfp import GF
from .points import (
    POINT_ORDER_VERSION,
    Point,
    affine_points,
    projective_points,
)
from .poly import Expvec, Poly

RM = "rm"
PRM = "prm"


@dataclass(frozen=True)
class CodeParams:
    """Code family and parameters, with the two degree decompositions.

    (a, b): d = a(q-1) + b, 0 < b <= q-1 (affine convention, d >= 1).
    (k, ell): d-1 = k(q-1) + ell, 0 < ell <= q-1 (projective convention,
    d >= 2; both are None where undefined).

    Construction accepts the full range the evaluation map makes sense
    on: RM for 0 <= d <= n(q-1), PRM for 1 <= d <= n(q-1)+1 (one past
    the range where the code fills the whole space).  Weight-formula
    operations restrict further.
    """

    family: str
    q: int
    n: int
    d: int

    def __post_init__(self):
        if self.family not in (RM, PRM):
            raise DomainError(f"unknown family {self.family!r}")
        GF(self.q)  # validates primality / support
        if self.n < 1:
            raise DomainError(f"n={self.n} must be >= 1")
        dmax = self.n * (self.q - 1)
        if self.family == RM and not 0 <= self.d <= dmax:
            raise DomainError(f"rm order d={self.d} outside [0, {dmax}]")
        if self.family == PRM and not 1 <= self.d <= dmax + 1:
            raise DomainError(f"prm order d={self.d} outside [1, {dmax + 1}]")

    @property
    def a(self) -> int | None:
        if self.d < 1:
            return None
        return (self.d - 1) // (self.q - 1)

    @property
    def b(self) -> int | None:
        if self.d < 1:
            return None
        return self.d - self.a * (self.q - 1)

    @property
    def k(self) -> int | None:
        if self.d < 2:
            return None
        return (self.d - 2) // (self.q - 1)

    @property
    def ell(self) -> int | None:
        if self.d < 2:
            return None
        return self.d - 1 - self.k * (self.q - 1)


# -- linear algebra over GF(q) ----------------------------------------------


def rref(mat: np.ndarray, gf: GF) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form over GF(q), leftmost-pivot convention.

    Returns (reduced matrix, rank, pivot columns).  The input is not
    mutated; an empty matrix has rank 0.
    """
    m = np.array(mat, dtype=np.int64) % gf.q
    if m.size == 0:
        return m, 0, []
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        p = nz[0] + r
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = (m[r] * gf.inv(int(m[r, c]))) % gf.q
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % gf.q
        pivots.append(c)
        r += 1
    return m, len(pivots), pivots


def nullspace(mat: np.ndarray, gf: GF) -> np.ndarray:
    """Basis of the right kernel of ``mat`` over GF(q), one row per vector."""
    m = np.array(mat, dtype=np.int64) % gf.q
    if m.size == 0:
        cols = m.shape[1] if m.ndim == 2 else 0
        return np.eye(cols, dtype=np.int64)
    red, rank, pivots = rref(m, gf)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-red[r, fc]) % gf.q
    return basis


def invert_matrix(mat: np.ndarray, gf: GF) -> np.ndarray:
    """Inverse of a square matrix over GF(q); DomainError if singular."""
    m = np.array(mat, dtype=np.int64) % gf.q
    n = m.shape[0]
    if m.shape != (n, n):
        raise DomainError("matrix is not square")
    aug = np.hstack([m, np.eye(n, dtype=np.int64)])
    red, rank, _ = rref(aug, gf)
    if rank < n or not np.array_equal(red[:, :n], np.eye(n, dtype=np.int64)):
        raise DomainError("matrix is singular over GF(q)")
    return red[:, n:]


# -- monomial bases ----------------------------------------------------------


def rm_monomials(n: int, d: int, q: int) -> list[Expvec]:
    """Exponent vectors with every exponent <= q-1 and total degree <= d,
    in graded lexicographic order (reduced basis modulo the affine
    vanishing ideal)."""
    out: list[Expvec] = []
    for deg in range(d + 1):
        out.extend(sorted(_bounded_compositions(deg, n, q - 1)))
    return out


def homogeneous_monomials(nvars: int, d: int) -> list[Expvec]:
    """All exponent vectors of total degree exactly d, lexicographic."""
    out = []
    for picks in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in picks:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out)


def _bounded_compositions(total: int, parts: int, bound: int) -> list[Expvec]:
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(min(total, bound), -1, -1):
        for rest in _bounded_compositions(total - first, parts - 1, bound):
            out.append((first,) + rest)
    return out


# -- code construction --------------------------------------------------------


class Code:
    """A linear evaluation code with a row-reduced generator matrix.

    Column j of ``gen`` is the evaluation at ``points[j]``; the point
    list is the canonical enumeration.  ``basis_monomials`` are the
    monomials (in generation order) whose evaluation rows were kept as a
    basis; ``gen`` is the RREF of those rows, so it has full row rank
    and ``pivots`` are its pivot columns.
    """

    def __init__(
        self,
        params: CodeParams,
        gen: np.ndarray,
        basis_monomials: tuple[Expvec, ...],
        points: list[Point],
        pivots: tuple[int, ...],
    ) -> None:
        self.params = params
        self.gen = gen
        self.basis_monomials = basis_monomials
        self.points = points
        self.pivots = pivots
        self._to_monomial_coeffs: np.ndarray | None = None

    @property
    def length(self) -> int:
        return self.gen.shape[1]

    @property
    def dimension(self) -> int:
        return self.gen.shape[0]

    @property
    def gf(self) -> GF:
        return GF(self.params.q)

    def __repr__(self) -> str:
        p = self.params
        return (
            f"Code({p.family}(n={p.n}, d={p.d}) over GF({p.q}), "
            f"[{self.length}, {self.dimension}])"
        )

    def message_for_poly(self, f: Poly) -> tuple[int, ...]:
        """The message whose codeword is the evaluation of f, read off
        the pivot columns; DomainError if f is not in the code."""
        gf = self.gf
        if f.nvars != len(self.basis_monomials[0]):
            raise DomainError(
                f"polynomial has {f.nvars} variables, code expects "
                f"{len(self.basis_monomials[0])}"
            )
        v = np.array([f.evaluate(p) for p in self.points], dtype=np.int64)
        msg = v[list(self.pivots)]
        if not np.array_equal((msg @ self.gen) % gf.q, v):
            raise DomainError("polynomial does not evaluate into the code")
        return tuple(int(x) for x in msg)

    def poly_for_message(self, message) -> Poly:
        """A polynomial over the kept monomials whose evaluation is the
        codeword of ``message``."""
        gf = self.gf
        msg = np.asarray(message, dtype=np.int64)
        if msg.shape != (self.dimension,):
            raise DomainError(
                f"message length {msg.shape} does not match dimension {self.dimension}"
            )
        if self._to_monomial_coeffs is None:
            pts = np.array(self.points, dtype=np.int64)
            raw = np.array(
                [_evaluate_monomial(e, pts, gf.q) for e in self.basis_monomials],
                dtype=np.int64,
            )
            # gen = T raw with T the inverse of raw on the pivot columns,
            # so monomial coefficients for a message m are m T
            self._to_monomial_coeffs = invert_matrix(raw[:, list(self.pivots)], gf)
        coeffs = (msg @ self._to_monomial_coeffs) % gf.q
        nvars = len(self.basis_monomials[0])
        return Poly(gf, nvars, dict(zip(self.basis_monomials, (int(c) for c in coeffs))))


def _evaluate_monomial(exps: Expvec, pts: np.ndarray, q: int) -> np.ndarray:
    # per-variable power tables keep everything reduced mod q (exponents
    # can exceed what int64 x**e would tolerate)
    row = np.ones(pts.shape[0], dtype=np.int64)
    for i, e in enumerate(exps):
        if e:
            powtab = np.array([pow(x, e, q) for x in range(q)], dtype=np.int64)
            row = (row * powtab[pts[:, i]]) % q
    return row


def _build(params: CodeParams, monomials: list[Expvec], points: list[Point]) -> Code:
    gf = GF(params.q)
    q = gf.q
    pts = np.array(points, dtype=np.int64)
    # greedy scan with incremental elimination: keep monomials whose rows
    # grow the rank, so basis_monomials is an actual monomial subset
    kept_idx: list[int] = []
    reduced: list[tuple[int, np.ndarray]] = []  # (pivot col, normalized row)
    for i, exps in enumerate(monomials):
        row = _evaluate_monomial(exps, pts, q)
        for pc, prow in reduced:
            if row[pc]:
                row = (row - row[pc] * prow) % q
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            continue
        pc = int(nz[0])
        row = (row * gf.inv(int(row[pc]))) % q
        for j, (opc, orow) in enumerate(reduced):
            if orow[pc]:
                reduced[j] = (opc, (orow - orow[pc] * row) % q)
        reduced.append((pc, row))
        kept_idx.append(i)
    reduced.sort(key=lambda t: t[0])
    gen = np.array([r for _, r in reduced], dtype=np.int64)
    return Code(
        params,
        gen,
        tuple(monomials[i] for i in kept_idx),
        points,
        pivots=tuple(pc for pc, _ in reduced),
    )


def build_rm(params: CodeParams) -> Code:
    """RM(n, d): evaluate the reduced monomial basis at all affine points."""
    if params.family != RM:
        raise DomainError(f"expected family {RM!r}, got {params.family!r}")
    monomials = rm_monomials(params.n, params.d, params.q)
    code = _build(params, monomials, affine_points(params.n, GF(params.q)))
    # evaluation on the reduced monomial basis is injective; check it
    assert code.dimension == len(monomials), (
        f"reduced monomial basis not independent: {code.dimension} != {len(monomials)}"
    )
    return code


def build_prm(params: CodeParams) -> Code:
    """PRM(n, d): evaluate all degree-d monomials in n+1 variables at the
    standard projective points.  The kernel of the evaluation matrix is
    the degree-d slice of the projective vanishing ideal, so the rank
    computes the quotient dimension."""
    if params.family != PRM:
        raise DomainError(f"expected family {PRM!r}, got {params.family!r}")
    monomials = homogeneous_monomials(params.n + 1, params.d)
    return _build(params, monomials, projective_points(params.n, GF(params.q)))


def build(params: CodeParams) -> Code:
    return build_rm(params) if params.family == RM else build_prm(params)


# -- serialization ------------------------------------------------------------


def code_to_json(code: Code) -> str:
    """Generator matrix as JSON, rows as residue arrays."""
    p = code.params
    doc = {
        "family": p.family,
        "q": p.q,
        "n": p.n,
        "d": p.d,
        "length": code.length,
        "dimension": code.dimension,
        "point_order": POINT_ORDER_VERSION,
        "basis_monomials": [list(e) for e in code.basis_monomials],
        "rows": code.gen.tolist(),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


_BITDUMP_MAGIC = "prmw-bits1"


def code_to_bitdump(code: Code) -> bytes:
    """Raw GF(2) bit-matrix dump: ASCII header line, then row-major
    little-endian 64-bit words, ceil(length/64) words per row."""
    if code.params.q != 2:
        raise DomainError("bit-matrix dump is defined for q=2 only")
    words_per_row = (code.length + 63) // 64
    header = (
        f"{_BITDUMP_MAGIC} point-order={POINT_ORDER_VERSION} "
        f"rows={code.dimension} cols={code.length}\n"
    )
    out = bytearray(header.encode("ascii"))
    for row in code.gen:
        x = 0
        for j, v in enumerate(row):
            if v:
                x |= 1 << j
        out.extend(x.to_bytes(words_per_row * 8, "little"))
    return bytes(out)


def bitdump_to_rows(blob: bytes) -> tuple[dict, list[list[int]]]:
    """Parse a bit-matrix dump back into header fields and 0/1 rows."""
    nl = blob.index(b"\n")
    fields = blob[:nl].decode("ascii").split()
    if fields[0] != _BITDUMP_MAGIC:
        raise DomainError(f"bad bitdump magic {fields[0]!r}")
    meta = dict(f.split("=", 1) for f in fields[1:])
    rows_n, cols = int(meta["rows"]), int(meta["cols"])
    words_per_row = (cols + 63) // 64
    body = blob[nl + 1 :]
    if len(body) != rows_n * words_per_row * 8:
        raise DomainError("bitdump body has wrong size")
    rows = []
    for i in range(rows_n):
        x = int.from_bytes(
            body[i * words_per_row * 8 : (i + 1) * words_per_row * 8], "little"
        )
        rows.append([(x >> j) & 1 for j in range(cols)])
    return meta, rows
