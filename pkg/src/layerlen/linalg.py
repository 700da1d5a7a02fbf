"""Exact linear algebra over the prime field F_p.

Matrices are numpy ``int64`` arrays with entries reduced to canonical
representatives ``0..p-1``; the modulus is a runtime value passed alongside.
Subspaces are stored by the reduced row echelon basis of their row space,
which is unique, so subspace equality is plain array equality.  No floating
point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolation


def check_prime(p: int) -> int:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ContractViolation(f"modulus {p} is not prime")
    return p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def asmat(data) -> np.ndarray:
    m = np.asarray(data, dtype=np.int64)
    if m.ndim != 2:
        raise ContractViolation(f"expected a matrix, got ndim={m.ndim}")
    return m


def mmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def inv_mod(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, int]:
    """Reduced row echelon form and rank; the row space is preserved."""
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i, c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * inv_mod(m[r, c], p)) % p
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        r += 1
        if r == rows:
            break
    # drop zero rows
    return m[:r].copy(), r


def rank(m: np.ndarray, p: int) -> int:
    return rref(m, p)[1]


def pivot_columns(rref_basis: np.ndarray) -> list[int]:
    pivots = []
    for row in rref_basis:
        nz = np.nonzero(row)[0]
        pivots.append(int(nz[0]))
    return pivots


def solve(m: np.ndarray, b: np.ndarray, p: int):
    """A particular solution x of m x = b, or None if inconsistent."""
    m = np.asarray(m, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64).reshape(-1) % p
    rows, cols = m.shape
    if b.shape[0] != rows:
        raise ContractViolation("solve: shape mismatch")
    aug = np.concatenate([m, b.reshape(-1, 1)], axis=1)
    red, _ = rref(aug, p)
    x = np.zeros(cols, dtype=np.int64)
    for row in red:
        nz = np.nonzero(row)[0]
        lead = int(nz[0])
        if lead == cols:
            return None  # 0 = nonzero
        x[lead] = row[cols]
    return x


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_p^ambient, held by its canonical RREF basis.

    The basis has full row rank and is the unique reduced row echelon form
    of its row space, so two Subspace values are equal iff their arrays are.
    """

    p: int
    ambient: int
    basis: np.ndarray = field(repr=False)

    @staticmethod
    def from_rows(rows, p: int, ambient: int | None = None) -> "Subspace":
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            if ambient is None:
                ambient = rows.shape[1] if rows.ndim == 2 else 0
            return Subspace(p, int(ambient), zeros(0, int(ambient)))
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        basis, _ = rref(rows, p)
        return Subspace(p, rows.shape[1], basis)

    @staticmethod
    def zero(p: int, ambient: int) -> "Subspace":
        return Subspace(p, ambient, zeros(0, ambient))

    @staticmethod
    def full(p: int, ambient: int) -> "Subspace":
        return Subspace(p, ambient, eye(ambient))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Residue of v after eliminating this subspace's pivot columns."""
        v = np.asarray(v, dtype=np.int64).reshape(-1) % self.p
        if v.shape[0] != self.ambient:
            raise ContractViolation("vector/ambient mismatch")
        for i, c in enumerate(pivot_columns(self.basis)):
            if v[c]:
                v = (v - v[c] * self.basis[i]) % self.p
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient != self.ambient:
            raise ContractViolation("ambient mismatch")
        return all(self.contains(row) for row in other.basis)

    def coords(self, v) -> np.ndarray:
        """Coordinates of v in the RREF basis rows; v must belong."""
        v = np.asarray(v, dtype=np.int64).reshape(-1) % self.p
        c = v[pivot_columns(self.basis)] if self.dim else zeros(0, 0).reshape(0)
        if ((c @ self.basis) % self.p != v).any():
            raise ContractViolation("vector not in subspace")
        return c

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.p == other.p
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.p, self.ambient, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(p={self.p}, dim={self.dim}, ambient={self.ambient})"


def image(m: np.ndarray, p: int) -> Subspace:
    """Column space of m, canonicalized, inside F_p^rows."""
    m = np.asarray(m, dtype=np.int64)
    return Subspace.from_rows(m.T % p, p, ambient=m.shape[0])


def kernel(m: np.ndarray, p: int) -> Subspace:
    """Canonical basis of {v : m v = 0}; dim = cols - rank."""
    m = np.asarray(m, dtype=np.int64)
    rows, cols = m.shape
    red, r = rref(m, p)
    pivots = pivot_columns(red)
    free = [c for c in range(cols) if c not in pivots]
    vecs = zeros(len(free), cols)
    for k, f in enumerate(free):
        vecs[k, f] = 1
        for i, c in enumerate(pivots):
            vecs[k, c] = (-red[i, f]) % p
    return Subspace.from_rows(vecs, p, ambient=cols)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient or a.p != b.p:
        raise ContractViolation("subspace sum: ambient/field mismatch")
    return Subspace.from_rows(
        np.concatenate([a.basis, b.basis], axis=0), a.p, ambient=a.ambient
    )


def perp(s: Subspace) -> Subspace:
    """Annihilator w.r.t. the standard dot product (a perfect pairing)."""
    if s.dim == 0:
        return Subspace.full(s.p, s.ambient)
    return kernel(s.basis, s.p)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient or a.p != b.p:
        raise ContractViolation("subspace intersect: ambient/field mismatch")
    return perp(subspace_sum(perp(a), perp(b)))


def quotient_map(s: Subspace) -> tuple[np.ndarray, np.ndarray]:
    """(proj, section) for F^n -> F^n / s.

    proj is (n-r) x n with kernel exactly s; section is n x (n-r) with
    proj @ section = identity.  Coordinates of the quotient are the
    non-pivot columns of the RREF basis, so the choice is deterministic.
    """
    n, p = s.ambient, s.p
    pivots = pivot_columns(s.basis)
    free = [c for c in range(n) if c not in pivots]
    proj = zeros(len(free), n)
    for k, f in enumerate(free):
        proj[k, f] = 1
        for i, c in enumerate(pivots):
            proj[k, c] = (-s.basis[i, f]) % p
    section = zeros(n, len(free))
    for k, f in enumerate(free):
        section[f, k] = 1
    return proj, section


def preimage(m: np.ndarray, target: Subspace, p: int) -> Subspace:
    """{v : m v in target} as a subspace of the domain."""
    m = np.asarray(m, dtype=np.int64)
    if m.shape[0] != target.ambient:
        raise ContractViolation("preimage: shape mismatch")
    proj, _ = quotient_map(target)
    if proj.shape[0] == 0:
        return Subspace.full(p, m.shape[1])
    return kernel(mmul(proj, m, p), p)


class RrefAccumulator:
    """Incrementally maintained RREF basis; used for span closures."""

    def __init__(self, ambient: int, p: int):
        self.ambient = ambient
        self.p = p
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _residue(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64).reshape(-1) % self.p
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, v) -> bool:
        return not self._residue(v).any()

    def add(self, v) -> bool:
        """Insert v into the span; True iff the dimension grew."""
        res = self._residue(v)
        nz = np.nonzero(res)[0]
        if nz.size == 0:
            return False
        lead = int(nz[0])
        res = (res * inv_mod(res[lead], self.p)) % self.p
        for i in range(len(self.rows)):
            if self.rows[i][lead]:
                self.rows[i] = (self.rows[i] - self.rows[i][lead] * res) % self.p
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < lead:
            pos += 1
        self.rows.insert(pos, res)
        self.pivots.insert(pos, lead)
        return True

    def add_rows(self, rows) -> bool:
        grew = False
        for row in np.asarray(rows, dtype=np.int64).reshape(-1, self.ambient):
            grew |= self.add(row)
        return grew

    def to_subspace(self) -> Subspace:
        if not self.rows:
            return Subspace.zero(self.p, self.ambient)
        return Subspace(self.p, self.ambient, np.array(self.rows, dtype=np.int64))


def invert_matrix(m: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix mod p; raises if singular."""
    m = np.asarray(m, dtype=np.int64) % p
    n = m.shape[0]
    if m.shape != (n, n):
        raise ContractViolation("invert: not square")
    aug = np.concatenate([m, eye(n)], axis=1)
    red, r = rref(aug, p)
    if r < n or pivot_columns(red)[:n] != list(range(n)):
        raise ContractViolation("invert: singular matrix")
    return red[:, n:].copy()


def is_invertible(m: np.ndarray, p: int) -> bool:
    """Forward elimination with early exit; cheaper than a full rref."""
    m = np.array(m, dtype=np.int64) % p
    n = m.shape[0]
    if m.shape != (n, n):
        return False
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r, c]:
                piv = r
                break
        if piv is None:
            return False
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
        factor = inv_mod(m[c, c], p)
        for r in range(c + 1, n):
            if m[r, c]:
                m[r] = (m[r] - m[r, c] * factor * m[c]) % p
    return True


def all_vectors(n: int, p: int):
    """All p^n vectors of F_p^n in lexicographic order."""
    v = np.zeros(n, dtype=np.int64)
    while True:
        yield v.copy()
        i = n - 1
        while i >= 0 and v[i] == p - 1:
            v[i] = 0
            i -= 1
        if i < 0:
            return
        v[i] += 1


def all_subspaces(n: int, p: int):
    """All subspaces of F_p^n, each as a canonical Subspace.

    Enumerates RREF matrices directly: choose pivot columns, then fill the
    free entries (row i may be nonzero only right of its pivot and on
    non-pivot columns).
    """
    from itertools import combinations, product

    yield Subspace.zero(p, n)
    for r in range(1, n + 1):
        for pivots in combinations(range(n), r):
            free_slots = [
                (i, c)
                for i in range(r)
                for c in range(n)
                if c > pivots[i] and c not in pivots
            ]
            for fill in product(range(p), repeat=len(free_slots)):
                basis = zeros(r, n)
                for i, c in enumerate(pivots):
                    basis[i, c] = 1
                for (i, c), val in zip(free_slots, fill):
                    basis[i, c] = val
                yield Subspace(p, n, basis)
