"""Signed permutations of {1..n} with exact semantics.

An element is stored in factored form: a sign vector e in {+1,-1}^n and a
permutation mu of {1..n} held as an image table.  The pair corresponds to
the n x n matrix diag(e) * P(mu), where P(mu) has a 1 in row i, column
(i)mu.  Points are row vectors acting on the right, so composition reads
left to right: (p)(a*b) = ((p)a)b and matrix(a*b) = matrix(a) @ matrix(b).
"""

from __future__ import annotations

import re
from functools import total_ordering
from typing import Iterable, Sequence

__all__ = [
    "SignedPerm",
    "act",
    "block_pair",
]

_ELEMENT_RE = re.compile(r"^\(([^()]*)\)\s*[·*]\s*((?:\([^()]*\))+|\(\))$")


def _cycles_to_image(n: int, cycles: Iterable[Sequence[int]]) -> tuple[int, ...]:
    image = list(range(1, n + 1))
    for cycle in cycles:
        if len(cycle) <= 1:
            continue
        for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
            if not 1 <= a <= n:
                raise ValueError(f"cycle entry {a} outside 1..{n}")
            image[a - 1] = b
    seen = set(image)
    if len(seen) != n:
        raise ValueError(f"cycles {cycles!r} do not describe a permutation")
    return tuple(image)


@total_ordering
class SignedPerm:
    """A signed permutation matrix in sign-vector * permutation form."""

    __slots__ = ("signs", "perm", "_hash")

    def __init__(self, signs: Sequence[int], perm: Sequence[int]):
        signs = tuple(signs)
        perm = tuple(perm)
        if len(signs) != len(perm):
            raise ValueError("sign vector and permutation lengths differ")
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be +-1, got {signs}")
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"image table {perm} is not a permutation of 1..{len(perm)}")
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "_hash", hash((signs, perm)))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("SignedPerm is immutable")

    @property
    def n(self) -> int:
        return len(self.signs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls((1,) * n, tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]] = (),
                    signs: Sequence[int] | None = None) -> "SignedPerm":
        """Build from cycle notation; (4,3,2,1) maps 4->3->2->1->4."""
        if signs is None:
            signs = (1,) * n
        return cls(signs, _cycles_to_image(n, cycles))

    @classmethod
    def parse(cls, text: str) -> "SignedPerm":
        m = _ELEMENT_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse signed permutation {text!r}")
        signs = tuple(int(tok) for tok in m.group(1).split(","))
        n = len(signs)
        cycles = []
        for cyc in re.findall(r"\(([^()]*)\)", m.group(2)):
            if cyc.strip():
                cycles.append(tuple(int(tok) for tok in cyc.split(",")))
        return cls(signs, _cycles_to_image(n, cycles))

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Apply self first, then other; matches matrix(self) @ matrix(other)."""
        if not isinstance(other, SignedPerm):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        es, ps = self.signs, self.perm
        eo, po = other.signs, other.perm
        signs = tuple(es[i] * eo[ps[i] - 1] for i in range(len(ps)))
        perm = tuple(po[ps[i] - 1] for i in range(len(ps)))
        return SignedPerm(signs, perm)

    def inverse(self) -> "SignedPerm":
        n = self.n
        inv = [0] * n
        for i, img in enumerate(self.perm):
            inv[img - 1] = i + 1
        signs = tuple(self.signs[inv[j] - 1] for j in range(n))
        return SignedPerm(signs, tuple(inv))

    def __pow__(self, k: int) -> "SignedPerm":
        if k < 0:
            return self.inverse() ** (-k)
        result = SignedPerm.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, h: "SignedPerm") -> "SignedPerm":
        """h^-1 * self * h."""
        return h.inverse() * self * h

    def order(self) -> int:
        k, e = 1, self
        ident = SignedPerm.identity(self.n)
        while e != ident:
            e = e * self
            k += 1
        return k

    # -- semantics ---------------------------------------------------------

    def act(self, point: Sequence) -> tuple:
        """Right action on a row vector: out[(i)mu] = e_i * p_i."""
        if len(point) != self.n:
            raise ValueError(f"point dimension {len(point)} != {self.n}")
        out = [None] * self.n
        for i in range(self.n):
            out[self.perm[i] - 1] = self.signs[i] * point[i]
        return tuple(out)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        rows = []
        for i in range(n):
            row = [0] * n
            row[self.perm[i] - 1] = self.signs[i]
            rows.append(tuple(row))
        return tuple(rows)

    def determinant(self) -> int:
        det = 1
        for s in self.signs:
            det *= s
        seen = [False] * self.n
        for i in range(self.n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.perm[j] - 1
                length += 1
            if length % 2 == 0:
                det = -det
        return det

    def is_involution(self) -> bool:
        return self != SignedPerm.identity(self.n) and self * self == SignedPerm.identity(self.n)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i] or self.perm[i] == i + 1:
                seen[i] = True
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self.perm[j] - 1
            out.append(tuple(cyc))
        return tuple(out)

    # -- ordering / formatting ----------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.n, self.perm, self.signs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SignedPerm)
                and self.signs == other.signs and self.perm == other.perm)

    def __lt__(self, other: "SignedPerm") -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        signs = "(" + ",".join(str(s) for s in self.signs) + ")"
        cycs = self.cycles()
        if not cycs:
            return signs + "·()"
        return signs + "·" + "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"SignedPerm.parse({str(self)!r})"


def act(point: Sequence, g: SignedPerm) -> tuple:
    """Row-vector action (p)g."""
    return g.act(point)


def block_pair(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """Block-diagonal element acting as a on 1..n and as b shifted to n+1..2n."""
    if a.n != b.n:
        raise ValueError("blocks must share a dimension")
    n = a.n
    signs = a.signs + b.signs
    perm = a.perm + tuple(x + n for x in b.perm)
    return SignedPerm(signs, perm)
