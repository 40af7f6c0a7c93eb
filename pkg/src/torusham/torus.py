"""Group arithmetic for products of directed cycles.

A torus here is the cartesian product of k directed cycles with lengths
m_1, ..., m_k.  Its vertices are tuples of residues, one per cycle, and the
digraph has exactly one outgoing arc per coordinate: v -> v + e_i, where e_i
bumps coordinate i by one modulo m_i.  Vertices are stored reduced, and every
operation reduces eagerly.  Everything is a pure function on immutable data,
so values can be shared freely across threads.
"""

from __future__ import annotations

import itertools
import math
import sys
from dataclasses import dataclass
from typing import Iterator

Vertex = tuple[int, ...]
Perm = tuple[int, ...]


@dataclass(frozen=True)
class TorusSpec:
    """Cycle lengths of the ambient product digraph (every m_i >= 2)."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        moduli = tuple(int(m) for m in self.moduli)
        object.__setattr__(self, "moduli", moduli)
        if not moduli:
            raise ValueError("at least one cycle length is required")
        for m in moduli:
            if m < 2:
                raise ValueError(f"cycle lengths must be >= 2, got {m}")
        count = 1
        for m in moduli:
            count *= m
            # exact vertex counts are load-bearing for verification and the
            # oracle, so overflow is a constructor error, never a silent wrap
            if count > sys.maxsize:
                raise ValueError("vertex count overflows the platform integer size")
        object.__setattr__(self, "_count", count)

    @classmethod
    def power(cls, m: int, k: int) -> TorusSpec:
        """The k-th cartesian power of a directed m-cycle."""
        if k < 1:
            raise ValueError(f"power needs k >= 1, got {k}")
        return cls((m,) * k)

    @property
    def k(self) -> int:
        return len(self.moduli)

    @property
    def vertex_count(self) -> int:
        return self._count  # type: ignore[attr-defined]

    @property
    def moduli_gcd(self) -> int:
        return math.gcd(*self.moduli)

    @property
    def is_equal_power(self) -> bool:
        return len(set(self.moduli)) == 1

    def zero(self) -> Vertex:
        return (0,) * self.k

    def vertices(self) -> Iterator[Vertex]:
        """All vertices in lexicographic coordinate order."""
        return itertools.product(*(range(m) for m in self.moduli))

    def is_vertex(self, v) -> bool:
        return (
            isinstance(v, tuple)
            and len(v) == self.k
            and all(isinstance(c, int) and 0 <= c < m for c, m in zip(v, self.moduli))
        )

    def require_vertex(self, v) -> Vertex:
        if not self.is_vertex(v):
            raise ValueError(f"{v!r} is not a reduced vertex of {self}")
        return v

    def add_step(self, v: Vertex, g: int) -> Vertex:
        """Follow the arc that advances coordinate g by one."""
        if not 0 <= g < self.k:
            raise ValueError(f"generator index {g} out of range for k={self.k}")
        return v[:g] + ((v[g] + 1) % self.moduli[g],) + v[g + 1 :]

    def translate(self, v: Vertex, by: Vertex) -> Vertex:
        return tuple((a + b) % m for a, b, m in zip(v, by, self.moduli))

    def subtract(self, u: Vertex, v: Vertex) -> Vertex:
        return tuple((a - b) % m for a, b, m in zip(u, v, self.moduli))

    def directed_distance(self, u: Vertex, v: Vertex) -> int:
        """Length of the shortest directed path from u to v.

        Each coordinate must advance independently around its own cycle, so
        the distance is the sum of the forward coordinate gaps.
        """
        return sum((b - a) % m for a, b, m in zip(u, v, self.moduli))

    def residue_sum(self, v: Vertex, modulus: int) -> int:
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        return sum(v) % modulus

    def ham_path_congruence_ok(self, u: Vertex, v: Vertex) -> bool:
        """Necessary condition for a hamiltonian path from u to v.

        All directed u->v paths have lengths congruent modulo the gcd of the
        cycle lengths, and a hamiltonian path has length vertex_count - 1,
        which is -1 modulo every m_i.  So d(u, v) = -1 (mod gcd) is forced.
        """
        g = self.moduli_gcd
        return self.directed_distance(u, v) % g == (g - 1) % g

    def require_perm(self, perm) -> Perm:
        perm = tuple(perm)
        if sorted(perm) != list(range(self.k)):
            raise ValueError(f"{perm!r} is not a permutation of range({self.k})")
        for i, p in enumerate(perm):
            if self.moduli[p] != self.moduli[i]:
                raise ValueError(
                    f"permutation {perm!r} mixes unequal cycle lengths "
                    f"{self.moduli[i]} and {self.moduli[p]}"
                )
        return perm

    def permute_coords(self, v: Vertex, perm: Perm) -> Vertex:
        """Move coordinate i to position perm[i].

        Only positions with equal moduli may be exchanged; then the map is a
        digraph automorphism fixing the zero vertex.
        """
        perm = self.require_perm(perm)
        out = [0] * self.k
        for i, p in enumerate(perm):
            out[p] = v[i]
        return tuple(out)


def identity_perm(k: int) -> Perm:
    return tuple(range(k))


def transposition(k: int, a: int, b: int) -> Perm:
    out = list(range(k))
    out[a], out[b] = out[b], out[a]
    return tuple(out)


def invert_perm(perm: Perm) -> Perm:
    out = [0] * len(perm)
    for i, p in enumerate(perm):
        out[p] = i
    return tuple(out)
