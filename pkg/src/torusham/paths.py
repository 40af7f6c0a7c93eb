"""Certified hamiltonian paths between prescribed endpoints in (Z_m)^k.

For k >= 3 a hamiltonian path from u to v exists exactly when the coordinate
sums satisfy sum(v - u) = -1 (mod m).  Construction runs start-at-zero: the
subgroup H of zero-sum vertices is generated by the differences x_t - x_1,
and Cay(H; S - x_1) is isomorphic to the (k-1)-power torus, so a hamiltonian
cycle c_0, c_1, ... of H with an even distance 2n to v + x_1 can be rolled
into the full torus.  The rolling pattern is the prism path word over
a = (1, 0) and b = (1, 1) on Z_m x Z_N with N = m^(k-1):

    ( (a^(m-2) b^2)^n  (a^(m-2) b a)^(N-2n-1)  (a^(m-2) b^2)^n  a^(m-2)  b )

a hamiltonian path from 0 to (-1, 2n) of length m*N - 1.  Substituting
a -> x_1 and the i-th b -> x_1 + (c_{i+1} - c_i) lands the certified path at
c_{2n} - x_1 = v.

For even m any hamiltonian cycle of H works: arcs of Cay(H; S - x_1) lower
the first coordinate by one, so first-coordinate parity bipartitions H and
forces the distance to v + x_1 even once some odd coordinate of v is moved
to the front.  For odd m the parity-targeted cycles come from the cycles
module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .torus import TorusSpec, Vertex, identity_perm, transposition
from .words import (
    Concat,
    CycleWitness,
    PathCertificate,
    Power,
    Symbol,
    Word,
    _expand_list,
    cycle_distance,
    expect_path,
    relabel,
)
from .cycles import (
    _embed_word,
    any_cycle_power,
    conjugate_cycle,
    even_distance_cycle_power,
)


@dataclass(frozen=True)
class ArcForcingIso:
    """Isomorphism between (Z_m)^(k-1) and the zero-sum subgroup of (Z_m)^k.

    forward sends w to sum_i w_i (x_{i+2} - x_1), i.e. the zero-sum vertex
    (-sum(w), w_1, ..., w_{k-1}); backward drops the first coordinate.  The
    i-th generator of the small torus corresponds to the arc label
    x_{i+2} - x_1 of the subgroup digraph.
    """

    m: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.k < 2:
            raise ValueError(f"need m >= 2 and k >= 2, got m={self.m}, k={self.k}")

    @property
    def inner_spec(self) -> TorusSpec:
        return TorusSpec.power(self.m, self.k - 1)

    @property
    def outer_spec(self) -> TorusSpec:
        return TorusSpec.power(self.m, self.k)

    def forward(self, w: Vertex) -> Vertex:
        self.inner_spec.require_vertex(w)
        return ((-sum(w)) % self.m,) + tuple(w)

    def backward(self, h: Vertex) -> Vertex:
        self.outer_spec.require_vertex(h)
        if sum(h) % self.m != 0:
            raise ValueError(f"{h} is not a zero-sum vertex mod {self.m}")
        return tuple(h[1:])

    def generator_image(self, g: int) -> Vertex:
        """Arc label x_{g+2} - x_1 as a vertex of the big torus."""
        if not 0 <= g < self.k - 1:
            raise ValueError(f"generator index {g} out of range for k-1={self.k - 1}")
        out = [0] * self.k
        out[0] = self.m - 1
        out[g + 1] = 1
        return tuple(out)


def prism_path_word(m: int, N: int, n: int) -> Word:
    """The rolling path word over letters a, b for Z_m x Z_N, 0 <= n < N/2.

    As a path in the digraph with arc steps a = (1, 0) and b = (1, 1) it has
    length m*N - 1 and runs from 0 to (-1, 2n), visiting every vertex once.
    """
    if m < 2 or N < 2:
        raise ValueError(f"need m >= 2 and N >= 2, got m={m}, N={N}")
    if not 0 <= n < N / 2:
        raise ValueError(f"n must satisfy 0 <= n < N/2 = {N / 2}, got {n}")
    a = Symbol("a")
    b = Symbol("b")
    turnback = Concat((Power(a, m - 2), Power(b, 2)))
    return Concat(
        (
            Power(turnback, n),
            Power(Concat((Power(a, m - 2), b, a)), N - 2 * n - 1),
            Power(turnback, n),
            Power(a, m - 2),
            b,
        )
    )


def _inner_vertex_at(iso: ArcForcingIso, arcs: list[int], steps: int) -> Vertex:
    spec = iso.inner_spec
    coords = [0] * spec.k
    for g in arcs[:steps]:
        coords[g] = (coords[g] + 1) % iso.m
    return tuple(coords)


def _rolled_path(m: int, k: int, inner: CycleWitness, n: int) -> tuple[Word, Vertex]:
    """Word and target of the rolled path, without verification."""
    iso = ArcForcingIso(m, k)
    if inner.spec != iso.inner_spec:
        raise ValueError(
            f"inner cycle lives on {inner.spec.moduli}, expected {(m,) * (k - 1)}"
        )
    N = m ** (k - 1)
    arcs = _expand_list(inner.word)
    word = _embed_word(prism_path_word(m, N, n), arcs, "a", "b")
    c_2n = iso.forward(_inner_vertex_at(iso, arcs, 2 * n))
    target = iso.outer_spec.subtract(c_2n, (1,) + (0,) * (k - 1))
    return word, target


def path_from_inner_cycle(m: int, k: int, inner: CycleWitness, n: int) -> PathCertificate:
    """Certified path from 0 to c_{2n} - x_1, rolling the given subgroup cycle.

    `inner` is a verified hamiltonian cycle of (Z_m)^(k-1), standing for a
    cycle c_0, c_1, ... of the zero-sum subgroup through the arc-forcing
    isomorphism.  Aborts rather than return an unverified certificate.
    """
    word, target = _rolled_path(m, k, inner, n)
    return expect_path(TorusSpec.power(m, k), (0,) * k, target, word)


def _require_admissible(m: int, k: int, v: Vertex, parity: int) -> TorusSpec:
    if m < 2 or m % 2 != parity:
        raise ValueError(f"this branch handles {'even' if parity == 0 else 'odd'} m, got {m}")
    if k < 3:
        raise ValueError(f"construction needs k >= 3, got {k}")
    spec = TorusSpec.power(m, k)
    spec.require_vertex(v)
    if spec.residue_sum(v, m) != m - 1:
        raise ValueError(f"target {v} has coordinate sum {sum(v) % m} != -1 (mod {m})")
    return spec


def path_for_odd_m(m: int, k: int, v: Vertex) -> PathCertificate:
    """Certified hamiltonian path 0 -> v in (Z_m)^k for odd m, k >= 3."""
    _require_admissible(m, k, v, 1)
    h = ((v[0] + 1) % m,) + v[1:]
    tail = h[1:]
    raw, dist, perm = even_distance_cycle_power(m, k - 1, tail)
    inner = conjugate_cycle(raw, perm)
    if dist % 2 != 0:
        raise AssertionError(f"cycle distance {dist} to {tail} is odd")
    cert = path_from_inner_cycle(m, k, inner, dist // 2)
    if cert.target != v:
        raise AssertionError(f"constructed endpoint {cert.target} != requested {v}")
    return cert


def path_for_even_m(m: int, k: int, v: Vertex) -> PathCertificate:
    """Certified hamiltonian path 0 -> v in (Z_m)^k for even m, k >= 3.

    Moves the first odd coordinate of v to the front (the coordinate sum is
    odd, so one exists), then uses any hamiltonian cycle of the zero-sum
    subgroup: the bipartition by first-coordinate parity makes the distance
    to v + x_1 automatically even.
    """
    spec = _require_admissible(m, k, v, 0)
    odd_at = next((idx for idx, c in enumerate(v) if c % 2 == 1), None)
    if odd_at is None:
        raise AssertionError(f"no odd coordinate in {v} despite odd coordinate sum")
    tau = identity_perm(k) if odd_at == 0 else transposition(k, 0, odd_at)
    u = spec.permute_coords(v, tau)

    inner = any_cycle_power(m, k - 1)
    h = ((u[0] + 1) % m,) + u[1:]
    dist = cycle_distance(inner, h[1:])
    if dist % 2 != 0:
        raise AssertionError(f"bipartition violated: distance {dist} to {h[1:]} is odd")

    word, target = _rolled_path(m, k, inner, dist // 2)
    if target != u:
        raise AssertionError(f"constructed endpoint {target} != permuted target {u}")
    if tau != identity_perm(k):
        word = relabel(word, {g: tau[g] for g in range(k)})
    return expect_path(spec, spec.zero(), v, word)


@dataclass(frozen=True)
class Refusal:
    """A certified non-existence answer for the endpoint congruence.

    Every directed path from start to target has length congruent to the
    directed distance mod m, while a hamiltonian path has length
    vertex_count - 1 = -1 (mod m).  When the congruence fails, no word can
    ever verify, and the refusal records why.
    """

    spec: TorusSpec
    start: Vertex
    target: Vertex
    residue: int
    required: int

    @property
    def message(self) -> str:
        m = self.spec.moduli[0]
        return (
            f"no hamiltonian path from {self.start} to {self.target}: every directed "
            f"path between them has length = {self.residue} (mod {m}), but a "
            f"hamiltonian path has length = {self.required} (mod {m})"
        )


def hamiltonian_path(m: int, k: int, u: Vertex, v: Vertex) -> PathCertificate | Refusal:
    """Certified hamiltonian path from u to v in (Z_m)^k, or a refusal.

    Outcomes are a trichotomy: a verified PathCertificate, a Refusal when
    the endpoint congruence sum(v - u) = -1 (mod m) fails (in which case no
    path exists), or an exception for unusable inputs.  k = 2 is rejected:
    for odd m only about half the admissible endpoints are reachable there,
    so no uniform construction exists; use the search oracle instead.
    """
    if m < 2:
        raise ValueError(f"cycle length must be >= 2, got {m}")
    if k < 3:
        raise ValueError(
            "k >= 3 required: for k = 2 and odd m only (m+1)/2 of the admissible "
            "endpoints terminate a hamiltonian path; use the oracle for k = 2"
        )
    spec = TorusSpec.power(m, k)
    spec.require_vertex(u)
    spec.require_vertex(v)
    diff = spec.subtract(v, u)
    residue = spec.residue_sum(diff, m)
    if residue != m - 1:
        return Refusal(spec, u, v, residue, m - 1)
    if m % 2 == 1:
        cert = path_for_odd_m(m, k, diff)
    else:
        cert = path_for_even_m(m, k, diff)
    if u == spec.zero():
        return cert
    # translation by u is a digraph automorphism: same word, shifted trace
    return expect_path(spec, u, v, cert.word)
