"""Symbolic arc words with nested powers, tracing, and hamiltonicity checks.

A word is a tree: a single symbol, a concatenation, or a power (w)^e with a
non-negative integer exponent, so run-length constructions like
(x1^2 x2)^9 stay small.  Exponent 0 is the empty word and is meaningful (for
cycle length 2 several building blocks degenerate to it).  Symbol labels are
either generator indices (ints, rendered x1..xk) or opaque letters such as
"a" and "b" for words over non-standard arc alphabets.

Verification is exact: a visited set sized to the vertex count, no
probabilistic shortcuts.  Certificates are the product of this library, so
the verifiers are the one place allowed to be boring and thorough.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .torus import TorusSpec, Vertex


class ConstructionError(RuntimeError):
    """A construction produced something its own verifier rejected."""


@dataclass(frozen=True)
class Symbol:
    label: Union[int, str]


@dataclass(frozen=True)
class Concat:
    parts: tuple["Word", ...]


@dataclass(frozen=True)
class Power:
    base: "Word"
    exponent: int

    def __post_init__(self) -> None:
        if not isinstance(self.exponent, int) or self.exponent < 0:
            raise ValueError(f"exponent must be a non-negative int, got {self.exponent!r}")


Word = Union[Symbol, Concat, Power]

EMPTY_WORD = Concat(())


def concat(*parts: Word) -> Concat:
    return Concat(tuple(parts))


def power(base: Word, exponent: int) -> Power:
    return Power(base, exponent)


def word_from_arcs(arcs: Iterable[int]) -> Concat:
    """Flat word from a sequence of generator indices."""
    return Concat(tuple(Symbol(int(g)) for g in arcs))


def flat_length(w: Word) -> int:
    """Length of the fully expanded word, computed without expanding."""
    if isinstance(w, Symbol):
        return 1
    if isinstance(w, Concat):
        return sum(flat_length(p) for p in w.parts)
    if isinstance(w, Power):
        return w.exponent * flat_length(w.base)
    raise TypeError(f"not a word: {w!r}")


def symbol_counts(w: Word) -> Counter:
    """Multiplicity of each label in the expansion, computed symbolically."""
    if isinstance(w, Symbol):
        return Counter({w.label: 1})
    if isinstance(w, Concat):
        total: Counter = Counter()
        for p in w.parts:
            total.update(symbol_counts(p))
        return total
    if isinstance(w, Power):
        inner = symbol_counts(w.base)
        return Counter({label: n * w.exponent for label, n in inner.items()})
    raise TypeError(f"not a word: {w!r}")


def expand(w: Word) -> Iterator[Union[int, str]]:
    """Stream the labels of the expansion left to right.

    Memory stays proportional to the tree depth, so arbitrarily long
    run-length words can be walked without materializing them.
    """
    if isinstance(w, Symbol):
        yield w.label
    elif isinstance(w, Concat):
        for p in w.parts:
            yield from expand(p)
    elif isinstance(w, Power):
        for _ in range(w.exponent):
            yield from expand(w.base)
    else:
        raise TypeError(f"not a word: {w!r}")


def _expand_list(w: Word) -> list:
    # hot-path helper: list repetition keeps Power expansion at C speed
    if isinstance(w, Symbol):
        return [w.label]
    if isinstance(w, Concat):
        out: list = []
        for p in w.parts:
            out.extend(_expand_list(p))
        return out
    if isinstance(w, Power):
        return _expand_list(w.base) * w.exponent
    raise TypeError(f"not a word: {w!r}")


def relabel(w: Word, mapping: Mapping) -> Word:
    """Rebuild the tree with every symbol label pushed through `mapping`."""
    if isinstance(w, Symbol):
        try:
            return Symbol(mapping[w.label])
        except KeyError:
            raise ValueError(f"label {w.label!r} has no image under the relabeling") from None
    if isinstance(w, Concat):
        return Concat(tuple(relabel(p, mapping) for p in w.parts))
    if isinstance(w, Power):
        return Power(relabel(w.base, mapping), w.exponent)
    raise TypeError(f"not a word: {w!r}")


def _generator_arcs(spec: TorusSpec, w: Word) -> list:
    arcs = _expand_list(w)
    k = spec.k
    for g in arcs:
        if type(g) is not int or not 0 <= g < k:
            raise ValueError(f"symbol {g!r} is not a generator index in [0, {k})")
    return arcs


def trace(
    spec: TorusSpec,
    start: Vertex,
    w: Word,
    steps: Mapping[Union[int, str], Vertex] | None = None,
) -> Iterator[Vertex]:
    """Yield the vertex sequence of the word starting at `start`.

    The first yielded vertex is `start`; one more follows per expanded
    symbol.  With `steps=None` labels must be generator indices; otherwise
    `steps` maps each label to an arbitrary step vector, which covers words
    over alphabets like a=(1,0), b=(1,1).
    """
    spec.require_vertex(start)
    coords = list(start)
    moduli = spec.moduli
    yield start
    if steps is None:
        k = spec.k
        for g in expand(w):
            if type(g) is not int or not 0 <= g < k:
                raise ValueError(f"symbol {g!r} is not a generator index in [0, {k})")
            coords[g] = (coords[g] + 1) % moduli[g]
            yield tuple(coords)
    else:
        for label in expand(w):
            try:
                delta = steps[label]
            except KeyError:
                raise ValueError(f"symbol {label!r} has no step vector") from None
            coords = [(c + d) % m for c, d, m in zip(coords, delta, moduli)]
            yield tuple(coords)


def endpoint(
    spec: TorusSpec,
    start: Vertex,
    w: Word,
    steps: Mapping[Union[int, str], Vertex] | None = None,
) -> Vertex:
    """Final vertex of the trace, computed from symbol counts alone."""
    spec.require_vertex(start)
    total = [0] * spec.k
    for label, n in symbol_counts(w).items():
        if steps is None:
            if type(label) is not int or not 0 <= label < spec.k:
                raise ValueError(f"symbol {label!r} is not a generator index in [0, {spec.k})")
            total[label] += n
        else:
            try:
                delta = steps[label]
            except KeyError:
                raise ValueError(f"symbol {label!r} has no step vector") from None
            for i, d in enumerate(delta):
                total[i] += n * d
    return tuple((s + t) % m for s, t, m in zip(start, total, spec.moduli))


def _weights(moduli: tuple[int, ...]) -> list[int]:
    w = [1] * len(moduli)
    for i in range(len(moduli) - 2, -1, -1):
        w[i] = w[i + 1] * moduli[i + 1]
    return w


@dataclass(frozen=True)
class PathCertificate:
    """An endpoint-checked hamiltonian path claim.

    When `verified` is false, `failure` says what went wrong and, for
    repeats and endpoint mismatches, `failure_position`/`failure_vertex`
    locate the first defect in the trace.
    """

    spec: TorusSpec
    start: Vertex
    target: Vertex
    word: Word
    verified: bool
    failure: str | None = None
    failure_position: int | None = None
    failure_vertex: Vertex | None = None

    @property
    def length(self) -> int:
        return flat_length(self.word)


@dataclass(frozen=True)
class CycleWitness:
    """A based hamiltonian cycle: full trace from 0 back to 0.

    Only `verify_ham_cycle` (or its strict wrapper) should build these, so
    holding one means the trace check has already passed.
    """

    spec: TorusSpec
    word: Word

    @property
    def base(self) -> Vertex:
        return self.spec.zero()

    @property
    def length(self) -> int:
        return flat_length(self.word)


@dataclass(frozen=True)
class CycleRejection:
    spec: TorusSpec
    word: Word
    reason: str
    position: int | None = None
    vertex: Vertex | None = None


def verify_ham_path(spec: TorusSpec, start: Vertex, target: Vertex, w: Word) -> PathCertificate:
    """Check that the word traces a hamiltonian path from start to target.

    Accepts exactly the words whose trace has vertex_count distinct vertices
    (hence all of them) and ends at target.  Failures are reported in the
    certificate, never raised.
    """
    spec.require_vertex(start)
    spec.require_vertex(target)
    count = spec.vertex_count
    n = flat_length(w)
    if n != count - 1:
        return PathCertificate(
            spec, start, target, w, False,
            failure=f"length {n} != vertex count - 1 = {count - 1}",
        )
    arcs = _generator_arcs(spec, w)
    moduli = spec.moduli
    weights = _weights(moduli)
    coords = list(start)
    idx = sum(c * wt for c, wt in zip(coords, weights))
    seen = bytearray(count)
    seen[idx] = 1
    pos = 0
    for g in arcs:
        pos += 1
        c = coords[g] + 1
        if c == moduli[g]:
            c = 0
            idx -= (moduli[g] - 1) * weights[g]
        else:
            idx += weights[g]
        coords[g] = c
        if seen[idx]:
            return PathCertificate(
                spec, start, target, w, False,
                failure="repeated vertex",
                failure_position=pos,
                failure_vertex=tuple(coords),
            )
        seen[idx] = 1
    final = tuple(coords)
    if final != target:
        return PathCertificate(
            spec, start, target, w, False,
            failure=f"endpoint {final} != target {target}",
            failure_position=pos,
            failure_vertex=final,
        )
    return PathCertificate(spec, start, target, w, True)


def verify_ham_cycle(spec: TorusSpec, w: Word) -> CycleWitness | CycleRejection:
    """Check that the word traces a hamiltonian cycle based at 0.

    Accepts exactly the words of length vertex_count whose trace visits
    every vertex once and returns to 0.  Rejections are reported, not
    raised.
    """
    count = spec.vertex_count
    n = flat_length(w)
    if n != count:
        return CycleRejection(spec, w, f"length {n} != vertex count {count}")
    arcs = _generator_arcs(spec, w)
    moduli = spec.moduli
    weights = _weights(moduli)
    coords = [0] * spec.k
    idx = 0
    seen = bytearray(count)
    seen[0] = 1
    pos = 0
    last = count - 1
    for g in arcs:
        c = coords[g] + 1
        if c == moduli[g]:
            c = 0
            idx -= (moduli[g] - 1) * weights[g]
        else:
            idx += weights[g]
        coords[g] = c
        if pos < last:
            if seen[idx]:
                return CycleRejection(spec, w, "revisits a vertex early", pos + 1, tuple(coords))
            seen[idx] = 1
        else:
            if idx != 0:
                return CycleRejection(spec, w, "does not close at 0", pos + 1, tuple(coords))
        pos += 1
    return CycleWitness(spec, w)


def expect_cycle(spec: TorusSpec, w: Word) -> CycleWitness:
    """Verify or abort; for constructions that must never emit unverified."""
    got = verify_ham_cycle(spec, w)
    if isinstance(got, CycleRejection):
        raise ConstructionError(
            f"internal cycle construction failed on {spec.moduli}: {got.reason}"
            + (f" at position {got.position}" if got.position is not None else "")
        )
    return got


def expect_path(spec: TorusSpec, start: Vertex, target: Vertex, w: Word) -> PathCertificate:
    cert = verify_ham_path(spec, start, target, w)
    if not cert.verified:
        raise ConstructionError(
            f"internal path construction failed on {spec.moduli}: {cert.failure}"
        )
    return cert


def cycle_distance(c: CycleWitness, v: Vertex) -> int:
    """Index of v along the cycle trace from the base vertex 0."""
    spec = c.spec
    spec.require_vertex(v)
    if v == c.base:
        return 0
    moduli = spec.moduli
    weights = _weights(moduli)
    target_idx = sum(x * wt for x, wt in zip(v, weights))
    arcs = _generator_arcs(spec, c.word)
    coords = [0] * spec.k
    idx = 0
    pos = 0
    for g in arcs:
        cc = coords[g] + 1
        if cc == moduli[g]:
            cc = 0
            idx -= (moduli[g] - 1) * weights[g]
        else:
            idx += weights[g]
        coords[g] = cc
        pos += 1
        if idx == target_idx:
            return pos
    raise ValueError(f"{v} does not occur on the cycle trace")  # unreachable for real witnesses


# --- serialization ----------------------------------------------------------
#
# Nested text form, e.g. ((a^1 b^2)^1 (a^1 b a)^6 (a^1 b^2)^1 a^1 b).
# Generator indices render as x1..xk; other labels are letter tokens.
# The flat JSON form is just a list of generator indices.  Both forms
# round-trip through the Word tree exactly.

_TOKEN_RE = re.compile(r"\(|\)|\^|\d+|[A-Za-z][A-Za-z0-9]*")
_GEN_RE = re.compile(r"x([0-9]+)\Z")
_LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


def _label_to_text(label) -> str:
    if type(label) is int:
        if label < 0:
            raise ValueError(f"generator index {label} is negative")
        return f"x{label + 1}"
    if isinstance(label, str) and _LABEL_RE.match(label) and not _GEN_RE.match(label):
        return label
    raise ValueError(f"label {label!r} has no unambiguous text form")


def word_to_text(w: Word) -> str:
    def item(node: Word) -> str:
        if isinstance(node, Symbol):
            return _label_to_text(node.label)
        if isinstance(node, Concat):
            return "(" + " ".join(item(p) for p in node.parts) + ")"
        if isinstance(node, Power):
            return f"{item(node.base)}^{node.exponent}"
        raise TypeError(f"not a word: {node!r}")

    return item(w)


def word_from_text(text: str) -> Word:
    tokens = _TOKEN_RE.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise ValueError("unrecognized characters in word text")
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def parse_item() -> Word:
        nonlocal pos
        tok = peek()
        if tok == "(":
            pos += 1
            parts = []
            while peek() not in (")", None):
                parts.append(parse_item())
            if peek() != ")":
                raise ValueError("unbalanced parenthesis in word text")
            pos += 1
            node: Word = Concat(tuple(parts))
        elif tok is not None and tok not in (")", "^") and not tok.isdigit():
            pos += 1
            gen = _GEN_RE.match(tok)
            if gen:
                index = int(gen.group(1))
                if index < 1:
                    raise ValueError(f"generator token {tok!r} must be x1 or higher")
                node = Symbol(index - 1)
            else:
                node = Symbol(tok)
        else:
            raise ValueError(f"unexpected token {tok!r} in word text")
        while peek() == "^":
            pos += 1
            exp = peek()
            if exp is None or not exp.isdigit():
                raise ValueError("exponent must be a non-negative integer")
            pos += 1
            node = Power(node, int(exp))
        return node

    items = []
    while peek() is not None:
        if peek() == ")":
            raise ValueError("unbalanced parenthesis in word text")
        items.append(parse_item())
    if len(items) == 1:
        return items[0]
    return Concat(tuple(items))


def word_to_flat(w: Word) -> list[int]:
    arcs = _expand_list(w)
    for g in arcs:
        if type(g) is not int:
            raise ValueError(f"label {g!r} is not a generator index; flat form needs ints")
    return arcs


def word_from_flat(arcs: Iterable[int]) -> Concat:
    out = []
    for g in arcs:
        if type(g) is not int or g < 0:
            raise ValueError(f"flat form entries must be non-negative ints, got {g!r}")
        out.append(Symbol(g))
    return Concat(tuple(out))
