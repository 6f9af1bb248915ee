"""Generalized Pauli observables over a factored Hilbert-space dimension.

An observable is a class of the Pauli group modulo its centre.  On a factor
of dimension q_i it is the exponent pair (b_i, c_i) of X^b Z^c; phases are
discarded.  Two observables commute iff the phases of their per-factor
commutators multiply to 1, i.e.

    sum_i Delta_i * (L / q_i) == 0  (mod L),   Delta_i = c_i b'_i - b_i c'_i,

with L the lcm of the factors.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .graphcore.graph import Graph, mask_of

DEFAULT_VERTEX_CAP = 4096
MATRIX_CAP = 64

_QUBIT_LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_LETTER_PAIRS = {v: k for k, v in _QUBIT_LETTERS.items()}


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class DimensionSpec:
    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(f) for f in self.factors)
        if not factors:
            raise ValueError("at least one factor is required")
        if any(f < 2 for f in factors):
            raise ValueError(f"every factor must be at least 2, got {factors}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def parse(cls, text: str | int | Sequence[int]) -> "DimensionSpec":
        """Accepts ``"4x3"``, ``12``, ``[2, 2, 3]`` or an existing spec."""
        if isinstance(text, DimensionSpec):
            return text
        if isinstance(text, int):
            return cls((text,))
        if isinstance(text, str):
            parts = [p for p in re.split(r"[x×*,]", text.strip()) if p]
            try:
                return cls(tuple(int(p) for p in parts))
            except ValueError:
                raise ValueError(f"cannot parse dimensions {text!r}") from None
        return cls(tuple(text))

    @property
    def total(self) -> int:
        return math.prod(self.factors)

    @property
    def lcm(self) -> int:
        return reduce(math.lcm, self.factors)

    @property
    def all_qubits(self) -> bool:
        return all(f == 2 for f in self.factors)

    def __str__(self) -> str:
        return "x".join(map(str, self.factors))


@dataclass(frozen=True, order=True)
class Observable:
    components: tuple[tuple[int, int], ...]

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for pair in self.components for x in pair)

    def is_identity(self) -> bool:
        return all(b == 0 and c == 0 for b, c in self.components)

    def conforms(self, dims: DimensionSpec) -> bool:
        return len(self.components) == len(dims.factors) and all(
            0 <= b < q and 0 <= c < q for (b, c), q in zip(self.components, dims.factors)
        )


@dataclass(frozen=True)
class ObservableSet:
    dims: DimensionSpec
    members: tuple[Observable, ...]
    index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Observable:
        return self.members[i]

    def vertex(self, o: Observable) -> int:
        return self.index[o]

    def labels(self) -> list[str]:
        return [format_label(o, self.dims) for o in self.members]


def _as_dims(dims) -> DimensionSpec:
    return DimensionSpec.parse(dims)


def make_observable_set(dims, members: Iterable[Observable]) -> ObservableSet:
    dims = _as_dims(dims)
    members = tuple(members)
    for o in members:
        if not o.conforms(dims):
            raise ValueError(f"{o} does not conform to dimensions {dims}")
        if o.is_identity():
            raise ValueError("the identity class is not an observable")
    index = {o: i for i, o in enumerate(members)}
    if len(index) != len(members):
        raise ValueError("duplicate observables")
    return ObservableSet(dims, members, index)


def enumerate_observables(dims) -> ObservableSet:
    """All non-identity classes, ordered lexicographically on (b1, c1, ..., br, cr)."""
    dims = _as_dims(dims)
    ranges = [range(q) for q in dims.factors for _ in (0, 1)]
    members = []
    for flat in product(*ranges):
        if any(flat):
            members.append(Observable(tuple(zip(flat[0::2], flat[1::2]))))
    return make_observable_set(dims, members)


def commutes(a: Observable, b: Observable, dims) -> bool:
    dims = _as_dims(dims)
    if len(a.components) != len(dims.factors) or len(b.components) != len(dims.factors):
        raise ValueError("observable shape does not match the dimensions")
    L = dims.lcm
    total = 0
    for (b1, c1), (b2, c2), q in zip(a.components, b.components, dims.factors):
        total += ((c1 * b2 - b1 * c2) % q) * (L // q)
    return total % L == 0


def _commutation_matrix(obs: ObservableSet) -> np.ndarray:
    dims = obs.dims
    L = dims.lcm
    flat = np.array([o.flat for o in obs.members], dtype=np.int64).reshape(len(obs), -1)
    phase = np.zeros((len(obs), len(obs)), dtype=np.int64)
    for i, q in enumerate(dims.factors):
        b = flat[:, 2 * i]
        c = flat[:, 2 * i + 1]
        delta = (np.outer(c, b) - np.outer(b, c)) % q
        phase += delta * (L // q)
    return phase % L == 0


def pauli_graph_of(obs: ObservableSet) -> Graph:
    """Commutation graph on an arbitrary observable set."""
    comm = _commutation_matrix(obs)
    np.fill_diagonal(comm, False)
    adj = [mask_of(np.flatnonzero(row).tolist()) for row in comm]
    return Graph(adj, obs.labels(), check=False)


def build_pauli_graph(dims, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Vertices are the observables; edges join commuting pairs."""
    dims = _as_dims(dims)
    if dims.total**2 - 1 > vertex_cap:
        raise CapExceeded(f"{dims.total ** 2 - 1} observables exceed the vertex cap {vertex_cap}")
    return pauli_graph_of(enumerate_observables(dims))


def format_label(o: Observable, dims) -> str:
    """Qubit factors print as I/X/Y/Z, others as ``X^bZ^c``.

    An all-qubit system concatenates the letters (``"XZ"``); otherwise the
    factors are joined with ``⊗``.
    """
    dims = _as_dims(dims)
    parts = []
    for (b, c), q in zip(o.components, dims.factors):
        parts.append(_QUBIT_LETTERS[(b, c)] if q == 2 else f"X^{b}Z^{c}")
    return "".join(parts) if dims.all_qubits else "⊗".join(parts)


_WORD = re.compile(r"([XZ])(?:\^(\d+))?")


def _parse_word(word: str, q: int) -> tuple[int, int]:
    word = word.strip()
    if q == 2 and word in _LETTER_PAIRS:
        return _LETTER_PAIRS[word]
    if word in ("I", "1", ""):
        return (0, 0)
    pos = 0
    b = c = 0
    for m in _WORD.finditer(word):
        if m.start() != pos:
            break
        e = int(m.group(2) or 1)
        if m.group(1) == "X":
            b += e
        else:
            c += e
        pos = m.end()
    if pos != len(word):
        raise ValueError(f"cannot parse factor {word!r}")
    return (b % q, c % q)


def parse_label(text: str, dims) -> Observable:
    """Inverse of :func:`format_label`; also reads words such as ``Z^2X^3``.

    Phases and operator order are irrelevant in the central quotient, so
    ``Z^2X^3`` and ``X^3Z^2`` are the same observable.
    """
    dims = _as_dims(dims)
    text = text.strip()
    if "⊗" in text:
        words = text.split("⊗")
    elif dims.all_qubits and len(text) == len(dims.factors):
        words = list(text)
    elif len(dims.factors) == 1:
        words = [text]
    else:
        raise ValueError(f"cannot split {text!r} into {len(dims.factors)} factors")
    if len(words) != len(dims.factors):
        raise ValueError(f"{text!r} has {len(words)} factors, expected {len(dims.factors)}")
    return Observable(tuple(_parse_word(w, q) for w, q in zip(words, dims.factors)))


def matrix_realization(o: Observable, dims) -> np.ndarray:
    """Dense tensor product of X^b Z^c over the factors (validation only)."""
    dims = _as_dims(dims)
    if dims.total > MATRIX_CAP:
        raise CapExceeded(f"dimension {dims.total} exceeds the matrix cap {MATRIX_CAP}")
    out = np.ones((1, 1), dtype=complex)
    for (b, c), q in zip(o.components, dims.factors):
        shift = np.roll(np.eye(q), 1, axis=0)  # X|s> = |s+1>
        clock = np.diag(np.exp(2j * np.pi * np.arange(q) / q))
        factor = np.linalg.matrix_power(shift, b) @ np.linalg.matrix_power(clock, c)
        out = np.kron(out, factor)
    return out


# ingestion of observable lists


def _parse_line(line: str, dims: DimensionSpec | None) -> tuple[Observable, DimensionSpec]:
    if ";" in line or "," in line:
        if dims is None:
            raise ValueError("exponent-form observables need explicit dimensions")
        pairs = []
        for chunk in line.split(";"):
            b, c = (int(x) for x in chunk.split(","))
            pairs.append((b, c))
        return Observable(tuple(pairs)), dims
    letters = line.replace(" ", "")
    if dims is None:
        dims = DimensionSpec((2,) * len(letters))
    if not dims.all_qubits or len(letters) != len(dims.factors):
        raise ValueError(f"letter-form observable {line!r} does not match dimensions {dims}")
    return Observable(tuple(_LETTER_PAIRS[ch] for ch in letters)), dims


def read_observables(source: str | Path, dims=None) -> ObservableSet:
    """Read an observable list: one per line, letter form ``XYI`` or exponent
    form ``1,0;1,1;0,0``; lines starting with ``#`` are ignored.

    ``source`` is a path or the text itself.  Exponent form needs ``dims``.
    """
    if isinstance(source, Path) or ("\n" not in str(source) and Path(str(source)).is_file()):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = str(source)
    dims = _as_dims(dims) if dims is not None else None
    members = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            o, dims = _parse_line(line, dims)
        except KeyError as exc:
            raise ValueError(f"unknown qubit letter in {line!r}") from exc
        members.append(o)
    if dims is None:
        raise ValueError("no observables found")
    return make_observable_set(dims, members)
