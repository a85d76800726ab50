"""Named counting sequences: routing, metadata, and output formats.

One table maps every public sequence name to its computing route (closed
formula, generating function extraction, or exhaustive sweep), its natural
first index, and its OEIS entry when one exists.  The emitters render a
computed run of values as plain text, JSON, or an OEIS b-file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import oracle
from .gfengine import gf_build, extract_count
from .qcount import (
    PrimePower,
    gaussian_binomial,
    gl_order,
    involution_count_char2,
    linear_derangement_count,
    nilpotent_count,
    projection_count,
    diagonalizable_count,
    q_bell,
    q_factorial,
    q_stirling,
    rank_count,
    separable_class_count,
    subspace_total,
)
from .exact_series import DEFAULT_ORDER


class UnsupportedSequence(ValueError):
    """A sequence/parameter combination with no computing route."""


SCALAR_NAMES = (
    "all",
    "invertible",
    "subspaces_total",
    "qbell",
    "qfactorial",
    "lin_derangement",
    "proj_derangement",
    "diagonalizable",
    "projection",
    "power_identity",
    "nilpotent",
    "cyclic",
    "semisimple",
    "separable",
    "separable_classes",
    "conjclasses_all",
    "conjclasses_gl",
    "min_centralizer",
    "max_class",
)

TRIANGLE_NAMES = ("qbinom_row", "qstirling_row", "rank_row")

SEQUENCE_NAMES = SCALAR_NAMES + TRIANGLE_NAMES

NATURAL_START = {
    "all": 0,
    "invertible": 0,
    "subspaces_total": 0,
    "qbell": 1,
    "qfactorial": 0,
    "lin_derangement": 0,
    "proj_derangement": 0,
    "diagonalizable": 0,
    "projection": 0,
    "power_identity": 0,
    "nilpotent": 0,
    "cyclic": 0,
    "semisimple": 0,
    "separable": 0,
    "separable_classes": 1,
    "conjclasses_all": 0,
    "conjclasses_gl": 0,
    "min_centralizer": 1,
    "max_class": 1,
    "qbinom_row": 0,
    "qstirling_row": 1,
    "rank_row": 0,
}

# generating-function kind backing each gf-routed sequence
_GF_ROUTE = {
    "proj_derangement": "projective_derangement",
    "cyclic": "cyclic",
    "semisimple": "semisimple",
    "separable": "separable",
    "conjclasses_all": "conjclasses_all",
    "conjclasses_gl": "conjclasses_gl",
}

_POWER_IDENTITY_OEIS = {
    (2, 2): "A053722",
    (3, 2): "A053846",
    (4, 2): "A053856",
    (2, 3): "A053725",
    (3, 3): "A053847",
    (4, 3): "A053857",
    (2, 4): "A053718",
    (3, 4): "A053848",
    (4, 4): "A053859",
    (2, 5): "A053770",
    (3, 5): "A053849",
    (4, 5): "A053860",
    (2, 6): "A053771",
    (3, 6): "A053851",
    (4, 6): "A053861",
    (2, 7): "A053772",
    (3, 7): "A053852",
    (4, 7): "A053862",
    (2, 8): "A053773",
    (3, 8): "A053853",
    (4, 8): "A053863",
    (2, 9): "A053774",
    (3, 9): "A053854",
    (2, 10): "A053775",
    (3, 10): "A053855",
    (2, 11): "A053776",
    (2, 12): "A053777",
}

_MIN_CENTRALIZER_GL2 = {
    1: 1,
    2: 2,
    3: 3,
    4: 6,
    5: 12,
    6: 21,
    7: 42,
    8: 84,
    9: 147,
    10: 294,
}


def oeis_info(name: str, q: int, k: int | None) -> tuple[str | None, int | None]:
    """OEIS id and that entry's starting index, when one is known."""
    if name == "all" and q == 2:
        return "A002416", 0
    if name == "invertible" and q == 2:
        return "A002884", 0
    if name == "subspaces_total" and 2 <= q <= 8:
        return f"A{6116 + q - 2:06d}", 0
    if name == "qbinom_row" and 2 <= q <= 24:
        return f"A{22166 + q - 2:06d}", 0
    if name == "qfactorial" and q == 2:
        return "A005329", 0
    if name == "lin_derangement" and q == 2:
        return "A002820", 2
    if name == "projection" and q == 3:
        return "A053846", 0
    if name == "power_identity":
        ident = _POWER_IDENTITY_OEIS.get((q, k))
        if ident is None:
            return None, None
        return ident, 0 if ident == "A053846" else 1
    if name == "nilpotent" and q == 2:
        return "A053763", 0
    if name == "conjclasses_all" and q == 2:
        return "A070933", 0
    if name == "conjclasses_gl":
        ids = {2: "A006951", 3: "A006952", 4: "A049314", 5: "A049315", 7: "A049316"}
        if q in ids:
            return ids[q], 0
    if name == "max_class" and q == 2:
        return "A070731", 1
    if name == "min_centralizer" and q == 2:
        return "A082877", 1
    return None, None


@dataclass(frozen=True)
class SequenceSpec:
    """One fully resolved sequence request."""

    name: str
    q: int
    k: int | None
    min_n: int
    max_n: int
    oeis_id: str | None
    oeis_offset: int


def make_spec(
    name: str,
    q: int,
    k: int | None = None,
    min_n: int | None = None,
    max_n: int = 10,
    align_to_oeis: bool = False,
) -> SequenceSpec:
    if name not in SEQUENCE_NAMES:
        raise UnsupportedSequence(f"unknown sequence name {name!r}")
    PrimePower.of(q)
    if name == "power_identity":
        if k is None:
            raise UnsupportedSequence("power_identity needs the exponent k")
        if k < 1:
            raise UnsupportedSequence("the exponent k must be >= 1")
    elif k is not None and name not in TRIANGLE_NAMES:
        raise UnsupportedSequence(f"sequence {name!r} does not take k")
    ident, offset = oeis_info(name, q, k)
    if offset is None:
        offset = NATURAL_START[name]
    if min_n is None:
        min_n = offset if align_to_oeis else NATURAL_START[name]
    if min_n < 0:
        raise UnsupportedSequence("min_n must be >= 0")
    # max_n below min_n is allowed and yields an empty run of values
    return SequenceSpec(name, q, k, min_n, max_n, ident, offset)


def _min_centralizer_value(q: int, n: int, pair_budget: int) -> int:
    if n < 1:
        raise UnsupportedSequence("centralizer sequences start at n = 1")
    if q == 2 and n in _MIN_CENTRALIZER_GL2:
        return _MIN_CENTRALIZER_GL2[n]
    return oracle.min_centralizer_order(q, n, pair_budget)


def sequence_values(
    spec: SequenceSpec,
    order: int | None = None,
    enum_budget: int = oracle.DEFAULT_ENUM_BUDGET,
    pair_budget: int = oracle.DEFAULT_PAIR_BUDGET,
) -> list[int]:
    """Values of a scalar sequence for n = min_n .. max_n."""
    name, q, k = spec.name, spec.q, spec.k
    if name in TRIANGLE_NAMES:
        raise UnsupportedSequence(
            f"{name!r} is a triangle; use triangle_rows or a k column"
        )
    ns = range(spec.min_n, spec.max_n + 1)

    if name == "all":
        return [q ** (n * n) for n in ns]
    if name == "invertible":
        return [gl_order(q, n) for n in ns]
    if name == "subspaces_total":
        return [subspace_total(q, n) for n in ns]
    if name == "qbell":
        return [q_bell(q, n) for n in ns]
    if name == "qfactorial":
        return [q_factorial(q, n) for n in ns]
    if name == "lin_derangement":
        return [linear_derangement_count(q, n) for n in ns]
    if name == "diagonalizable":
        return [diagonalizable_count(q, n) for n in ns]
    if name == "projection":
        return [projection_count(q, n) for n in ns]
    if name == "nilpotent":
        return [nilpotent_count(q, n) for n in ns]
    if name == "separable_classes":
        return [separable_class_count(q, n) for n in ns]
    if name == "power_identity":
        pp = PrimePower.of(q)
        if k % pp.p:
            gf = gf_build("power_identity", q, _gf_order(order, spec.max_n), k=k)
            return [extract_count(gf, n, q) for n in ns]
        if k == 2 and pp.p == 2:
            return [involution_count_char2(q, n) for n in ns]
        raise UnsupportedSequence(
            f"no route for A^{k} = I over F_{q}: the characteristic divides k"
        )
    if name in _GF_ROUTE:
        kind = _GF_ROUTE[name]
        gf = gf_build(kind, q, _gf_order(order, spec.max_n))
        normalized = kind not in ("conjclasses_all", "conjclasses_gl")
        return [extract_count(gf, n, q, normalized=normalized) for n in ns]
    if name == "min_centralizer":
        return [_min_centralizer_value(q, n, pair_budget) for n in ns]
    if name == "max_class":
        out = []
        for n in ns:
            if n < 1:
                raise UnsupportedSequence("centralizer sequences start at n = 1")
            if q == 2 and n in _MIN_CENTRALIZER_GL2:
                out.append(gl_order(2, n) // _MIN_CENTRALIZER_GL2[n])
            else:
                out.append(oracle.max_class_size(q, n, pair_budget))
        return out
    raise UnsupportedSequence(f"no route for {name!r}")  # unreachable


def _gf_order(order: int | None, max_n: int) -> int:
    if order is None:
        return max(DEFAULT_ORDER, max_n)
    if order < max_n:
        raise UnsupportedSequence(
            f"truncation order {order} is below the requested max n {max_n}"
        )
    return order


def triangle_rows(name: str, q: int, lo: int, hi: int) -> list[list[int]]:
    """Rows lo..hi of a triangle sequence."""
    if name not in TRIANGLE_NAMES:
        raise UnsupportedSequence(f"{name!r} is not a triangle")
    if lo < NATURAL_START[name]:
        raise UnsupportedSequence(f"{name!r} rows start at {NATURAL_START[name]}")
    rows = []
    for n in range(lo, hi + 1):
        if name == "qbinom_row":
            rows.append([gaussian_binomial(q, n, kk) for kk in range(n + 1)])
        elif name == "qstirling_row":
            rows.append([q_stirling(q, n, kk) for kk in range(1, n + 1)])
        else:
            rows.append([rank_count(q, n, n, kk) for kk in range(n + 1)])
    return rows


def triangle_column(name: str, q: int, k: int, lo: int, hi: int) -> list[int]:
    """The fixed-k column of a triangle for n = lo .. hi."""
    if name not in TRIANGLE_NAMES:
        raise UnsupportedSequence(f"{name!r} is not a triangle")
    if name == "qbinom_row":
        return [gaussian_binomial(q, n, k) for n in range(lo, hi + 1)]
    if name == "qstirling_row":
        return [q_stirling(q, n, k) for n in range(lo, hi + 1)]
    return [rank_count(q, n, n, k) for n in range(lo, hi + 1)]


def triangle_flat_start(name: str, first_row: int) -> int:
    """Index of the first entry of `first_row` when the triangle is read by rows."""
    base_row = NATURAL_START[name]
    idx = base_row  # first flattened index matches the first row number
    for row in range(base_row, first_row):
        if name == "qstirling_row":
            idx += row
        else:
            idx += row + 1
    return idx


def emit_plain(values) -> str:
    return " ".join(str(v) for v in values)


def emit_json(spec: SequenceSpec, values, offset: int | None = None) -> str:
    obj = {
        "sequence": spec.name,
        "q": spec.q,
        "k": spec.k,
        "offset": spec.min_n if offset is None else offset,
        "oeis": spec.oeis_id,
        "values": [str(v) for v in values],
    }
    return json.dumps(obj)


def emit_bfile(start: int, values) -> str:
    return "".join(f"{start + i} {v}\n" for i, v in enumerate(values))


def parse_bfile(text: str) -> tuple[int, list[int]]:
    """Inverse of emit_bfile: the starting index and the value list."""
    start = None
    prev = None
    values = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx_s, val_s = line.split()
        idx = int(idx_s)
        if start is None:
            start = idx
        elif idx != prev + 1:
            raise ValueError(f"non-contiguous b-file index {idx}")
        prev = idx
        values.append(int(val_s))
    if start is None:
        return 0, []
    return start, values
