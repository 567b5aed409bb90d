"""Finite relations, finite spans, and the per-rig structure checks.

Relations between finite sets correspond to bool matrices, spans of
finite sets to nat matrices whose entries count apex fibers.  Both come
with brute-force composition oracles that never touch matrix arithmetic,
so the correspondences can be cross-checked honestly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matrices
from .errors import DomainError, ParseError, RigMismatchError, ShapeError, SourceSpan
from .matrices import Matrix
from .rigs import ADDITIVE_INVERSES, BOOL, NAT, Rig
from .semantics import eval_term
from .terms import (
    DELTA, MU, Arity, Id, Par, Scalar, Seq, Term, add_terms, seq, zero_term,
)


@dataclass(frozen=True)
class Relation:
    """A relation between {0..dom-1} and {0..cod-1}; pairs are (input, output)."""

    dom: int
    cod: int
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        for j, i in self.pairs:
            if not (0 <= j < self.dom and 0 <= i < self.cod):
                raise ShapeError(f"pair ({j},{i}) outside {self.dom}x{self.cod}")


@dataclass(frozen=True)
class Span:
    """Two functions out of a common apex: left into {0..dom-1}, right
    into {0..cod-1}.  The apex is {0..len(left)-1}."""

    dom: int
    cod: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        if len(self.left) != len(self.right):
            raise ShapeError("span legs have different lengths")
        for v in self.left:
            if not (0 <= v < self.dom):
                raise ShapeError(f"left leg value {v} outside 0..{self.dom - 1}")
        for v in self.right:
            if not (0 <= v < self.cod):
                raise ShapeError(f"right leg value {v} outside 0..{self.cod - 1}")

    @property
    def apex(self) -> int:
        return len(self.left)


def rel_identity(n: int) -> Relation:
    return Relation(n, n, frozenset((k, k) for k in range(n)))


def span_identity(n: int) -> Span:
    return Span(n, n, tuple(range(n)), tuple(range(n)))


# ---------------------------------------------------------------------------
# relations <-> bool matrices


def rel_to_matrix(r: Relation) -> Matrix:
    entries = [BOOL.zero] * (r.cod * r.dom)
    for j, i in r.pairs:
        entries[i * r.dom + j] = BOOL.one
    return Matrix(BOOL, r.dom, r.cod, tuple(entries))


def matrix_to_rel(M: Matrix) -> Relation:
    if M.rig is not BOOL:
        raise RigMismatchError(f"expected a bool matrix, got {M.rig.name}")
    pairs = frozenset(
        (j, i) for i in range(M.cod) for j in range(M.dom) if M.entries[i * M.dom + j]
    )
    return Relation(M.dom, M.cod, pairs)


def rel_compose_oracle(s: Relation, r: Relation) -> Relation:
    """Composite of r then s by explicit witness search, never by matrices."""
    if r.cod != s.dom:
        raise ShapeError(f"cannot compose: middle set {r.cod} != {s.dom}")
    pairs = set()
    for i in range(r.dom):
        for k in range(s.cod):
            for j in range(r.cod):
                if (i, j) in r.pairs and (j, k) in s.pairs:
                    pairs.add((i, k))
                    break
    return Relation(r.dom, s.cod, frozenset(pairs))


# ---------------------------------------------------------------------------
# spans <-> nat matrices


def span_to_matrix(s: Span) -> Matrix:
    entries = [0] * (s.cod * s.dom)
    for a in range(s.apex):
        entries[s.right[a] * s.dom + s.left[a]] += 1
    return Matrix(NAT, s.dom, s.cod, tuple(entries))


def matrix_to_span(M: Matrix) -> Span:
    """Canonical section of span_to_matrix: one apex point per unit of
    each entry, ordered by (output, input)."""
    if M.rig is not NAT:
        raise RigMismatchError(f"expected a nat matrix, got {M.rig.name}")
    left, right = [], []
    for i in range(M.cod):
        for j in range(M.dom):
            for _ in range(M.entries[i * M.dom + j]):
                left.append(j)
                right.append(i)
    return Span(M.dom, M.cod, tuple(left), tuple(right))


def span_compose_oracle(t: Span, s: Span) -> Span:
    """Composite of s then t by enumerating matching apex pairs."""
    if s.cod != t.dom:
        raise ShapeError(f"cannot compose: middle set {s.cod} != {t.dom}")
    left, right = [], []
    for a in range(s.apex):
        for b in range(t.apex):
            if s.right[a] == t.left[b]:
                left.append(s.left[a])
                right.append(t.right[b])
    return Span(s.dom, t.cod, tuple(left), tuple(right))


# ---------------------------------------------------------------------------
# per-rig structure checks


def special_check(rig: Rig) -> bool:
    """Whether copy-then-merge is the identity wire over this rig."""
    return eval_term(Seq(DELTA, MU), rig) == matrices.identity(rig, 1)


@dataclass(frozen=True)
class AntipodeReport:
    rig: str
    left_identity: bool       # merge (neg x id) copy  ==  discard-then-insert
    right_identity: bool      # merge (id x neg) copy  ==  discard-then-insert
    involutive: bool          # neg twice == identity wire
    sum_with_identity_zero: bool  # neg + id == zero map

    @property
    def ok(self) -> bool:
        return (
            self.left_identity
            and self.right_identity
            and self.involutive
            and self.sum_with_identity_zero
        )


def antipode_checks(rig: Rig) -> AntipodeReport:
    """Verify the negation scalar behaves as an antipode, as matrix identities."""
    if ADDITIVE_INVERSES not in rig.flags:
        raise DomainError(f"rig {rig.name} has no additive inverses")
    s = Scalar(-rig.one_element())
    zero_map = eval_term(zero_term(Arity(1, 1)), rig)
    left = eval_term(seq(DELTA, Par(s, Id(1)), MU), rig) == zero_map
    right = eval_term(seq(DELTA, Par(Id(1), s), MU), rig) == zero_map
    invol = eval_term(Seq(s, s), rig) == matrices.identity(rig, 1)
    summed = eval_term(add_terms(s, Id(1)), rig) == zero_map
    return AntipodeReport(rig.name, left, right, invol, summed)


def integer_scalar_term(n: int, rig: Rig) -> Term:
    """The n-fold sum of the unit scalar (or its negation), as a term.

    Evaluates to the 1x1 matrix holding the image of n in the rig.
    """
    if n == 0:
        return zero_term(Arity(1, 1))
    if n > 0:
        out: Term = Scalar(rig.one_element())
        for _ in range(n - 1):
            out = add_terms(Scalar(rig.one_element()), out)
        return out
    if ADDITIVE_INVERSES not in rig.flags:
        raise DomainError(f"rig {rig.name} has no additive inverses")
    minus = Scalar(-rig.one_element())
    out = minus
    for _ in range(-n - 1):
        out = add_terms(minus, out)
    return out


# ---------------------------------------------------------------------------
# text formats
#
#   rel <m> <n>        span <m> <n> <k>
#   i j ...            left right  (k lines)


def format_relation(r: Relation) -> str:
    lines = [f"rel {r.dom} {r.cod}"]
    for j, i in sorted(r.pairs):
        lines.append(f"{j} {i}")
    return "\n".join(lines) + "\n"


def parse_relation(text: str) -> Relation:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split()[:1] != ["rel"]:
        raise ParseError("expected 'rel <m> <n>' header", SourceSpan(0, 0))
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError("expected 'rel <m> <n>' header", SourceSpan(0, len(lines[0])))
    m, n = int(head[1]), int(head[2])
    pairs = set()
    for ln in lines[1:]:
        cells = ln.split()
        if len(cells) != 2:
            raise ParseError(f"expected 'i j' line, got {ln!r}", SourceSpan(0, 0))
        pairs.add((int(cells[0]), int(cells[1])))
    return Relation(m, n, frozenset(pairs))


def format_span(s: Span) -> str:
    lines = [f"span {s.dom} {s.cod} {s.apex}"]
    for a in range(s.apex):
        lines.append(f"{s.left[a]} {s.right[a]}")
    return "\n".join(lines) + "\n"


def parse_span(text: str) -> Span:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split()[:1] != ["span"]:
        raise ParseError("expected 'span <m> <n> <k>' header", SourceSpan(0, 0))
    head = lines[0].split()
    if len(head) != 4:
        raise ParseError("expected 'span <m> <n> <k>' header", SourceSpan(0, len(lines[0])))
    m, n, k = int(head[1]), int(head[2]), int(head[3])
    body = lines[1:]
    if len(body) != k:
        raise ParseError(f"expected {k} leg lines, found {len(body)}", SourceSpan(0, 0))
    left, right = [], []
    for ln in body:
        cells = ln.split()
        if len(cells) != 2:
            raise ParseError(f"expected 'left right' line, got {ln!r}", SourceSpan(0, 0))
        left.append(int(cells[0]))
        right.append(int(cells[1]))
    return Span(m, n, tuple(left), tuple(right))
