"""Free syntax for wiring diagrams over the generators.

A term denotes a diagram read top to bottom: `Seq(f, g)` is f followed by
g, `Par(f, g)` places f beside g.  Generators and their arities:

    Id(n)     n -> n        Swap   2 -> 2
    Mu        2 -> 1        Eta    0 -> 1
    Delta     1 -> 2        Eps    1 -> 0
    Scalar(r) 1 -> 1

Terms are immutable trees; nothing here is quotiented by the diagram
relations (equality of denotations lives in `semantics`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import ArityError, RigMismatchError
from .rigs import RigElement


class Arity(NamedTuple):
    dom: int
    cod: int


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Id(Term):
    wires: int


@dataclass(frozen=True)
class Swap(Term):
    pass


@dataclass(frozen=True)
class Mu(Term):
    pass


@dataclass(frozen=True)
class Eta(Term):
    pass


@dataclass(frozen=True)
class Delta(Term):
    pass


@dataclass(frozen=True)
class Eps(Term):
    pass


@dataclass(frozen=True)
class Scalar(Term):
    value: RigElement  # rewrite patterns may carry symbolic payloads instead


@dataclass(frozen=True)
class Seq(Term):
    first: Term
    second: Term


@dataclass(frozen=True)
class Par(Term):
    left: Term
    right: Term


SWAP = Swap()
MU = Mu()
ETA = Eta()
DELTA = Delta()
EPS = Eps()

_GENERATOR_ARITIES = {Swap: Arity(2, 2), Mu: Arity(2, 1), Eta: Arity(0, 1),
                      Delta: Arity(1, 2), Eps: Arity(1, 0), Scalar: Arity(1, 1)}


def _check(t: Term, path: tuple[int, ...]):
    """Return (arity, scalar rig or None) of t, validating as we go."""
    match t:
        case Id(n):
            if n < 0:
                raise ArityError(f"negative wire count {n}", path)
            return Arity(n, n), None
        case Seq(f, g):
            fa, fr = _check(f, path + (0,))
            ga, gr = _check(g, path + (1,))
            if fa.cod != ga.dom:
                raise ArityError(
                    f"sequential mismatch: first yields {fa.cod} wires, "
                    f"second expects {ga.dom}",
                    path,
                )
            return Arity(fa.dom, ga.cod), _join_rigs(fr, gr)
        case Par(f, g):
            fa, fr = _check(f, path + (0,))
            ga, gr = _check(g, path + (1,))
            return Arity(fa.dom + ga.dom, fa.cod + ga.cod), _join_rigs(fr, gr)
        case Scalar(v):
            rig = v.rig if isinstance(v, RigElement) else None
            return _GENERATOR_ARITIES[Scalar], rig
        case _:
            return _GENERATOR_ARITIES[type(t)], None


def _join_rigs(a, b):
    if a is None:
        return b
    if b is None or a is b:
        return a
    raise RigMismatchError(f"term mixes scalars from {a.name} and {b.name}")


def arity_of(t: Term) -> Arity:
    """Arity of a well-formed term; raises on ill-composed Seq or mixed rigs."""
    a, _ = _check(t, ())
    return a


def scalar_rig(t: Term):
    """The rig of the term's scalar literals, or None if there are none."""
    _, rig = _check(t, ())
    return rig


# ---------------------------------------------------------------------------
# combinators


def seq(*ts: Term) -> Term:
    """Right-nested sequential composite; arity-checked."""
    if not ts:
        raise ValueError("seq() needs at least one term")
    out = ts[-1]
    for t in reversed(ts[:-1]):
        out = Seq(t, out)
    arity_of(out)
    return out


def par(*ts: Term) -> Term:
    """Right-nested parallel composite; empty product is Id(0)."""
    if not ts:
        return Id(0)
    out = ts[-1]
    for t in reversed(ts[:-1]):
        out = Par(t, out)
    return out


def par_n(t: Term, n: int) -> Term:
    return par(*([t] * n))


def mu_n(n: int) -> Term:
    """n-fold merge with arity (n, 1), right-nested."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ETA
    return Seq(Par(Id(1), mu_n(n - 1)), MU)


def delta_n(n: int) -> Term:
    """n-fold copy with arity (1, n), the mirror image of mu_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return EPS
    return Seq(DELTA, Par(Id(1), delta_n(n - 1)))


def perm_term(p) -> Term:
    """A swap network realizing the permutation p (input k exits at p[k]).

    Built from adjacent transpositions in bubble-sort order, so the result
    is deterministic; the identity permutation gives Id(k) and a single
    transposition of two wires gives Swap.
    """
    p = tuple(p)
    k = len(p)
    if sorted(p) != list(range(k)):
        raise ValueError(f"{p!r} is not a permutation of 0..{k - 1}")
    work = list(p)
    layers = []
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            if work[i] > work[i + 1]:
                work[i], work[i + 1] = work[i + 1], work[i]
                layers.append(i)
                changed = True
    if not layers:
        return Id(k)
    return seq(*[_swap_layer(i, k) for i in layers])


def _swap_layer(i: int, k: int) -> Term:
    parts = []
    if i > 0:
        parts.append(Id(i))
    parts.append(SWAP)
    if k - i - 2 > 0:
        parts.append(Id(k - i - 2))
    return par(*parts)


def _riffle(n: int) -> tuple[int, ...]:
    """Send (a1..an, b1..bn) to (a1, b1, .., an, bn)."""
    p = [0] * (2 * n)
    for i in range(n):
        p[i] = 2 * i
        p[n + i] = 2 * i + 1
    return tuple(p)


def bundle_mu(n: int) -> Term:
    """Merge two bundles of n wires pointwise: arity (2n, n)."""
    pre = perm_term(_riffle(n))
    pairs = par_n(MU, n)
    if isinstance(pre, Id):
        return pairs
    return Seq(pre, pairs)


def bundle_delta(n: int) -> Term:
    """Copy a bundle of n wires pointwise: arity (n, 2n), outputs grouped
    as (first copies.., second copies..)."""
    post_p = [0] * (2 * n)
    for i in range(n):
        post_p[2 * i] = i
        post_p[2 * i + 1] = n + i
    post = perm_term(post_p)
    pairs = par_n(DELTA, n)
    if isinstance(post, Id):
        return pairs
    return Seq(pairs, post)


def add_terms(f: Term, g: Term) -> Term:
    """Diagrammatic sum: copy the inputs, run f and g side by side, merge."""
    fa, ga = arity_of(f), arity_of(g)
    if fa != ga:
        raise ArityError(
            f"cannot add terms of arities {fa.dom}->{fa.cod} and {ga.dom}->{ga.cod}"
        )
    return seq(bundle_delta(fa.dom), Par(f, g), bundle_mu(fa.cod))


def zero_term(a) -> Term:
    """The term denoting the all-zeros matrix of the given arity."""
    dom, cod = a
    if dom == 0 and cod == 0:
        return Id(0)
    if dom == 0:
        return par_n(ETA, cod)
    if cod == 0:
        return par_n(EPS, dom)
    return Seq(par_n(EPS, dom), par_n(ETA, cod))


# ---------------------------------------------------------------------------
# structural normalization


def seq_parts(t: Term) -> Iterator[Term]:
    if isinstance(t, Seq):
        yield from seq_parts(t.first)
        yield from seq_parts(t.second)
    else:
        yield t


def par_parts(t: Term) -> Iterator[Term]:
    if isinstance(t, Par):
        yield from par_parts(t.left)
        yield from par_parts(t.right)
    else:
        yield t


def right_nested(t: Term) -> Term:
    """Re-associate all Seq and Par chains to right-nested form."""
    match t:
        case Seq(_, _):
            return seq(*[right_nested(p) for p in seq_parts(t)])
        case Par(_, _):
            return par(*[right_nested(p) for p in par_parts(t)])
        case _:
            return t


def prune_identities(t: Term) -> Term:
    """Right-nest and apply the strict PROP unit laws: identities drop out
    of Seq chains, Id(0) drops out of Par chains, and adjacent identities
    in a Par chain fuse.  The denotation is unchanged."""
    match t:
        case Seq(_, _):
            parts = [prune_identities(p) for p in seq_parts(t)]
            kept = [p for p in parts if not isinstance(p, Id)]
            if not kept:
                return parts[0]
            out = kept[-1]
            for p in reversed(kept[:-1]):
                out = Seq(p, out)
            return out
        case Par(_, _):
            kept: list[Term] = []
            for p in par_parts(t):
                q = prune_identities(p)
                if isinstance(q, Id):
                    if q.wires == 0:
                        continue
                    if kept and isinstance(kept[-1], Id):
                        kept[-1] = Id(kept[-1].wires + q.wires)
                        continue
                kept.append(q)
            return par(*kept)
        case _:
            return t
