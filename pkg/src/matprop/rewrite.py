"""Directed rewriting with the diagram relations.

The base rule set holds the fourteen relations every rig satisfies: the
three merge laws, their three mirror images for copy, the four
merge/copy compatibility laws, and the four laws of the scalar action
(sum, product, one, zero).  Per-rig extensions add the collapse rule for
idempotent addition, its char-two variant, and the two negation rules
for rigs with additive inverses.

Rule patterns are ordinary terms whose Scalar payloads may be symbolic:
a variable that matching binds to a concrete scalar, or an expression
(sum, product, constants 0, 1, -1) evaluated when a rule side is
instantiated.  Matching is syntactic on associativity-normalized terms:
chains are flattened to right-nested form and strict unit identities are
applied first (see `terms.prune_identities`), so paths address the
normalized tree.

Rewriting exhibits derivations; it decides nothing.  Equality of
diagrams is decided in `semantics.equal_terms`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, NoMatchError, PathError
from .rigs import (
    ADDITIVE_INVERSES, CHAR_TWO, IDEMPOTENT_ADD, Rig, RigElement,
)
from .syntax import print_term
from .terms import (
    DELTA, EPS, ETA, MU, SWAP,
    Delta, Eps, Eta, Id, Mu, Par, Scalar, Seq, Swap, Term,
    arity_of, prune_identities, seq,
)

# ---------------------------------------------------------------------------
# symbolic scalar payloads for rule patterns


@dataclass(frozen=True)
class SVar:
    name: str

    def __str__(self):
        return f"?{self.name}"


@dataclass(frozen=True)
class SZero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class SOne:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class SMinusOne:
    def __str__(self):
        return "-1"


@dataclass(frozen=True)
class SAdd:
    a: object
    b: object

    def __str__(self):
        return f"{self.a}+{self.b}"


@dataclass(frozen=True)
class SMul:
    a: object
    b: object

    def __str__(self):
        return f"{self.a}*{self.b}"


def _has_vars(p) -> bool:
    match p:
        case SVar(_):
            return True
        case SAdd(a, b) | SMul(a, b):
            return _has_vars(a) or _has_vars(b)
        case _:
            return False


def _scalar_value(p, bindings: dict, rig: Rig) -> RigElement:
    match p:
        case RigElement():
            return p
        case SVar(name):
            return bindings[name]
        case SZero():
            return rig.zero_element()
        case SOne():
            return rig.one_element()
        case SMinusOne():
            return -rig.one_element()
        case SAdd(a, b):
            return _scalar_value(a, bindings, rig) + _scalar_value(b, bindings, rig)
        case SMul(a, b):
            return _scalar_value(a, bindings, rig) * _scalar_value(b, bindings, rig)
    raise TypeError(f"bad scalar pattern {p!r}")


# ---------------------------------------------------------------------------
# rules


@dataclass(frozen=True)
class RewriteRule:
    """An oriented pair of patterns with equal denotations."""

    name: str
    lhs: Term
    rhs: Term
    direction: str = "both"  # or "left-to-right"

    def __post_init__(self):
        la, ra = arity_of(self.lhs), arity_of(self.rhs)
        if la != ra:
            raise ConfigError(f"rule {self.name}: sides have different arities")
        if self.direction not in ("both", "left-to-right"):
            raise ConfigError(f"rule {self.name}: bad direction {self.direction!r}")


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[RewriteRule, ...]
    rig_flags: frozenset[str] = frozenset()

    def __iter__(self):
        return iter(self.rules)

    def extend(self, other: "RuleSet") -> "RuleSet":
        return RuleSet(self.rules + other.rules, self.rig_flags | other.rig_flags)

    def by_name(self, name: str) -> RewriteRule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(name)


def _rule(name, lhs, rhs, direction="both"):
    return RewriteRule(name, prune_identities(lhs), prune_identities(rhs), direction)


_I1 = Id(1)
_R = Scalar(SVar("r"))
_S = Scalar(SVar("s"))


def base_rules() -> RuleSet:
    """The fourteen relations valid over every rig."""
    rules = (
        _rule("unit-left", Seq(Par(ETA, _I1), MU), _I1),
        _rule("assoc", Seq(Par(_I1, MU), MU), Seq(Par(MU, _I1), MU)),
        _rule("comm", Seq(SWAP, MU), MU),
        _rule("counit-left", Seq(DELTA, Par(EPS, _I1)), _I1),
        _rule("coassoc", Seq(DELTA, Par(_I1, DELTA)), Seq(DELTA, Par(DELTA, _I1))),
        _rule("cocomm", Seq(DELTA, SWAP), DELTA),
        _rule(
            "bimonoid-mult",
            Seq(MU, DELTA),
            seq(Par(DELTA, DELTA), Par(_I1, Par(SWAP, _I1)), Par(MU, MU)),
        ),
        _rule("bimonoid-unit", Seq(ETA, DELTA), Par(ETA, ETA)),
        _rule("bimonoid-counit", Seq(MU, EPS), Par(EPS, EPS)),
        _rule("bimonoid-zero", Seq(ETA, EPS), Id(0)),
        _rule(
            "phi-sum",
            seq(DELTA, Par(_R, _S), MU),
            Scalar(SAdd(SVar("r"), SVar("s"))),
            direction="left-to-right",
        ),
        _rule(
            "phi-product",
            Seq(_R, _S),
            Scalar(SMul(SVar("r"), SVar("s"))),
            direction="left-to-right",
        ),
        _rule("phi-one", Scalar(SOne()), _I1),
        _rule("phi-zero", Scalar(SZero()), Seq(EPS, ETA)),
    )
    return RuleSet(rules)


_FLAG_RULES = {
    IDEMPOTENT_ADD: (
        ("special", Seq(DELTA, MU), _I1),
    ),
    CHAR_TWO: (
        ("char-two", Seq(DELTA, MU), Seq(EPS, ETA)),
    ),
    ADDITIVE_INVERSES: (
        ("antipode-left", seq(DELTA, Par(Scalar(SMinusOne()), _I1), MU), Seq(EPS, ETA)),
        ("antipode-right", seq(DELTA, Par(_I1, Scalar(SMinusOne())), MU), Seq(EPS, ETA)),
    ),
}


def extended_rules(flags) -> RuleSet:
    """The per-rig extension rules for the given flag set."""
    flags = frozenset(flags)
    unknown = flags - set(_FLAG_RULES)
    if unknown:
        raise ConfigError(f"unknown rig flags {sorted(unknown)}")
    rules = []
    for flag in (IDEMPOTENT_ADD, CHAR_TWO, ADDITIVE_INVERSES):
        if flag in flags:
            rules.extend(_rule(*spec) for spec in _FLAG_RULES[flag])
    return RuleSet(tuple(rules), flags)


_SELECTOR_FLAGS = {
    "special": IDEMPOTENT_ADD,
    "chartwo": CHAR_TWO,
    "antipode": ADDITIVE_INVERSES,
}


def ruleset_for(rig: Rig, selector: str = "auto") -> RuleSet:
    """Resolve a rule selector ("base", "auto", or "+special"-style
    additions) against a rig; requested flags the rig lacks are errors."""
    tokens = [t for t in selector.replace(",", "+").split("+") if t]
    if tokens == ["base"]:
        return base_rules()
    if tokens == ["auto"]:
        return base_rules().extend(extended_rules(rig.flags))
    flags = set()
    for tok in tokens:
        if tok in ("base", "auto"):
            raise ConfigError(f"selector {selector!r} mixes {tok!r} with additions")
        if tok not in _SELECTOR_FLAGS:
            raise ConfigError(f"unknown rule selector {tok!r}")
        flag = _SELECTOR_FLAGS[tok]
        if flag not in rig.flags:
            raise ConfigError(
                f"rig {rig.name} does not satisfy the {tok!r} rules"
            )
        flags.add(flag)
    return base_rules().extend(extended_rules(flags))


# ---------------------------------------------------------------------------
# matching and application


def _match(pat: Term, sub: Term, bindings: dict) -> bool:
    match pat, sub:
        case Id(a), Id(b):
            return a == b
        case (Swap(), Swap()) | (Mu(), Mu()) | (Eta(), Eta()) | (Delta(), Delta()) | (Eps(), Eps()):
            return True
        case Scalar(p), Scalar(v):
            if not isinstance(v, RigElement):
                return False
            if isinstance(p, RigElement):
                return p == v
            if isinstance(p, SVar):
                if p.name in bindings:
                    return bindings[p.name] == v
                bindings[p.name] = v
                return True
            if _has_vars(p):
                return False
            return _scalar_value(p, {}, v.rig) == v
        case Seq(pf, ps), Seq(sf, ss):
            return _match(pf, sf, bindings) and _match(ps, ss, bindings)
        case Par(pl, pr), Par(sl, sr):
            return _match(pl, sl, bindings) and _match(pr, sr, bindings)
        case _:
            return False


def _instantiate(side: Term, bindings: dict, rig: Rig | None) -> Term:
    match side:
        case Scalar(p):
            if isinstance(p, RigElement):
                return side
            if isinstance(p, SVar) and p.name in bindings:
                return Scalar(bindings[p.name])
            if rig is None:
                raise ConfigError(
                    "instantiating this rule needs a rig for its scalar constants"
                )
            return Scalar(_scalar_value(p, bindings, rig))
        case Seq(f, g):
            return Seq(_instantiate(f, bindings, rig), _instantiate(g, bindings, rig))
        case Par(f, g):
            return Par(_instantiate(f, bindings, rig), _instantiate(g, bindings, rig))
        case _:
            return side


def _subterm(t: Term, path: tuple[int, ...]) -> Term:
    for step in path:
        match t, step:
            case Seq(f, _), 0:
                t = f
            case Seq(_, g), 1:
                t = g
            case Par(f, _), 0:
                t = f
            case Par(_, g), 1:
                t = g
            case _:
                raise PathError(f"no subterm at {path}")
    return t


def _replace(t: Term, path: tuple[int, ...], new: Term) -> Term:
    if not path:
        return new
    step, rest = path[0], path[1:]
    match t, step:
        case Seq(f, g), 0:
            return Seq(_replace(f, rest, new), g)
        case Seq(f, g), 1:
            return Seq(f, _replace(g, rest, new))
        case Par(f, g), 0:
            return Par(_replace(f, rest, new), g)
        case Par(f, g), 1:
            return Par(f, _replace(g, rest, new))
    raise PathError(f"no subterm at {path}")


def _infer_rig(t: Term) -> Rig | None:
    match t:
        case Scalar(v) if isinstance(v, RigElement):
            return v.rig
        case Seq(f, g) | Par(f, g):
            return _infer_rig(f) or _infer_rig(g)
        case _:
            return None


def apply_at(
    t: Term,
    path: tuple[int, ...],
    rule: RewriteRule,
    orientation: str = "left-to-right",
    rig: Rig | None = None,
) -> Term:
    """Apply one rule at the addressed subterm of the normalized tree.

    The term is associativity-normalized first, so `path` addresses the
    tree `prune_identities(t)`.  The result is normalized again.
    """
    if orientation == "left-to-right":
        pat, rep = rule.lhs, rule.rhs
    elif orientation == "right-to-left":
        if rule.direction != "both":
            raise ConfigError(f"rule {rule.name} is one-directional")
        pat, rep = rule.rhs, rule.lhs
    else:
        raise ConfigError(f"bad orientation {orientation!r}")
    t = prune_identities(t)
    sub = _subterm(t, tuple(path))
    bindings: dict = {}
    if not _match(pat, sub, bindings):
        raise NoMatchError(f"rule {rule.name} does not match at {path}")
    use_rig = rig or _infer_rig(sub) or _infer_rig(t)
    new_sub = _instantiate(rep, bindings, use_rig)
    return prune_identities(_replace(t, tuple(path), new_sub))


def find_matches(t: Term, rules, rig: Rig | None = None):
    """All (path, rule) pairs that fire on the normalized term, in
    leftmost-innermost order with rules tried in registration order."""
    t = prune_identities(t)
    found: list[tuple[tuple[int, ...], RewriteRule]] = []

    def visit(sub: Term, path: tuple[int, ...]):
        match sub:
            case Seq(f, g) | Par(f, g):
                visit(f, path + (0,))
                visit(g, path + (1,))
        for rule in rules:
            if _match(rule.lhs, sub, {}):
                found.append((path, rule))

    visit(t, ())
    return found


# ---------------------------------------------------------------------------
# bounded normalization


@dataclass(frozen=True)
class TraceStep:
    index: int
    rule: str
    path: tuple[int, ...]
    before: Term
    after: Term

    def __str__(self):
        at = "root" if not self.path else ".".join(str(i) for i in self.path)
        return (
            f"step {self.index}: {self.rule} at {at} : "
            f"{print_term(self.before)} => {print_term(self.after)}"
        )


@dataclass(frozen=True)
class RewriteResult:
    term: Term
    steps: tuple[TraceStep, ...]
    bound_reached: bool = False

    def trace_lines(self) -> list[str]:
        lines = [str(s) for s in self.steps]
        if self.bound_reached:
            lines.append("bound reached")
        return lines


def _first_match(t: Term, rules, rig):
    def visit(sub: Term, path: tuple[int, ...]):
        match sub:
            case Seq(f, g) | Par(f, g):
                hit = visit(f, path + (0,)) or visit(g, path + (1,))
                if hit:
                    return hit
        for rule in rules:
            bindings: dict = {}
            if _match(rule.lhs, sub, bindings):
                return path, rule, bindings
        return None

    return visit(t, ())


def rewrite_bounded(t: Term, rs: RuleSet, max_steps: int, rig: Rig | None = None) -> RewriteResult:
    """Take up to max_steps left-to-right steps, leftmost-innermost, rules
    in registration order.  Deterministic; the result always denotes the
    same matrix as the input."""
    if max_steps < 0:
        raise ConfigError("max_steps must be >= 0")
    cur = prune_identities(t)
    steps: list[TraceStep] = []
    while len(steps) < max_steps:
        hit = _first_match(cur, rs, rig)
        if hit is None:
            return RewriteResult(cur, tuple(steps))
        path, rule, bindings = hit
        use_rig = rig or _infer_rig(cur)
        new_sub = _instantiate(rule.rhs, bindings, use_rig)
        nxt = prune_identities(_replace(cur, path, new_sub))
        steps.append(TraceStep(len(steps) + 1, rule.name, path, cur, nxt))
        cur = nxt
    bound_hit = _first_match(cur, rs, rig) is not None
    return RewriteResult(cur, tuple(steps), bound_reached=bound_hit)
