"""First-order terms over a finite signature, with well-scoped variables.

A term over ``n`` variables mentions only ``x0 .. x(n-1)``.  Substitution is
simultaneous: ``subst(t, sigma)`` replaces every ``xi`` by ``sigma[i]`` in one
pass, so there is no capture to worry about (the signature has no binders).

Rewriting is leftmost-outermost with a step budget; confluence and
termination of the rule set are the caller's responsibility.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Union

from .errors import ContractError, NormalizationError, ScopeError, TermSyntaxError

DEFAULT_FUEL = 10_000

_VAR_RE = re.compile(r"x(\d+)\Z")
_TOKEN_RE = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


@dataclass(frozen=True, slots=True)
class Var:
    index: int

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True, slots=True)
class App:
    op: str
    args: tuple = ()
    # terms are dict keys all over the place; hash once
    _hash: int | None = field(default=None, init=False, compare=False, repr=False)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.op, self.args))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if not self.args:
            return self.op
        return "(" + " ".join([self.op, *map(str, self.args)]) + ")"


Term = Union[Var, App]


def show(t: Term) -> str:
    return str(t)


def size(t: Term) -> int:
    """Node count."""
    if isinstance(t, Var):
        return 1
    return 1 + sum(size(a) for a in t.args)


def variables(t: Term) -> set[int]:
    match t:
        case Var(i):
            return {i}
        case App(_, args):
            out = set()
            for a in args:
                out |= variables(a)
            return out


def check_scope(t: Term, n: int) -> None:
    """Raise :class:`ScopeError` naming the first variable outside ``x0..x(n-1)``."""
    for i in sorted(variables(t)):
        if i >= n:
            raise ScopeError(f"variable x{i} out of scope for {n} variable(s) in {t}", f"x{i}")


def subst(t: Term, sigma) -> Term:
    """Simultaneous substitution of ``sigma[i]`` for ``xi``."""
    if type(t) is Var:
        i = t.index
        if i >= len(sigma):
            raise ScopeError(f"variable x{i} has no substituent (only {len(sigma)})", f"x{i}")
        return sigma[i]
    if not t.args:
        return t
    return App(t.op, tuple([subst(a, sigma) for a in t.args]))


def rename(t: Term, table) -> Term:
    """Substitute variables for variables: ``xi -> x(table[i])``."""
    return subst(t, [Var(j) for j in table])


# ---------------------------------------------------------------------------
# signatures and parsing


class Signature:
    """Operation symbols with arities, in declaration order."""

    def __init__(self, ops=()):
        self.arity = {}
        for op, k in (ops.items() if isinstance(ops, dict) else ops):
            if not isinstance(op, str) or not op or _VAR_RE.match(op) or re.search(r"[\s()]", op):
                raise ContractError(f"bad operation name {op!r}")
            if not isinstance(k, int) or k < 0:
                raise ContractError(f"bad arity {k!r} for {op}")
            if op in self.arity:
                raise ContractError(f"operation {op} declared twice")
            self.arity[op] = k

    def __iter__(self):
        return iter(self.arity.items())

    def __repr__(self):
        return "Signature(" + ", ".join(f"{o}/{k}" for o, k in self) + ")"

    def __eq__(self, other):
        return isinstance(other, Signature) and list(self) == list(other)

    def __hash__(self):
        return hash(tuple(self))

    def check(self, t: Term) -> None:
        match t:
            case App(op, args):
                if op not in self.arity:
                    raise ContractError(f"unknown operation {op}")
                if len(args) != self.arity[op]:
                    raise ContractError(f"{op} expects {self.arity[op]} argument(s), got {len(args)}")
                for a in args:
                    self.check(a)


MONOID_SIGNATURE = Signature({"mul": 2, "e": 0})


def parse(text: str, signature: Signature | None = None) -> Term:
    """Parse ``TERM ::= VAR | "(" OP TERM* ")"``; a nullary op may be written bare.

    With a signature, arities are enforced and unknown symbols rejected.
    Errors carry the character offset.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        if m.end() == pos:
            break
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    if text[pos:].strip():
        raise TermSyntaxError("unexpected character", pos)
    if not tokens:
        raise TermSyntaxError("empty term", 0)

    def atom(tok, at):
        vm = _VAR_RE.match(tok)
        if vm:
            return Var(int(vm.group(1)))
        if signature is not None:
            if tok not in signature.arity:
                raise TermSyntaxError(f"unknown symbol {tok!r}", at)
            if signature.arity[tok] != 0:
                raise TermSyntaxError(f"{tok} expects {signature.arity[tok]} argument(s)", at)
        return App(tok, ())

    def term(i):
        tok, at = tokens[i]
        if tok == ")":
            raise TermSyntaxError("unexpected ')'", at)
        if tok != "(":
            return atom(tok, at), i + 1
        if i + 1 >= len(tokens):
            raise TermSyntaxError("unterminated application", at)
        op, op_at = tokens[i + 1]
        if op in "()" or _VAR_RE.match(op):
            raise TermSyntaxError("expected an operation name", op_at)
        args = []
        j = i + 2
        while True:
            if j >= len(tokens):
                raise TermSyntaxError("missing ')'", len(text))
            if tokens[j][0] == ")":
                break
            a, j = term(j)
            args.append(a)
        if signature is not None:
            if op not in signature.arity:
                raise TermSyntaxError(f"unknown operation {op!r}", op_at)
            if signature.arity[op] != len(args):
                raise TermSyntaxError(
                    f"{op} expects {signature.arity[op]} argument(s), got {len(args)}", at)
        return App(op, tuple(args)), j + 1

    t, i = term(0)
    if i != len(tokens):
        raise TermSyntaxError("trailing input", tokens[i][1])
    return t


# ---------------------------------------------------------------------------
# rewriting


def match(pattern: Term, t: Term, binding: dict | None = None) -> dict | None:
    """First-order matching; pattern variables may repeat (non-linear)."""
    binding = {} if binding is None else binding
    stack = [(pattern, t)]
    while stack:
        p, s = stack.pop()
        if isinstance(p, Var):
            bound = binding.get(p.index)
            if bound is None:
                binding[p.index] = s
            elif bound != s:
                return None
        elif isinstance(s, App) and s.op == p.op and len(s.args) == len(p.args):
            stack.extend(zip(p.args, s.args))
        else:
            return None
    return binding


@dataclass(frozen=True)
class Rule:
    lhs: Term
    rhs: Term

    def __str__(self):
        return f"{self.lhs} -> {self.rhs}"


class RewriteSystem:
    """Oriented rules over a signature, normalized leftmost-outermost."""

    def __init__(self, signature: Signature, rules=(), fuel=DEFAULT_FUEL):
        self.signature = signature
        self.fuel = fuel
        self.rules = []
        for r in rules:
            lhs, rhs = (r.lhs, r.rhs) if isinstance(r, Rule) else r
            if isinstance(lhs, str):
                lhs = parse(lhs, signature)
            if isinstance(rhs, str):
                rhs = parse(rhs, signature)
            if isinstance(lhs, Var):
                raise ContractError(f"rule left side {lhs} is a bare variable")
            signature.check(lhs)
            signature.check(rhs)
            extra = variables(rhs) - variables(lhs)
            if extra:
                names = ", ".join(f"x{i}" for i in sorted(extra))
                raise ContractError(f"rule {lhs} -> {rhs}: right side variable(s) {names} unbound")
            self.rules.append(Rule(lhs, rhs))
        self._cache = {}

    def __repr__(self):
        return f"RewriteSystem({self.signature!r}, {len(self.rules)} rule(s))"

    def _step_root(self, t):
        for r in self.rules:
            b = match(r.lhs, t)
            if b is not None:
                return subst(r.rhs, _binding_table(b, r.rhs))
        return None

    def step(self, t: Term) -> Term | None:
        """One leftmost-outermost rewrite step, or None at a normal form."""
        if isinstance(t, Var):
            return None
        out = self._step_root(t)
        if out is not None:
            return out
        for i, a in enumerate(t.args):
            s = self.step(a)
            if s is not None:
                return App(t.op, t.args[:i] + (s,) + t.args[i + 1:])
        return None

    def normalize(self, t: Term) -> Term:
        if not self.rules:
            return t
        hit = self._cache.get(t)
        if hit is not None:
            return hit
        cur = t
        for _ in range(self.fuel):
            nxt = self.step(cur)
            if nxt is None:
                if len(self._cache) < 200_000:
                    self._cache[t] = cur
                return cur
            cur = nxt
        raise NormalizationError(f"no normal form for {t} within {self.fuel} steps")

    def is_normal(self, t: Term) -> bool:
        return not self.rules or self.step(t) is None


def _binding_table(binding, rhs):
    top = max(variables(rhs), default=-1)
    return [binding.get(i, Var(i)) for i in range(top + 1)]


MONOID_RULES = (
    ("(mul e x0)", "x0"),
    ("(mul x0 e)", "x0"),
    ("(mul (mul x0 x1) x2)", "(mul x0 (mul x1 x2))"),
)


def monoid_rewriting(fuel=DEFAULT_FUEL) -> RewriteSystem:
    return RewriteSystem(MONOID_SIGNATURE, MONOID_RULES, fuel)


# ---------------------------------------------------------------------------
# enumeration


def _compositions(total, parts):
    """Ordered ways to write ``total`` as ``parts`` positive summands."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def terms_of_size(signature: Signature, n: int, s: int, _memo=None) -> list[Term]:
    memo = {} if _memo is None else _memo
    key = (n, s)
    if key in memo:
        return memo[key]
    out = []
    if s == 1:
        out.extend(Var(i) for i in range(n))
        out.extend(App(op, ()) for op, k in signature if k == 0)
    elif s > 1:
        for op, k in signature:
            if k == 0:
                continue
            for split in _compositions(s - 1, k):
                pools = [terms_of_size(signature, n, p, memo) for p in split]
                out.extend(App(op, args) for args in itertools.product(*pools))
    memo[key] = out
    return out


def enumerate_terms(signature: Signature, n: int, max_size: int) -> list[Term]:
    """All terms over ``x0..x(n-1)`` with at most ``max_size`` nodes.

    Order: by size, then variables before operations (declaration order),
    arguments distributed left-heavy last.  Enumerations at growing bounds
    extend one another.
    """
    memo = {}
    out = []
    for s in range(1, max_size + 1):
        out.extend(terms_of_size(signature, n, s, memo))
    return out
