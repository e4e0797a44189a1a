"""Substitution grammars and the formal derivative they induce.

A grammar assigns each variable a Laurent-polynomial replacement.  The
derivative D extends the rules linearly and by the product rule; on a
monomial it acts factor by factor, treating the exponent as a scalar:
D(v^e) = e v^{e-1} rule(v).  Constants derive to zero.

The built-in grammars are shipped as data files and parsed on first use,
so the file parser is exercised on every run:

* ``G``  -- six-variable grammar tracking exterior peaks by pattern,
  proper double descents, and the peak/valley refinements.
* ``g1`` -- two-variable grammar generating Eulerian polynomials.
* ``g2`` -- two-variable grammar counting exterior peaks.
* ``g3`` -- four-variable grammar for exterior peaks and proper double
  descents without the pattern split.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .algebra import AlgebraError, LaurentPoly, parse_poly


class GrammarError(ValueError):
    """Malformed grammar text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class Grammar:
    """Immutable rule set: one Laurent-polynomial image per variable."""

    vars: tuple[str, ...]
    rules: tuple[LaurentPoly, ...]
    name: str | None = None

    def rule(self, name: str) -> LaurentPoly:
        if name not in self.vars:
            raise AlgebraError(f"undeclared variable {name!r}")
        return self.rules[self.vars.index(name)]

    def poly(self, text: str) -> LaurentPoly:
        """Parse an expression over this grammar's variables."""
        return parse_poly(text, self.vars)

    def derive(self, p: LaurentPoly) -> LaurentPoly:
        """One application of the formal derivative."""
        if p.vars != self.vars:
            raise AlgebraError(
                f"polynomial over {p.vars} fed to grammar over {self.vars}")
        out: dict[tuple[int, ...], Fraction] = {}
        for key, coeff in p.terms.items():
            for i, t in enumerate(key):
                if t == 0:
                    continue
                factor = coeff * Fraction(t, 2)
                base = list(key)
                base[i] = t - 2
                for rkey, rcoeff in self.rules[i].terms.items():
                    nkey = tuple(b + r for b, r in zip(base, rkey))
                    out[nkey] = out.get(nkey, Fraction(0)) + factor * rcoeff
        return LaurentPoly(self.vars, out)

    def derive_n(self, seed: LaurentPoly, n: int) -> LaurentPoly:
        """n-fold derivative; D^0 is the seed itself."""
        return DerivationCache(self, seed).upto(n)[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grammar):
            return NotImplemented
        return self.vars == other.vars and self.rules == other.rules

    __hash__ = None


class DerivationCache:
    """Memoized stream of D^n(seed); extend-only, confined to one owner."""

    def __init__(self, grammar: Grammar, seed: LaurentPoly):
        if seed.vars != grammar.vars:
            seed = seed.with_vars(grammar.vars)
        self.grammar = grammar
        self.seed = seed
        self._entries: list[LaurentPoly] = [seed]

    def upto(self, n: int) -> list[LaurentPoly]:
        """Entries D^0(seed) .. D^n(seed)."""
        if n < 0:
            raise ValueError("derivative order must be nonnegative")
        while len(self._entries) <= n:
            self._entries.append(self.grammar.derive(self._entries[-1]))
        return self._entries[: n + 1]


def gen_coeffs(grammar: Grammar, seed: LaurentPoly, order: int) -> list[LaurentPoly]:
    """Coefficients of the exponential generating function of the seed:
    entry n is D^n(seed), the coefficient of t^n/n!."""
    return DerivationCache(grammar, seed).upto(order)


def gen_product(a: list[LaurentPoly], b: list[LaurentPoly]) -> list[LaurentPoly]:
    """Coefficient stream of a product of two exponential generating
    functions: c_n = sum_k C(n,k) a_k b_{n-k}, truncated to the shorter input."""
    order = min(len(a), len(b)) - 1
    out = []
    for n in range(order + 1):
        acc = LaurentPoly.zero(a[0].vars)
        for k in range(n + 1):
            acc = acc + math.comb(n, k) * (a[k] * b[n - k])
        out.append(acc)
    return out


# -- grammar file format -----------------------------------------------------
#
#   # comment
#   vars: x y z w u v
#   rule x -> x*y
#   rule u -> x*y*z^-1*v


def parse_grammar(text: str, name: str | None = None) -> Grammar:
    """Parse the line-oriented grammar format; '#' starts a comment."""
    vars: tuple[str, ...] | None = None
    rules: dict[str, LaurentPoly] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            if vars is not None:
                raise GrammarError("duplicate vars declaration", lineno)
            names = line[len("vars:"):].split()
            if not names:
                raise GrammarError("empty variable list", lineno)
            if len(set(names)) != len(names):
                raise GrammarError("repeated variable name", lineno)
            vars = tuple(names)
        elif line.startswith("rule"):
            if vars is None:
                raise GrammarError("rule before vars declaration", lineno)
            body = line[len("rule"):].strip()
            lhs, sep, rhs = body.partition("->")
            if not sep:
                raise GrammarError("expected 'rule <var> -> <polynomial>'", lineno)
            var = lhs.strip()
            if var not in vars:
                raise GrammarError(f"rule for undeclared variable {var!r}", lineno)
            if var in rules:
                raise GrammarError(f"duplicate rule for {var!r}", lineno)
            try:
                rules[var] = parse_poly(rhs.strip(), vars)
            except AlgebraError as exc:
                raise GrammarError(str(exc), lineno) from exc
        else:
            raise GrammarError(f"unrecognized line {line!r}", lineno)
    if vars is None:
        raise GrammarError("missing vars declaration")
    if not rules:
        raise GrammarError("every variable needs a rule")
    missing = [v for v in vars if v not in rules]
    if missing:
        raise GrammarError(f"missing rule for variable {missing[0]!r}")
    return Grammar(vars=vars, rules=tuple(rules[v] for v in vars), name=name)


_BUILTIN_FILES = {
    "G": "G.grammar",
    "g1": "g1.grammar",
    "g2": "g2.grammar",
    "g3": "g3.grammar",
}


def builtin_names() -> tuple[str, ...]:
    return tuple(_BUILTIN_FILES)


def builtin_source(name: str) -> str:
    """Raw text of a built-in grammar file."""
    try:
        fname = _BUILTIN_FILES[name]
    except KeyError:
        raise GrammarError(f"no built-in grammar named {name!r}") from None
    return resources.files("permgram").joinpath("grammars").joinpath(fname).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def builtin(name: str) -> Grammar:
    return parse_grammar(builtin_source(name), name=name)


def builtin_hash(name: str = "G") -> str:
    """SHA-256 of the grammar file backing a built-in (report provenance)."""
    return hashlib.sha256(builtin_source(name).encode("utf-8")).hexdigest()


def load_grammar(path: str | Path) -> Grammar:
    path = Path(path)
    return parse_grammar(path.read_text(encoding="utf-8"), name=path.stem)


def resolve_grammar(spec: str) -> Grammar:
    """A built-in name, else a path to a grammar file."""
    if spec in _BUILTIN_FILES:
        return builtin(spec)
    if Path(spec).exists():
        return load_grammar(spec)
    raise GrammarError(f"{spec!r} is neither a built-in grammar nor a readable file")
