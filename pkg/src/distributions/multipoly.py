import re
from typing import Iterable, Mapping

from sympy import Integer, Poly, Symbol, ZZ, symbols

from .PolyError import PolyError

CANONICAL_VARS = ("x", "y", "q", "p", "z")
_VAR_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")

Exponents = tuple[int, ...]


def var_order(names: Iterable[str]) -> tuple[str, ...]:
    """x, y, q, p, z first, every other name after them alphabetically."""
    def key(name: str) -> tuple[int, int | str]:
        if name in CANONICAL_VARS:
            return 0, CANONICAL_VARS.index(name)
        return 1, name
    return tuple(sorted(set(names), key=key))


class MultiPoly:
    """
    A polynomial with integer coefficients in named variables.

    terms maps exponent vectors (aligned with vars) to nonzero coefficients.
    Arithmetic goes through sympy's Poly over ZZ, so coefficients never
    overflow; the instance itself stays a plain sparse dictionary.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping[Exponents, int] | None = None) -> None:
        names = tuple(vars)
        for name in names:
            if not _VAR_NAME.fullmatch(name):
                raise PolyError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise PolyError(f"repeated variable in {names}")
        ordered = var_order(names)
        permutation = [names.index(name) for name in ordered]
        cleaned: dict[Exponents, int] = {}
        for exponents, coeff in (terms or {}).items():
            if len(exponents) != len(names):
                raise PolyError(f"exponent vector {exponents} does not match {names}")
            if isinstance(coeff, bool) or int(coeff) != coeff:
                raise PolyError(f"non-integer coefficient {coeff!r}")
            if coeff:
                key = tuple(int(exponents[i]) for i in permutation)
                cleaned[key] = cleaned.get(key, 0) + int(coeff)
        object.__setattr__(self, "vars", ordered)
        object.__setattr__(self, "terms", {e: c for e, c in cleaned.items() if c})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiPoly is immutable")

    def __reduce__(self):
        return (MultiPoly, (self.vars, self.terms))

    @classmethod
    def constant(cls, value: int, vars: Iterable[str] = ()) -> "MultiPoly":
        names = tuple(vars)
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): 1})

    # sympy bridge

    def as_poly(self, vars: Iterable[str] | None = None) -> Poly | None:
        """The sympy Poly over ZZ, or None when there are no variables."""
        names = self.vars if vars is None else tuple(vars)
        if not names:
            return None
        terms = self._aligned(names)
        return Poly.from_dict(terms or {(0,) * len(names): 0}, *symbols(names), domain=ZZ)

    def as_expr(self):
        poly = self.as_poly()
        if poly is None:
            return Integer(self.terms.get((), 0))
        return poly.as_expr()

    @classmethod
    def from_poly(cls, poly: Poly | None, vars: Iterable[str], constant: int = 0) -> "MultiPoly":
        names = tuple(vars)
        if poly is None:
            return cls.constant(constant)
        return cls(names, {tuple(e): int(c) for e, c in poly.as_dict().items()})

    @classmethod
    def from_expr(cls, expr, vars: Iterable[str]) -> "MultiPoly":
        names = var_order(vars)
        if not names:
            if not expr.is_Integer:
                raise PolyError(f"non-integer constant {expr}")
            return cls.constant(int(expr))
        poly = Poly(expr, *symbols(names), domain=ZZ)
        return cls.from_poly(poly, names)

    def _aligned(self, names: tuple[str, ...]) -> dict[Exponents, int]:
        missing = set(self.vars) - set(names)
        if missing:
            raise PolyError(f"cannot drop variables {sorted(missing)}")
        index = [self.vars.index(name) if name in self.vars else None for name in names]
        return {tuple(0 if i is None else e[i] for i in index): c for e, c in self.terms.items()}

    def _binary(self, other: "MultiPoly | int", operation: str) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        names = var_order(self.vars + other.vars)
        if not names:
            a, b = self.terms.get((), 0), other.terms.get((), 0)
            return MultiPoly.constant({"add": a + b, "sub": a - b, "mul": a * b}[operation])
        left, right = self.as_poly(names), other.as_poly(names)
        match operation:
            case "add":
                result = left + right
            case "sub":
                result = left - right
            case _:
                result = left * right
        return MultiPoly.from_poly(result, names)

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self._binary(other, "add")

    __radd__ = __add__

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self._binary(other, "sub")

    def __rsub__(self, other: int) -> "MultiPoly":
        return MultiPoly.constant(other)._binary(self, "sub")

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self._binary(other, "mul")

    __rmul__ = __mul__

    def __neg__(self) -> "MultiPoly":
        return self.scale(-1)

    def scale(self, factor: int) -> "MultiPoly":
        return MultiPoly(self.vars, {e: c * factor for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise PolyError(f"negative exponent {exponent}")
        result = MultiPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute(self, var: str, value: "int | str") -> "MultiPoly":
        """
        Replace var by an integer or by another variable.

        Raises:
            PolyError: If var does not occur in vars.
        """
        if var not in self.vars:
            raise PolyError(f"variable {var} is not present")
        replacement = Symbol(value) if isinstance(value, str) else Integer(value)
        remaining = [name for name in self.vars if name != var]
        if isinstance(value, str):
            remaining.append(value)
        return MultiPoly.from_expr(self.as_expr().subs(Symbol(var), replacement), remaining)

    def evaluate(self, values: Mapping[str, int]) -> int:
        """Evaluate with every variable given a number, e.g. C_n(1, 1)."""
        missing = [name for name in self.vars if name not in values]
        if missing:
            raise PolyError(f"no value for {', '.join(missing)}")
        expr = self.as_expr().subs({Symbol(name): values[name] for name in self.vars})
        return int(expr)

    def coefficient_of(self, exponents: Mapping[str, int]) -> int:
        """Coefficient of the monomial given as {var: exponent}; absent vars count as 0."""
        unknown = set(exponents) - set(self.vars)
        if any(exponents[name] for name in unknown):
            return 0
        key = tuple(exponents.get(name, 0) for name in self.vars)
        return self.terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Ascending total degree, ties by descending exponent vector."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))

    def trimmed(self) -> "MultiPoly":
        """Drop variables that no term uses."""
        used = [i for i in range(len(self.vars)) if any(e[i] for e in self.terms)]
        return MultiPoly([self.vars[i] for i in used],
                         {tuple(e[i] for i in used): c for e, c in self.terms.items()})

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exponents, coeff in self.sorted_terms():
            monomial = "".join(name + (str(e).translate(_SUPERSCRIPTS) if e > 1 else "")
                               for name, e in zip(self.vars, exponents) if e)
            magnitude = str(abs(coeff)) if abs(coeff) != 1 or not monomial else ""
            sign = "-" if coeff < 0 else ("+" if parts else "")
            parts.append(sign + magnitude + monomial)
        return "".join(parts)

    def to_json(self) -> dict:
        return {"vars": list(self.vars),
                "terms": [{"exp": list(e), "coeff": c} for e, c in self.sorted_terms()]}

    def csv_rows(self) -> list[list[str | int]]:
        """Header row, then one row per term."""
        rows: list[list[str | int]] = [[*self.vars, "coeff"]]
        rows.extend([*e, c] for e, c in self.sorted_terms())
        return rows

    def __eq__(self, value: object, /) -> bool:
        if isinstance(value, int) and not isinstance(value, bool):
            value = MultiPoly.constant(value)
        if not isinstance(value, MultiPoly):
            return NotImplemented
        a, b = self.trimmed(), value.trimmed()
        return a.vars == b.vars and a.terms == b.terms

    def __hash__(self) -> int:
        t = self.trimmed()
        return hash((t.vars, frozenset(t.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.pretty()!r}, vars={list(self.vars)})"

    def __str__(self) -> str:
        return self.pretty()
