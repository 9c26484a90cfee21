from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from grassmannian_mirror.core.errors import RegistryMismatchError, UnmappedVariableError

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class VarRegistry:
    """Ordered, unique variable names; exponent vectors follow this order."""

    names: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"Variable names must be unique, duplicates: {dupes!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnmappedVariableError(f"Unknown variable {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index


@dataclass(frozen=True)
class LaurentPoly:
    """
    Sparse integer Laurent polynomial: exponent vector -> nonzero coefficient.

    >>> reg = VarRegistry(("x",))
    >>> x = LaurentPoly.variable(reg, "x")
    >>> ((x + x.inverse_monomial()) * x).to_text()
    'x^2 + 1'
    """

    registry: VarRegistry
    terms: Mapping[Exponents, int]

    def __post_init__(self) -> None:
        width = len(self.registry)
        clean: Dict[Exponents, int] = {}
        for exps, coeff in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != width:
                raise ValueError(
                    f"Exponent vector {exps!r} does not match {width} registry variables"
                )
            if coeff:
                clean[exps] = clean.get(exps, 0) + int(coeff)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    # ---- constructors ----
    @classmethod
    def zero(cls, registry: VarRegistry) -> "LaurentPoly":
        return cls(registry, {})

    @classmethod
    def constant(cls, registry: VarRegistry, value: int) -> "LaurentPoly":
        return cls(registry, {(0,) * len(registry): value})

    @classmethod
    def monomial(
        cls, registry: VarRegistry, powers: Mapping[str, int], coeff: int = 1
    ) -> "LaurentPoly":
        exps = [0] * len(registry)
        for name, p in powers.items():
            exps[registry.index(name)] += p
        return cls(registry, {tuple(exps): coeff})

    @classmethod
    def variable(cls, registry: VarRegistry, name: str) -> "LaurentPoly":
        return cls.monomial(registry, {name: 1})

    # ---- structure ----
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> Sequence[Tuple[Exponents, int]]:
        """Descending lexicographic order on exponent vectors."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def inverse_monomial(self) -> "LaurentPoly":
        """1/m for a monomial m with coefficient +-1."""
        if len(self.terms) != 1:
            raise ValueError("inverse_monomial needs a single-term polynomial")
        (exps, coeff), = self.terms.items()
        if coeff not in (1, -1):
            raise ValueError(f"Monomial coefficient {coeff} is not a unit")
        return LaurentPoly(self.registry, {tuple(-e for e in exps): coeff})

    # ---- arithmetic ----
    def _check(self, other: "LaurentPoly") -> None:
        if other.registry != self.registry:
            raise RegistryMismatchError(
                f"Registry mismatch: {self.registry.names!r} vs {other.registry.names!r}"
            )

    def __add__(self, other: object) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(self.registry, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return LaurentPoly(self.registry, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.registry, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(self.registry, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.registry, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out: Dict[Exponents, int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return LaurentPoly(self.registry, out)

    __rmul__ = __mul__

    def equals(self, other: "LaurentPoly") -> bool:
        self._check(other)
        return dict(self.terms) == dict(other.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.registry == other.registry and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.registry.names, frozenset(self.terms.items())))

    # ---- calculus / evaluation ----
    def log_derivative(self, name: str) -> "LaurentPoly":
        """x d/dx for the variable x = name."""
        idx = self.registry.index(name)
        return LaurentPoly(
            self.registry, {e: c * e[idx] for e, c in self.terms.items()}
        )

    def evaluate(self, values: Mapping[str, complex]) -> complex:
        missing = [n for n in self.registry.names if n not in values]
        if missing:
            raise UnmappedVariableError(f"No value for variables {missing!r}")
        point = [complex(values[n]) for n in self.registry.names]
        total = 0j
        for exps, c in self.sorted_terms():
            term = complex(c)
            for v, e in zip(point, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    # ---- text form ----
    def to_text(self) -> str:
        """
        Terms in descending lexicographic exponent order joined by ' + ';
        unit coefficients and unit exponents are omitted.
        """
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.registry.names, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(" * ".join(factors))
            elif coeff == -1:
                parts.append("-" + " * ".join(factors))
            else:
                parts.append(f"{coeff} * " + " * ".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class SignedMonomial:
    """+-1 times a monomial over a target registry."""

    sign: int
    exponents: Exponents

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"Monomial images must have coefficient +-1, got {self.sign!r}")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @classmethod
    def ratio(
        cls,
        registry: VarRegistry,
        numerator: Iterable[str],
        denominator: Iterable[str],
        sign: int = 1,
    ) -> "SignedMonomial":
        exps = [0] * len(registry)
        for name in numerator:
            exps[registry.index(name)] += 1
        for name in denominator:
            exps[registry.index(name)] -= 1
        return cls(sign, tuple(exps))


def substitute_monomials(
    a: LaurentPoly,
    mapping: Mapping[str, SignedMonomial],
    target: VarRegistry,
) -> LaurentPoly:
    """
    Replace every source variable by a signed monomial over `target`;
    exponent vectors transform linearly.
    """
    images = []
    for name in a.registry.names:
        if name not in mapping:
            raise UnmappedVariableError(f"Variable {name!r} has no image")
        img = mapping[name]
        if len(img.exponents) != len(target):
            raise RegistryMismatchError(
                f"Image of {name!r} has {len(img.exponents)} exponents, "
                f"target registry has {len(target)} variables"
            )
        images.append(img)

    out: Dict[Exponents, int] = {}
    width = len(target)
    for exps, coeff in a.terms.items():
        new = [0] * width
        sign = 1
        for img, e in zip(images, exps):
            if e:
                for t in range(width):
                    if img.exponents[t]:
                        new[t] += e * img.exponents[t]
                if img.sign == -1 and e % 2:
                    sign = -sign
        key = tuple(new)
        out[key] = out.get(key, 0) + sign * coeff
    return LaurentPoly(target, out)


def identity_substitution(registry: VarRegistry) -> Dict[str, SignedMonomial]:
    width = len(registry)
    return {
        name: SignedMonomial(1, tuple(1 if t == i else 0 for t in range(width)))
        for i, name in enumerate(registry.names)
    }
