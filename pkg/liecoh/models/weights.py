import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple

_TERM = re.compile(r"^\s*(\d*)\s*V_\{?(\d+)\}?\s*$")


def _clean(mults: Mapping[int, int]) -> Mapping[int, int]:
    return MappingProxyType({k: int(v) for k, v in sorted(mults.items()) if v})


@dataclass(frozen=True)
class WeightMultiset:
    """Multiplicities of the e_3-eigenvalues of an sl2-module."""

    multiplicities: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if any(v < 0 for v in self.multiplicities.values()):
            raise ValueError("weight multiplicities must be nonnegative")
        object.__setattr__(self, "multiplicities", _clean(self.multiplicities))

    def __getitem__(self, weight: int) -> int:
        return self.multiplicities.get(weight, 0)

    @property
    def total(self) -> int:
        return sum(self.multiplicities.values())

    @property
    def is_symmetric(self) -> bool:
        return all(self[-w] == m for w, m in self.multiplicities.items())

    @classmethod
    def from_weights(cls, weights: Iterable[int]) -> "WeightMultiset":
        counts: Dict[int, int] = {}
        for w in weights:
            counts[w] = counts.get(w, 0) + 1
        return cls(counts)


@dataclass(frozen=True)
class Sl2Decomposition:
    """Direct sum of irreducibles: highest weight m -> multiplicity of V_m."""

    multiplicities: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if any(k < 0 for k in self.multiplicities) or any(v < 0 for v in self.multiplicities.values()):
            raise ValueError("highest weights and multiplicities must be nonnegative")
        object.__setattr__(self, "multiplicities", _clean(self.multiplicities))

    @classmethod
    def of(cls, *highest_weights: int) -> "Sl2Decomposition":
        """``of(0, 4, 4)`` is V_0 ⊕ 2V_4."""
        counts: Dict[int, int] = {}
        for m in highest_weights:
            counts[m] = counts.get(m, 0) + 1
        return cls(counts)

    @classmethod
    def parse(cls, text: str) -> "Sl2Decomposition":
        """Parse "V_0+2V_4+V_8" (also "0" for the zero module)."""
        text = text.strip().replace("⊕", "+")
        if text in ("", "0"):
            return cls()
        counts: Dict[int, int] = {}
        for term in text.split("+"):
            match = _TERM.match(term)
            if not match:
                raise ValueError(f"cannot parse summand {term!r}")
            mult = int(match.group(1) or 1)
            weight = int(match.group(2))
            counts[weight] = counts.get(weight, 0) + mult
        return cls(counts)

    def __getitem__(self, highest_weight: int) -> int:
        return self.multiplicities.get(highest_weight, 0)

    @property
    def dim(self) -> int:
        return sum(mult * (m + 1) for m, mult in self.multiplicities.items())

    def items(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(self.multiplicities.items())

    def weights(self) -> WeightMultiset:
        counts: Dict[int, int] = {}
        for m, mult in self.multiplicities.items():
            for w in range(-m, m + 1, 2):
                counts[w] = counts.get(w, 0) + mult
        return WeightMultiset(counts)

    def __add__(self, other: "Sl2Decomposition") -> "Sl2Decomposition":
        counts = dict(self.multiplicities)
        for m, mult in other.multiplicities.items():
            counts[m] = counts.get(m, 0) + mult
        return Sl2Decomposition(counts)

    def __str__(self) -> str:
        if not self.multiplicities:
            return "0"
        return "+".join(f"{'' if n == 1 else n}V_{m}" for m, n in self.multiplicities.items())


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in q; ``coefficients[n]`` is the coefficient of q^n."""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> int:
        return self.coefficients[n] if 0 <= n < len(self.coefficients) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(i) - other.coefficient(i) for i in range(size)))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __call__(self, q: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * q + c
        return value

    def shift(self, degree: int) -> "IntPolynomial":
        return IntPolynomial((0,) * degree + self.coefficients) if self.coefficients else self

    @property
    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    @property
    def is_unimodal(self) -> bool:
        c = self.coefficients
        peak = 0
        while peak + 1 < len(c) and c[peak + 1] >= c[peak]:
            peak += 1
        return all(c[i] >= c[i + 1] for i in range(peak, len(c) - 1))
