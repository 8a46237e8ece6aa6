"""Truncated formal power series over exact rationals, and the
generating-function builders for the avoidance counts.

USeries is univariate (coefficients c_0..c_N), BSeries bivariate on a
(K, N) rectangle.  Arithmetic is exact through the truncation; mixed
orders auto-truncate to the smaller.  The egf_* builders assemble each
closed-form generating function from exp/div/mul/polynomial parts, so
that k!n! * c_{k,n} (or n! * c_n on the diagonal) recovers the counts.
"""
from __future__ import annotations

from fractions import Fraction

from .exactnum import factorial
from .patterns import AvoidanceSpec

__all__ = [
    "NonzeroConstantTerm",
    "ZeroConstantDivisor",
    "NonIntegerCoefficient",
    "USeries",
    "BSeries",
    "exp_series",
    "div_series",
    "compose",
    "lambert_w",
    "egf_bivar",
    "egf_bivar_eq2",
    "egf_diag",
    "egf_to_count",
    "eq2_compare",
    "BIVAR_ALPHAS",
    "EQ2_ALPHAS",
    "DIAG_ALPHAS",
]


class NonzeroConstantTerm(ValueError):
    """exp or composition was fed a series with a nonzero constant term."""


class ZeroConstantDivisor(ZeroDivisionError):
    """Series division by a divisor whose constant term is zero."""


class NonIntegerCoefficient(ArithmeticError):
    """A factorial-scaled coefficient came out non-integral."""


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction))


class USeries:
    """A univariate power series truncated at a fixed order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")

    @classmethod
    def constant(cls, value, order: int) -> "USeries":
        return cls([value] + [0] * order)

    @classmethod
    def var(cls, order: int) -> "USeries":
        """The series z (truncated away entirely when order is 0)."""
        c = [0] * (order + 1)
        if order >= 1:
            c[1] = 1
        return cls(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j]

    def truncate(self, order: int) -> "USeries":
        if order > self.order:
            raise ValueError("cannot truncate upward")
        return USeries(self.coeffs[: order + 1])

    def shift_down(self, m: int = 1) -> "USeries":
        """Divide by z^m; the dropped coefficients must be zero."""
        if m > self.order or any(self.coeffs[:m]):
            raise ValueError(f"series is not divisible by z^{m}")
        return USeries(self.coeffs[m:])

    def __eq__(self, other) -> bool:
        return isinstance(other, USeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"USeries({list(self.coeffs)!r})"

    def __add__(self, other):
        if _is_scalar(other):
            c = list(self.coeffs)
            c[0] += other
            return USeries(c)
        if not isinstance(other, USeries):
            return NotImplemented
        m = min(len(self.coeffs), len(other.coeffs))
        return USeries(a + b for a, b in zip(self.coeffs[:m], other.coeffs[:m]))

    __radd__ = __add__

    def __neg__(self):
        return USeries(-c for c in self.coeffs)

    def __sub__(self, other):
        if _is_scalar(other):
            return self + (-other)
        if not isinstance(other, USeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            f = Fraction(other)
            return USeries(c * f for c in self.coeffs)
        if not isinstance(other, USeries):
            return NotImplemented
        m = min(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * m
        for i, ai in enumerate(self.coeffs[:m]):
            if ai:
                for j, bj in enumerate(other.coeffs[: m - i]):
                    if bj:
                        out[i + j] += ai * bj
        return USeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined here")
        out = USeries.constant(1, self.order)
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, USeries):
            return NotImplemented
        m = min(len(self.coeffs), len(other.coeffs))
        den = other.coeffs
        if den[0] == 0:
            raise ZeroConstantDivisor("divisor has a zero constant term")
        out = [Fraction(0)] * m
        for j in range(m):
            acc = self.coeffs[j]
            for i in range(j):
                if out[i]:
                    acc -= out[i] * den[j - i]
            out[j] = acc / den[0]
        return USeries(out)

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return USeries.constant(other, self.order) / self
        return NotImplemented

    def exp(self) -> "USeries":
        """Termwise sum of self^m / m!; needs a zero constant term."""
        if self.coeffs[0] != 0:
            raise NonzeroConstantTerm("exp needs a zero constant term")
        out = USeries.constant(1, self.order)
        term = USeries.constant(1, self.order)
        for m in range(1, self.order + 1):
            term = term * self * Fraction(1, m)
            out = out + term
        return out


class BSeries:
    """A bivariate power series truncated on a (korder, norder) rectangle."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        rows = tuple(tuple(Fraction(c) for c in row) for row in coeffs)
        if not rows or not rows[0]:
            raise ValueError("a series needs at least its constant term")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged coefficient grid")
        self.coeffs = rows

    @classmethod
    def constant(cls, value, korder: int, norder: int) -> "BSeries":
        grid = [[0] * (norder + 1) for _ in range(korder + 1)]
        grid[0][0] = value
        return cls(grid)

    @classmethod
    def var_x(cls, korder: int, norder: int) -> "BSeries":
        grid = [[0] * (norder + 1) for _ in range(korder + 1)]
        if korder >= 1:
            grid[1][0] = 1
        return cls(grid)

    @classmethod
    def var_y(cls, korder: int, norder: int) -> "BSeries":
        grid = [[0] * (norder + 1) for _ in range(korder + 1)]
        if norder >= 1:
            grid[0][1] = 1
        return cls(grid)

    @property
    def korder(self) -> int:
        return len(self.coeffs) - 1

    @property
    def norder(self) -> int:
        return len(self.coeffs[0]) - 1

    def coeff(self, i: int, j: int) -> Fraction:
        return self.coeffs[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, BSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"BSeries(korder={self.korder}, norder={self.norder})"

    def _clipped(self, other):
        K = min(self.korder, other.korder)
        N = min(self.norder, other.norder)
        a = [row[: N + 1] for row in self.coeffs[: K + 1]]
        b = [row[: N + 1] for row in other.coeffs[: K + 1]]
        return K, N, a, b

    def __add__(self, other):
        if _is_scalar(other):
            grid = [list(row) for row in self.coeffs]
            grid[0][0] += other
            return BSeries(grid)
        if not isinstance(other, BSeries):
            return NotImplemented
        K, N, a, b = self._clipped(other)
        return BSeries(
            [a[i][j] + b[i][j] for j in range(N + 1)] for i in range(K + 1)
        )

    __radd__ = __add__

    def __neg__(self):
        return BSeries((-c for c in row) for row in self.coeffs)

    def __sub__(self, other):
        if _is_scalar(other):
            return self + (-other)
        if not isinstance(other, BSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            f = Fraction(other)
            return BSeries((c * f for c in row) for row in self.coeffs)
        if not isinstance(other, BSeries):
            return NotImplemented
        K, N, a, b = self._clipped(other)
        out = [[Fraction(0)] * (N + 1) for _ in range(K + 1)]
        for i in range(K + 1):
            for j in range(N + 1):
                f = a[i][j]
                if f:
                    for p in range(K + 1 - i):
                        brow = b[p]
                        orow = out[i + p]
                        for q in range(N + 1 - j):
                            if brow[q]:
                                orow[j + q] += f * brow[q]
        return BSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined here")
        out = BSeries.constant(1, self.korder, self.norder)
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, BSeries):
            return NotImplemented
        K, N, num, den = self._clipped(other)
        if den[0][0] == 0:
            raise ZeroConstantDivisor("divisor has a zero constant term")
        out = [[Fraction(0)] * (N + 1) for _ in range(K + 1)]
        for i in range(K + 1):
            for j in range(N + 1):
                acc = num[i][j]
                for a in range(i + 1):
                    orow = out[a]
                    drow_base = i - a
                    for b in range(j + 1):
                        if (a, b) != (i, j) and orow[b]:
                            acc -= orow[b] * den[drow_base][j - b]
                out[i][j] = acc / den[0][0]
        return BSeries(out)

    def exp(self) -> "BSeries":
        """Termwise sum of self^m / m!; needs a zero constant term.

        A zero constant term means total degree >= 1, so powers beyond
        korder + norder cannot reach the rectangle.
        """
        if self.coeffs[0][0] != 0:
            raise NonzeroConstantTerm("exp needs a zero constant term")
        out = BSeries.constant(1, self.korder, self.norder)
        term = BSeries.constant(1, self.korder, self.norder)
        for m in range(1, self.korder + self.norder + 1):
            term = term * self * Fraction(1, m)
            out = out + term
        return out


def exp_series(s):
    """exp of a univariate or bivariate series with zero constant term."""
    return s.exp()


def div_series(num, den):
    """Exact series quotient; the divisor's constant term must be nonzero."""
    return num / den


def _const_term(s) -> Fraction:
    return s.coeffs[0][0] if isinstance(s, BSeries) else s.coeffs[0]


def compose(outer: USeries, inner):
    """Horner evaluation of outer at inner (univariate or bivariate).

    inner must have a zero constant term; outer must carry at least as
    many coefficients as the target truncation needs, since a missing
    outer coefficient would feed the result from its order onward.
    """
    if _const_term(inner) != 0:
        raise NonzeroConstantTerm("composition needs a zero inner constant term")
    needed = (
        inner.korder + inner.norder if isinstance(inner, BSeries) else inner.order
    )
    if outer.order < needed:
        raise ValueError(f"outer series order {outer.order} < required {needed}")
    acc = inner * 0
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc


def lambert_w(order: int) -> USeries:
    """The tree-function series W(x) = sum_{n>=1} (-n)^(n-1) x^n/n!,
    the formal inverse of W e^W."""
    if order < 1:
        raise ValueError("lambert_w needs order >= 1")
    return USeries(
        [0] + [Fraction((-n) ** (n - 1), factorial(n)) for n in range(1, order + 1)]
    )


# --- generating-function builders ------------------------------------------


def _bivar_i(K: int, N: int) -> BSeries:
    x = BSeries.var_x(K, N)
    y = BSeries.var_y(K, N)
    ex = x.exp()
    ey = y.exp()
    exy = (x + y).exp()
    full = exy / (ex + ey - exy)
    # the closed form counts 1 at every (k,0)/(0,n) cell; the matrix
    # conventions want 0 there, and the fix only touches those edges
    return full - (ex - 1) - (ey - 1)


def _bivar_gamma(K: int, N: int) -> BSeries:
    x = BSeries.var_x(K, N)
    y = BSeries.var_y(K, N)
    ex = x.exp()
    ey = y.exp()
    full = ((ex - 1) * (ey - 1) + x + y).exp()
    # same edge fix as the I builder
    return full - (ex - 1) - (ey - 1)


def _bivar_gamma_c(K: int, N: int) -> BSeries:
    x = BSeries.var_x(K, N)
    y = BSeries.var_y(K, N)
    return ((2 * x).exp() - 1) * ((2 * y).exp() - 1) * Fraction(1, 2) + 1


def _bivar_t(K: int, N: int) -> BSeries:
    x = BSeries.var_x(K, N)
    y = BSeries.var_y(K, N)
    ex = x.exp()
    half = Fraction(1, 2)
    return (
        2 * (y * (ex + 1) + x).exp()
        - (y**2 + 2 * y) * half * (2 * x + 2 * y).exp()
        + (y**2 - 1) * (x + 2 * y).exp()
        - ex
        - (y**2 - 2 * y + 2) * half * (2 * y).exp()
        + 2
    )


def _bivar_t_eq2(K: int, N: int) -> BSeries:
    x = BSeries.var_x(K, N)
    y = BSeries.var_y(K, N)
    ex = x.exp()
    return (
        2 * (y * (ex + 1) + x).exp()
        - (y**2 + 2 * y) * Fraction(1, 2) * (2 * x + 2 * y).exp()
        + (y**2 - 1) * (x + 2 * y).exp()
    )


def _bivar_tl(K: int, N: int) -> BSeries:
    x = BSeries.var_x(K, N)
    y = BSeries.var_y(K, N)
    ex = x.exp()
    ey = y.exp()
    return (
        2 * (x * y + x + y).exp()
        - (x * y) ** 2 * Fraction(1, 2)
        - 2 * x * y
        + 3
        - 2 * ex
        - 2 * ey
        + x * (ey - 2 * y - 1) * (ey - 1)
        + y * (ex - 2 * x - 1) * (ex - 1)
    )


def _bivar_tl_eq2(K: int, N: int) -> BSeries:
    x = BSeries.var_x(K, N)
    y = BSeries.var_y(K, N)
    return 2 * (x * y + x + y).exp() - (x * y) ** 2 * Fraction(1, 2)


def _bivar_jo(K: int, N: int) -> BSeries:
    x = BSeries.var_x(K, N)
    y = BSeries.var_y(K, N)
    e2x = (2 * x).exp()
    e2y = (2 * y).exp()
    half = Fraction(1, 2)
    out = (
        1
        + x * e2y
        + y * e2x
        # one-row and one-column envelopes above; two-row/two-column
        # envelopes below carry the 1/2! of their x^2/y^2 numerators
        + x**2 * (1 + y) ** 2 * e2y * half
        + y**2 * (1 + x) ** 2 * e2x * half
        - (
            x
            + y
            + x**2 * half
            + y**2 * half
            + 2 * x * y
            + 2 * x**2 * y
            + 2 * x * y**2
            + x**2 * y**2 * Fraction(14, 4)
        )
    )
    # the finitely many nonzero cells with both sides >= 3
    for (a, b), cnt in (
        ((3, 3), 156),
        ((3, 4), 408),
        ((4, 3), 408),
        ((4, 4), 840),
        ((3, 5), 720),
        ((5, 3), 720),
        ((3, 6), 720),
        ((6, 3), 720),
        ((4, 5), 720),
        ((5, 4), 720),
        ((4, 6), 720),
        ((6, 4), 720),
    ):
        out = out + x**a * y**b * Fraction(cnt, factorial(a) * factorial(b))
    return out


def _diag_i(N: int) -> USeries:
    z = USeries.var(N)
    total = USeries.constant(0, N)
    # term m is (1 - e^{-(m+1)z})^m; the difference starts at z, so the
    # m-th power starts at z^m and the outer sum may stop at m = N
    for m in range(N + 1):
        total = total + (1 - (-(m + 1) * z).exp()) ** m
    return total


def _diag_gamma_c(N: int) -> USeries:
    z = USeries.var(N)
    return ((4 * z).exp() + 1) * Fraction(1, 2)


def _diag_t(N: int) -> USeries:
    # built one order deep(er): the leading ratio sheds a factor of z
    deep = N + 1
    z = USeries.var(deep)
    u = compose(lambert_w(deep), -(z * z.exp()))
    lead = (-2 * u).shift_down(1) / (1 + u)
    tail = (z**2 - 1) * (2 * z).exp() - 2 * z * (z + 1) * (4 * z).exp()
    return (lead + tail).truncate(N)


def _diag_tl(N: int) -> USeries:
    z = USeries.var(N)
    geom = 1 / (1 - z)
    return 2 * (z * geom).exp() * geom - 1 - 2 * z - z**2


def _diag_jo(N: int) -> USeries:
    poly = (1, 2, 7, 26, 35)
    return USeries([poly[j] if j < len(poly) else 0 for j in range(N + 1)])


_BIVAR = {
    "I": _bivar_i,
    "GAMMA": _bivar_gamma,
    "GAMMA,C": _bivar_gamma_c,
    "T": _bivar_t,
    "T,L": _bivar_tl,
    "J,O": _bivar_jo,
}

_BIVAR_EQ2 = {
    "T": _bivar_t_eq2,
    "T,L": _bivar_tl_eq2,
}

_DIAG = {
    "I": _diag_i,
    "GAMMA,C": _diag_gamma_c,
    "T": _diag_t,
    "T,L": _diag_tl,
    "J,O": _diag_jo,
}

BIVAR_ALPHAS = tuple(_BIVAR)
EQ2_ALPHAS = tuple(_BIVAR_EQ2)
DIAG_ALPHAS = tuple(_DIAG)


def _canonical(alpha) -> str:
    spec = AvoidanceSpec.parse(alpha) if isinstance(alpha, str) else alpha
    return spec.canonical()


def egf_bivar(alpha, korder: int = 8, norder: int = 8) -> BSeries:
    """Bivariate generating function for the given class set.

    Built for I, GAMMA, {GAMMA,C}, T, {T,L} and {J,O}; anything else
    raises ValueError.  k!n! times the (k,n) coefficient is the count.
    """
    key = _canonical(alpha)
    try:
        builder = _BIVAR[key]
    except KeyError:
        raise ValueError(f"no bivariate generating function is built for {key}") from None
    return builder(korder, norder)


def egf_bivar_eq2(alpha, korder: int = 8, norder: int = 8) -> BSeries:
    """The short companion forms (T and {T,L}) that agree with the full
    builders on every coefficient with k, n >= 2."""
    key = _canonical(alpha)
    try:
        builder = _BIVAR_EQ2[key]
    except KeyError:
        raise ValueError(f"no reduced form is built for {key}") from None
    return builder(korder, norder)


def egf_diag(alpha, order: int = 12) -> USeries:
    """Diagonal generating function, n! c_n = count at (n, n).

    Built for I, {GAMMA,C}, T, {T,L} and {J,O}; the GAMMA diagonal has no
    known closed form and raises ValueError.
    """
    key = _canonical(alpha)
    try:
        builder = _DIAG[key]
    except KeyError:
        raise ValueError(f"no diagonal generating function is built for {key}") from None
    return builder(order)


def egf_to_count(series, k: int, n: int | None = None) -> int:
    """Scale a coefficient back to a count: k!n!*c_{k,n} or k!*c_k."""
    if isinstance(series, BSeries):
        if n is None:
            raise TypeError("bivariate extraction needs both indices")
        value = series.coeff(k, n) * factorial(k) * factorial(n)
    else:
        if n is not None:
            raise TypeError("univariate extraction takes a single index")
        value = series.coeff(k) * factorial(k)
    if value.denominator != 1:
        raise NonIntegerCoefficient(f"coefficient scales to {value}, not an integer")
    return int(value)


def eq2_compare(f: BSeries, g: BSeries) -> bool:
    """Do f and g agree on every coefficient with both indices >= 2?"""
    K = min(f.korder, g.korder)
    N = min(f.norder, g.norder)
    return all(
        f.coeff(i, j) == g.coeff(i, j)
        for i in range(2, K + 1)
        for j in range(2, N + 1)
    )
