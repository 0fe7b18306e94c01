"""Exact arithmetic in GF(q) and its extensions GF(q^m), q = p^r <= 256.

Elements are plain ints.  An element of GF(q) with q = p^r is the base-p
digit encoding of its coefficient vector over GF(p), low degree first; an
element of GF(q^m) is the base-q digit encoding of its coefficient vector
over GF(q) in the polynomial basis {1, x, ..., x^(m-1)} of the modulus.
These canonical labels never change.  A field value additionally carries a
working basis, which determines only the coordinate map (`coords_of` /
`from_coords`) and the trace Gram matrix; `with_basis` swaps the basis
without touching labels, so arrays and code files stay readable under any
basis policy.

Moduli are chosen deterministically: the monic irreducible polynomial of the
right degree whose coefficient vector (c_0, ..., c_{m-1}), read as a base-q
integer, is smallest.  For GF(4) over GF(2) that is x^2 + x + 1, so the
familiar labels 0, 1, alpha -> 2, alpha + 1 -> 3 come out of the encoding.

Everything is table-driven: a PrimePower carries dense q x q add/mul tables,
an ExtField of order <= 256 carries them too, and larger extensions fall back
to polynomial arithmetic per call.  All tables are read-only numpy arrays, so
field values are immutable and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    AlphabetError,
    CapExceededError,
    NotIrreducibleError,
    NotPrimeError,
    SearchCapExceededError,
    WrongLengthError,
)

MUL_TABLE_CAP = 256
COORD_TABLE_CAP = 1 << 16
TRACE_TABLE_CAP = 4096
SELF_DUAL_SEARCH_CAP = 4096


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over a table-driven coefficient field
#
# Polynomials are tuples of labels, low degree first, no trailing zeros
# (the zero polynomial is the empty tuple).  `F` is any object with q, add,
# mul, neg, inv attributes (PrimePower below, or the tiny mod-p tables used
# while bootstrapping one).


def _ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _padd(a, b, F):
    n = max(len(a), len(b))
    add = F.add
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = int(add[x, y])
    return _ptrim(out)


def _pmul(a, b, F):
    if not a or not b:
        return ()
    add, mul = F.add, F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = int(add[out[i + j], mul[x, y]])
    return _ptrim(out)


def _pmod(a, mod, F):
    # mod must be monic
    assert mod and mod[-1] == 1
    add, mul, neg = F.add, F.mul, F.neg
    out = list(a)
    dm = len(mod) - 1
    for d in range(len(out) - 1, dm - 1, -1):
        c = out[d]
        if c == 0:
            continue
        out[d] = 0
        nc = int(neg[c])
        for t in range(dm):
            out[d - dm + t] = int(add[out[d - dm + t], mul[nc, mod[t]]])
    return _ptrim(out[:dm])


def _pmonic(a, F):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    s = int(F.inv[lead])
    return _ptrim([int(F.mul[s, c]) for c in a])


def _pgcd(a, b, F):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        bm = _pmonic(b, F)
        a, b = b, _pmod(a, bm, F)
    return _pmonic(a, F)


def _ppowmod(a, e, mod, F):
    result = (1,)
    base = _pmod(a, mod, F)
    while e > 0:
        if e & 1:
            result = _pmod(_pmul(result, base, F), mod, F)
        base = _pmod(_pmul(base, base, F), mod, F)
        e >>= 1
    return result


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_is_irreducible(coeffs, F) -> bool:
    """Monic polynomial irreducibility over GF(q), q = F.q.

    Degree <= 3 reduces to a root scan; beyond that the standard test
    x^(q^m) = x mod f plus gcd(x^(q^(m/l)) - x, f) = 1 for prime l | m.
    """
    coeffs = _ptrim(coeffs)
    m = len(coeffs) - 1
    assert m >= 1 and coeffs[-1] == 1
    q = F.q
    if m == 1:
        return True
    if m <= 3:
        for x in range(q):
            acc = 0
            xp = 1
            for c in coeffs:
                acc = int(F.add[acc, F.mul[c, xp]])
                xp = int(F.mul[xp, x])
            if acc == 0:
                return False
        return True
    x = (0, 1)
    xqm = _ppowmod(x, q**m, coeffs, F)
    if _padd(xqm, _pmul((int(F.neg[1]),), x, F), F):
        return False
    for ell in _prime_factors(m):
        h = _ppowmod(x, q ** (m // ell), coeffs, F)
        h = _padd(h, _pmul((int(F.neg[1]),), x, F), F)
        if len(_pgcd(h, coeffs, F)) != 1:
            return False
    return True


def _first_irreducible(m: int, F):
    """Monic irreducible of degree m over GF(q) with the smallest coefficient
    vector (c_0, ..., c_{m-1}) read as a base-q integer."""
    q = F.q
    for code in range(q**m):
        coeffs = []
        c = code
        for _ in range(m):
            coeffs.append(c % q)
            c //= q
        coeffs.append(1)
        if _poly_is_irreducible(tuple(coeffs), F):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found; unreachable")


# ---------------------------------------------------------------------------
# base fields GF(p^r)


class _ModPTables:
    """Throwaway mod-p tables used only to bootstrap a PrimePower."""

    def __init__(self, p: int):
        self.q = p
        i = np.arange(p)
        self.add = (i[:, None] + i[None, :]) % p
        self.mul = (i[:, None] * i[None, :]) % p
        self.neg = (-i) % p
        self.inv = np.array([0] + [pow(int(a), p - 2, p) for a in range(1, p)])


class PrimePower:
    """The field GF(q), q = p^r, with dense arithmetic tables.

    Labels are base-p digit encodings of coefficient vectors over GF(p) (for
    r = 1 that is just 0..p-1).  Tables are uint8 numpy arrays indexed by
    label, safe to fancy-index with whole matrices.
    """

    __slots__ = ("p", "r", "q", "modulus", "add", "sub", "neg", "mul", "inv")

    def __init__(self, p: int, r: int = 1):
        if not _is_prime(p):
            raise NotPrimeError(f"characteristic {p} is not prime")
        if r < 1:
            raise AlphabetError(f"extension degree r = {r} must be >= 1")
        q = p**r
        if q > MUL_TABLE_CAP:
            raise CapExceededError(
                f"base field GF({p}^{r}) has order {q} > {MUL_TABLE_CAP}; "
                "dense tables are capped there"
            )
        self.p, self.r, self.q = p, r, q
        if r == 1:
            t = _ModPTables(p)
            self.modulus = None
            self.add = t.add.astype(np.uint8)
            self.mul = t.mul.astype(np.uint8)
            self.neg = t.neg.astype(np.uint8)
            self.inv = t.inv.astype(np.uint8)
        else:
            Fp = _ModPTables(p)
            self.modulus = _first_irreducible(r, Fp)
            digs = _digits_matrix(np.arange(q), p, r)
            self.add = _recompose(Fp.add[digs[:, None, :], digs[None, :, :]], p)
            self.mul = _table_poly_mul(digs, self.modulus, Fp, p)
            self.neg = _recompose(Fp.neg[digs], p)
            inv = np.zeros(q, dtype=np.uint8)
            eye = np.nonzero(self.mul == 1)
            inv[eye[0]] = eye[1]
            self.inv = inv
        self.sub = self.add[:, self.neg]
        for t in (self.add, self.sub, self.neg, self.mul, self.inv):
            t.setflags(write=False)

    def __repr__(self):
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimePower) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self):
        return hash((PrimePower, self.p, self.r))


def _digits_matrix(labels: np.ndarray, base: int, width: int) -> np.ndarray:
    """Base-`base` digits of each label, low digit first; shape (..., width)."""
    digs = np.empty(labels.shape + (width,), dtype=np.uint8)
    rest = labels.astype(np.int64)
    for j in range(width):
        digs[..., j] = rest % base
        rest //= base
    return digs


def _recompose(digs: np.ndarray, base: int) -> np.ndarray:
    weights = base ** np.arange(digs.shape[-1], dtype=np.int64)
    out = (digs.astype(np.int64) * weights).sum(axis=-1)
    assert out.max(initial=0) <= 255
    return out.astype(np.uint8)


def _table_poly_mul(digs, modulus, F, base):
    """Dense multiplication table via digitwise convolution and modulus folds."""
    n, width = digs.shape
    conv = np.zeros((n, n, 2 * width - 1), dtype=np.uint8)
    for a in range(width):
        for b in range(width):
            term = F.mul[digs[:, None, a], digs[None, :, b]]
            conv[:, :, a + b] = F.add[conv[:, :, a + b], term]
    for d in range(2 * width - 2, width - 1, -1):
        c = conv[:, :, d].copy()
        conv[:, :, d] = 0
        for t in range(width):
            fold = F.mul[F.neg[c], modulus[t]]
            conv[:, :, d - width + t] = F.add[conv[:, :, d - width + t], fold]
    return _recompose(conv[:, :, :width], base)


_PRIME_POWER_CACHE: dict[tuple[int, int], PrimePower] = {}


def prime_power(q: int, r: int | None = None) -> PrimePower:
    """GF(q) by order, or GF(q^r) when r is given and q is prime."""
    if r is not None:
        key = (q, r)
    else:
        p, e = _factor_prime_power(q)
        key = (p, e)
    if key not in _PRIME_POWER_CACHE:
        _PRIME_POWER_CACHE[key] = PrimePower(*key)
    return _PRIME_POWER_CACHE[key]


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NotPrimeError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise NotPrimeError(f"{q} is not a prime power")
            return p, e
    raise NotPrimeError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# extensions GF(q^m)


@dataclass(frozen=True)
class Basis:
    """A working basis of GF(q^m) over GF(q): element labels, trace Gram
    matrix (entries are GF(q) labels), and whether the Gram is the identity."""

    elements: tuple[int, ...]
    gram: tuple[tuple[int, ...], ...]
    is_self_dual: bool


class ExtField:
    """GF(q^m) over a PrimePower base, with a working basis.

    Arithmetic (add, mul, trace) acts on canonical labels and is shared by
    every basis variant of the same field; `with_basis` returns a sibling
    whose coordinate map and Gram matrix follow the new basis.
    """

    __slots__ = (
        "base",
        "m",
        "modulus",
        "order",
        "basis",
        "gram",
        "_mul_table",
        "_inv_table",
        "_trace_table",
        "_tr_mono",
        "_basis_matrix",
        "_basis_inv",
        "_coords_table",
        "_label_table",
    )

    def __init__(self, base: PrimePower, m: int, modulus: tuple[int, ...],
                 basis: tuple[int, ...] | None = None, _trusted=None):
        if m < 1:
            raise AlphabetError(f"extension degree m = {m} must be >= 1")
        q = base.q
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1:
            raise WrongLengthError(
                f"modulus for degree {m} needs {m + 1} coefficients, got {len(modulus)}"
            )
        if modulus[-1] != 1:
            raise NotIrreducibleError("modulus must be monic")
        if any(not 0 <= c < q for c in modulus):
            raise AlphabetError(f"modulus coefficients must lie in [0, {q})")
        self.base = base
        self.m = m
        self.modulus = modulus
        self.order = q**m
        if _trusted is None:
            if not _poly_is_irreducible(modulus, base):
                raise NotIrreducibleError(
                    f"modulus {_poly_str(modulus)} is reducible over {base!r}"
                )
            self._mul_table = self._build_mul_table() if self.order <= MUL_TABLE_CAP else None
            self._inv_table = self._build_inv_table()
            self._tr_mono = self._build_monomial_traces()
            self._trace_table = (
                self._build_trace_table() if self.order <= TRACE_TABLE_CAP else None
            )
        else:
            # sibling sharing arithmetic with another basis
            (self._mul_table, self._inv_table, self._tr_mono,
             self._trace_table) = _trusted
        if basis is None:
            basis = tuple(q**j for j in range(m))
        self._install_basis(tuple(int(b) for b in basis))

    # -- construction helpers -------------------------------------------

    def _build_mul_table(self):
        digs = _digits_matrix(np.arange(self.order), self.base.q, self.m)
        t = _table_poly_mul(digs, self.modulus, self.base, self.base.q)
        t.setflags(write=False)
        return t

    def _build_inv_table(self):
        if self._mul_table is None:
            return None
        inv = np.zeros(self.order, dtype=np.uint8)
        eye = np.nonzero(self._mul_table == 1)
        inv[eye[0]] = eye[1]
        inv.setflags(write=False)
        return inv

    def _build_monomial_traces(self):
        # label of the monomial x^j is q^j for j < m
        return tuple(self._frobenius_trace(self.base.q**j) for j in range(self.m))

    def _frobenius_trace(self, a: int) -> int:
        acc = a
        y = a
        for _ in range(self.m - 1):
            y = self.pow(y, self.base.q)
            acc = self.add(acc, y)
        assert acc < self.base.q, "trace left the base subfield; arithmetic bug"
        return acc

    def _build_trace_table(self):
        digs = _digits_matrix(np.arange(self.order), self.base.q, self.m)
        acc = np.zeros(self.order, dtype=np.uint8)
        for j, t in enumerate(self._tr_mono):
            acc = self.base.add[acc, self.base.mul[t, digs[:, j]]]
        acc.setflags(write=False)
        return acc

    def _install_basis(self, basis: tuple[int, ...]):
        if len(basis) != self.m:
            raise WrongLengthError(
                f"basis needs {self.m} elements, got {len(basis)}"
            )
        if any(not 0 <= b < self.order for b in basis):
            raise AlphabetError("basis element out of range")
        from . import linalg

        B = _digits_matrix(np.array(basis, dtype=np.int64), self.base.q, self.m)
        Binv = linalg.inverse(self.base, B)
        if Binv is None:
            raise AlphabetError(f"basis {basis} is not linearly independent")
        self.basis = basis
        self._basis_matrix = B
        self._basis_inv = Binv
        if self.order <= COORD_TABLE_CAP:
            digs = _digits_matrix(np.arange(self.order), self.base.q, self.m)
            coords = linalg.matmul(self.base, digs, Binv)
            weights = self.base.q ** np.arange(self.m, dtype=np.int64)
            ct = (coords.astype(np.int64) * weights).sum(axis=1)
            lt = np.empty(self.order, dtype=np.int64)
            lt[ct] = np.arange(self.order)
            ct.setflags(write=False)
            lt.setflags(write=False)
            self._coords_table, self._label_table = ct, lt
        else:
            self._coords_table = self._label_table = None
        g = np.zeros((self.m, self.m), dtype=np.uint8)
        for i in range(self.m):
            for j in range(i, self.m):
                g[i, j] = g[j, i] = self.trace(self.mul(basis[i], basis[j]))
        g.setflags(write=False)
        self.gram = g

    def with_basis(self, elements) -> "ExtField":
        shared = (self._mul_table, self._inv_table, self._tr_mono, self._trace_table)
        return ExtField(self.base, self.m, self.modulus,
                        basis=tuple(int(b) for b in elements), _trusted=shared)

    # -- scalar arithmetic on labels -------------------------------------

    def _digits(self, a: int) -> tuple[int, ...]:
        q = self.base.q
        out = []
        for _ in range(self.m):
            out.append(a % q)
            a //= q
        return tuple(out)

    def _label(self, coeffs) -> int:
        q = self.base.q
        out = 0
        for j, c in enumerate(coeffs):
            out += int(c) * q**j
        return out

    def check_label(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise AlphabetError(f"label {a} out of range for field of order {self.order}")
        return int(a)

    def add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._label(int(self.base.add[x, y]) for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        return self._label(int(self.base.neg[x]) for x in self._digits(a))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        prod = _pmul(_ptrim(self._digits(a)), _ptrim(self._digits(b)), self.base)
        return self._label(_pmod(prod, self.modulus, self.base))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._inv_table is not None:
            return int(self._inv_table[a])
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        e = int(e)
        assert e >= 0
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def trace(self, a: int) -> int:
        """Trace down to the base field; returns a base-field label."""
        if self._trace_table is not None:
            return int(self._trace_table[a])
        digs = self._digits(a)
        acc = 0
        for j, t in enumerate(self._tr_mono):
            acc = int(self.base.add[acc, self.base.mul[t, digs[j]]])
        return acc

    # -- coordinates under the working basis -----------------------------

    def coords_of(self, a: int) -> tuple[int, ...]:
        """Coordinate vector of `a` over GF(q) in the working basis."""
        self.check_label(a)
        ci = self.coords_int(a)
        q = self.base.q
        out = []
        for _ in range(self.m):
            out.append(ci % q)
            ci //= q
        return tuple(out)

    def coords_int(self, a: int) -> int:
        if self._coords_table is not None:
            return int(self._coords_table[a])
        from . import linalg

        v = np.array([self._digits(a)], dtype=np.uint8)
        c = linalg.matmul(self.base, v, self._basis_inv)[0]
        return self._label(c)

    def from_coords(self, coords) -> int:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.m:
            raise WrongLengthError(
                f"coordinate vector needs {self.m} entries, got {len(coords)}"
            )
        if any(not 0 <= c < self.base.q for c in coords):
            raise AlphabetError("coordinate out of range for the base field")
        if self._label_table is not None:
            return int(self._label_table[self._label(coords)])
        from . import linalg

        v = np.array([coords], dtype=np.uint8)
        d = linalg.matmul(self.base, v, self._basis_matrix)[0]
        return self._label(d)

    # -- vectorized helpers on label arrays ------------------------------

    def digits_vec(self, labels: np.ndarray) -> np.ndarray:
        return _digits_matrix(np.asarray(labels, dtype=np.int64), self.base.q, self.m)

    def labels_from_digits(self, digs: np.ndarray) -> np.ndarray:
        weights = self.base.q ** np.arange(self.m, dtype=np.int64)
        return (digs.astype(np.int64) * weights).sum(axis=-1)

    def add_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        da, db = self.digits_vec(a), self.digits_vec(b)
        return self.labels_from_digits(self.base.add[da, db])

    def scalar_mul_vec(self, c: int, a: np.ndarray) -> np.ndarray:
        """Multiply by a base-field scalar c, digitwise."""
        assert 0 <= c < self.base.q
        return self.labels_from_digits(self.base.mul[c, self.digits_vec(a)])

    def coords_int_vec(self, labels: np.ndarray) -> np.ndarray:
        assert self._coords_table is not None, "field too large for coordinate tables"
        return self._coords_table[np.asarray(labels, dtype=np.int64)]

    def labels_from_coords_int(self, ints: np.ndarray) -> np.ndarray:
        assert self._label_table is not None, "field too large for coordinate tables"
        return self._label_table[np.asarray(ints, dtype=np.int64)]

    # -- descriptors ------------------------------------------------------

    @property
    def is_self_dual(self) -> bool:
        return bool(np.array_equal(self.gram, np.eye(self.m, dtype=np.uint8)))

    def basis_value(self) -> Basis:
        return Basis(
            elements=self.basis,
            gram=tuple(tuple(int(x) for x in row) for row in self.gram),
            is_self_dual=self.is_self_dual,
        )

    def __repr__(self):
        b = self.base
        core = f"GF({b.p}^{b.r})" if b.r > 1 else f"GF({b.p})"
        if self.m == 1:
            return core
        return f"{core}[x]/({_poly_str(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and self.base == other.base
            and self.m == other.m
            and self.modulus == other.modulus
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((ExtField, self.base, self.m, self.modulus, self.basis))


def _poly_str(coeffs) -> str:
    terms = []
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
        elif j == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{j}" if c == 1 else f"{c}*x^{j}")
    return " + ".join(terms) if terms else "0"


_EXT_FIELD_CACHE: dict[tuple, ExtField] = {}


def make_ext_field(base: PrimePower | int, m: int = 1,
                   modulus: tuple[int, ...] | None = None) -> ExtField:
    """GF(q^m) over GF(q) with the polynomial working basis.

    With no modulus given, the lexicographically first monic irreducible of
    degree m is chosen (coefficient vectors compared as base-q integers,
    constant term first).  Results are cached per (base, m, modulus).
    """
    if isinstance(base, int):
        base = prime_power(base)
    if modulus is None:
        if m == 1:
            modulus = (0, 1)
        else:
            modulus = _first_irreducible(m, base)
    else:
        modulus = tuple(int(c) for c in modulus)
    key = (base.p, base.r, m, modulus)
    if key not in _EXT_FIELD_CACHE:
        _EXT_FIELD_CACHE[key] = ExtField(base, m, modulus)
    return _EXT_FIELD_CACHE[key]


def self_dual_basis_exists(base: PrimePower | int, m: int) -> bool:
    """Existence criterion: q even, or q and m both odd."""
    q = base if isinstance(base, int) else base.q
    return q % 2 == 0 or m % 2 == 1


def find_self_dual_basis(field: ExtField,
                         cap: int = SELF_DUAL_SEARCH_CAP) -> Basis | None:
    """First self-dual basis in row-lexicographic order, or None.

    Candidate basis elements are scanned in increasing label order with
    backtracking; the first complete solution therefore coincides with the
    first Gram-identity change-of-basis matrix in row-lexicographic order.
    Returns None when the parity criterion rules a self-dual basis out.
    """
    if not self_dual_basis_exists(field.base, field.m):
        return None
    if field.order > cap:
        raise SearchCapExceededError(
            f"self-dual search needs field order <= {cap}, got {field.order}"
        )
    m = field.m
    chosen: list[int] = []
    echelon: list[tuple[int, tuple[int, ...]]] = []  # (pivot position, reduced digits)

    def reduce(vec: list[int]) -> list[int]:
        for piv, row in echelon:
            c = vec[piv]
            if c != 0:
                for j in range(m):
                    vec[j] = int(field.base.sub[vec[j], field.base.mul[c, row[j]]])
        return vec

    def search() -> bool:
        if len(chosen) == m:
            return True
        for cand in range(1, field.order):
            ok = field.trace(field.mul(cand, cand)) == 1
            if ok:
                for b in chosen:
                    if field.trace(field.mul(cand, b)) != 0:
                        ok = False
                        break
            if not ok:
                continue
            vec = reduce(list(field._digits(cand)))
            piv = next((j for j in range(m) if vec[j] != 0), None)
            if piv is None:
                continue
            s = int(field.base.inv[vec[piv]])
            row = tuple(int(field.base.mul[s, v]) for v in vec)
            chosen.append(cand)
            echelon.append((piv, row))
            if search():
                return True
            chosen.pop()
            echelon.pop()
        return False

    if not search():
        # parity said a basis exists; failing to find one is a bug
        raise AssertionError(
            f"self-dual basis exists for {field!r} but search found none"
        )
    sibling = field.with_basis(tuple(chosen))
    b = sibling.basis_value()
    assert b.is_self_dual
    return b


# ---------------------------------------------------------------------------
# field descriptors: GF(p^r), GF(p^r, m), GF(p^r, m; c_0 c_1 ... c_m)

_DESCRIPTOR_RE = re.compile(
    r"""^\s*GF\(\s*
        (?P<p>\d+)\s*(?:\^\s*(?P<r>\d+))?\s*
        (?:,\s*(?P<m>\d+)\s*
            (?:;\s*(?P<coeffs>\d+(?:\s+\d+)*)\s*)?
        )?
        \)\s*$""",
    re.VERBOSE,
)


def parse_field_descriptor(text: str) -> ExtField:
    """Parse `GF(p^r)`, `GF(p^r, m)`, or `GF(p^r, m; c_0 c_1 ... c_m)`.

    Modulus coefficients are base-field labels, constant term first.
    """
    from .errors import ParseError

    match = _DESCRIPTOR_RE.match(text)
    if match is None:
        raise ParseError(f"bad field descriptor {text!r}; "
                         "expected GF(p^r), GF(p^r, m), or GF(p^r, m; c_0 ... c_m)")
    p = int(match.group("p"))
    r = int(match.group("r") or 1)
    m = int(match.group("m") or 1)
    base = prime_power(p, r) if r > 1 else prime_power(p)
    coeffs = match.group("coeffs")
    if coeffs is None:
        return make_ext_field(base, m)
    modulus = tuple(int(tok) for tok in coeffs.split())
    if len(modulus) != m + 1:
        raise ParseError(
            f"modulus in {text!r} needs {m + 1} coefficients, got {len(modulus)}"
        )
    return make_ext_field(base, m, modulus)
