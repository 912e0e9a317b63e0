"""Kernels of exact linear systems, with a modular fast path.

Small systems go through dense exact Gauss-Jordan.  Large ones (first-integral
and commutant searches reach ~600 unknowns) are solved mod several word-size
primes with numpy, the canonical kernel basis is reconstructed over Q (or
Q(sqrt(d)) via the conjugate elimination), and every reconstructed vector is
handed back to the caller for exact verification -- the modular step only
*finds* candidates, it never certifies them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .field import FieldElem, ZERO, ONE
from .matrix import nullspace_exact

_PRIME_POOL = [
    1073741789, 1073741783, 1073741741, 1073741723, 1073741719,
    1073741717, 1073741689, 1073741671, 1073741663, 1073741651,
    1073741621, 1073741567, 1073741561, 1073741527, 1073741477,
    1073741467, 1073741441, 1073741419, 1073741399, 1073741381,
    1073741359, 1073741329, 1073741311, 1073741309, 1073741287,
    1073741237, 1073741213, 1073741197, 1073741189, 1073741173,
]

Entry = tuple[int, int, FieldElem]


def _sqrt_mod(a: int, p: int) -> int | None:
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _frac_mod(x: Fraction, p: int) -> int:
    return x.numerator % p * pow(x.denominator % p, p - 2, p) % p


def _rref_kernel_mod(A: np.ndarray, p: int) -> tuple[tuple[int, ...], list[np.ndarray]]:
    """Pivot columns and canonical kernel basis of A mod p (A is modified)."""
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = A[r] * inv % p
        rest = np.nonzero(A[:, c])[0]
        for j in rest:
            if j != r:
                A[j] = (A[j] - int(A[j, c]) * A[r]) % p
        pivots.append(c)
        r += 1
    piv_set = set(pivots)
    free = [c for c in range(ncols) if c not in piv_set]
    basis = []
    for fc in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[fc] = 1
        for idx, pc in enumerate(pivots):
            v[pc] = (-int(A[idx, fc])) % p
        basis.append(v)
    return tuple(pivots), basis


def _crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    g = pow(m1, -1, m2)
    x = (r1 + (r2 - r1) * g % m2 * m1) % (m1 * m2)
    return x, m1 * m2


def _rat_reconstruct(r: int, m: int) -> Fraction | None:
    """Wang rational reconstruction: a/b = r mod m with |a|, b <= sqrt(m/2)."""
    bound = int((m // 2) ** 0.5)
    a0, a1 = m, r % m
    b0, b1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if abs(b1) > bound or b1 == 0:
        return None
    from math import gcd
    if gcd(abs(b1), m) != 1 or gcd(a1, abs(b1)) != 1:
        return None
    return Fraction(a1, b1) if b1 > 0 else Fraction(-a1, -b1)


def nullspace_field(
    entries: Iterable[Entry],
    nrows: int,
    ncols: int,
    d: int = 1,
    verify: Callable[[list[FieldElem]], bool] | None = None,
    max_primes: int = 24,
    exact_threshold: int = 140,
) -> list[list[FieldElem]]:
    """Kernel basis over Q(sqrt(d)) of the sparse matrix given by ``entries``.

    Every returned vector is exact; when ``verify`` is supplied each candidate
    must pass it (a failed candidate triggers more primes).
    """
    entries = list(entries)
    if ncols <= exact_threshold:
        rows = [[ZERO] * ncols for _ in range(nrows)]
        for i, j, v in entries:
            rows[i][j] = rows[i][j] + v
        basis = nullspace_exact(rows, ncols)
        if verify is not None:
            for v in basis:
                if not verify(v):
                    raise ArithmeticError("exact kernel vector failed verification")
        return basis

    residues: dict[int, list[dict]] = {}
    modulus = 1
    merged: list[dict[int, tuple[int, int]]] | None = None  # per vector: col -> (res_plus, res_minus)
    pivot_sig = None
    primes_used: list[int] = []

    for p in _PRIME_POOL[:max_primes]:
        s = _sqrt_mod(d % p, p) if d != 1 else 0
        if s is None:
            continue
        mats = []
        for sg in ((s,) if d == 1 else (s, (-s) % p)):
            A = np.zeros((nrows, ncols), dtype=np.int64)
            for i, j, v in entries:
                val = (_frac_mod(v.rat, p) + _frac_mod(v.rad, p) * sg) % p
                A[i, j] = (A[i, j] + val) % p
            mats.append(A)
        piv, basis_plus = _rref_kernel_mod(mats[0], p)
        if d != 1:
            piv2, basis_minus = _rref_kernel_mod(mats[1], p)
            if piv2 != piv:
                continue  # unlucky prime
        else:
            basis_minus = basis_plus
        if pivot_sig is None or len(piv) > len(pivot_sig):
            pivot_sig = piv
            merged = None
            modulus = 1
            primes_used = []
        if piv != pivot_sig:
            continue
        if merged is None:
            merged = [dict() for _ in basis_plus]
        inv2s = pow((2 * s) % p, p - 2, p) if d != 1 else 0
        for vi, (vp, vm) in enumerate(zip(basis_plus, basis_minus)):
            for j in range(ncols):
                ep, em = int(vp[j]), int(vm[j])
                if d == 1:
                    ra, rb = ep, 0
                else:
                    ra = (ep + em) * pow(2, p - 2, p) % p
                    rb = (ep - em) * inv2s % p
                if modulus == 1:
                    merged[vi][j] = (ra, rb)
                else:
                    oa, ob = merged[vi].get(j, (0, 0))
                    merged[vi][j] = (_crt(oa, modulus, ra, p)[0], _crt(ob, modulus, rb, p)[0])
        modulus *= p
        primes_used.append(p)
        if len(primes_used) < 2:
            continue
        # attempt reconstruction
        out = []
        ok = True
        for vec in merged:
            cand = []
            for j in range(ncols):
                ra, rb = vec.get(j, (0, 0))
                fa = _rat_reconstruct(ra, modulus)
                fb = _rat_reconstruct(rb, modulus) if d != 1 else Fraction(0)
                if fa is None or fb is None:
                    ok = False
                    break
                cand.append(FieldElem(fa, fb, d))
            if not ok:
                break
            out.append(cand)
        if not ok:
            continue
        if verify is not None and not all(verify(v) for v in out):
            continue
        return out

    if merged is not None and not merged:
        return []
    raise ArithmeticError("modular nullspace failed to stabilize; increase max_primes")
