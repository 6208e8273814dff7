"""Exact linear algebra kernel.

Signatures of symmetric rational matrices, Smith normal form over Z,
characteristic polynomials, integer kernels, and signatures of Hermitian
matrices with cyclotomic entries.  All arithmetic uses Python ints and
fractions.Fraction; signs of real cyclotomic quantities are decided by
Sturm-sequence root isolation and exact interval refinement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


# ---------------------------------------------------------------------------
# basic matrix helpers (lists of lists, exact entries)


def dim(M):
    return len(M)


def mat_copy(M):
    return [row[:] for row in M]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(n, m):
    return [[0] * m for _ in range(n)]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a == 0:
                continue
            Bt = B[t]
            row = out[i]
            for j in range(m):
                row[j] += a * Bt[j]
    return out


def transpose(M):
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def is_symmetric(M):
    n = len(M)
    return all(M[i][j] == M[j][i] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class SignatureTriple:
    """Inertia (n_plus, n_minus, n_zero) of a symmetric or Hermitian form."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def dimension(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


def symmetric_signature(M) -> SignatureTriple:
    """Exact inertia of a symmetric matrix over Q by congruence diagonalization.

    Symmetric pivoting; when every remaining diagonal entry vanishes, a
    nonzero off-diagonal entry is folded onto the diagonal (char 0, so
    adding row+column j to i produces 2*M[i][j]).
    """
    n = len(M)
    if n == 0:
        return SignatureTriple(0, 0, 0)
    if not is_symmetric(M):
        raise ValueError("matrix is not symmetric")
    A = [[Fraction(x) for x in row] for row in M]
    plus = minus = zero = 0
    live = list(range(n))
    while live:
        # prefer a nonzero diagonal pivot
        p = next((i for i in live if A[i][i] != 0), None)
        if p is None:
            pair = next(
                ((i, j) for i in live for j in live if i < j and A[i][j] != 0),
                None,
            )
            if pair is None:
                zero += len(live)
                break
            i, j = pair
            for k in live:
                A[i][k] += A[j][k]
            for k in live:
                A[k][i] += A[k][j]
            p = i
        d = A[p][p]
        if d > 0:
            plus += 1
        else:
            minus += 1
        live.remove(p)
        for i in live:
            if A[i][p] != 0:
                f = A[i][p] / d
                for k in live:
                    A[i][k] -= f * A[p][k]
        for i in live:
            A[p][i] = A[i][p] = Fraction(0)
    return SignatureTriple(plus, minus, zero)


def det_exact(M) -> Fraction:
    """Determinant over Q by fraction-free-ish Gaussian elimination."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for col in range(n):
        p = next((r for r in range(col, n) if A[r][col] != 0), None)
        if p is None:
            return Fraction(0)
        if p != col:
            A[col], A[p] = A[p], A[col]
            det = -det
        det *= A[col][col]
        inv = 1 / A[col][col]
        for r in range(col + 1, n):
            if A[r][col] != 0:
                f = A[r][col] * inv
                for c in range(col, n):
                    A[r][c] -= f * A[col][c]
    return det


def char_poly(M) -> list[int]:
    """Characteristic polynomial det(lambda*I - M) of an integer matrix.

    Returns coefficients [c_0, c_1, ..., c_n] with c_n = 1 (low degree
    first).  Faddeev-LeVerrier over Fractions, verified integral.
    """
    n = len(M)
    if n == 0:
        return [1]
    A = [[Fraction(x) for x in row] for row in M]
    coeffs = [Fraction(1)]  # highest degree first while building
    Mk = None
    cs = []
    for k in range(1, n + 1):
        if Mk is None:
            Mk = A
        else:
            # Mk = A @ (M_{k-1} + c_{k-1} I)
            B = [row[:] for row in prevM]
            for i in range(n):
                B[i][i] += cs[-1]
            Mk = mat_mul(A, B)
        tr = sum((Mk[i][i] for i in range(n)), Fraction(0))
        ck = -Fraction(tr) / k
        cs.append(ck)
        prevM = Mk
    out = [Fraction(1)] + cs  # lambda^n + c1 lambda^{n-1} + ... + cn
    res = []
    for c in reversed(out):
        if c.denominator != 1:
            raise ArithmeticError("characteristic polynomial not integral")
        res.append(int(c))
    return res


def poly_eval(coeffs, x):
    """Evaluate a low-first coefficient list at x (exact)."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass
class SmithResult:
    factors: list[int]  # invariant factors d_1 | d_2 | ... (positive)
    rank: int
    U: list | None = None  # U @ A @ V == diag(factors) when requested
    V: list | None = None


def smith_normal_form(M, transforms: bool = False) -> SmithResult:
    """Smith normal form of an integer matrix.

    Pivots on least-absolute-value entries to limit coefficient growth.
    With transforms=True also returns unimodular U, V with U*A*V diagonal.
    """
    A = [list(map(int, row)) for row in M]
    n = len(A)
    m = len(A[0]) if n else 0
    U = identity(n) if transforms else None
    V = identity(m) if transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):
        row_s, row_d = A[src], A[dst]
        for k in range(m):
            row_d[k] += f * row_s[k]
        if U is not None:
            us, ud = U[src], U[dst]
            for k in range(n):
                ud[k] += f * us[k]

    def add_col(src, dst, f):
        for r in A:
            r[dst] += f * r[src]
        if V is not None:
            for r in V:
                r[dst] += f * r[src]

    t = 0
    limit = min(n, m)
    while t < limit:
        # least-absolute-value nonzero pivot in the remaining block
        best = None
        for i in range(t, n):
            for j in range(t, m):
                v = A[i][j]
                if v != 0 and (best is None or abs(v) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, n):
            if A[i][t] != 0:
                q = A[i][t] // A[t][t]
                add_row(t, i, -q)
                if A[i][t] != 0:
                    dirty = True
        for j in range(t + 1, m):
            if A[t][j] != 0:
                q = A[t][j] // A[t][t]
                add_col(t, j, -q)
                if A[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # divisibility fixup: pivot must divide the rest of the block
        bad = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if A[i][j] % A[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1

    factors = []
    for k in range(limit):
        v = A[k][k]
        if v == 0:
            break
        if v < 0:
            v = -v
            if U is not None:
                for c in range(n):
                    U[k][c] = -U[k][c]
            A[k][k] = v
        factors.append(v)
    return SmithResult(factors=factors, rank=len(factors), U=U, V=V)


def integer_kernel(M) -> list[list[int]]:
    """Basis of the integer kernel {x : M x = 0} of an integer matrix.

    Returned as a list of column vectors.  Uses the column transform of SNF:
    columns of V beyond the rank span the kernel.
    """
    n = len(M)
    m = len(M[0]) if n else 0
    if n == 0:
        return [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    res = smith_normal_form(M, transforms=True)
    V = res.V
    ker = []
    for j in range(res.rank, m):
        ker.append([V[i][j] for i in range(m)])
    return ker


# ---------------------------------------------------------------------------
# polynomial utilities over Q (low-first coefficient lists)


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_add(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _poly_trim(out)


def poly_scale(p, f):
    return _poly_trim([c * f for c in p])


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _poly_trim(out)


def poly_divmod(p, q):
    p = [Fraction(c) for c in p]
    q = [Fraction(c) for c in q]
    _poly_trim(p)
    _poly_trim(q)
    if q == [Fraction(0)]:
        raise ZeroDivisionError
    quot = [Fraction(0)] * max(1, len(p) - len(q) + 1)
    while len(p) >= len(q) and p != [Fraction(0)]:
        f = p[-1] / q[-1]
        d = len(p) - len(q)
        quot[d] = f
        for i, c in enumerate(q):
            p[i + d] -= f * c
        _poly_trim(p)
    return _poly_trim(quot), p


def poly_deriv(p):
    if len(p) <= 1:
        return [Fraction(0)]
    return [Fraction(i * c) for i, c in enumerate(p)][1:]


def sturm_sequence(p):
    p = [Fraction(c) for c in p]
    seq = [_poly_trim(p[:]), poly_deriv(p)]
    while seq[-1] != [Fraction(0)]:
        _, r = poly_divmod(seq[-2], seq[-1])
        if r == [Fraction(0)]:
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(seq, x):
    signs = []
    for p in seq:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_roots_isolated(p) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational isolating intervals for all real roots of p.

    Intervals are half-open (a, b]; returned sorted increasingly, one per
    distinct real root (square-free reduction is applied internally).
    """
    p = [Fraction(c) for c in p]
    _poly_trim(p)
    if len(p) == 1:
        return []
    # square-free part
    g = _poly_gcd(p, poly_deriv(p))
    if len(g) > 1:
        p, _ = poly_divmod(p, g)
    seq = sturm_sequence(p)
    # Cauchy bound
    lead = abs(p[-1])
    bound = Fraction(1) + max(abs(c) for c in p) / lead
    roots = []
    total = _sign_changes(seq, -bound) - _sign_changes(seq, bound)
    stack = [(-bound, bound, total)]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            roots.append((a, b))
            continue
        mid = (a + b) / 2
        # nudge off a root of p
        while poly_eval(p, mid) == 0:
            mid += (b - a) / 64
        left = _sign_changes(seq, a) - _sign_changes(seq, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, cnt - left))
    roots.sort()
    return roots


def _poly_gcd(p, q):
    p = _poly_trim([Fraction(c) for c in p])
    q = _poly_trim([Fraction(c) for c in q])
    while q != [Fraction(0)]:
        _, r = poly_divmod(p, q)
        p, q = q, r
    if p[-1] != 0:
        p = poly_scale(p, 1 / p[-1])
    return p


def refine_root(p, interval, other=None, max_iter=400, sturm=None):
    """Bisect an isolating interval of p until `other` has constant sign on it.

    Returns the sign (+1, -1, or 0) of `other` at the root of p inside
    `interval`.  Vanishing of `other` at the root is detected exactly via a
    gcd root count, so the bisection below never chases a zero.
    """
    a, b = interval
    if other is None:
        return 0
    g = _poly_gcd(p, other)
    if len(g) > 1:
        # roots of g are common roots of p and other; count them in (a, b]
        gseq = sturm_sequence(g)
        if _sign_changes(gseq, a) - _sign_changes(gseq, b) >= 1:
            return 0
    seq = sturm_sequence(p) if sturm is None else sturm
    for _ in range(max_iter):
        va, vb = poly_eval(other, a), poly_eval(other, b)
        if va != 0 and vb != 0 and (va > 0) == (vb > 0):
            return 1 if va > 0 else -1
        mid = (a + b) / 2
        while poly_eval(p, mid) == 0:
            mid += (b - a) / 64
        if _sign_changes(seq, a) - _sign_changes(seq, mid) == 1:
            b = mid
        else:
            a = mid
    raise ArithmeticError("interval refinement did not converge")


# ---------------------------------------------------------------------------
# Hermitian signatures at roots of unity
#
# Elements of Q(zeta_p) are coefficient vectors of length p (exponents of
# zeta), reduced only by zeta^p = 1; equality of real quantities is decided
# in the real subfield Q(c), c = 2cos(2*pi*k/p), which is a root of the
# integer polynomial q_p(x) - 2 where q_j is the Chebyshev-like sequence
# q_0 = 2, q_1 = x, q_{j+1} = x q_j - q_{j-1} (so q_j(c) = zeta^j + zeta^-j).


class _Cyclo:
    """Arithmetic in Q[zeta]/(zeta^p - 1): dense exponent vectors."""

    def __init__(self, p):
        self.p = p

    def zero(self):
        return [Fraction(0)] * self.p

    def scalar(self, a):
        v = self.zero()
        v[0] = Fraction(a)
        return v

    def root_power(self, k):
        v = self.zero()
        v[k % self.p] = Fraction(1)
        return v

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def mul(self, a, b):
        p = self.p
        out = [Fraction(0)] * p
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                out[(i + j) % p] += x * y
        return out

    def conj(self, a):
        p = self.p
        return [a[(-i) % p] for i in range(p)]


def _real_subfield_poly(a, p, conjugate_class):
    """Express a real element sum a_j zeta^{k j} as R(c), c = 2cos(2 pi k/p).

    a is an exponent vector (rationals); requires a[j] == a[p-j] for all j.
    Returns R as a low-first rational coefficient list.
    """
    for j in range(1, p):
        if a[j] != a[p - j]:
            raise ValueError("element is not real")
    # q_j polynomials: q_j(c) = zeta^{j} + zeta^{-j}
    q = [[Fraction(2)], [Fraction(0), Fraction(1)]]
    for j in range(2, p // 2 + 1):
        q.append(poly_add(poly_mul([Fraction(0), Fraction(1)], q[j - 1]),
                          poly_scale(q[j - 2], Fraction(-1))))
    R = [a[0]]
    for j in range(1, p // 2 + 1):
        if j == p - j:
            continue
        R = poly_add(R, poly_scale(q[j], a[j]))
    return R


_COS_ROOT_CACHE = {}


def _cos_root_interval(p, k):
    """Isolating interval for c = 2cos(2 pi k / p) among roots of q_p - 2."""
    key = (p, min(k % p, (-k) % p))
    if key in _COS_ROOT_CACHE:
        return _COS_ROOT_CACHE[key]
    # build q_p(x) - 2 with integer coefficients
    q0, q1 = [Fraction(2)], [Fraction(0), Fraction(1)]
    for _ in range(2, p + 1):
        q0, q1 = q1, poly_add(poly_mul([Fraction(0), Fraction(1)], q1),
                              poly_scale(q0, Fraction(-1)))
    P = poly_add(q1, [Fraction(-2)])
    roots = real_roots_isolated(P)
    # distinct roots are 2cos(2 pi j / p), j = 0..floor(p/2), decreasing in j
    j = min(k % p, (-k) % p)
    idx_from_top = j  # j-th largest
    target = roots[len(roots) - 1 - idx_from_top]
    result = (P, target, sturm_sequence(P))
    _COS_ROOT_CACHE[key] = result
    return result


def hermitian_signature_at_root(V, p: int, k: int) -> SignatureTriple:
    """Exact inertia of (1 - zeta^k) V + (1 - zeta^-k) V^T, zeta = e^{2 pi i/p}.

    V is an integer square matrix, p odd >= 3, 1 <= k <= p-1.  Congruence
    diagonalization over Q(zeta^k); pivot signs decided exactly in the real
    subfield by Sturm isolation of 2cos(2 pi k/p).
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be odd and >= 3")
    if not 1 <= k % p <= p - 1:
        raise ValueError("k must be nonzero mod p")
    n = len(V)
    if n == 0:
        return SignatureTriple(0, 0, 0)
    F = _Cyclo(p)
    om = F.root_power(k)
    omc = F.root_power(-k)
    one = F.scalar(1)
    u = F.sub(one, om)   # 1 - zeta^k
    uc = F.sub(one, omc)
    H = [[F.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            H[i][j] = F.add(F.mul(u, F.scalar(V[i][j])),
                            F.mul(uc, F.scalar(V[j][i])))

    # elements live in Q[z]/(z^p - 1) with k folded into the exponents,
    # so every sign decision happens at the standard embedding z -> e^{2 pi i/p}
    P, interval, sturm = _cos_root_interval(p, 1)

    def real_sign(a):
        R = _real_subfield_poly(a, p, k)
        if all(c == 0 for c in R):
            return 0
        return refine_root(P, interval, other=R, sturm=sturm)

    def is_zero_elt(a):
        # an element is zero at zeta^k iff its real and "real of zeta*a"
        # parts vanish; test via sign machinery on a*conj(a) >= 0
        norm = F.mul(a, F.conj(a))
        return real_sign(norm) == 0

    live = list(range(n))
    plus = minus = zero = 0
    while live:
        pivot = None
        for i in live:
            s = real_sign(H[i][i])
            if s != 0:
                pivot = (i, s)
                break
        if pivot is None:
            pair = None
            for i in live:
                for j in live:
                    if i < j and not is_zero_elt(H[i][j]):
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += len(live)
                break
            i, j = pair
            lam = H[i][j]  # new H_ii specializes to 2|H_ij|^2 > 0
            for t in live:
                H[i][t] = F.add(H[i][t], F.mul(lam, H[j][t]))
            lamc = F.conj(lam)
            for t in live:
                H[t][i] = F.add(H[t][i], F.mul(lamc, H[t][j]))
            continue
        i, s = pivot
        if s > 0:
            plus += 1
        else:
            minus += 1
        live.remove(i)
        # clear column/row i against the pivot: row_t -= (H[t][i]/H[i][i]) row_i
        d = H[i][i]
        dinv = _cyclo_real_inverse(F, d, p)
        for t in live:
            f = F.mul(H[t][i], dinv)
            if all(c == 0 for c in f):
                continue
            for s2 in live + [i]:
                H[t][s2] = F.sub(H[t][s2], F.mul(f, H[i][s2]))
            fc = F.conj(f)
            for s2 in live:
                H[s2][t] = F.sub(H[s2][t], F.mul(fc, H[s2][i]))
            H[t][i] = F.zero()
            H[i][t] = F.zero()
    return SignatureTriple(plus, minus, zero)


def _cyclo_real_inverse(F, d, p):
    """An element x with (d*x)(zeta) = 1 for zeta = e^{2 pi i/p}.

    d is invertible at zeta (nonzero there, hence at all Galois conjugates
    since its coefficients are rational), so a polynomial inverse modulo
    Phi_p exists; any representative works because downstream arithmetic
    only ever matters through evaluation at zeta.
    """
    phi = _cyclotomic_poly(p)
    inv = _poly_inverse_mod(list(d), phi)
    out = F.zero()
    for t, c in enumerate(inv):
        out[t % p] += c
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _cyclotomic_poly(n):
    """Cyclotomic polynomial Phi_n as a low-first integer coefficient list."""
    # divide x^n - 1 by Phi_d for all proper divisors d | n
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            phi_d = _cyclotomic_poly(d)
            poly, r = poly_divmod(poly, phi_d)
            assert r == [Fraction(0)]
    return poly


def _poly_inverse_mod(a, m):
    """Inverse of a modulo m in Q[x] via extended Euclid."""
    a = _poly_trim([Fraction(c) for c in a])
    m = _poly_trim([Fraction(c) for c in m])
    _, r = poly_divmod(a, m)
    a = r
    r0, r1 = m, a
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1 != [Fraction(0)]:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_add(s0, poly_scale(poly_mul(q, s1), Fraction(-1)))
    if len(r0) > 1:
        raise ZeroDivisionError("element not invertible modulo given polynomial")
    return poly_scale(s0, 1 / r0[0])
