import random
from fractions import Fraction

import pytest

from knotforge.exact import (SignatureTriple, char_poly, det_exact,
                             hermitian_signature_at_root, integer_kernel,
                             poly_eval, real_roots_isolated,
                             smith_normal_form, symmetric_signature)


def test_signature_diagonal():
    assert symmetric_signature([[1, 0], [0, -1]]) == SignatureTriple(1, 1, 0)


def test_signature_hyperbolic_block():
    assert symmetric_signature([[0, 1], [1, 0]]) == SignatureTriple(1, 1, 0)


def test_signature_goeritz_k0():
    G = [[-3, -1, 0, 0], [-1, -2, -1, 0], [0, -1, -2, -1], [0, 0, -1, -2]]
    assert symmetric_signature(G).signature == -4


def test_signature_empty():
    assert symmetric_signature([]) == SignatureTriple(0, 0, 0)


def test_congruence_invariance_randomized():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(1, 5)
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                M[i][j] = M[j][i] = rng.randint(-4, 4)
        base = symmetric_signature(M)
        # random unimodular: product of elementary row+col operations
        U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            f = rng.choice([-2, -1, 1, 2])
            for k in range(n):
                U[i][k] += f * U[j][k]
        Ut = [[U[j][i] for j in range(n)] for i in range(n)]
        UM = [[sum(U[i][k] * M[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        UMU = [[sum(UM[i][k] * Ut[k][j] for k in range(n)) for j in range(n)]
               for i in range(n)]
        assert symmetric_signature(UMU) == base


def _negative_roots_with_multiplicity(cp):
    from knotforge.exact import (_poly_gcd, _sign_changes, poly_divmod,
                                 poly_deriv, sturm_sequence)
    p = [Fraction(c) for c in cp]
    while p and p[0] == 0:
        p.pop(0)  # roots at zero are not negative
    count = 0
    while len(p) > 1:
        g = _poly_gcd(p, poly_deriv(p))
        sq, _ = poly_divmod(p, g)
        seq = sturm_sequence(sq)
        bound = Fraction(1) + max(abs(c) for c in sq) / abs(sq[-1])
        count += _sign_changes(seq, -bound) - _sign_changes(seq, Fraction(0))
        p = g
        while p and p[0] == 0:
            p.pop(0)
    return count


def test_signature_root_count_agreement():
    # n_minus equals the number of negative char poly roots with multiplicity
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 6)
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                M[i][j] = M[j][i] = rng.randint(-3, 3)
        tri = symmetric_signature(M)
        assert tri.n_minus == _negative_roots_with_multiplicity(char_poly(M))


def test_smith_identity():
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).factors == [1, 1, 1]


def test_smith_diagonal():
    assert smith_normal_form([[2, 0], [0, 4]]).factors == [2, 4]


def test_smith_hand_reduction():
    assert smith_normal_form([[2, 4], [6, 8]]).factors == [2, 4]


def test_smith_divisibility_and_det():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 4)
        M = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        res = smith_normal_form(M)
        for a, b in zip(res.factors, res.factors[1:]):
            assert b % a == 0
        det = abs(int(det_exact(M)))
        if res.rank == n:
            prod = 1
            for f in res.factors:
                prod *= f
            assert prod == det
        else:
            assert det == 0


def test_smith_transforms():
    rng = random.Random(5)
    for _ in range(50):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        M = [[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)]
        res = smith_normal_form(M, transforms=True)
        # U M V is diagonal with the invariant factors
        UM = [[sum(res.U[i][k] * M[k][j] for k in range(n)) for j in range(m)]
              for i in range(n)]
        S = [[sum(UM[i][k] * res.V[k][j] for k in range(m)) for j in range(m)]
             for i in range(n)]
        for i in range(n):
            for j in range(m):
                want = res.factors[i] if i == j and i < len(res.factors) else 0
                assert S[i][j] == want


def test_integer_kernel():
    ker = integer_kernel([[1, 1, -2]])
    assert len(ker) == 2
    for v in ker:
        assert v[0] + v[1] - 2 * v[2] == 0


def test_char_poly_zero_matrix():
    assert char_poly([[0, 0], [0, 0]]) == [0, 0, 1]


def test_char_poly_displayed_k0():
    G = [[-3, -1, 0, 0], [-1, -2, -1, 0], [0, -1, -2, -1], [0, 0, -1, -2]]
    # (x+3)(x(x+3)^2 + 3) expanded, low-first
    assert char_poly(G) == [9, 30, 27, 9, 1]


def test_hermitian_zero_matrix():
    assert hermitian_signature_at_root([[0, 0], [0, 0]], 5, 2) == SignatureTriple(0, 0, 2)


def test_hermitian_trefoil():
    tri = hermitian_signature_at_root([[-1, 1], [0, -1]], 3, 1)
    assert tri.signature == -2


def test_hermitian_conjugate_symmetry():
    V = [[-1, 1], [0, -1]]
    for p in (3, 5, 7, 9):
        for k in range(1, p):
            a = hermitian_signature_at_root(V, p, k)
            b = hermitian_signature_at_root(V, p, p - k)
            assert (a.n_plus, a.n_minus, a.n_zero) == (b.n_plus, b.n_minus, b.n_zero)


def test_hermitian_matches_float_oracle():
    import cmath
    V = [[-1, 1], [0, -1]]
    for p in (3, 5, 7, 9, 11):
        for k in range(1, p):
            tri = hermitian_signature_at_root(V, p, k)
            w = cmath.exp(2j * cmath.pi * k / p)
            u = 1 - w
            a, b = -2 * u.real, abs(u)
            eigs = (a + b, a - b)
            wp = sum(1 for e in eigs if e > 1e-9)
            wm = sum(1 for e in eigs if e < -1e-9)
            assert (tri.n_plus, tri.n_minus) == (wp, wm)


def test_hermitian_rejects_even_p():
    with pytest.raises(ValueError):
        hermitian_signature_at_root([[1]], 4, 1)
