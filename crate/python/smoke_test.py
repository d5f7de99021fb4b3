"""Smoke test for the hyperpauli Python extension.

Build and run from the repository root:

    cargo build -p hyperpauli-py --release
    python3 python/smoke_test.py

The script copies target/release/libhyperpauli.so next to itself as
hyperpauli.so unless an importable module already exists.
"""

import math
import os
import shutil
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)


def load():
    built = os.path.join(ROOT, "target", "release", "libhyperpauli.so")
    target = os.path.join(HERE, "hyperpauli.so")
    if os.path.exists(built):
        shutil.copyfile(built, target)
    sys.path.insert(0, HERE)
    import hyperpauli

    return hyperpauli


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


def main():
    hp = load()
    H = hp.HNumber

    j = H(0, 0, 1, 0)
    assert (j * j).components() == (1.0, 0.0, 0.0, 0.0)
    i = H(0, 1, 0, 0)
    assert (i * i).components() == (-1.0, 0.0, 0.0, 0.0)
    plus, minus = H(1, 2, 3, 4).split()
    assert plus == complex(4, 6) and minus == complex(-2, -2)
    assert H.join(plus, minus) == H(1, 2, 3, 4)
    assert not H(0.5, 0, 0.5, 0).is_invertible()

    e1, e2, e3 = (hp.AlgebraElement.e(k) for k in (1, 2, 3))
    ij = hp.AlgebraElement([H(0, 0, 0, 1), H(), H(), H()])
    diff = e1 * e2 - ij * e3
    assert diff.norm() == 0.0
    for mu in range(4):
        for nu in range(4):
            basis = lambda k: [1.0 if n == k else 0.0 for n in range(4)]
            want = 0.0 if mu != nu else (1.0 if mu == 0 else -1.0)
            assert hp.minkowski(basis(mu), basis(nu)) == want

    boost = hp.SpinTransform.boost([0, 0, 1], 1.0)
    t, x, y, z = boost.apply([1, 0, 0, 0])
    assert close(t, math.cosh(1.0)) and close(z, math.sinh(1.0))
    full_turn = hp.SpinTransform.rotor([0, 1, 0], 2 * math.pi)
    assert (full_turn.element() + hp.AlgebraElement.one()).norm() < 1e-12
    p, m = boost.compose(hp.SpinTransform.rotor([1, 0, 0], 0.3)).to_complex_pair()
    det = p[0][0] * p[1][1] - p[0][1] * p[1][0]
    assert abs(det - 1) < 1e-12

    psi = hp.HSpinor(H(1, 0, 0, 0), H(0, 1, 0, 0))
    left, right = psi.chiral_plus(), psi.chiral_minus()
    for a, b, c in zip(left.components(), right.components(), psi.components()):
        assert a + b == c
    assert left.chiral_minus().norm() == 0.0

    assert hp.lie_dimension_audit(3) == (8, 16, 16)
    closure, det_res = hp.group_audit(2, True, 20, 7)
    assert closure < 1e-11 and det_res < 1e-11

    rows = hp.kg_convergence([1, 0, 0, 0.6], 0.8)
    orders = [r[3] for r in rows if r[3] is not None]
    assert len(orders) == 2 and all(1.8 <= o <= 2.2 for o in orders), rows

    assert hp.maxwell_residual([1, 0, 0, 1], [0, 1, 0, 0]) <= 1e-12
    assert close(hp.maxwell_residual([1, 0, 0, 0], [0, 1, 0, 0]), 1.0)

    try:
        hp.SpinTransform.rotor([0, 0, 0], 1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("zero axis accepted")

    print("python smoke test: ok (orders %.4f %.4f)" % tuple(orders))


if __name__ == "__main__":
    main()
