"""Smoke test for the `plucker` extension module.

Build and install first, e.g.

    maturin build -m crates/python/Cargo.toml --release
    pip install target/wheels/plucker-*.whl
"""

from fractions import Fraction

import plucker


def main():
    point = plucker.BaseModel.point()
    g24 = plucker.plucker_degree(plucker.Bundle.trivial(point, 4), 2)
    assert g24.degree == 2 and g24.is_integer(), g24
    assert plucker.fiber_degree_hook(6, 3) == 42

    shown = plucker.plucker_degree(plucker.Bundle.trivial(point, 4), 2, variant="displayed")
    assert shown.degree == Fraction(1, 6)

    p1 = plucker.BaseModel.projective(1)
    quadric = plucker.Bundle.from_chern_roots(p1, [1, 1])
    assert plucker.plucker_degree(quadric, 1).degree == 2
    assert plucker.oracle_degree(quadric, 1) == 2

    formal = plucker.BaseModel.formal(2)
    e = plucker.Bundle.formal(formal, 3)
    series = [plucker.ch_pushforward(e, 1, method=m) for m in ("closed", "schur", "constant-term", "flag-oracle")]
    assert all(s.agrees_with(series[0]) for s in series)
    assert series[0].components() == [{"1": Fraction(1, 2)}, {"s1": Fraction(1, 6)}, {"s2": Fraction(1, 24)}]

    p2 = plucker.BaseModel.projective(2)
    split = plucker.Bundle.from_chern_roots(p2, [1, 2, 0])
    by_segre = plucker.Bundle.from_segre(p2, 3, [1, 3, 7])
    assert plucker.plucker_degree(split, 2).degree == plucker.plucker_degree(by_segre, 2).degree
    assert plucker.ch_pushforward(split, 2).agrees_with(plucker.ch_pushforward(by_segre, 2))

    for method in ("constant-term", "determinant", "flag-oracle"):
        assert plucker.monomial_pushforward(split, [3, 2], method=method) == {"h^2": Fraction(2)}

    assert plucker.phi_monomial([1, 0]) == plucker.phi_eval_monomial([1, 0]) == Fraction(-1, 2)
    assert plucker.factorial_det_check([4, 7, 2])
    assert plucker.syt_count([2, 2]) == 2

    ok, cases, failure = plucker.gen_cauchy_check(4, 2, trials=10)
    assert ok and failure is None, failure
    ok, _, failure = plucker.gen_cauchy_check(4, 2, trials=10, form="literal")
    assert not ok and "lhs/rhs = 4" in failure

    assert all(passed for _, passed, _ in plucker.verify_grid(3))

    try:
        plucker.plucker_degree(e, 1)
    except ValueError as exc:
        assert "concrete base" in str(exc)
    else:
        raise AssertionError("formal degree should raise")

    print("smoke test passed:", g24, series[0])


if __name__ == "__main__":
    main()
