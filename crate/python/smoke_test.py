"""Smoke test for the nsgp Python bindings.

Build first: pip install --no-build-isolation -e crates/python
"""

import json

import nsgp


def main():
    s = nsgp.NumericalSemigroup([5, 7, 9])
    assert (s.frobenius, s.conductor, s.genus) == (13, 14, 8)
    assert s.gaps() == [1, 2, 3, 4, 6, 8, 11, 13]
    assert 12 in s and 13 not in s
    assert sorted(w % 5 for w in s.apery_set(5)) == [0, 1, 2, 3, 4]
    assert s.betti() == {(0, 14): 1, (0, 25): 1, (0, 27): 1, (1, 32): 1, (1, 34): 1}
    assert s.homology(32) == [0, 1]
    hk = s.herzog_kunz()
    assert (hk["m"], hk["c"], hk["rhs"], hk["is_ci"]) == (39, 14, 19, False)
    assert not s.is_complete_intersection()
    assert s.t1_dimension(0) == 0
    assert json.loads(s.to_json())["minimal_generators"] == [5, 7, 9]

    ci = nsgp.NumericalSemigroup.parse("15,16,24,28")
    assert ci.binomials() == [
        "x2^3 - x3^2  (deg 48)",
        "x2^2*x3 - x4^2  (deg 56)",
        "x1^4 - x2^2*x4  (deg 60)",
    ]
    assert ci.delorme(largest=True)["is_ci"]
    assert ci.is_free([16, 24, 28, 15]) is not None

    failure = nsgp.NumericalSemigroup([6, 8, 10, 17, 19]).delorme()["failure"]
    assert [v["m"] for v in failure["m_values"]] == [18, 16, 20, 34, 38]

    pretzel = nsgp.formal_semigroup([1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1])
    assert pretzel["sporadic"] == [0, 3, 5, 7, 8] and pretzel["witness"] == [3, 3]

    assert nsgp.torus_alexander(2, 3) == [1, -1, 1]
    assert nsgp.torus_alexander(3, 4) == nsgp.NumericalSemigroup([3, 4]).alexander()
    for n in range(1, 4):
        assert nsgp.teragaito(n, "a").is_complete_intersection()
        b = nsgp.teragaito(n, "b")
        assert b.is_symmetric() and not b.is_complete_intersection()

    glued = nsgp.glue(nsgp.NumericalSemigroup([2, 3]), nsgp.NumericalSemigroup([1]), 1, 5)
    assert glued == nsgp.NumericalSemigroup([2, 3])
    assert nsgp.cyclotomic_test(ci.hilbert_numerator())

    try:
        nsgp.NumericalSemigroup([4, 6])
    except ValueError as e:
        assert str(e).startswith("GcdNotOne")
    else:
        raise AssertionError("gcd 2 accepted")

    print("smoke test ok")


if __name__ == "__main__":
    main()
