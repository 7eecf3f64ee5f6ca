"""Smoke test for the permsyz Python extension.

Build and install the wheel first:

    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/permsyz-*.whl

then run `python python/smoke_test.py` (or `pytest python/smoke_test.py`).
"""

import json
import math

import permsyz


def test_betti_tables():
    t = permsyz.betti_table(3, method="resolve")
    assert t.entries() == {(0, 2): 3, (1, 4): 3, (2, 6): 1}
    assert t.provenance == "resolve"
    assert permsyz.betti_table(4).get(1, 4) == 22
    assert permsyz.betti_table(2, method="descriptors").entries() == {(0, 2): 1}
    big = permsyz.betti_table(40, method="ghsw")
    assert max(big.entries().values()) > 2**64
    assert permsyz.BettiTable.from_json(big.to_json()) == big
    assert t.render("csv").splitlines()[1] == "0,2,3"


def test_equivariant():
    doc = permsyz.equivariant(4, g2=False)
    ext1 = [e for e in doc.entries() if e[0] == 1]
    assert sum(e[2] for e in ext1) == 22
    for p, q, dim, orbits, rep in doc.entries():
        assert rep.dim() == dim and orbits
    parsed = json.loads(doc.to_json())
    assert parsed["n"] == 4 and parsed["entries"][0]["orbits"][0]["pattern"]


def test_brute_force():
    rep = permsyz.tor_representation("P", 4, 1, 0, 4).restrict_to_sn()
    assert rep.multiplicity([2, 2]) == 2 and rep.dim() == 10
    assert permsyz.tor_dim("P", 1, [2, 1, 1]) == 1
    try:
        permsyz.verify("tor", n=5)
    except permsyz.ResourceBoundError:
        pass
    else:
        raise AssertionError("expected a resource bound error")


def test_verify_and_combinatorics():
    r = permsyz.verify("crosscheck", n=4, n_max=6)
    assert r.ok() and r.summary()["documented-discrepancy"] > 0
    assert permsyz.verify("hilbert", n=3, max_degree=6).ok()
    assert permsyz.hf_closed("P", [2, 1, 1]) == permsyz.hf_oracle("P", [2, 1, 1])
    shapes, sizes, values = permsyz.character_table(5)
    assert sum(permsyz.hook_dim(s) ** 2 for s in shapes) == math.factorial(5)
    assert sum(sizes) == math.factorial(5)
    assert permsyz.lr_coefficients([1], [1]) == [([2], 1), ([1, 1], 1)]


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print(f"permsyz {permsyz.__version__}: smoke test passed")
