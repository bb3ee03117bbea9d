"""Smoke test for the qskew Python module.

Build and run from the repository root:

    PYO3_BUILD_EXTENSION_MODULE=1 cargo build -p qskew-py --release
    cp target/release/libqskew_py.so python/qskew.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import qskew


def check_laurent():
    q = qskew.Laurent.q_pow(1)
    qi = qskew.Laurent.q_pow(-1)
    two = q + qi  # [2]_q
    assert two.specialize("1") == "2"
    assert (two * two).exact_div(two) == two
    assert qskew.Laurent([(0, "1/2")]).specialize("3") == "1/2"
    assert (two - two).is_zero()
    try:
        qskew.Laurent([(0, "1")]).exact_div(two)
    except ValueError:
        pass
    else:
        raise AssertionError("inexact division should raise")


def check_clifford():
    psi1, psid1 = qskew.psi(1, 1), qskew.psid(1, 1)
    w = qskew.omega(1, 1)
    lhs = psi1 * psid1 + (psid1 * psi1).scale(qskew.Laurent.q_pow(-1))
    assert lhs.same_action(w)
    assert qskew.psid(2, 2).apply("10") == [("-1", "11")]
    assert qskew.omega(1, 2).apply("10") == [("q^-1", "10")]


def check_embeddings():
    n, m = 2, 3
    for a in ("E1", "F1", "L1", "L2"):
        la = qskew.lambda_q(n, m, a)
        for b in ("E1", "E2", "F1", "F2", "L1", "L3"):
            rb = qskew.rho_q(n, m, b)
            assert la.commutator(rb).is_zero_operator(), (a, b)
    assert qskew.lambda_q(2, 2, "L1").apply("1010") == [("q^2", "1010")]


def check_partitions():
    parts = qskew.partitions_in_box(2, 2)
    assert len(parts) == 6
    assert qskew.conjugate([2, 1]) == [2, 1]
    total = sum(qskew.weyl_dim(mu, 2) * qskew.weyl_dim(qskew.conjugate(mu), 2) for mu in parts)
    assert total == 16
    state = qskew.hwv_state([2, 1], 2, 2)
    assert state == "1110"
    assert qskew.row_col_weights(2, 2, state) == ([2, 1], [2, 1])
    assert qskew.dual_cauchy_check(2, 3)
    try:
        qskew.conjugate([1, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("non-partition should raise")


def check_reports():
    r = qskew.run("decompose", n=2, m=2)
    assert r["status"] == "pass"
    assert r["sections"][0]["data"]["total"] == 16
    r = qskew.run("verify commutant", n=1, m=2, spec_q=["5"])
    assert r["status"] == "pass"
    try:
        qskew.run("verify nonsense")
    except ValueError:
        pass
    else:
        raise AssertionError("bad command should raise")


if __name__ == "__main__":
    for check in (check_laurent, check_clifford, check_embeddings, check_partitions, check_reports):
        check()
        print(f"ok {check.__name__}")
