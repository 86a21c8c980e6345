"""Smoke test for the `regen` extension module.

Build with `cargo build -p regen-py --release`, copy
target/release/libregen.so to regen.so somewhere on PYTHONPATH, then run
this script.
"""

from fractions import Fraction as F

import regen


def main():
    p = regen.construction1_point(5, 3, 3, 2)
    assert (p.alpha, p.gamma) == (F(2, 5), F(3, 4)), p
    assert p.provenance.startswith("CONSTRUCTION1"), p.provenance
    assert p.khat == 2

    msr = regen.msr_point(5, 3, 3)
    assert (msr.alpha, msr.gamma) == (F(1, 3), F(1))
    b = regen.baseline_point(5, 3, 3, 2)
    assert (b.alpha, b.gamma) == (F(2, 5), F(4, 5))
    assert regen.min_functional_gamma(5, 3, 3, F(2, 5)) == F(3, 5)

    assert regen.construction2_file_size(6, 3, 4, 2) == regen.mk_oracle(6, 3, 4, 2) == F(9, 10)
    assert regen.binomial(61, 55) == 55525372

    hull = regen.inner_bound_hull(5, 3, 3)
    assert [(v.alpha, v.gamma) for v in hull] == [(F(1, 3), F(1)), (F(2, 5), F(3, 4)), (F(1, 2), F(1, 2))]

    code = regen.GluedCode(5, 2, seed=7)
    assert code.copies == 120 and code.k == 3
    sweep = code.sweep(3)
    assert sweep["alpha"] == F(2, 5) and sweep["gamma"] == F(3, 4), sweep
    assert sweep["nonempty_gamma"] == F(15, 16)
    assert code.reconstruct([0, 2, 4]) == code.files()
    total, per_copy = code.repair(4, [0, 1, 2])
    assert total == sum(per_copy)
    assert code.subset_information([1]) == F(2, 5)

    try:
        regen.construction1_point(5, 3, 3, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("k_hat > k accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
