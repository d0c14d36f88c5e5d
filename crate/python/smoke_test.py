"""Smoke test for the psbasis_py extension module."""

import psbasis_py as psb


def main():
    sb = psb.standard_basis(["x1-x2", "x1*(x2^2+x3^3)"])
    assert sb["basis"] == ["x2*x3^3+x2^3", "x1-x2"], sb

    b = psb.bounds(3, 2)
    assert b["degree_bound"] == "512", b

    assert psb.hs_at(["x1^2+x2^3"], [0, 0], r_max=4)["hs_values"] == [1, 3, 5, 7, 9]
    assert psb.hs_at(["x1^2+x2^3"], [1, -1], r_max=3)["hs_values"] == [1, 2, 3, 4]

    r = psb.hs_stratify(["x1^2+x2^3"])
    values = [s["hs_values"][:3] for s in r["strata"]]
    assert values == [[0, 0, 0], [1, 2, 3], [1, 3, 5]], values

    code, out, err = psb.run(["sb", "x1+"])
    assert code == 2 and out == "" and "parse error" in err

    try:
        psb.call(["bounds", "-n", "21", "-d", "1"])
    except psb.PsbError as e:
        assert e.args[1] == 4
    else:
        raise AssertionError("expected a size error")

    print("smoke test passed")


if __name__ == "__main__":
    main()
