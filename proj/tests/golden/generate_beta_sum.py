"""Regenerates beta_sum.json with Python integers, independently of the C++ pipeline."""
import json
import pathlib


def poly(coeffs, n):
    acc = 0
    for c in coeffs:
        acc = acc * n + c
    return acc


def row(n):
    a = poly([2, -44, 325, -807, -796, 6906, -10227, 4545], n)
    b = poly([10, -273, 3089, -18843, 67223, -140907, 162003, -81929, 5851], n)
    c = poly([3, -104, 1549, -13028, 68261, -230910, 502291, -670392, 486104, -137246], n)
    quartic = poly([1, -24, 194, -624, 709], n)
    d = -3 * (n - 7) * (n - 3) * (n - 1) * quartic
    fd = poly([3, -56, 398, -1380, 2367, -1604], n)
    fe = -poly([2, -29, 129, -219, 105], n)
    ff = quartic
    fa = a * poly([2, -29, 129, -219, 105], n) + b * (n + 1) ** 2
    fb = a * fd + c * (n + 1) ** 2
    fc = a * ff + d * (n + 1) ** 2
    P = fa * fd + fb * fe
    Q = fa * ff + fc * fe
    lead = (n - 2) ** 15
    betas = [
        lead * (n + 1) ** 2 * Q**3,
        -lead * fe * P * Q**2,
        -lead * fd * P**2 * Q,
        lead * ff * P**3,
    ]
    return {"n": n, "a": str(a), "d": str(d), "betas": [str(x) for x in betas], "beta_sum": str(sum(betas))}


if __name__ == "__main__":
    out = pathlib.Path(__file__).with_name("beta_sum.json")
    out.write_text(json.dumps([row(n) for n in range(3, 13)], indent=1) + "\n")
