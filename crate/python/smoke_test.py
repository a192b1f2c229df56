"""Smoke test for the sfgreen Python module.

Build and install first:
    pip install --no-build-isolation ./crates/python
"""

import json
import math

import sfgreen


def check(name, ok, detail=""):
    print(f"{'ok  ' if ok else 'FAIL'} {name} {detail}")
    return ok


def main():
    results = []

    atoms, masses = sfgreen.spectral_measure(2, 1.0, j_max=3)
    results.append(check("atoms of S²", atoms == [1.0, 4.0, 9.0, 16.0], str(atoms)))
    results.append(check("positive masses", all(w > 0 for w in masses)))

    w = sfgreen.eigenfunction_w(3, -1.0, 2.0, 0.0)
    results.append(check("w(0) = 1", abs(w - 1.0) < 1e-12, f"{w}"))

    closed = sfgreen.radial_green(3, 1.0, 2.0, 0.5, method="closed_form")
    matched = sfgreen.radial_green(3, 1.0, 2.0, 0.5, method="asymptotic_match")
    results.append(check("normalizations agree", abs(closed / matched - 1) < 1e-6, f"{closed} {matched}"))

    r = 1e-4
    ratio = sfgreen.radial_green(4, 4.0, 3.0, r) * 2 * (2 * math.pi**2) * r**2
    results.append(check("flat asymptote n=4", abs(ratio - 1) < 1e-3, f"{ratio}"))

    base = {"dim": 2, "curvature": 1.0}
    config = json.dumps({"base": base, "factors": [], "mass": 1.0})
    value, err = sfgreen.product_kernel(config, 0.7, [])
    direct = sfgreen.radial_green(2, 1.0, 1.0, 0.7)
    results.append(check("empty product", abs(value / direct - 1) < 1e-12, f"{value} {err}"))

    f = sfgreen.f_alpha(2, 1.0, complex(6.0, 0.5), [0.5, 1.0])
    results.append(check("f_alpha finite", all(math.isfinite(abs(z)) for z in f), str(f)))

    try:
        sfgreen.radial_green(3, -1.0, -1.0, 0.5)
        results.append(check("domain error raised", False))
    except sfgreen.SfgreenError as e:
        results.append(check("domain error raised", "DomainError" in str(e)))

    print(f"{sum(results)}/{len(results)} passed")
    raise SystemExit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
