#!/usr/bin/env python3
"""Generates frozen oracle values for the Levene and contrast F-test fixtures.

Run once; the resulting stats_oracle.json is checked in and consumed by the
C++ test suite. Uses scipy/numpy as an independent reference implementation.
"""
import json

import numpy as np
from scipy import stats


def levene_case(groups, center):
    res = stats.levene(*groups, center=center)
    k = len(groups)
    n = sum(len(g) for g in groups)
    return {
        "groups": [list(map(float, g)) for g in groups],
        "center": center,
        "W": float(res.statistic),
        "df1": k - 1,
        "df2": n - k,
        "p": float(res.pvalue),
    }


def dummy_design(levels):
    uniq = sorted(set(levels))
    x = np.zeros((len(levels), len(uniq)))
    x[:, 0] = 1.0
    for i, lv in enumerate(levels):
        j = uniq.index(lv)
        if j > 0:
            x[i, j] = 1.0
    return x, uniq


def contrast_case(rng, n_per_level, k, effect, noise):
    levels = np.repeat(np.arange(k), n_per_level)
    y = effect * levels.astype(float) + noise * rng.standard_normal(len(levels))
    x, uniq = dummy_design(levels.tolist())
    beta, _, _, _ = np.linalg.lstsq(x, y, rcond=None)
    resid = y - x @ beta
    n, p = x.shape
    s2 = float(resid @ resid) / (n - p)
    cov = s2 * np.linalg.inv(x.T @ x)
    m = k - 1
    # centered linear trend coefficients over beta_1..beta_{k-1}
    base = np.arange(m, dtype=float)
    c = base - base.mean()
    if m % 2 == 0:
        c = 2.0 * c  # integer coefficients for even length
    cb = float(c @ beta[1:])
    var_cb = float(c @ cov[1:, 1:] @ c)
    f = cb * cb / var_cb
    pval = float(stats.f.sf(f, 1, n - p))
    return {
        "response": [float(v) for v in y],
        "levels": [int(v) for v in levels],
        "C": [float(v) for v in c],
        "beta": [float(v) for v in beta],
        "sigma2": s2,
        "F": f,
        "df2": n - p,
        "p": pval,
    }


def main():
    rng = np.random.default_rng(20240817)

    levene_cases = [levene_case([[1, 2, 3, 4], [2, 4, 6, 8]], "mean")]
    assert abs(levene_cases[0]["W"] - 2.4) < 1e-12, levene_cases[0]["W"]
    for i in range(9):
        k = int(rng.integers(2, 5))
        groups = []
        for g in range(k):
            n = int(rng.integers(5, 31))
            scale = float(rng.uniform(0.5, 3.0))
            loc = float(rng.uniform(-2.0, 2.0))
            groups.append((loc + scale * rng.standard_normal(n)).tolist())
        center = "mean" if i % 2 == 0 else "median"
        levene_cases.append(levene_case(groups, center))

    contrast_cases = []
    for i in range(10):
        k = int(rng.integers(3, 7))
        n_per = int(rng.integers(8, 40))
        effect = float(rng.uniform(0.0, 0.5))
        noise = float(rng.uniform(0.2, 1.5))
        contrast_cases.append(contrast_case(rng, n_per, k, effect, noise))

    out = {"levene": levene_cases, "contrast": contrast_cases}
    with open("stats_oracle.json", "w") as f:
        json.dump(out, f, indent=1)
    print("levene cases:", len(levene_cases))
    print("contrast cases:", len(contrast_cases))
    print("levene[0] W,p:", levene_cases[0]["W"], levene_cases[0]["p"])
    print("contrast[0] F,p:", contrast_cases[0]["F"], contrast_cases[0]["p"])


if __name__ == "__main__":
    main()
