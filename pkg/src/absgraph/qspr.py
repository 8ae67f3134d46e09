"""Benzenoid hydrocarbon dataset and simple linear regression with the usual
inference statistics (coefficient errors, r^2, SE, F and its p-value)."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

__all__ = [
    "BenzenoidRecord", "RegressionModel", "QsprDataError", "DegenerateFitError",
    "BENZENOIDS", "load_dataset", "fit_simple_ols", "f_significance",
    "regularized_incomplete_beta", "predict", "regression_report", "format_report_table",
    "PROPERTIES",
]

CSV_HEADER = ("compound", "e_abs", "bp", "e_pi")
PROPERTIES = ("bp", "e_pi")

BETACF_MAX_ITER = 200
_BETACF_EPS = 1e-15
_TINY = 1e-300


class QsprDataError(ValueError):
    pass


class DegenerateFitError(ValueError):
    pass


@dataclass(frozen=True)
class BenzenoidRecord:
    compound: str
    e_abs: float
    bp: float
    e_pi: float


# ABS energy, boiling point (deg C) and pi-electron energy of 21 benzenoids.
_TABLE = """\
BHC1 10.089 218 13.6832
BHC2 14.5445 338 19.4483
BHC3 14.4865 340 19.3137
BHC4 18.9799 431 25.1922
BHC5 18.9015 425 25.1012
BHC6 19.0111 429 25.2745
BHC7 18.8744 440 24.9308
BHC8 21.5036 496 28.222
BHC9 21.5786 493 28.3361
BHC10 21.4939 497 28.2453
BHC11 24.0287 547 31.253
BHC12 23.5972 542 31.4251
BHC13 23.4346 535 30.9418
BHC14 23.4184 536 30.8805
BHC15 23.3769 531 30.8795
BHC16 23.4463 519 30.9432
BHC17 26.7119 590 34.5718
BHC18 25.9835 592 34.0646
BHC19 25.915 596 33.1892
BHC20 25.9357 594 33.9542
BHC21 25.9565 595 34.0307
"""

BENZENOIDS: tuple[BenzenoidRecord, ...] = tuple(
    BenzenoidRecord(name, float(e), float(b), float(p))
    for name, e, b, p in (line.split() for line in _TABLE.splitlines())
)


def _parse_rows(handle) -> list[BenzenoidRecord]:
    reader = csv.reader(handle)
    try:
        header = next(reader)
    except StopIteration:
        raise QsprDataError("line 1: missing header") from None
    if tuple(h.strip() for h in header) != CSV_HEADER:
        raise QsprDataError(f"line 1: expected header {','.join(CSV_HEADER)}")
    records = []
    for row in reader:
        if not row or all(not c.strip() for c in row):
            continue
        line = reader.line_num
        if len(row) != 4:
            raise QsprDataError(f"line {line}: expected 4 fields, got {len(row)}")
        try:
            e_abs, bp, e_pi = (float(x) for x in row[1:])
        except ValueError:
            raise QsprDataError(f"line {line}: non-numeric field") from None
        if not all(math.isfinite(v) for v in (e_abs, bp, e_pi)):
            raise QsprDataError(f"line {line}: non-finite value")
        if e_abs <= 0:
            raise QsprDataError(f"line {line}: e_abs must be positive")
        records.append(BenzenoidRecord(row[0].strip(), e_abs, bp, e_pi))
    return records


def load_dataset(source: str | Path | None = None) -> list[BenzenoidRecord]:
    """Records from a ``compound,e_abs,bp,e_pi`` CSV, or the built-in table."""
    if source is None:
        return list(BENZENOIDS)
    with open(source, newline="", encoding="utf-8") as fh:
        return _parse_rows(fh)


def dataset_csv(records=BENZENOIDS) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([r.compound, repr(r.e_abs), repr(r.bp), repr(r.e_pi)])
    return buf.getvalue()


# ------------------------------------------------------------ statistics

def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta function (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, BETACF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETACF_EPS:
            return h
    raise ArithmeticError(f"incomplete beta continued fraction did not converge "
                          f"(a={a}, b={b}, x={x})")


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """I_x(a, b) for a, b > 0 and 0 <= x <= 1."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return x
    log_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                 + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def f_significance(f: float, d1: int, d2: int) -> float:
    """Upper-tail probability P(F > f) for an F(d1, d2) variate."""
    if not math.isfinite(f):
        if f == math.inf:
            return 0.0
        raise ValueError(f"F statistic must be finite, got {f}")
    if f < 0 or d1 < 1 or d2 < 1:
        raise ValueError(f"invalid arguments f={f}, d1={d1}, d2={d2}")
    return regularized_incomplete_beta(d2 / (d2 + d1 * f), d2 / 2.0, d1 / 2.0)


@dataclass(frozen=True)
class RegressionModel:
    slope: float
    intercept: float
    se_slope: float
    se_intercept: float
    r2: float
    se_estimate: float
    f_stat: float
    significance: float
    n_points: int
    sse: float

    @property
    def r(self) -> float:
        return math.copysign(math.sqrt(self.r2), self.slope)


def fit_simple_ols(x, y) -> RegressionModel:
    x = [float(v) for v in x]
    y = [float(v) for v in y]
    n = len(x)
    if n != len(y):
        raise ValueError(f"x and y lengths differ: {n} vs {len(y)}")
    if n < 3:
        raise DegenerateFitError(f"need at least 3 points, got {n}")
    mx = math.fsum(x) / n
    my = math.fsum(y) / n
    sxx = math.fsum((a - mx) ** 2 for a in x)
    if sxx == 0.0 or max(x) == min(x):
        raise DegenerateFitError("x is constant; slope is undefined")
    sxy = math.fsum((a - mx) * (b - my) for a, b in zip(x, y))
    syy = math.fsum((b - my) ** 2 for b in y)
    slope = sxy / sxx
    intercept = my - slope * mx
    sse = math.fsum((b - (slope * a + intercept)) ** 2 for a, b in zip(x, y))
    dof = n - 2
    mse = sse / dof
    se = math.sqrt(mse)
    se_slope = se / math.sqrt(sxx)
    se_intercept = se * math.sqrt(math.fsum(a * a for a in x) / (n * sxx))
    r2 = 1.0 - sse / syy if syy > 0 else 1.0
    ssr = slope * sxy
    f_stat = ssr / mse if mse > 0 else math.inf
    return RegressionModel(slope, intercept, se_slope, se_intercept, r2, se, f_stat,
                           f_significance(f_stat, 1, dof), n, sse)


def predict(model: RegressionModel, x: float) -> float:
    return model.slope * x + model.intercept


def regression_report(records, prop: str) -> dict:
    if prop not in PROPERTIES:
        raise ValueError(f"property must be one of {PROPERTIES}, got {prop!r}")
    records = list(records)
    if not records:
        raise DegenerateFitError("no records to fit")
    xs = [r.e_abs for r in records]
    ys = [getattr(r, prop) for r in records]
    model = fit_simple_ols(xs, ys)
    rows = []
    for rec, x, y in zip(records, xs, ys):
        yhat = predict(model, x)
        rows.append({"compound": rec.compound, "x": x, "y": y,
                     "predicted": yhat, "residual": y - yhat})
    return {
        "property": prop,
        "slope": model.slope, "intercept": model.intercept,
        "se_slope": model.se_slope, "se_intercept": model.se_intercept,
        "r2": model.r2, "se": model.se_estimate, "f": model.f_stat,
        "sf": model.significance, "rows": rows,
    }


def format_report_table(report: dict) -> str:
    head = (f"{report['property']} = {report['slope']:.5g}(+/-{report['se_slope']:.4g}) E_ABS"
            f" + {report['intercept']:.5g}(+/-{report['se_intercept']:.4g})\n"
            f"r2={report['r2']:.4f}  SE={report['se']:.5g}  F={report['f']:.7g}"
            f"  SF={report['sf']:.3g}\n")
    lines = [f"{'compound':<10}{'E_ABS':>10}{'observed':>12}{'predicted':>12}{'residual':>11}"]
    for row in report["rows"]:
        lines.append(f"{row['compound']:<10}{row['x']:>10.4f}{row['y']:>12.4f}"
                     f"{row['predicted']:>12.4f}{row['residual']:>11.4f}")
    return head + "\n".join(lines) + "\n"
