"""Close-price ingestion, log returns, and descriptive statistics.

Missing or unparseable close values are repaired with the most recent prior
valid close; rows before the first valid close are dropped. Duplicate dates
keep the last occurrence in file order, mirroring revised end-of-day files.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from datetime import date
from pathlib import Path

import numpy as np
from scipy import stats as sps

from .exceptions import EmptyInputError, MalformedRowError, TooShortError
from .validation import as_float_1d

__all__ = [
    "PriceSeries",
    "ReturnSeries",
    "StatsSummary",
    "load_close_prices",
    "to_log_returns",
    "descriptive_stats",
]


@dataclass(frozen=True)
class PriceSeries:
    """Dated positive close prices, strictly increasing in date."""

    dates: tuple
    closes: np.ndarray

    def __len__(self) -> int:
        return len(self.dates)


@dataclass(frozen=True)
class ReturnSeries:
    """Dated log returns; one observation shorter than its price series."""

    dates: tuple
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.dates)


@dataclass(frozen=True)
class StatsSummary:
    n: int
    mean: float
    std_dev: float
    skewness: float
    excess_kurtosis: float
    jarque_bera: float
    ljung_box_lags: tuple
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mean": self.mean,
            "std_dev": self.std_dev,
            "skewness": self.skewness,
            "excess_kurtosis": self.excess_kurtosis,
            "jarque_bera": self.jarque_bera,
            "ljung_box_lags": [dict(e) for e in self.ljung_box_lags],
            "degenerate": self.degenerate,
        }


def _parse_close(raw) -> float:
    """Numeric, finite, positive close; anything else counts as missing."""
    if raw is None:
        return None
    raw = raw.strip()
    if not raw:
        return None
    try:
        v = float(raw)
    except ValueError:
        return None
    if not math.isfinite(v) or v <= 0:
        return None
    return v


def load_close_prices(source, date_col: str = "Date", close_col: str = "Close") -> PriceSeries:
    """Read a dated close-price CSV and repair missing values by forward fill.

    ``source`` may be a path, a text stream, or a binary stream (decoded as
    UTF-8). Dates must be ISO-8601 calendar days; an unparseable date raises
    MalformedRowError with its 1-based row number. A file with no valid close
    at all raises EmptyInputError.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return load_close_prices(fh, date_col, close_col)
    if isinstance(source, (bytes, bytearray)):
        return load_close_prices(io.StringIO(source.decode("utf-8")), date_col, close_col)
    if hasattr(source, "read") and isinstance(source.read(0), bytes):
        source = io.TextIOWrapper(source, encoding="utf-8", newline="")

    reader = csv.DictReader(source)
    if reader.fieldnames is None:
        raise EmptyInputError("CSV has no header row")
    for col in (date_col, close_col):
        if col not in reader.fieldnames:
            raise EmptyInputError(f"column {col!r} not in header {reader.fieldnames}")

    by_date = {}
    for row_number, row in enumerate(reader, start=2):
        raw_date = (row.get(date_col) or "").strip()
        try:
            d = date.fromisoformat(raw_date)
        except ValueError:
            raise MalformedRowError(row_number, f"unparseable date {raw_date!r}") from None
        by_date[d] = _parse_close(row.get(close_col))  # duplicate dates: last wins

    dates, closes = [], []
    last_valid = None
    for d in sorted(by_date):
        close = by_date[d]
        if close is None:
            if last_valid is None:
                continue  # leading gap: nothing to fill from
            close = last_valid
        last_valid = close
        dates.append(d)
        closes.append(close)
    if not dates:
        raise EmptyInputError("no valid close price in input")
    return PriceSeries(dates=tuple(dates), closes=np.asarray(closes, dtype=float))


def to_log_returns(prices: PriceSeries) -> ReturnSeries:
    """r_t = ln(close_t) - ln(close_{t-1}), dated by the later observation."""
    if len(prices) < 2:
        raise TooShortError("need at least 2 prices to form returns")
    values = np.diff(np.log(prices.closes))
    return ReturnSeries(dates=tuple(prices.dates[1:]), values=values)


def _ljung_box(x: np.ndarray, lag: int):
    n = x.size
    xc = x - x.mean()
    denom = float(np.dot(xc, xc))
    if denom == 0.0:
        return 0.0, 1.0
    acf = np.array([np.dot(xc[k:], xc[:-k]) / denom for k in range(1, lag + 1)])
    q = n * (n + 2.0) * np.sum(acf**2 / (n - np.arange(1, lag + 1)))
    return float(q), float(sps.chi2.sf(q, lag))


def descriptive_stats(returns, lb_lags=(5, 10, 20)) -> StatsSummary:
    """Sample moments, Jarque-Bera, and Ljung-Box on raw and squared returns.

    The reported standard deviation uses the unbiased (n-1) variance;
    skewness and excess kurtosis are the moment estimators that enter the
    Jarque-Bera statistic n/6 * (S^2 + K^2/4). A zero-variance series is
    reported with zero moments and the ``degenerate`` flag set.
    """
    x = as_float_1d(returns, "returns", min_len=8)
    n = x.size
    lb_lags = tuple(int(l) for l in lb_lags)
    if any(l < 1 or l >= n for l in lb_lags):
        raise ValueError(f"Ljung-Box lags must lie in [1, n), got {lb_lags}")

    mean = float(x.mean())
    xc = x - mean
    m2 = float(np.mean(xc**2))
    std_dev = float(np.sqrt(m2 * n / (n - 1)))
    degenerate = m2 == 0.0
    if degenerate:
        skew = kurt = jb = 0.0
    else:
        skew = float(np.mean(xc**3) / m2**1.5)
        kurt = float(np.mean(xc**4) / m2**2 - 3.0)
        jb = n / 6.0 * (skew**2 + kurt**2 / 4.0)

    entries = []
    for series_name, series in (("returns", x), ("squared_returns", x**2)):
        for lag in lb_lags:
            q, p = _ljung_box(series, lag)
            entries.append(
                {"series": series_name, "lag": lag, "statistic": q, "p_value": p}
            )
    return StatsSummary(
        n=n,
        mean=mean,
        std_dev=std_dev,
        skewness=skew,
        excess_kurtosis=kurt,
        jarque_bera=jb,
        ljung_box_lags=tuple(entries),
        degenerate=degenerate,
    )
