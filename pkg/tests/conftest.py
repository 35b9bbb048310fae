import time

import numpy as np
import pytest

from splmat.calibration import calibrate, case_study_targets


def numeric_centroid(s, step=0.01):
    """Midpoint-rule integration oracle, independent of the exact algebra."""
    xs = np.arange(0.0, 50.0, step) + step / 2.0
    xp = [x for x, _ in s.breakpoints]
    fp = [mu for _, mu in s.breakpoints]
    mus = np.interp(xs, xp, fp)
    area = mus.sum() * step
    if area == 0.0:
        raise ZeroDivisionError("zero area")
    return float((mus * xs).sum() * step / area)


@pytest.fixture(scope="session")
def calibration_run():
    """One shared full calibration run plus its wall-clock duration."""
    t0 = time.monotonic()
    result = calibrate(case_study_targets())
    elapsed = time.monotonic() - t0
    return result, elapsed
