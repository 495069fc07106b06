"""Exact colength measurements, symbol dynamics and limit formulas for the
quartic family u*v + alpha*x^2*y^2 + z^4 + x*y*z^2 + x^3*z + y^3*z.

Scalars are passed by their serialized form ("gf2^2:0x2"); every rational
comes back as a fractions.Fraction and every wide integer as a python int,
so no value is ever rounded on the way through.
"""

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import _core

__version__ = _core.__version__

element_degree = _core.element_degree
scalar_profile = _core.scalar_profile
degree_representatives = _core.degree_representatives

hk_number = _core.hk_number
hk_smoothed = _core.hk_smoothed

bracket_value = _core.bracket_value
bracket_sum = _core.bracket_sum
state = _core.state

d_seq = _core.d_seq
c_seq = _core.c_seq
curve_csv = _core.curve_csv


def _rat(s: str) -> Fraction:
    return Fraction(s)


def _arg(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def verify_point(alpha: str, n: int, j: int, workers: int = 0) -> Dict:
    report = _core.verify_point(alpha, n, j, workers)
    report["rhs"] = _rat(report["rhs"])
    return report


def sweep(max_n: int = 2, max_degree: int = 2, orbits_only: bool = True,
          include_j0: bool = False, workers: int = 0,
          time_budget_seconds: float = 0.0) -> Dict:
    summary = _core.sweep(max_n, max_degree, orbits_only, include_j0, workers,
                          time_budget_seconds)
    for report in summary["reports"]:
        report["rhs"] = _rat(report["rhs"])
    return summary


def reconcile(alpha: str, max_n: int, workers: int = 0) -> Dict:
    result = _core.reconcile(alpha, max_n, workers)
    for row in result["rows"]:
        row["predicted"] = int(row["predicted"])
    return result


def verify_lemmas(alpha: str, max_n: int, workers: int = 0) -> Dict:
    return _core.verify_lemmas(alpha, max_n, workers)


def predicted_en(m_alpha: int, case_equal: bool, n: int) -> int:
    return int(_core.predicted_en(m_alpha, case_equal, n))


def gf_eval(w, m: int) -> Fraction:
    return _rat(_core.gf_eval(_arg(w), m))


def gf_partial_sum(w, m: int, terms: int) -> Fraction:
    return _rat(_core.gf_partial_sum(_arg(w), m, terms))


def gf_tail_bound(w, terms: int) -> Fraction:
    return _rat(_core.gf_tail_bound(_arg(w), terms))


def ehk_s(m: int) -> Tuple[Fraction, Fraction]:
    e, s = _core.ehk_s(m)
    return _rat(e), _rat(s)


def closed_en(n: int, m: int) -> int:
    return int(_core.closed_en(n, m))


def scaled_coefficients(values: Sequence[int], scale: int = 16) -> List[int]:
    return [int(x) for x in _core.scaled_coefficients([str(v) for v in values], scale)]


def hadamard_product(a: Sequence[int], b: Sequence[int]) -> List[int]:
    return [int(x) for x in _core.hadamard_product([str(v) for v in a], [str(v) for v in b])]


def multi_param(ms: Sequence[int]) -> Tuple[Fraction, Fraction]:
    e, s = _core.multi_param(list(ms))
    return _rat(e), _rat(s)


def multi_param_via_series(ms: Sequence[int]) -> Fraction:
    return _rat(_core.multi_param_via_series(list(ms)))


def pi_coeff(ms: Sequence[int], n: int) -> int:
    return int(_core.pi_coeff(list(ms), n))


def monsky_reference(m_lambda: int) -> Fraction:
    return _rat(_core.monsky_reference(m_lambda))


def decimal_string(x, digits: int = 6) -> str:
    return _core.decimal_string(_arg(x), digits)


def pair_signature(alpha: str, a: int, c: int, workers: int = 0) -> Fraction:
    return _rat(_core.pair_signature(alpha, a, c, workers))


def sample_curve(alpha: str, c: int, a_max: int, workers: int = 0) -> List[Dict]:
    samples = _core.sample_curve(alpha, c, a_max, workers)
    for s in samples:
        s["t"] = _rat(s["t"])
        s["s"] = _rat(s["s"])
    return samples
