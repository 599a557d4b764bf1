"""Exact regression checks behind ``buffercolour verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .analysis import (
    crown_b2_mean,
    crown_b2_mean_closed,
    crown_b2_mean_printed,
    crown_b2_pmf,
    crown_b2_tail,
    performance_ratio,
)
from .colourer import exact_outcome_distribution, first_fit
from .graph import alternate_order, crown_graph, from_one_based, kneser_graph

PETERSEN_THREE_COLOUR_ORDER = (8, 1, 5, 7, 6, 2, 10, 4, 3, 9)
PETERSEN_FOUR_COLOUR_ORDER = (9, 7, 5, 8, 1, 6, 3, 2, 4, 10)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    note: bool = False  # informational finding, never a failure

    def line(self) -> str:
        tag = "NOTE" if self.note else ("PASS" if self.passed else "FAIL")
        return f"[{tag}] {self.suite}: {self.name}" + (f" -- {self.detail}" if self.detail else "")


def crown_checks() -> list[Check]:
    out = []
    for n in range(3, 8):
        dist = exact_outcome_distribution(crown_graph(n), alternate_order(n), 2)
        want = crown_b2_pmf(n)
        out.append(Check("crown", f"b=2 pmf n={n}", dist.pmf == want, str(dist)))
        bad = [m for m in range(2, n + 1) if dist.tail(m) != crown_b2_tail(n, m)]
        out.append(Check("crown", f"b=2 tails n={n}", not bad, f"mismatch at m={bad}" if bad else ""))
    wrong = [n for n in range(2, 11) if crown_b2_mean(n) != crown_b2_mean_closed(n)]
    out.append(
        Check(
            "crown",
            "pmf mean equals 3 - 2^-(n-2) for n=2..10",
            not wrong,
            f"failed for n={wrong}" if wrong else "",
        )
    )
    differs = [n for n in range(2, 11) if crown_b2_mean(n) != crown_b2_mean_printed(n)]
    out.append(
        Check(
            "crown",
            "printed mean 3 - 2^-n disagrees with the pmf",
            True,
            f"differs for n={differs[0]}..{differs[-1]}; e.g. n=4: pmf mean "
            f"{crown_b2_mean(4)} vs printed {crown_b2_mean_printed(4)}",
            note=True,
        )
    )
    ff_bad = [
        n for n in range(2, 101) if first_fit(crown_graph(n), alternate_order(n)).count != n
    ]
    out.append(
        Check(
            "crown",
            "first fit, alternate order uses n colours for n=2..100",
            not ff_bad,
            f"failed for n={ff_bad}" if ff_bad else f"ratio n/2, e.g. n=100: {performance_ratio(100, 2)}",
        )
    )
    return out


def props_checks() -> list[Check]:
    out = []
    for n in range(3, 7):
        g, order = crown_graph(n), alternate_order(n)
        d2 = exact_outcome_distribution(g, order, 2)
        d3 = exact_outcome_distribution(g, order, 3)
        out.append(Check("props", f"b=3 law equals b=2 law n={n}", d2.pmf == d3.pmf, str(d3)))
    for n in range(2, 7):
        d4 = exact_outcome_distribution(crown_graph(n), alternate_order(n), 4)
        out.append(Check("props", f"b=4 always 2 colours n={n}", d4.pmf == {2: Fraction(1)}, str(d4)))
    return out


def petersen_checks() -> list[Check]:
    g = kneser_graph(5, 2)
    out = []
    a = from_one_based(PETERSEN_THREE_COLOUR_ORDER)
    ff = first_fit(g, a).count
    out.append(Check("petersen", "order 8,1,5,7,6,2,10,4,3,9 b=1 uses 4", ff == 4, f"got {ff}"))
    d = exact_outcome_distribution(g, a, 2)
    out.append(Check("petersen", "order 8,1,5,7,6,2,10,4,3,9 b=2 always 3", d.pmf == {3: 1}, str(d)))
    c = from_one_based(PETERSEN_FOUR_COLOUR_ORDER)
    ff = first_fit(g, c).count
    out.append(Check("petersen", "order 9,7,5,8,1,6,3,2,4,10 b=1 uses 3", ff == 3, f"got {ff}"))
    d = exact_outcome_distribution(g, c, 2)
    out.append(
        Check("petersen", "order 9,7,5,8,1,6,3,2,4,10 b=2 can use 3 or 4", {3, 4} <= d.support, str(d))
    )
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "crown": crown_checks,
    "props": props_checks,
    "petersen": petersen_checks,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
