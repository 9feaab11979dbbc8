"""Published worked examples, recomputed and compared with their stated values.

``pasep2 reproduce-paper`` runs :func:`run_all` and exits non-zero on any mismatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import ansatz, bijections, chain, histories, permutations, qseries, states
from .histories import History


def _path(text: str, large: bool = False) -> History:
    return History.parse(text, large)


# size-8 Laguerre history of permutation 25783641, weight word 00010100
LAGUERRE_8 = _path("R0 L0 R0 X1 L0 F1 L0 F0")
# its marked version for 2~5783 6 4~1, label ADADEDE, total weight 5
MARKED_8 = _path("R0 L1* R0 X3* L0 F1 L0 F0")
# marked large history of label ADADEEE and its image under iota
LARGE_MARKED_7 = _path("R1* L0 L2* R1 F0 X1 F0", large=True)
IOTA_IMAGE_7 = _path("R0 L1 R1 F0 L2* X0 F1*", large=True)
# Psi images of LAGUERRE_8 / MARKED_8 as given by the Psi table
PSI_8 = _path("R0 L0 X0 R1 F0 L1 F0", large=True)
PSI_MARKED_8 = _path("R1* L0 L2* R1 F0 L1 F0", large=True)
# the ten-step path used to illustrate opposing steps
OPPOSING_10 = _path("R0 R0 F0 X0 R0 R0 F0 L0 F0 F0", large=True)

SIGMA = permutations.PSP.parse("2~ 5 7 8 3 6 4~ 1")
CLASS_SEED = permutations.PSP.parse("2~ 7 3 4~ 5 1 8 6")
CLASS_MEMBERS = {
    "2~ 5 1 7 3 4~ 8 6",
    "2~ 7 3 4~ 5 1 8 6",
    "5 1 2~ 7 3 4~ 8 6",
    "5 1 7 3 4~ 2~ 8 6",
    "7 3 4~ 2~ 5 1 8 6",
    "7 3 4~ 5 1 2~ 8 6",
}


@dataclass
class Example:
    name: str
    compute: Callable[[], Any]
    expected: Any


@dataclass
class Outcome:
    name: str
    ok: bool
    got: str
    expected: str


def _pi(N, r, q, x):
    return chain.stationary_exact(chain.build_chain(N, r, q))[x]


EXAMPLES: list[Example] = [
    Example("ade of state b g o", lambda: states.ade_of_state("bgo"), "DAE"),
    Example("iota word ADADEEE", lambda: states.iota_word("ADADEEE"), "DDDEAEA"),
    Example(
        "Des/Seg of 1|2|1,2,2",
        lambda: (sorted(states.SegComposition.parse("1|2|1,2,2").des),
                 sorted(states.SegComposition.parse("1|2|1,2,2").seg)),
        ([4, 6], [1, 3]),
    ),
    Example("ade(1|2|1,2,2)", lambda: states.segcomp_to_ade(states.SegComposition.parse("1|2|1,2,2")), "ADAEDED"),
    Example("ade(1|2|2,2,1)", lambda: states.segcomp_to_ade(states.SegComposition.parse("1|2|2,2,1")), "ADADEDE"),
    Example("segcomp of ADAEDED", lambda: str(states.ade_to_segcomp("ADAEDED")), "1|2|1,2,2"),
    Example("marked history is valid", lambda: bool(histories.validate(MARKED_8)), True),
    Example("marked history total weight", lambda: histories.total_weight(MARKED_8), 5),
    Example("marked history label", lambda: histories.label(MARKED_8), "ADADEDE"),
    Example("Laguerre history weight word", lambda: "".join(map(str, LAGUERRE_8.weights)), "00010100"),
    Example("Laguerre history total weight", lambda: histories.total_weight(LAGUERRE_8), 2),
    Example("large marked history label", lambda: histories.label_large(LARGE_MARKED_7), "ADADEEE"),
    Example("Z_DDE(1)", lambda: histories.z_poly_paths("DDE")(1), 7),
    Example("Z_DAE(1)", lambda: histories.z_poly_paths("DAE")(1), 14),
    Example("Z_{3,1}(1) paths", lambda: histories.z_total_paths(3, 1)(1), 72),
    Example("Z_{r,r} = [r+1]! paths, r<=4",
            lambda: all(histories.z_total_paths(r, r) == qseries.qfactorial(r + 1) for r in range(5)), True),
    Example("m_1^0, m_1^1", lambda: (histories.m_n_k(1, 0), histories.m_n_k(1, 1)), (qseries.ONE, qseries.ONE)),
    Example("opposing step of step 5", lambda: histories.opposing_step(OPPOSING_10, 4) + 1, 9),
    Example("tw of 2~5783 6 4~1", lambda: permutations.tw_stat(SIGMA), 5),
    Example("31-2 count of 2~5783 6 4~1", lambda: permutations.count_31_2(SIGMA), 2),
    Example("(31,2~) count of 2~5783 6 4~1", lambda: permutations.count_31_bar2(SIGMA), 3),
    Example("GDes", lambda: sorted(permutations.gdes(SIGMA)), [6, 8]),
    Example("GC", lambda: str(permutations.gc(SIGMA)), "1|2|2,2,1"),
    Example("ade(GC) = label(marked FV)",
            lambda: (permutations.ade_of_psp(SIGMA), histories.label(bijections.marked_fv(SIGMA))),
            ("ADADEDE", "ADADEDE")),
    Example("B'_2", lambda: sorted(str(s) for s in permutations.enumerate_psp(2)), ["1 2", "1 2~", "2 1", "2~ 1"]),
    Example("Z_DAE(1) permutations", lambda: permutations.z_poly_perms("DAE")(1), 14),
    Example("equivalence class", lambda: {str(t) for t in permutations.equivalence_class(CLASS_SEED)}, CLASS_MEMBERS),
    Example("fv(25783641)", lambda: bijections.fv((2, 5, 7, 8, 3, 6, 4, 1)), LAGUERRE_8),
    Example("fv inverse", lambda: bijections.fv_inverse(LAGUERRE_8), (2, 5, 7, 8, 3, 6, 4, 1)),
    Example("marked fv", lambda: bijections.marked_fv(SIGMA), MARKED_8),
    Example("marked fv inverse", lambda: str(bijections.marked_fv_inverse(MARKED_8)), str(SIGMA)),
    Example("psi", lambda: bijections.psi(LAGUERRE_8), PSI_8),
    Example("psi marked", lambda: bijections.psi_marked(MARKED_8), PSI_MARKED_8),
    Example("psi marked inverse", lambda: bijections.psi_marked_inverse(PSI_MARKED_8), MARKED_8),
    Example("iota on large marked history", lambda: bijections.iota_llh(LARGE_MARKED_7), IOTA_IMAGE_7),
    Example("iota image label", lambda: histories.label_large(IOTA_IMAGE_7), "DDDEAEA"),
    Example("D at d=2", lambda: ansatz.build_matrices(2).D,
            [[qseries.ONE, qseries.ONE], [qseries.ZERO, qseries.qint(2)]]),
    Example("q=1, A = D + E", lambda: len(ansatz.verify_ansatz(6, q0=1, a_is_d_plus_e=True).checked), 5),
    Example("Z_DAE(1) ansatz", lambda: ansatz.z_poly_ansatz("DAE")(1), 14),
    Example("Z_{3,1}(1) ansatz", lambda: ansatz.z_total_ansatz(3, 1)(1), 72),
    Example("Z_{r,r} ansatz, r<=5",
            lambda: all(ansatz.z_total_ansatz(r, r) == qseries.qfactorial(r + 1) for r in range(6)), True),
    Example("Z_{N,0}(1) = (N+1)!, N<=6",
            lambda: all(ansatz.z_total_ansatz(N, 0)(1) == math.factorial(N + 1) for N in range(7)), True),
    Example("Z_A = [2]!", lambda: ansatz.z_poly_ansatz("A"), qseries.qfactorial(2)),
    Example("Z_AE = [2] Z_A", lambda: ansatz.z_poly_ansatz("AE"), qseries.qint(2) * ansatz.z_poly_ansatz("A")),
    Example("P(ogg -> bgg), N=3 r=2", lambda: chain.build_chain(3, 2, 1).prob("ogg", "bgg"), Fraction(1, 4)),
    Example("P(bgg -> gbg), q=1/2", lambda: chain.build_chain(3, 2, Fraction(1, 2)).prob("bgg", "gbg"), Fraction(1, 4)),
    Example("P(gbg -> bgg), q=1/2", lambda: chain.build_chain(3, 2, Fraction(1, 2)).prob("gbg", "bgg"), Fraction(1, 8)),
    Example("P(bgg->gbg) = P(ggo->gog)",
            lambda: (chain.build_chain(3, 2, Fraction(1, 3)).prob("bgg", "gbg")
                     == chain.build_chain(3, 2, Fraction(1, 3)).prob("ggo", "gog")), True),
    Example("pi(b g o), q=1", lambda: _pi(3, 1, 1, "bgo"), Fraction(14, 72)),
    Example("pi(b b o), pi(b o o), q=1", lambda: (_pi(3, 0, 1, "bbo"), _pi(3, 0, 1, "boo")),
            (Fraction(7, 24), Fraction(7, 24))),
    Example("lumping at b g o",
            lambda: _pi(3, 1, 1, "bgo") == Fraction(1, 3) * (_pi(3, 0, 1, "bbo") + _pi(3, 0, 1, "boo")), True),
]


def run_all() -> list[Outcome]:
    out = []
    for ex in EXAMPLES:
        try:
            got = ex.compute()
            ok = got == ex.expected
        except Exception as exc:  # report, never abort the batch
            got, ok = f"{type(exc).__name__}: {exc}", False
        out.append(Outcome(ex.name, ok, str(got), str(ex.expected)))
    return out
