"""Named invariant suites, run by ``pasep2 verify``.

Each suite returns a list of :class:`Check`; a suite passes when every check does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import ansatz, bijections, chain, histories, permutations, qseries, states


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def _backends(size: int) -> list[Check]:
    out = []
    for q0 in (Fraction(1), Fraction(1, 2), Fraction(1, 3)):
        for N in range(1, size + 1):
            for r in range(N + 1):
                pi = chain.stationary_exact(chain.build_chain(N, r, q0))
                za = ansatz.z_total_ansatz(N, r)(q0)
                zp = histories.z_total_paths(N, r)(q0)
                bad = [
                    x
                    for x, p in pi.items()
                    if not (
                        p
                        == ansatz.z_poly_ansatz(states.ade_of_state(x))(q0) / za
                        == histories.z_poly_paths(states.ade_of_state(x))(q0) / zp
                    )
                ]
                out.append(Check(f"backends N={N} r={r} q={q0}", not bad, ", ".join(bad)))
    return out


def _perms(size: int) -> list[Check]:
    out = []
    for N in range(size + 1):
        for r in range(N + 1):
            bad = [
                X
                for X in states.enumerate_ade_words(N, r)
                if permutations.z_poly_perms(X) != histories.z_poly_paths(X)
            ]
            out.append(Check(f"perms vs paths N={N} r={r}", not bad, ", ".join(bad)))
    return out


def _closed_forms(size: int) -> list[Check]:
    out = []
    for N in range(size + 1):
        for r in range(N + 1):
            v = ansatz.z_total_ansatz(N, r)(1)
            expected = math.comb(N, r) * math.factorial(N + 1)
            out.append(Check(f"Z_{{{N},{r}}}(1)", v == expected, f"{v} vs {expected}"))
        z = histories.z_poly_paths("A" * N)
        out.append(Check(f"Z_{{{N},{N}}} = [{N + 1}]!", z == qseries.qfactorial(N + 1), str(z)))
    return out


def _recurrences(size: int) -> list[Check]:
    rep = ansatz.check_recurrences(size)
    return [Check(f"recurrences up to size {size}", rep.ok, rep.failure or f"{rep.checked} identities")]


def _factorization(size: int) -> list[Check]:
    out = []
    for N in range(size + 1):
        for r in range(N + 1):
            bad = []
            for X in states.enumerate_ade_words(N, r):
                try:
                    quo = qseries.div_exact(histories.z_poly_paths(X), qseries.qfactorial(r + 1))
                    if not quo.nonnegative():
                        bad.append(X)
                except qseries.NotDivisible:
                    bad.append(X)
            out.append(Check(f"[{r + 1}]! divides Z_X, N={N}", not bad, ", ".join(bad)))
    return out


def _bijections(size: int) -> list[Check]:
    out = []
    for n in range(1, size + 1):
        ok = all(
            bijections.marked_fv_inverse(bijections.marked_fv(s)) == s
            and histories.validate(bijections.marked_fv(s))
            for s in permutations.enumerate_psp(n)
        )
        out.append(Check(f"marked_fv round trip n={n}", ok))
        ok = all(
            bijections.psi_marked_inverse(bijections.psi_marked(H)) == H
            for H in histories.enumerate_histories(n)
        )
        out.append(Check(f"psi_marked round trip n={n}", ok))
        ok = True
        for H in histories.enumerate_histories(n, large=True):
            img = bijections.iota_llh(H)
            if not (
                bijections.iota_llh(img) == H
                and histories.validate(img)
                and histories.label_large(img) == states.iota_word(histories.label_large(H))
                and histories.total_weight(img) == histories.total_weight(H)
            ):
                ok = False
                break
        out.append(Check(f"iota involution n={n}", ok))
    return out


def _symmetry(size: int) -> list[Check]:
    out = []
    for N in range(1, size + 1):
        for r in range(N + 1):
            M = chain.build_chain(N, r, Fraction(1, 2))
            ok = all(
                M.prob(x, y) == M.prob(states.iota_state(x), states.iota_state(y))
                for x in M.states
                for y in M.states
            )
            out.append(Check(f"P symmetric N={N} r={r}", ok))
        bad = [
            X
            for r in range(N + 1)
            for X in states.enumerate_ade_words(N, r)
            if histories.z_poly_paths(X) != histories.z_poly_paths(states.iota_word(X))
        ]
        out.append(Check(f"Z_X = Z_iota(X), |X|={N}", not bad, ", ".join(bad)))
    return out


def _ansatz(size: int) -> list[Check]:
    out = []
    for d, kwargs in ((size, {}), (size, {"q0": 1, "a_is_d_plus_e": True})):
        try:
            rep = ansatz.verify_ansatz(d, **kwargs)
            out.append(Check(f"ansatz d={d} {kwargs or ''}".strip(), True, "; ".join(rep.checked)))
        except ansatz.RelationViolated as exc:
            out.append(Check(f"ansatz d={d} {kwargs or ''}".strip(), False, str(exc)))
    return out


def _lumping(size: int) -> list[Check]:
    out = []
    for N in range(1, size + 1):
        for r in range(N + 1):
            rep = chain.lumping_check_q1(N, r)
            out.append(Check(f"lumping N={N} r={r}", rep.ok, ", ".join(rep.failures or [])))
    return out


SUITES: dict[str, tuple[Callable[[int], list[Check]], int]] = {
    "backends": (_backends, 4),
    "perms": (_perms, 4),
    "closed-forms": (_closed_forms, 6),
    "recurrences": (_recurrences, 6),
    "factorization": (_factorization, 5),
    "bijections": (_bijections, 5),
    "symmetry": (_symmetry, 4),
    "ansatz": (_ansatz, 8),
    "lumping": (_lumping, 4),
}


def run_suite(name: str, size: int | None = None) -> list[Check]:
    fn, default = SUITES[name]
    return fn(default if size is None else size)
