"""Derive standard-module decomposition rows from scratch.

For each restricted highest weight, the positive-layer sum of the standard
filtration bounds the composition multiplicities of the radical: peeling it
against the already-solved simples gives per-factor upper bounds b, with
the true multiplicity m satisfying m = 0 iff b = 0 and 1 <= m <= b
otherwise.  Rows with some b > 1 are settled by brute force over the
finitely many candidates, kept only when the resulting character is
positive, has leading coefficient one, has the full support of the
characteristic-zero character (valid at good primes, which is all this
solver is used for), and lets the tensor products of solved fundamental
simples with solved simples still decompose nonnegatively.  When several
candidates survive locally the search branches; a branch dies when a later
row admits none.  Exactly one branch may survive overall.
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tmcv.characters import (  # noqa: E402
    DomMap,
    OracleMismatch,
    _peel,
    dom_restrict,
    expand_dom,
    jantzen_character_dom,
    mul_full,
    twist_full,
    weyl_character_dom,
)
from tmcv.rootsystems import Weight, root_system, wsub  # noqa: E402

Row = dict[Weight, int]


def solve_decomposition(name: str, p: int) -> dict[Weight, Row]:
    """Decomposition rows for all restricted weights of the system."""
    rs = root_system(name)
    two_rho = tuple(
        sum(rs.covector(b)[i] for b in rs.positive_roots) for i in range(rs.rank)
    )

    def ht(w: Weight) -> tuple[int, Weight]:
        return sum(a * b for a, b in zip(two_rho, w)), w

    order = sorted(rs.restricted_weights(p), key=ht)
    chis = {lam: weyl_character_dom(name, lam) for lam in order}
    sfs = {lam: jantzen_character_dom(name, p, lam) for lam in order}
    funds = [
        tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)
    ]

    def chl_dom(solved: dict[Weight, DomMap], mu: Weight) -> DomMap:
        if rs.is_restricted(mu, p):
            return solved[mu]
        base, rest = rs.restricted_split(mu, p)
        prod = mul_full(
            expand_dom(name, chl_dom(solved, base)),
            twist_full(expand_dom(name, chl_dom(solved, rest)), p),
        )
        return dom_restrict(name, prod)

    def tensor_sieve(solved: dict[Weight, DomMap], lam: Weight) -> bool:
        """Products of a solved fundamental simple with a solved simple
        whose top weight is exactly lam must decompose nonnegatively."""
        for fund in funds:
            if fund not in solved:
                continue
            other = wsub(lam, fund)
            if any(x < 0 for x in other) or other not in solved:
                continue
            prod = dom_restrict(
                name,
                mul_full(
                    expand_dom(name, solved[fund]), expand_dom(name, solved[other])
                ),
            )
            try:
                _peel(name, prod, lambda mu: chl_dom(solved, mu), allow_negative=False)
            except OracleMismatch:
                return False
        return True

    def local_candidates(
        solved: dict[Weight, DomMap], lam: Weight
    ) -> list[tuple[Row, DomMap]]:
        chi = chis[lam]
        try:
            bounds = _peel(
                name, sfs[lam], lambda mu: chl_dom(solved, mu), allow_negative=False
            )
        except OracleMismatch:
            return []
        mus = sorted((mu for mu, b in bounds.items() if b), key=ht, reverse=True)
        out = []
        for picks in itertools.product(*(range(1, bounds[mu] + 1) for mu in mus)):
            cand = dict(chi)
            for mu, m in zip(mus, picks):
                for w, c in chl_dom(solved, mu).items():
                    nv = cand.get(w, 0) - m * c
                    if nv:
                        cand[w] = nv
                    else:
                        cand.pop(w, None)
            if not (
                all(c > 0 for c in cand.values())
                and cand.get(lam) == 1
                and set(cand) == set(chi)
            ):
                continue
            solved[lam] = cand
            ok = tensor_sieve(solved, lam)
            del solved[lam]
            if ok:
                out.append(({lam: 1, **dict(zip(mus, picks))}, cand))
        return out

    solutions: list[dict[Weight, Row]] = []

    def search(idx: int, solved: dict[Weight, DomMap], rows: dict[Weight, Row]) -> None:
        if idx == len(order):
            solutions.append(dict(rows))
            if len(solutions) > 1:
                raise RuntimeError(f"{name} p={p}: multiple global solutions")
            return
        lam = order[idx]
        for row, cand in local_candidates(solved, lam):
            solved[lam] = cand
            rows[lam] = row
            search(idx + 1, solved, rows)
            del solved[lam]
            del rows[lam]

    search(0, {}, {})
    if len(solutions) != 1:
        raise RuntimeError(f"{name} p={p}: {len(solutions)} global solutions")
    return solutions[0]


if __name__ == "__main__":
    name, p = sys.argv[1], int(sys.argv[2])
    rows = solve_decomposition(name, p)
    for lam in sorted(rows):
        nontriv = {m: c for m, c in rows[lam].items() if m != lam}
        print(lam, nontriv if nontriv else "simple")
