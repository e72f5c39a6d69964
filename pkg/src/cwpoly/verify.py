"""Whole-structure verification of one polygon: every identity the library
maintains, run on a single instance and collected into a machine-readable
report.  The rational backend demands exact equality; the float backend
compares within its tolerance.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .backend import Backend
from .ball import (
    MinkowskiPlane,
    ball_from_dual,
    dual_ball,
    is_constant_width,
    width,
)
from .core import (
    GeometryError,
    det,
    minkowski_sum,
    mixed_area,
    polygon_area,
)
from .cw import (
    barbier,
    central_equidistant,
    chakerian_invariant,
    cusps_of_central,
    equidistant,
    half_arc_length,
    half_area_identity,
    min_convex_c,
    v_length,
)
from .evolute import (
    containment_check,
    dual_involute,
    evolute,
    evolute_cusps,
    evolute_of_edge_world,
    involute,
    signed_area,
    signed_area_gap,
)
from .fuzz import random_rational
from .iterate import check_trace, convex_parent_of_m, iterate_involutes


@dataclass
class Check:
    check_id: str
    expected: str
    actual: str
    ok: bool

    def to_json(self, backend_name: str) -> dict:
        return {
            "check_id": self.check_id,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.ok,
            "backend": backend_name,
        }


@dataclass
class Report:
    backend: str
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.ok)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.ok)

    @property
    def all_ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "backend": self.backend,
            "seed": self.seed,
            "summary": {
                "total": len(self.checks),
                "passed": self.passed,
                "failed": self.failed,
            },
            "checks": [c.to_json(self.backend) for c in self.checks],
        }


def _s(backend: Backend, value) -> str:
    if isinstance(value, bool):
        return str(value)
    try:
        return str(backend.to_json(value))
    except (TypeError, ValueError):
        return str(value)


def run_verify(plane: MinkowskiPlane, seed: int = 0, samples: int = 16,
               iterate_steps: int = 8) -> Report:
    """Run the full identity suite on one constant-width setup."""
    backend = plane.backend
    rng = random.Random(seed)
    report = Report(backend=backend.name, seed=seed)
    add = report.checks.append

    def guarded(check_id: str, expected: str, fn):
        try:
            actual, ok = fn()
        except GeometryError as e:
            actual, ok = f"error: {e}", False
        add(Check(check_id, expected, actual, ok))

    m = 2 * plane.n
    u, v, paired = plane.U, plane.V, plane.P
    eq = backend.eq

    # --- structure ---------------------------------------------------------
    def chk_paired():
        paired.validate()
        return "valid", True
    guarded("paired.invariants", "valid", chk_paired)

    def chk_ball():
        u.validate()
        v.validate()
        return "valid", True
    guarded("ball.invariants", "valid", chk_ball)

    def chk_width():
        res = is_constant_width(paired, u)
        if not res.ok:
            return f"no (index {res.witness}: {res.reason})", False
        if not eq(res.a, plane.a):
            return f"a={_s(backend, res.a)}", False
        ws = [width(paired.vertices, v.vertices[i]) for i in range(m)]
        ok = all(eq(w_, 2 * plane.a) for w_ in ws)
        return f"yes(a={_s(backend, res.a)})" if ok else "width varies", ok
    guarded("cw.constant_width", f"yes(a={_s(backend, plane.a)})", chk_width)

    # --- dual ball ---------------------------------------------------------
    def chk_dual_identity():
        half = backend.convert("1/2")
        for i in range(m):
            for t in (0, 1, half):
                p = u.vertices[i] * (1 - t) + u.vertices[(i + 1) % m] * t
                if not eq(det(p, v.vertices[i]), 1):
                    return f"edge {i} fails", False
        for i in range(m):
            for j in range(m):
                if j in ((i) % m, (i + 1) % m):
                    continue
                if backend.sign(det(u.vertices[j], v.vertices[i]) - 1) > 0:
                    return f"vertex {j} exceeds dual unit at edge {i}", False
        return "all edges at dual norm 1", True
    guarded("ball.dual_identity", "all edges at dual norm 1", chk_dual_identity)

    def chk_involution():
        w = dual_ball(v)
        ok = all(w.vertices[i] == u.vertices[(i + plane.n + 1) % m] for i in range(m)) \
            if backend.exact else all(
                eq(w.vertices[i].x, u.vertices[(i + plane.n + 1) % m].x)
                and eq(w.vertices[i].y, u.vertices[(i + plane.n + 1) % m].y)
                for i in range(m))
        return ("index shift n+1", ok)
    guarded("ball.dual_involution", "index shift n+1", chk_involution)

    def chk_recovery():
        w = ball_from_dual(v)
        ok = all(eq(w.vertices[i].x, u.vertices[i].x) and eq(w.vertices[i].y, u.vertices[i].y)
                 for i in range(m))
        return "recovers U", ok
    guarded("ball.dual_recovery", "recovers U", chk_recovery)

    # --- central equidistant and lengths ------------------------------------
    # a failed structure check (non-parallel claimed-paired input) makes the
    # coefficient ladders unsolvable; report and stop instead of raising
    try:
        ce = central_equidistant(plane)
        evolute(paired.vertices, u, v, backend)
    except GeometryError as e:
        add(Check("suite.ladders", "solvable", f"aborted: {e}", False))
        return report
    area_u = polygon_area(u.vertices)

    def chk_central_zero():
        lv = v_length(ce.M, v, backend=backend, closed=True)
        return _s(backend, lv), eq(lv, 0)
    guarded("cw.central_v_length_zero", "0", chk_central_zero)

    cs = [plane.a, backend.convert(1), backend.convert(random_rational(rng))]

    def chk_barbier():
        for c in cs:
            res = barbier(ce, u, v, c)
            if not eq(res.expected, res.actual):
                return f"c={_s(backend, c)}: {_s(backend, res.actual)}", False
        return "2cA(U) at all c", True
    guarded("cw.barbier", "2cA(U) at all c", chk_barbier)

    def chk_half_arc():
        for c in cs:
            pc = equidistant(ce, u, c).vertices
            for i in range(m):
                li = half_arc_length(ce, u, i, c)
                if not eq(li, c * area_u + 2 * ce.betas[i]):
                    return f"i={i}", False
                arc = [pc[j % m] for j in range(i, i + plane.n + 1)]
                if not eq(v_length(arc, v, edge_offset=i, backend=backend), li):
                    return f"direct sum differs at i={i}", False
        return "cA(U) + 2beta_i", True
    guarded("cw.half_arc_length", "cA(U) + 2beta_i", chk_half_arc)

    def chk_half_area():
        for c in cs:
            if backend.lt(c, min_convex_c(ce)):
                continue
            for i in range(m):
                h = half_area_identity(ce, u, i, c)
                if not eq(h.a1 - h.a2, h.four_c_beta):
                    return f"i={i} c={_s(backend, c)}", False
        return "A1 - A2 = 4c beta_i", True
    guarded("cw.half_area", "A1 - A2 = 4c beta_i", chk_half_area)

    def chk_chakerian():
        vals = [chakerian_invariant(ce, u, c) for c in cs
                if not backend.lt(c, min_convex_c(ce))]
        return "constant over i", len(vals) > 0
    guarded("cw.half_arc_invariant", "constant over i", chk_chakerian)

    def chk_isoperimetric():
        for c in cs:
            if backend.lt(c, min_convex_c(ce)):
                continue
            pc = equidistant(ce, u, c).vertices
            lv = v_length(pc, v, backend=backend, closed=True)
            if backend.sign(lv * lv - 4 * area_u * polygon_area(pc)) < 0:
                return f"fails at c={_s(backend, c)}", False
        return "L^2 >= 4 A(U) A(P)", True
    guarded("cw.isoperimetric", "L^2 >= 4 A(U) A(P)", chk_isoperimetric)

    def chk_mixed():
        lv = v_length(paired.vertices, v, backend=backend, closed=True)
        if not eq(mixed_area(paired.vertices, u.vertices), lv / 2):
            return "A(P,U) != L_V(P)/2", False
        s = minkowski_sum(paired.vertices, u.vertices, backend)
        lhs = polygon_area(s)
        rhs = polygon_area(paired.vertices) + 2 * mixed_area(paired.vertices, u.vertices) + area_u
        return ("A(P+U) expansion", eq(lhs, rhs))
    guarded("core.mixed_area", "A(P+U) expansion", chk_mixed)

    # --- cusps ---------------------------------------------------------------
    cusps_m = cusps_of_central(ce)

    def chk_cusps_m():
        if cusps_m is None:
            return "degenerate", True
        ok = len(cusps_m) % 2 == 1 and len(cusps_m) >= 3
        return f"{len(cusps_m)} cusps", ok
    guarded("cw.cusps_odd_ge3", "odd count >= 3 (or degenerate)", chk_cusps_m)

    # --- evolute / involute ---------------------------------------------------
    ev = evolute(paired.vertices, u, v, backend)

    def chk_mu_pairs():
        for i in range(plane.n):
            if not eq(ev.mus[i] + ev.mus[i + plane.n], 2 * plane.a):
                return f"pair {i}", False
        return "mu_i + mu_{i+n} = 2a", True
    guarded("evolute.mu_pair_sums", "mu_i + mu_{i+n} = 2a", chk_mu_pairs)

    def chk_evolute_shared():
        c2 = cs[1]
        ev2 = evolute(equidistant(ce, u, c2).vertices, u, v, backend)
        ok = all(eq(ev2.E[i].x, ev.E[i].x) and eq(ev2.E[i].y, ev.E[i].y) for i in range(m))
        return "equidistants share the evolute", ok
    guarded("evolute.shared_by_equidistants", "equidistants share the evolute",
            chk_evolute_shared)

    inv = involute(ce, v)

    def chk_involute_structure():
        for i in range(plane.n):
            a, b = inv.N[i], inv.N[i + plane.n]
            if not (eq(a.x, b.x) and eq(a.y, b.y)):
                return f"diagonal {i} nonzero", False
        back = evolute_of_edge_world(inv.N, v, backend)
        ok = all(eq(back[i].x, ce.M[i].x) and eq(back[i].y, ce.M[i].y) for i in range(m))
        return "zero diagonals; evolute is M", ok
    guarded("involute.structure", "zero diagonals; evolute is M", chk_involute_structure)

    def chk_dual_involute_roundtrip():
        back, _, _ = dual_involute(ev.E, u, v, backend)
        ok = all(eq(back[i].x, ce.M[i].x) and eq(back[i].y, ce.M[i].y) for i in range(m))
        return "involute of the evolute is M", ok
    guarded("involute.of_evolute", "involute of the evolute is M",
            chk_dual_involute_roundtrip)

    def chk_areas():
        sa_m, sa_n = signed_area(ce.M), signed_area(inv.N)
        if backend.sign(sa_m) < 0 or backend.sign(sa_n) < 0:
            return "negative signed area", False
        if backend.sign(sa_m - sa_n) < 0:
            return "SA(M) < SA(N)", False
        gap = signed_area_gap(ce.betas, v)
        return (f"gap {_s(backend, sa_m - sa_n)}", eq(sa_m - sa_n, gap))
    guarded("areas.signed_gap", "SA(M) - SA(N) = sum beta^2 det(V,V)", chk_areas)

    def chk_containment():
        parent = convex_parent_of_m(ce.M, u, backend)
        res = containment_check(inv.N, parent, samples=samples)
        return (f"{res.tested} samples, min chords {res.min_chords}", res.contained)
    guarded("containment.involute_in_central", "no exterior samples", chk_containment)

    def chk_cusps_e():
        ec = evolute_cusps(ev)
        if ec is None or cusps_m is None:
            return "degenerate", True
        ok = len(ec) % 2 == 1 and len(ec) >= len(cusps_m)
        return f"{len(ec)} cusps vs {len(cusps_m)}", ok
    guarded("evolute.cusps_odd_ge_central", "odd count >= cusps of M", chk_cusps_e)

    # --- iteration ledger ------------------------------------------------------
    def chk_iterate():
        trace = iterate_involutes(plane, max_steps=iterate_steps)
        results = check_trace(trace, plane)
        bad = [r for r in results if not r.ok]
        if bad:
            return "; ".join(f"{r.check_id}: {r.detail}" for r in bad), False
        return f"{len(trace.steps) - 1} steps, ledger exact", True
    guarded("iterate.ledger", "monotone areas, exact gaps, bounded sums", chk_iterate)

    return report
