"""Command-line interface.

Problem files are JSON objects::

    {"ambient_rank": 1,
     "semigroup_generators": [[2], [3]],
     "ideal_generators": [[2], [3]],
     "markov_basis": [[3, -2]],        # optional
     "lambda": "1/2",                  # optional
     "degree_bound": 20,               # optional
     "seed": 0}                        # optional

Exit status: 0 success, 1 invalid input, 2 computational budget exceeded,
3 a ``verify`` check failed.
"""

import argparse
import json
import random
import sys
from fractions import Fraction
from itertools import product

from . import jacobian, multiplier, polyhedra, resolution, toric_ideal
from .errors import BudgetError, InputError
from .semigroup import elements_up_to, normalize_coordinates

COMMANDS = ("log-jacobian", "jacobian", "markov", "newton", "membership", "generators",
            "threshold", "jumping", "verify")

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_CHECK_FAILED = 0, 1, 2, 3


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)


def _vec(v):
    return [_num(x) for x in v]


def parse_rational(text) -> Fraction:
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse {text!r} as a rational p/q")
    if value < 0:
        raise InputError(f"lambda must be nonnegative, got {value}")
    return value


def parse_vector(text):
    try:
        return tuple(int(x) for x in str(text).split(","))
    except ValueError:
        raise InputError(f"cannot parse {text!r} as a comma separated integer vector")


class Problem:
    def __init__(self, data: dict):
        try:
            self.rank = int(data["ambient_rank"])
            raw_gens = [tuple(int(x) for x in g) for g in data["semigroup_generators"]]
            self.raw_ideal = [tuple(int(x) for x in g) for g in data.get("ideal_generators", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed problem file: {exc}")
        for v in raw_gens + self.raw_ideal:
            if len(v) != self.rank:
                raise InputError(f"vector {list(v)} does not have length ambient_rank={self.rank}")
        self.markov_vectors = data.get("markov_basis")
        self.lam = parse_rational(data["lambda"]) if "lambda" in data else None
        self.degree_bound = data.get("degree_bound")
        if self.degree_bound is not None and int(self.degree_bound) < 1:
            raise InputError("degree_bound must be at least 1")
        self.seed = int(data.get("seed", 0))
        self.S = normalize_coordinates(raw_gens)
        self._markov = None
        self._ctx = None

    @property
    def markov(self):
        if self._markov is None:
            if self.markov_vectors is not None:
                self._markov = toric_ideal.accept_user_basis(self.S, self.markov_vectors)
            else:
                self._markov = toric_ideal.markov_basis(self.S)
        return self._markov

    @property
    def ctx(self):
        if self._ctx is None:
            if not self.raw_ideal:
                raise InputError("ideal_generators is required for this command")
            exps = [self.S.from_raw(v) for v in self.raw_ideal]
            self._ctx = multiplier.build_context(self.S, exps, self.markov)
        return self._ctx


def _polyhedron_json(V):
    H = polyhedra.vrep_to_hrep(V)
    R = polyhedra.reduce_vrep(V)
    return {"vertices": [_vec(p) for p in R.points], "rays": [list(r) for r in R.rays],
            "inequalities": [{"normal": list(n), "bound": _num(b)} for n, b in H.inequalities]}


def _sample_pairs(prob, ctx, samples, seed, degree_bound):
    rng = random.Random(seed)
    elems = sorted(elements_up_to(prob.S, degree_bound))
    pairs = []
    for _ in range(samples):
        m = rng.choice(elems)
        q = rng.randint(1, 6)
        pairs.append((m, Fraction(rng.randint(0, 3 * q), q)))
    return pairs


def run_verify(prob, samples, seed, degree_bound):
    ctx = prob.ctx
    jd = ctx.jd
    checks = []
    checks.append(("minor_congruence", jacobian.check_all_minor_congruences(jd, 10, seed)))
    checks.append(("lemma_identity", jacobian.check_lemma_identity(jd)))
    checks.append(("intrinsic_q", jacobian.check_intrinsic_q(jd)))
    fan = resolution.build_resolution(ctx)
    report = resolution.verify_resolution(fan)
    checks.append(("resolution_valid", report.passed))
    pairs = _sample_pairs(prob, ctx, samples, seed, degree_bound)
    agree = all(multiplier.mj_membership(ctx, m, lam) == resolution.oracle_membership(fan, m, lam)
                for m, lam in pairs)
    checks.append(("formula_vs_oracle", agree))
    consistent = all(multiplier.mj_membership(ctx, m, lam)
                     == multiplier.mj_threshold(ctx, m).admits(lam) for m, lam in pairs)
    checks.append(("threshold_consistency", consistent))
    radius = 6 if prob.S.d <= 2 else 3
    box = list(product(range(-radius, radius + 1), repeat=prob.S.d))
    outside = [m for lam in sorted({lam for _, lam in pairs})
               for m in multiplier.lattice_points_outside_semigroup(ctx, lam, box)]
    checks.append(("interior_points_in_semigroup", not outside))
    out = {"checks": [{"name": n, "passed": ok} for n, ok in checks],
           "samples": samples, "seed": seed,
           "fan_rays": [list(r) for r in fan.rays],
           "passed": all(ok for _, ok in checks)}
    if not report.passed:
        out["resolution_failures"] = report.failures
    return out


def execute(args) -> dict:
    try:
        with open(args.input) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read problem file: {exc}")
    prob = Problem(data)
    S = prob.S
    lam = parse_rational(args.lam) if args.lam is not None else prob.lam
    degree_bound = args.degree_bound or prob.degree_bound or 20
    seed = args.seed if args.seed is not None else prob.seed
    cmd = args.command
    out: dict = {}

    if cmd == "log-jacobian":
        out["log_jacobian"] = [list(v) for v in jacobian.log_jacobian(S)]
    elif cmd == "markov":
        mb = prob.markov
        out["markov_basis"] = [list(b.u) for b in mb.binomials]
        out["verified"] = mb.verified
    elif cmd == "jacobian":
        jd = jacobian.jacobian_data(S, prob.markov)
        out["log_jacobian"] = [list(v) for v in jd.jlog]
        out["jprime"] = [list(v) for v in jd.jprime]
        out["jacobian"] = [list(v) for v in jd.j]
        out["phi_one"] = list(jd.phi_one)
    elif cmd == "newton":
        ctx = prob.ctx
        out["P"] = _polyhedron_json(ctx.P)
        out["Q"] = _polyhedron_json(ctx.Q)
        out["normal_rays"] = [{"normal": list(r.normal), "min_q": _num(r.min_q),
                               "min_p": _num(r.min_p)} for r in ctx.rays]
    elif cmd in ("membership", "threshold"):
        if args.m is None:
            raise InputError("--m is required")
        m = S.from_raw(parse_vector(args.m))
        if cmd == "membership":
            if lam is None:
                raise InputError("--lambda is required")
            out["member"] = multiplier.mj_membership(prob.ctx, m, lam)
        else:
            t = multiplier.mj_threshold(prob.ctx, m)
            out["threshold"] = "inf" if t.value is None else str(t.value)
            out["never_member"] = t.never_member
    elif cmd == "generators":
        if lam is None:
            raise InputError("--lambda is required")
        gens, flag = multiplier.mj_generators(prob.ctx, lam, int(degree_bound))
        out["generators"] = [list(g) for g in gens]
        out["completeness"] = flag
    elif cmd == "jumping":
        if lam is None or lam <= 0:
            raise InputError("--lambda (the upper end of the range) must be positive")
        vals, flag = multiplier.jumping_candidates(prob.ctx, lam, int(degree_bound))
        out["jumping_candidates"] = [str(v) for v in vals]
        out["completeness"] = flag
    elif cmd == "verify":
        out.update(run_verify(prob, args.samples, seed, int(degree_bound)))

    if not S.normalization_trivial:
        out["coordinate_change"] = [list(row) for row in S.basis]
    return out


def _format_text(out: dict) -> str:
    names = list(out) + [c["name"] for c in out.get("checks", [])]
    width = max(map(len, names), default=0)
    lines = []
    for k, v in out.items():
        if k == "checks":
            for c in v:
                lines.append(f"{c['name']:<{width}}  {'PASS' if c['passed'] else 'FAIL'}")
            continue
        lines.append(f"{k:<{width}}  {json.dumps(v, separators=(',', ':'))}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricmj",
                                description="Mather-Jacobian multiplier ideals on affine toric varieties")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="problem file (JSON)")
    p.add_argument("--lambda", dest="lam", help="exponent as p/q")
    p.add_argument("--m", help="monomial exponent v1,v2,... in input coordinates")
    p.add_argument("--degree-bound", type=int)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = execute(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.format == "json":
        print(json.dumps(out, sort_keys=True))
    else:
        print(_format_text(out))
    if args.command == "verify" and not out["passed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
