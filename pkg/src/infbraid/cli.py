"""Command-line front end: ``infbraid <group> <command> [options]``.

Exit status: 0 when every residual is zero, 1 when some residual is not,
2 on bad input (unreadable files, invalid parameters, invalid representations
handed to a command that needs a valid one).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile

from . import associator as asc
from . import bratteli as bt
from . import constructions as co
from . import drinfeld as dr
from . import extvariety as ev
from . import infrep as ir
from . import linalg as la
from . import symgroup as sg
from .quotient import pbw_dims, t4_lie_dims
from .scalars import format_scalar, parse_field, parse_scalar
from .series import HMatrix, TruncSeries

log = logging.getLogger("infbraid")


class InputError(Exception):
    pass


# -- reporting -----------------------------------------------------------------------

def _is_zero(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, (HMatrix, TruncSeries)):
        return x.is_zero()
    if isinstance(x, dict):
        return all(_is_zero(v) for v in x.values())
    if isinstance(x, (list, tuple)):
        if x and isinstance(x[0], list) and (not x[0] or not isinstance(x[0][0], (list, dict))):
            return la.is_zero_matrix(x)
        return all(_is_zero(v) for v in x)
    return not x


def _first_nonzero(x):
    if isinstance(x, list) and x and isinstance(x[0], list):
        for i, row in enumerate(x):
            for j, v in enumerate(row):
                if v and not isinstance(v, (list, dict)):
                    return f"entry ({i},{j}) = {format_scalar(v)}"
    if isinstance(x, HMatrix):
        for k, C in enumerate(x.coeffs):
            loc = _first_nonzero(C)
            if loc:
                return f"h^{k} {loc}"
    if isinstance(x, TruncSeries):
        for w, c in sorted(x.coeffs.items()):
            if c:
                return f"word {'.'.join(x.alphabet[i] for i in w)} = {format_scalar(c)}"
    return "nonzero"


class RunReport:
    def __init__(self, command):
        self.command = command
        self.checks = []
        self.info = {}

    def check(self, name, residual):
        zero = _is_zero(residual)
        entry = {"check": name, "zero": zero, "value": "0" if zero else _first_nonzero(residual)}
        self.checks.append(entry)
        return zero

    def extend(self, report: ir.Report, prefix=""):
        for name, R in report.checks:
            self.check(prefix + name, R)

    @property
    def ok(self):
        return all(c["zero"] for c in self.checks)

    def to_json(self):
        return {"command": self.command, "ok": self.ok, "checks": self.checks, "info": self.info}

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=True, default=str)
        lines = [f"{self.command}: {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            lines.append(f"  [{'zero' if c['zero'] else 'NONZERO'}] {c['check']}"
                         + ("" if c["zero"] else f": {c['value']}"))
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def atomic_write(path, text):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load(path):
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _emit(args, obj):
    if args.out and obj is not None:
        atomic_write(args.out, json.dumps(obj, indent=2, sort_keys=True, default=str) + "\n")


def _scalar(args, text):
    try:
        return parse_scalar(text, args.field_d)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad scalar {text!r}: {e}") from e


def _partition(text):
    try:
        return sg.parse_partition(text)
    except ValueError as e:
        raise InputError(str(e)) from e


# -- assoc -----------------------------------------------------------------------------

def _verify_into(rep: RunReport, a: asc.Associator):
    v = asc.verify(a)
    rep.check("grouplike (shuffle)", not v.grouplike)
    rep.check("inverse", v.inverse)
    rep.check("hexagon", v.hexagon)
    rep.check("pentagon in UT_4", not v.pentagon)
    rep.check("central shift", not v.central_shift)


def cmd_assoc_solve(args, rep):
    lam = _scalar(args, args.lam)
    a = asc.solve(lam, args.degree, even=args.even)
    _verify_into(rep, a)
    rep.info["coeff(A.B)"] = format_scalar(a.phi.coeff((0, 1)))
    rep.info["coeff(B.A)"] = format_scalar(a.phi.coeff((1, 0)))
    rep.info["degree-3 alpha"] = format_scalar(asc.degree3_alpha(a))
    if args.degree <= 6:
        rep.info["UT4 dims"] = asc._ut4(args.degree).dims()
        rep.info["PBW dims"] = pbw_dims(t4_lie_dims(args.degree), args.degree)
    return a.to_json()


def cmd_assoc_verify(args, rep):
    try:
        a = asc.Associator.from_json(_load(args.inp), args.field_d)
    except (KeyError, ValueError) as e:
        raise InputError(f"bad associator file: {e}") from e
    _verify_into(rep, a)
    return None


def _associator(args):
    if getattr(args, "assoc", None):
        return asc.Associator.from_json(_load(args.assoc), args.field_d)
    lam = _scalar(args, getattr(args, "lam", "1") or "1")
    return asc.solve(lam, min(args.degree, 6), even=True)


# -- rep -------------------------------------------------------------------------------

def _load_rep(args, path):
    try:
        return ir.InfRep.from_json(_load(path), args.field_d)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"bad representation file {path}: {e}") from e


def _require_valid(r, what="representation"):
    v = ir.validate(r)
    if not v.ok:
        raise InputError(f"invalid {what}: {v.failures[0][0]}")


def cmd_rep_make(args, rep):
    if args.burau:
        p = co.burau(args.burau, _scalar(args, args.alpha), _scalar(args, args.beta))
    else:
        p = co.hecke_point(_partition(args.partition), _scalar(args, args.alpha),
                           _scalar(args, args.beta))
    rep.extend(ir.validate(p.rep))
    return p.rep.to_json()


def cmd_rep_validate(args, rep):
    r = _load_rep(args, args.inp)
    rep.extend(ir.validate(r))
    rep.info["form type"] = ir.form_type(r, r.base.form) if r.base.form is not None else None
    return None


def _lift_checks(rep, R, r, a):
    for name, res in dr.braid_residuals(R):
        rep.check(name, res)
    rep.check("braid relations", not dr.braid_residuals(R))
    for k, res in dr.delta_identity(R, r, a.lam).items():
        rep.check(f"delta_{k} = exp(2 lam h Y_{k})", res)
    rep.check("gamma_n = exp(2 lam h T)", dr.gamma_identity(R, r, a.lam))


def cmd_rep_lift(args, rep):
    r = _load_rep(args, args.inp)
    _require_valid(r)
    a = _associator(args)
    R = dr.lift(r, a, min(args.degree, a.D), check=False)
    _lift_checks(rep, R, r, a)
    return R.to_json()


def cmd_rep_check(args, rep):
    r = _load_rep(args, args.inp)
    _require_valid(r)
    a = _associator(args)
    R = dr.lift(r, a, min(args.degree, a.D), check=False)
    _lift_checks(rep, R, r, a)
    fo = dr.first_order_checks(R, r, a)
    for (i, j), (r0, r1) in fo.xi.items():
        rep.check(f"xi_{i}{j} = 1 + 2 lam h t_{i}{j} (order 0)", r0)
        rep.check(f"xi_{i}{j} = 1 + 2 lam h t_{i}{j} (order 1)", r1)
    for k, M in enumerate(fo.sigma_order3):
        rep.check(f"sigma_{r.n - 1} expansion at h^{k}", M)
    return None


def cmd_rep_hom(args, rep):
    r1, r2 = _load_rep(args, args.in1), _load_rep(args, args.in2)
    _require_valid(r1)
    _require_valid(r2)
    a = _associator(args)
    D = min(args.degree, a.D)
    P = dr.hom_profile(dr.lift(r1, a, D), dr.lift(r2, a, D), r1, r2)
    rep.info.update({"dim": P.total_dim, "profile": P.profile, "hom_inf": P.hom_inf,
                     "hom_sn": P.hom_sn, "free_rank": P.free_rank})
    rep.check("dim = D hom_inf + hom_sn", P.total_dim - P.expected)
    return None


def cmd_rep_irr(args, rep):
    r = _load_rep(args, args.inp)
    _require_valid(r)
    a = _associator(args)
    R = dr.lift(r, a, min(args.degree, a.D))
    lifted, inf = dr.abs_irreducible(R), ir.is_surjective(r)
    rep.info["absolutely irreducible"] = lifted
    rep.check("lifted and infinitesimal irreducibility agree", lifted == inf)
    return None


# -- variety ---------------------------------------------------------------------------

def cmd_variety_verify(args, rep):
    r = _load_rep(args, args.inp)
    kind, detail = ev.residual_report(r.base, r.tau)
    rep.info["verdict"] = kind
    if kind == "not_in_commutant":
        raise InputError(f"tau is not in the commutant: {detail}")
    rep.check("C1, C2 vanish", kind == "valid")
    if kind == "valid":
        rep.info["surjective"] = ev.is_surjective(r)
    return None


def _params(args, items):
    out = {}
    for item in items or []:
        if "=" not in item:
            raise InputError(f"parameter {item!r} is not key=value")
        k, v = item.split("=", 1)
        if k == "partition":
            out[k] = _partition(v)
        elif k == "n":
            out[k] = int(v)
        else:
            out[k] = _scalar(args, v)
    return out


def cmd_variety_family(args, rep):
    try:
        p = ev.family_catalog(args.name, **_params(args, args.param))
    except ev.NotInVariety as e:
        rep.check(f"point of V(M): {e}", False)
        return None
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(str(e)) from e
    rep.extend(ir.validate(p.rep))
    rep.info["surjective"] = ev.is_surjective(p)
    return p.rep.to_json()


def cmd_variety_extend(args, rep):
    lam, c = _scalar(args, args.lam), _scalar(args, args.c)
    pair, up, lo = ev.hooks_extension(args.n, lam, c)
    rep.check("upper braid relations", not ev.braid_check(pair.upper))
    rep.check("lower braid relations", not ev.braid_check(pair.lower))
    alpha = lam * c
    for k, (A, B) in enumerate(zip(up, ev.f_family_p1(args.n, alpha)), start=1):
        rep.check(f"upper = f-family at sigma_{k}", la.mat_sub(A, B))
    for k, (A, B) in enumerate(zip(lo, ev.g_closed_form(args.n, 1, alpha)), start=1):
        rep.check(f"lower = g-family at sigma_{k}", la.mat_sub(A, B))
    rep.info["upper splits"] = pair.upper_split()
    rep.info["lower splits"] = pair.lower_split()
    return {"upper": [[[format_scalar(x) for x in row] for row in M] for M in pair.upper],
            "lower": [[[format_scalar(x) for x in row] for row in M] for M in pair.lower],
            "alpha": format_scalar(alpha)}


def cmd_variety_guard(args, rep):
    B, C = sg.irrep(_partition(args.b)), sg.irrep(_partition(args.c))
    if B.n != C.n:
        raise InputError("partitions of different sizes")
    g = ev.vsvide_guard(B, C)
    rep.info.update({"hom_dim": g.hom_dim, "certified": g.certified, "statement": g.statement})
    return None


# -- examples --------------------------------------------------------------------------

def cmd_examples_hecke(args, rep):
    p = co.hecke_point(_partition(args.partition), _scalar(args, args.alpha), _scalar(args, args.beta))
    rep.extend(ir.validate(p.rep))
    rep.check("unitary for the seminormal form", co.hecke_is_unitary(p))
    rep.info["essentially pure"] = ir.is_essentially_pure(p.rep)[0]
    return p.rep.to_json()


def cmd_examples_burau(args, rep):
    p = co.burau(args.n, _scalar(args, args.alpha), _scalar(args, args.beta))
    rep.extend(ir.validate(p.rep))
    return p.rep.to_json()


def cmd_examples_cubic(args, rep):
    try:
        H = co.cubic_hecke_matrices(_scalar(args, args.a), _scalar(args, args.b), _scalar(args, args.c))
    except ValueError as e:
        raise InputError(str(e)) from e
    rep.extend(co.cubic_checks(H))
    rep.info["discriminant"] = format_scalar(H.discriminant)
    rep.info["semisimple"] = H.semisimple
    return {"s1": [[format_scalar(x) for x in row] for row in H.s1],
            "s2": [[format_scalar(x) for x in row] for row in H.s2]}


def cmd_examples_casimir(args, rep):
    if args.alg == "sl2":
        g, V = co.sl2(), co.sl2_module(2)
        form = [[la.ZERO, la.ONE], [-la.ONE, la.ZERO]]
    else:
        m = int(args.alg[2:])
        g = co.so(m)
        V, form = g.basis, la.identity(m)
    rep.check("invariant form", not g.invariance_residual())
    rep.check("dual basis pairing", la.mat_sub(g.dual_pairing(), la.identity(g.dim)))
    C = co.casimir_rep(g, V, args.n, module_form=form)
    rep.extend(C.relations())
    rep.extend(C.commutes_with_diagonal())
    rep.check("tau_ij selfadjoint", C.self_adjoint())
    if args.n >= 3:
        rep.info["[t12, t23] != 0"] = not la.is_zero_matrix(la.commutator(C.t[(1, 2)], C.t[(2, 3)]))
    return C.rep.to_json() if C.rep is not None else None


def cmd_examples_long(args, rep):
    src = args.source
    if not src.startswith("burau"):
        raise InputError("--from expects burau<n+1>")
    L, r = co.burau_long(int(src[5:]))
    alpha = _scalar(args, args.alpha)
    rep.extend(L.check(), "L: ")
    rho, _ = co.long_plus(L, alpha)
    rep.extend(ir.validate(rho), "rho+: ")
    F = co.long_form(L, r.base.form, alpha)
    rep.extend(F.adjointness, "adjointness: ")
    rep.info.update({"nondegenerate": F.nondegenerate, "type": F.classification,
                     "input type": F.input_classification})
    return rho.to_json()


# -- bratteli --------------------------------------------------------------------------

def cmd_bratteli_build(args, rep):
    r = _load_rep(args, args.inp)
    _require_valid(r)
    try:
        d = bt.build_from_chain(r)
    except bt.ColoringError as e:
        raise InputError(str(e)) from e
    rep.info["levels"] = [len(lvl) for lvl in d.levels]
    return d.to_json()


def cmd_bratteli_color(args, rep):
    d = bt.BratteliDiagram.from_json(_load(args.diagram))
    raw = _load(args.level2)
    colors = {k: tuple(parse_scalar(x, args.field_d) for x in (v if isinstance(v, list) else [v]))
              for k, v in raw.items()}
    try:
        f = bt.formal_coloring(d, colors)
    except bt.ColoringError as e:
        raise InputError(str(e)) from e
    if all(v.color is not None for lvl in d.levels for v in lvl):
        for a, b in zip((v for lvl in d.levels for v in lvl), (v for lvl in f.levels for v in lvl)):
            rep.check(f"formal = natural at {a.key}", a.color == b.color)
    inj = bt.injectivity_agregation(f)
    rep.info["path colors injective"] = inj.injective
    return f.to_json()


def cmd_bratteli_recover(args, rep):
    d = bt.BratteliDiagram.from_json(_load(args.diagram))
    raw = _load(args.children)
    child = {k: tuple(parse_scalar(x, args.field_d) for x in (v if isinstance(v, list) else [v]))
             for k, v in raw.items()}
    out = bt.zn_recovery(d, child)
    rep.info["exponents"] = {k: [format_scalar(x) for x in v] for k, v in out.items()}
    return rep.info["exponents"]


# -- parser ----------------------------------------------------------------------------

GLOBAL_DEFAULTS = {"seed": 0, "degree": 3, "field": "q", "format": "text", "out": None,
                   "verbose": False}


def _global_options(parser, suppress):
    """Global flags; leaf parsers repeat them so they may follow the command."""
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--seed", type=int, **kw)
    parser.add_argument("--degree", type=int, **kw)
    parser.add_argument("--field", help="q or q-sqrt:<d>", **kw)
    parser.add_argument("--format", choices=("json", "text"), **kw)
    parser.add_argument("--out", help="write the JSON artifact here", **kw)
    parser.add_argument("-v", "--verbose", action="store_true", **kw)


def build_parser():
    p = argparse.ArgumentParser(prog="infbraid", description=__doc__.splitlines()[0])
    _global_options(p, suppress=False)
    p.set_defaults(**GLOBAL_DEFAULTS)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    groups = p.add_subparsers(dest="group", required=True)

    def cmd(group, name, fn, *opts):
        sp = group.add_parser(name, parents=[common])
        for args, kw in opts:
            sp.add_argument(*args, **kw)
        sp.set_defaults(fn=fn)
        return sp

    def opt(*a, **kw):
        return a, kw

    lam = opt("--lambda", dest="lam", default="1")
    assoc_file = opt("--assoc", help="associator JSON (default: solve at --lambda)")
    inp = opt("--in", dest="inp", required=True)

    g = groups.add_parser("assoc").add_subparsers(dest="cmd", required=True)
    cmd(g, "solve", cmd_assoc_solve, lam, opt("--even", action="store_true"))
    cmd(g, "verify", cmd_assoc_verify, inp)

    g = groups.add_parser("rep").add_subparsers(dest="cmd", required=True)
    cmd(g, "make", cmd_rep_make, opt("--partition", default="2,1"), opt("--burau", type=int),
        opt("--alpha", default="0"), opt("--beta", default="1"))
    cmd(g, "validate", cmd_rep_validate, inp)
    cmd(g, "lift", cmd_rep_lift, inp, lam, assoc_file)
    cmd(g, "check", cmd_rep_check, inp, lam, assoc_file)
    cmd(g, "hom", cmd_rep_hom, opt("--in1", required=True), opt("--in2", required=True), lam, assoc_file)
    cmd(g, "irr", cmd_rep_irr, inp, lam, assoc_file)

    g = groups.add_parser("variety").add_subparsers(dest="cmd", required=True)
    cmd(g, "verify", cmd_variety_verify, inp)
    cmd(g, "family", cmd_variety_family, opt("--name", required=True),
        opt("--param", action="append", help="key=value, repeatable"))
    cmd(g, "extend", cmd_variety_extend, opt("--n", type=int, required=True), lam, opt("--c", default="1"))
    cmd(g, "guard", cmd_variety_guard, opt("--b", required=True), opt("--c", required=True))

    g = groups.add_parser("examples").add_subparsers(dest="cmd", required=True)
    cmd(g, "hecke", cmd_examples_hecke, opt("--partition", required=True),
        opt("--alpha", default="0"), opt("--beta", default="1"))
    cmd(g, "burau", cmd_examples_burau, opt("--n", type=int, required=True),
        opt("--alpha", default="0"), opt("--beta", default="1"))
    cmd(g, "cubic", cmd_examples_cubic, opt("--a", required=True), opt("--b", required=True),
        opt("--c", required=True))
    cmd(g, "casimir", cmd_examples_casimir, opt("--alg", choices=("sl2", "so3", "so4", "so5"),
                                                default="so3"), opt("--n", type=int, default=3))
    cmd(g, "long", cmd_examples_long, opt("--from", dest="source", default="burau4"),
        opt("--alpha", default="0"))

    g = groups.add_parser("bratteli").add_subparsers(dest="cmd", required=True)
    cmd(g, "build", cmd_bratteli_build, inp)
    cmd(g, "color", cmd_bratteli_color, opt("--diagram", required=True), opt("--level2", required=True))
    cmd(g, "recover", cmd_bratteli_recover, opt("--diagram", required=True),
        opt("--children", required=True))
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        args.field_d = parse_field(args.field).d
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    rep = RunReport(f"{args.group} {args.cmd}")
    rep.info["seed"] = args.seed
    try:
        artifact = args.fn(args, rep)
    except (InputError, ev.NotInCommutant, dr.LiftError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit(args, artifact)
    print(rep.render(args.format))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
