"""
Command-line front end.

Heights are in units of the (inner) radius a and angles in degrees unless a
`rad` suffix is given.  Tables go out as CSV with a `#`-prefixed JSON line of
metadata, reports as a single JSON object.  Exit codes: 0 ok, 2 bad
configuration, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from . import analysis as an
from . import closed_forms as cf
from . import electrostatics as es
from . import kernels as kq
from . import machine as mc
from .quadrature import QuadratureError, QuadratureSettings
from .tensors import AnnularPolarizability, AtomPolarizability
from .verify import run_verification

HBAR_C_EV_NM = 197.3269804

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3

_CSTEP = 1e-30


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_angle(text):
    """'45', '45deg' -> radians of 45 degrees; '0.5rad' -> 0.5."""
    t = str(text).strip().lower()
    try:
        if t.endswith("deg"):
            return math.radians(float(t[:-3]))
        if t.endswith("rad"):
            return float(t[:-3])
        return math.radians(float(t))
    except ValueError:
        raise ConfigError(f"cannot read angle {text!r}") from None


def _deg(theta):
    """Degrees for display, without the radian round trip showing up as 29.999999999999996."""
    return round(math.degrees(theta), 12) + 0.0


def _grid_parts(text):
    parts = str(text).split(":")
    if len(parts) != 3:
        return None
    try:
        count = int(parts[2])
    except ValueError:
        raise ConfigError(f"grid count must be an integer in {text!r}") from None
    if count < 2:
        raise ConfigError(f"grid {text!r} needs a count of at least 2")
    return parts[0], parts[1], count


def parse_grid(text):
    """'start:stop:count' (count >= 2), a comma list, or a single number."""
    g = _grid_parts(text)
    try:
        if g is not None:
            return [float(x) for x in np.linspace(float(g[0]), float(g[1]), g[2])]
        return [float(x) for x in str(text).split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"cannot read grid {text!r}") from None


def parse_angles(text):
    """Angle grid or list, each entry optionally suffixed; a trailing suffix applies to all."""
    t = str(text).strip().lower()
    unit = ""
    for suffix in ("deg", "rad"):
        if t.endswith(suffix) and ":" in t:
            t, unit = t[:-3], suffix
    g = _grid_parts(t)
    if g is not None:
        lo, hi = parse_angle(g[0] + unit), parse_angle(g[1] + unit)
        return [float(x) for x in np.linspace(lo, hi, g[2])]
    return [parse_angle(x) for x in t.split(",") if x.strip()]


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

GEOMETRIES = ("ring", "disc", "plate")
POLS = ("tangential", "radial", "axial", "iso")
SOURCES = ("auto", "closed", "oracle", "both")


@dataclass
class RunConfig:
    command: str
    geometry: str = "ring"
    pol: str = "radial"
    b: float = 2.0
    axis: int = 1
    beta: float = 0.0
    alpha: float = 1.0
    density: float = 1.0
    a: float = 1.0
    kernel: str = "cp"
    rel_tol: float = 1e-12
    h_grid: list = field(default_factory=list)
    thetas: list = field(default_factory=list)
    source: str = "auto"
    fmt: str = "csv"
    output: str | None = None
    absolute: bool = False
    ev: bool = False
    extra: dict = field(default_factory=dict)

    def validate(self):
        if self.geometry not in GEOMETRIES:
            raise ConfigError(f"geometry must be one of {GEOMETRIES}")
        if self.pol not in POLS:
            raise ConfigError(f"polarization must be one of {POLS}")
        if self.pol == "tangential" and self.geometry != "ring":
            raise ConfigError("a tangential-only annulus is available for the ring only")
        if self.geometry == "disc" and not self.b > 1.0:
            raise ConfigError("disc needs --b > 1 (outer radius in units of a)")
        if self.axis not in (1, 2, 3):
            raise ConfigError("--axis must be 1, 2 or 3")
        if not (self.a > 0 and math.isfinite(self.a)):
            raise ConfigError("--a must be positive and finite")
        if self.kernel not in kq.KERNELS:
            raise ConfigError(f"kernel must be one of {sorted(kq.KERNELS)}")
        if self.source not in SOURCES:
            raise ConfigError(f"source must be one of {SOURCES}")
        if self.fmt not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        try:
            QuadratureSettings(rel_tol=self.rel_tol)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        return self

    def digest(self):
        payload = asdict(self)
        payload.pop("output")
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def metadata(self, **more):
        meta = {"tool": "annular-cp", "version": __version__, "command": self.command,
                "config_hash": self.digest()}
        meta.update(more)
        return meta


# ---------------------------------------------------------------------------
# evaluators
# ---------------------------------------------------------------------------

_RING_COMP = {"tangential": "phi", "radial": "rho", "axial": "z"}
_POL_BUILD = {"tangential": AnnularPolarizability.tangential,
              "radial": AnnularPolarizability.radial,
              "axial": AnnularPolarizability.axial,
              "iso": AnnularPolarizability.in_plane}


def _outer(cfg):
    return {"ring": None, "disc": cfg.b * cfg.a, "plate": math.inf}[cfg.geometry]


def _atom(cfg, theta):
    alphas = [0.0, 0.0, 0.0]
    alphas[cfg.axis - 1] = cfg.alpha
    return AtomPolarizability(*alphas, theta=theta, beta=cfg.beta)


def energy_unit(cfg):
    """Natural-unit size of one reduced energy unit (E_r for rings, E_p otherwise)."""
    if cfg.geometry == "ring":
        return cf.ring_scale(cfg.alpha, cfg.density, cfg.a)
    return cf.plate_scale(cfg.alpha, cfg.density, cfg.a)


def closed_available(cfg):
    if cfg.kernel not in ("cp", "casimir-polder"):
        return False
    return cfg.geometry == "ring" or cfg.axis == 1


def _closed_energy(cfg, h, theta):
    a = cfg.a
    if cfg.geometry == "ring":
        comps = ("phi", "rho") if cfg.pol == "iso" else (_RING_COMP[cfg.pol],)
        return sum(cf.ring_energy_component(cfg.axis, c, a, h, theta, cfg.beta, cfg.alpha, cfg.density)
                   for c in comps)
    if cfg.geometry == "disc":
        return cf.disc_energy_closed(cfg.pol, a, cfg.b * a, h, theta, cfg.alpha, cfg.density)
    return cf.plate_energy_closed(cfg.pol, a, h, theta, cfg.alpha, cfg.density)


def closed_value(cfg, quantity, h, theta):
    """(value in natural units, provenance)."""
    if quantity == "energy":
        return float(np.real(_closed_energy(cfg, h, theta))), "closed form"
    if quantity == "force":
        if cfg.geometry == "ring" and cfg.axis == 1 and cfg.pol in ("radial", "axial"):
            f = cf.ring_force_closed(cfg.pol, cfg.a, h, theta, cfg.alpha, cfg.density)
            return float(f), "closed form"
        d = np.imag(_closed_energy(cfg, h + 1j * _CSTEP, theta)) / _CSTEP
        return -float(d), "closed form, complex-step derivative"
    d = np.imag(_closed_energy(cfg, h, theta + 1j * _CSTEP)) / _CSTEP
    return -float(d), "closed form, complex-step derivative"


def oracle_value(cfg, quantity, h, theta):
    atom = _atom(cfg, theta)
    pol = _POL_BUILD[cfg.pol](cfg.density)
    kernel = kq.KERNELS[cfg.kernel]
    settings = QuadratureSettings(rel_tol=cfg.rel_tol)
    wrt = {"energy": None, "force": "h", "torque": "theta"}[quantity]
    if cfg.geometry == "ring":
        v = kq.ring_energy_quadrature(atom, pol, cfg.a, h, kernel, settings, wrt=wrt)
    else:
        v = kq.disc_energy_quadrature(atom, pol, cfg.a, _outer(cfg), h, kernel, settings, wrt=wrt)
    return (v if wrt is None else -v), "quadrature oracle"


def _scale_for(cfg, quantity, h, theta):
    """Cancellation-free scale used for the relative-difference column."""
    s = kq.norm_scale(_atom(cfg, theta), _POL_BUILD[cfg.pol](cfg.density), cfg.a, h, _outer(cfg))
    if quantity == "force":
        return kq.CASIMIR_POLDER.power * s / math.hypot(cfg.a, h)
    if quantity == "torque":
        return 2.0 * s
    return s


def _natural_factor(cfg, quantity):
    """Reduced -> natural units for the quantity (energy unit, per a for forces)."""
    unit = energy_unit(cfg)
    return unit / cfg.a if quantity == "force" else unit


def _ev(cfg, value):
    return value * HBAR_C_EV_NM if cfg.ev else value


def _heights(cfg):
    """(h/a, h) pairs of the configured grid."""
    if cfg.absolute:
        return [(h / cfg.a, h) for h in cfg.h_grid]
    return [(u, u * cfg.a) for u in cfg.h_grid]


def quantity_table(cfg, quantity):
    source = cfg.source
    if source == "auto":
        source = "closed" if closed_available(cfg) else "oracle"
    if source in ("closed", "both") and not closed_available(cfg):
        raise ConfigError(f"no closed form for {cfg.geometry}/{cfg.pol} with atom axis {cfg.axis} "
                          f"and kernel {cfg.kernel}; use --source oracle")
    header = ["h_over_a", "theta_deg", "value_reduced", "value_natural"]
    if source == "both":
        header += ["oracle_reduced", "rel_diff"]
    factor = _natural_factor(cfg, quantity)
    rows, provenance = [], set()
    for theta in cfg.thetas:
        for u, h in _heights(cfg):
            if source == "oracle":
                v, prov = oracle_value(cfg, quantity, h, theta)
            else:
                v, prov = closed_value(cfg, quantity, h, theta)
            provenance.add(prov)
            row = [u, _deg(theta), v / factor, _ev(cfg, v)]
            if source == "both":
                o, oprov = oracle_value(cfg, quantity, h, theta)
                provenance.add(oprov)
                row += [o / factor, abs(v - o) / _scale_for(cfg, quantity, h, theta)]
            rows.append(row)
    units = "E_r" if cfg.geometry == "ring" else "E_p"
    if quantity == "force":
        units += "/a"
    meta = cfg.metadata(quantity=quantity, provenance=sorted(provenance),
                        reduced_unit=units,
                        natural_unit=("eV" if cfg.ev else "hbar c / length") +
                        ("/nm" if cfg.ev and quantity == "force" else ""))
    return meta, header, rows


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return str(x)


def render_csv(meta, header, rows):
    buf = io.StringIO()
    buf.write("#" + json.dumps(meta, sort_keys=True, separators=(",", ":")) + "\n")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])
    return buf.getvalue()


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.floating, float)):
        x = float(x)
        return x if math.isfinite(x) else str(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def render_json(obj):
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"


def render_table(cfg, meta, header, rows):
    if cfg.fmt == "json":
        return render_json({"metadata": meta, "columns": header, "rows": rows})
    return render_csv(meta, header, rows)


def emit(cfg, text, out):
    if cfg.output:
        with open(cfg.output, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_quantity(cfg):
    return render_table(cfg, *quantity_table(cfg, cfg.command))


def cmd_scan(cfg):
    """Energy, force and torque side by side in reduced units."""
    tables = [quantity_table(cfg, q) for q in ("energy", "force", "torque")]
    header = ["h_over_a", "theta_deg", "energy_reduced", "force_reduced", "torque_reduced"]
    rows = [[e[0], e[1], e[2], f[2], t[2]] for e, f, t in zip(*(tb[2] for tb in tables))]
    provenance = sorted(set().union(*(tb[0]["provenance"] for tb in tables)))
    meta = cfg.metadata(provenance=provenance, reduced_unit=tables[0][0]["reduced_unit"])
    return render_table(cfg, meta, header, rows)


def _family(cfg):
    if cfg.axis != 1:
        raise ConfigError("analysis commands use a uniaxial e1 atom (--axis 1)")
    return an.family(cfg.geometry, cfg.pol, cfg.b if cfg.geometry == "disc" else None)


def _case(cfg):
    key = f"{cfg.geometry}-{cfg.pol}"
    return key if key in an.QUARTICS else None


def cmd_roots(cfg):
    fam = _family(cfg)
    u_max = cfg.extra.get("u_max", an.U_MAX)
    numeric = an.torsion_free_heights(fam.energy, u_max=u_max)
    report = {"metadata": cfg.metadata(), "inputs": _inputs(cfg, u_max=u_max),
              "roots_h_over_a": numeric,
              "method": "sign-change scan of the cos(2 theta) coefficient + Brent refinement"}
    case = _case(cfg)
    if case:
        analytic = an.torsion_free_analytic(case)
        report["analytic_h_over_a"] = analytic
        if len(analytic) == len(numeric):
            report["max_abs_difference"] = max((abs(x - y) for x, y in zip(numeric, analytic)),
                                               default=0.0)
    return render_json(report)


def cmd_regions(cfg):
    fam = _family(cfg)
    if cfg.fmt == "csv":
        if not cfg.h_grid:
            raise ConfigError("regions --format csv needs --h")
        rmap = an.repulsion_map(fam.force, sorted(cfg.h_grid), sorted(cfg.thetas))
        # family forces are natural units with a = alpha = density = 1
        unit = cf.ring_scale() if cfg.geometry == "ring" else cf.plate_scale()
        header = ["h_over_a", "theta_deg", "force_reduced", "repulsive"]
        rows = []
        for i, th in enumerate(rmap.theta):
            F = np.asarray(fam.force(rmap.h, th), dtype=float)
            for j, u in enumerate(rmap.h):
                rows.append([float(u), _deg(th), float(F[j]) / unit, bool(rmap.mask[i, j])])
        return render_csv(cfg.metadata(provenance=["closed form"]), header, rows)
    per_theta = [{"theta_deg": _deg(th),
                  "intervals_h_over_a": [list(iv) for iv in an.repulsion_intervals(fam.force, th)]}
                 for th in cfg.thetas]
    report = {"metadata": cfg.metadata(), "inputs": _inputs(cfg), "repulsion": per_theta,
              "method": "force sign scan on (0, 20] + Brent refinement; "
                        + ("analytic force" if fam.analytic_force else "complex-step force")}
    if cfg.extra.get("critical"):
        report["critical_angles_deg"] = an.critical_angles(fam.force)
    if cfg.geometry == "ring" and cfg.pol in ("radial", "axial"):
        report["analytic_edges"] = [{"theta_deg": _deg(th),
                                     "edges_h_over_a": an.ring_repulsion_edges(cfg.pol, th)}
                                    for th in cfg.thetas]
    return render_json(report)


def cmd_threshold(cfg):
    rows = []
    for th in cfg.thetas:
        b_star = an.second_region_threshold(th, mode=cfg.pol)
        rows.append({"theta_deg": _deg(th), "b_star_over_a": b_star})
    inputs = {"geometry": "disc", "pol": cfg.pol, "thetas_deg": [_deg(t) for t in cfg.thetas],
              "b_window_over_a": [1.0 + 1e-4, 2.0]}
    report = {"metadata": cfg.metadata(), "inputs": inputs, "thresholds": rows,
              "method": "bisection on b/a of the detached-repulsion predicate, resolution 1e-4"}
    return render_json(report)


def cmd_machine(cfg):
    report = mc.cycle_report(cfg.extra.get("h_e", "torsion_free"))
    if cfg.fmt == "csv":
        header = ["h_over_a", "theta_deg", "energy_over_E0"]
        rows = [[h, _deg(t), e] for h, t, e in mc.energy_table(cfg.h_grid, cfg.thetas)]
        return render_csv(cfg.metadata(provenance=["closed form"], reduced_unit="E0"), header, rows)
    out = {"metadata": cfg.metadata(), "units": "E0 = 13 alpha sigma / (16 pi a^6); heights in a",
           "report": report.to_dict(),
           "method": {"works": "energy differences", "line_works": "Gauss-Kronrod line integrals "
                      "of torque and force"}}
    return render_json(out)


def cmd_verify(cfg):
    report = run_verification(cfg.extra.get("tol", 1e-9))
    d = report.to_dict()
    d["summary"] = "PASS" if report.passed else "FAIL"
    d["metadata"] = cfg.metadata()
    # timing is not reproducible; keep output byte-identical across runs
    d.pop("seconds")
    return render_json(d), report.passed


def cmd_electro(cfg):
    direction = cfg.extra.get("direction", "axial")
    ring = es.PolarizedRing(cfg.a, direction, cfg.density)
    p = cfg.alpha
    source = cfg.source
    if source == "auto":
        source = "closed" if direction == "axial" else "oracle"
    if source in ("closed", "both") and direction != "axial":
        raise ConfigError("closed forms exist for the axial ring only; use --source oracle")
    unit = p * cfg.density / cfg.a ** 2
    header = ["h_over_a", "theta_deg", "energy_reduced", "force_reduced", "torque_reduced"]
    if source == "both":
        header += ["max_rel_diff"]
    rows = []
    for th in cfg.thetas:
        dip = es.PointDipole(p, th)
        for u, h in _heights(cfg):
            closed = (es.es_energy_axial(p, cfg.density, cfg.a, h, th),
                      es.es_force_axial(p, cfg.density, cfg.a, h, th),
                      es.es_torque_axial(p, cfg.density, cfg.a, h, th))
            oracle = (es.es_energy_quadrature(dip, ring, h), es.es_force_quadrature(dip, ring, h),
                      es.es_torque_quadrature(dip, ring, h)) if source != "closed" else None
            vals = oracle if source == "oracle" else closed
            row = [u, _deg(th), float(vals[0]) / unit, float(vals[1]) * cfg.a / unit,
                   float(vals[2]) / unit]
            if source == "both":
                s = es.norm_scale(dip, ring, h)
                scales = (s, 3.0 * s / math.hypot(cfg.a, h), 2.0 * s)
                row.append(max(abs(float(c) - o) / sc for c, o, sc in zip(closed, oracle, scales)))
            rows.append(row)
    prov = {"closed": ["closed form"], "oracle": ["quadrature oracle"],
            "both": ["closed form", "quadrature oracle"]}[source]
    meta = cfg.metadata(provenance=prov, reduced_unit="p lambda / (4 pi eps0 a^2)",
                        direction=direction)
    return render_table(cfg, meta, header, rows)


def _inputs(cfg, **more):
    d = {"geometry": cfg.geometry, "pol": cfg.pol, "thetas_deg": [_deg(t) for t in cfg.thetas]}
    if cfg.geometry == "disc":
        d["b_over_a"] = cfg.b
    d.update(more)
    return d


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--geometry", default="ring", choices=GEOMETRIES)
    common.add_argument("--pol", default="radial", choices=POLS,
                        help="polarization of the annulus")
    common.add_argument("--b", type=float, default=2.0, help="disc outer radius in units of a")
    common.add_argument("--axis", type=int, default=1, help="polarizable atom axis e1, e2 or e3")
    common.add_argument("--beta", default="0", help="rotation about e1 (deg unless suffixed rad)")
    common.add_argument("--alpha", type=float, default=1.0, help="atom polarizability")
    common.add_argument("--density", type=float, default=1.0,
                        help="annulus polarizability density (sigma or lambda)")
    common.add_argument("--a", type=float, default=1.0, help="radius a in absolute length units")
    common.add_argument("--kernel", default="cp", choices=sorted(kq.KERNELS))
    common.add_argument("--rel-tol", type=float, default=1e-12, help="oracle relative tolerance")
    common.add_argument("--h", default="0:5:51", help="heights start:stop:count or a list")
    common.add_argument("--theta", default="0", help="angles, list or start:stop:count")
    common.add_argument("--source", default="auto", choices=SOURCES)
    common.add_argument("--format", dest="fmt", default=None, choices=("csv", "json"))
    common.add_argument("--output", "-o", default=None)
    common.add_argument("--absolute", action="store_true",
                        help="read --h in absolute length units instead of units of a")
    common.add_argument("--ev", action="store_true",
                        help="natural-unit column in eV, lengths taken in nm")

    parser = _Parser(prog="annular-cp", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("energy", "force", "torque"):
        sub.add_parser(name, parents=[common], help=f"{name} table over an (h, theta) grid")
    sub.add_parser("scan", parents=[common], help="energy, force and torque together")
    p = sub.add_parser("roots", parents=[common], help="torsion-free heights")
    p.add_argument("--u-max", type=float, default=an.U_MAX)
    p = sub.add_parser("regions", parents=[common], help="repulsive height intervals")
    p.add_argument("--critical", action="store_true", help="also locate the critical angles")
    p = sub.add_parser("threshold", parents=[common], help="disc width for a detached repulsive region")
    p = sub.add_parser("machine", parents=[common], help="four-stroke cycle report")
    p.add_argument("--h-e", default="torsion_free", choices=("torsion_free", "force_equilibrium"))
    p = sub.add_parser("verify", parents=[common], help="closed forms against the oracle")
    p.add_argument("--tol", type=float, default=1e-9)
    p = sub.add_parser("electro", parents=[common], help="permanent dipole above a polarized ring")
    p.add_argument("--direction", default="axial", choices=es.DIRECTIONS)
    return parser


_JSON_COMMANDS = ("roots", "regions", "threshold", "machine", "verify")

_DEFAULTS = {
    "threshold": {"theta": "90", "pol": "radial"},
    "machine": {"h": "0:1.5:151", "theta": "0,90"},
}


def config_from_args(args, argv):
    given = set()
    for tok in argv:
        if tok.startswith("--"):
            given.add(tok[2:].split("=")[0].replace("-", "_"))
    for key, value in _DEFAULTS.get(args.command, {}).items():
        if key not in given:
            setattr(args, key, value)
    fmt = args.fmt or ("json" if args.command in _JSON_COMMANDS else "csv")
    extra = {}
    for key in ("u_max", "critical", "h_e", "tol", "direction"):
        if hasattr(args, key):
            extra[key] = getattr(args, key)
    cfg = RunConfig(command=args.command, geometry=args.geometry, pol=args.pol, b=args.b,
                    axis=args.axis, beta=parse_angle(args.beta), alpha=args.alpha,
                    density=args.density, a=args.a, kernel=args.kernel, rel_tol=args.rel_tol,
                    h_grid=parse_grid(args.h), thetas=parse_angles(args.theta),
                    source=args.source, fmt=fmt, output=args.output, absolute=args.absolute,
                    ev=args.ev, extra=extra)
    return cfg.validate()


_COMMANDS = {
    "energy": cmd_quantity, "force": cmd_quantity, "torque": cmd_quantity,
    "scan": cmd_scan, "roots": cmd_roots, "regions": cmd_regions, "threshold": cmd_threshold,
    "machine": cmd_machine, "verify": cmd_verify, "electro": cmd_electro,
}


def main(argv=None, out=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args, argv)
        result = _COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"annular-cp: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (QuadratureError, cf.DerivativeError, an.ThresholdError, an.NotCos2FormError,
            ArithmeticError) as exc:
        print(f"annular-cp: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"annular-cp: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    ok = True
    if isinstance(result, tuple):
        result, ok = result
    emit(cfg, result, out)
    return EXIT_OK if ok else EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
