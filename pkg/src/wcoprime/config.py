"""Run configuration: YAML schema, validation and rendering.

A config selects a curve (preset name or explicit Weil data), a set S given
either by place degrees or, on genus-0 curves, by concrete places, a
command, its parameters and the output format::

    command: verify-thm2
    curve: rational
    q: 2
    S: {degrees: [1]}
    params: {m: 2, w: 1, range_lo: 1, range_hi: 10}
    output: {format: csv}

Concrete places are ``"inf"`` or coefficient lists of monic irreducibles,
constant term first: ``S: {places: ["inf", [0, 1]]}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

import yaml

from .errors import ConfigError, WcoprimeError
from .finite_field import FieldSpec, prime_power
from .zeta import PRESETS, CurveSpec, SSpec, check_compatible, preset, validate_weil

COMMANDS = (
    "curve-validate", "zeta-series", "zeta-value", "count-elements",
    "count-ideals", "verify-thm1", "verify-thm2", "verify-lemma4",
    "verify-mobius", "density",
)
TOP_KEYS = ("command", "curve", "q", "modulus", "S", "params", "output", "budget")
INT_PARAMS = ("m", "w", "N", "n", "range_lo", "range_hi", "truncation", "t")
PARAM_KEYS = INT_PARAMS + ("N_vec", "kind", "brute")
FORMATS = ("csv", "json")

REQUIRED = {
    "curve-validate": (),
    "zeta-series": (),
    "zeta-value": ("t",),
    "count-elements": ("m", "w"),
    "count-ideals": ("n", "m", "w"),
    "verify-thm1": ("m", "w", "range_lo", "range_hi"),
    "verify-thm2": ("m", "w", "range_lo", "range_hi"),
    "verify-lemma4": ("range_lo", "range_hi"),
    "verify-mobius": (),
    "density": ("m", "w", "range_lo", "range_hi"),
}


@dataclass
class RunConfig:
    command: str
    curve: Any                      # preset name or {q, genus, weil_coeffs}
    q: Optional[int] = None
    S: Optional[dict] = None        # {"degrees": [...]} or {"places": [...]}
    params: dict = field(default_factory=dict)
    output: dict = field(default_factory=lambda: {"format": "csv"})
    modulus: Optional[list] = None
    budget: Optional[int] = None

    def curve_spec(self) -> CurveSpec:
        if isinstance(self.curve, str):
            return preset(self.curve, self.q)
        return CurveSpec(int(self.curve["q"]), int(self.curve["genus"]),
                         tuple(self.curve["weil_coeffs"]))

    @property
    def field_q(self) -> int:
        return self.curve_spec().q

    def field(self) -> FieldSpec:
        return FieldSpec.of_order(self.field_q, self.modulus)

    @property
    def has_places(self) -> bool:
        return bool(self.S) and "places" in self.S

    def places(self):
        from .genus0 import parse_place
        f = self.field()
        return [parse_place(f, raw) for raw in self.S["places"]]

    def s_spec(self) -> SSpec:
        if self.S is None:
            raise ValueError("this command needs S")
        if self.has_places:
            return SSpec(tuple(p.degree for p in self.places()))
        return SSpec(tuple(self.S["degrees"]))

    @property
    def fmt(self) -> str:
        return self.output.get("format", "csv")

    def to_dict(self) -> dict:
        out = {"command": self.command, "curve": self.curve}
        if self.q is not None:
            out["q"] = self.q
        if self.modulus is not None:
            out["modulus"] = list(self.modulus)
        if self.S is not None:
            out["S"] = self.S
        out["params"] = dict(self.params)
        out["output"] = dict(self.output)
        if self.budget is not None:
            out["budget"] = self.budget
        return out


def render_config(cfg: RunConfig) -> str:
    return yaml.safe_dump(cfg.to_dict(), sort_keys=False, default_flow_style=None)


def _line_map(text: str) -> dict:
    """Map key paths like ("params", "m") to 1-based source lines."""
    lines: dict = {}
    try:
        root = yaml.compose(text)
    except yaml.YAMLError:
        return lines

    def walk(node, path):
        if isinstance(node, yaml.MappingNode):
            for k, v in node.value:
                key = k.value
                lines[path + (key,)] = k.start_mark.line + 1
                walk(v, path + (key,))

    if root is not None:
        lines[()] = root.start_mark.line + 1
        walk(root, ())
    return lines


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_config(text: str, command: str | None = None,
                 overrides: dict | None = None) -> RunConfig:
    """Validate YAML config text; ``command`` and ``overrides`` win over it.

    Raises ``ConfigError`` carrying every problem found, with line numbers.
    """
    try:
        data = yaml.safe_load(text) if text.strip() else {}
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ConfigError([(mark.line + 1 if mark else None, f"invalid YAML: {exc}")]) from None
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError([(1, "config must be a mapping")])
    lines = _line_map(text)
    errors: list = []

    def err(path, msg):
        ln = None
        for i in range(len(path), -1, -1):
            if path[:i] in lines:
                ln = lines[path[:i]]
                break
        errors.append((ln, msg))

    for key in data:
        if key not in TOP_KEYS:
            err((key,), f"unknown key {key!r}")

    cmd = command or data.get("command")
    if cmd is None:
        err(("command",), "missing required key 'command'")
    elif cmd not in COMMANDS:
        err(("command",), f"unknown command {cmd!r}; expected one of {', '.join(COMMANDS)}")

    q = data.get("q")
    if q is not None:
        if not _is_int(q):
            err(("q",), "q must be an integer")
            q = None
        else:
            try:
                prime_power(q)
            except ValueError:
                err(("q",), f"q = {q} is not a prime power")
                q = None

    curve = data.get("curve")
    genus = None
    if curve is None:
        err(("curve",), "missing required key 'curve'")
    elif isinstance(curve, str):
        if curve not in PRESETS:
            err(("curve",), f"unknown curve preset {curve!r}; known: {', '.join(PRESETS)}")
        elif curve == "rational":
            genus = 0
            if q is None and "q" not in data:
                err(("curve",), "the rational preset needs a top-level q")
        elif curve == "e2-supersingular":
            genus = 1
            if q not in (None, 2):
                err(("q",), "e2-supersingular is defined over F_2 only")
    elif isinstance(curve, dict):
        for k in curve:
            if k not in ("q", "genus", "weil_coeffs"):
                err(("curve", k), f"unknown curve key {k!r}")
        for k in ("q", "genus", "weil_coeffs"):
            if k not in curve:
                err(("curve",), f"curve mapping needs {k!r}")
        if _is_int(curve.get("genus")):
            genus = curve["genus"]
        elif "genus" in curve:
            err(("curve", "genus"), "genus must be an integer")
        wc = curve.get("weil_coeffs")
        if wc is not None and not (isinstance(wc, list) and all(_is_int(a) for a in wc)):
            err(("curve", "weil_coeffs"), "weil_coeffs must be a list of integers")
        cq = curve.get("q")
        if cq is not None and not _is_int(cq):
            err(("curve", "q"), "curve q must be an integer")
        if q is not None and cq is not None and q != cq:
            err(("q",), f"top-level q = {q} disagrees with curve q = {cq}")
    else:
        err(("curve",), "curve must be a preset name or a mapping")

    modulus = data.get("modulus")
    if modulus is not None and not (isinstance(modulus, list) and all(_is_int(a) for a in modulus)):
        err(("modulus",), "modulus must be a list of integers")

    S = data.get("S")
    if S is None:
        if cmd not in (None, "curve-validate") and cmd in COMMANDS:
            err(("S",), "missing required key 'S'")
    elif not isinstance(S, dict):
        err(("S",), "S must be a mapping with 'degrees' or 'places'")
    else:
        keys = set(S)
        if keys - {"degrees", "places"}:
            for k in sorted(keys - {"degrees", "places"}):
                err(("S", k), f"unknown S key {k!r}")
        if len(keys & {"degrees", "places"}) != 1:
            err(("S",), "S needs exactly one of 'degrees' or 'places'")
        if "degrees" in S:
            degs = S["degrees"]
            if not (isinstance(degs, list) and degs and all(_is_int(d) and d >= 1 for d in degs)):
                err(("S", "degrees"), "degrees must be a nonempty list of integers >= 1")
        if "places" in S:
            pl = S["places"]
            if not (isinstance(pl, list) and pl):
                err(("S", "places"), "places must be a nonempty list")
            if genus is not None and genus != 0:
                err(("S", "places"), "concrete places require a genus-0 curve")

    params = data.get("params", {})
    if params is None:
        params = {}
    if not isinstance(params, dict):
        err(("params",), "params must be a mapping")
        params = {}
    params = dict(params)
    for k, v in (overrides or {}).items():
        if v is not None:
            params[k] = v
    for k, v in params.items():
        if k not in PARAM_KEYS:
            err(("params", k), f"unknown parameter {k!r}")
        elif k in INT_PARAMS and not _is_int(v):
            err(("params", k), f"parameter {k!r} must be an integer")
        elif k == "N_vec" and not (isinstance(v, list) and all(_is_int(a) for a in v)):
            err(("params", k), "N_vec must be a list of integers")
        elif k == "kind" and v not in ("ideals", "elements"):
            err(("params", k), "kind must be 'ideals' or 'elements'")
        elif k == "brute" and not isinstance(v, bool):
            err(("params", k), "brute must be true or false")
    for k in ("m", "w", "t"):
        if _is_int(params.get(k)) and params[k] < 1:
            err(("params", k), f"{k} must be >= 1")
    if cmd in REQUIRED:
        for k in REQUIRED[cmd]:
            if k not in params:
                err(("params",), f"command {cmd} needs parameter {k!r}")
        if cmd == "count-elements" and "N_vec" not in params and "N" not in params:
            err(("params",), "count-elements needs 'N_vec' or 'N'")
        if (cmd == "density" and params.get("kind") == "elements"
                and genus not in (None, 0)):
            err(("params", "kind"), "element densities need a genus-0 curve")
        if cmd == "count-elements" and genus not in (None, 0):
            err(("curve",), "exact element counts need a genus-0 curve")

    output = data.get("output", {"format": "csv"})
    if not isinstance(output, dict):
        err(("output",), "output must be a mapping")
        output = {"format": "csv"}
    output = dict(output)
    for k in output:
        if k not in ("format", "path"):
            err(("output", k), f"unknown output key {k!r}")
    output.setdefault("format", "csv")
    if output["format"] not in FORMATS:
        err(("output", "format"), f"format must be one of {', '.join(FORMATS)}")
    if "path" in output and not isinstance(output["path"], str):
        err(("output", "path"), "path must be a string")

    budget = data.get("budget")
    if budget is not None and not (_is_int(budget) and budget > 0):
        err(("budget",), "budget must be a positive integer")

    if errors:
        raise ConfigError(errors)

    cfg = RunConfig(command=cmd, curve=curve, q=q, S=S, params=params,
                    output=output, modulus=modulus, budget=budget)
    _semantic_checks(cfg, err)
    if errors:
        raise ConfigError(errors)
    return cfg


def _semantic_checks(cfg: RunConfig, err) -> None:
    try:
        c = cfg.curve_spec()
    except ValueError as exc:
        err(("curve",), str(exc))
        return
    if cfg.S is None or not validate_weil(c).valid:
        # invalid curve data is reported when the command runs
        return
    try:
        s = cfg.s_spec()
        check_compatible(c, s)
    except (WcoprimeError, ValueError) as exc:
        err(("S",), str(exc))
        return
    if cfg.has_places:
        places = cfg.places()
        if len(set(places)) != len(places):
            err(("S", "places"), "places of S must be pairwise distinct")
        nv = cfg.params.get("N_vec")
        if nv is not None and len(nv) != len(places):
            err(("params", "N_vec"), "N_vec length differs from the number of places in S")
