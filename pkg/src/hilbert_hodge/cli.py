"""Batch front-end: assemble tables or run the verification sweep.

Verbs:

* ``table``        -- full mixed-Hodge table for one system,
* ``sheaf-matrix`` -- the closed-form cohomology-sheaf matrix,
* ``eisenstein``   -- boundary cohomology data per degree,
* ``verify``       -- the cross-validation sweep.

Inputs come from flags or a JSON config file (flags win).  Output is text,
JSON (canonical: sorted keys, sorted arrays) or a LaTeX tabular fragment.
Exit status: 0 on success, 1 on a validation/configuration error, 2 when a
verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .consistency import SweepBounds, run_verification
from .errors import ConfigError, HilbertHodgeError
from .kunneth import cohomology_sheaf_closed_form
from .model import (
    LocalSystemSpec,
    VarietyInvariants,
    validate_spec,
)
from .serialize import (
    dump_json,
    eisenstein_document,
    sheaf_matrix_document,
    table_document,
    verify_document,
)
from .tables import eisenstein_data, ih_table, mhs_table

FORMATS = ("text", "json", "latex")
MODES = ("table", "sheaf-matrix", "eisenstein", "verify")


@dataclass(frozen=True)
class RunConfig:
    """One fully resolved invocation: mode plus the fields it needs.

    Built from flags merged over an optional JSON config file; the
    mode-specific required fields are validated before any computation.
    """

    mode: str
    fmt: str = "text"
    n: int | None = None
    m: tuple[int, ...] | None = None
    cusps: int | None = None
    genus: int | None = None
    oracle_cap: int | None = None
    max_n: int | None = None
    max_m: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"unknown format {self.fmt!r}")

    def require(self, *names: str) -> None:
        for name in names:
            if getattr(self, name) is None:
                raise ConfigError(f"missing required setting --{name}")


def _parse_m(value) -> tuple[int, ...]:
    if isinstance(value, (list, tuple)):
        try:
            return tuple(int(x) for x in value)
        except (TypeError, ValueError):
            raise ConfigError(f"bad weight list {value!r}")
    try:
        return tuple(int(part) for part in str(value).split(",") if part.strip() != "")
    except ValueError:
        raise ConfigError(f"--m expects a comma-separated integer list, got {value!r}")


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}")
    if not isinstance(cfg, dict):
        raise ConfigError("config file must hold a JSON object")
    return cfg


def _setting(args, cfg: dict, name: str, default=None):
    """Flag value if given, else config value, else default."""
    flag = getattr(args, name.replace("-", "_"), None)
    if flag is not None:
        return flag
    if name in cfg:
        return cfg[name]
    return default


def resolve_config(args, mode: str) -> RunConfig:
    """Merge flags over the optional config file into one RunConfig."""
    cfg = _load_config(getattr(args, "config", None))

    def opt_int(name):
        value = _setting(args, cfg, name)
        if value is None:
            return None
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"setting {name} must be an integer, got {value!r}")

    m = _setting(args, cfg, "m")
    return RunConfig(
        mode=mode,
        fmt=_setting(args, cfg, "format", default="text"),
        n=opt_int("n"),
        m=None if m is None else _parse_m(m),
        cusps=opt_int("cusps"),
        genus=opt_int("genus"),
        oracle_cap=opt_int("oracle_cap"),
        max_n=opt_int("max_n"),
        max_m=opt_int("max_m"),
    )


def _spec_of(config: RunConfig, *, table: bool) -> LocalSystemSpec:
    config.require("n", "m")
    return validate_spec(config.n, config.m, table=table)


def _invariants_of(config: RunConfig, n: int) -> VarietyInvariants:
    config.require("cusps", "genus")
    return VarietyInvariants(n, config.cusps, config.genus)


def _emit(doc: dict, fmt: str, text_renderer, latex_renderer) -> None:
    if fmt == "json":
        sys.stdout.write(dump_json(doc))
    elif fmt == "latex":
        sys.stdout.write(latex_renderer(doc))
    else:
        sys.stdout.write(text_renderer(doc))


# ---------------------------------------------------------------- rendering


def _mono_text(obj: dict) -> str:
    parts = [
        f"L{i + 1}^{s}" for i, s in enumerate(obj["exponents"]) if s != 0
    ]
    body = " ".join(parts) if parts else "1"
    return f"O(-S) {body}" if obj["minus_s"] else body


def _mono_latex(obj: dict) -> str:
    parts = [
        f"\\mathcal{{L}}_{{{i + 1}}}^{{{s}}}"
        for i, s in enumerate(obj["exponents"])
        if s != 0
    ]
    body = "".join(parts) if parts else "\\mathcal{O}"
    return f"\\mathcal{{O}}(-S)\\otimes {body}" if obj["minus_s"] else body


def _label_text(obj: dict) -> str:
    space = "S" if obj["restricted_to_s"] else "Xbar"
    tail = "|_S" if obj["restricted_to_s"] else ""
    return f"H^{obj['degree']}({space}, {_mono_text(obj)}{tail})"


def _header_text(doc: dict) -> list[str]:
    lines = []
    if "spec" in doc:
        s = doc["spec"]
        lines.append(f"local system: n={s['n']} m={tuple(s['m'])}")
    if "invariants" in doc:
        i = doc["invariants"]
        lines.append(f"variety: cusps={i['cusps']} genus={i['genus']}")
    return lines


def render_table_text(doc: dict) -> str:
    lines = _header_text(doc)
    tables = doc["tables"]
    lines.append(f"mhs defined over: {tables['mhs_field']}")
    lines.append("")
    lines.append("H^k  dim  weight levels      hodge numbers")
    for row in tables["H"]:
        weights = " ".join(f"{w['weight']}:{w['dim']}" for w in row["weights"]) or "-"
        hodge = (
            " ".join(f"({h['p']},{h['q']}):{h['dim']}" for h in row["hodge"]) or "-"
        )
        note = f"  ({row['note']})" if row["note"] else ""
        lines.append(f"k={row['k']:<3} {row['dim']:<4} {weights:<18} {hodge}{note}")
    lines.append("")
    ih = tables["IH"]
    nonzero = [r for r in ih["rows"] if r["dim"]]
    ih_txt = " ".join(f"IH^{r['k']}={r['dim']}" for r in nonzero) or "all zero"
    lines.append(f"intersection cohomology: {ih_txt}")
    hodge = " ".join(f"({h['p']},{h['q']}):{h['dim']}" for h in ih["hodge"])
    if hodge:
        lines.append(f"  middle hodge numbers: {hodge}")
    lines.append("")
    for row in tables["Eis"]:
        lines.append(f"eisenstein k={row['k']}: dim {row['dim']}")
        for b in row["basis"]:
            lines.append(
                f"  a={set(b['a']) or '{}'} alpha={tuple(b['alpha'])} "
                f"beta={tuple(b['beta'])}"
            )
    lines.append("")
    lines.append("graded pieces of the Hodge filtration (middle and boundary):")
    n = doc["spec"]["n"]
    for row in tables["H"]:
        if not n <= row["k"] <= 2 * n - 1:
            continue
        for g in row["grF"]:
            labels = ", ".join(_label_text(lb) for lb in g["labels"])
            lines.append(f"  k={row['k']} Gr_F^{g['p']}: {labels}")
    return "\n".join(lines) + "\n"


def render_table_latex(doc: dict) -> str:
    tables = doc["tables"]
    out = []
    out.append("\\begin{tabular}{rrll}")
    out.append("$k$ & $\\dim H^k$ & weights & Hodge numbers \\\\")
    for row in tables["H"]:
        weights = (
            ", ".join(f"${w['weight']}\\colon {w['dim']}$" for w in row["weights"])
            or "--"
        )
        hodge = (
            ", ".join(
                f"$h^{{{h['p']},{h['q']}}}={h['dim']}$" for h in row["hodge"]
            )
            or "--"
        )
        out.append(f"${row['k']}$ & ${row['dim']}$ & {weights} & {hodge} \\\\")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


def render_sheaf_text(doc: dict) -> str:
    lines = _header_text(doc)
    lines.append("cohomology sheaves (P, l) -> line bundles:")
    for row in doc["tables"]["C"]:
        monos = ", ".join(_mono_text(obj) for obj in row["monomials"])
        lines.append(f"  (P={row['p']}, l={row['l']}): {monos}")
    return "\n".join(lines) + "\n"


def render_sheaf_latex(doc: dict) -> str:
    out = ["\\begin{tabular}{rrl}"]
    out.append("$P$ & $l$ & $\\mathcal{C}^{P,l}$ \\\\")
    for row in doc["tables"]["C"]:
        monos = " \\oplus ".join("$" + _mono_latex(o) + "$" for o in row["monomials"])
        out.append(f"${row['p']}$ & ${row['l']}$ & {monos} \\\\")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


def render_eis_text(doc: dict) -> str:
    lines = _header_text(doc)
    for row in doc["tables"]["Eis"]:
        lines.append(f"eisenstein k={row['k']}: dim {row['dim']}")
        for b in row["basis"]:
            lines.append(
                f"  a={set(b['a']) or '{}'} alpha={tuple(b['alpha'])} "
                f"beta={tuple(b['beta'])}"
            )
    return "\n".join(lines) + "\n"


def render_eis_latex(doc: dict) -> str:
    out = ["\\begin{tabular}{rrll}"]
    out.append("$k$ & $\\dim$ & $a$ & $(\\alpha,\\beta)$ \\\\")
    for row in doc["tables"]["Eis"]:
        if not row["basis"]:
            out.append(f"${row['k']}$ & ${row['dim']}$ & -- & -- \\\\")
        for b in row["basis"]:
            members = ",".join(str(x) for x in b["a"])
            a = f"\\{{{members}\\}}" if members else "\\emptyset"
            out.append(
                f"${row['k']}$ & ${row['dim']}$ & ${a}$ & "
                f"$({tuple(b['alpha'])},{tuple(b['beta'])})$ \\\\"
            )
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


def render_verify_text(doc: dict) -> str:
    s = doc["summary"]
    lines = [
        f"checks: {s['passed']} passed, {s['failed']} failed, "
        f"{s['skipped']} skipped"
    ]
    for row in doc["checks"]:
        if row["status"] == "fail":
            lines.append(
                f"FAIL {row['name']} [{row['params']}]: "
                f"lhs={row['lhs']} rhs={row['rhs']}"
            )
    lines.append("OK" if s["ok"] else "FAILED")
    return "\n".join(lines) + "\n"


def render_verify_latex(doc: dict) -> str:
    s = doc["summary"]
    out = ["\\begin{tabular}{lr}"]
    out.append(f"passed & {s['passed']} \\\\")
    out.append(f"failed & {s['failed']} \\\\")
    out.append(f"skipped & {s['skipped']} \\\\")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


# -------------------------------------------------------------------- verbs


def _run_table(config: RunConfig) -> int:
    spec = _spec_of(config, table=True)
    inv = _invariants_of(config, spec.n)
    mhs = mhs_table(spec, inv)
    ih = ih_table(spec, inv)
    eis = [eisenstein_data(spec, inv, k) for k in range(spec.n, 2 * spec.n)]
    doc = table_document(spec, inv, mhs, ih, eis)
    _emit(doc, config.fmt, render_table_text, render_table_latex)
    return 0


def _run_sheaf_matrix(config: RunConfig) -> int:
    spec = _spec_of(config, table=False)
    doc = sheaf_matrix_document(spec, cohomology_sheaf_closed_form(spec))
    _emit(doc, config.fmt, render_sheaf_text, render_sheaf_latex)
    return 0


def _run_eisenstein(config: RunConfig) -> int:
    spec = _spec_of(config, table=True)
    inv = _invariants_of(config, spec.n)
    eis = [eisenstein_data(spec, inv, k) for k in range(spec.n, 2 * spec.n)]
    doc = eisenstein_document(spec, inv, eis)
    _emit(doc, config.fmt, render_eis_text, render_eis_latex)
    return 0


def _run_verify(config: RunConfig) -> int:
    defaults = SweepBounds()
    bounds = SweepBounds(
        max_n=defaults.max_n if config.max_n is None else config.max_n,
        max_m=defaults.max_m if config.max_m is None else config.max_m,
        oracle_cap=config.oracle_cap,
    )
    report = run_verification(bounds)
    doc = verify_document(report, {"max_n": bounds.max_n, "max_m": bounds.max_m})
    _emit(doc, config.fmt, render_verify_text, render_verify_latex)
    return 0 if report.ok else 2


_RUNNERS = {
    "table": _run_table,
    "sheaf-matrix": _run_sheaf_matrix,
    "eisenstein": _run_eisenstein,
    "verify": _run_verify,
}


def run(config: RunConfig) -> int:
    """Execute one resolved configuration; returns the exit status."""
    return _RUNNERS[config.mode](config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbert-hodge",
        description=(
            "Exact mixed-Hodge-structure tables for cohomology of "
            "non-trivial local systems on Hilbert modular varieties."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, spec=False, invariants=False, verify=False):
        p.add_argument("--config", help="JSON config file; flags override it")
        p.add_argument("--format", choices=FORMATS, help="output format")
        if spec:
            p.add_argument("--n", type=int, help="number of factors")
            p.add_argument("--m", help="comma-separated weights, e.g. 1,1")
        if invariants:
            p.add_argument("--cusps", type=int, help="number of cusps")
            p.add_argument("--genus", type=int, help="geometric genus")
        if verify:
            p.add_argument("--max-n", type=int, help="sweep bound on n")
            p.add_argument("--max-m", type=int, help="sweep bound on weights")
            p.add_argument(
                "--oracle-cap", type=int, help="basis-size cap for the oracle"
            )

    p = sub.add_parser("table", help="full mixed Hodge structure table")
    add_common(p, spec=True, invariants=True)

    p = sub.add_parser("sheaf-matrix", help="closed-form cohomology sheaves")
    add_common(p, spec=True)

    p = sub.add_parser("eisenstein", help="boundary cohomology data")
    add_common(p, spec=True, invariants=True)

    p = sub.add_parser("verify", help="run the cross-validation sweep")
    add_common(p, verify=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for failed checks
        return 0 if exc.code in (0, None) else 1
    try:
        return run(resolve_config(args, args.command))
    except HilbertHodgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
