"""Batch command-line front end: JSON in, deterministic JSON report out.

Exit codes: 0 success, 2 precondition or parse failure, 3 internal
cross-check failure.
"""

import argparse
import json
import os
import sys
from importlib import resources

from . import __version__
from .classnumbers import (gate_theorem_CD, hp_minus, load_hplus_table,
                           odd_prime_factor, prime_bound)
from .covers import (SelfCoverWitness, cover_homology_field,
                     mapping_torus_complex, verify_self_cover_relation,
                     wang_dimensions)
from .errors import InternalCheckError, PreconditionError
from .modules import finitely_generated_over_Z, order_ideal
from .periodicity import FgAbelianAutomorphism, cor_period_driver, solve_prop_matrix
from .rings import GF, QQ
from .serialize import (canonical_dumps, complex_to_json, input_digest,
                        laurent_to_json, parse_complex, parse_int,
                        parse_int_matrix, parse_presentation,
                        parse_rational_matrix, scalar_str)

SUBCOMMANDS = ("fingen", "order-ideal", "mapping-torus", "cover-homology",
               "wang", "verify-selfcover", "dimension-bound", "prop-matrix",
               "periodicity", "hp-minus", "gate", "corpus")


def _parse_kappa(raw):
    if raw == "Q":
        return QQ
    if isinstance(raw, str) and raw.startswith("Fp:"):
        try:
            p = int(raw[3:])
        except ValueError:
            raise PreconditionError(f"bad kappa {raw!r}")
        try:
            return GF(p)
        except ValueError as exc:
            raise PreconditionError(str(exc))
    raise PreconditionError(f"kappa must be 'Q' or 'Fp:<p>', got {raw!r}")


def _run_fingen(params):
    m = parse_presentation(params["module"])
    v = finitely_generated_over_Z(m)
    witness = None
    if v.witness is not None:
        witness = {"prime": str(v.witness.prime),
                   "kind": v.witness.kind,
                   "factor": (laurent_to_json(v.witness.factor)
                              if v.witness.factor is not None else None)}
    return {"answer": "yes" if v.answer else "no",
            "witness": witness,
            "underlying_rank": (str(v.underlying_rank)
                                if v.underlying_rank is not None else None),
            "relevant_primes": [str(p) for p in v.relevant_primes]}


def _run_order_ideal(params):
    m = parse_presentation(params["module"])
    return {"order_ideal": laurent_to_json(order_ideal(m))}


def _run_mapping_torus(params):
    spec = params["f"]
    if not isinstance(spec, dict):
        raise PreconditionError("mapping-torus input must be an object")
    for key in ("ranks", "boundaries_F", "f"):
        if key not in spec:
            raise PreconditionError(f"mapping-torus input is missing {key!r}")
    ranks = spec["ranks"]
    if (not isinstance(ranks, list)
            or any(not isinstance(r, int) or isinstance(r, bool) or r < 0
                   for r in ranks)):
        raise PreconditionError(f"bad rank list {ranks!r}")
    bnds = [parse_int_matrix(b) for b in spec["boundaries_F"]]
    f = [parse_int_matrix(b) for b in spec["f"]]
    try:
        x = mapping_torus_complex(ranks, bnds, f)
    except (TypeError, ValueError) as exc:
        raise PreconditionError(str(exc))
    return {"complex": complex_to_json(x)}


def _run_cover_homology(params):
    x = parse_complex(params["complex"])
    kappa = _parse_kappa(params["kappa"])
    q = parse_int(params["q"])
    if q < 1:
        raise PreconditionError("q must be >= 1")
    out = []
    for dim, action in cover_homology_field(x, kappa, q):
        out.append({"dim": dim,
                    "t_action": [[scalar_str(e) for e in row] for row in action]})
    return {"degrees": out}


def _run_wang(params):
    x = parse_complex(params["complex"])
    kappa = _parse_kappa(params["kappa"])
    q = parse_int(params["q"])
    if q < 1:
        raise PreconditionError("q must be >= 1")
    return {"dims": wang_dimensions(x, kappa, q)}


def _run_verify_selfcover(params):
    x = parse_complex(params["complex"])
    k = parse_int(params["k"])
    sign = parse_int(params["sign"])
    hbar = params["hbar"]
    if not isinstance(hbar, list):
        raise PreconditionError("hbar must be a list of matrices")
    w = SelfCoverWitness(k, sign, [parse_rational_matrix(h) for h in hbar])
    per_degree = verify_self_cover_relation(x, w)
    return {"per_degree": per_degree, "ok": all(per_degree)}


def _run_dimension_bound(params):
    x = parse_complex(params["complex"])
    kappa = _parse_kappa(params["kappa"])
    qs = params["q"]
    if not isinstance(qs, list) or not qs:
        raise PreconditionError("q must be a nonempty list of cover degrees")
    per_q = []
    ok = True
    for raw in qs:
        q = parse_int(raw)
        if q < 1:
            raise PreconditionError("q must be >= 1")
        dims = [d for d, _ in cover_homology_field(x, kappa, q)]
        holds = all(d <= r for d, r in zip(dims, x.ranks))
        ok = ok and holds
        per_q.append({"q": q, "dims": dims, "bounds": list(x.ranks), "ok": holds})
    return {"ok": ok, "per_q": per_q}


def _run_prop_matrix(params):
    a = parse_int_matrix(params["a"])
    b = parse_int_matrix(params["b"])
    k = parse_int(params["k"])
    sign = parse_int(params["sign"])
    try:
        m = solve_prop_matrix(a, b, k, sign)
    except InternalCheckError:
        raise
    except (TypeError, ValueError) as exc:
        raise PreconditionError(str(exc))
    return {"m": str(m)}


def _parse_automorphism(obj):
    if not isinstance(obj, dict):
        raise PreconditionError(f"bad automorphism {obj!r}")
    try:
        free = parse_int_matrix(obj["free"])
        orders = [parse_int(d) for d in obj.get("torsion_orders", [])]
        torsion = parse_int_matrix(obj.get("torsion", []))
        mixing = parse_int_matrix(obj.get("mixing", []))
        return FgAbelianAutomorphism(free, orders, torsion, mixing)
    except KeyError as exc:
        raise PreconditionError(f"automorphism is missing field {exc}")
    except (TypeError, ValueError) as exc:
        raise PreconditionError(str(exc))


def _run_periodicity(params):
    mono_raw = params["monodromy"]
    wit_raw = params["witness"]
    if not isinstance(mono_raw, list) or not isinstance(wit_raw, list):
        raise PreconditionError("monodromy and witness must be lists")
    k = parse_int(params["k"])
    monodromy = [_parse_automorphism(o) for o in mono_raw]
    witness = []
    for o in wit_raw:
        if not isinstance(o, dict) or "b" not in o or "sign" not in o:
            raise PreconditionError(f"bad conjugation witness {o!r}")
        witness.append((parse_int_matrix(o["b"]), parse_int(o["sign"])))
    try:
        m, l = cor_period_driver(monodromy, k, witness)
    except InternalCheckError:
        raise
    except (TypeError, ValueError) as exc:
        raise PreconditionError(str(exc))
    return {"m": str(m), "l": str(l)}


def _run_hp_minus(params):
    p = parse_int(params["p"])
    h = hp_minus(p, prime_bound())
    odd = odd_prime_factor(h)
    return {"p": p, "h_minus": str(h),
            "odd_prime_factor": str(odd) if odd is not None else None}


def _run_gate(params):
    p = parse_int(params["p"])
    fixture_path = params["fixture"]
    if fixture_path in (None, "default"):
        from .classnumbers import default_fixture_path
        fixture_path = default_fixture_path()
    fixture = load_hplus_table(fixture_path)
    rep = gate_theorem_CD(p, fixture, prime_bound())
    entry = None
    if rep.h_plus_entry is not None:
        entry = {"factors": [str(q) for q in rep.h_plus_entry.factors],
                 "source": rep.h_plus_entry.source,
                 "heuristic": rep.h_plus_entry.heuristic}
    return {"p": p,
            "h_minus": str(rep.h_minus),
            "h_minus_odd_factor": (str(rep.h_minus_odd_factor)
                                   if rep.h_minus_odd_factor is not None else None),
            "h_plus_entry": entry,
            "h_plus_odd_factor": (str(rep.h_plus_odd_factor)
                                  if rep.h_plus_odd_factor is not None else None),
            "gate": rep.gate if rep.gate is not None else "unknown"}


_DISPATCH = {
    "fingen": _run_fingen,
    "order-ideal": _run_order_ideal,
    "mapping-torus": _run_mapping_torus,
    "cover-homology": _run_cover_homology,
    "wang": _run_wang,
    "verify-selfcover": _run_verify_selfcover,
    "dimension-bound": _run_dimension_bound,
    "prop-matrix": _run_prop_matrix,
    "periodicity": _run_periodicity,
    "hp-minus": _run_hp_minus,
    "gate": _run_gate,
}


def compute(subcommand, params):
    """Run one subcommand on already-parsed JSON parameters."""
    if subcommand not in _DISPATCH:
        raise PreconditionError(f"unknown subcommand {subcommand!r}")
    return _DISPATCH[subcommand](params)


def default_corpus_path():
    return str(resources.files("cyclocover").joinpath("data/corpus"))


def run_corpus(path):
    if not os.path.isdir(path):
        raise PreconditionError(f"corpus directory {path!r} does not exist")
    names = sorted(n for n in os.listdir(path) if n.endswith(".json"))
    cases = []
    failed = 0
    for name in names:
        full = os.path.join(path, name)
        try:
            with open(full) as fh:
                case = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise PreconditionError(f"corrupted corpus case {full}: {exc}")
        if (not isinstance(case, dict)
                or not {"subcommand", "params", "expected"} <= set(case)):
            raise PreconditionError(
                f"corrupted corpus case {full}: need subcommand/params/expected")
        actual = compute(case["subcommand"], case["params"])
        ok = canonical_dumps(actual) == canonical_dumps(case["expected"])
        if not ok:
            failed += 1
        entry = {"name": name, "subcommand": case["subcommand"], "ok": ok}
        if not ok:
            entry["expected"] = case["expected"]
            entry["actual"] = actual
        cases.append(entry)
    return {"cases": cases, "total": len(names),
            "passed": len(names) - failed, "failed": failed}


def _json_arg(raw):
    """Inline JSON, or @path to read JSON from a file."""
    text = raw
    if raw.startswith("@"):
        try:
            with open(raw[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise PreconditionError(f"cannot read {raw[1:]!r}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"bad JSON argument: {exc}")


def _build_parser():
    parser = argparse.ArgumentParser(prog="cyclocover")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, *flags):
        sp = sub.add_parser(name)
        for flag in flags:
            sp.add_argument(flag, required=True)
        sp.add_argument("--out")
        return sp

    add("fingen", "--module")
    add("order-ideal", "--module")
    add("mapping-torus", "--f")
    add("cover-homology", "--complex", "--kappa", "--q")
    add("wang", "--complex", "--kappa", "--q")
    add("verify-selfcover", "--complex", "--k", "--sign", "--hbar")
    add("dimension-bound", "--complex", "--kappa", "--q")
    add("prop-matrix", "--a", "--b", "--k", "--sign")
    add("periodicity", "--monodromy", "--k", "--witness")
    add("hp-minus", "--p")
    gate = sub.add_parser("gate")
    gate.add_argument("--p", required=True)
    gate.add_argument("--fixture")
    gate.add_argument("--out")
    corpus = sub.add_parser("corpus")
    corpus.add_argument("--path")
    corpus.add_argument("--out")
    return parser


def _collect_params(args):
    sc = args.subcommand
    if sc in ("fingen", "order-ideal"):
        return {"module": _json_arg(args.module)}
    if sc == "mapping-torus":
        return {"f": _json_arg(args.f)}
    if sc in ("cover-homology", "wang"):
        return {"complex": _json_arg(args.complex), "kappa": args.kappa,
                "q": _parse_cli_int(args.q)}
    if sc == "verify-selfcover":
        return {"complex": _json_arg(args.complex),
                "k": _parse_cli_int(args.k), "sign": _parse_cli_int(args.sign),
                "hbar": _json_arg(args.hbar)}
    if sc == "dimension-bound":
        return {"complex": _json_arg(args.complex), "kappa": args.kappa,
                "q": [_parse_cli_int(tok) for tok in args.q.split(",")]}
    if sc == "prop-matrix":
        return {"a": _json_arg(args.a), "b": _json_arg(args.b),
                "k": _parse_cli_int(args.k), "sign": _parse_cli_int(args.sign)}
    if sc == "periodicity":
        return {"monodromy": _json_arg(args.monodromy),
                "k": _parse_cli_int(args.k),
                "witness": _json_arg(args.witness)}
    if sc == "hp-minus":
        return {"p": _parse_cli_int(args.p)}
    if sc == "gate":
        fixture = args.fixture
        if fixture is None:
            from .classnumbers import default_fixture_path
            fixture = default_fixture_path()
        return {"p": _parse_cli_int(args.p), "fixture": fixture}
    raise PreconditionError(f"unknown subcommand {sc!r}")


def _parse_cli_int(raw):
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise PreconditionError(f"bad integer argument {raw!r}")


def _emit(payload, out_path):
    text = canonical_dumps(payload) + "\n"
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)


def run(argv):
    parser = _build_parser()
    args = parser.parse_args(argv)
    out_path = args.out
    try:
        if args.subcommand == "corpus":
            path = args.path or default_corpus_path()
            params = {"path": path}
            result = run_corpus(path)
            report = {"subcommand": "corpus",
                      "input_digest": input_digest(params),
                      "result": result, "warnings": [],
                      "version": __version__}
            _emit(report, out_path)
            return 0 if result["failed"] == 0 else 1
        params = _collect_params(args)
        result = compute(args.subcommand, params)
        report = {"subcommand": args.subcommand,
                  "input_digest": input_digest(params),
                  "result": result, "warnings": [],
                  "version": __version__}
        _emit(report, out_path)
        return 0
    except InternalCheckError as exc:
        _emit({"error": {"kind": "internal-check", "message": str(exc)}},
              out_path)
        return 3
    except (PreconditionError, ValueError, TypeError, KeyError) as exc:
        _emit({"error": {"kind": "precondition", "message": str(exc)}},
              out_path)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
