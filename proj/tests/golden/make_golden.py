#!/usr/bin/env python3
"""Writes the golden job corpus and, with --bless, the expected outputs."""
import json
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
Z1 = {"type": "integers", "dim": 1}

# name -> (args, exit code, job)
JOBS = {
    "ehrhart_square": ("ehrhart", 0, {"polytope": {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]}, "counts_through": 4}),
    "ehrhart_half_segment": ("ehrhart", 0, {"polytope": {"vertices": [["0"], ["1/2"]]}}),
    "ehrhart_pretty": ("ehrhart --pretty", 0, {"polytope": {"vertices": [[0, 0], [1, 0], [0, 1]]}}),
    "colorcount_truncated": ("colorcount", 0, {
        "polytope": {"vertices": [[0], [1]]},
        "coloring": {"type": "associated", "semigroup": {"type": "truncated", "cap": 3}, "generators": [1]}}),
    "colorcount_at_n": ("colorcount", 0, {
        "polytope": {"vertices": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
        "coloring": {"type": "associated", "semigroup": Z1, "generators": [0, 2, 3]}, "n": 5}),
    "sumset_two_sets": ("sumset", 0, {"semigroup": Z1, "sets": [[0, 1], [0, 2]], "n": [3, 2]}),
    "sep_one_set": ("sep", 0, {"semigroup": Z1, "sets": [[0, 2, 3]]}),
    "sep_two_sets": ("sep", 0, {"semigroup": Z1, "sets": [[0, 1], [0, 2]]}),
    "sep_cyclic": ("sep", 0, {"semigroup": {"type": "cyclic_add", "modulus": 4}, "sets": [[1, 2]]}),
    "sep_small_box": ("sep --box 4", 4, {"semigroup": Z1, "sets": [[0, 1], [0, 2]]}),
    "sep_cap": ("sep --cap 0", 3, {"semigroup": Z1, "sets": [[0, 1], [0, 2]]}),
    "charsum_alternating": ("charsum", 0, {"semigroup": Z1, "sets": [[0, 1]], "character": {"order": 2, "weights": [1]}}),
    "charsum_cyclic": ("charsum", 0, {
        "semigroup": {"type": "cyclic_add", "modulus": 3}, "sets": [[1]], "character": {"order": 3, "weights": [1]}}),
    "gf_coefficient": ("gf", 0, {"op": "coefficient", "gf": {"arity": 1, "terms": [{"b": [2], "e": [3]}]}, "n": [5]}),
    "gf_substitute": ("gf", 0, {
        "op": "substitute", "partition": [[1, 2]],
        "gf": {"arity": 2, "terms": [{"b": [0, 0], "alpha": [1, 2], "e": [1, 1]}]}}),
    "gf_extract_sep": ("gf", 0, {"op": "extract", "form": "sep", "gf": {"arity": 1, "terms": [{"b": [1], "e": [2]}]}}),
    "gf_extract_exp_poly": ("gf", 0, {
        "op": "extract", "form": "exp_poly", "gf": {"arity": 1, "terms": [{"b": [0], "alpha": [-1], "e": [2]}]}}),
    "gf_extract_twisted_sep": ("gf", 1, {
        "op": "extract", "form": "sep", "gf": {"arity": 1, "terms": [{"b": [0], "alpha": [-1], "e": [1]}]}}),
    "gf_from_numerator": ("gf", 0, {
        "op": "from-numerator", "arity": 2,
        "numerator": [{"exponent": [1, 0], "coeff": 1}, {"exponent": [0, 1], "coeff": 1}, {"exponent": [1, 1], "coeff": -1}]}),
    "gf_not_a_set": ("gf", 1, {"op": "from-numerator", "arity": 1, "numerator": [{"exponent": [0], "coeff": 2}]}),
    "orthants_intersect": ("orthants", 0, {
        "op": "intersect", "dimension": 2, "orthants": [{"s": [1, 0]}, {"s": [0, 2], "I": [1]}]}),
    "orthants_complement": ("orthants", 0, {"op": "complement", "dimension": 2, "orthant": {"s": [1, 2]}}),
    "orthants_union": ("orthants", 0, {
        "op": "union", "dimension": 2, "sets": [[{"s": [2, 0]}], [{"s": [0, 3]}, {"s": [3, 3]}]]}),
    "orthants_membership": ("orthants", 0, {"op": "membership", "dimension": 2, "set": [{"s": [1, 1]}], "point": [2, 0]}),
    "orthants_gf": ("orthants", 0, {"op": "gf", "dimension": 2, "set": [{"s": [1, 0]}, {"s": [0, 1], "I": [2]}]}),
    "orthants_upper_ideal_gf": ("orthants", 0, {"op": "upper_ideal_gf", "dimension": 2, "antichain": [[2, 0], [0, 1]]}),
    "orthants_minimal": ("orthants", 0, {"op": "minimal", "dimension": 2, "set": [{"s": [2, 1]}, {"s": [0, 3]}], "box": 5}),
    "substantial_slice": ("substantial", 0, {
        "coloring": {"type": "associated", "semigroup": Z1, "generators": [1, 1]}, "slice": [3]}),
    "substantial_ideal": ("substantial", 0, {
        "coloring": {"type": "associated", "semigroup": Z1, "generators": [0, 2, 3]}, "box": 4}),
    "substantial_not_additive": ("substantial", 1, {"coloring": {"type": "explicit", "k": 1, "bound": 3, "table": [0, 1, 0, 0]}}),
    "iterimage_capped": ("iterimage", 0, {
        "family": {"ground_size": 6, "maps": [[1, 2, 3, 4, 5, 5], [2, 3, 4, 5, 5, 5]], "partition": [[1, 2]]}, "B": [0]}),
    "iterimage_at_n": ("iterimage", 0, {
        "family": {"ground_size": 6, "maps": [[1, 2, 3, 4, 5, 5], [2, 3, 4, 5, 5, 5]], "partition": [[1, 2]]},
        "B": [0], "n": [3]}),
    "iterimage_non_commuting": ("iterimage", 1, {
        "family": {"ground_size": 5, "maps": [[1, 2, 3, 4, 0], [0, 2, 4, 1, 3]], "partition": [[1, 2]]}, "B": [0]}),
    "fit_polynomial": ("fit", 0, {
        "kind": "polynomial", "degree": 2, "samples": [{"point": n, "value": n * n + 1} for n in range(6)]}),
    "fit_sep": ("fit", 0, {
        "kind": "sep", "samples": [{"point": n, "value": 1 if n == 0 else 3 if n == 1 else 3 * n} for n in range(16)]}),
    "fit_missing_sample": ("fit", 4, {"kind": "sep", "samples": [{"point": 0, "value": 1}, {"point": 1, "value": 2}]}),
    "verify_decomposition": ("verify", 0, {
        "check": "decomposition", "polytope": {"vertices": [[0, 0], [2, 0], [0, 1]]}, "range": [2, 6]}),
    "verify_rational_decomposition": ("verify", 0, {
        "check": "rational_decomposition", "polytope": {"vertices": [["0", "0"], ["3/2", "0"], ["0", "1/2"]]}, "range": [4, 8]}),
    "verify_shift_stability_witness": ("verify", 1, {
        "check": "shift_stability", "coloring": {"type": "explicit", "k": 1, "bound": 3, "table": [0, 1, 0, 0]}}),
    "verify_semigroup": ("verify", 1, {"check": "semigroup", "semigroup": {"type": "table", "table": [[0, 1], [0, 1]]}}),
    "verify_character": ("verify", 0, {
        "check": "character", "semigroup": {"type": "cyclic_add", "modulus": 4}, "character": {"order": 4, "table": [0, 1, 2, 3]}}),
    "verify_encoding": ("verify", 0, {
        "check": "encoding", "family": {"ground_size": 4, "maps": [[1, 2, 3, 0], [2, 3, 0, 1]], "partition": [[1], [2]]},
        "B": [0], "box": 3}),
    "verify_random": ("verify --seed 7", 0, {"check": "random", "corpus": "gf_roundtrip", "count": 10}),
    "bad_document": ("ehrhart", 2, {"polytope": {"points": []}}),
}


def main() -> int:
    (HERE / "jobs").mkdir(exist_ok=True)
    (HERE / "expected").mkdir(exist_ok=True)
    manifest = []
    for name, (args, code, job) in JOBS.items():
        doc = {"command": args.split()[0], **job}
        (HERE / "jobs" / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        manifest.append({"name": name, "args": args, "exit": code})
    (HERE / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")
    if len(sys.argv) > 2 and sys.argv[1] == "--bless":
        tool = sys.argv[2]
        for entry in manifest:
            cmd = [tool, *entry["args"].split(), "--input", str(HERE / "jobs" / f"{entry['name']}.json")]
            r = subprocess.run(cmd, capture_output=True)
            (HERE / "expected" / f"{entry['name']}.out").write_bytes(r.stdout)
            if r.returncode != entry["exit"]:
                print(f"{entry['name']}: exit {r.returncode}, expected {entry['exit']}: {r.stdout.decode()[:300]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
