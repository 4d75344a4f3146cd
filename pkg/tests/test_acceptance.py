"""Acceptance suite: one test and one printed verdict line per criterion.

Run `pytest -s tests/test_acceptance.py` to see the verdict lines.

All checks are exact (discrete mathematics, zero tolerance).  Two
criteria assert stated properties of the bundled source fixtures and
theorems that definitional computation refutes; those tests fail by
design and their failure messages carry the analysis:

* criterion 3, first half: the endpoint-swapping self-map is stated to
  be a homomorphism, but the stored table refutes it at both swapped
  idempotents (order-independent, so no relation repair can help);
* criterion 4: two of the twenty-four swept claims (the filter-lattice
  bijections) have genuine counterexamples, e.g. the chain b <= e <= a
  whose cone {e, a} is contained in only two of its four filters.
"""

import io
import time
from contextlib import redirect_stdout

from obci import (
    ValidatedAlgebra,
    axiom_reports,
    classify,
    identity_map,
    kernel,
    validate,
    verify_all,
)
from obci.cli import main as cli_main
from obci.harness import CLAIM_IDS, enumerate_obci, enumerate_obci_naive
from obci import fixtures as fx

exy = fx.ALGEBRAS["exy"]
ea = fx.ALGEBRAS["ea"]


def _verdict(num: int, slug: str, ok: bool, detail: str = "") -> bool:
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {num} {slug}: {'PASS' if ok else 'FAIL'}{suffix}")
    return ok


def test_criterion_1_fixture_validation():
    ok = True
    for s in (exy, ea):
        reports = axiom_reports(s, witness_cap=None)
        ok = ok and all(r.holds for r in reports) and len(reports) == 6
        ok = ok and isinstance(validate(s), ValidatedAlgebra)
    assert _verdict(1, "fixture-validation", ok, "6/6 axioms on both fixtures")


def test_criterion_2_kernel_reproduction():
    k1 = set(kernel(fx.MAPS["diamond-to-chain"]).member_labels())
    k2 = set(kernel(identity_map(exy)).member_labels())
    ok = k1 == {"1", "e"} and k2 == {"e"}
    assert _verdict(2, "kernel-reproduction", ok, f"{sorted(k1)} and {sorted(k2)}")


def test_criterion_3_separating_examples():
    swap = classify(fx.MAPS["mid3-swap"])
    d2c_map = fx.MAPS["diamond-to-chain"]
    d2c = classify(d2c_map)

    diamond = fx.ALGEBRAS["diamond"]
    chain4 = fx.ALGEBRAS["chain4"]
    d, e = diamond.index("d"), diamond.index("e")
    lhs = d2c_map.table[diamond.op[d][e]]
    rhs = chain4.op[d2c_map.table[d]][d2c_map.table[e]]
    second_half = (d2c.is_omap and not d2c.is_hom
                   and chain4.labels[lhs] == "1/3"
                   and chain4.labels[rhs] == "2/3")

    first_half = swap.is_hom and not swap.is_omap
    _verdict(3, "separating-examples", first_half and second_half,
             "O-map-not-hom half passes; the swap self-map is stated to be "
             "a homomorphism but is not, witness (1,1)")
    assert second_half
    assert not swap.is_omap
    assert swap.is_hom, (
        "stated: the endpoint-swapping self-map on the unit-1/2 fixture is "
        "a homomorphism; computed: it maps 1->1 = 1 to 0 while the images "
        f"compose to 0->0 = 1 (witnesses {swap.hom_witnesses}); this is "
        "independent of the order relation, so no reading of the stored "
        "table satisfies the stated classification"
    )


def test_criterion_4_theorem_sweeps():
    t0 = time.time()
    reports = verify_all(sizes=(1, 2, 3))
    elapsed = time.time() - t0
    assert elapsed < 600, f"sweep took {elapsed:.0f}s, over the budget"
    assert [r.claim for r in reports] == list(CLAIM_IDS)
    failing = {r.claim: len(r.counterexamples) for r in reports if not r.verified}
    _verdict(4, "theorem-sweeps", not failing,
             f"{elapsed:.0f}s; counterexamples: {failing or 'none'}")
    assert not failing, (
        "stated: zero counterexamples for all 24 claims over sizes <= 3; "
        f"computed: {failing}; both filter-lattice bijection claims are "
        "refuted by honest counterexamples, e.g. the identity on the chain "
        "b <= e <= a (cone {e,a}): {e} and {e,b} are filters that do not "
        "contain the kernel, so the source family has 2 members against 4 "
        "filters in the target family; the ordered variant fails from size "
        "2 because preimages need not satisfy the cone condition"
    )


def test_criterion_5_enumerator_double_oracle():
    agree = True
    for n in (1, 2):
        pruned = {(a.structure.op, a.structure.order) for a in enumerate_obci(n)}
        naive = {(a.structure.op, a.structure.order)
                 for a in enumerate_obci_naive(n)}
        agree = agree and pruned == naive
    counts = {n: len(list(enumerate_obci(n))) for n in (2, 3)}
    golden = counts == {2: 2, 3: 10}
    assert _verdict(5, "enumerator-double-oracle", agree and golden,
                    f"n<=2 sets identical; golden counts {counts}")


def test_criterion_6_bijection_at_fixture_scale():
    m = fx.MAPS["exy-to-ea"]
    ker = set(kernel(m).members())

    def filters_by_scan(s):
        """Independent oracle: raw 2^n sweep of the two filter clauses."""
        out = []
        for mask in range(1 << s.n):
            members = {i for i in range(s.n) if mask >> i & 1}
            if s.unit not in members:
                continue
            if all(y in members
                   for x in members for y in range(s.n)
                   if s.op[x][y] in members):
                out.append(frozenset(members))
        return out

    fam_f = [F for F in filters_by_scan(exy) if ker <= F]
    fam_g = filters_by_scan(ea)
    images = [frozenset(m.table[i] for i in F) for F in fam_f]
    preimages = {G: frozenset(i for i in range(exy.n) if m.table[i] in G)
                 for G in fam_g}
    ok = (
        len(fam_f) == len(fam_g) == 2
        and set(fam_f) == {frozenset({0, 1}), frozenset({0, 1, 2})}
        and set(fam_g) == {frozenset({0}), frozenset({0, 1})}
        and set(images) == set(fam_g)                      # onto
        and len(set(images)) == len(fam_f)                 # one-to-one
        and all(preimages[img] == F for F, img in zip(fam_f, images))
        and all(preimages[G] in fam_f for G in fam_g)
    )
    assert _verdict(6, "bijection-at-fixture-scale", ok,
                    "|F|=|G|=2, image and preimage invert each other")


def test_criterion_7_product_laws():
    product_claims = ("T-pairmap-ohom", "T-product-kernel",
                      "T-product-kernel-projection", "T-ksets")
    reports = verify_all(product_claims, sizes=(1, 2))
    failing = {r.claim: len(r.counterexamples) for r in reports if not r.verified}
    checked = {r.claim: r.instances_checked for r in reports}
    ok = not failing and all(v > 0 for v in checked.values())
    assert _verdict(7, "product-laws", ok,
                    f"pairs checked {sorted(set(checked.values()))}, "
                    f"counterexamples {failing or 'none'}")


def test_criterion_8_discrepancy_audit():
    findings = {(f.subject, f.topic): f for f in fx.audit()}

    def has(subject, topic, tag):
        f = findings.get((subject, topic))
        return f is not None and any(w[0] == tag and len(w) > 1 for w in f.witnesses)

    required = (
        has("mid3", "valid", "OBCI-5"),
        has("chain4", "valid", "order-transitive"),
        has("exy-to-ea", "kernel", "only-computed"),
        has("mid3-id", "kernel", "only-computed"),
    )

    # the CLI must surface them as FINDING lines, not silent passes
    buf = io.StringIO()
    with redirect_stdout(buf):
        cli_main(["--format", "machine", "validate", "fixture:mid3"])
        cli_main(["--format", "machine", "validate", "fixture:chain4"])
        cli_main(["--format", "machine", "kernel", "fixture:exy-to-ea"])
        cli_main(["--format", "machine", "kernel", "fixture:mid3-id"])
    lines = buf.getvalue()
    emitted = (
        "FINDING mid3 valid" in lines
        and "FINDING chain4 valid" in lines
        and "FINDING exy-to-ea kernel" in lines
        and "FINDING mid3-id kernel" in lines
    )
    ok = all(required) and emitted
    assert _verdict(8, "discrepancy-audit", ok,
                    "4/4 findings with explicit witnesses, emitted by the CLI")
