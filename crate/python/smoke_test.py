"""Smoke test for the eodpy extension module.

Build and install it first, e.g.

    cd crates/python && maturin develop --release

then run `python python/smoke_test.py`.
"""

import eodpy
from eodpy import Graph, WeakPartition


def check(label, cond):
    print(("ok   " if cond else "FAIL ") + label)
    return bool(cond)


def main():
    results = []

    c8 = Graph.cycle(8)
    d = eodpy.find_eod_set(c8)
    results.append(check("C8 has an EOD-set", d is not None and eodpy.is_eod_set(c8, d)))
    results.append(check("C6 has none", eodpy.find_eod_set(Graph.cycle(6)) is None))
    results.append(check("C4 has four EOD-sets", len(eodpy.enumerate_eod_sets(Graph.cycle(4))) == 4))

    p = Graph.parse("5 4\n0 1\n1 2\n2 3\n3 4\n")
    results.append(check("edge list parse", p.order == 5 and p.size == 4))
    results.append(check("graph6 round trip", Graph.parse(p.to_graph6(), "graph6") == p))

    prod = Graph.path(2).product(Graph.complete(3))
    results.append(check("P2 x K3 order", prod.order == 6 and prod.size == 9))

    part = eodpy.find_amenable(Graph.path(5), "K2")
    results.append(check("P5 is K2-amenable", part is not None))
    results.append(check("no violations", eodpy.check_amenable(Graph.path(5), part) == []))
    d = eodpy.partition_to_eod(Graph.path(5), part)
    results.append(check("partition gives an EOD-set", eodpy.is_eod_set(Graph.path(5).product(Graph.complete(2)), d)))

    bad = WeakPartition.parse("0: 2\n1: 0 1\n", "K2", 3)
    results.append(check("P3 partition fails (A)", any(c == "A" for c, _ in eodpy.check_amenable(Graph.path(3), bad))))

    z = eodpy.find_zigzag_set(Graph.cycle(6))
    results.append(check("C6 zig-zag set", z is not None and eodpy.is_zigzag_set(Graph.cycle(6), z)))

    star_plus = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    trace = eodpy.recognize_tree(star_plus, 3)
    results.append(check("K_{1,3}^+ is in T_3", trace is not None and trace.startswith("(leaf")))
    tree, _ = eodpy.replay_trace(trace)
    results.append(check("trace replays", eodpy.canonical_code(tree) == eodpy.canonical_code(star_plus)))
    results.append(check("P4 not in T_3", eodpy.recognize_tree(Graph.path(4), 3) is None))

    family = eodpy.generate_family(3, 12)
    results.append(check("T_3 up to order 12 has 3 trees", len(family) == 3))
    results.append(check("6 trees of order 6", len(eodpy.enumerate_trees(6)) == 6))

    value, source = eodpy.oracle("grid", 4, 9)
    results.append(check("grid oracle", value is True and source))
    try:
        eodpy.oracle("grid", 2, 5)
        results.append(check("domain error raised", False))
    except eodpy.DomainError:
        results.append(check("domain error raised", True))

    try:
        eodpy.partition_to_eod(Graph.path(3), bad)
        results.append(check("precondition error raised", False))
    except eodpy.PreconditionError:
        results.append(check("precondition error raised", True))

    passed, text = eodpy.run_suite("ZZ_EQUIV")
    results.append(check("ZZ_EQUIV suite", passed and "status" in text))

    print(f"{sum(results)}/{len(results)} checks passed")
    raise SystemExit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
