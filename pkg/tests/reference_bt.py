"""Brute-force reference interpreter for tick semantics.

Written independently of pavement.bt.engine and kept deliberately dumb:
statuses are plain strings here and only converted at the comparison
boundary. Used as the oracle for randomized tick-equivalence tests.
"""

from __future__ import annotations


def reference_tick(node, exec_fn, path):
    """Evaluate a BtNode with string statuses ('Success'/'Failure'/'Running').

    exec_fn(leaf_node, path) -> status string. Mirrors memory-less
    semantics by plain recursion with explicit status lists.
    """
    kind = node.kind.value
    if kind in ("Action", "Condition"):
        return exec_fn(node, path)

    if kind == "Sequence":
        idx = 0
        while idx < len(node.children):
            got = reference_tick(node.children[idx], exec_fn, path + "/" + str(idx))
            if got == "Failure":
                return "Failure"
            if got == "Running":
                return "Running"
            idx += 1
        return "Success"

    if kind == "Fallback":
        idx = 0
        while idx < len(node.children):
            got = reference_tick(node.children[idx], exec_fn, path + "/" + str(idx))
            if got == "Success":
                return "Success"
            if got == "Running":
                return "Running"
            idx += 1
        return "Failure"

    if kind == "Parallel":
        results = []
        for idx in range(len(node.children)):
            results.append(reference_tick(node.children[idx], exec_fn, path + "/" + str(idx)))
        n_success = len([r for r in results if r == "Success"])
        n_failure = len([r for r in results if r == "Failure"])
        st = node.success_threshold
        ft = node.failure_threshold
        if st is None:
            st = len(node.children)
        if ft is None:
            ft = 1
        # engine law: failure threshold checked first
        if n_failure >= ft:
            return "Failure"
        if n_success >= st:
            return "Success"
        return "Running"

    raise AssertionError("unreachable kind " + kind)
