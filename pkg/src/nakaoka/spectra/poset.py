"""Finite posets of Tambara primes: containment DAG, closures, Hasse covers, DOT/JSON."""

from __future__ import annotations

import json
import re

from .primes import LE, NOT_LE, UNKNOWN, contains


class SpecNode:
    """One point of a spectrum: a TambaraPrime plus every ghost label that pulls back to it."""

    def __init__(self, prime, aliases=(), char=None, meta=None):
        self.prime = prime
        self.aliases = list(aliases) or [prime.label]
        self.char = char
        self.meta = dict(meta or {})

    @property
    def label(self):
        return " = ".join(self.aliases)

    def __repr__(self):
        return f"SpecNode({self.label})"


class SpecPoset:
    """Points with the full pairwise containment relation.

    ``relation[i][j]`` is the Containment answer for node i <= node j.  Ghost
    primes that pull back to the same Tambara prime are merged into one node
    when the poset is built.
    """

    def __init__(self, functor, nodes, relation, meta=None):
        self.functor = functor
        self.nodes = nodes
        self.relation = relation
        self.meta = dict(meta or {})

    @classmethod
    def build(cls, functor, candidates, meta=None):
        """candidates: list of (TambaraPrime, char, node-metadata)."""
        nodes = []
        for prime, char, m in candidates:
            for node in nodes:
                if node.char != char:
                    continue
                if contains(prime, node.prime).status == LE and contains(node.prime, prime).status == LE:
                    node.aliases.append(prime.label)
                    node.meta.setdefault("merged", []).append(m)
                    break
            else:
                nodes.append(SpecNode(prime, char=char, meta=m))
        nodes.sort(key=lambda n: _sort_key(n))
        relation = [[None] * len(nodes) for _ in nodes]
        for i, a in enumerate(nodes):
            for j, b in enumerate(nodes):
                if i != j:
                    relation[i][j] = contains(a.prime, b.prime)
        return cls(functor, nodes, relation, meta)

    def __len__(self):
        return len(self.nodes)

    def index(self, label):
        for i, n in enumerate(self.nodes):
            if label == n.label or label in n.aliases:
                return i
        raise KeyError(label)

    def le(self, i, j):
        return i == j or self.relation[i][j].status == LE

    @property
    def complete(self):
        return all(r is None or r.status != UNKNOWN for row in self.relation for r in row)

    def over(self, char):
        return [n for n in self.nodes if n.char == char]

    def closure(self, subset):
        """Smallest closed set containing the given points: the up-set under containment."""
        idx = {self.index(s) if isinstance(s, str) else s for s in subset}
        return sorted(j for j in range(len(self)) if any(self.le(i, j) for i in idx))

    def hasse_edges(self):
        """Covering pairs (i, j): i < j with nothing strictly between."""
        n = len(self)
        edges = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.le(i, j):
                    continue
                if any(k not in (i, j) and self.le(i, k) and self.le(k, j) for k in range(n)):
                    continue
                edges.append((i, j))
        return edges

    def check_partial_order(self):
        """Violations of antisymmetry (between distinct nodes) and transitivity."""
        n = len(self)
        bad = []
        for i in range(n):
            for j in range(n):
                if i != j and self.le(i, j) and self.le(j, i):
                    bad.append(("antisymmetry", i, j))
                for k in range(n):
                    if self.le(i, j) and self.le(j, k) and not self.le(i, k):
                        bad.append(("transitivity", i, j, k))
        return bad

    def invalid_witnesses(self):
        """NOT-LE answers whose witness fails: it must lie in the left prime and not the right."""
        bad = []
        for i, a in enumerate(self.nodes):
            for j, b in enumerate(self.nodes):
                r = self.relation[i][j]
                if r is None or r.status != NOT_LE:
                    continue
                w = r.witness
                if w is None or not a.prime.member(w) or b.prime.member(w):
                    bad.append((a.label, b.label))
        return bad

    def to_json(self):
        nodes = [
            {
                "label": n.label,
                "aliases": n.aliases,
                "char": n.char,
                "prime": n.prime.to_json(),
                **({"meta": n.meta} if n.meta else {}),
            }
            for n in self.nodes
        ]
        edges = []
        for i, a in enumerate(self.nodes):
            for j, b in enumerate(self.nodes):
                r = self.relation[i][j]
                if r is None:
                    continue
                e = {"from": a.label, "to": b.label, "status": r.status}
                if r.witness is not None:
                    e["witness"] = str(r.witness)
                    e["witness_level"] = r.witness.level.value
                edges.append(e)
        hasse = [[self.nodes[i].label, self.nodes[j].label] for i, j in self.hasse_edges()]
        out = {
            "functor": self.functor.tag,
            "p": self.functor.p,
            "nodes": nodes,
            "edges": edges,
            "hasse": hasse,
            "complete": self.complete,
        }
        if self.meta:
            out["meta"] = self.meta
        return out

    def to_json_text(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def to_dot(self):
        lines = [f'digraph "spec {self.functor.tag} p={self.functor.p}" {{', "  rankdir=BT;"]
        for i, n in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{_dot_escape(n.label)}"];')
        for i, j in self.hasse_edges():
            lines.append(f"  n{i} -> n{j};")
        if not self.complete:
            lines.append('  partial [shape=note, label="UNKNOWN containments present"];')
        lines.append("}")
        return "\n".join(lines)

    def to_text(self):
        lines = [f"{len(self)} points"]
        for n in self.nodes:
            lines.append(f"  {n.label}")
        lines.append("covers:")
        for i, j in self.hasse_edges():
            lines.append(f"  {self.nodes[i].label} < {self.nodes[j].label}")
        return "\n".join(lines)


def _sort_key(node):
    # natural order on labels, so (3;3) sorts before (11;11)
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.split(r"(\d+)", node.label)]


def _dot_escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')
