"""S-coloured graphs: the data model for W-graphs, cells and molecules.

A graph is a triple (V, mu, tau): integer weights mu on ordered vertex
pairs and colours tau(v) that are subsets of the generator indices
{1, ..., n-1}.  The weight mu(u, v) is the coefficient of u in the image of
v, so there is an arc from v to u exactly when mu(u, v) != 0 and tau(u) is
not contained in tau(v).  An edge is a pair of opposite arcs; it is simple
when both weights are 1.

The rule checkers return structured reports rather than raising, so a
failing graph can be inspected; the CLI maps reports to exit codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import knuth
from . import tableaux as tb
from .tableaux import StandardTableau

Label = tuple[int, StandardTableau]  # (molecule index, tableau)


class SColoredGraph:
    __slots__ = ("n", "tau", "mu", "labels", "_columns", "_vrange")

    def __init__(self, n: int, tau, mu, labels=None):
        """n is the rank plus one: generator indices run over {1, ..., n-1}."""
        tau = tuple(frozenset(s) for s in tau)
        for s in tau:
            if any(not 1 <= i <= n - 1 for i in s):
                raise ValueError(f"colour {set(s)} outside [1,{n-1}]")
        mu = {
            (u, v): w
            for (u, v), w in mu.items()
            if w != 0
        }
        nv = len(tau)
        for (u, v) in mu:
            if not (0 <= u < nv and 0 <= v < nv):
                raise ValueError(f"weight on unknown vertex pair ({u},{v})")
            if u == v:
                raise ValueError("self-weights are not allowed")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != nv:
                raise ValueError("one label per vertex required")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_columns", None)
        object.__setattr__(self, "_vrange", range(nv))

    def __setattr__(self, *a):
        raise AttributeError("SColoredGraph is immutable")

    @property
    def num_vertices(self) -> int:
        return len(self.tau)

    def vertices(self):
        return self._vrange

    def weight(self, u: int, v: int) -> int:
        """mu(u, v): the coefficient of u in the image of v."""
        return self.mu.get((u, v), 0)

    def column(self, v: int) -> dict[int, int]:
        """All u with mu(u, v) != 0, i.e. the weights pointing out of v."""
        if self._columns is None:
            cols: dict[int, dict[int, int]] = {x: {} for x in self.vertices()}
            for (u, v2), w in self.mu.items():
                cols[v2][u] = w
            object.__setattr__(self, "_columns", cols)
        return self._columns[v]

    def is_labelled(self) -> bool:
        return self.labels is not None and all(l is not None for l in self.labels)

    # -- derived views

    def arcs(self):
        """Triples (v, u, weight): arc from v to u with weight mu(u, v)."""
        out = []
        for (u, v), w in sorted(self.mu.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            if not self.tau[u] <= self.tau[v]:
                out.append((v, u, w))
        return out

    def simple_edges(self):
        """Unordered pairs joined by opposite arcs of weight 1."""
        out = []
        for (u, v), w in self.mu.items():
            if u < v and w == 1 and self.weight(v, u) == 1:
                if not self.tau[u] <= self.tau[v] and not self.tau[v] <= self.tau[u]:
                    out.append((u, v))
        return sorted(out)

    def out_neighbours(self, v: int):
        return [u for u in self.column(v) if not self.tau[u] <= self.tau[v]]


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckReport:
    rule: str
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        state = "pass" if self.ok else "FAIL"
        extra = ""
        if not self.ok and self.violations:
            extra = f" first witness: {self.violations[0]}"
        return f"{self.rule}: {state}{extra}"


_MAX_WITNESSES = 20


# ---------------------------------------------------------------------------
# cells and molecules


@dataclass(frozen=True)
class CellDecomposition:
    """Strongly connected components plus the induced order on them."""

    blocks: tuple[frozenset[int], ...]
    block_of: tuple[int, ...]
    closure: tuple[frozenset[int], ...]  # blocks reachable from each block

    def leq(self, b1: int, b2: int) -> bool:
        """b1 <= b2 when some vertex of b1 is reachable from b2."""
        return b1 in self.closure[b2]


def cells(g: SColoredGraph) -> CellDecomposition:
    """SCCs of the arc digraph, with the condensation reachability order."""
    nv = g.num_vertices
    succ = [g.out_neighbours(v) for v in g.vertices()]
    index = [-1] * nv
    low = [0] * nv
    on_stack = [False] * nv
    stack: list[int] = []
    blocks: list[frozenset[int]] = []
    block_of = [-1] * nv
    counter = 0
    for root in range(nv):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(succ[v])):
                u = succ[v][k]
                if index[u] == -1:
                    work[-1] = (v, k + 1)
                    work.append((u, 0))
                    advanced = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    block_of[u] = len(blocks)
                    if u == v:
                        break
                blocks.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    nb = len(blocks)
    succ_blocks: list[set[int]] = [set() for _ in range(nb)]
    for v in range(nv):
        for u in succ[v]:
            if block_of[u] != block_of[v]:
                succ_blocks[block_of[v]].add(block_of[u])
    closure: list[frozenset[int]] = [frozenset()] * nb
    # Tarjan emits blocks in reverse topological order of the condensation,
    # so successors are already closed when a block is processed.
    for b in range(nb):
        acc = {b}
        for c in succ_blocks[b]:
            acc.update(closure[c])
        closure[b] = frozenset(acc)
    return CellDecomposition(tuple(blocks), tuple(block_of), tuple(closure))


def simple_parts(g: SColoredGraph) -> list[frozenset[int]]:
    """Connected components after deleting arcs and non-simple edges."""
    parent = list(range(g.num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.simple_edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in g.vertices():
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


class MoleculeTypingError(ValueError):
    """A simple part is not isomorphic to any dual-equivalence graph."""

    def __init__(self, part, tried):
        self.part = part
        self.tried = tried
        super().__init__(
            f"no shape matches simple part of size {len(part)} (tried {tried})"
        )


def _try_type(g: SColoredGraph, part: frozenset[int], lam) -> Optional[dict]:
    """Map STD(lam) onto the part, preserving colours and simple edges."""
    tabs = tb.enumerate_std(lam)
    if len(tabs) != len(part):
        return None
    adj: dict[int, list[int]] = {v: [] for v in part}
    for u, v in g.simple_edges():
        if u in part and v in part:
            adj[u].append(v)
            adj[v].append(u)
    d_min = tb.descents(tabs[0])
    seeds = [v for v in part if g.tau[v] == d_min]
    tmin = min(tabs, key=tb.lex_key)
    for seed in seeds:
        mapping = {tmin: seed}
        frontier = [tmin]
        ok = True
        while frontier and ok:
            t = frontier.pop()
            for nb in knuth.dk_neighbours(t):
                want = tb.descents(nb)
                candidates = [
                    x for x in adj[mapping[t]] if g.tau[x] == want
                ]
                if len(candidates) != 1:
                    ok = False
                    break
                if nb in mapping:
                    if mapping[nb] != candidates[0]:
                        ok = False
                        break
                else:
                    mapping[nb] = candidates[0]
                    frontier.append(nb)
        if not ok or len(mapping) != len(part):
            continue
        if len(set(mapping.values())) != len(part):
            continue
        # edges must correspond exactly both ways
        edge_count = sum(len(a) for a in adj.values()) // 2
        dk_edges = set()
        for t in mapping:
            for nb in knuth.dk_neighbours(t):
                dk_edges.add(frozenset((mapping[t], mapping[nb])))
        if len(dk_edges) == edge_count:
            return mapping
    return None


def molecule_types(g: SColoredGraph):
    """Assign to each simple part the shape of the matching dual-equivalence graph.

    Returns (parts, types) where types[k] is the partition for parts[k].
    Typing is a seeded search: the minimal tableau must land on a vertex
    whose colour matches its descent set, and the unique-neighbour property
    of molecular graphs then forces the rest of the correspondence.
    """
    parts = simple_parts(g)
    n = g.n
    types = []
    for part in parts:
        found = None
        tried = []
        for lam in tb.partitions_of(n):
            if tb.hook_count(lam) != len(part):
                continue
            tried.append(lam)
            if _try_type(g, part, lam) is not None:
                found = lam
                break
        if found is None:
            raise MoleculeTypingError(part, tried)
        types.append(found)
    return parts, types


def restrict(g: SColoredGraph, J) -> SColoredGraph:
    """Restriction to the parabolic subgroup generated by J."""
    J = frozenset(J)
    tau = [s & J for s in g.tau]
    mu = {
        (u, v): w
        for (u, v), w in g.mu.items()
        if not tau[u] <= tau[v]
    }
    return SColoredGraph(g.n, tau, mu, g.labels)


# ---------------------------------------------------------------------------
# rule checkers


def check_admissible(g: SColoredGraph) -> CheckReport:
    """Nonnegative integer weights, symmetric on incomparable colours, bipartite."""
    bad = []
    for (u, v), w in sorted(g.mu.items()):
        if len(bad) >= _MAX_WITNESSES:
            break
        if not isinstance(w, int) or w < 0:
            bad.append(("negative-weight", u, v, w))
            continue
        tu, tv = g.tau[u], g.tau[v]
        if not tu <= tv and not tv <= tu and g.weight(v, u) != w:
            bad.append(("asymmetric", u, v, w, g.weight(v, u)))
    adjacency: dict[int, set[int]] = {v: set() for v in g.vertices()}
    for v, u, _w in g.arcs():
        adjacency[v].add(u)
        adjacency[u].add(v)
    colour: dict[int, int] = {}
    for root in g.vertices():
        if root in colour:
            continue
        colour[root] = 0
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for u in adjacency[v]:
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    frontier.append(u)
                elif colour[u] == colour[v]:
                    bad.append(("odd-cycle", v, u))
                    frontier = []
                    break
    return CheckReport("admissible", not bad, tuple(bad[:_MAX_WITNESSES]))


def check_compatibility(g: SColoredGraph) -> CheckReport:
    """Colours across a nonzero weight differ only by bonded generators (|i-j| = 1)."""
    bad = []
    for (u, v), w in sorted(g.mu.items()):
        for i in g.tau[u] - g.tau[v]:
            for j in g.tau[v] - g.tau[u]:
                if abs(i - j) != 1:
                    bad.append((u, v, i, j))
                    if len(bad) >= _MAX_WITNESSES:
                        return CheckReport("compatibility", False, tuple(bad))
    return CheckReport("compatibility", not bad, tuple(bad))


def check_simplicity(g: SColoredGraph) -> CheckReport:
    """Each nonzero weight is a one-way arc into a larger colour or half a simple edge."""
    bad = []
    for (u, v), w in sorted(g.mu.items()):
        tu, tv = g.tau[u], g.tau[v]
        if tv < tu:
            if g.weight(v, u) != 0:
                bad.append(("two-way-cover", u, v))
        elif not tu <= tv and not tv <= tu:
            if w != 1 or g.weight(v, u) != 1:
                bad.append(("non-simple-edge", u, v, w, g.weight(v, u)))
        else:
            bad.append(("weight-into-smaller-colour", u, v, w))
        if len(bad) >= _MAX_WITNESSES:
            break
    return CheckReport("simplicity", not bad, tuple(bad))


def check_bonding(g: SColoredGraph) -> CheckReport:
    """Simply-laced bonding: unique opposite-pattern neighbour across each bond."""
    bad = []
    edges_at: dict[int, list[int]] = {v: [] for v in g.vertices()}
    for u, v in g.simple_edges():
        edges_at[u].append(v)
        edges_at[v].append(u)
    for i in range(1, g.n - 1):
        j = i + 1
        for v in g.vertices():
            has_i = i in g.tau[v]
            has_j = j in g.tau[v]
            if has_i == has_j:
                continue
            want_i, want_j = (not has_i), (not has_j)
            count = sum(
                1
                for u in edges_at[v]
                if (i in g.tau[u]) == want_i and (j in g.tau[u]) == want_j
            )
            if count != 1:
                bad.append((v, i, j, count))
                if len(bad) >= _MAX_WITNESSES:
                    return CheckReport("bonding", False, tuple(bad))
    return CheckReport("bonding", not bad, tuple(bad))


def _pattern_masks(g: SColoredGraph, i: int, j: int):
    nv = g.num_vertices
    mask_i = np.zeros(nv, dtype=bool)
    mask_j = np.zeros(nv, dtype=bool)
    for v in g.vertices():
        has_i, has_j = i in g.tau[v], j in g.tau[v]
        mask_i[v] = has_i and not has_j
        mask_j[v] = has_j and not has_i
    return mask_i, mask_j


def _arc_matrix(g: SColoredGraph) -> np.ndarray:
    """X[a, b] = mu(b, a): the weight on the pair regardless of arc-ness."""
    nv = g.num_vertices
    x = np.zeros((nv, nv), dtype=np.int64)
    for (u, v), w in g.mu.items():
        x[v, u] = w
    return x


def alternating_sums(g: SColoredGraph, r: int, i: int, j: int):
    """Matrix of N^r sums for colour pattern (i, j), indexed (u, v).

    Entry (u, v) sums the weight products over directed paths from u to v
    whose r-1 interior vertices alternate between containing i but not j
    and containing j but not i.  Only entries with i, j outside tau(u) and
    inside tau(v) are meaningful to the polygon rule.
    """
    x = _arc_matrix(g)
    mask_i, mask_j = _pattern_masks(g, i, j)
    if r == 2:
        return (x * mask_i[None, :]) @ x
    if r == 3:
        return (x * mask_i[None, :]) @ (x * mask_j[None, :]) @ x
    raise ValueError("only r = 2 and r = 3 occur in type A")


def check_polygon(g: SColoredGraph, r: int) -> CheckReport:
    """N^r_{i,j} = N^r_{j,i} for the applicable generator pairs.

    r = 2 applies to every ordered pair i != j; r = 3 only to bonded pairs.
    Stops at the first counterexample, reported as (u, v, i, j, r, N_ij, N_ji).
    """
    nv = g.num_vertices
    for i in range(1, g.n - 1):
        for j in range(i + 1, g.n):
            if r == 3 and j - i != 1:
                continue
            n_ij = alternating_sums(g, r, i, j)
            n_ji = alternating_sums(g, r, j, i)
            diff = n_ij != n_ji
            if not diff.any():
                continue
            mask_u = np.fromiter(
                (i not in g.tau[v] and j not in g.tau[v] for v in range(nv)),
                dtype=bool,
                count=nv,
            )
            mask_v = np.fromiter(
                (i in g.tau[v] and j in g.tau[v] for v in range(nv)),
                dtype=bool,
                count=nv,
            )
            diff &= mask_u[:, None] & mask_v[None, :]
            if diff.any():
                u, v = map(int, np.argwhere(diff)[0])
                witness = (u, v, i, j, r, int(n_ij[u, v]), int(n_ji[u, v]))
                return CheckReport(f"polygon-r{r}", False, (witness,))
    return CheckReport(f"polygon-r{r}", True)


def _is_cover(u: StandardTableau, t: StandardTableau):
    """i such that u = s_i t > t, if any."""
    if u.shape != t.shape or u.offset != t.offset or u == t:
        return None
    diff = [e for e in t.entries() if t.box_of(e) != u.box_of(e)]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return None
    i = diff[0]
    return i if i in t.descent_data().sa else None


def check_ordered(g: SColoredGraph) -> CheckReport:
    """Every nonzero weight points down the extended dominance order.

    The one exception is a weight from t up to s_i t > t inside a single
    molecule.  Requires every vertex to carry a (molecule, tableau) label.
    """
    if not g.is_labelled():
        raise ValueError("check_ordered requires labelled vertices")
    bad = []
    for (cu, cv), w in sorted(g.mu.items()):
        beta, u = g.labels[cu]
        alpha, t = g.labels[cv]
        if tb.extended_dominance_leq(u, t) and u != t:
            continue
        if alpha == beta and _is_cover(u, t) is not None:
            continue
        bad.append((cu, cv, w))
        if len(bad) >= _MAX_WITNESSES:
            break
    return CheckReport("ordered", not bad, tuple(bad))


ALL_RULES = ("admissible", "compatibility", "simplicity", "bonding", "polygon", "ordered")


def run_checks(g: SColoredGraph, rules=ALL_RULES) -> list[CheckReport]:
    out = []
    for rule in rules:
        if rule == "admissible":
            out.append(check_admissible(g))
        elif rule == "compatibility":
            out.append(check_compatibility(g))
        elif rule == "simplicity":
            out.append(check_simplicity(g))
        elif rule == "bonding":
            out.append(check_bonding(g))
        elif rule == "polygon":
            out.append(check_polygon(g, 2))
            out.append(check_polygon(g, 3))
        elif rule == "ordered":
            out.append(check_ordered(g))
        else:
            raise ValueError(f"unknown rule {rule!r}")
    return out


# ---------------------------------------------------------------------------
# serialization


def to_json_obj(g: SColoredGraph) -> dict:
    vertices = []
    for v in g.vertices():
        label = None
        if g.labels is not None and g.labels[v] is not None:
            molecule, t = g.labels[v]
            label = {"molecule": molecule, "tableau": t.text()}
        vertices.append({"id": v, "tau": sorted(g.tau[v]), "label": label})
    mu = [
        {"from": u, "to": v, "w": w}
        for (u, v), w in sorted(g.mu.items())
    ]
    return {"n": g.n, "vertices": vertices, "mu": mu}


def to_json_str(g: SColoredGraph) -> str:
    import json

    return json.dumps(to_json_obj(g), indent=2) + "\n"


def from_json_obj(obj: dict) -> SColoredGraph:
    n = obj["n"]
    rows = sorted(obj["vertices"], key=lambda r: r["id"])
    if [r["id"] for r in rows] != list(range(len(rows))):
        raise ValueError("vertex ids must be 0..N-1")
    tau = [frozenset(r["tau"]) for r in rows]
    labels = []
    any_label = False
    for r in rows:
        if r.get("label") is None:
            labels.append(None)
        else:
            any_label = True
            labels.append((r["label"]["molecule"], tb.from_text(r["label"]["tableau"])))
    mu = {(e["from"], e["to"]): e["w"] for e in obj["mu"]}
    return SColoredGraph(n, tau, mu, tuple(labels) if any_label else None)


def from_json_str(s: str) -> SColoredGraph:
    import json

    return from_json_obj(json.loads(s))


def to_dot(g: SColoredGraph) -> str:
    lines = ["digraph wgraph {"]
    for v in g.vertices():
        tau = ",".join(map(str, sorted(g.tau[v])))
        name = str(v)
        if g.labels is not None and g.labels[v] is not None:
            name = g.labels[v][1].text()
        lines.append(f'  v{v} [label="{name}|{{{tau}}}"];')
    edges = set(g.simple_edges())
    for u, v in sorted(edges):
        lines.append(f"  v{u} -> v{v} [dir=none];")
    for v, u, w in g.arcs():
        if (min(u, v), max(u, v)) in edges:
            continue
        lines.append(f'  v{v} -> v{u} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
