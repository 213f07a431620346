"""Hardness-reduction gadget instances, with role annotations and oracles.

Two constructions are provided.

The clique gadget turns "does G' contain a clique of size k'?" into a
robust-flow instance: a bank of saturated high-capacity paths forces the
adversary's hand, a block of k parallel source-sink arcs prices the
remaining failure budget, and a small four-node subgraph H carries the
answer: the optimal flow routes a trickle of eps across H exactly when
the clique exists.  Every node and arc is labelled with its role so the
construction can be audited formula by formula.

The arc-disjoint-paths gadget embeds a two-commodity instance into a
robust-flow instance with failure budget 2 whose optimal integral value
is 3 when arc-disjoint demand paths exist and at most 2 otherwise.

Both constructions come with the combinatorial oracles needed to verify
them: densest-small-subgraph search (h_star), a restricted structured
adversary over vertex subsets, and exhaustive disjoint-path search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    EnumerationBudgetExceeded,
    FormatError,
    InvalidCliqueSize,
    InvalidTerminals,
    NotDisjoint,
    SizeMismatch,
)
from .evaluation import destroyed_value
from .graphs import simple_paths
from .model import ExtendedRational, INF, Instance, Path, PathFlow, Scenario


@dataclass(frozen=True)
class UndirectedGraph:
    """A simple undirected graph; edges are sorted unique pairs."""

    node_count: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, node_count, edges) -> "UndirectedGraph":
        seen = set()
        cleaned = []
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError("edge endpoint out of range")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
            cleaned.append(pair)
        return cls(node_count, tuple(cleaned))

    def induced_edge_count(self, vertices) -> int:
        vs = set(vertices)
        return sum(1 for u, v in self.edges if u in vs and v in vs)


@dataclass(frozen=True)
class DirectedGraph:
    """A directed multigraph used as gadget input; arcs keep list order."""

    node_count: int
    arcs: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, node_count, arcs) -> "DirectedGraph":
        for u, v in arcs:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError("arc endpoint out of range")
        return cls(node_count, tuple((u, v) for u, v in arcs))

    def out_adjacency(self) -> list[list[tuple[int, int]]]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.node_count)]
        for idx, (u, v) in enumerate(self.arcs):
            adj[u].append((idx, v))
        for lst in adj:
            lst.sort()
        return adj


def parse_undirected_graph(text: str) -> UndirectedGraph:
    """Parse "p graph <n> <m>" plus "e <u> <v>" records."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None or len(fields) != 4 or fields[1] != "graph":
                raise FormatError(f"line {lineno}: expected one 'p graph <n> <m>'")
            header = (int(fields[2]), int(fields[3]))
        elif fields[0] == "e":
            if header is None or len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>' after header")
            edges.append((int(fields[1]), int(fields[2])))
        else:
            raise FormatError(f"line {lineno}: unknown record type {fields[0]!r}")
    if header is None:
        raise FormatError("missing p record")
    if len(edges) != header[1]:
        raise FormatError("edge count does not match header")
    try:
        return UndirectedGraph.build(header[0], edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_directed_graph(text: str) -> DirectedGraph:
    """Parse "p digraph <n> <m>" plus "a <u> <v>" records."""
    header = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None or len(fields) != 4 or fields[1] != "digraph":
                raise FormatError(f"line {lineno}: expected one 'p digraph <n> <m>'")
            header = (int(fields[2]), int(fields[3]))
        elif fields[0] == "a":
            if header is None or len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'a <u> <v>' after header")
            arcs.append((int(fields[1]), int(fields[2])))
        else:
            raise FormatError(f"line {lineno}: unknown record type {fields[0]!r}")
    if header is None:
        raise FormatError("missing p record")
    if len(arcs) != header[1]:
        raise FormatError("arc count does not match header")
    try:
        return DirectedGraph.build(header[0], arcs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


@dataclass(frozen=True)
class CliqueRoles:
    """Node and arc ids of the clique gadget, grouped by role."""

    s: int
    t: int
    vprime: int
    vdprime: int
    a_node: dict[int, int]                 # vertex -> a_v node
    a_group: dict[int, tuple[int, ...]]    # vertex -> a_{v,1..ell} nodes
    b_group: dict[int, tuple[int, ...]]    # vertex -> b_{v,1..ell} nodes
    edge_nodes: dict[int, tuple[int, int]]  # edge index -> (a'_e, a''_e)
    s_arc: dict[int, int]                  # node in A -> arc (s, node)
    t_arc: dict[int, int]                  # node in B -> arc (node, t)
    big_arcs: tuple[int, ...]              # capacity-M arcs into B
    unit_ab_arcs: tuple[int, ...]          # capacity-1 arcs a_{v,i} -> b_{v,i}
    e_arcs: tuple[int, ...]                # the k parallel source-sink arcs
    e1p: int                               # e'_1 (s -> v', capacity 1)
    e2p: int                               # e'_2 (s -> v', capacity eps)
    e1pp: int                              # e''_1 (v'' -> t, capacity 1)
    e2pp: int                              # e''_2 (v'' -> t, capacity eps)
    s_vdd: int                             # (s, v'')
    vp_t: int                              # (v', t)
    vp_vdd: int                            # (v', v'')

    @property
    def h_arcs(self) -> tuple[int, ...]:
        """The seven arcs of the answer subgraph H."""
        return (self.e1p, self.e2p, self.e1pp, self.e2pp,
                self.s_vdd, self.vp_t, self.vp_vdd)

    @property
    def ab_arcs(self) -> tuple[int, ...]:
        return self.big_arcs + self.unit_ab_arcs

    @property
    def failure_pool(self) -> frozenset[int]:
        """F: the parallel arcs plus the H arcs."""
        return frozenset(self.e_arcs) | frozenset(self.h_arcs)


@dataclass(frozen=True)
class CliqueGadget:
    instance: Instance
    graph: UndirectedGraph
    kprime: int
    ell: int
    k: int
    eps: Fraction
    big_m: Fraction
    h: int
    roles: CliqueRoles


def build_clique_gadget(gp: UndirectedGraph, kp: int) -> CliqueGadget:
    """Build the robust-flow instance encoding "G' has a clique of size k'".

    Needs 2 <= k' <= |V'| (below 2 the parallel-arc count 2*C(k',2) - 2
    goes negative and the construction is undefined).
    """
    n_v = gp.node_count
    n_e = len(gp.edges)
    if not 2 <= kp <= n_v:
        raise InvalidCliqueSize(f"need 2 <= k' <= {n_v}, got {kp}")
    ell = n_v + 2 * n_e
    k = kp * ell + (n_v - kp) + 2 * n_e
    eps = Fraction(1, ell)
    big_m = (1 + eps) * k
    h = 2 * comb(kp, 2) - 2

    nodes: list[str] = []

    def new_node(label: str) -> int:
        nodes.append(label)
        return len(nodes) - 1

    s = new_node("s")
    t = new_node("t")
    a_node = {}
    a_group = {}
    b_group = {}
    for v in range(n_v):
        a_node[v] = new_node(f"a[{v}]")
        a_group[v] = tuple(new_node(f"A[{v}][{i}]") for i in range(ell))
        b_group[v] = tuple(new_node(f"B[{v}][{i}]") for i in range(ell))
    edge_nodes = {}
    for idx, (u, v) in enumerate(gp.edges):
        edge_nodes[idx] = (new_node(f"a'[{idx}]"), new_node(f"a''[{idx}]"))
    vprime = new_node("v'")
    vdprime = new_node("v''")

    arcs: list[tuple[int, int, ExtendedRational]] = []

    def new_arc(tail: int, head: int, cap) -> int:
        arcs.append((tail, head, ExtendedRational(cap)))
        return len(arcs) - 1

    cap_m = ExtendedRational(big_m)
    big_arcs: list[int] = []
    unit_ab: list[int] = []
    for v in range(n_v):
        for i in range(ell):
            big_arcs.append(new_arc(a_node[v], b_group[v][i], cap_m))
        for i in range(ell):
            unit_ab.append(new_arc(a_group[v][i], b_group[v][i], 1))
    for idx, (u, v) in enumerate(gp.edges):
        ap, app = edge_nodes[idx]
        for i in range(ell):
            big_arcs.append(new_arc(ap, b_group[u][i], cap_m))
            big_arcs.append(new_arc(app, b_group[u][i], cap_m))
            big_arcs.append(new_arc(ap, b_group[v][i], cap_m))
            big_arcs.append(new_arc(app, b_group[v][i], cap_m))
    s_arc = {}
    for v in range(n_v):
        s_arc[a_node[v]] = new_arc(s, a_node[v], INF)
        for node in a_group[v]:
            s_arc[node] = new_arc(s, node, INF)
    for idx in range(n_e):
        for node in edge_nodes[idx]:
            s_arc[node] = new_arc(s, node, INF)
    t_arc = {}
    for v in range(n_v):
        for node in b_group[v]:
            t_arc[node] = new_arc(node, t, INF)
    e_arcs = tuple(
        new_arc(s, t, 1 + eps if i < h else 1) for i in range(k)
    )
    roles = CliqueRoles(
        s=s,
        t=t,
        vprime=vprime,
        vdprime=vdprime,
        a_node=a_node,
        a_group=a_group,
        b_group=b_group,
        edge_nodes=edge_nodes,
        s_arc=s_arc,
        t_arc=t_arc,
        big_arcs=tuple(big_arcs),
        unit_ab_arcs=tuple(unit_ab),
        e_arcs=e_arcs,
        e1p=new_arc(s, vprime, 1),
        e2p=new_arc(s, vprime, eps),
        e1pp=new_arc(vdprime, t, 1),
        e2pp=new_arc(vdprime, t, eps),
        s_vdd=new_arc(s, vdprime, 1 + eps),
        vp_t=new_arc(vprime, t, 1 + eps),
        vp_vdd=new_arc(vprime, vdprime, eps),
    )
    inst = Instance.build(len(nodes), arcs, s, t, k)
    return CliqueGadget(
        instance=inst,
        graph=gp,
        kprime=kp,
        ell=ell,
        k=k,
        eps=eps,
        big_m=big_m,
        h=h,
        roles=roles,
    )


def h_star(gp: UndirectedGraph, kp: int, budget: int = 10**6) -> int:
    """Maximum edge count induced by at most kp vertices (exhaustive).

    Induced edges are monotone under adding vertices, so only subsets of
    size exactly kp need to be enumerated.
    """
    if kp > gp.node_count:
        raise ValueError("kp must not exceed the vertex count")
    if kp <= 1:
        return 0
    if comb(gp.node_count, kp) > budget:
        raise EnumerationBudgetExceeded(
            f"C({gp.node_count},{kp}) vertex subsets exceed budget {budget}"
        )
    return max(
        gp.induced_edge_count(subset)
        for subset in combinations(range(gp.node_count), kp)
    )


ZERO_ROUTE = "zero-route"
EPS_ROUTE = "eps-route"


def canonical_gadget_flow(g: CliqueGadget, variant: str) -> PathFlow:
    """One of the two normalized candidate flows of the clique gadget.

    Saturates every arc into the B layer along its unique source-sink
    path and every parallel arc, then routes the answer subgraph H either
    without the (v', v'') arc ("zero-route": both H terminals carry
    1 + eps) or with it ("eps-route": terminals carry 1, plus eps across
    (v', v'')).
    """
    if variant not in (ZERO_ROUTE, EPS_ROUTE):
        raise ValueError(f"unknown variant {variant!r}")
    r = g.roles
    inst = g.instance
    values: dict[Path, Fraction] = {}
    for ab in r.ab_arcs:
        arc = inst.arcs[ab]
        values[Path((r.s_arc[arc.tail], ab, r.t_arc[arc.head]))] = arc.capacity.value
    for aid in r.e_arcs:
        values[Path((aid,))] = inst.arcs[aid].capacity.value
    one = Fraction(1)
    if variant == ZERO_ROUTE:
        values[Path((r.e1p, r.vp_t))] = one
        values[Path((r.e2p, r.vp_t))] = g.eps
        values[Path((r.s_vdd, r.e1pp))] = one
        values[Path((r.s_vdd, r.e2pp))] = g.eps
    else:
        values[Path((r.e1p, r.vp_t))] = one
        values[Path((r.s_vdd, r.e1pp))] = one
        values[Path((r.e2p, r.vp_vdd, r.e2pp))] = g.eps
    return PathFlow.from_dict(values)


def structured_scenario(g: CliqueGadget, ustar, fstar) -> Scenario:
    """The failure set determined by a vertex subset U* and F* within F.

    Vertices in U* contribute the sink-side arcs of their whole B group;
    vertices outside contribute the source-side arc of their a-node; edge
    nodes of edges not induced by U* contribute their source-side arcs;
    F* is added verbatim.  The result must have exactly k arcs.
    """
    u = frozenset(ustar)
    if any(not 0 <= v < g.graph.node_count for v in u):
        raise ValueError("U* contains an invalid vertex")
    if len(u) > g.kprime:
        raise ValueError("U* may have at most k' vertices")
    fstar = frozenset(fstar)
    if not fstar <= g.roles.failure_pool:
        raise ValueError("F* must be a subset of the failure pool F")
    r = g.roles
    chosen: set[int] = set()
    for v in range(g.graph.node_count):
        if v in u:
            chosen.update(r.t_arc[b] for b in r.b_group[v])
        else:
            chosen.add(r.s_arc[r.a_node[v]])
    for idx, (a, b) in enumerate(g.graph.edges):
        if not (a in u and b in u):
            ap, app = r.edge_nodes[idx]
            chosen.add(r.s_arc[ap])
            chosen.add(r.s_arc[app])
    chosen.update(fstar)
    if len(chosen) != g.k:
        raise SizeMismatch(f"scenario has {len(chosen)} arcs, need k = {g.k}")
    return Scenario.of(chosen)


def forced_budget(g: CliqueGadget, ustar) -> int:
    """k_U: the number of arcs the vertex subset forces into the scenario."""
    u = frozenset(ustar)
    induced = g.graph.induced_edge_count(u)
    return g.ell * len(u) + (g.graph.node_count - len(u)) + 2 * (len(g.graph.edges) - induced)


def f_top(x: PathFlow, pool, r: int) -> Fraction:
    """Sum of the r largest arc-flow values within the given arc pool."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    flows = x.arc_flows()
    ranked = sorted(pool, key=lambda aid: (-flows.get(aid, Fraction(0)), aid))
    return sum((flows.get(aid, Fraction(0)) for aid in ranked[:r]), Fraction(0))


def structured_lambda(
    g: CliqueGadget, x: PathFlow, subset_budget: int = 10**6
) -> tuple[Fraction, frozenset[int], frozenset[int]]:
    """Best structured scenario for x: max destroyed value over the family.

    Scans every vertex subset U with |U| <= k', greedily filling the
    remaining k - k_U failures with the highest-flow arcs of F (ties by
    arc id).  Returns the exact maximum and its witness (U*, F*).  This is
    an exact adversary only for the normalized candidate flows; it is
    never reported as an unconditional worst case.
    """
    n_v = g.graph.node_count
    subsets = sum(comb(n_v, i) for i in range(min(g.kprime, n_v) + 1))
    if subsets > subset_budget:
        raise EnumerationBudgetExceeded(
            f"{subsets} vertex subsets exceed budget {subset_budget}"
        )
    flows = x.arc_flows()
    pool_ranked = sorted(
        g.roles.failure_pool, key=lambda aid: (-flows.get(aid, Fraction(0)), aid)
    )
    best = None
    for size in range(min(g.kprime, n_v) + 1):
        for u in combinations(range(n_v), size):
            r = g.k - forced_budget(g, u)
            if r < 0:
                continue
            fstar = frozenset(pool_ranked[:r])
            scenario = structured_scenario(g, u, fstar)
            val = destroyed_value(x, scenario)
            if best is None or val > best[0]:
                best = (val, frozenset(u), fstar)
    assert best is not None
    return best


def audit_clique_gadget(g: CliqueGadget) -> list[str]:
    """Structural audit: every parameter, count and capacity, re-derived.

    Returns a list of violations (empty when the gadget is faithful).
    """
    bad: list[str] = []
    gp, kp, r = g.graph, g.kprime, g.roles
    n_v, n_e = gp.node_count, len(gp.edges)
    inst = g.instance

    def check(cond: bool, msg: str) -> None:
        if not cond:
            bad.append(msg)

    check(g.ell == n_v + 2 * n_e, "ell formula")
    check(g.k == kp * g.ell + (n_v - kp) + 2 * n_e, "k formula")
    check(g.eps == Fraction(1, g.ell), "eps formula")
    check(g.big_m == (1 + g.eps) * g.k, "M formula")
    check(g.h == 2 * comb(kp, 2) - 2, "h formula")
    check(inst.k == g.k, "instance failure budget")
    check(inst.node_count == 2 + n_v * (1 + 2 * g.ell) + 2 * n_e + 2, "node count")
    expected_arcs = (
        n_v * 2 * g.ell            # vertex-block arcs into B, M and unit
        + n_e * 4 * g.ell          # edge-node arcs into B
        + n_v * (1 + g.ell) + 2 * n_e  # source fan-out to A
        + n_v * g.ell              # sink fan-in from B
        + g.k + 7                  # parallel arcs and the H subgraph
    )
    check(inst.m == expected_arcs, "arc count")
    check(len(r.big_arcs) == (n_v + 4 * n_e) * g.ell, "capacity-M arc count")
    check(len(r.unit_ab_arcs) == n_v * g.ell, "unit A-B arc count")
    cap_m = ExtendedRational(g.big_m)
    for aid in r.big_arcs:
        check(inst.arcs[aid].capacity == cap_m, f"arc {aid}: expected capacity M")
    for aid in r.unit_ab_arcs:
        check(inst.arcs[aid].capacity == ExtendedRational(1), f"arc {aid}: expected capacity 1")
    for node, aid in r.s_arc.items():
        arc = inst.arcs[aid]
        check(arc.tail == r.s and arc.head == node and arc.capacity.is_infinite,
              f"arc {aid}: expected INF source arc")
    for node, aid in r.t_arc.items():
        arc = inst.arcs[aid]
        check(arc.tail == node and arc.head == r.t and arc.capacity.is_infinite,
              f"arc {aid}: expected INF sink arc")
    check(len(r.e_arcs) == g.k, "parallel arc count")
    one_eps = ExtendedRational(1 + g.eps)
    for i, aid in enumerate(r.e_arcs):
        arc = inst.arcs[aid]
        check(arc.tail == r.s and arc.head == r.t, f"arc {aid}: expected parallel s-t arc")
        want = one_eps if i < g.h else ExtendedRational(1)
        check(arc.capacity == want, f"arc {aid}: parallel arc capacity")
    for aid, tail, head, cap in (
        (r.e1p, r.s, r.vprime, ExtendedRational(1)),
        (r.e2p, r.s, r.vprime, ExtendedRational(g.eps)),
        (r.e1pp, r.vdprime, r.t, ExtendedRational(1)),
        (r.e2pp, r.vdprime, r.t, ExtendedRational(g.eps)),
        (r.s_vdd, r.s, r.vdprime, one_eps),
        (r.vp_t, r.vprime, r.t, one_eps),
        (r.vp_vdd, r.vprime, r.vdprime, ExtendedRational(g.eps)),
    ):
        arc = inst.arcs[aid]
        check(arc.tail == tail and arc.head == head and arc.capacity == cap,
              f"arc {aid}: H subgraph arc mismatch")
    check(len(r.failure_pool) == g.k + 7, "failure pool size")
    # Role groups must partition the arc set.
    grouped = (
        list(r.big_arcs) + list(r.unit_ab_arcs) + list(r.s_arc.values())
        + list(r.t_arc.values()) + list(r.e_arcs) + list(r.h_arcs)
    )
    check(sorted(grouped) == list(range(inst.m)), "roles do not partition the arcs")
    # Forced budget arithmetic: every admissible U forces exactly k_U arcs
    # and leaves a nonnegative remainder.
    for size in range(min(kp, n_v) + 1):
        for u in combinations(range(n_v), size):
            k_u = forced_budget(g, u)
            remainder = g.k - k_u
            check(remainder >= 0, f"negative remainder for U={u}")
            try:
                scenario = structured_scenario(
                    g, u, frozenset(sorted(r.failure_pool)[:remainder])
                )
                check(len(scenario.arc_ids) == g.k, f"scenario size for U={u}")
            except SizeMismatch:
                bad.append(f"k_U arithmetic broken for U={u}")
    return bad


@dataclass(frozen=True)
class AdpRoles:
    """Node and arc ids of the arc-disjoint-paths gadget."""

    s: int
    t: int
    v: int
    vprime: int
    vdprime: int
    w: int
    terminals: tuple[int, int, int, int]   # s1, t1, s2, t2 (input nodes)
    demand_arcs: tuple[int, ...]           # arcs copied from the input graph
    arc_label: dict[int, str]              # new arc id -> label


@dataclass(frozen=True)
class AdpGadget:
    instance: Instance
    graph: DirectedGraph
    roles: AdpRoles


def build_adp_gadget(
    gp: DirectedGraph, s1: int, t1: int, s2: int, t2: int
) -> AdpGadget:
    """Embed an arc-disjoint-paths question into a robust-flow instance.

    Adds 6 nodes and 13 arcs around the input graph; failure budget 2.
    The integral optimum is at least 3 iff arc-disjoint demand paths
    exist.
    """
    for term in (s1, t1, s2, t2):
        if not 0 <= term < gp.node_count:
            raise InvalidTerminals(f"terminal {term} is not a node of the input")
    n = gp.node_count
    s, t, v, vp, vdd, w = n, n + 1, n + 2, n + 3, n + 4, n + 5
    arcs: list[tuple[int, int, int]] = [(a, b, 1) for a, b in gp.arcs]
    new = [
        ("(s,v)", s, v, 3),
        ("(s,v')", s, vp, 1),
        ("(s,v'')", s, vdd, 1),
        ("(v,s1)", v, s1, 1),
        ("(v,v')", v, vp, 1),
        ("(v,v'')", v, vdd, 1),
        ("(v',t)", vp, t, 2),
        ("(v'',t)", vdd, t, 2),
        ("(s,w)", s, w, 1),
        ("(t1,w)", t1, w, 1),
        ("(w,t)", w, t, 2),
        ("(s,s2)", s, s2, 1),
        ("(t2,t)", t2, t, 1),
    ]
    arc_label = {}
    for label, tail, head, cap in new:
        arc_label[len(arcs)] = label
        arcs.append((tail, head, cap))
    inst = Instance.build(n + 6, arcs, s, t, 2)
    roles = AdpRoles(
        s=s, t=t, v=v, vprime=vp, vdprime=vdd, w=w,
        terminals=(s1, t1, s2, t2),
        demand_arcs=tuple(range(len(gp.arcs))),
        arc_label=arc_label,
    )
    return AdpGadget(instance=inst, graph=gp, roles=roles)


def audit_adp_gadget(g: AdpGadget) -> list[str]:
    """Structural audit of the arc-disjoint-paths gadget."""
    bad: list[str] = []
    inst, gp, r = g.instance, g.graph, g.roles
    if inst.node_count != gp.node_count + 6:
        bad.append("node count")
    if inst.m != len(gp.arcs) + 13:
        bad.append("arc count")
    if inst.k != 2:
        bad.append("failure budget")
    label_of = {label: aid for aid, label in r.arc_label.items()}
    if inst.arcs[label_of["(s,v)"]].capacity != ExtendedRational(3):
        bad.append("capacity of (s,v)")
    two = ExtendedRational(2)
    cap2 = [aid for aid in range(inst.m) if inst.arcs[aid].capacity == two]
    if sorted(cap2) != sorted(label_of[l] for l in ("(v',t)", "(v'',t)", "(w,t)")):
        bad.append("capacity-2 arcs misplaced")
    for aid in range(inst.m):
        cap = inst.arcs[aid].capacity
        if aid == label_of["(s,v)"] or aid in cap2:
            continue
        if cap != ExtendedRational(1):
            bad.append(f"arc {aid}: expected unit capacity")
    return bad


def disjoint_paths_oracle(
    gp: DirectedGraph, s1: int, t1: int, s2: int, t2: int, budget: int = 10**6
) -> tuple[Path, Path] | None:
    """Some arc-disjoint (s1-t1, s2-t2) path pair, or None; exhaustive.

    Paths are over the input graph's arc indices.  The first pair in
    lexicographic enumeration order is returned.
    """
    for term in (s1, t1, s2, t2):
        if not 0 <= term < gp.node_count:
            raise InvalidTerminals(f"terminal {term} is not a node of the input")
    adj = gp.out_adjacency()
    paths1 = simple_paths(gp.node_count, adj, s1, t1, budget)
    paths2 = simple_paths(gp.node_count, adj, s2, t2, budget)
    if len(paths1) * len(paths2) > budget:
        raise EnumerationBudgetExceeded(
            f"{len(paths1)}x{len(paths2)} path pairs exceed budget {budget}"
        )
    for p1 in paths1:
        set1 = set(p1)
        for p2 in paths2:
            if set1.isdisjoint(p2):
                return Path(p1), Path(p2)
    return None


def adp_witness_flow(g: AdpGadget, p1: Path, p2: Path) -> PathFlow:
    """The seven-path unit witness flow for arc-disjoint demand paths.

    Routes one unit along each of: the two embedded demand paths and the
    five local paths around v, v', v'' and w.  Its nominal value is 7 and
    its robust value under two failures is 3.
    """
    if not p1.arc_set.isdisjoint(p2.arc_set):
        raise NotDisjoint("demand paths share an arc")
    r = g.roles
    label_of = {label: aid for aid, label in r.arc_label.items()}
    a = label_of  # shorthand
    big_p1 = Path(
        (a["(s,v)"], a["(v,s1)"]) + tuple(p1.arc_ids) + (a["(t1,w)"], a["(w,t)"])
    )
    big_p2 = Path((a["(s,s2)"],) + tuple(p2.arc_ids) + (a["(t2,t)"],))
    one = Fraction(1)
    flow = PathFlow.from_dict(
        {
            big_p1: one,
            big_p2: one,
            Path((a["(s,v')"], a["(v',t)"])): one,
            Path((a["(s,v'')"], a["(v'',t)"])): one,
            Path((a["(s,v)"], a["(v,v')"], a["(v',t)"])): one,
            Path((a["(s,v)"], a["(v,v'')"], a["(v'',t)"])): one,
            Path((a["(s,w)"], a["(w,t)"])): one,
        }
    )
    bad = flow.feasibility_violations(g.instance)
    assert not bad, f"witness flow must be feasible: {bad}"
    return flow
