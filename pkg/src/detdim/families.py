"""Named graph families with vertex labels that follow the usual names.

``T_r`` is the path u1..ur plus a pendant u0 on u3; ``G_r`` is its corona
and ``H_r`` adds a second pendant v0' on u0.  ``T_{q,s}`` hangs a copy of
T_6 off every vertex of T_{q-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParams
from .graph import Graph, add_pendants, build_graph, complement, corona_k1

PATH, CYCLE, COMPLETE, STAR, WHEEL = "PATH", "CYCLE", "COMPLETE", "STAR", "WHEEL"
T_R, G_R, H_R, T_QS = "T_r", "G_r", "H_r", "T_qs"
NAMES = (PATH, CYCLE, COMPLETE, STAR, WHEEL, T_R, G_R, H_R, T_QS)

# Vertex of each T_6 copy that is identified with its spine vertex in T_{q,s}.
# u1 and u0 give dim = q, u6 gives dim = q; only u3 yields the 2q / 2q+1 values
# and a trivial automorphism group (checked in tests/test_families.py).
TQS_ANCHOR = 3


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]

    def __post_init__(self):
        check_params(self.name, self.params)


def check_params(name: str, params: tuple[int, ...]):
    def need(count):
        if len(params) != count:
            raise BadParams(f"{name} takes {count} parameter(s), got {len(params)}")

    if name == PATH or name == COMPLETE:
        need(1)
        if params[0] < 1:
            raise BadParams(f"{name} needs n >= 1")
    elif name == CYCLE:
        need(1)
        if params[0] < 3:
            raise BadParams("CYCLE needs n >= 3")
    elif name == STAR:
        need(1)
        if params[0] < 1:
            raise BadParams("STAR needs k >= 1")
    elif name == WHEEL:
        need(1)
        if params[0] < 3:
            raise BadParams("WHEEL needs n >= 3")
    elif name in (T_R, G_R, H_R):
        need(1)
        if params[0] < 6:
            raise BadParams(f"{name} needs r >= 6")
    elif name == T_QS:
        need(2)
        q, s = params
        if q < 7 or not 0 <= s < 7:
            raise BadParams("T_qs needs q >= 7 and 0 <= s < 7")
    else:
        raise BadParams(f"unknown family {name!r}")


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel(n: int) -> Graph:
    """W_{1,n} = K_1 + C_n with hub 0."""
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return build_graph(n + 1, rim + [(0, i) for i in range(1, n + 1)])


def t_r(r: int) -> Graph:
    edges = [(i, i + 1) for i in range(1, r)] + [(0, 3)]
    return build_graph(r + 1, edges, [f"u{i}" for i in range(r + 1)])


def g_r(r: int) -> Graph:
    return corona_k1(t_r(r))


def h_r(r: int) -> Graph:
    return add_pendants(g_r(r), [0], ["v0'"])


def t_qs(q: int, s: int, anchor: int = TQS_ANCHOR) -> Graph:
    spine = t_r(q - 1)
    labels = list(spine.labels)
    edges = list(spine.edges())
    copy_edges = [(i, i + 1) for i in range(1, 6)] + [(0, 3)]
    for v in range(q):
        local = {}
        for j in range(7):
            if j == anchor:
                local[j] = v
            else:
                local[j] = len(labels)
                labels.append(f"{spine.labels[v]}.{j}")
        edges += [(local[a], local[b]) for a, b in copy_edges]
    u1, u2 = 1, 2
    if 1 <= s <= 3:
        edges.remove((u1, u2))
        chain = [u1]
        for k in range(s):
            chain.append(len(labels))
            labels.append(f"p{k + 1}")
        chain.append(u2)
        edges += list(zip(chain, chain[1:]))
    elif s >= 4:
        prev = u1
        for k in range(s):
            edges.append((prev, len(labels)))
            prev = len(labels)
            labels.append(f"p{k + 1}")
    return build_graph(len(labels), edges, labels)


def gen(spec: FamilySpec | str, *params: int) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec(spec, tuple(params))
    name, p = spec.name, spec.params
    builders = {
        PATH: path, CYCLE: cycle, COMPLETE: complete, STAR: star, WHEEL: wheel,
        T_R: t_r, G_R: g_r, H_R: h_r, T_QS: t_qs,
    }
    return builders[name](*p)


def expected_order(spec: FamilySpec) -> int:
    p = spec.params
    return {
        PATH: lambda: p[0], CYCLE: lambda: p[0], COMPLETE: lambda: p[0],
        STAR: lambda: p[0] + 1, WHEEL: lambda: p[0] + 1,
        T_R: lambda: p[0] + 1, G_R: lambda: 2 * p[0] + 2, H_R: lambda: 2 * p[0] + 3,
        T_QS: lambda: 7 * p[0] + p[1],
    }[spec.name]()


def theorem22_witness(n: int, complemented: bool = True) -> Graph:
    """Order-n graph with dim - Det = floor(n/2) - 1 (complemented form).

    With ``complemented=False`` the tree itself is returned, which has
    lambda - Det = floor(n/2).
    """
    if n < 14:
        raise BadParams("witness needs n >= 14")
    g = g_r(n // 2 - 1) if n % 2 == 0 else h_r((n - 1) // 2 - 1)
    return complement(g) if complemented else g
