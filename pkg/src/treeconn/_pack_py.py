"""Pure-Python packing kernel.

Decides whether ``t`` internally disjoint trees connect the terminal set.
Variables are the terminal-terminal edges (first) and the non-terminal
vertices (ascending label); each is given to one of the ``t`` slots or left
unused.  Slots are interchangeable, so a variable may only open the next
fresh slot.  A partial assignment is cut when

* some slot can no longer connect the terminals through its own vertices
  plus the still-unassigned ones, or holds a vertex cut off from them;
* some terminal has fewer unclaimed incident edges than slots still
  lacking an edge at it.

A slot whose terminals are already connected takes no further variables,
which restricts the search to inclusion-minimal trees without losing
completeness.

``_packing_ext.pyx`` mirrors this search step for step; both must return
identical results.
"""

from __future__ import annotations


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def pack(n: int, adj: list[int], smask: int, t: int):
    """Return ``(vertex_masks, ss_edge_masks)`` per slot, or ``None``.

    ``ss_edge_masks[i]`` indexes into the terminal-terminal edges listed in
    ascending ``(a, b)`` order.
    """
    terms = _bits(smask)
    free = [v for v in range(n) if not smask >> v & 1]
    ss = [(a, b) for i, a in enumerate(terms) for b in terms[i + 1:] if adj[a] >> b & 1]
    nss = len(ss)
    inc = {s: 0 for s in terms}
    term_ss: dict[int, list[tuple[int, int]]] = {s: [] for s in terms}
    for i, (a, b) in enumerate(ss):
        inc[a] |= 1 << i
        inc[b] |= 1 << i
        term_ss[a].append((i, b))
        term_ss[b].append((i, a))
    root = 1 << terms[0]

    vm = [0] * t
    em = [0] * t
    done = [False] * t
    state = {"U": sum(1 << v for v in free), "D": (1 << nss) - 1}

    def reach(allowed: int, ssok: int) -> int:
        seen = root
        frontier = root
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                if smask >> v & 1:
                    nxt |= adj[v] & allowed
                    for ei, w in term_ss[v]:
                        if ssok >> ei & 1:
                            nxt |= 1 << w
                else:
                    nxt |= adj[v] & (allowed | smask)
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def slot_ok(i: int) -> bool:
        r = reach(vm[i] | state["U"], em[i] | state["D"])
        return r & smask == smask and vm[i] & ~r == 0

    def degrees_ok() -> bool:
        U, D = state["U"], state["D"]
        for s in terms:
            need = 0
            for i in range(t):
                if adj[s] & vm[i] == 0 and em[i] & inc[s] == 0:
                    need += 1
            if need > (adj[s] & U).bit_count() + (D & inc[s]).bit_count():
                return False
        return True

    def consistent(used: int) -> bool:
        for i in range(used):
            if not done[i] and not slot_ok(i):
                return False
        if used < t and not slot_ok(used):
            return False
        return degrees_ok()

    nvars = nss + len(free)

    def rec(k: int, used: int, ndone: int) -> bool:
        if ndone == t:
            return True
        if k == nvars:
            return False
        is_edge = k < nss
        bit = 1 << (k if is_edge else free[k - nss])
        for j in list(range(min(used + 1, t))) + [-1]:
            if j >= 0 and done[j]:
                continue
            if is_edge:
                state["D"] &= ~bit
                if j >= 0:
                    em[j] |= bit
            else:
                state["U"] &= ~bit
                if j >= 0:
                    vm[j] |= bit
            nused = used + 1 if j == used else used
            if consistent(nused):
                closed = False
                if j >= 0:
                    r = reach(vm[j], em[j])
                    closed = r & smask == smask
                    done[j] = closed
                if rec(k + 1, nused, ndone + closed):
                    return True
                if j >= 0:
                    done[j] = False
            if is_edge:
                state["D"] |= bit
                if j >= 0:
                    em[j] &= ~bit
            else:
                state["U"] |= bit
                if j >= 0:
                    vm[j] &= ~bit
        return False

    if not consistent(0):
        return None
    if rec(0, 0, 0):
        return list(vm), list(em)
    return None
