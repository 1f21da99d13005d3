"""Dynamic priority search tree over 2-D feature points.

The skeleton is a leaf-oriented binary search tree on the keys ``(x, id)``;
every internal node holds a split key equal to the largest key of its left
subtree. Entries ``(y, x, id)`` live on the search path to their own leaf and
form a min-heap on y, so a node's entry is the lowest point in its subtree.
A node with no entry has an empty subtree.

Balance is kept by weight-balanced partial rebuilding: after an insertion
the highest node whose heavier child exceeds ``ALPHA`` of its leaf count is
rebuilt in linear time. Deletion leaves the leaf in place as a dead key; once
dead keys outnumber live ones the whole tree is rebuilt without them.
"""

from .errors import UsageError

ALPHA = 0.7
# Declared per-query visit constant: visits <= QUERY_C * (log2(size + 2) + k).
QUERY_C = 6


class _Node:
    __slots__ = ("key", "entry", "left", "right", "size")

    def __init__(self, key, entry=None, left=None, right=None, size=1):
        self.key = key
        self.entry = entry
        self.left = left
        self.right = right
        self.size = size


class PrioritySearchTree:
    """Insert, delete, and report entries strictly dominated by a query corner.

    ``nodes_visited`` counts every node touched by any operation, rebuilds
    included.
    """

    def __init__(self):
        self.root = None
        self._live = {}  # id -> x
        self.dead = 0
        self.nodes_visited = 0
        self.rebuilds = 0

    def __len__(self):
        return len(self._live)

    @property
    def size(self):
        return len(self._live)

    def __contains__(self, ident):
        return ident in self._live

    def insert(self, x, y, ident):
        if ident in self._live:
            raise UsageError(f"id {ident} is already stored")
        key = (x, ident)
        entry = (y, x, ident)
        self._live[ident] = x
        if self.root is None:
            self.root = _Node(key, entry)
            self.nodes_visited += 1
            return

        # Grow the skeleton: walk to the leaf where key belongs.
        path = []
        v = self.root
        while v.left is not None:
            path.append(v)
            v = v.left if key <= v.key else v.right
        self.nodes_visited += len(path) + 1
        if v.key == key:
            self.dead -= 1  # revive a dead leaf with the same key
        else:
            new_leaf = _Node(key)
            old_leaf = _Node(v.key)
            if key < v.key:
                v.left, v.right, v.key = new_leaf, old_leaf, key
            else:
                v.left, v.right = old_leaf, new_leaf
            # v keeps the old leaf's entry: still on that entry's path.
            v.size = 2
            for u in path:
                u.size += 1

        # Push the new entry down from the root, swapping in on the way.
        v = self.root
        visits = 0
        while True:
            visits += 1
            cur = v.entry
            if cur is None:
                v.entry = entry
                break
            if entry < cur:
                v.entry, entry = entry, cur
            k = entry[1], entry[2]
            v = v.left if k <= v.key else v.right
        self.nodes_visited += visits

        if path:
            self._rebalance(path)

    def delete(self, ident):
        x = self._live.pop(ident, None)
        if x is None:
            raise UsageError(f"id {ident} is not stored")
        key = (x, ident)
        v = self.root
        visits = 1
        while v.entry is None or v.entry[2] != ident:
            v = v.left if key <= v.key else v.right
            visits += 1
        self.nodes_visited += visits
        self._fill(v)
        self.dead += 1
        if self.dead > len(self._live):
            self._rebuild_all()

    def query_dominated(self, x0, y0):
        """Ids of all stored entries with x < x0 and y < y0."""
        out = []
        if self.root is None:
            return out
        visits = 0
        # (node, whole subtree lies left of x0)
        stack = [(self.root, False)]
        pop = stack.pop
        push = stack.append
        while stack:
            v, inside = pop()
            visits += 1
            e = v.entry
            if e is None or e[0] >= y0:
                continue
            if inside or e[1] < x0:
                out.append(e[2])
            left = v.left
            if left is None:
                continue
            if inside:
                push((left, True))
                push((v.right, True))
            elif v.key[0] < x0:
                push((left, True))
                push((v.right, False))
            else:
                push((left, False))
        self.nodes_visited += visits
        return out

    def entries(self):
        """All live entries as ``(x, y, id)`` triples, in no particular order."""
        out = []
        stack = [self.root] if self.root is not None else []
        while stack:
            v = stack.pop()
            if v.entry is None:
                continue
            y, x, ident = v.entry
            out.append((x, y, ident))
            if v.left is not None:
                stack.append(v.left)
                stack.append(v.right)
        return out

    def height(self):
        def h(v):
            if v is None:
                return -1
            return 1 + max(h(v.left), h(v.right))
        return h(self.root)

    # -- internals ---------------------------------------------------------

    def _fill(self, v):
        """Refill the hole at v by pulling up the lower child entry, repeatedly."""
        visits = 0
        while True:
            left = v.left
            if left is None:
                v.entry = None
                break
            le, re = left.entry, v.right.entry
            visits += 2
            if le is None and re is None:
                v.entry = None
                break
            if re is None or (le is not None and le < re):
                v.entry = le
                v = left
            else:
                v.entry = re
                v = v.right
        self.nodes_visited += visits

    def _rebalance(self, path):
        for i, v in enumerate(path):
            heavy = max(v.left.size, v.right.size)
            if heavy > ALPHA * v.size and v.size > 3:
                rebuilt = self._rebuild(v, keep_dead=True)
                if i == 0:
                    self.root = rebuilt
                else:
                    parent = path[i - 1]
                    if parent.left is v:
                        parent.left = rebuilt
                    else:
                        parent.right = rebuilt
                return

    def _rebuild_all(self):
        self.root = self._rebuild(self.root, keep_dead=False) if self._live else None
        self.dead = 0

    def _rebuild(self, top, keep_dead):
        """Rebuild the subtree at ``top`` perfectly balanced, in linear time."""
        self.rebuilds += 1
        keys = []
        entries = {}
        visits = 0
        # In-order traversal for the leaf keys; entries gathered on the way.
        node = top
        stack = []
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            visits += 1
            if node.entry is not None:
                entries[node.entry[1], node.entry[2]] = node.entry
            if node.left is None:
                k = node.key
                if keep_dead or self._live.get(k[1]) == k[0]:
                    keys.append(k)
            node = node.right
        self.nodes_visited += visits

        leaves = [_Node(k, entries.pop(k, None)) for k in keys]
        # Entries whose leaves sit outside this subtree are impossible;
        # entries stored above ``top`` never entered ``entries``.
        assert not entries

        def build(lo, hi):
            if hi - lo == 1:
                return leaves[lo]
            mid = (lo + hi) // 2
            left = build(lo, mid)
            right = build(mid, hi)
            v = _Node(leaves[mid - 1].key, None, left, right, hi - lo)
            self._fill(v)
            return v

        return build(0, len(leaves))

    def check_invariants(self):
        """Walk the whole tree and raise AssertionError on any violation."""
        if self.root is None:
            assert not self._live
            return
        seen = set()
        leaf_keys = []

        def walk(v, bound_lo, bound_hi):
            # Returns (min key, max key, leaf count) of the subtree.
            e = v.entry
            if v.left is None:
                assert v.size == 1
                k = v.key
                assert bound_lo is None or k > bound_lo
                assert bound_hi is None or k <= bound_hi
                leaf_keys.append(k)
                if e is not None:
                    assert (e[1], e[2]) == k
                return k, k, 1
            lmin, lmax, lsize = walk(v.left, bound_lo, v.key)
            rmin, rmax, rsize = walk(v.right, v.key, bound_hi)
            assert lmax == v.key, "split key must be the left subtree maximum"
            assert v.size == lsize + rsize
            for child in (v.left, v.right):
                ce = child.entry
                if e is None:
                    assert ce is None, "empty node above a non-empty subtree"
                elif ce is not None:
                    assert e < ce, "heap order violated"
            if e is not None:
                assert lmin <= (e[1], e[2]) <= rmax, "entry off its search path"
            return lmin, rmax, lsize + rsize

        walk(self.root, None, None)
        assert leaf_keys == sorted(leaf_keys)
        for x, y, ident in self.entries():
            assert ident not in seen
            seen.add(ident)
            assert self._live.get(ident) == x
        assert len(seen) == len(self._live)
        assert len(leaf_keys) == len(self._live) + self.dead


def pst_insert(t, x, y, ident):
    t.insert(x, y, ident)


def pst_delete(t, ident):
    t.delete(ident)


def pst_query_dominated(t, x0, y0):
    return t.query_dominated(x0, y0)
