"""Generation of all finite posets up to isomorphism, canonical forms, and
monotone map enumeration.

Canonical labeling uses colour refinement plus individualization search and
returns the lexicographically least packed relation matrix over the pruned
branch set, so equal byte strings mean isomorphic posets.  Poset generation
grows instances one maximal element at a time and rejects duplicates by
canonical form, which avoids ever materializing the 2**(n*n) relation space.
"""

from __future__ import annotations

import os
import struct
from functools import lru_cache
from pathlib import Path

import numpy as np

from .families import _ideals
from .poset import FinitePoset, PosetError, PosetMap, iter_bits

DEFAULT_MAX_N = 6


# -- canonical forms ----------------------------------------------------------


def _pack_relation(n: int, rows) -> bytes:
    """n header byte plus the row-major bit-packed relation matrix."""
    acc = 0
    pos = 0
    for i in range(n):
        row = rows[i]
        for j in range(n):
            if row >> j & 1:
                acc |= 1 << pos
            pos += 1
    nbytes = (n * n + 7) // 8
    return bytes([n]) + acc.to_bytes(nbytes, "big")


def unpack_canonical(data: bytes) -> FinitePoset:
    """Rebuild a poset (with default labels) from its packed canonical form."""
    n = data[0]
    acc = int.from_bytes(data[1:], "big")
    le = [[bool(acc >> (i * n + j) & 1) for j in range(n)] for i in range(n)]
    return FinitePoset(le)


def _refine(up, down, colors: tuple[int, ...]) -> tuple[int, ...]:
    """Stable colour refinement by multisets of neighbour colours both ways."""
    n = len(colors)
    while True:
        sigs = []
        for i in range(n):
            below = sorted(colors[j] for j in iter_bits(down[i] & ~(1 << i)))
            above = sorted(colors[j] for j in iter_bits(up[i] & ~(1 << i)))
            sigs.append((colors[i], tuple(below), tuple(above)))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = tuple(ranking[s] for s in sigs)
        if new == colors:
            return new
        colors = new


def canonical_form(p: FinitePoset) -> bytes:
    """Canonical labeling bytes; equal bytes iff isomorphic posets."""
    cached = p.__dict__.get("_canonical_form")
    if cached is not None:
        return cached
    n = p.n
    up, down = p.up_masks, p.down_masks
    if n == 0:
        result = bytes([0])
        p.__dict__["_canonical_form"] = result
        return result
    initial = tuple(
        (down[i].bit_count(), up[i].bit_count()) for i in range(n)
    )
    ranking = {s: r for r, s in enumerate(sorted(set(initial)))}
    colors = _refine(up, down, tuple(ranking[s] for s in initial))
    best: bytes | None = None

    def leaf_bytes(colors) -> bytes:
        perm = sorted(range(n), key=lambda i: colors[i])
        inv = [0] * n
        for new, old in enumerate(perm):
            inv[old] = new
        rows = [0] * n
        for i in range(n):
            row = 0
            src = up[perm[i]]
            for j in iter_bits(src):
                row |= 1 << inv[j]
            rows[i] = row
        return _pack_relation(n, rows)

    def search(colors):
        nonlocal best
        cells: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            cand = leaf_bytes(colors)
            if best is None or cand < best:
                best = cand
            return
        fresh = max(colors) + 1
        for v in target:
            branched = list(colors)
            branched[v] = fresh
            search(_refine(up, down, tuple(branched)))

    search(colors)
    assert best is not None
    p.__dict__["_canonical_form"] = best
    return best


def are_isomorphic(p: FinitePoset, q: FinitePoset) -> bool:
    if p.n != q.n:
        return False
    return canonical_form(p) == canonical_form(q)


# -- generation up to isomorphism ----------------------------------------------


@lru_cache(maxsize=None)
def _poset_from_form(form: bytes) -> FinitePoset:
    # one shared instance per class, so per-instance memos survive re-enumeration
    return unpack_canonical(form)


def enumerate_posets(n: int, max_n: int = DEFAULT_MAX_N, cache_dir=None):
    """All posets on ``n`` elements up to isomorphism, in canonical-form order.

    Each emitted poset is the canonical representative of its class, so two
    runs (and cached versus recomputed runs) produce identical output.
    """
    if n < 1:
        raise PosetError("poset enumeration needs n >= 1")
    if n > max_n:
        raise PosetError(f"n={n} exceeds the enumeration cap {max_n}")
    cache_dir = _resolve_cache_dir(cache_dir)
    if cache_dir is not None:
        cached = _read_cache(cache_dir, n)
        if cached is not None:
            return cached
    forms = _canonical_forms(n)
    posets = tuple(_poset_from_form(f) for f in forms)
    if cache_dir is not None:
        _write_cache(cache_dir, n, forms)
    return posets


@lru_cache(maxsize=None)
def _canonical_forms(n: int) -> tuple[bytes, ...]:
    if n == 1:
        return (canonical_form(FinitePoset([[True]])),)
    seen: set[bytes] = set()
    for prev in _canonical_forms(n - 1):
        p = unpack_canonical(prev)
        base = p.le
        for ideal in _ideals(p, include_empty=True):
            le = np.zeros((n, n), dtype=bool)
            le[: n - 1, : n - 1] = base
            le[n - 1, n - 1] = True
            for i in iter_bits(ideal):
                le[i, n - 1] = True
            seen.add(canonical_form(FinitePoset(le)))
    return tuple(sorted(seen))


_SEMILATTICE_POOL: dict = {}
_NOT_A_SEMILATTICE = object()


def enumerate_v_semilattices(n: int, max_n: int = DEFAULT_MAX_N, cache_dir=None):
    """The posets of size ``n`` on which every consistent pair has a least join."""
    from .semilattice import VSemilattice

    out = []
    for p in enumerate_posets(n, max_n=max_n, cache_dir=cache_dir):
        hit = _SEMILATTICE_POOL.get(p)
        if hit is None:
            hit = VSemilattice.from_poset(p) or _NOT_A_SEMILATTICE
            _SEMILATTICE_POOL[p] = hit
        if hit is not _NOT_A_SEMILATTICE:
            out.append(hit)
    return tuple(out)


# -- brute-force oracles --------------------------------------------------------

def bruteforce_canonical_forms(n: int) -> frozenset:
    """Independent oracle: every relation compatible with the numeric order,
    filtered for transitivity, deduplicated by canonical form.

    Every poset admits a linear extension, so restricting to relations with
    i <= j keeps one labeled copy of every isomorphism class while shrinking
    the search to 2**(n*(n-1)/2) candidates.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    forms = set()
    for pattern in range(1 << len(pairs)):
        le = np.eye(n, dtype=bool)
        for k in iter_bits(pattern):
            i, j = pairs[k]
            le[i, j] = True
        closed = le.astype(np.uint8) @ le.astype(np.uint8) > 0
        if (closed & ~le).any():
            continue
        forms.add(canonical_form(FinitePoset(le)))
    return frozenset(forms)


def bruteforce_poset_count(n: int) -> int:
    return len(bruteforce_canonical_forms(n))


# -- monotone maps ----------------------------------------------------------------


def enumerate_monotone_maps(p: FinitePoset, q: FinitePoset) -> list[PosetMap]:
    """All monotone maps p -> q, by backtracking along a linear extension of p
    with the candidate set for each element cut down to the common up-set of
    the images of its predecessors."""
    return [PosetMap(p, q, img) for img in monotone_map_images(p, q)]


@lru_cache(maxsize=None)
def monotone_map_images(p: FinitePoset, q: FinitePoset) -> tuple[tuple[int, ...], ...]:
    n = p.n
    order = p.linear_extension
    strict_down = [p.down_masks[e] & ~(1 << e) for e in range(n)]
    img = [-1] * n
    out: list[tuple[int, ...]] = []

    def rec(k: int):
        if k == n:
            out.append(tuple(img))
            return
        e = order[k]
        cand = q.full_mask
        for pred in iter_bits(strict_down[e]):
            cand &= q.up_masks[img[pred]]
        for v in iter_bits(cand):
            img[e] = v
            rec(k + 1)
        img[e] = -1

    rec(0)
    return tuple(out)


# -- canonical form cache file -----------------------------------------------------


def _resolve_cache_dir(cache_dir):
    if cache_dir is None:
        cache_dir = os.environ.get("POWERLAB_CACHE")
    if cache_dir is None:
        return None
    path = Path(cache_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _cache_file(cache_dir: Path, n: int) -> Path:
    return cache_dir / f"posets_n{n}.bin"


def _write_cache(cache_dir: Path, n: int, forms) -> None:
    with open(_cache_file(cache_dir, n), "wb") as fh:
        for form in forms:
            fh.write(struct.pack(">I", len(form)))
            fh.write(form)


def _read_cache(cache_dir: Path, n: int):
    path = _cache_file(cache_dir, n)
    if not path.exists():
        return None
    forms = []
    data = path.read_bytes()
    pos = 0
    while pos < len(data):
        (length,) = struct.unpack_from(">I", data, pos)
        pos += 4
        forms.append(data[pos : pos + length])
        pos += length
    return tuple(_poset_from_form(f) for f in forms)
