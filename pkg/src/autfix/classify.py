"""Isomorphism types of subgroups and the aut-fixed decision procedures.

An :class:`IsoType` is one of ``1``, ``F_t`` (t >= 2), ``F_inf`` or ``S_r``
(closed orientable surface group of genus r >= 2), times ``Z^s``.  Free
factors of rank 0 and 1 are folded into the abelian part on construction,
so structural equality is isomorphism.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional, Union

TRIVIAL = "trivial"
FREE = "free"
FREE_INF = "freeinf"
SURFACE = "surface"

ALEPH0 = math.inf  # rank of an infinitely generated type


@dataclass(frozen=True, order=True)
class IsoType:
    kind: str
    n: int = 0  # free rank for FREE, genus for SURFACE, unused otherwise
    s: int = 0

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("negative abelian rank")
        if self.kind == FREE and self.n < 2:
            raise ValueError("use normalize_iso for free ranks below 2")
        if self.kind == SURFACE and self.n < 2:
            raise ValueError("surface genus must be at least 2")
        if self.kind in (TRIVIAL, FREE_INF) and self.n != 0:
            raise ValueError(f"{self.kind} carries no rank parameter")
        if self.kind not in (TRIVIAL, FREE, FREE_INF, SURFACE):
            raise ValueError(f"unknown kind {self.kind!r}")

    def __str__(self) -> str:
        return format_iso(self)

    def times_z(self, extra: int) -> "IsoType":
        return IsoType(self.kind, self.n, self.s + extra)


def normalize_iso(kind: str, n: int = 0, s: int = 0) -> IsoType:
    """Canonical form; ``F_0`` and ``F_1 = Z`` are absorbed into ``Z^s``."""
    if kind == FREE and n <= 1:
        return IsoType(TRIVIAL, 0, s + n)
    if kind in (TRIVIAL, FREE_INF):
        n = 0
    return IsoType(kind, n, s)


def free(t: int, s: int = 0) -> IsoType:
    return normalize_iso(FREE, t, s)


def surface(r: int, s: int = 0) -> IsoType:
    return normalize_iso(SURFACE, r, s)


def free_inf(s: int = 0) -> IsoType:
    return IsoType(FREE_INF, 0, s)


def abelian(s: int = 0) -> IsoType:
    return IsoType(TRIVIAL, 0, s)


def iso_equal(a: IsoType, b: IsoType) -> bool:
    # canonical forms: a free base never equals a surface base, and the
    # abelian rank is the rank of the centre
    return a == b


def rank_of(a: IsoType) -> Union[int, float]:
    """Minimal number of generators; :data:`ALEPH0` for ``F_inf x Z^s``."""
    if a.kind == FREE_INF:
        return ALEPH0
    if a.kind == SURFACE:
        return 2 * a.n + a.s
    return a.n + a.s


# -- text form ----------------------------------------------------------------

def format_iso(a: IsoType) -> str:
    base = {TRIVIAL: "", FREE: f"F_{a.n}", FREE_INF: "Finf", SURFACE: f"S_{a.n}"}[a.kind]
    ab = "" if a.s == 0 else ("Z" if a.s == 1 else f"Z^{a.s}")
    if not base:
        return ab or "1"
    return f"{base} x {ab}" if ab else base


_FACTOR = re.compile(r"^(?:(1)|f_?(\d+)|finf|f_?inf|s_?(\d+)|z(?:\^(\d+))?)$")


def parse_iso(text: str) -> IsoType:
    """Parse ``"1"``, ``"Z^s"``, ``"F_t x Z^s"``, ``"Finf x Z^s"``, ``"S_r x Z^s"``.

    Case-insensitive; ``Z`` means ``Z^1`` and a missing abelian factor means
    ``Z^0``.  Non-canonical inputs such as ``F_1 x Z`` are normalized.
    """
    parts = [p.strip().replace(" ", "") for p in re.split(r"x|\*|×", text.strip().lower())]
    if not parts or any(not p for p in parts):
        raise ValueError(f"cannot parse subgroup type {text!r}")
    kind, n, s = TRIVIAL, 0, 0
    seen_base = False
    for p in parts:
        m = _FACTOR.match(p)
        if not m:
            raise ValueError(f"cannot parse factor {p!r} in {text!r}")
        if p.startswith("z"):
            s += int(m.group(4)) if m.group(4) is not None else 1
            continue
        if m.group(1):
            continue
        if seen_base:
            raise ValueError(f"more than one non-abelian factor in {text!r}")
        seen_base = True
        if m.group(2) is not None:
            kind, n = FREE, int(m.group(2))
        elif m.group(3) is not None:
            kind, n = SURFACE, int(m.group(3))
            if n == 1:
                # the torus group
                kind, n, s = TRIVIAL, 0, s + 2
            elif n == 0:
                kind, n = TRIVIAL, 0
        else:
            kind = FREE_INF
    return normalize_iso(kind, n, s)


# -- ambients -------------------------------------------------------------------

@dataclass(frozen=True)
class Ambient:
    """``F_g x Z^k`` (kind ``"free"``) or ``pi_1(S_g) x Z^k`` (kind ``"surface"``)."""

    kind: str
    g: int
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("free", "surface"):
            raise ValueError(f"unknown ambient kind {self.kind!r}")
        if self.g < 2 or self.k < 0:
            raise ValueError(f"need g >= 2 and k >= 0, got g={self.g}, k={self.k}")

    @property
    def is_surface(self) -> bool:
        return self.kind == "surface"

    @property
    def word_rank(self) -> int:
        """Number of generators of the non-abelian factor."""
        return 2 * self.g if self.is_surface else self.g

    def __str__(self) -> str:
        return f"{self.kind}:g={self.g},k={self.k}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "g": self.g, "k": self.k}

    @classmethod
    def from_json(cls, data: dict) -> "Ambient":
        return cls(data["kind"], int(data["g"]), int(data.get("k", 0)))


def parse_ambient(text: str) -> Ambient:
    """``free:g=3,k=2`` or ``surface:g=2,k=1``."""
    m = re.fullmatch(r"\s*(free|surface)\s*:\s*(.*)", text.strip().lower())
    if not m:
        raise ValueError(f"cannot parse ambient {text!r}")
    fields = {}
    for item in filter(None, (x.strip() for x in m.group(2).split(","))):
        key, _, val = item.partition("=")
        if key not in ("g", "k") or not val.strip().isdigit():
            raise ValueError(f"bad ambient field {item!r}")
        fields[key] = int(val)
    if "g" not in fields:
        raise ValueError(f"ambient {text!r} lacks g")
    return Ambient(m.group(1), fields["g"], fields.get("k", 0))


def schreier_rank(m: int, g: int) -> int:
    """Rank of an index ``m`` subgroup of a free group of rank ``g``."""
    if m < 1 or g < 1:
        raise ValueError("need m >= 1 and g >= 1")
    return m * (g - 1) + 1


def _surface_index(g: int, r: int) -> Optional[int]:
    """The ``m`` with ``r = m(g-1)+1``, if any."""
    if r < g or (r - 1) % (g - 1):
        return None
    return (r - 1) // (g - 1)


def subgroup_realizable(ambient: Ambient, a: IsoType) -> bool:
    """Whether some subgroup of ``ambient`` is isomorphic to ``a``."""
    k = ambient.k
    if a.kind == TRIVIAL:
        # Z^{k+1} = <a1> x Z^k
        return a.s <= k + 1
    if a.kind in (FREE, FREE_INF):
        return a.s <= k
    # surface base
    if not ambient.is_surface:
        return False
    return a.s <= k and _surface_index(ambient.g, a.n) is not None


# -- the aut-fixed decision procedures ----------------------------------------

@dataclass(frozen=True)
class AutFixedVerdict:
    answer: bool
    theorem_tag: str
    witness: Optional[str] = None  # a constructions recipe id

    def __bool__(self) -> bool:
        return self.answer


# Tags name the ambient family whose classification decided the question.
TAG_FREE = "free"
TAG_SURFACE = "surface"
TAG_FREE_Z = "free_x_Z"
TAG_FREE_ZK = "free_x_Zk"
TAG_SURFACE_Z = "surface_x_Z"
TAG_SURFACE_ZK = "surface_x_Zk"
TAG_NOT_SUBGROUP = "not a subgroup"


def _aut_fixed_free_k0(g: int, a: IsoType) -> bool:
    # F_t, 0 <= t <= g
    return (a.kind == TRIVIAL and a.s <= 1) or (a.kind == FREE and a.s == 0 and a.n <= g)


def _aut_fixed_surface_k0(g: int, a: IsoType) -> bool:
    # pi_1(S_g) or F_t with t < 2g
    if a.kind == SURFACE:
        return a.n == g and a.s == 0
    return (a.kind == TRIVIAL and a.s <= 1) or (a.kind == FREE and a.s == 0 and a.n < 2 * g)


def _free_times_z_list(g: int) -> set[IsoType]:
    out = set()
    for t in range(1, g + 1):
        out.add(free(2 * t - 1))
    for t in range(0, g + 1):
        for s in (0, 1):
            out.add(free(t, s))
    out.add(free_inf(1))
    return out


def _surface_times_z_list(g: int) -> set[IsoType]:
    out = set()
    for t in range(1, 2 * g):
        out.add(free(2 * t - 1))
    out.add(surface(2 * g - 1))
    out.add(free_inf(1))
    for s in (0, 1):
        out.add(surface(g, s))
        for t in range(0, 2 * g):
            out.add(free(t, s))
    return out


def _aut_fixed_free_zk(g: int, k: int, a: IsoType) -> bool:
    # everything except F_t x Z^k (t > g) and F_inf
    if a.kind == FREE_INF:
        return a.s >= 1
    if a.kind == FREE and a.s == k:
        return a.n <= g
    return True


def _aut_fixed_surface_zk(g: int, k: int, a: IsoType) -> bool:
    if a.kind == FREE_INF:
        return 1 <= a.s <= k
    if a.kind == SURFACE:
        m = _surface_index(g, a.n)
        return m is not None and (a.s < k or m == 1)
    if a.kind == FREE and a.s == k:
        return a.n < 2 * g
    # trivial base: F_0 x Z^s or F_1 x Z^{s-1}; both have t < 2g
    return True


def decide_aut_fixed(ambient: Ambient, a: IsoType) -> tuple[bool, str]:
    """``(answer, theorem_tag)`` without looking up a witness."""
    g, k = ambient.g, ambient.k
    if not subgroup_realizable(ambient, a):
        return False, TAG_NOT_SUBGROUP
    if not ambient.is_surface:
        if k == 0:
            tag, ok = TAG_FREE, _aut_fixed_free_k0(g, a)
        elif k == 1:
            tag, ok = TAG_FREE_Z, a in _free_times_z_list(g)
        else:
            tag, ok = TAG_FREE_ZK, _aut_fixed_free_zk(g, k, a)
    else:
        if k == 0:
            tag, ok = TAG_SURFACE, _aut_fixed_surface_k0(g, a)
        elif k == 1:
            tag, ok = TAG_SURFACE_Z, a in _surface_times_z_list(g)
        else:
            tag, ok = TAG_SURFACE_ZK, _aut_fixed_surface_zk(g, k, a)
    return ok, tag


def is_aut_fixed(ambient: Ambient, a: IsoType) -> AutFixedVerdict:
    """Is ``a`` isomorphic to the fixed subgroup of some automorphism of ``ambient``?"""
    from .constructions import witness_recipe_id

    ok, tag = decide_aut_fixed(ambient, a)
    return AutFixedVerdict(ok, tag, witness_recipe_id(ambient, a) if ok else None)


# -- enumeration and counting ----------------------------------------------------

def enumerate_aut_fixed(ambient: Ambient, rank_bound: Union[int, float] = ALEPH0) -> list[IsoType]:
    """All aut-fixed types of rank at most ``rank_bound``, plus the ``F_inf`` ones.

    For ``k <= 1`` the list is finite and returned in full whatever the bound.
    Sorted by (rank, type).
    """
    g, k = ambient.g, ambient.k
    if k <= 1:
        if ambient.is_surface:
            if k == 0:
                types = {surface(g)} | {free(t) for t in range(0, 2 * g)}
            else:
                types = _surface_times_z_list(g)
        else:
            types = {free(t) for t in range(0, g + 1)} if k == 0 else _free_times_z_list(g)
    else:
        if math.isinf(rank_bound):
            raise ValueError("the list is infinite for k >= 2; give a finite rank_bound")
        bound = int(rank_bound)
        cands = {free_inf(s) for s in range(k + 1)}
        cands |= {abelian(s) for s in range(min(bound, k + 1) + 1)}
        for s in range(k + 1):
            cands |= {free(t, s) for t in range(2, bound - s + 1)}
            if ambient.is_surface:
                cands |= {surface(r, s) for r in range(2, (bound - s) // 2 + 1)}
        types = {a for a in cands if decide_aut_fixed(ambient, a)[0]}
        types = {a for a in types if rank_of(a) <= bound or a.kind == FREE_INF}
    return sorted(types, key=lambda a: (rank_of(a), a))


@dataclass(frozen=True)
class Count:
    value: Optional[int]  # None means infinitely many

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "infinite" if self.value is None else str(self.value)


def count_aut_fixed(ambient: Ambient) -> Count:
    """Number of aut-fixed isomorphism types, by closed formula."""
    g, k = ambient.g, ambient.k
    if k >= 2:
        return Count(None)
    if ambient.is_surface:
        return Count(2 * g + 1 if k == 0 else 5 * g + 2)
    return Count(g + 1 if k == 0 else 2 * g + 2 + g // 2)
