"""Flip scripts: one operation or query per line.

Operations::

    cflip u v w z       colored flip of u->v supported by w->u
    fflip a b c         flip of the directed face a->b->c
    cyflip v1 ... vk    flip of the directed cycle v1->...->vk

Queries (answered in order, one output line each)::

    coords u
    label u v
    lca i u v
    depth i u
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .dynrealizer import DynRealizer
from .flips import (
    ColoredFlipOp,
    FlipError,
    colored_flip,
    cycle_flip,
    cycle_flip_as_colored,
    face_flip_as_colored,
    make_op,
    replay,
)
from .realizer import Realizer, barycentric, path_of
from .triangulation import ParseError

__all__ = ["Command", "parse_script", "format_ops", "run_static", "run_dynamic"]

ARITY = {"cflip": 4, "fflip": 3, "cyflip": None, "coords": 1, "label": 2, "lca": 3, "depth": 2}


@dataclass(frozen=True)
class Command:
    name: str
    args: Tuple[int, ...]
    line: int

    def text(self) -> str:
        return " ".join([self.name, *map(str, self.args)])


def parse_script(text: str) -> List[Command]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, *rest = line.split()
        if name not in ARITY:
            raise ParseError(f"line {lineno}: unknown command {name!r}")
        try:
            args = tuple(int(x) for x in rest)
        except ValueError:
            raise ParseError(f"line {lineno}: arguments must be integers") from None
        want = ARITY[name]
        if want is None:
            if len(args) < 3:
                raise ParseError(f"line {lineno}: cyflip needs at least 3 vertices")
        elif len(args) != want:
            raise ParseError(f"line {lineno}: {name} takes {want} arguments")
        out.append(Command(name, args, lineno))
    return out


def format_ops(ops: List[ColoredFlipOp]) -> str:
    return "".join(op.script() + "\n" for op in ops)


def _answer(cmd: Command, value) -> str:
    if isinstance(value, tuple):
        value = " ".join(map(str, value))
    elif value is None:
        value = "none"
    return f"{cmd.text()} = {value}"


def _checked_op(r: Realizer, u: int, v: int, w: int, z: int) -> ColoredFlipOp:
    op = make_op(r, u, v, w)
    if op.z != z:
        raise FlipError(f"{z} is not the far apex of {u}-{v} opposite {w}")
    return op


def _static_lca(r: Realizer, i: int, u: int, v: int) -> Optional[int]:
    on = set(path_of(r, u, i))
    for x in path_of(r, v, i):
        if x in on:
            return x
    return None


def run_static(r: Realizer, cmds: List[Command], emit: Callable[[str], None] = print) -> Realizer:
    """Replay with static realizers; returns the final state."""
    coords = None
    for cmd in cmds:
        a = cmd.args
        try:
            if cmd.name == "cflip":
                r = colored_flip(r, _checked_op(r, *a))
                coords = None
            elif cmd.name == "fflip":
                r = replay(r, face_flip_as_colored(r, a))
                coords = None
            elif cmd.name == "cyflip":
                r = cycle_flip(r, a)
                coords = None
            elif cmd.name == "coords":
                if not 0 <= a[0] < r.n:
                    raise ValueError(f"vertex {a[0]} out of range")
                if coords is None:
                    coords = barycentric(r)
                emit(_answer(cmd, coords[a[0]]))
            elif cmd.name == "label":
                emit(_answer(cmd, r.color(a[0], a[1])))
            elif cmd.name == "lca":
                emit(_answer(cmd, _static_lca(r, a[0] % 3, a[1], a[2])))
            elif cmd.name == "depth":
                emit(_answer(cmd, len(path_of(r, a[1], a[0] % 3)) - 1))
        except (ValueError, IndexError) as e:
            raise FlipError(f"line {cmd.line}: {e}") from None
    return r


def run_dynamic(d: DynRealizer, cmds: List[Command], emit: Callable[[str], None] = print) -> DynRealizer:
    """Replay on a dynamic realizer; face and cycle flips are expanded into colored flips."""
    for cmd in cmds:
        a = cmd.args
        try:
            if cmd.name == "cflip":
                d.flip(*a)
            elif cmd.name in ("fflip", "cyflip"):
                snap = d.snapshot()
                if cmd.name == "fflip":
                    ops = face_flip_as_colored(snap, a)
                else:
                    ops = cycle_flip_as_colored(snap, a, check=False)
                for op in ops:
                    d.flip(op.u, op.v, op.w, op.z)
            elif cmd.name == "coords":
                emit(_answer(cmd, d.coordinates(a[0])))
            elif cmd.name == "label":
                emit(_answer(cmd, d.label(a[0], a[1])))
            elif cmd.name == "lca":
                emit(_answer(cmd, d.least_common(a[0], a[1], a[2])))
            elif cmd.name == "depth":
                emit(_answer(cmd, d.depth(a[0], a[1])))
        except (ValueError, IndexError) as e:
            raise FlipError(f"line {cmd.line}: {e}") from None
    return d
