from __future__ import annotations

from typing import TYPE_CHECKING, Dict, Tuple

import attrs
from rich import get_console
from rich.tree import Tree

if TYPE_CHECKING:
    from codetiming import Timer  # type: ignore
    from rich.console import Console, RenderResult, ConsoleOptions  # type: ignore
    from codetiming._timers import Timers  # type: ignore


@attrs.define
class TimerReport:
    """Accumulated ``codetiming`` timers as a tree keyed on ``>``-separated names."""

    timer: Timer
    console: Console = attrs.field(factory=get_console)

    @property
    def timers(self) -> Timers:
        return self.timer.timers

    def entry(self, name: str) -> str:
        leaf = name.split(">")[-1]
        if name not in self.timers:
            return leaf
        count = self.timers.count(name)
        return f"{leaf} - {self.timers.total(name):.4f}s ({count} call{'s' * (count != 1)})"

    def make_tree(self) -> Tree:
        root = Tree("Times")
        branches: Dict[Tuple[str, ...], Tree] = {(): root}
        # parents sort before children, so every prefix exists when its child is added
        for name in sorted(self.timers.keys()):
            path = tuple(name.split(">"))
            for depth in range(1, len(path) + 1):
                prefix = path[:depth]
                if prefix not in branches:
                    label = self.entry(">".join(prefix))
                    branches[prefix] = branches[prefix[:-1]].add(label)
        return root

    def __rich_console__(self, console: Console, options: ConsoleOptions) -> RenderResult:
        yield self.make_tree()
