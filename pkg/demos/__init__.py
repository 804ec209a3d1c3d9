# /project/demos/__init__.py
"""Worked examples on infinite complexes, explored inside finite windows."""
from dataclasses import dataclass, field
from typing import List, Tuple


@dataclass
class DemoReport:
    title: str
    lines: List[str] = field(default_factory=list)
    checks: List[Tuple[str, bool]] = field(default_factory=list)

    def note(self, line: str):
        self.lines.append(line)

    def check(self, label: str, ok: bool) -> bool:
        self.checks.append((label, bool(ok)))
        return ok

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failed(self) -> List[str]:
        return [label for label, ok in self.checks if not ok]

    def render(self, quiet: bool = False) -> str:
        out = [self.title]
        if not quiet:
            out.extend(f"  {line}" for line in self.lines)
        out.extend(f"  [{'ok' if ok else 'FAIL'}] {label}" for label, ok in self.checks)
        return "\n".join(out)
