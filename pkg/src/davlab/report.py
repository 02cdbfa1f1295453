"""Tiny pass/fail report container used by the verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ReportEntry:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    entries: list[ReportEntry] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.entries.append(ReportEntry(name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[ReportEntry]:
        return [e for e in self.entries if not e.ok]

    def lines(self) -> list[str]:
        out = [f"{self.title}:"]
        for e in self.entries:
            mark = "pass" if e.ok else "FAIL"
            detail = f"  ({e.detail})" if e.detail and not e.ok else ""
            out.append(f"  [{mark}] {e.name}{detail}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())
