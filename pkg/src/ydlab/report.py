"""Check reports: ordered pass/fail entries with optional detail text."""


class Check:
    __slots__ = ("name", "ok", "detail")

    def __init__(self, name, ok, detail=""):
        self.name = name
        self.ok = bool(ok)
        self.detail = detail

    def __repr__(self):
        return "Check(%r, %s%s)" % (self.name, "pass" if self.ok else "FAIL",
                                    ", %r" % self.detail if self.detail else "")


class Report:
    """An ordered list of named checks.  Failures are data, not exceptions."""

    def __init__(self, title=""):
        self.title = title
        self.entries = []
        self.data = {}

    def add(self, name, ok, detail=""):
        self.entries.append(Check(name, ok, detail))
        return ok

    def extend(self, other, prefix=""):
        for c in other.entries:
            self.entries.append(Check(prefix + c.name, c.ok, c.detail))
        return other.ok

    @property
    def ok(self):
        return all(c.ok for c in self.entries)

    def failures(self):
        return [c for c in self.entries if not c.ok]

    def first_failure(self):
        for c in self.entries:
            if not c.ok:
                return c
        return None

    def names(self):
        return [c.name for c in self.entries]

    def get(self, name):
        for c in self.entries:
            if c.name == name:
                return c
        raise KeyError(name)

    def text(self):
        lines = []
        if self.title:
            lines.append("== %s" % self.title)
        for c in self.entries:
            line = "%s  %s" % ("pass" if c.ok else "FAIL", c.name)
            if c.detail and not c.ok:
                line += "  [%s]" % c.detail
            lines.append(line)
        return "\n".join(lines)

    def __repr__(self):
        return "Report(%r, %d checks, %d failed)" % (self.title, len(self.entries), len(self.failures()))


def first_mismatch(f, g, n, show=str):
    """Compare two functions on basis indices 0..n-1; return a detail string or ''."""
    for i in range(n):
        a, b = f(i), g(i)
        if a != b:
            return "basis %s: %s != %s" % (show(i), a, b)
    return ""
