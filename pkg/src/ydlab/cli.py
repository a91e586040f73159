"""Command line runner: ydlab check --suite NAME (--catalog NAME | --file PATH).

Exit status: 0 when every check passes, 1 when a check fails, 2 for usage
and model-file errors.

Model files are line based; '#' starts a comment:

    group <name>
    elements e a b          # the first element is the identity
    table                   # row i, column j: label of element_i * element_j
    e a b
    a b e
    b e a
    end
    set 3                   # optional: the set {0, ..., m-1}
    action                  # optional: images of 0..m-1 under each element
    e: 0 1 2
    a: 1 2 0
    b: 2 0 1
    end
    antipode function       # optional override of S on K(G) or k[G] ("group"):
    e b a                   # the label of S(basis element i), in element order
    end
"""

import argparse
import sys

from ydlab.groups import CATALOG_NAMES, ActionError, FiniteGroup, GroupAction, GroupError, catalog
from ydlab.multilinear import LinearMap
from ydlab.scalar import ONE
from ydlab.suites import ALL, HEISENBERG_DOUBLE_LIMIT, SUITES, Model, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_ORDER = 6


class ModelFileError(ValueError):
    def __init__(self, path, line, message):
        super().__init__("%s:%s: %s" % (path, line, message) if line else "%s: %s" % (path, message))
        self.path = path
        self.line = line


def _tokens(text):
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if line:
            out.append((n, line))
    return out


def _block(lines, i, path, what):
    """Lines after index i up to 'end'; returns (block, index after end)."""
    body = []
    j = i + 1
    while j < len(lines):
        n, toks = lines[j]
        if toks == ["end"]:
            return body, j + 1
        body.append((n, toks))
        j += 1
    raise ModelFileError(path, lines[i][0], "%s block has no 'end'" % what)


def parse_model_text(text, path="<model>"):
    """A Model from model-file text; raises ModelFileError."""
    lines = _tokens(text)
    name = labels = table = None
    m = action_rows = None
    antipode = {}
    where = {}
    i = 0
    while i < len(lines):
        n, toks = lines[i]
        key = toks[0]
        if key == "group":
            if len(toks) != 2:
                raise ModelFileError(path, n, "expected 'group <name>'")
            name = toks[1]
            i += 1
        elif key == "elements":
            labels = toks[1:]
            if not labels:
                raise ModelFileError(path, n, "no elements listed")
            if len(set(labels)) != len(labels):
                raise ModelFileError(path, n, "repeated element label")
            i += 1
        elif key == "table":
            if labels is None:
                raise ModelFileError(path, n, "'table' before 'elements'")
            body, i = _block(lines, i, path, "table")
            where["table"] = n
            index = {l: k for k, l in enumerate(labels)}
            if len(body) != len(labels):
                raise ModelFileError(path, n, "table needs %d rows, found %d" % (len(labels), len(body)))
            table = []
            for rn, row in body:
                if len(row) != len(labels):
                    raise ModelFileError(path, rn, "row needs %d entries, found %d" % (len(labels), len(row)))
                bad = [t for t in row if t not in index]
                if bad:
                    raise ModelFileError(path, rn, "unknown element %r" % bad[0])
                table.append([index[t] for t in row])
        elif key == "set":
            if len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
                raise ModelFileError(path, n, "expected 'set <positive size>'")
            m = int(toks[1])
            i += 1
        elif key == "action":
            if m is None:
                raise ModelFileError(path, n, "'action' before 'set'")
            if labels is None:
                raise ModelFileError(path, n, "'action' before 'elements'")
            body, i = _block(lines, i, path, "action")
            where["action"] = n
            rows = {}
            for rn, row in body:
                head = row[0]
                if not head.endswith(":") or head[:-1] not in labels:
                    raise ModelFileError(path, rn, "expected '<element>: images'")
                if head[:-1] in rows:
                    raise ModelFileError(path, rn, "element %s listed twice" % head[:-1])
                try:
                    imgs = [int(t) for t in row[1:]]
                except ValueError:
                    raise ModelFileError(path, rn, "images must be integers") from None
                if len(imgs) != m or any(not 0 <= s < m for s in imgs):
                    raise ModelFileError(path, rn, "need %d images in 0..%d" % (m, m - 1))
                rows[head[:-1]] = imgs
            missing = [l for l in labels if l not in rows]
            if missing:
                raise ModelFileError(path, n, "no images for %s" % missing[0])
            action_rows = [rows[l] for l in labels]
        elif key == "antipode":
            if len(toks) != 2 or toks[1] not in ("function", "group"):
                raise ModelFileError(path, n, "expected 'antipode function' or 'antipode group'")
            if labels is None:
                raise ModelFileError(path, n, "'antipode' before 'elements'")
            body, i = _block(lines, i, path, "antipode")
            if len(body) != 1 or len(body[0][1]) != len(labels):
                raise ModelFileError(path, n, "antipode block needs one line of %d labels" % len(labels))
            rn, row = body[0]
            bad = [t for t in row if t not in labels]
            if bad:
                raise ModelFileError(path, rn, "unknown element %r" % bad[0])
            antipode[toks[1]] = LinearMap(len(labels), len(labels), [{labels.index(t): ONE} for t in row])
        else:
            raise ModelFileError(path, n, "unknown keyword %r" % key)
    if name is None:
        raise ModelFileError(path, None, "missing 'group <name>'")
    if table is None:
        raise ModelFileError(path, None, "missing 'table' block")
    try:
        G = FiniteGroup(labels, table, name)
    except GroupError as exc:
        raise ModelFileError(path, where["table"], "invalid group table: %s" % exc) from None
    act = None
    if action_rows is not None:
        try:
            act = GroupAction(G, m, action_rows, "%s on %d points" % (name, m))
        except ActionError as exc:
            raise ModelFileError(path, where["action"], "not an action: %s" % exc) from None
    elif m is not None:
        raise ModelFileError(path, None, "'set' given without an 'action' block")
    return Model(name, G, act, antipode)


def parse_model_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ModelFileError(path, None, exc.strerror or str(exc)) from None
    return parse_model_text(text, path)


def catalog_model(name):
    G, act = catalog(name)
    return Model(name, G, act)


# output --------------------------------------------------------------------------

def _count(results):
    passed = failed = skipped = 0
    for _, reports in results:
        for r in reports:
            if "skipped" in r.data:
                skipped += 1
            for c in r.entries:
                if c.ok:
                    passed += 1
                else:
                    failed += 1
    return passed, failed, skipped


def format_text(instance, results):
    lines = ["ydlab check: %s" % instance]
    for suite, reports in results:
        lines.append("")
        lines.append("## suite %s" % suite)
        for r in reports:
            if "skipped" in r.data:
                lines.append("== %s" % r.title)
                lines.append("skip  %s" % r.data["skipped"])
            else:
                lines.append(r.text())
    passed, failed, skipped = _count(results)
    lines.append("")
    lines.append("summary: %d passed, %d failed, %d skipped" % (passed, failed, skipped))
    lines.append("result: %s" % ("FAIL" if failed else "pass"))
    return "\n".join(lines) + "\n"


def format_structured(instance, results):
    """One 'key: value' block per check, blank-line separated, then a summary block."""
    blocks = []
    for suite, reports in results:
        for r in reports:
            if "skipped" in r.data:
                blocks.append(["suite: %s" % suite, "section: %s" % r.title, "check: -",
                               "status: skip", "detail: %s" % r.data["skipped"]])
                continue
            for c in r.entries:
                blocks.append(["suite: %s" % suite, "section: %s" % r.title, "check: %s" % c.name,
                               "status: %s" % ("pass" if c.ok else "fail"), "detail: %s" % c.detail])
    passed, failed, skipped = _count(results)
    blocks.append(["instance: %s" % instance, "passed: %d" % passed, "failed: %d" % failed,
                   "skipped: %d" % skipped, "result: %s" % ("fail" if failed else "pass")])
    return "\n\n".join("\n".join(b) for b in blocks) + "\n"


# entry point -----------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="ydlab", description="Exact checks of Hopf and Yetter-Drinfeld structures.")
    sub = ap.add_subparsers(dest="command", required=True)
    ck = sub.add_parser("check", help="run a verification suite")
    ck.add_argument("--suite", required=True, choices=SUITES + (ALL,))
    src = ck.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", choices=CATALOG_NAMES, help="built-in model")
    src.add_argument("--file", help="model file")
    ck.add_argument("--format", default="text", choices=("text", "structured"))
    ck.add_argument("--max-order", type=int, default=None,
                    help="largest group order to run (default %d; the heisenberg-double suite "
                         "defaults to %d)" % (DEFAULT_MAX_ORDER, HEISENBERG_DOUBLE_LIMIT))
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        model = catalog_model(args.catalog) if args.catalog else parse_model_file(args.file)
    except ModelFileError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    max_order = args.max_order if args.max_order is not None else DEFAULT_MAX_ORDER
    n = model.group.n
    if n > max_order:
        print("error: group order %d exceeds --max-order %d" % (n, max_order), file=sys.stderr)
        return EXIT_USAGE
    hd_limit = args.max_order if args.max_order is not None else HEISENBERG_DOUBLE_LIMIT
    if args.suite == "heisenberg-double" and n > hd_limit:
        print("error: heisenberg-double on a group of order %d needs --max-order %d" % (n, n), file=sys.stderr)
        return EXIT_USAGE
    instance = model.name if args.catalog else "%s (%s)" % (model.name, args.file)
    results = run(args.suite, model, hd_limit)
    fmt = format_text if args.format == "text" else format_structured
    sys.stdout.write(fmt(instance, results))
    return EXIT_FAIL if _count(results)[1] else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
