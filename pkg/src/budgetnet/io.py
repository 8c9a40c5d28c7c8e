"""JSON network documents and bundled fixtures.

Document layout::

    {
      "schema_version": "1",
      "name": "bridge",
      "node_count": 4, "source": 1, "sink": 4,
      "arcs": [{"id": 1, "from": 1, "to": 2, "oriented": true,
                "prob": 0.95, "cost": 2}, ...]
    }
"""

from __future__ import annotations

import hashlib
import json
import re
from importlib import resources
from pathlib import Path

from .network import Arc, ContractError, Network

SCHEMA_VERSION = "1"
FIXTURES = ("bridge", "bridge-A", "bridge-B", "bridge-C", "water")


class DocumentError(ValueError):
    """A network document failed validation.

    ``code`` names the failure class, ``field`` the offending JSON path and
    ``line`` the 1-based line in the source text when it can be located.
    """

    def __init__(self, code: str, message: str, field: str = "", line: int | None = None):
        self.code = code
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(field)
        prefix = f"[{code}] " + (f"{', '.join(where)}: " if where else "")
        super().__init__(prefix + message)


def _arc_line(text: str, arc_id) -> int | None:
    m = re.search(r'"id"\s*:\s*' + re.escape(json.dumps(arc_id)) + r"\b", text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _number(value, field: str, line: int | None, integer: bool = False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError("bad-type", f"expected a number, got {value!r}", field, line)
    if integer and int(value) != value:
        raise DocumentError("bad-type", f"expected an integer, got {value!r}", field, line)
    return int(value) if integer else float(value)


def parse_network(text: str) -> Network:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("syntax", exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise DocumentError("bad-type", "top level must be an object")
    version = str(doc.get("schema_version", SCHEMA_VERSION))
    if version != SCHEMA_VERSION:
        raise DocumentError("schema-version", f"unsupported schema_version {version!r}",
                            "schema_version")
    for key in ("node_count", "source", "sink", "arcs"):
        if key not in doc:
            raise DocumentError("missing-field", f"required field {key!r} absent", key)
    n = _number(doc["node_count"], "node_count", None, integer=True)
    source = _number(doc["source"], "source", None, integer=True)
    sink = _number(doc["sink"], "sink", None, integer=True)
    for value, key in ((source, "source"), (sink, "sink")):
        if not 1 <= value <= n:
            raise DocumentError("unknown-node", f"node {value} outside 1..{n}", key)
    raw = doc["arcs"]
    if not isinstance(raw, list) or not raw:
        raise DocumentError("bad-type", "arcs must be a non-empty list", "arcs")

    by_id: dict[int, dict] = {}
    for pos, entry in enumerate(raw):
        field = f"arcs[{pos}]"
        if not isinstance(entry, dict):
            raise DocumentError("bad-type", "arc entries must be objects", field)
        for key in ("id", "from", "to", "prob", "cost"):
            if key not in entry:
                line = _arc_line(text, entry.get("id")) if "id" in entry else None
                raise DocumentError("missing-field", f"required field {key!r} absent", field, line)
        line = _arc_line(text, entry["id"])
        arc_id = _number(entry["id"], f"{field}.id", line, integer=True)
        if arc_id in by_id:
            raise DocumentError("duplicate-id", f"arc id {arc_id} used twice", f"{field}.id", line)
        by_id[arc_id] = dict(entry, _field=field, _line=line)
    if sorted(by_id) != list(range(1, len(by_id) + 1)):
        raise DocumentError("sparse-ids", f"arc ids must be exactly 1..{len(by_id)}", "arcs")

    arcs = []
    for arc_id in range(1, len(by_id) + 1):
        e = by_id[arc_id]
        field, line = e["_field"], e["_line"]
        tail = _number(e["from"], f"{field}.from", line, integer=True)
        head = _number(e["to"], f"{field}.to", line, integer=True)
        for node, key in ((tail, "from"), (head, "to")):
            if not 1 <= node <= n:
                raise DocumentError("unknown-node", f"node {node} outside 1..{n}",
                                    f"{field}.{key}", line)
        prob = _number(e["prob"], f"{field}.prob", line)
        if not 0.0 < prob <= 1.0:
            raise DocumentError("bad-prob", f"probability {prob} outside (0, 1]",
                                f"{field}.prob", line)
        cost = _number(e["cost"], f"{field}.cost", line)
        if cost < 0:
            raise DocumentError("negative-cost", f"cost {cost} is negative", f"{field}.cost", line)
        oriented = e.get("oriented", True)
        if not isinstance(oriented, bool):
            raise DocumentError("bad-type", "oriented must be true or false",
                                f"{field}.oriented", line)
        try:
            arcs.append(Arc(arc_id, tail, head, prob, cost, oriented))
        except ContractError as exc:
            raise DocumentError("invalid-arc", str(exc), field, line) from None
    try:
        return Network(n, tuple(arcs), source, sink, name=str(doc.get("name", "")))
    except ContractError as exc:
        raise DocumentError("invalid-network", str(exc)) from None


def _num_out(x: float):
    return int(x) if float(x).is_integer() else x


def network_to_dict(network: Network) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "name": network.name,
        "node_count": network.node_count,
        "source": network.source,
        "sink": network.sink,
        "arcs": [
            {"id": a.index, "from": a.tail, "to": a.head, "oriented": a.oriented,
             "prob": a.prob, "cost": _num_out(a.cost)}
            for a in network.arcs
        ],
    }


def dump_network(network: Network) -> str:
    d = network_to_dict(network)
    arcs = ",\n".join("    " + json.dumps(a) for a in d.pop("arcs"))
    head = json.dumps(d, indent=2)[:-2]
    return head + ',\n  "arcs": [\n' + arcs + "\n  ]\n}\n"


def load_network(path: str | Path) -> Network:
    return parse_network(Path(path).read_text(encoding="utf-8"))


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURES}")
    return resources.files("budgetnet").joinpath("data", f"{name}.json").read_text("utf-8")


def load_fixture(name: str) -> Network:
    return parse_network(fixture_text(name))


def resolve_network(ref: str) -> tuple[Network, str]:
    """Load a network from a path, or from a bundled fixture name such as
    ``bridge`` or ``bridge.json``.  Returns the network and the SHA-256 of the
    document text."""
    path = Path(ref)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    else:
        stem = ref[:-5] if ref.endswith(".json") else ref
        if stem not in FIXTURES:
            raise FileNotFoundError(f"no such file or bundled fixture: {ref}")
        text = fixture_text(stem)
    return parse_network(text), hashlib.sha256(text.encode("utf-8")).hexdigest()
