"""Model-agnostic crystal contract, graph construction and verification.

A model bundles the crystal data callables for one element type at a fixed
rank.  Elements are identified by a canonical key (their JSON serialization
with sorted fields), which is stable across models, runs and processes.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from . import gtpattern as gtp
from . import ssyt
from .core import Weight, coroot_pairing


class ClosureError(ValueError):
    """An operator image escapes the supplied element set."""


@dataclass(frozen=True)
class CrystalModel:
    """Crystal data callables over one element type at rank n."""

    n: int
    name: str
    weight: Callable[[Any], Weight]
    phi: Callable[[Any, int], int]
    epsilon: Callable[[Any, int], int]
    lower: Callable[[Any, int], Optional[Any]]
    raise_: Callable[[Any, int], Optional[Any]]
    serialize: Callable[[Any], dict]

    @property
    def labels(self) -> range:
        return range(1, self.n)

    def canonical_key(self, element: Any) -> str:
        return json.dumps(self.serialize(element), sort_keys=True, separators=(",", ":"))


def pattern_model(n: int) -> CrystalModel:
    """The crystal model on Gelfand-Tsetlin patterns with n rows."""
    return CrystalModel(
        n=n,
        name="gtp",
        weight=gtp.weight_gtp,
        phi=gtp.phi_gtp,
        epsilon=gtp.epsilon_gtp,
        lower=gtp.lower_gtp,
        raise_=gtp.raise_gtp,
        serialize=gtp.GTPattern.to_dict,
    )


def tableau_model(n: int) -> CrystalModel:
    """The crystal model on semistandard tableaux with letters in 1..n."""
    return CrystalModel(
        n=n,
        name="ssyt",
        weight=ssyt.weight_ssyt,
        phi=ssyt.phi_ssyt,
        epsilon=ssyt.epsilon_ssyt,
        lower=ssyt.lower_ssyt,
        raise_=ssyt.raise_ssyt,
        serialize=ssyt.Tableau.to_dict,
    )


@dataclass
class CrystalGraph:
    """Vertices (key plus serialized element) and labeled directed edges.

    An edge (u, i, v) is present exactly when lowering u along i gives v.
    Edges are sorted by (source key, label); vertices keep construction
    order.  ``canonical()`` re-sorts vertices by key so graphs built from
    permuted inputs compare byte-identically.
    """

    n: int
    vertices: tuple[tuple[str, dict], ...]
    edges: tuple[tuple[str, int, str], ...]

    def canonical(self) -> "CrystalGraph":
        return CrystalGraph(self.n, tuple(sorted(self.vertices)), self.edges)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "vertices": [{"key": key, "element": element} for key, element in self.vertices],
            "edges": [{"from": u, "i": i, "to": v} for u, i, v in self.edges],
        }


def build_graph(model: CrystalModel, elements: Sequence[Any]) -> CrystalGraph:
    """Materialize the lowering relation over a closed element set.

    The elements must be distinct under the canonical key and closed under
    the lowering operators; an escaping image raises ClosureError naming the
    escaping element.
    """
    keyed = [(model.canonical_key(e), e) for e in elements]
    keys = {key for key, _ in keyed}
    if len(keys) != len(keyed):
        raise ValueError("elements are not distinct under the canonical key")
    edges = []
    for key, element in keyed:
        for i in model.labels:
            image = model.lower(element, i)
            if image is None:
                continue
            image_key = model.canonical_key(image)
            if image_key not in keys:
                raise ClosureError(f"lowering {key} along {i} escapes the element set: {image_key}")
            edges.append((key, i, image_key))
    vertices = tuple((key, model.serialize(e)) for key, e in keyed)
    return CrystalGraph(model.n, vertices, tuple(sorted(edges)))


def build_graph_from_sources(model: CrystalModel, sources: Sequence[Any]) -> CrystalGraph:
    """Cross-check constructor: breadth-first closure of ``sources`` under
    both operators, vertices sorted by key.  Must produce the same graph as
    ``build_graph`` on the full element set (after ``canonical()``)."""
    seen: dict[str, Any] = {}
    queue = deque()
    for element in sources:
        key = model.canonical_key(element)
        if key not in seen:
            seen[key] = element
            queue.append(element)
    while queue:
        element = queue.popleft()
        for i in model.labels:
            for image in (model.lower(element, i), model.raise_(element, i)):
                if image is None:
                    continue
                key = model.canonical_key(image)
                if key not in seen:
                    seen[key] = image
                    queue.append(image)
    ordered = [seen[key] for key in sorted(seen)]
    return build_graph(model, ordered)


@dataclass
class Violation:
    """One failed check: which rule, the elements involved, what was expected."""

    rule: str
    keys: tuple[str, ...]
    label: Optional[int]
    expected: str
    actual: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "rule": self.rule,
            "keys": list(self.keys),
            "label": self.label,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class Report:
    """Verification outcome; passes exactly when no violations were recorded."""

    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    limit: int = 100
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, *args: Any) -> None:
        if len(self.violations) < self.limit:
            self.violations.append(Violation(*args))
        else:
            self.truncated = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "pass": self.passed,
            "violations": [v.to_dict() for v in self.violations],
            "notes": self.notes,
            "truncated": self.truncated,
        }


AxiomReport = Report
IsoReport = Report


def verify_axioms(model: CrystalModel, elements: Sequence[Any], limit: int = 100) -> Report:
    """Check the crystal axioms over a closed element set.

    For every element b and label i: lowering and raising are mutually
    inverse partial bijections; across a lowering edge the weight drops by
    the simple root, the raising length grows by 1 and the lowering length
    shrinks by 1; and phi - epsilon equals the coroot pairing of the weight.
    The string lengths are always plain integers here, so the unbounded case
    of the axioms is vacuous (recorded as a note).  An operator image that
    escapes the element set is reported as a ``closure`` violation rather
    than raised, so mutated models can be diagnosed in full.
    """
    report = Report(notes=["string lengths are total integers; the unbounded case cannot occur"], limit=limit)
    keyed = [(model.canonical_key(e), e) for e in elements]
    by_key = dict(keyed)
    if len(by_key) != len(keyed):
        raise ValueError("elements are not distinct under the canonical key")
    for key, b in keyed:
        wt = model.weight(b)
        for i in model.labels:
            phi = model.phi(b, i)
            eps = model.epsilon(b, i)
            pairing = coroot_pairing(wt, i)
            if phi - eps != pairing:
                report.add("pairing", (key,), i, f"phi - epsilon = {pairing}", f"{phi} - {eps}")
            down = model.lower(b, i)
            if (down is None) != (phi == 0):
                report.add("lower-domain", (key,), i, f"image iff phi > 0 (phi = {phi})", f"{down is not None}")
            if down is not None:
                down_key = model.canonical_key(down)
                if down_key not in by_key:
                    report.add("closure", (key, down_key), i, "lowering image inside the element set", "escaped")
                else:
                    back = model.raise_(down, i)
                    back_key = None if back is None else model.canonical_key(back)
                    if back_key != key:
                        report.add("inverse", (key, down_key), i, "raising inverts lowering", f"{back_key}")
                    expected_wt = list(wt)
                    expected_wt[i - 1] -= 1
                    expected_wt[i] += 1
                    if list(model.weight(down)) != expected_wt:
                        report.add("weight-step", (key, down_key), i, f"{tuple(expected_wt)}", f"{model.weight(down)}")
                    if model.epsilon(down, i) != eps + 1:
                        report.add("epsilon-step", (key, down_key), i, f"{eps + 1}", f"{model.epsilon(down, i)}")
                    if model.phi(down, i) != phi - 1:
                        report.add("phi-step", (key, down_key), i, f"{phi - 1}", f"{model.phi(down, i)}")
            up = model.raise_(b, i)
            if (up is None) != (eps == 0):
                report.add("raise-domain", (key,), i, f"image iff epsilon > 0 (epsilon = {eps})", f"{up is not None}")
            if up is not None:
                up_key = model.canonical_key(up)
                if up_key not in by_key:
                    report.add("closure", (key, up_key), i, "raising image inside the element set", "escaped")
                else:
                    back = model.lower(up, i)
                    back_key = None if back is None else model.canonical_key(back)
                    if back_key != key:
                        report.add("inverse", (key, up_key), i, "lowering inverts raising", f"{back_key}")
    return report


def verify_isomorphism(
    model_a: CrystalModel,
    elements_a: Sequence[Any],
    model_b: CrystalModel,
    mapping: Callable[[Any], Any],
    elements_b: Optional[Sequence[Any]] = None,
    limit: int = 100,
) -> Report:
    """Check that ``mapping`` is an isomorphism of crystals.

    Verifies injectivity (and, when ``elements_b`` is given, surjectivity
    onto it), preservation of weight and both string lengths, and that the
    mapping commutes with lowering and raising, with absent images matching
    absent images.
    """
    report = Report(limit=limit)
    seen_images: set[str] = set()
    for a in elements_a:
        a_key = model_a.canonical_key(a)
        b = mapping(a)
        b_key = model_b.canonical_key(b)
        if b_key in seen_images:
            report.add("injective", (a_key, b_key), None, "distinct images", "duplicate image")
        seen_images.add(b_key)
        if model_a.weight(a) != model_b.weight(b):
            report.add("weight", (a_key, b_key), None, f"{model_a.weight(a)}", f"{model_b.weight(b)}")
        for i in model_a.labels:
            if model_a.phi(a, i) != model_b.phi(b, i):
                report.add("phi", (a_key, b_key), i, f"{model_a.phi(a, i)}", f"{model_b.phi(b, i)}")
            if model_a.epsilon(a, i) != model_b.epsilon(b, i):
                report.add("epsilon", (a_key, b_key), i, f"{model_a.epsilon(a, i)}", f"{model_b.epsilon(b, i)}")
            for rule, op_a, op_b in (
                ("lower-intertwine", model_a.lower, model_b.lower),
                ("raise-intertwine", model_a.raise_, model_b.raise_),
            ):
                image_a = op_a(a, i)
                image_b = op_b(b, i)
                mapped = None if image_a is None else model_b.canonical_key(mapping(image_a))
                direct = None if image_b is None else model_b.canonical_key(image_b)
                if mapped != direct:
                    report.add(rule, (a_key, b_key), i, f"{mapped}", f"{direct}")
    if elements_b is not None:
        target = {model_b.canonical_key(b) for b in elements_b}
        for key in sorted(target - seen_images):
            report.add("surjective", (key,), None, "covered by the mapping", "not hit")
        for key in sorted(seen_images - target):
            report.add("into-target", (key,), None, "image inside the target set", "outside")
    return report


def highest_weight_elements(model: CrystalModel, elements: Sequence[Any]) -> list[Any]:
    """Elements with every raising length zero, sorted by canonical key."""
    found = [e for e in elements if all(model.epsilon(e, i) == 0 for i in model.labels)]
    return sorted(found, key=model.canonical_key)


def connectivity(graph: CrystalGraph) -> int:
    """Number of weakly connected components."""
    keys = [key for key, _ in graph.vertices]
    neighbors: dict[str, set[str]] = {key: set() for key in keys}
    for u, _i, v in graph.edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    seen: set[str] = set()
    components = 0
    for start in keys:
        if start in seen:
            continue
        components += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            node = queue.popleft()
            for other in neighbors[node]:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
    return components
