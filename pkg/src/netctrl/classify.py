"""Per-edge labels: critical, redundant, or ordinary.

A link is critical when it lies in every maximum matching of the bipartite
view (removing it shrinks the matching), redundant when it lies in no
maximum matching (removable without touching the matching size), and
ordinary otherwise. Labels are a property of the graph alone: they do not
depend on which particular maximum matching the analysis starts from.
"""

from dataclasses import dataclass
from enum import Enum

from .graph import DirectedGraph
from .matching import AlternatingEngine


class LinkClass(Enum):
    CRITICAL = "critical"
    REDUNDANT = "redundant"
    ORDINARY = "ordinary"


@dataclass
class ClassificationResult:
    labels: dict[tuple[int, int], LinkClass]
    counts: dict[LinkClass, int]

    def edges_with(self, cls: LinkClass) -> list[tuple[int, int]]:
        return sorted(e for e, c in self.labels.items() if c is cls)


def classify_links(g: DirectedGraph) -> ClassificationResult:
    """Label every edge of g. Runs in O(N + L) after one maximum matching."""
    eng = AlternatingEngine(g)
    _, redundant, critical = eng.analyze()
    labels: dict[tuple[int, int], LinkClass] = {}
    counts = {LinkClass.CRITICAL: 0, LinkClass.REDUNDANT: 0, LinkClass.ORDINARY: 0}
    src = eng.src.tolist()
    dst = eng.dst.tolist()
    red = redundant.tolist()
    crit = critical.tolist()
    for i in range(len(src)):
        if red[i]:
            cls = LinkClass.REDUNDANT
        elif crit[i]:
            cls = LinkClass.CRITICAL
        else:
            cls = LinkClass.ORDINARY
        labels[(src[i], dst[i])] = cls
        counts[cls] += 1
    return ClassificationResult(labels, counts)


def redundant_links(g: DirectedGraph) -> list[tuple[int, int]]:
    """Edges in no maximum matching, ascending (source, target)."""
    return AlternatingEngine(g).redundant_edges()
