"""DOT and JSON renderings of an explored exchange graph."""

from typing import Any

from pydantic import BaseModel, ConfigDict

from .explore import MutationClassGraph


class SeedRecord(BaseModel):
  model_config = ConfigDict(frozen=True)

  index: int
  word: list[int]
  cluster: list[list[dict[str, Any]]]
  matrix: list[list[int]]


class EdgeRecord(BaseModel):
  model_config = ConfigDict(frozen=True)

  source: int
  k: int
  target: int


class GraphExport(BaseModel):
  """The full exchange graph, Laurent terms included, for exact reloading elsewhere."""

  model_config = ConfigDict(frozen=True)

  n: int
  d: list[int]
  complete: bool
  truncation: str | None
  seeds: list[SeedRecord]
  edges: list[EdgeRecord]

  @classmethod
  def from_graph(cls, g: MutationClassGraph) -> "GraphExport":
    return cls(
      n=g.n,
      d=list(g.seeds[g.initial].d),
      complete=g.complete,
      truncation=str(g.truncation) if g.truncation else None,
      seeds=[
        SeedRecord(
          index=i,
          word=list(g.words[i]),
          cluster=[y.to_json() for y in seed.cluster],
          matrix=seed.matrix.rows(),
        )
        for i, seed in enumerate(g.seeds)
      ],
      edges=[EdgeRecord(source=s, k=k, target=t) for s, k, t in sorted(g.edges)],
    )


def to_dot(g: MutationClassGraph, verbose_labels: bool = False) -> str:
  """
  An undirected DOT graph with one node per labeled seed and edges labelled by direction.
  Node labels are seed indices unless `verbose_labels` asks for the clusters themselves.
  """
  lines = ["graph exchange {", "  node [shape=box];"]
  for i, seed in enumerate(g.seeds):
    label = f"{i}: {seed.cluster_text()}" if verbose_labels else str(i)
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    lines.append(f'  s{i} [label="{escaped}"];')
  for src, k, dst in sorted(g.edges):
    if src < dst:
      lines.append(f'  s{src} -- s{dst} [label="{k}"];')
  lines.append("}")
  return "\n".join(lines) + "\n"
