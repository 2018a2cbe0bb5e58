"""
报告文档
命令行和 HTTP 接口共用同一份 ReportDocument，可输出 json / csv / table
"""

import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from random import Random
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

import config
from lie.exceptions import DomainError
from lie.freelie import bigraded_dimension, lyndon_basis, witt_dimension
from lie.galois import (
    LieAutomorphism,
    character_of_word,
    check_leading_term,
    minus_eigenspace_dimension,
)
from lie.wquotient import graded_generators, w_graded_basis, w_graded_dimension, w_graded_note
from selmer.assumptions import AssumptionSet
from selmer.ledger import (
    LedgerRow,
    build_ledger,
    compare_dimensions,
    first_strict_level,
    local_h1f_total,
    replay_trace,
    stable_strict_level,
    theorem_threshold,
)
from selmer.rules import citation

logger = logging.getLogger(__name__)

FORMATS = ("table", "json", "csv")

# 每个命令固定的 csv 列顺序
COLUMNS = {
    "witt": ["n", "dim", "bigraded_sum", "enumerated"],
    "basis": ["word", "bracketing", "bidegree", "character"],
    "wgraded": ["n", "dim", "words", "characters", "minus_dim", "generators"],
    "galois-check": ["trial", "c", "cbar", "checked", "guaranteed", "literal", "witnesses"],
    "selmer": ["n", "local_dim", "paper_bound", "paper_compared", "derived_bound", "h2_status",
               "strict_paper", "strict_derived", "trace"],
}


class ReportMetadata(BaseModel):
    tool: str = config.TOOL_NAME
    tool_version: str = config.TOOL_VERSION
    seed: Optional[int] = None
    assumptions: Optional[Dict[str, Any]] = None
    parameters: Dict[str, Any] = Field(default_factory=dict)


class ReportDocument(BaseModel):
    schema_version: int = config.SCHEMA_VERSION
    command: str
    metadata: ReportMetadata
    columns: List[str]
    rows: List[Dict[str, Any]]
    verdict: Dict[str, Any] = Field(default_factory=dict)
    references: Dict[str, str] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        """没有违反任何必然成立的性质"""
        return self.verdict.get("consistent", True)


def _document(command: str, rows: List[Dict[str, Any]], seed: Optional[int] = None, **extra) -> ReportDocument:
    metadata = ReportMetadata(
        seed=seed,
        assumptions=extra.pop("assumptions", None),
        parameters=extra.pop("parameters", {}),
    )
    return ReportDocument(command=command, metadata=metadata, columns=COLUMNS[command], rows=rows, **extra)


def _json_value(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return str(value)


# ---------------------------------------------------------------- 渲染

def render_json(doc: ReportDocument) -> str:
    return json.dumps(doc.model_dump(mode="json"), ensure_ascii=False, separators=(",", ":"))


def _cell(value, empty: str = "") -> str:
    if value is None:
        return empty
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(_cell(v, empty) for v in value)
    return str(value)


def _compact(value) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(",", ":"))


def render_csv(doc: ReportDocument) -> str:
    """元数据与结论写成 # 注释行，随后是固定列顺序的数据"""
    buffer = io.StringIO()
    buffer.write(f"# schema_version: {doc.schema_version}\n")
    buffer.write(f"# command: {doc.command}\n")
    buffer.write(f"# metadata: {_compact(doc.metadata.model_dump(mode='json'))}\n")
    buffer.write(f"# verdict: {_compact(doc.verdict)}\n")
    for rule, text in doc.references.items():
        buffer.write(f"# reference {rule}: {text}\n")
    for note in doc.notes:
        buffer.write(f"# note: {note}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(doc.columns)
    for row in doc.rows:
        writer.writerow([_cell(row.get(col)) for col in doc.columns])
    return buffer.getvalue()


def render_table(doc: ReportDocument) -> str:
    cells = [[_cell(row.get(col), "-") for col in doc.columns] for row in doc.rows]
    widths = [max([len(col)] + [len(r[k]) for r in cells]) for k, col in enumerate(doc.columns)]
    lines = [
        "  ".join(col.ljust(w) for col, w in zip(doc.columns, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    lines.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)
    if doc.verdict:
        lines.append("")
        lines.extend(f"{key}: {_cell(value, '-')}" for key, value in doc.verdict.items())
    for note in doc.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render(doc: ReportDocument, fmt: str) -> str:
    if fmt == "json":
        return render_json(doc) + "\n"
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "table":
        return render_table(doc)
    raise DomainError(f"未知的输出格式: {fmt!r}")


# ---------------------------------------------------------------- 报告构建

def _require_range(name: str, value: int, low: int, high: Optional[int] = None):
    if value < low or (high is not None and value > high):
        bound = f"[{low}, {high}]" if high is not None else f">= {low}"
        raise DomainError(f"{name} 必须在 {bound} 之内，收到 {value}")


def witt_report(max_degree: int, seed: Optional[int] = None) -> ReportDocument:
    """n = 1..max_degree 的 Witt 维数，附双次数求和与（小次数时的）枚举校验"""
    _require_range("max_degree", max_degree, 1, config.MAX_WITT_DEGREE)
    rows = []
    consistent = True
    for n in range(1, max_degree + 1):
        dim = witt_dimension(n)
        bigraded_sum = sum(bigraded_dimension(i, n - i) for i in range(n + 1))
        enumerated = len(lyndon_basis(n)) if n <= config.ENUMERATION_LIMIT else None
        if bigraded_sum != dim or enumerated not in (None, dim):
            logger.error("n=%d: Witt 维数 %d 与校验值不符", n, dim)
            consistent = False
        rows.append({"n": n, "dim": dim, "bigraded_sum": bigraded_sum, "enumerated": enumerated})
    return _document("witt", rows, seed, parameters={"max_degree": max_degree},
                     verdict={"consistent": consistent})


def basis_report(degree: int, seed: Optional[int] = None) -> ReportDocument:
    """degree 次 Lyndon 基及其标准括号化"""
    _require_range("degree", degree, 1, config.ENUMERATION_LIMIT)
    rows = [
        {
            "word": w.letters,
            "bracketing": w.bracketing(),
            "bidegree": "{},{}".format(*w.bidegree),
            "character": str(character_of_word(w)),
        }
        for w in lyndon_basis(degree)
    ]
    return _document("basis", rows, seed, parameters={"degree": degree},
                     verdict={"count": len(rows), "witt_dimension": witt_dimension(degree),
                              "consistent": len(rows) == witt_dimension(degree)})


def wgraded_report(max_level: int, seed: Optional[int] = None) -> ReportDocument:
    """W 的分次块：维数、基词、特征标签、σ 的 -1 特征空间维数"""
    _require_range("max_level", max_level, 1, config.MAX_WITT_DEGREE)
    rows = []
    notes = []
    for n in range(1, max_level + 1):
        basis = w_graded_basis(n)
        generators = [
            f"{g.expression}={'+' if g.sign > 0 else '-'}{g.basis_word}" for g in graded_generators(n)
        ] if n >= 2 else []
        rows.append({
            "n": n,
            "dim": w_graded_dimension(n),
            "words": [w.letters for w in basis],
            "characters": ["{},{}".format(*character_of_word(w).as_tuple()) for w in basis],
            "minus_dim": minus_eigenspace_dimension(n) if n >= 2 else None,
            "generators": generators,
        })
        note = w_graded_note(n)
        if note:
            notes.append(note)
    return _document("wgraded", rows, seed, parameters={"max_level": max_level}, notes=notes)


@dataclass
class TrialResult:
    index: int
    automorphism: LieAutomorphism
    checked: int
    guaranteed: bool
    literal: bool
    witnesses: List[str]


def run_trial(seed: int, index: int, max_degree: int, diagonal_only: bool) -> TrialResult:
    """单次试验：独立播种，采样自同构并检验所有次数 <= max_degree 的基词"""
    rng = Random(f"{seed}:{index}")
    phi = LieAutomorphism.sample(rng, max_degree + 1, diagonal=diagonal_only)
    results = check_leading_term(phi, max_degree)
    witnesses = [
        f"{r.word}:{'+'.join(w.letters for w in r.literal_witnesses)}" for r in results if not r.literal
    ]
    return TrialResult(
        index=index,
        automorphism=phi,
        checked=len(results),
        guaranteed=all(r.guaranteed for r in results),
        literal=not witnesses,
        witnesses=witnesses,
    )


def galois_check_report(seed: int, trials: int, max_degree: int, diagonal_only: bool = False,
                        workers: int = 1, dump_limit: int = 3) -> ReportDocument:
    """
    随机自同构的首项同余检验

    Args:
        seed: 随机种子
        trials: 试验次数
        max_degree: 检验的最高次数，截断次数取 max_degree + 1
        diagonal_only: 只采样对角自同构
        workers: 并发线程数，结果始终按试验序号排列
        dump_limit: 反例说明的最大条数

    Returns:
        ReportDocument；verdict.consistent 为 False 表示必然成立的同余失败
    """
    _require_range("trials", trials, 1)
    _require_range("max_degree", max_degree, 1, config.ENUMERATION_LIMIT)
    _require_range("workers", workers, 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run_trial, seed, index, max_degree, diagonal_only) for index in range(trials)]
        results = sorted((f.result() for f in futures), key=lambda t: t.index)

    rows = []
    notes = []
    for t in results:
        rows.append({
            "trial": t.index,
            "c": str(t.automorphism.c),
            "cbar": str(t.automorphism.cbar),
            "checked": t.checked,
            "guaranteed": t.guaranteed,
            "literal": t.literal,
            "witnesses": t.witnesses,
        })
        if not t.literal and len(notes) < dump_limit:
            notes.append(f"trial {t.index}: 字面较强的同余不成立, phi={_compact(t.automorphism.describe())}")
    guaranteed = sum(t.guaranteed for t in results)
    literal = sum(t.literal for t in results)
    verdict = {
        "trials": trials,
        "guaranteed_pass": guaranteed,
        "guaranteed_rate": f"{100 * guaranteed // trials}%",
        "literal_pass": literal,
        "literal_rate": f"{100 * literal // trials}%",
        "consistent": guaranteed == trials,
    }
    parameters = {"trials": trials, "max_degree": max_degree, "diagonal_only": diagonal_only}
    return _document("galois-check", rows, seed, parameters=parameters, verdict=verdict, notes=notes)


def _ledger_row(row: LedgerRow, r: int, s: int, assumptions: AssumptionSet) -> Dict[str, Any]:
    verdict = compare_dimensions(row.n, r, s, assumptions)
    return {
        "n": row.n,
        "local_dim": row.local_dim,
        "paper_bound": _json_value(row.paper_value),
        "paper_compared": verdict.paper_bound,
        "derived_bound": _json_value(row.derived_value),
        "h2_status": None if row.h2_status is None else str(row.h2_status),
        "strict_paper": verdict.strict_paper,
        "strict_derived": verdict.strict_derived,
        "trace": [entry.rule for entry in row.trace],
    }


def _ledger_consistent(rows: List[LedgerRow]) -> bool:
    for row in rows:
        if replay_trace(row) != (row.local_dim, row.derived_value):
            logger.error("n=%d: trace 重放结果不一致", row.n)
            return False
        paper = row.paper_value
        if paper is not None and isinstance(row.derived_value, int) and row.derived_value > paper:
            logger.error("n=%d: derived %s 超过 paper %s", row.n, row.derived_value, paper)
            return False
    return True


def selmer_report(r: int, s: int, assumptions: AssumptionSet, max_level: int,
                  seed: Optional[int] = None) -> ReportDocument:
    """逐层账本与结论块"""
    ledger = build_ledger(r, s, assumptions, max_level)
    threshold = theorem_threshold(r, s)
    first_paper = first_strict_level(r, s, assumptions, bound="paper")
    stable = stable_strict_level(r, s, assumptions)
    final = compare_dimensions(max_level, r, s, assumptions)
    verdict = {
        "paper_threshold": threshold.paper,
        "derived_threshold": threshold.derived,
        "first_strict_paper": first_paper,
        "local_at_first_strict_paper": None if first_paper is None else local_h1f_total(first_paper),
        "first_strict_derived": first_strict_level(r, s, assumptions),
        "stable_strict_derived": _json_value(stable),
        "eventual": final.eventual,
        "crossing_expression": final.crossing_expression,
        "consistent": _ledger_consistent(ledger),
    }
    rules = dict.fromkeys(entry.rule for row in ledger for entry in row.trace)
    notes = []
    if assumptions.exceptional or assumptions.chi_bar_exceptional:
        notes.append("存在例外集，paper 上界不适用，只给出 derived 上界")
    else:
        notes.append("paper 行内上界: n=2 为 r+s-1，n>=3 为 r+s+n-2；strict_paper 一律按 r+s+n-2 判定，该值见 paper_compared 列")
    return _document(
        "selmer",
        [_ledger_row(row, r, s, assumptions) for row in ledger],
        seed,
        assumptions=assumptions.describe(),
        parameters={"r": r, "s": s, "max_level": max_level},
        verdict=verdict,
        references={rule: citation(rule) for rule in rules},
        notes=notes,
    )
