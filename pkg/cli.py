"""
FastLie 命令行入口

子命令: witt, basis, wgraded, galois-check, selmer
退出码: 0 成功, 1 必然成立的性质被违反, 2 参数错误
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import config
import reports
from lie.exceptions import FastLieError
from selmer.assumptions import AssumptionSet, Mode, deep_update

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

# 取值可能以 '-' 开头的参数，需要拼成 --flag=value 才能交给 argparse
_LIST_FLAGS = ("--exceptional", "--exceptional-bar")


def parse_int_list(text: str) -> Tuple[int, ...]:
    """'-1,-2' -> (-1, -2)"""
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"需要逗号分隔的整数列表: {text!r}")
    if any(k >= 0 for k in values):
        raise argparse.ArgumentTypeError(f"例外集只能包含负整数: {text!r}")
    return values


def seed_value(text: str) -> int:
    try:
        seed = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"种子必须是整数: {text!r}")
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError(f"种子必须在 [0, 2^64) 之内: {seed}")
    return seed


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=reports.FORMATS, default="table", help="输出格式")
    common.add_argument("--seed", type=seed_value, default=config.DEFAULT_SEED, help="随机种子")
    common.add_argument("--out", type=Path, default=None, help="输出文件，默认 stdout")
    common.add_argument("--log-level", default=None, help="日志级别（输出到 stderr）")

    parser = argparse.ArgumentParser(prog=config.TOOL_NAME, description="自由李代数、W 商与 Selmer 维数账本")
    parser.add_argument("--version", action="version", version=f"{config.TOOL_NAME} {config.TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    witt = sub.add_parser("witt", parents=[common], help="Witt 维数表")
    witt.add_argument("--max-degree", type=int, default=10)

    basis = sub.add_parser("basis", parents=[common], help="列出某一次数的 Lyndon 基")
    basis.add_argument("--degree", type=int, default=4)

    wgraded = sub.add_parser("wgraded", parents=[common], help="W 的分次块")
    wgraded.add_argument("--max-level", type=int, default=6)

    galois = sub.add_parser("galois-check", parents=[common], help="随机自同构的首项同余检验")
    galois.add_argument("--trials", type=int, default=20)
    galois.add_argument("--max-degree", type=int, default=5)
    galois.add_argument("--diagonal-only", action="store_true", help="只采样 z = z' = 0 的自同构")
    galois.add_argument("--workers", type=int, default=1, help="并发线程数")

    selmer = sub.add_parser("selmer", parents=[common], help="Selmer 维数账本")
    selmer.add_argument("--r", type=int, default=1, help="dim H^1_f(Γ, V_p(E))")
    selmer.add_argument("--s", type=int, default=2, help="|S|")
    selmer.add_argument("--mode", choices=[m.value for m in Mode], default=None)
    selmer.add_argument("--exceptional", type=parse_int_list, default=None, help="例外集，例如 -1,-2")
    selmer.add_argument("--exceptional-bar", type=parse_int_list, default=None,
                        help="χ̄ 分支单独的例外集（默认与 --exceptional 相同）")
    selmer.add_argument("--h2-cap", default=None, help="例外层 H^2 上界：整数或 symbolic")
    selmer.add_argument("--max-level", type=int, default=10)
    selmer.add_argument("--config", type=Path, default=None, help="JSON 格式的假设配置")
    return parser


def _join_list_flags(argv: Sequence[str]) -> List[str]:
    result = []
    items = list(argv)
    i = 0
    while i < len(items):
        if items[i] in _LIST_FLAGS and i + 1 < len(items):
            result.append(f"{items[i]}={items[i + 1]}")
            i += 2
        else:
            result.append(items[i])
            i += 1
    return result


def assumptions_from_args(args: argparse.Namespace) -> AssumptionSet:
    """配置文件打底，命令行显式给出的参数覆盖"""
    cfg = {}
    if args.config is not None:
        try:
            cfg = json.loads(args.config.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise FastLieError(f"无法读取配置文件 {args.config}: {e}") from e
    overrides = {}
    if args.mode is not None:
        overrides["mode"] = args.mode
    if args.exceptional is not None:
        overrides.setdefault("exceptional", {})["chi"] = list(args.exceptional)
    if args.exceptional_bar is not None:
        overrides.setdefault("exceptional", {})["chi_bar"] = list(args.exceptional_bar)
    if args.h2_cap is not None:
        overrides["h2_cap"] = args.h2_cap
    if isinstance(cfg.get("exceptional"), list):
        cfg["exceptional"] = {"chi": cfg["exceptional"]}
    return AssumptionSet.from_config(deep_update(cfg, overrides))


def build_report(args: argparse.Namespace) -> reports.ReportDocument:
    if args.command == "witt":
        return reports.witt_report(args.max_degree, seed=args.seed)
    if args.command == "basis":
        return reports.basis_report(args.degree, seed=args.seed)
    if args.command == "wgraded":
        return reports.wgraded_report(args.max_level, seed=args.seed)
    if args.command == "galois-check":
        return reports.galois_check_report(
            args.seed, args.trials, args.max_degree,
            diagonal_only=args.diagonal_only, workers=args.workers,
        )
    if args.command == "selmer":
        return reports.selmer_report(args.r, args.s, assumptions_from_args(args), args.max_level, seed=args.seed)
    raise FastLieError(f"未知的子命令: {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_list_flags(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    config.configure_logging(args.log_level)

    try:
        doc = build_report(args)
    except FastLieError as e:
        print(f"{config.TOOL_NAME} {args.command}: 错误: {e}", file=sys.stderr)
        return EXIT_USAGE

    text = reports.render(doc, args.format)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
        logger.info("报告已写入 %s", args.out)
    else:
        sys.stdout.write(text)

    if not doc.ok:
        print(f"{config.TOOL_NAME} {args.command}: 必然成立的性质被违反", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
