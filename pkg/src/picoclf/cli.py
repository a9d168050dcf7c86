"""Command-line front end.

Subcommands: stats, train, sweep-ngram, sweep-c, predict, eval-cv.
Options may also be supplied through ``--config FILE`` holding
``key = value`` lines (keys are the long flag names without dashes);
explicit flags win over the file. Exit codes: 0 success, 1 usage or
config error, 2 data error, 3 training did not converge.

Every emitted report starts with a reproducibility header: the full
effective configuration, the corpus content hash, and the split
fingerprint of each task, so identical invocations produce byte
identical outputs and any row can be traced back to its inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .corpus import (
    TASKS,
    Corpus,
    binarize,
    corpus_digest,
    corpus_stats,
    filter_pio,
    ingest,
    split_fingerprint,
    stratified_split,
    top_k_words,
)
from .errors import ConfigError, ContractViolation, ParseError, PicoError, ValidationError
from .evaluation import kfold_cv
from .model_io import load_model, save_model
from .pipeline import (
    DEFAULT_C,
    PipelineConfig,
    evaluate_on,
    fit_task,
    train_multitask,
)
from .svm import LinearModel, decision
from .textproc import NGramRange, Stoplist, load_stopwords, ngrams, remove_stopwords, tokenize
from .vectorizer import transform

DEFAULT_RANGES = ("1", "2", "3", "1-2", "1-3", "2-3")
DEFAULT_C_GRID = (0.1, 0.2, 0.4, 0.6, 0.8, 1.0, 1.5, 2.0, 2.5, 3.0)


@dataclass(frozen=True)
class RunConfig:
    """Resolved, validated options for one command invocation."""

    corpus: Path | None
    outdir: Path | None
    tasks: tuple[str, ...]
    ngram_range: NGramRange
    c_by_task: dict[str, float]
    ratios: tuple[float, float, float]
    seed: int
    l2_normalize: bool
    smooth_idf: bool
    stopwords_path: Path | None
    cv_k: int
    tol: float
    max_epochs: int
    min_df: int
    top_k: int

    def stoplist(self) -> Stoplist:
        return load_stopwords(self.stopwords_path)

    def pipeline_config(self, task: str) -> PipelineConfig:
        return PipelineConfig(
            ngram_range=self.ngram_range,
            c=self.c_by_task[task],
            tol=self.tol,
            max_epochs=self.max_epochs,
            seed=self.seed,
            l2_normalize=self.l2_normalize,
            min_df=self.min_df,
            smooth_idf=self.smooth_idf,
            task=task,
            stoplist=self.stoplist(),
        )

    def header_items(self) -> list[tuple[str, str]]:
        return [
            ("version", __version__),
            ("corpus", str(self.corpus)),
            ("tasks", ",".join(self.tasks)),
            ("ngram-range", self.ngram_range.label),
            ("c-p", repr(self.c_by_task["P"])),
            ("c-i", repr(self.c_by_task["I"])),
            ("c-o", repr(self.c_by_task["O"])),
            ("ratios", ",".join(repr(r) for r in self.ratios)),
            ("seed", str(self.seed)),
            ("normalize", "true" if self.l2_normalize else "false"),
            ("smooth-idf", "true" if self.smooth_idf else "false"),
            ("stopwords", str(self.stopwords_path) if self.stopwords_path else "builtin"),
            ("cv-k", str(self.cv_k)),
            ("tol", repr(self.tol)),
            ("max-epochs", str(self.max_epochs)),
            ("min-df", str(self.min_df)),
        ]


def _emit_error(kind: str, message: str, code: int) -> None:
    record = {"error": kind, "exit_code": code, "message": message}
    print(json.dumps(record), file=sys.stderr)


def _load_config_file(path: str) -> dict[str, str]:
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {p}")
    values: dict[str, str] = {}
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{p}: line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def _resolve(args: argparse.Namespace, file_cfg: dict[str, str], key: str, default):
    """Flag value if given, else config-file value, else default."""
    flag_value = getattr(args, key.replace("-", "_"), None)
    if flag_value is not None:
        return flag_value
    if key in file_cfg:
        return file_cfg[key]
    return default


def _parse_bool(value, key: str) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("true", "1", "yes"):
        return True
    if text in ("false", "0", "no"):
        return False
    raise ConfigError(f"option {key}: expected true/false, got {value!r}")


def _build_run_config(
    args: argparse.Namespace, file_cfg: dict[str, str], *, need_corpus: bool,
    need_outdir: bool,
) -> RunConfig:
    def get(key, default):
        return _resolve(args, file_cfg, key, default)

    try:
        ngram_range = NGramRange.parse(str(get("ngram-range", "1-2")))
    except ValidationError as e:
        raise ConfigError(str(e)) from e

    tasks_raw = str(get("tasks", "P,I,O"))
    tasks = tuple(t.strip().upper() for t in tasks_raw.split(",") if t.strip())
    if not tasks or any(t not in TASKS for t in tasks):
        raise ConfigError(f"tasks must be a comma list drawn from P,I,O; got {tasks_raw!r}")

    ratios_raw = str(get("ratios", "0.8,0.1,0.1"))
    try:
        ratios = tuple(float(x) for x in ratios_raw.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse ratios {ratios_raw!r}")
    if len(ratios) != 3:
        raise ConfigError(f"expected 3 ratios, got {len(ratios)}")

    try:
        c_by_task = {
            "P": float(get("c-p", DEFAULT_C["P"])),
            "I": float(get("c-i", DEFAULT_C["I"])),
            "O": float(get("c-o", DEFAULT_C["O"])),
        }
        seed = int(get("seed", 0))
        cv_k = int(get("cv-k", 10))
        tol = float(get("tol", 1e-6))
        max_epochs = int(get("max-epochs", 1000))
        min_df = int(get("min-df", 1))
        top_k = int(get("top-k", 10))
    except ValueError as e:
        raise ConfigError(f"bad numeric option: {e}") from e

    corpus_raw = get("corpus", None)
    corpus = Path(str(corpus_raw)) if corpus_raw is not None else None
    if need_corpus:
        if corpus is None:
            raise ConfigError("a corpus path is required (--corpus)")
        if not corpus.is_file():
            raise ConfigError(f"corpus file not found: {corpus}")

    outdir_raw = get("outdir", None)
    outdir = Path(str(outdir_raw)) if outdir_raw is not None else None
    if need_outdir and outdir is None:
        raise ConfigError("an output directory is required (--outdir)")

    stopwords_raw = get("stopwords", None)
    stopwords_path = Path(str(stopwords_raw)) if stopwords_raw is not None else None
    if stopwords_path is not None and not stopwords_path.is_file():
        raise ConfigError(f"stop-word list not found: {stopwords_path}")

    return RunConfig(
        corpus=corpus,
        outdir=outdir,
        tasks=tasks,
        ngram_range=ngram_range,
        c_by_task=c_by_task,
        ratios=ratios,  # validated by stratified_split
        seed=seed,
        l2_normalize=_parse_bool(get("normalize", True), "normalize"),
        smooth_idf=_parse_bool(get("smooth-idf", True), "smooth-idf"),
        stopwords_path=stopwords_path,
        cv_k=cv_k,
        tol=tol,
        max_epochs=max_epochs,
        min_df=min_df,
        top_k=top_k,
    )


def _header_lines(cfg: RunConfig, corpus_hash: str, fingerprints: dict[str, str]) -> list[str]:
    lines = [f"# {key}\t{value}" for key, value in cfg.header_items()]
    lines.append(f"# corpus-sha256\t{corpus_hash}")
    for task in sorted(fingerprints):
        lines.append(f"# split-fingerprint-{task}\t{fingerprints[task]}")
    return lines


def _write_report(path: Path, header: list[str], rows: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in header:
            fh.write(line + "\n")
        for line in rows:
            fh.write(line + "\n")


def _load_and_split(cfg: RunConfig) -> tuple[Corpus, dict[str, list], dict[str, object], dict[str, str]]:
    corpus = filter_pio(ingest(cfg.corpus))
    instances = {}
    splits = {}
    fingerprints = {}
    for task in cfg.tasks:
        instances[task] = binarize(corpus, task)
        splits[task] = stratified_split(instances[task], cfg.ratios, cfg.seed)
        fingerprints[task] = split_fingerprint(splits[task])
    return corpus, instances, splits, fingerprints


def _nonconverged_tasks(models: dict[str, LinearModel]) -> list[str]:
    return [task for task, model in models.items() if not model.converged]


# ---------------------------------------------------------------------------
# Subcommands


def cmd_stats(args: argparse.Namespace, file_cfg: dict[str, str]) -> int:
    cfg = _build_run_config(args, file_cfg, need_corpus=True, need_outdir=False)
    corpus = ingest(cfg.corpus)
    stats = corpus_stats(corpus)
    out = sys.stdout
    out.write(f"# corpus\t{cfg.corpus}\n")
    out.write(f"# corpus-sha256\t{corpus_digest(cfg.corpus)}\n")
    out.write("label\tabstracts\tsentences\n")
    for label in ("P", "I", "O", "A", "M", "R", "C"):
        lc = stats[label]
        out.write(f"{label}\t{lc.abstracts}\t{lc.sentences}\n")
    out.write("\n")
    filtered = filter_pio(corpus)
    out.write("task\tpositives\tnegatives\n")
    for task in TASKS:
        inst = binarize(filtered, task)
        pos = sum(1 for i in inst if i.y == 1)
        out.write(f"{task}\t{pos}\t{len(inst) - pos}\n")
    out.write("\n")
    stoplist = cfg.stoplist()
    out.write("task\trank\tword\tcount\n")
    for task in TASKS:
        for rank, (word, count) in enumerate(
            top_k_words(corpus, task, cfg.top_k, stoplist), start=1
        ):
            out.write(f"{task}\t{rank}\t{word}\t{count}\n")
    return 0


def _metric_row(task: str, part: str, n: int, report, auc: float) -> str:
    return (
        f"{task}\t{part}\t{n}\t{report.accuracy!r}\t{report.precision!r}\t"
        f"{report.recall!r}\t{report.f1!r}\t{auc!r}"
    )


def _human_metric_row(task: str, part: str, n: int, report, auc: float) -> str:
    return (
        f"{task:<4} {part:<6} {n:>7} {report.accuracy:>9.4f} "
        f"{report.precision:>9.4f} {report.recall:>9.4f} "
        f"{report.f1:>9.4f} {auc:>9.4f}"
    )


def cmd_train(args: argparse.Namespace, file_cfg: dict[str, str]) -> int:
    cfg = _build_run_config(args, file_cfg, need_corpus=True, need_outdir=True)
    corpus_hash = corpus_digest(cfg.corpus)
    _, _, splits, fingerprints = _load_and_split(cfg)
    base = cfg.pipeline_config(cfg.tasks[0])
    models = train_multitask(splits, base, cfg.c_by_task)

    cfg.outdir.mkdir(parents=True, exist_ok=True)
    header = _header_lines(cfg, corpus_hash, fingerprints)
    rows = ["task\tsplit\tn\taccuracy\tprecision\trecall\tf1\tauc"]
    human = [
        "task split        n  accuracy precision    recall        f1       auc"
    ]
    stoplist = base.stoplist
    for task in cfg.tasks:
        model = models[task]
        save_model(model, cfg.outdir / f"model_{task}.txt")
        for part_name in ("test", "dev"):
            part = getattr(splits[task], part_name)
            report, curve, _ = evaluate_on(model, part, stoplist)
            rows.append(_metric_row(task, part_name, len(part), report, curve.auc))
            human.append(_human_metric_row(task, part_name, len(part), report, curve.auc))
            if part_name == "test":
                roc_path = cfg.outdir / f"roc_{task}_test.tsv"
                roc_rows = [f"{fpr!r}\t{tpr!r}" for fpr, tpr in curve.points]
                _write_report(roc_path, header, ["fpr\ttpr"] + roc_rows)
    _write_report(cfg.outdir / "metrics.tsv", header, rows)
    _write_report(cfg.outdir / "metrics.txt", header, human)

    stuck = _nonconverged_tasks(models)
    if stuck:
        _emit_error(
            "NonConvergence",
            f"training did not converge within max epochs for task(s): "
            f"{','.join(stuck)}",
            3,
        )
        return 3
    return 0


def cmd_sweep_ngram(args: argparse.Namespace, file_cfg: dict[str, str]) -> int:
    cfg = _build_run_config(args, file_cfg, need_corpus=True, need_outdir=True)
    ranges_raw = _resolve(args, file_cfg, "ranges", ",".join(DEFAULT_RANGES))
    try:
        ranges = [NGramRange.parse(r) for r in str(ranges_raw).split(",") if r.strip()]
    except ValidationError as e:
        raise ConfigError(str(e)) from e
    if not ranges:
        raise ConfigError("no n-gram ranges requested")

    corpus_hash = corpus_digest(cfg.corpus)
    _, _, splits, fingerprints = _load_and_split(cfg)

    rows = ["range\ttask\tsplit-fingerprint\taccuracy\tf1"]
    stuck: list[str] = []
    for rng in ranges:
        for task in cfg.tasks:
            task_cfg = cfg.pipeline_config(task)
            task_cfg = PipelineConfig(
                ngram_range=rng,
                c=task_cfg.c,
                tol=task_cfg.tol,
                max_epochs=task_cfg.max_epochs,
                seed=task_cfg.seed,
                l2_normalize=task_cfg.l2_normalize,
                min_df=task_cfg.min_df,
                smooth_idf=task_cfg.smooth_idf,
                task=task,
                stoplist=task_cfg.stoplist,
            )
            model = fit_task(list(splits[task].train), task_cfg)
            if not model.converged:
                stuck.append(f"{rng.label}/{task}")
            report, _curve, _ = evaluate_on(model, splits[task].test, task_cfg.stoplist)
            rows.append(
                f"{rng.label}\t{task}\t{fingerprints[task]}\t"
                f"{report.accuracy:.4f}\t{report.f1:.4f}"
            )
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    header = _header_lines(cfg, corpus_hash, fingerprints)
    _write_report(cfg.outdir / "sweep_ngram.tsv", header, rows)
    if stuck:
        _emit_error(
            "NonConvergence",
            f"non-converged sweep cells: {','.join(stuck)}",
            3,
        )
        return 3
    return 0


def cmd_sweep_c(args: argparse.Namespace, file_cfg: dict[str, str]) -> int:
    cfg = _build_run_config(args, file_cfg, need_corpus=True, need_outdir=True)
    grid_raw = _resolve(args, file_cfg, "c-grid", ",".join(str(c) for c in DEFAULT_C_GRID))
    try:
        grid = [float(x) for x in str(grid_raw).split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse c-grid {grid_raw!r}")
    if len(grid) < 1:
        raise ConfigError("c-grid is empty")
    if any(c <= 0 for c in grid):
        raise ConfigError("c-grid values must be positive")
    grid = sorted(grid)

    corpus_hash = corpus_digest(cfg.corpus)
    _, _, splits, fingerprints = _load_and_split(cfg)

    rows = ["task\tc\tsplit-fingerprint\tf1\taccuracy"]
    best_rows = ["task\tbest-c\tf1"]
    stuck: list[str] = []
    for task in cfg.tasks:
        best_c = None
        best_f1 = -1.0
        for c in grid:
            task_cfg = cfg.pipeline_config(task)
            task_cfg = PipelineConfig(
                ngram_range=task_cfg.ngram_range,
                c=c,
                tol=task_cfg.tol,
                max_epochs=task_cfg.max_epochs,
                seed=task_cfg.seed,
                l2_normalize=task_cfg.l2_normalize,
                min_df=task_cfg.min_df,
                smooth_idf=task_cfg.smooth_idf,
                task=task,
                stoplist=task_cfg.stoplist,
            )
            model = fit_task(list(splits[task].train), task_cfg)
            if not model.converged:
                stuck.append(f"{task}/c={c!r}")
            report, _curve, _ = evaluate_on(model, splits[task].dev, task_cfg.stoplist)
            rows.append(
                f"{task}\t{c!r}\t{fingerprints[task]}\t{report.f1:.4f}\t"
                f"{report.accuracy:.4f}"
            )
            if report.f1 > best_f1:  # strict: ties keep the smaller c
                best_f1 = report.f1
                best_c = c
        best_rows.append(f"{task}\t{best_c!r}\t{best_f1:.4f}")
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    header = _header_lines(cfg, corpus_hash, fingerprints)
    _write_report(cfg.outdir / "sweep_c.tsv", header, rows)
    _write_report(cfg.outdir / "best_c.tsv", header, best_rows)
    if stuck:
        _emit_error("NonConvergence", f"non-converged sweep cells: {','.join(stuck)}", 3)
        return 3
    return 0


def cmd_eval_cv(args: argparse.Namespace, file_cfg: dict[str, str]) -> int:
    cfg = _build_run_config(args, file_cfg, need_corpus=True, need_outdir=True)
    corpus_hash = corpus_digest(cfg.corpus)
    corpus = filter_pio(ingest(cfg.corpus))
    rows = ["task\tfold\taccuracy\tprecision\trecall\tf1\tauc"]
    for task in cfg.tasks:
        instances = binarize(corpus, task)
        result = kfold_cv(instances, cfg.cv_k, cfg.seed, cfg.pipeline_config(task))
        for fold_idx, fr in enumerate(result.folds):
            rows.append(
                f"{task}\t{fold_idx}\t{fr.report.accuracy!r}\t"
                f"{fr.report.precision!r}\t{fr.report.recall!r}\t"
                f"{fr.report.f1!r}\t{fr.auc!r}"
            )
        for stat_name, stat in (("mean", result.mean), ("std", result.std)):
            rows.append(
                f"{task}\t{stat_name}\t{stat['accuracy']!r}\t{stat['precision']!r}\t"
                f"{stat['recall']!r}\t{stat['f1']!r}\t{stat['auc']!r}"
            )
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    header = _header_lines(cfg, corpus_hash, {})
    _write_report(cfg.outdir / "cv.tsv", header, rows)
    return 0


def cmd_predict(args: argparse.Namespace, file_cfg: dict[str, str]) -> int:
    cfg = _build_run_config(args, file_cfg, need_corpus=False, need_outdir=False)
    model_paths = args.model or []
    if not model_paths:
        raise ConfigError("at least one --model artifact is required")
    input_raw = _resolve(args, file_cfg, "input", None)
    if input_raw is None:
        raise ConfigError("an --input sentences file is required")
    input_path = Path(str(input_raw))
    if not input_path.is_file():
        raise ConfigError(f"input file not found: {input_path}")

    stoplist = cfg.stoplist()
    models: dict[str, LinearModel] = {}
    for p in model_paths:
        model = load_model(p)
        task = model.config.task
        if task in models:
            raise ConfigError(f"two artifacts supplied for task {task}")
        if model.vocab.stoplist_id != stoplist.source_id:
            raise ValidationError(
                f"model {p} was trained with stop-word list "
                f"{model.vocab.stoplist_id} but the current list is "
                f"{stoplist.source_id}; pass the matching --stopwords file"
            )
        models[task] = model
    ordered_tasks = [t for t in TASKS if t in models]

    out = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    try:
        columns = ["pmid", "text"]
        for task in ordered_tasks:
            columns += [f"score_{task}", f"label_{task}"]
        out.write("\t".join(columns) + "\n")
        with open(input_path, "r", encoding="utf-8", newline="") as fh:
            for raw in fh:
                line = raw.rstrip("\n").rstrip("\r")
                if not line.strip():
                    continue
                if "\t" in line:
                    pmid, text = line.split("\t", 1)
                else:
                    pmid, text = "", line
                tokens = remove_stopwords(tokenize(text), stoplist)
                fields = [pmid, text]
                for task in ordered_tasks:
                    model = models[task]
                    bag = ngrams(tokens, model.vocab.range)
                    vec = transform(bag, model.vocab, l2_normalize=model.l2_normalize)
                    score = decision(model, vec)
                    fields += [repr(score), "1" if score >= 0.0 else "0"]
                out.write("\t".join(fields) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# Parser


def _add_common_options(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--config", help="key = value options file; flags win")
    sp.add_argument("--corpus", help="canonical TSV corpus file")
    sp.add_argument("--outdir", help="directory for reports and artifacts")
    sp.add_argument("--tasks", help="comma list from P,I,O (default all)")
    sp.add_argument("--ngram-range", help="n-gram range, e.g. 1-2 or 2")
    sp.add_argument("--c-p", type=float, help="penalty C for the P task")
    sp.add_argument("--c-i", type=float, help="penalty C for the I task")
    sp.add_argument("--c-o", type=float, help="penalty C for the O task")
    sp.add_argument("--ratios", help="train,test,dev ratios (default 0.8,0.1,0.1)")
    sp.add_argument("--seed", type=int, help="seed for splits and training")
    sp.add_argument(
        "--normalize",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="L2-normalize sentence vectors (default on)",
    )
    sp.add_argument(
        "--smooth-idf",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="use ln(d/(df+1)) idf (default on; off gives ln(d/df))",
    )
    sp.add_argument("--stopwords", help="stop-word list file, one word per line")
    sp.add_argument("--cv-k", type=int, help="folds for eval-cv (default 10)")
    sp.add_argument("--tol", type=float, help="relative objective tolerance")
    sp.add_argument("--max-epochs", type=int, help="training epoch budget")
    sp.add_argument("--min-df", type=int, help="minimum document frequency")
    sp.add_argument("--top-k", type=int, help="words per label for stats")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="picoclf",
        description="Train and evaluate P/I/O sentence classifiers over "
        "1-2gram tf-idf features.",
        exit_on_error=False,
    )
    sub = parser.add_subparsers(dest="cmd")

    handlers: dict[str, Callable] = {
        "stats": cmd_stats,
        "train": cmd_train,
        "sweep-ngram": cmd_sweep_ngram,
        "sweep-c": cmd_sweep_c,
        "eval-cv": cmd_eval_cv,
        "predict": cmd_predict,
    }
    helps = {
        "stats": "corpus label/task counts and top-k word tables",
        "train": "train per-task models, evaluate on test and dev",
        "sweep-ngram": "train at several n-gram ranges on identical splits",
        "sweep-c": "grid-search the penalty C per task on the dev split",
        "eval-cv": "stratified k-fold cross-validation per task",
        "predict": "score a sentences file with saved model artifacts",
    }
    for name, handler in handlers.items():
        sp = sub.add_parser(name, help=helps[name], exit_on_error=False)
        _add_common_options(sp)
        if name == "sweep-ngram":
            sp.add_argument("--ranges", help="comma list of ranges to sweep")
        if name == "sweep-c":
            sp.add_argument("--c-grid", help="comma list of C values")
        if name == "predict":
            sp.add_argument("--model", action="append", help="model artifact (repeatable)")
            sp.add_argument("--input", help="sentences file: [pmid<TAB>]text per line")
            sp.add_argument("--out", help="output TSV (default stdout)")
        sp.set_defaults(handler=handler)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentError as e:
        _emit_error("ConfigError", str(e), 1)
        return 1
    except SystemExit as e:  # argparse --help or legacy error paths
        return 0 if (e.code in (0, None)) else 1
    if getattr(args, "handler", None) is None:
        parser.print_usage(sys.stderr)
        _emit_error("ConfigError", "a subcommand is required", 1)
        return 1
    try:
        file_cfg = _load_config_file(args.config) if args.config else {}
        return args.handler(args, file_cfg)
    except ConfigError as e:
        _emit_error("ConfigError", str(e), 1)
        return 1
    except ParseError as e:
        _emit_error("ParseError", str(e), 2)
        return 2
    except ValidationError as e:
        _emit_error("ValidationError", str(e), 2)
        return 2
    except ContractViolation as e:
        _emit_error("ContractViolation", str(e), 2)
        return 2
    except OSError as e:
        _emit_error("IOError", str(e), 2)
        return 2
    except PicoError as e:
        _emit_error(type(e).__name__, str(e), 2)
        return 2


if __name__ == "__main__":
    sys.exit(main())
