"""Deterministic text, CSV and JSON renderings of a decision report."""

from __future__ import annotations

import csv
import io
import json

from .decision import ComparisonTable, DecisionReport, ScoreTable, ValueTable

FORMATS = ("table", "csv", "json")


def _value_block(t: ValueTable):
    header = ["object", *t.params]
    rows = [[o, *(str(d) for d in row)] for o, row in zip(t.objects, t.cells)]
    return header, rows


def _comparison_block(c: ComparisonTable):
    header = ["object", *c.objects]
    rows = [[o, *(str(n) for n in row)] for o, row in zip(c.objects, c.counts)]
    return header, rows


def _score_block(s: ScoreTable):
    header = ["object", "row_sum", "col_sum", "score"]
    rows = [[r.obj, str(r.row_sum), str(r.col_sum), str(r.score)] for r in s.rows]
    return header, rows


def _final_block(report: DecisionReport):
    header = ["object", "membership", "nonmembership", "final"]
    rows = [[r.obj, str(r.membership), str(r.nonmembership), str(r.final)] for r in report.final]
    return header, rows


def blocks(report: DecisionReport) -> list[tuple[str, list[str], list[list[str]]]]:
    """The seven tables in pipeline order as ``(title, header, rows)``."""
    return [
        ("positive values", *_value_block(report.positive_values)),
        ("positive comparison", *_comparison_block(report.positive_comparison)),
        ("membership scores", *_score_block(report.membership)),
        ("negative values", *_value_block(report.negative_values)),
        ("negative comparison", *_comparison_block(report.negative_comparison)),
        ("non-membership scores", *_score_block(report.nonmembership)),
        ("final scores", *_final_block(report)),
    ]


def winner_line(report: DecisionReport) -> str:
    names = ", ".join(report.winners_in_order())
    label = "winner" if len(report.winners) == 1 else "winners"
    return f"{label}: {names} (final score {report.best_score})"


def _grid(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = []
    for r in [header, *rows]:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return lines


def render_table(report: DecisionReport) -> str:
    out = []
    for title, header, rows in blocks(report):
        out.append(f"== {title} ==")
        out.extend(_grid(header, rows))
        out.append("")
    out.append("ranking: " + ", ".join(report.ranking))
    out.append(winner_line(report))
    return "\n".join(out) + "\n"


def render_csv(report: DecisionReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for title, header, rows in blocks(report):
        w.writerow([title])
        w.writerow(header)
        w.writerows(rows)
        w.writerow([])
    w.writerow(["winners"])
    w.writerow(["object", "final"])
    best = report.best_score
    w.writerows([o, str(best)] for o in report.winners_in_order())
    return buf.getvalue()


def report_to_dict(report: DecisionReport) -> dict:
    def values(t: ValueTable):
        return {o: [str(d) for d in row] for o, row in zip(t.objects, t.cells)}

    def counts(c: ComparisonTable):
        return {o: list(row) for o, row in zip(c.objects, c.counts)}

    def scores(s: ScoreTable):
        return {r.obj: {"row_sum": r.row_sum, "col_sum": r.col_sum, "score": r.score} for r in s.rows}

    return {
        "objects": list(report.objects),
        "parameters": list(report.params),
        "positive_values": values(report.positive_values),
        "positive_comparison": counts(report.positive_comparison),
        "membership_scores": scores(report.membership),
        "negative_values": values(report.negative_values),
        "negative_comparison": counts(report.negative_comparison),
        "nonmembership_scores": scores(report.nonmembership),
        "final_scores": {
            r.obj: {"membership": r.membership, "nonmembership": r.nonmembership, "final": r.final}
            for r in report.final
        },
        "ranking": list(report.ranking),
        "winners": report.winners_in_order(),
        "best_score": report.best_score,
    }


def render_json(report: DecisionReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def render(report: DecisionReport, fmt: str = "table") -> str:
    if fmt == "table":
        return render_table(report)
    if fmt == "csv":
        return render_csv(report)
    if fmt == "json":
        return render_json(report)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
