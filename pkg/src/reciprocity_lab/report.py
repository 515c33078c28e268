"""Canonical report documents: JSON with a fixed key order and RFC-4180 CSV.

Reports never embed wall-clock time or any other nondeterministic field,
so identical inputs serialize to identical bytes and documents round-trip
through their serialized form unchanged.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .claims import SweepReport
from .errors import InputError

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class ReportDocument:
    """Envelope around a payload: schema version, command and parameters."""

    command: str
    parameters: dict
    payload: dict
    schema_version: str = SCHEMA_VERSION


def to_json(document: ReportDocument) -> str:
    """Serialize with fixed key order; byte-identical for equal documents."""
    obj = {
        "schema_version": document.schema_version,
        "command": document.command,
        "parameters": document.parameters,
        "payload": document.payload,
    }
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> ReportDocument:
    """Parse a serialized document back into an equal ReportDocument."""
    obj = json.loads(text)
    try:
        return ReportDocument(
            command=obj["command"],
            parameters=obj["parameters"],
            payload=obj["payload"],
            schema_version=obj["schema_version"],
        )
    except (KeyError, TypeError) as err:
        raise InputError(f"not a report document: {err}") from None


def witness_summary(witness: dict) -> str:
    """One-line rendering of a witness payload, stable across runs."""
    parts = []
    for key, value in witness.items():
        if isinstance(value, (dict, list)):
            rendered = json.dumps(value, separators=(",", ":"), ensure_ascii=False)
        else:
            rendered = str(value)
        parts.append(f"{key}={rendered}")
    return "; ".join(parts)


CSV_COLUMNS = ["claim_id", "p", "q", "form", "holds", "witness_summary"]


def sweep_to_csv(report: SweepReport) -> str:
    """The recorded counterexamples of a sweep as RFC-4180 CSV rows.

    Row order follows the report: claims in registry order, then form,
    then pairs in lexicographic order.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(CSV_COLUMNS)
    for tally in report.claims:
        for form in tally.forms:
            for record in form.counterexamples:
                writer.writerow(
                    [
                        tally.claim.value,
                        record.p,
                        record.q,
                        form.form,
                        "false",
                        witness_summary(record.witness),
                    ]
                )
    return buffer.getvalue()


def sweep_document(report: SweepReport, claims_selected: list[str]) -> ReportDocument:
    """Wrap a sweep into a document, recording the exact parameters used."""
    parameters = {
        "bound": report.bound,
        "claims": claims_selected,
        "cap": report.cap,
        "counterexample_limit": report.counterexample_limit,
    }
    return ReportDocument("sweep", parameters, report.as_payload())
