"""
Publication corpus ingestion and per-author indices.

Input is UTF-8 with one record per line, either CSV with header
``paper_id,year,citations,authors`` (authors separated by ';') or
line-delimited JSON objects with the same field names.
"""

import csv
import json
import logging
from bisect import bisect_left
from collections import defaultdict
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

import pandas as pd
from pydantic import BaseModel, Field, ValidationError, field_validator

from bibliometrics import h_index
from calibration.errors import CorpusError, CorpusFormatError, TooManyRejectsError, UnknownAuthorError
from config.settings import get_settings

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

CORPUS_FIELDS = ("paper_id", "year", "citations", "authors")
FORMATS = ("csv", "jsonl")


class PublicationRecord(BaseModel):
    """One paper with its snapshot citation total."""

    paper_id: str = Field(..., min_length=1, description="Opaque paper token")
    year: int = Field(..., description="Publication year")
    citations: int = Field(..., ge=0, description="Snapshot citation total")
    authors: Tuple[str, ...] = Field(..., min_length=1, description="Author tokens")

    @field_validator("paper_id")
    @classmethod
    def _strip_id(cls, value: str) -> str:
        value = value.strip()
        if not value:
            raise ValueError("paper_id is blank")
        return value

    @field_validator("authors", mode="before")
    @classmethod
    def _split_authors(cls, value):
        if isinstance(value, str):
            value = value.split(";")
        tokens = tuple(str(token).strip() for token in value)
        if any(not token for token in tokens):
            raise ValueError("author list contains an empty token")
        if len(set(tokens)) != len(tokens):
            raise ValueError(f"duplicate author tokens in {list(tokens)}")
        return tokens

    @field_validator("year")
    @classmethod
    def _year_in_bounds(cls, value: int) -> int:
        settings = get_settings()
        if not settings.min_year <= value <= settings.max_year:
            raise ValueError(f"year {value} outside [{settings.min_year}, {settings.max_year}]")
        return value


class RejectedRow(BaseModel):
    line: int
    reason: str
    raw: str


class Corpus:
    """
    Records plus the derived indices P(a) and P_y(a).
    Indices are rebuilt from the records, so two corpora with the same records
    in the same order have identical indices.
    """

    def __init__(self, records: Iterable[PublicationRecord] = (), rejects: Iterable[RejectedRow] = ()):
        self.records: List[PublicationRecord] = list(records)
        self.rejects: List[RejectedRow] = list(rejects)
        self._by_author: Dict[str, List[int]] = defaultdict(list)
        self._by_author_year: Dict[Tuple[str, int], List[int]] = defaultdict(list)
        for index, record in enumerate(self.records):
            for author in record.authors:
                self._by_author[author].append(index)
                self._by_author_year[(author, record.year)].append(index)
        # per author: publication years ascending with the matching citation counts
        self._timeline: Dict[str, Tuple[List[int], List[int]]] = {}
        for author, indices in self._by_author.items():
            ordered = sorted(indices, key=lambda i: self.records[i].year)
            self._timeline[author] = (
                [self.records[i].year for i in ordered],
                [self.records[i].citations for i in ordered],
            )
        self._h_cache: Dict[Tuple[str, int], int] = {}

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[PublicationRecord]:
        return iter(self.records)

    @property
    def authors(self) -> List[str]:
        return sorted(self._by_author)

    def papers_of(self, author: str) -> List[PublicationRecord]:
        """P(a)."""
        self._require(author)
        return [self.records[i] for i in self._by_author[author]]

    def papers_in_year(self, author: str, year: int) -> List[PublicationRecord]:
        """P_y(a); empty when the author published nothing that year."""
        self._require(author)
        return [self.records[i] for i in self._by_author_year.get((author, year), ())]

    def papers_count_in_year(self, author: str, year: int) -> int:
        return len(self._by_author_year.get((author, year), ()))

    def author_years(self) -> List[Tuple[str, int]]:
        return sorted(self._by_author_year)

    def author_h_at_year(self, author: str, year: int) -> int:
        """h-index over the author's papers published strictly before `year`."""
        self._require(author)
        key = (author, year)
        if key not in self._h_cache:
            years, citations = self._timeline[author]
            self._h_cache[key] = h_index(citations[:bisect_left(years, year)])
        return self._h_cache[key]

    def prior_papers(self, author: str, year: int) -> List[int]:
        """Citation counts of the author's papers published strictly before `year`."""
        self._require(author)
        years, citations = self._timeline[author]
        return citations[:bisect_left(years, year)]

    def to_frame(self) -> pd.DataFrame:
        """Accepted records in input column order, authors joined by ';'."""
        return pd.DataFrame(
            [
                {"paper_id": r.paper_id, "year": r.year, "citations": r.citations, "authors": ";".join(r.authors)}
                for r in self.records
            ],
            columns=list(CORPUS_FIELDS),
        )

    def _require(self, author: str) -> None:
        if author not in self._by_author:
            raise UnknownAuthorError(f"Author '{author}' does not appear in the corpus")


def _csv_rows(handle) -> Iterator[Tuple[int, str, Union[Dict, str]]]:
    reader = csv.DictReader(handle)
    if reader.fieldnames is None:
        return
    header = [name.strip() for name in reader.fieldnames]
    missing = [name for name in CORPUS_FIELDS if name not in header]
    if missing:
        raise CorpusFormatError(f"CSV header is missing columns {missing}; got {header}")
    reader.fieldnames = header
    for row in reader:
        raw = ",".join(str(v) for v in row.values() if v is not None)
        if None in row or any(row.get(name) is None for name in CORPUS_FIELDS):
            yield reader.line_num, raw, "wrong number of fields"
            continue
        yield reader.line_num, raw, {name: row[name].strip() for name in CORPUS_FIELDS}


def _jsonl_rows(handle) -> Iterator[Tuple[int, str, Union[Dict, str]]]:
    for line_num, line in enumerate(handle, start=1):
        raw = line.rstrip("\n")
        if not raw.strip():
            continue
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError as e:
            yield line_num, raw, f"invalid JSON: {e.msg}"
            continue
        if not isinstance(payload, dict):
            yield line_num, raw, "line is not a JSON object"
            continue
        yield line_num, raw, payload


def _describe(error: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in item['loc']) or 'record'}: {item['msg']}" for item in error.errors()
    )


def load_corpus(path: Union[str, Path], format: str = "csv", max_reject_fraction: Optional[float] = None) -> Corpus:
    """
    Read a corpus file. Malformed rows are kept in ``corpus.rejects`` with
    their line numbers; more than `max_reject_fraction` rejects aborts.
    """
    if format not in FORMATS:
        raise CorpusFormatError(f"Unknown corpus format '{format}'; expected one of {FORMATS}")
    limit = get_settings().max_reject_fraction if max_reject_fraction is None else max_reject_fraction
    path = Path(path)

    records: List[PublicationRecord] = []
    rejects: List[RejectedRow] = []
    seen_ids = set()
    try:
        with path.open("r", encoding="utf-8", newline="") as handle:
            rows = _csv_rows(handle) if format == "csv" else _jsonl_rows(handle)
            for line_num, raw, row in rows:
                if isinstance(row, str):
                    rejects.append(RejectedRow(line=line_num, reason=row, raw=raw))
                    continue
                try:
                    record = PublicationRecord.model_validate(row)
                except ValidationError as e:
                    rejects.append(RejectedRow(line=line_num, reason=_describe(e), raw=raw))
                    continue
                if record.paper_id in seen_ids:
                    rejects.append(RejectedRow(line=line_num, reason=f"duplicate paper_id '{record.paper_id}'", raw=raw))
                    continue
                seen_ids.add(record.paper_id)
                records.append(record)
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusError(f"Cannot read corpus {path}: {e}") from e

    total = len(records) + len(rejects)
    for reject in rejects:
        logger.warning(f"{path}:{reject.line}: rejected row ({reject.reason})")
    if total and len(rejects) / total > limit:
        summary = ", ".join(f"line {r.line}" for r in rejects[:10])
        raise TooManyRejectsError(
            f"{len(rejects)} of {total} rows in {path} are malformed (limit {limit:.0%}): {summary}",
            rejects,
        )
    if not total:
        logger.warning(f"Corpus {path} is empty")
    logger.info(f"Loaded {len(records)} records from {path} ({len(rejects)} rejected)")
    return Corpus(records, rejects)
