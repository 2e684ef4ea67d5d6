# utils.py

import json
import logging
import sys
from pathlib import Path
from typing import Optional

import pandas as pd

from config import LOG_LEVEL
from errors import InputError

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


def setup_logging(quiet: bool = False, level: str = LOG_LEVEL):
    """Route log records to stderr so stdout only carries results"""
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr
    )
    if quiet:
        logging.getLogger().setLevel(logging.WARNING)
    return logging.getLogger(__name__)


def read_text(path: Optional[str]) -> str:
    """Read UTF-8 input from a file or stdin and drop one trailing newline; any other carriage return is kept"""
    if path is None or path == "-":
        raw = sys.stdin.buffer.read()
    else:
        try:
            raw = Path(path).read_bytes()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        text = raw.decode('utf-8')
    except UnicodeDecodeError as e:
        raise InputError(f"input is not valid UTF-8: {e}") from None
    if text.endswith("\r\n"):
        text = text[:-2]
    elif text.endswith("\n"):
        text = text[:-1]
    return text


def write_output(content: str, path: Optional[str] = None):
    """Write to a file, or to stdout when no path is given"""
    if path is None or path == "-":
        sys.stdout.write(content)
        sys.stdout.flush()
    else:
        Path(path).write_text(content, encoding='utf-8')


def format_tokens(tokens) -> str:
    return " ".join(tokens) + "\n"


def format_json(obj) -> str:
    return json.dumps(obj, indent=4, ensure_ascii=False) + "\n"


def frame_to_tsv(df: pd.DataFrame) -> str:
    return df.to_csv(sep="\t", index=False)


def format_metric(value, default="N/A"):
    if value is None or pd.isna(value):
        return default
    if isinstance(value, float):
        return f"{value:,.2f}"
    if isinstance(value, int):
        return f"{value:,}"
    return str(value)
