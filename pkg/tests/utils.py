import csv
import io
from typing import Dict, List


def parse_key_values(output: str) -> Dict[str, float]:
    values = {}
    for line in output.splitlines():
        if "=" in line and not line.startswith("#"):
            key, value = line.split("=", 1)
            values[key] = float(value)
    return values


def read_csv_rows(text: str, delimiter: str = ",") -> List[List[str]]:
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.reader(io.StringIO("\n".join(lines)), delimiter=delimiter))
