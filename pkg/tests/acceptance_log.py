"""Shared record of acceptance outcomes, printed at the end of the pytest run."""

LINES: dict[int, str] = {}


def record(number: int, status: str, detail: str) -> str:
    line = f"criterion {number}: {status} - {detail}"
    LINES[number] = line
    print(line)
    return line
