"""Method roster shared by the benchmark, configuration and CLI layers."""

from __future__ import annotations

from .bayes import ALL_SELECTORS, SelectorSpec, parse_selector

REGULARIZERS = ("LASSO", "ENET", "DZ")
ORACLE = "ORACLE"


def parse_method(name: str) -> SelectorSpec | str:
    """A :class:`SelectorSpec`, or one of ``LASSO``, ``ENET``, ``DZ``, ``ORACLE``."""
    key = name.strip().upper()
    if key in REGULARIZERS or key == ORACLE:
        return key
    return parse_selector(name)


def method_label(method) -> str:
    return method if isinstance(method, str) else method.label


def expand_methods(names, with_oracle: bool = True) -> list:
    """Parse a list (or comma-separated string) of method names.

    ``all`` expands to every Bayesian selector, the three regularizers and,
    when ``with_oracle``, the ORACLE row. Duplicates are dropped.
    """
    if isinstance(names, str):
        names = [s for s in names.split(",") if s.strip()]
    out, seen = [], set()
    for name in names:
        if name.strip().lower() == "all":
            items = list(ALL_SELECTORS) + list(REGULARIZERS) + ([ORACLE] if with_oracle else [])
        else:
            items = [parse_method(name)]
        for m in items:
            label = method_label(m)
            if label not in seen:
                seen.add(label)
                out.append(m)
    return out
