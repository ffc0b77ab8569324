from .exhaustive import exhaustive_search, iter_classes
from .local import local_search, saturate
from .records import (ExtremalRecord, SearchConfig, SearchStats, WitnessReport,
                      verify_witness)


def run_search(config: SearchConfig) -> ExtremalRecord:
    if config.mode == "exhaustive":
        return exhaustive_search(config)
    return local_search(config)


__all__ = [
    "ExtremalRecord", "SearchConfig", "SearchStats", "WitnessReport",
    "exhaustive_search", "iter_classes", "local_search", "run_search",
    "saturate", "verify_witness",
]
