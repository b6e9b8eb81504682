"""
Registry of worked-example symbols with their expected verdicts.

The registry lives in config/symbol_fixtures.json. A fixture is either a
closed-form `symbol` or a list of `pieces` (each valid up to `upto`, the
last one unbounded), which is turned into a vectorised callable for the
difference route.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from ..symbols import Expr, evaluate, parse
from .logging_config import get_logger

logger = get_logger(__name__)

DEFAULT_FIXTURES_PATH = Path(__file__).resolve().parents[2] / "config" / "symbol_fixtures.json"


@dataclass(frozen=True)
class Piece:
    symbol: str
    upto: Optional[float] = None


@dataclass(frozen=True)
class Fixture:
    """
    One registry entry.

    Attributes:
        name: Registry key
        symbol: Expression text (None for piecewise fixtures)
        pieces: Piecewise definition (empty for closed-form fixtures)
        expect: Class name -> expected status for the symbol
        dual_expect: Class name -> expected status for 1/phi
        m: Expected m of the m-isometry, if any
    """
    name: str
    symbol: Optional[str] = None
    pieces: Tuple[Piece, ...] = ()
    description: str = ""
    expect: Dict[str, str] = field(default_factory=dict)
    dual_expect: Dict[str, str] = field(default_factory=dict)
    m: Optional[int] = None

    @property
    def is_piecewise(self) -> bool:
        return bool(self.pieces)

    def expr(self) -> Expr:
        if self.symbol is None:
            raise ValueError(f"Fixture '{self.name}' is piecewise and has no expression")
        return parse(self.symbol)

    def function(self) -> Callable[[np.ndarray], np.ndarray]:
        """Vectorised evaluator; pieces are matched by x <= upto in order."""
        if not self.is_piecewise:
            e = self.expr()
            return lambda x: np.asarray(evaluate(e, np.asarray(x, dtype=float)), dtype=float)
        parts = [(piece.upto, parse(piece.symbol)) for piece in self.pieces]

        def piecewise(x):
            x = np.asarray(x, dtype=float)
            out = np.empty_like(x)
            done = np.zeros(x.shape, dtype=bool)
            for upto, e in parts:
                mask = ~done if upto is None else (~done & (x <= upto))
                if np.any(mask):
                    out[mask] = np.broadcast_to(evaluate(e, x[mask]), x[mask].shape)
                done |= mask
            if not np.all(done):
                raise ValueError(f"Fixture '{self.name}' does not cover every x")
            return out

        return piecewise

    @property
    def label(self) -> str:
        if self.symbol is not None:
            return self.symbol
        return "; ".join(
            f"{p.symbol} for x <= {p.upto:g}" if p.upto is not None else f"{p.symbol} otherwise"
            for p in self.pieces
        )


def _fixture(name: str, data: dict) -> Fixture:
    pieces = tuple(Piece(p["symbol"], p.get("upto")) for p in data.get("pieces", ()))
    if (data.get("symbol") is None) == (not pieces):
        raise ValueError(f"Fixture '{name}' needs exactly one of 'symbol' or 'pieces'")
    return Fixture(
        name=name,
        symbol=data.get("symbol"),
        pieces=pieces,
        description=data.get("description", ""),
        expect=dict(data.get("expect", {})),
        dual_expect=dict(data.get("dual_expect", {})),
        m=data.get("m"),
    )


def load_fixtures(path: Union[str, Path, None] = None) -> List[Fixture]:
    """
    Read the fixture registry.

    Args:
        path: JSON file (default: config/symbol_fixtures.json)

    Returns:
        Fixtures in file order
    """
    path = Path(path) if path is not None else DEFAULT_FIXTURES_PATH
    with open(path) as handle:
        data = json.load(handle)
    fixtures = [_fixture(name, entry) for name, entry in data["fixtures"].items()]
    logger.debug(f"Loaded {len(fixtures)} fixtures from {path}")
    return fixtures
