import dataclasses
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

from hoairy.core.config import OUTPUT_FORMATS
from hoairy.utils.exception_utils import ConfigError
from hoairy.utils.shortcuts import parse_float_list

log = logging.getLogger(__name__)

_LIST_FIELDS = ("x", "alpha")


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """
    Fully resolved settings of one command run. Built from an optional JSON
    file overlaid with command-line flags, flags win. No field is random, so
    equal configs give byte-identical artifacts.
    """

    subcommand: str
    n: int = 1
    k: Optional[int] = None
    x: Tuple[float, ...] = ()
    alpha: Tuple[float, ...] = ()
    t: float = 0.0
    t_from: Optional[float] = None
    t_to: Optional[float] = None
    t_step: Optional[float] = None
    over: str = "t"
    deriv: int = 0
    nodes: Optional[int] = None
    h: Optional[float] = None
    d_alpha: Optional[float] = None
    orders: Tuple[int, ...] = ()
    t_min: Optional[float] = None
    t_max: Optional[float] = None
    rtol: Optional[float] = None
    atol: Optional[float] = None
    hard_cutoff: bool = False
    self_check: bool = False
    spectrum: bool = False
    imag: bool = False
    profile: bool = False
    export: Optional[str] = None
    out: Optional[str] = None
    format: str = "json"

    @classmethod
    def field_names(cls) -> Tuple[str, ...]:
        return tuple(field.name for field in dataclasses.fields(cls))

    @staticmethod
    def read_file(path: str) -> Dict[str, Any]:
        try:
            with open(path, encoding="UTF-8") as config_file:
                data = json.load(config_file)
        except OSError as error:
            raise ConfigError(
                "Could not read the config file", {"path": path}
            ) from error
        except json.JSONDecodeError as error:
            raise ConfigError(
                "The config file is not valid JSON",
                {"path": path, "line": error.lineno},
            ) from error
        if not isinstance(data, dict):
            raise ConfigError("The config file must hold a JSON object", {"path": path})
        return data

    @classmethod
    def from_options(
        cls,
        subcommand: str,
        options: Mapping[str, Any],
        defaults: Optional[Mapping[str, Any]] = None,
    ) -> "RunConfig":
        known = set(cls.field_names())
        values: Dict[str, Any] = dict(defaults or {})
        config_path = options.get("config")
        if config_path:
            from_file = cls.read_file(config_path)
            unknown = sorted(set(from_file) - known)
            if unknown:
                raise ConfigError(
                    "Unknown keys in the config file", {"keys": unknown}
                )
            values.update(from_file)
        for name, value in options.items():
            if name in known and value is not None:
                values[name] = value
        values["subcommand"] = subcommand
        config = cls(**cls.normalize(values))
        config.validate()
        log.debug("resolved config %s", config.to_dict())
        return config

    @staticmethod
    def normalize(values: Dict[str, Any]) -> Dict[str, Any]:
        for name in _LIST_FIELDS:
            if name in values:
                values[name] = tuple(parse_float_list(values[name], name))
        if "orders" in values:
            try:
                values["orders"] = tuple(
                    int(value) for value in parse_float_list(values["orders"], "orders")
                )
            except (TypeError, ValueError) as error:
                raise ConfigError(
                    "orders must be integers", {"value": str(values["orders"])}
                ) from error
        if values.get("k") is None and values.get("x"):
            values["k"] = len(values["x"])
        return values

    def validate(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigError("n must be a positive integer", {"n": self.n})
        if self.k is not None and (not isinstance(self.k, int) or self.k < 1):
            raise ConfigError("k must be a positive integer", {"k": self.k})
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(
                "Unknown output format",
                {"format": self.format, "allowed": list(OUTPUT_FORMATS)},
            )
        if self.over not in ("t", "x1"):
            raise ConfigError("tabulate sweeps over t or x1", {"over": self.over})
        if self.deriv < 0:
            raise ConfigError("deriv must be non-negative", {"deriv": self.deriv})
        if self.nodes is not None and self.nodes < 1:
            raise ConfigError("nodes must be positive", {"nodes": self.nodes})
        for name in ("t", "t_from", "t_to", "t_step", "h", "d_alpha", "t_min", "t_max"):
            value = getattr(self, name)
            if value is not None and not math.isfinite(value):
                raise ConfigError(f"{name} must be finite", {name: value})
        for name in ("h", "d_alpha", "t_step", "rtol", "atol"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ConfigError(f"{name} must be positive", {name: value})
        if self.k is not None:
            for name in _LIST_FIELDS:
                values = getattr(self, name)
                if values and len(values) != self.k:
                    raise ConfigError(
                        f"{name} must have k = {self.k} entries",
                        {"field": name, "length": len(values)},
                    )

    def require(self, *names: str):
        missing = [
            name
            for name in names
            if getattr(self, name) is None or getattr(self, name) == ()
        ]
        if missing:
            raise ConfigError(
                f"{self.subcommand} needs {', '.join(missing)}", {"missing": missing}
            )

    def interval_system(self, t: Optional[float] = None):
        from hoairy.fredholm.intervals import IntervalSystem

        self.require("x", "alpha")
        return IntervalSystem.create(
            thresholds=self.x,
            weights=self.alpha,
            shift=self.t if t is None else t,
        )

    def output_path(self) -> Optional[Path]:
        return Path(self.out) if self.out else None

    def to_dict(self) -> Dict[str, Any]:
        data = dataclasses.asdict(self)
        for name in ("x", "alpha", "orders"):
            data[name] = list(data[name])
        return data
