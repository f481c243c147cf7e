"""Run and sweep configuration: versioned JSON parsed into frozen dataclasses.

Complex entries are ``[re, im]`` pairs or plain numbers. Multipliers may also
be ``{"rotation": [q, p], "modulus": r}`` so rotations stay exact integer
pairs. Per-step tables (``g``, ``h``, ``a_table``, ``b_table``) are lists of
N-vectors used cyclically: step ``l`` reads row ``l mod len(table)``.
"""

import json
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, cast

from polygen.constants.presets import PRESETS, ExamplePreset
from polygen.constants.tolerances import (
    ASYMPTOTIC_PERIOD_TOL,
    DIVERGENCE_THRESHOLD,
    EXACT_PERIOD_TOL,
    VERIFY_TOL,
)
from polygen.constants.types import OutputFormat, SolveMode
from polygen.errors import ConfigError, PolygenError, UnknownPresetError
from polygen.helpers.helpers import rotation_multiplier
from polygen.primitives.polynomial import PermutationIndex, RootSet
from polygen.primitives.seeds import (
    AffineParams,
    CyclicSchedule,
    NonautonomousParams,
    RationalRotation,
    SecondOrderParams,
    SeedSpec,
)
from polygen.primitives.trajectory import OrderingRule

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FORMATS: tuple[OutputFormat, ...] = ("csv", "json", "svg")

RawConfig = Mapping[str, Any]


@dataclass(frozen=True)
class Multiplier:
    value: complex
    rotation: RationalRotation | None = None
    label: str = ""


@dataclass(frozen=True)
class AnalysisConfig:
    max_period: int = 20
    tol: float = EXACT_PERIOD_TOL
    asymptotic_tol: float = ASYMPTOTIC_PERIOD_TOL
    divergence_threshold: float = DIVERGENCE_THRESHOLD
    ordered: bool = False


@dataclass(frozen=True)
class OutputConfig:
    directory: Path = Path("out")
    name: str = "run"
    formats: tuple[OutputFormat, ...] = FORMATS
    plane_plot: bool = True


@dataclass(frozen=True)
class VerifyConfig:
    tol: float = VERIFY_TOL
    # added to closed-form coefficients, a negative control for the gate
    perturbation: complex = 0j


@dataclass(frozen=True)
class RunConfig:
    seed: SeedSpec
    initial: tuple[RootSet, ...]
    steps: int
    depth: int = 0
    ordering: tuple[OrderingRule, ...] = ()
    from_top: bool = False
    mode: SolveMode = "closed-form"
    presentation: OrderingRule = field(default_factory=OrderingRule.lexicographic)
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)

    def __post_init__(self) -> None:
        if len(self.initial) != self.seed.order:
            raise ConfigError(
                f"Seed of order {self.seed.order} needs {self.seed.order} initial "
                f"root sets, got {len(self.initial)}"
            )
        if self.steps < 0:
            raise ConfigError(f"steps must be non-negative, got {self.steps}")
        if self.depth < 0:
            raise ConfigError(
                f"generation depth must be non-negative, got {self.depth}"
            )
        if self.from_top:
            if self.ordering:
                raise ConfigError(
                    "Ordering rules are derived from the initial data when "
                    "from_top is set; leave 'ordering' empty"
                )
        elif len(self.ordering) != self.depth:
            raise ConfigError(
                f"Generation depth {self.depth} needs {self.depth} ordering rules, "
                f"got {len(self.ordering)}"
            )
        for state in self.initial:
            if state.n != self.seed.arity:
                raise ConfigError(
                    f"Initial root sets need {self.seed.arity} roots, got {state.n}"
                )

    @classmethod
    def from_dict(cls, data: RawConfig) -> "RunConfig":
        _check_schema(data)
        try:
            seed = parse_seed(_section(data, "seed"))
            generation = _section(data, "generation", required=False)
            depth = int(generation.get("depth", 0))
            ordering = tuple(
                parse_ordering(rule, seed.arity)
                for rule in generation.get("ordering", ())
            )
            presentation = parse_ordering(
                data.get("presentation", "lexicographic"), seed.arity
            )
            initial = tuple(
                RootSet(tuple(parse_complex(value) for value in roots))
                for roots in _list(data, "initial")
            )
            mode = str(data.get("mode", "closed-form"))
            if mode not in ("closed-form", "iterated"):
                raise ConfigError(f"Unknown solve mode {mode!r}")
            return cls(
                seed=seed,
                initial=initial,
                steps=int(data.get("steps", 50)),
                depth=depth,
                ordering=ordering,
                from_top=bool(generation.get("from_top", False)),
                mode=cast(SolveMode, mode),
                presentation=presentation,
                analysis=parse_analysis(_section(data, "analysis", required=False)),
                output=parse_output(_section(data, "output", required=False)),
                verify=parse_verify(_section(data, "verify", required=False)),
            )
        except ConfigError:
            raise
        except (PolygenError, TypeError, ValueError, KeyError) as error:
            raise ConfigError(f"Invalid run configuration: {error}") from error

    @classmethod
    def from_preset(cls, preset: ExamplePreset) -> "RunConfig":
        multipliers = preset.multipliers
        if preset.seed_kind == "affine":
            params: AffineParams | SecondOrderParams = AffineParams.from_multipliers(
                multipliers, preset.offsets
            )
        else:
            params = SecondOrderParams.from_multipliers(multipliers, preset.offsets)
        seed = SeedSpec(preset.seed_kind, params, len(multipliers))
        presentation = (
            OrderingRule.contiguity()
            if preset.ordering == "contiguity"
            else OrderingRule.lexicographic()
        )
        return cls(
            seed=seed,
            initial=tuple(RootSet(roots) for roots in preset.initial),
            steps=preset.analysis_steps,
            depth=preset.depth,
            from_top=preset.depth > 0,
            presentation=presentation,
            analysis=AnalysisConfig(max_period=preset.max_period),
            output=OutputConfig(
                name=f"example_{preset.name}", plane_plot=preset.plane_plot
            ),
        )

    def with_overrides(
        self,
        *,
        steps: int | None = None,
        tol: float | None = None,
        out: Path | None = None,
        formats: Sequence[OutputFormat] | None = None,
    ) -> "RunConfig":
        """Apply command-line flags on top of the file values."""
        config = self
        if steps is not None:
            config = replace(config, steps=steps)
        if tol is not None:
            config = replace(
                config,
                analysis=replace(config.analysis, tol=tol),
                verify=replace(config.verify, tol=tol),
            )
        if out is not None:
            config = replace(config, output=replace(config.output, directory=out))
        if formats:
            config = replace(
                config, output=replace(config.output, formats=tuple(formats))
            )
        return config


@dataclass(frozen=True)
class SweepConfig:
    axes: tuple[tuple[Multiplier, ...], ...]
    b: tuple[complex, ...]
    initial: RootSet
    steps: int = 200
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    output: OutputConfig = field(
        default_factory=lambda: OutputConfig(name="sweep", formats=("csv",))
    )

    def __post_init__(self) -> None:
        if not self.axes or any(not axis for axis in self.axes):
            raise ConfigError("Every sweep axis needs at least one multiplier")
        if len(self.b) != len(self.axes):
            raise ConfigError(
                f"Sweep has {len(self.axes)} axes but {len(self.b)} offsets"
            )
        if self.initial.n != len(self.axes):
            raise ConfigError(
                f"Sweep initial set needs {len(self.axes)} roots, got {self.initial.n}"
            )

    @property
    def cell_count(self) -> int:
        count = 1
        for axis in self.axes:
            count *= len(axis)
        return count

    @classmethod
    def from_dict(cls, data: RawConfig) -> "SweepConfig":
        _check_schema(data)
        try:
            sweep = _section(data, "sweep")
            axes = tuple(
                tuple(parse_multiplier(entry) for entry in axis)
                for axis in _list(sweep, "axes")
            )
            return cls(
                axes=axes,
                b=tuple(parse_complex(value) for value in _list(sweep, "b")),
                initial=RootSet(
                    tuple(parse_complex(value) for value in _list(sweep, "initial"))
                ),
                steps=int(sweep.get("steps", 200)),
                analysis=parse_analysis(_section(data, "analysis", required=False)),
                output=parse_output(
                    _section(data, "output", required=False),
                    OutputConfig(name="sweep", formats=("csv",)),
                ),
            )
        except ConfigError:
            raise
        except (PolygenError, TypeError, ValueError, KeyError) as error:
            raise ConfigError(f"Invalid sweep configuration: {error}") from error


def _check_schema(data: RawConfig) -> None:
    if not isinstance(data, Mapping):
        raise ConfigError("Configuration must be a JSON object")
    version = data.get("schema")
    if version != SCHEMA_VERSION:
        raise ConfigError(
            f"Unsupported configuration schema {version!r}, expected {SCHEMA_VERSION}"
        )


def _section(data: RawConfig, key: str, required: bool = True) -> RawConfig:
    value = data.get(key)
    if value is None:
        if required:
            raise ConfigError(f"Missing '{key}' section")
        return {}
    if not isinstance(value, Mapping):
        raise ConfigError(f"'{key}' must be an object")
    return value


def _list(data: RawConfig, key: str) -> list[Any]:
    value = data.get(key)
    if not isinstance(value, list):
        raise ConfigError(f"'{key}' must be a list")
    return value


def parse_complex(value: Any) -> complex:
    if isinstance(value, bool):
        raise ConfigError(f"Expected a number or [re, im], got {value!r}")
    if isinstance(value, int | float):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(part, int | float) for part in value)
    ):
        return complex(float(value[0]), float(value[1]))
    raise ConfigError(f"Expected a number or [re, im], got {value!r}")


def parse_multiplier(value: Any) -> Multiplier:
    if isinstance(value, Mapping):
        rotation = value.get("rotation")
        if not (isinstance(rotation, list) and len(rotation) == 2):
            raise ConfigError(f"Rotation must be [q, p], got {rotation!r}")
        q, p = (int(part) for part in rotation)
        modulus = float(value.get("modulus", 1.0))
        exact = RationalRotation(q, p)
        label = f"rot({q}/{p})" if modulus == 1.0 else f"{modulus!r}*rot({q}/{p})"
        return Multiplier(
            rotation_multiplier(q, p, modulus),
            exact if modulus == 1.0 else None,
            label,
        )
    number = parse_complex(value)
    return Multiplier(number, None, repr(number))


def _rotations(
    multipliers: Sequence[Multiplier],
) -> tuple[RationalRotation | None, ...] | None:
    rotations = tuple(entry.rotation for entry in multipliers)
    return rotations if any(rotations) else None


def _table(data: RawConfig, key: str) -> CyclicSchedule:
    rows = _list(data, key)
    return CyclicSchedule(
        tuple(tuple(parse_complex(value) for value in row) for row in rows)
    )


def parse_seed(data: RawConfig) -> SeedSpec:
    kind = data.get("kind")
    if kind in ("affine", "q-affine"):
        a = [parse_multiplier(value) for value in _list(data, "a")]
        b = tuple(parse_complex(value) for value in _list(data, "b"))
        params = AffineParams(tuple(entry.value for entry in a), b, _rotations(a))
        q = parse_complex(data["q"]) if kind == "q-affine" and "q" in data else None
        return SeedSpec(kind, params, len(params.a), q)
    if kind == "nonautonomous-linear":
        g = _table(data, "g")
        h = _table(data, "h")
        arity = len(g.rows[0])
        if len(h.rows[0]) != arity:
            raise ConfigError("Tables 'g' and 'h' need rows of one length")
        return SeedSpec(kind, NonautonomousParams(g, h), arity)
    if kind == "second-order-multiplicative":
        if "a_table" in data or "b_table" in data:
            a_table = _table(data, "a_table")
            b_table = _table(data, "b_table")
            arity = len(a_table.rows[0])
            return SeedSpec(kind, SecondOrderParams(a_table, b_table), arity)
        a = [parse_multiplier(value) for value in _list(data, "a")]
        b = tuple(parse_complex(value) for value in _list(data, "b"))
        second = SecondOrderParams.constant(
            tuple(entry.value for entry in a), b, _rotations(a)
        )
        return SeedSpec(kind, second, len(a))
    raise ConfigError(f"Unknown seed kind {kind!r}")


def parse_ordering(data: Any, arity: int) -> OrderingRule:
    if isinstance(data, str):
        data = {"kind": data}
    if not isinstance(data, Mapping):
        raise ConfigError(f"Ordering rule must be a name or an object, got {data!r}")
    kind = data.get("kind")
    if kind == "lexicographic":
        return OrderingRule.lexicographic()
    if kind == "contiguity":
        return OrderingRule.contiguity()
    if kind == "fixed-mu":
        return OrderingRule("fixed-mu", index=PermutationIndex(int(data["mu"]), arity))
    if kind == "random":
        return OrderingRule.random(int(data["seed"]))
    raise ConfigError(f"Unknown ordering rule {kind!r}")


def parse_analysis(data: RawConfig) -> AnalysisConfig:
    defaults = AnalysisConfig()
    return AnalysisConfig(
        max_period=int(data.get("max_period", defaults.max_period)),
        tol=float(data.get("tol", defaults.tol)),
        asymptotic_tol=float(data.get("asymptotic_tol", defaults.asymptotic_tol)),
        divergence_threshold=float(
            data.get("divergence_threshold", defaults.divergence_threshold)
        ),
        ordered=bool(data.get("ordered", defaults.ordered)),
    )


def parse_output(data: RawConfig, defaults: OutputConfig | None = None) -> OutputConfig:
    defaults = defaults or OutputConfig()
    formats = tuple(data.get("formats", defaults.formats))
    unknown = [name for name in formats if name not in FORMATS]
    if unknown:
        raise ConfigError(f"Unknown output formats {unknown}")
    return OutputConfig(
        directory=Path(data.get("dir", defaults.directory)),
        name=str(data.get("name", defaults.name)),
        formats=cast(tuple[OutputFormat, ...], formats),
        plane_plot=bool(data.get("plane_plot", defaults.plane_plot)),
    )


def parse_verify(data: RawConfig) -> VerifyConfig:
    return VerifyConfig(
        tol=float(data.get("tol", VERIFY_TOL)),
        perturbation=parse_complex(data.get("perturbation", 0.0)),
    )


def load_json(path: Path) -> RawConfig:
    try:
        with path.open(encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as error:
        raise ConfigError(f"Cannot read configuration {path}: {error}") from error
    except json.JSONDecodeError as error:
        raise ConfigError(f"{path} is not valid JSON: {error}") from error
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must hold a JSON object")
    logger.debug("Loaded configuration %s", path)
    return data


def load_run_config(path: Path) -> RunConfig:
    return RunConfig.from_dict(load_json(path))


def load_sweep_config(path: Path) -> SweepConfig:
    return SweepConfig.from_dict(load_json(path))


def preset(name: str) -> ExamplePreset:
    try:
        return PRESETS[name]
    except KeyError:
        raise UnknownPresetError(
            f"Unknown preset {name!r}; choose from {', '.join(PRESETS)}"
        ) from None
