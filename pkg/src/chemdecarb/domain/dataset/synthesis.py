"""Seeded synthetic asset generator.

The generator is stratified by (region, chemical, process). Standalone strata
create one facility per asset inside the region's sampling polygon; hosted
strata (``host_process`` set) co-locate their assets on existing facilities
whose primary process matches, which is how integrated sites such as a
cracker with butadiene and aromatics units arise.
"""

from __future__ import annotations

import json
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Final

import numpy as np
from shapely.geometry import Point, Polygon

from chemdecarb.config.file_ops import write_text_file
from chemdecarb.core.errors import SynthesisSpecError
from chemdecarb.core.vocabulary import BASE_YEAR, FEEDSTOCKS, PROCESS_CHEMICALS, Chemical, Region
from chemdecarb.domain.dataset.records import AssetRecord, AssetTable

INTENSITY_KEYS: Final[tuple[str, ...]] = ("feedstock", "electricity", "steam", "fuel", "process_co2")
_MAX_SEED: Final[int] = 2**64
_MAX_REJECTIONS: Final[int] = 10_000
_MIN_CAPACITY: Final[float] = 1_000.0


@dataclass(slots=True, frozen=True)
class LogNormal:
    """Log-normal distribution by median and log-space dispersion."""

    median: float
    sigma: float


@dataclass(slots=True, frozen=True)
class Spread:
    """Uniform distribution on ``mean ± spread``."""

    mean: float
    spread: float


LatLon = tuple[float, float]


@dataclass(slots=True, frozen=True)
class RegionFrame:
    """Region-wide sampling defaults."""

    polygon: tuple[LatLon, ...]
    startup_years: tuple[int, int]
    owners: tuple[str, ...]


@dataclass(slots=True, frozen=True)
class Stratum:
    """One (region, chemical, process) population."""

    region: Region
    chemical: Chemical
    process: str
    count: int
    capacity: LogNormal
    utilization: Spread
    feedstock_type: str
    intensities: Mapping[str, Spread] = field(hash=False)
    host_process: str | None = None
    polygon: tuple[LatLon, ...] | None = None
    startup_years: tuple[int, int] | None = None


@dataclass(slots=True, frozen=True)
class SynthesisSpec:
    """Complete generator input; serializable and round-trippable."""

    seed: int
    regions: Mapping[Region, RegionFrame] = field(hash=False)
    strata: tuple[Stratum, ...]

    def __post_init__(self) -> None:
        _validate_spec(self)


def _polygon(vertices: tuple[LatLon, ...], where: str) -> Polygon:
    if len(vertices) < 3:
        raise SynthesisSpecError(f"Polygon for {where} needs at least 3 vertices")
    polygon = Polygon([(lon, lat) for lat, lon in vertices])
    if not polygon.is_valid or polygon.area <= 0:
        raise SynthesisSpecError(f"Polygon for {where} is invalid")
    for lat, lon in vertices:
        if not (-90 <= lat <= 90 and -180 <= lon <= 180):
            raise SynthesisSpecError(f"Polygon for {where} has an out-of-range vertex ({lat}, {lon})")
    return polygon


def _validate_spec(spec: SynthesisSpec) -> None:
    if not 0 <= spec.seed < _MAX_SEED:
        raise SynthesisSpecError(f"Seed must be an unsigned 64-bit integer, got {spec.seed}")
    if not spec.strata or sum(stratum.count for stratum in spec.strata) == 0:
        raise SynthesisSpecError("Synthesis spec is empty: no strata with a positive count")
    for region, frame in spec.regions.items():
        _ = _polygon(frame.polygon, region.value)
        if not frame.owners:
            raise SynthesisSpecError(f"Region {region.value} lists no owners")
        _check_years(frame.startup_years, region.value)
    for index, stratum in enumerate(spec.strata):
        where = f"stratum {index} ({stratum.region.value}/{stratum.chemical.value}/{stratum.process})"
        if stratum.region not in spec.regions:
            raise SynthesisSpecError(f"{where}: region has no sampling frame")
        if stratum.count < 0:
            raise SynthesisSpecError(f"{where}: count must be >= 0")
        chemicals = PROCESS_CHEMICALS.get(stratum.process)
        if chemicals is None or stratum.chemical not in chemicals:
            raise SynthesisSpecError(f"{where}: process does not produce the chemical")
        if stratum.host_process is not None and stratum.host_process not in PROCESS_CHEMICALS:
            raise SynthesisSpecError(f"{where}: unknown host process '{stratum.host_process}'")
        if stratum.feedstock_type not in FEEDSTOCKS:
            raise SynthesisSpecError(f"{where}: unknown feedstock '{stratum.feedstock_type}'")
        if not (stratum.capacity.median > 0 and stratum.capacity.sigma >= 0):
            raise SynthesisSpecError(f"{where}: capacity median must be > 0 and sigma >= 0")
        if not (0 < stratum.utilization.mean <= 1 and stratum.utilization.spread >= 0):
            raise SynthesisSpecError(f"{where}: utilization mean must be in (0, 1]")
        missing = [key for key in INTENSITY_KEYS if key not in stratum.intensities]
        if missing:
            raise SynthesisSpecError(f"{where}: missing intensity '{missing[0]}'")
        for key, dist in stratum.intensities.items():
            if dist.mean < 0 or dist.spread < 0:
                raise SynthesisSpecError(f"{where}: intensity '{key}' must be non-negative")
        if stratum.polygon is not None:
            _ = _polygon(stratum.polygon, where)
        if stratum.startup_years is not None:
            _check_years(stratum.startup_years, where)


def _check_years(years: tuple[int, int], where: str) -> None:
    low, high = years
    if low > high or high > BASE_YEAR:
        raise SynthesisSpecError(f"Startup-year range for {where} must satisfy low <= high <= {BASE_YEAR}")


@dataclass(slots=True)
class _Site:
    facility_id: str
    owner: str
    latitude: float
    longitude: float
    primary_process: str
    chemicals: set[Chemical]


class _RegionState:
    """Per-region identifier counters and facility registry."""

    def __init__(self, region: Region) -> None:
        self.region: Region = region
        self.sites: list[_Site] = []
        self._facility_counter: int = 0
        self._asset_counter: int = 0

    def next_facility_id(self) -> str:
        self._facility_counter += 1
        return f"{self.region.code}-F{self._facility_counter:04d}"

    def next_asset_id(self) -> str:
        self._asset_counter += 1
        return f"{self.region.code}-A{self._asset_counter:04d}"


def _sample_points(rng: np.random.Generator, polygon: Polygon, count: int) -> list[LatLon]:
    min_lon, min_lat, max_lon, max_lat = polygon.bounds
    points: list[LatLon] = []
    attempts = 0
    while len(points) < count:
        lon = float(rng.uniform(min_lon, max_lon))
        lat = float(rng.uniform(min_lat, max_lat))
        attempts += 1
        if polygon.contains(Point(lon, lat)):
            points.append((round(lat, 4), round(lon, 4)))
            attempts = 0
        elif attempts > _MAX_REJECTIONS:
            raise SynthesisSpecError("Polygon rejection sampling failed to converge")
    return points


def _sample_spread(rng: np.random.Generator, dist: Spread, count: int, low: float, high: float) -> np.ndarray:
    values = rng.uniform(dist.mean - dist.spread, dist.mean + dist.spread, size=count)
    return np.round(np.clip(values, low, high), 4)


def sample_capacities(rng: np.random.Generator, dist: LogNormal, count: int) -> np.ndarray:
    """Log-normal capacities rounded to the nearest kilotonne, floored at 1 kt."""

    raw = rng.lognormal(mean=math.log(dist.median), sigma=dist.sigma, size=count)
    return np.maximum(np.round(raw / 1_000.0) * 1_000.0, _MIN_CAPACITY)


def synthesize_assets(spec: SynthesisSpec, seed: int | None = None) -> AssetTable:
    """Generate an asset table; a pure function of ``(spec, seed)``.

    ``seed`` overrides the seed stored in the spec when given.
    """

    effective_seed = spec.seed if seed is None else seed
    if not 0 <= effective_seed < _MAX_SEED:
        raise SynthesisSpecError(f"Seed must be an unsigned 64-bit integer, got {effective_seed}")
    rng = np.random.default_rng(effective_seed)
    states: dict[Region, _RegionState] = {}
    records: list[AssetRecord] = []

    for stratum in spec.strata:
        if stratum.count == 0:
            continue
        frame = spec.regions[stratum.region]
        state = states.setdefault(stratum.region, _RegionState(stratum.region))
        n = stratum.count

        capacities = sample_capacities(rng, stratum.capacity, n)
        utilizations = _sample_spread(rng, stratum.utilization, n, 0.05, 1.0)
        intensities = {key: _sample_spread(rng, stratum.intensities[key], n, 0.0, math.inf) for key in INTENSITY_KEYS}

        if stratum.host_process is None:
            low, high = stratum.startup_years or frame.startup_years
            years = rng.integers(low, high + 1, size=n)
            owner_index = rng.integers(0, len(frame.owners), size=n)
            polygon = _polygon(stratum.polygon or frame.polygon, stratum.region.value)
            points = _sample_points(rng, polygon, n)
            sites: list[_Site] = []
            for i in range(n):
                site = _Site(
                    facility_id=state.next_facility_id(),
                    owner=frame.owners[int(owner_index[i])],
                    latitude=points[i][0],
                    longitude=points[i][1],
                    primary_process=stratum.process,
                    chemicals=set(),
                )
                state.sites.append(site)
                sites.append(site)
        else:
            eligible = [
                site
                for site in state.sites
                if site.primary_process == stratum.host_process and stratum.chemical not in site.chemicals
            ]
            if len(eligible) < n:
                raise SynthesisSpecError(
                    f"Stratum {stratum.region.value}/{stratum.chemical.value} needs {n} hosts with process "
                    + f"'{stratum.host_process}' but only {len(eligible)} are available"
                )
            chosen = rng.choice(len(eligible), size=n, replace=False)
            sites = [eligible[int(index)] for index in chosen]
            low, high = stratum.startup_years or frame.startup_years
            years = rng.integers(low, high + 1, size=n)

        for i, site in enumerate(sites):
            site.chemicals.add(stratum.chemical)
            records.append(
                AssetRecord(
                    asset_id=state.next_asset_id(),
                    facility_id=site.facility_id,
                    owner=site.owner,
                    region=stratum.region,
                    latitude=site.latitude,
                    longitude=site.longitude,
                    startup_year=int(years[i]),
                    chemical=stratum.chemical,
                    process=stratum.process,
                    capacity=float(capacities[i]),
                    utilization=float(utilizations[i]),
                    feedstock_type=stratum.feedstock_type,
                    feedstock_intensity=float(intensities["feedstock"][i]),
                    electricity_intensity=float(intensities["electricity"][i]),
                    steam_intensity=float(intensities["steam"][i]),
                    fuel_intensity=float(intensities["fuel"][i]),
                    process_co2_intensity=float(intensities["process_co2"][i]),
                )
            )

    return AssetTable(records)


def _years(raw: Any, where: str) -> tuple[int, int]:
    try:
        low, high = raw
        return int(low), int(high)
    except (TypeError, ValueError) as exc:
        raise SynthesisSpecError(f"{where}: startup_years must be [low, high]") from exc


def _vertices(raw: Any, where: str) -> tuple[LatLon, ...]:
    try:
        return tuple((float(lat), float(lon)) for lat, lon in raw)
    except (TypeError, ValueError) as exc:
        raise SynthesisSpecError(f"{where}: polygon must be a list of [lat, lon] pairs") from exc


def spec_from_dict(payload: Mapping[str, Any], *, default_seed: int | None = None) -> SynthesisSpec:
    """Build a ``SynthesisSpec`` from its JSON tree.

    ``default_seed`` stands in for a missing ``seed`` key.
    """

    try:
        regions = {
            Region.from_user_input(name): RegionFrame(
                polygon=_vertices(frame["polygon"], name),
                startup_years=_years(frame["startup_years"], name),
                owners=tuple(str(owner) for owner in frame["owners"]),
            )
            for name, frame in payload["regions"].items()
            if not name.startswith("_")
        }
        strata: list[Stratum] = []
        for index, raw in enumerate(payload["strata"]):
            where = f"stratum {index}"
            strata.append(
                Stratum(
                    region=Region.from_user_input(raw["region"]),
                    chemical=Chemical.from_user_input(raw["chemical"]),
                    process=str(raw["process"]),
                    host_process=raw.get("host_process"),
                    count=int(raw["count"]),
                    capacity=LogNormal(float(raw["capacity"]["median"]), float(raw["capacity"]["sigma"])),
                    utilization=Spread(float(raw["utilization"]["mean"]), float(raw["utilization"]["spread"])),
                    feedstock_type=str(raw["feedstock_type"]),
                    intensities={
                        key: Spread(float(value["mean"]), float(value["spread"]))
                        for key, value in raw["intensities"].items()
                    },
                    polygon=_vertices(raw["polygon"], where) if raw.get("polygon") is not None else None,
                    startup_years=_years(raw["startup_years"], where) if raw.get("startup_years") else None,
                )
            )
        seed = payload["seed"] if "seed" in payload or default_seed is None else default_seed
        return SynthesisSpec(seed=int(seed), regions=regions, strata=tuple(strata))
    except KeyError as exc:
        raise SynthesisSpecError(f"Synthesis spec is missing key {exc}") from exc
    except (TypeError, ValueError, AttributeError) as exc:
        raise SynthesisSpecError(f"Malformed synthesis spec: {exc}") from exc


def spec_to_dict(spec: SynthesisSpec) -> dict[str, Any]:
    """Render a spec as its JSON tree; ``spec_from_dict`` inverts it."""

    def stratum_dict(stratum: Stratum) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "region": stratum.region.value,
            "chemical": stratum.chemical.value,
            "process": stratum.process,
            "host_process": stratum.host_process,
            "count": stratum.count,
            "capacity": {"median": stratum.capacity.median, "sigma": stratum.capacity.sigma},
            "utilization": {"mean": stratum.utilization.mean, "spread": stratum.utilization.spread},
            "feedstock_type": stratum.feedstock_type,
            "intensities": {
                key: {"mean": dist.mean, "spread": dist.spread} for key, dist in stratum.intensities.items()
            },
        }
        if stratum.polygon is not None:
            payload["polygon"] = [list(vertex) for vertex in stratum.polygon]
        if stratum.startup_years is not None:
            payload["startup_years"] = list(stratum.startup_years)
        return payload

    return {
        "seed": spec.seed,
        "regions": {
            region.value: {
                "polygon": [list(vertex) for vertex in frame.polygon],
                "startup_years": list(frame.startup_years),
                "owners": list(frame.owners),
            }
            for region, frame in spec.regions.items()
        },
        "strata": [stratum_dict(stratum) for stratum in spec.strata],
    }


def load_synthesis_spec(path: Path, *, default_seed: int | None = None) -> SynthesisSpec:
    """Read a synthesis spec JSON file."""

    if not path.exists():
        raise SynthesisSpecError(f"Synthesis spec not found: {path}")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SynthesisSpecError(f"Synthesis spec {path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise SynthesisSpecError(f"Synthesis spec {path} must be a JSON object")
    return spec_from_dict(payload, default_seed=default_seed)


def dump_synthesis_spec(spec: SynthesisSpec, path: Path) -> Path:
    """Write a synthesis spec JSON file."""

    write_text_file(path, json.dumps(spec_to_dict(spec), indent=2) + "\n")
    return path


__all__ = [
    "INTENSITY_KEYS",
    "LogNormal",
    "RegionFrame",
    "Spread",
    "Stratum",
    "SynthesisSpec",
    "dump_synthesis_spec",
    "load_synthesis_spec",
    "sample_capacities",
    "spec_from_dict",
    "spec_to_dict",
    "synthesize_assets",
]
