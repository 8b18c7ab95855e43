"""Thresholds and schedules shared by the clustering constructions."""
from __future__ import annotations

import math
from dataclasses import dataclass

EPS_LIMIT = 1 / 6


class ParameterError(ValueError):
    pass


def phase_count(kappa: int) -> int:
    """ℓ = ceil(log2(κ+1))."""
    if kappa < 1:
        raise ParameterError("kappa must be a positive integer")
    return kappa.bit_length()


def power_at_least(count: int, n: int, num: int, kappa: int) -> bool:
    """count >= n**(num/kappa), decided in exact integer arithmetic."""
    return count ** kappa >= n ** num


def power_greater(count: int, n: int, num: int, kappa: int) -> bool:
    """count > n**(num/kappa), decided in exact integer arithmetic."""
    return count ** kappa > n ** num


def beta_asymptotic(eps: float, kappa: int) -> float:
    """((log2 κ)/ε)^(log2 κ - 2), the asymptotic additive term (display only)."""
    lk = math.log2(kappa)
    if lk == 0:
        return math.inf
    return (lk / eps) ** (lk - 2)


def _check_eps(eps: float, strict: bool = True):
    if not eps > 0:
        raise ParameterError("eps must be positive")
    if strict and eps >= EPS_LIMIT:
        raise ParameterError(f"eps must be below 1/6, got {eps}")
    if not strict and eps > EPS_LIMIT:
        raise ParameterError(f"eps must be at most 1/6, got {eps}")


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    eps: float
    kappa: int
    ell: int
    deg: tuple[float, ...]
    delta: tuple[float, ...]
    radius: tuple[float, ...]

    def degree_met(self, count: int, i: int) -> bool:
        return power_at_least(count, self.n, 2 ** i, self.kappa)

    def depth(self, i: int) -> int:
        """Integer search depth for distance threshold δ_i on unit graphs."""
        return int(math.floor(self.delta[i] + 1e-9))


def radius_schedule(deltas) -> tuple[float, ...]:
    r = [0.0]
    for d in deltas[:-1]:
        r.append(3 * r[-1] + d)
    return tuple(r)


def make_params(n: int, eps: float, kappa: int) -> ConstructionParams:
    _check_eps(eps)
    ell = phase_count(kappa)
    deg = tuple(n ** (2 ** i / kappa) for i in range(ell))
    delta = tuple((1 / eps) ** i for i in range(ell))
    return ConstructionParams(n, eps, kappa, ell, deg, delta, radius_schedule(delta))


@dataclass(frozen=True)
class ScaleParams:
    """Thresholds for the hopset scale handling distances in [2^j, 2^(j+1))."""

    j: int
    R: float
    unit: float
    delta: tuple[float, ...]
    radius: tuple[float, ...]
    base: ConstructionParams

    @property
    def deg(self):
        return self.base.deg


def scale_params(n: int, j: int, eps: float, kappa: int) -> ScaleParams:
    base = make_params(n, eps, kappa)
    R = float(2 ** j)
    unit = R * eps ** (base.ell - 1)
    delta = tuple(R * eps ** (base.ell - 1 - i) for i in range(base.ell))
    return ScaleParams(j, R, unit, delta, radius_schedule(delta), base)
