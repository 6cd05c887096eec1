"""Exact dense tensors over Q(zeta_24) stored as integer planes.

A tensor is ``sum_k planes[k] * zeta^k / den`` with ``k`` in 0..7 and each
plane an integer ndarray.  Contractions run plane by plane through numpy.  When
the worst-case magnitude of a partial sum fits in 53 bits the contraction is
done in float64 (every intermediate is an exactly representable integer, so
BLAS gives the exact answer); otherwise int64 is used, and object arrays of
Python ints past 62 bits.  Results are always exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Callable, Iterable

import numpy as np

from .exactfield import DEGREE, Scalar

_FLOAT_LIMIT = 2 ** 53
_INT_LIMIT = 2 ** 62


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.flat)
    return int(np.max(np.abs(a)))


def _fits(a: np.ndarray) -> np.ndarray:
    """Downcast an object array to int64 when every entry fits."""
    if a.dtype == object and (a.size == 0 or _maxabs(a) < _INT_LIMIT):
        return a.astype(np.int64)
    return a


def _as_object(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return a
    out = np.empty(a.size, dtype=object)
    out[:] = [int(v) for v in a.flat]
    return out.reshape(a.shape)


def _exact_bilinear(fn: Callable, x: np.ndarray, y: np.ndarray, length: int) -> np.ndarray:
    """Evaluate a bilinear numpy map exactly on integer arrays."""
    bx, by = _maxabs(x), _maxabs(y)
    bound = bx * by * max(length, 1)
    if bound == 0:
        return fn(np.zeros(x.shape, dtype=np.int64), np.zeros(y.shape, dtype=np.int64))
    if x.dtype != object and y.dtype != object:
        if bound < _FLOAT_LIMIT:
            r = fn(x.astype(np.float64), y.astype(np.float64))
            return np.rint(r).astype(np.int64)
        if bound < _INT_LIMIT:
            return fn(x, y)
    return _fits(fn(_as_object(x), _as_object(y)))


def _reduce_planes(raw: dict[int, np.ndarray]) -> dict[int, np.ndarray]:
    while any(k >= DEGREE for k in raw):
        m = max(raw)
        v = raw.pop(m)
        for t, sgn in ((m - 4, 1), (m - 8, -1)):
            if t in raw:
                raw[t] = _add_int(raw[t], v if sgn > 0 else -v)
            else:
                raw[t] = v.copy() if sgn > 0 else -v
    return {k: v for k, v in raw.items() if np.any(v)}


def _add_int(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype == object or b.dtype == object:
        return _fits(_as_object(a) + _as_object(b))
    if _maxabs(a) + _maxabs(b) >= _INT_LIMIT:
        return _fits(_as_object(a) + _as_object(b))
    return a + b


def _scale_int(a: np.ndarray, k: int) -> np.ndarray:
    if k == 1:
        return a
    if a.dtype == object or _maxabs(a) * abs(k) >= _INT_LIMIT:
        return _fits(_as_object(a) * k)
    return a * k


@dataclass
class ZTensor:
    """Exact tensor over Q(zeta_24); only nonzero planes are stored."""

    shape: tuple[int, ...]
    planes: dict[int, np.ndarray] = field(default_factory=dict)
    den: int = 1

    # construction

    @staticmethod
    def zeros(shape: Iterable[int]) -> ZTensor:
        return ZTensor(tuple(shape), {}, 1)

    @staticmethod
    def from_int(arr, den: int = 1) -> ZTensor:
        a = np.asarray(arr)
        if a.dtype != object:
            a = a.astype(np.int64)
        else:
            a = _fits(a)
        t = ZTensor(a.shape, {0: a} if np.any(a) else {}, den)
        return t.normalized()

    @staticmethod
    def from_scalars(arr) -> ZTensor:
        a = np.asarray(arr, dtype=object)
        shape = a.shape
        flat = [Scalar.of(v) for v in a.flat]
        den = 1
        for s in flat:
            if s.den != 1:
                den = den * s.den // gcd(den, s.den)
        planes = {}
        for k in range(DEGREE):
            vals = [s.num[k] * (den // s.den) for s in flat]
            if any(vals):
                p = np.empty(len(vals), dtype=object)
                p[:] = vals
                planes[k] = _fits(p.reshape(shape))
        return ZTensor(shape, planes, den).normalized()

    @staticmethod
    def identity(n: int) -> ZTensor:
        return ZTensor.from_int(np.eye(n, dtype=np.int64))

    @staticmethod
    def scalar_times_int(s: Scalar, arr) -> ZTensor:
        return ZTensor.from_int(arr).scale(s)

    # conversion

    def to_scalars(self) -> np.ndarray:
        out = np.empty(self.shape, dtype=object)
        flat_planes = {k: v.reshape(-1) for k, v in self.planes.items()}
        n = prod(self.shape)
        res = []
        for i in range(n):
            res.append(Scalar.from_ints([int(flat_planes[k][i]) if k in flat_planes else 0
                                         for k in range(DEGREE)], self.den))
        out.reshape(-1)[:] = res
        return out

    def item(self, *idx) -> Scalar:
        return Scalar.from_ints([int(self.planes[k][idx]) if k in self.planes else 0
                                 for k in range(DEGREE)], self.den)

    def is_rational(self) -> bool:
        return all(k == 0 for k in self.planes)

    def int_plane(self, k: int = 0) -> np.ndarray:
        p = self.planes.get(k)
        return np.zeros(self.shape, dtype=np.int64) if p is None else p

    # structure

    def normalized(self) -> ZTensor:
        planes = {k: v for k, v in self.planes.items() if np.any(v)}
        if not planes:
            return ZTensor(self.shape, {}, 1)
        g = self.den
        for v in planes.values():
            if g == 1:
                break
            if v.dtype == object:
                for x in v.flat:
                    g = gcd(g, int(x))
            else:
                g = gcd(g, int(np.gcd.reduce(v.reshape(-1))))
        if g > 1:
            planes = {k: (v // g) for k, v in planes.items()}
        return ZTensor(self.shape, planes, self.den // g)

    def _map(self, fn: Callable[[np.ndarray], np.ndarray]) -> ZTensor:
        planes = {k: fn(v) for k, v in self.planes.items()}
        shape = fn(np.zeros(self.shape, dtype=np.int8)).shape
        return ZTensor(shape, {k: v for k, v in planes.items() if np.any(v)}, self.den)

    def transpose(self, *axes) -> ZTensor:
        return self._map(lambda v: np.transpose(v, axes if axes else None))

    @property
    def T(self) -> ZTensor:
        return self.transpose()

    def reshape(self, *shape) -> ZTensor:
        return self._map(lambda v: v.reshape(*shape))

    def __getitem__(self, idx) -> ZTensor:
        return self._map(lambda v: v[idx])

    def take(self, indices, axis: int) -> ZTensor:
        return self._map(lambda v: np.take(v, indices, axis=axis))

    def copy(self) -> ZTensor:
        return ZTensor(self.shape, {k: v.copy() for k, v in self.planes.items()}, self.den)

    # arithmetic

    def _common(self, other: ZTensor) -> tuple[dict, dict, int]:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        if self.den == other.den:
            return self.planes, other.planes, self.den
        l = self.den * other.den // gcd(self.den, other.den)
        fa, fb = l // self.den, l // other.den
        return ({k: _scale_int(v, fa) for k, v in self.planes.items()},
                {k: _scale_int(v, fb) for k, v in other.planes.items()}, l)

    def __add__(self, other: ZTensor) -> ZTensor:
        a, b, den = self._common(other)
        planes = dict(a)
        for k, v in b.items():
            planes[k] = _add_int(planes[k], v) if k in planes else v
        return ZTensor(self.shape, planes, den).normalized()

    def __neg__(self) -> ZTensor:
        return ZTensor(self.shape, {k: _scale_int(v, -1) for k, v in self.planes.items()}, self.den)

    def __sub__(self, other: ZTensor) -> ZTensor:
        return self + (-other)

    def scale(self, s: Scalar | int) -> ZTensor:
        s = Scalar.of(s)
        raw: dict[int, np.ndarray] = {}
        for j, v in self.planes.items():
            for k, c in enumerate(s.num):
                if c:
                    t = _scale_int(v, c)
                    raw[j + k] = _add_int(raw[j + k], t) if j + k in raw else t
        return ZTensor(self.shape, _reduce_planes(raw), self.den * s.den).normalized()

    def is_zero(self) -> bool:
        return not any(np.any(v) for v in self.planes.values())

    def nonzero_mask(self) -> np.ndarray:
        m = np.zeros(self.shape, dtype=bool)
        for v in self.planes.values():
            m |= (v != 0)
        return m

    def equals(self, other: ZTensor) -> bool:
        return self.shape == other.shape and (self - other).is_zero()

    def bilinear(self, other: ZTensor, fn: Callable, length: int) -> ZTensor:
        """Apply a bilinear numpy map plane-wise; ``length`` bounds the number of summed terms."""
        raw: dict[int, np.ndarray] = {}
        shape = None
        for j, x in self.planes.items():
            for k, y in other.planes.items():
                r = _exact_bilinear(fn, x, y, length)
                shape = r.shape
                raw[j + k] = _add_int(raw[j + k], r) if j + k in raw else r
        if shape is None:
            shape = fn(np.zeros(self.shape, dtype=np.float64),
                       np.zeros(other.shape, dtype=np.float64)).shape
            return ZTensor(shape, {}, 1)
        return ZTensor(shape, _reduce_planes(raw), self.den * other.den).normalized()

    def tensordot(self, other: ZTensor, axes) -> ZTensor:
        if isinstance(axes, int):
            length = prod(self.shape[len(self.shape) - axes:])
        else:
            length = prod(self.shape[a] for a in axes[0])
        return self.bilinear(other, lambda x, y: np.tensordot(x, y, axes=axes), length)

    def __matmul__(self, other: ZTensor) -> ZTensor:
        return self.bilinear(other, lambda x, y: x @ y, self.shape[-1])

    def einsum(self, spec: str, other: ZTensor) -> ZTensor:
        ins, _ = spec.split("->")
        a, b = ins.split(",")
        sizes = dict(zip(a, self.shape))
        sizes.update(zip(b, other.shape))
        out = spec.split("->")[1]
        length = prod(sizes[c] for c in (set(a) | set(b)) - set(out))
        return self.bilinear(other, lambda x, y: np.einsum(spec, x, y, optimize=True), length)


def stack(tensors: list[ZTensor], axis: int = 0) -> ZTensor:
    den = 1
    for t in tensors:
        den = den * t.den // gcd(den, t.den)
    keys = sorted({k for t in tensors for k in t.planes})
    planes = {}
    for k in keys:
        parts = [_scale_int(t.int_plane(k), den // t.den) for t in tensors]
        if any(p.dtype == object for p in parts):
            parts = [_as_object(p) for p in parts]
        planes[k] = _fits(np.stack(parts, axis=axis))
    shape = np.stack([np.zeros(t.shape, dtype=np.int8) for t in tensors], axis=axis).shape
    return ZTensor(shape, planes, den).normalized()


def concatenate(tensors: list[ZTensor], axis: int = 0) -> ZTensor:
    den = 1
    for t in tensors:
        den = den * t.den // gcd(den, t.den)
    keys = sorted({k for t in tensors for k in t.planes})
    planes = {}
    for k in keys:
        parts = [_scale_int(t.int_plane(k), den // t.den) for t in tensors]
        if any(p.dtype == object for p in parts):
            parts = [_as_object(p) for p in parts]
        planes[k] = _fits(np.concatenate(parts, axis=axis))
    shape = np.concatenate([np.zeros(t.shape, dtype=np.int8) for t in tensors], axis=axis).shape
    return ZTensor(shape, planes, den).normalized()
