"""Exact rational symmetric forms.

Everything here works over :class:`fractions.Fraction`; there is no floating
point path.  A form is an immutable value carrying its Gram matrix and a
label per basis element, so that restrictions and projections can be taken
by name rather than by position.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateCore, DuplicateLabel, InvalidInput, UnknownLabel

__all__ = [
    "RationalSymmetricForm",
    "InertiaTriple",
    "parse_rational",
    "format_rational",
    "inertia",
    "direct_sum",
    "restrict",
    "schur_project",
    "add_scaled_identity",
    "parse_matrix_text",
    "load_matrix",
]


def parse_rational(value) -> Fraction:
    """Read an integer or a ``"p/q"`` string.  Floats and bools are refused."""
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE_ "):
            raise InvalidInput(f"not a rational: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"not a rational: {value!r}") from exc
    raise InvalidInput(f"not a rational: {value!r}")


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_to_json(x: Fraction):
    """Integers stay JSON numbers, everything else becomes a ``"p/q"`` string."""
    return x.numerator if x.denominator == 1 else format_rational(x)


class InertiaTriple(NamedTuple):
    sigma_plus: int
    sigma_minus: int
    sigma_zero: int

    def __add__(self, other):  # componentwise, unlike tuple concatenation
        return InertiaTriple(
            self.sigma_plus + other.sigma_plus,
            self.sigma_minus + other.sigma_minus,
            self.sigma_zero + other.sigma_zero,
        )

    def __str__(self):
        return f"({self.sigma_plus}, {self.sigma_minus}, {self.sigma_zero})"


@dataclass(frozen=True)
class RationalSymmetricForm:
    entries: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        rows = tuple(tuple(parse_rational(v) for v in row) for row in self.entries)
        labels = tuple(str(lab) for lab in self.labels)
        n = len(rows)
        if len(labels) != n:
            raise InvalidInput(f"{len(labels)} labels for a {n}x{n} matrix")
        if len(set(labels)) != n:
            raise DuplicateLabel(f"duplicate labels in {labels}")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidInput(f"row {i + 1} has {len(row)} entries, expected {n}")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidInput(
                        f"matrix is not symmetric at ({i + 1},{j + 1}): "
                        f"{format_rational(rows[i][j])} != {format_rational(rows[j][i])}"
                    )
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], labels: Iterable[str] | None = None):
        rows = [list(r) for r in rows]
        if labels is None:
            labels = [f"w{i + 1}" for i in range(len(rows))]
        return cls(tuple(tuple(r) for r in rows), tuple(labels))

    @classmethod
    def diagonal(cls, values: Sequence, labels: Iterable[str] | None = None):
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls.from_rows(rows, labels)

    @classmethod
    def zero_dim(cls):
        return cls((), ())

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"unknown basis label {label!r}") from None

    def __getitem__(self, key: tuple[str, str]) -> Fraction:
        a, b = key
        return self.entries[self.index(a)][self.index(b)]

    def relabel(self, labels: Iterable[str]) -> "RationalSymmetricForm":
        return RationalSymmetricForm(self.entries, tuple(labels))

    def reorder(self, labels: Sequence[str]) -> "RationalSymmetricForm":
        """Simultaneous row/column permutation into the given label order."""
        if sorted(labels) != sorted(self.labels):
            raise UnknownLabel(f"{list(labels)} is not a permutation of {list(self.labels)}")
        return restrict(self, labels)

    def rows_as_strings(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.entries]

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "matrix": [[rational_to_json(v) for v in row] for row in self.entries],
        }

    def __str__(self):
        if self.dim == 0:
            return "(0-dim)"
        cells = self.rows_as_strings()
        width = max(len(c) for row in cells for c in row)
        lab_w = max(len(lab) for lab in self.labels)
        lines = []
        for lab, row in zip(self.labels, cells):
            lines.append(f"{lab:>{lab_w}} [ " + "  ".join(c.rjust(width) for c in row) + " ]")
        return "\n".join(lines)


def _diagonal_signs(rows: list[list[Fraction]]) -> InertiaTriple:
    """Symmetric Gaussian elimination by congruence; consumes ``rows``."""
    n = len(rows)
    alive = list(range(n))
    plus = minus = 0
    while alive:
        pivot = next((i for i in alive if rows[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in alive for j in alive if i != j and rows[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j gives q(e_i, e_i) = 2 q(e_i, e_j) != 0
            for c in range(n):
                rows[i][c] += rows[j][c]
            for r in range(n):
                rows[r][i] += rows[r][j]
            pivot = i
        p = rows[pivot][pivot]
        if p > 0:
            plus += 1
        else:
            minus += 1
        alive.remove(pivot)
        for r in alive:
            f = rows[r][pivot] / p
            if f:
                for c in alive:
                    rows[r][c] -= f * rows[pivot][c]
    return InertiaTriple(plus, minus, n - plus - minus)


def inertia(form: RationalSymmetricForm) -> InertiaTriple:
    """Sylvester inertia (sigma_plus, sigma_minus, sigma_zero) of ``form``."""
    return _diagonal_signs([list(row) for row in form.entries])


def direct_sum(a: RationalSymmetricForm, b: RationalSymmetricForm) -> RationalSymmetricForm:
    common = set(a.labels) & set(b.labels)
    if common:
        raise DuplicateLabel(f"labels shared by both summands: {sorted(common)}")
    n, m = a.dim, b.dim
    rows = [list(r) + [Fraction(0)] * m for r in a.entries]
    rows += [[Fraction(0)] * n + list(r) for r in b.entries]
    return RationalSymmetricForm.from_rows(rows, a.labels + b.labels)


def restrict(form: RationalSymmetricForm, subset: Sequence[str]) -> RationalSymmetricForm:
    idx = [form.index(lab) for lab in subset]
    rows = [[form.entries[i][j] for j in idx] for i in idx]
    return RationalSymmetricForm.from_rows(rows, [form.labels[i] for i in idx])


def _solve(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]] | None:
    """Gauss-Jordan solve of ``a x = b``; None when ``a`` is singular."""
    n = len(a)
    m = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:n + m] for row in aug]


def schur_project(form: RationalSymmetricForm, core: Sequence[str]) -> RationalSymmetricForm:
    """Eliminate the ``core`` variables by completing squares.

    Returns the form on the remaining labels (original order) with entries
    ``q_ij - q_iE q_EE^{-1} q_Ej``.  Raises :class:`DegenerateCore` when the
    core block is singular.
    """
    core_idx = [form.index(lab) for lab in core]
    if len(set(core_idx)) != len(core_idx):
        raise DuplicateLabel(f"core lists a label twice: {list(core)}")
    rest_idx = [i for i in range(form.dim) if i not in set(core_idx)]
    q = form.entries
    rest_rows = [[q[i][j] for j in rest_idx] for i in rest_idx]
    if core_idx:
        q_ee = [[q[i][j] for j in core_idx] for i in core_idx]
        q_er = [[q[i][j] for j in rest_idx] for i in core_idx]
        if not rest_idx:
            if _solve(q_ee, [[Fraction(0)] for _ in core_idx]) is None:
                raise DegenerateCore(f"restriction to {list(core)} is degenerate")
        else:
            x = _solve(q_ee, q_er)
            if x is None:
                raise DegenerateCore(f"restriction to {list(core)} is degenerate")
            for a in range(len(rest_idx)):
                for b in range(len(rest_idx)):
                    rest_rows[a][b] -= sum(q_er[k][a] * x[k][b] for k in range(len(core_idx)))
    return RationalSymmetricForm.from_rows(rest_rows, [form.labels[i] for i in rest_idx])


def add_scaled_identity(form: RationalSymmetricForm, c) -> RationalSymmetricForm:
    c = parse_rational(c)
    rows = [[v + c if i == j else v for j, v in enumerate(row)] for i, row in enumerate(form.entries)]
    return RationalSymmetricForm.from_rows(rows, form.labels)


def parse_matrix_text(text: str, labels: Sequence[str] | None = None) -> RationalSymmetricForm:
    """Parse whitespace-separated rows of integers or ``p/q`` entries.

    Blank lines and ``#`` comments are skipped.  Errors name the line.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append((lineno, [parse_rational(tok) for tok in line.split()]))
        except InvalidInput as exc:
            raise InvalidInput(f"line {lineno}: {exc}") from None
    n = len(rows)
    for lineno, row in rows:
        if len(row) != n:
            raise InvalidInput(f"line {lineno}: expected {n} entries, found {len(row)}")
    return RationalSymmetricForm.from_rows([r for _, r in rows], labels)


def load_matrix(path) -> RationalSymmetricForm:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())
