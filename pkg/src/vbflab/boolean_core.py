"""Single-output Boolean functions: truth tables, ANF, degree, weight.

Index convention (fixed for the whole package): the point x = (x1, ..., xn)
is the integer sum x_i * 2^(i-1), i.e. x1 lives in the least significant bit.
"""

from dataclasses import dataclass, field

from .gf2 import popcount

MAX_VARS = 24


@dataclass(frozen=True)
class BooleanFunction:
    """Truth table of f on n variables; table[x] = f(x) for x in [0, 2^n)."""

    n: int
    table: tuple

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"variable count must be in [1, {MAX_VARS}], got {self.n}")
        if len(self.table) != 1 << self.n:
            raise ValueError(
                f"table length {len(self.table)} does not match 2^{self.n}"
            )
        if any(bit not in (0, 1) for bit in self.table):
            raise ValueError("truth table entries must be 0 or 1")
        object.__setattr__(self, "table", tuple(self.table))

    @property
    def size(self) -> int:
        return 1 << self.n


@dataclass(frozen=True)
class AnfPolynomial:
    """Set of monomials over variables {1..n}; the empty subset is the term 1."""

    n: int
    monomials: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"variable count must be in [1, {MAX_VARS}], got {self.n}")
        mono = frozenset(frozenset(m) for m in self.monomials)
        for m in mono:
            if any(not (1 <= i <= self.n) for i in m):
                raise ValueError(f"monomial {sorted(m)} uses a variable outside 1..{self.n}")
        object.__setattr__(self, "monomials", mono)

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)


def mobius_transform(bits: list) -> list:
    """In-place binary Moebius/zeta transform; self-inverse over F2."""
    size = len(bits)
    step = 1
    while step < size:
        for start in range(0, size, step << 1):
            for j in range(start, start + step):
                bits[j + step] ^= bits[j]
        step <<= 1
    return bits


def _monomial_mask(monomial) -> int:
    mask = 0
    for i in monomial:
        mask |= 1 << (i - 1)
    return mask


def _mask_monomial(mask: int) -> frozenset:
    return frozenset(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


def truth_table_from_anf(p: AnfPolynomial) -> BooleanFunction:
    """Evaluate the polynomial at every point via the zeta transform."""
    coeffs = [0] * (1 << p.n)
    for m in p.monomials:
        coeffs[_monomial_mask(m)] = 1
    return BooleanFunction(p.n, tuple(mobius_transform(coeffs)))


def anf_from_truth_table(f: BooleanFunction) -> AnfPolynomial:
    """Inverse of truth_table_from_anf (the transform is an involution)."""
    coeffs = mobius_transform(list(f.table))
    monos = frozenset(_mask_monomial(mask) for mask, c in enumerate(coeffs) if c)
    return AnfPolynomial(f.n, monos)


def degree(f: BooleanFunction) -> int:
    """Algebraic degree; 0 for the constant functions."""
    coeffs = mobius_transform(list(f.table))
    return max((popcount(mask) for mask, c in enumerate(coeffs) if c), default=0)


def weight(f: BooleanFunction) -> int:
    """Number of inputs mapped to 1."""
    return sum(f.table)


class AnfSyntaxError(ValueError):
    """Malformed ANF text; carries 1-based line and column of the offence."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


def _tokenize_anf(text: str):
    """Yield (token, line, col) triples; tokens are '+', '*', or atoms."""
    line = 1
    col = 1
    atom = ""
    atom_pos = (1, 1)
    for ch in text:
        if ch == "\n":
            if atom:
                yield atom, atom_pos[0], atom_pos[1]
                atom = ""
            line += 1
            col = 1
            continue
        if ch.isspace():
            if atom:
                yield atom, atom_pos[0], atom_pos[1]
                atom = ""
        elif ch in "+*":
            if atom:
                yield atom, atom_pos[0], atom_pos[1]
                atom = ""
            yield ch, line, col
        else:
            if not atom:
                atom_pos = (line, col)
            atom += ch
        col += 1
    if atom:
        yield atom, atom_pos[0], atom_pos[1]


def parse_anf(text: str, n: int) -> AnfPolynomial:
    """Parse the `x1*x2 + x1 + 1` grammar; `0` denotes the zero polynomial.

    Terms are '+'-separated; a term is `1`, `0`, or a '*'-separated product
    of variables x1..x<n>. Whitespace is ignored. Repeated monomials cancel
    in pairs (coefficients live in F2).
    """
    tokens = list(_tokenize_anf(text))
    if not tokens:
        raise AnfSyntaxError("empty ANF", 1, 1)

    monomials: set = set()
    term_vars: set = set()
    term_is_zero = False
    term_has_const = False
    term_open = False   # parsed at least one atom of the current term
    expect_atom = True  # next token must be an atom (start, after '+' or '*')
    last = (1, 1)

    def close_term(pos):
        nonlocal term_vars, term_is_zero, term_has_const, term_open
        if not term_open:
            raise AnfSyntaxError("empty term", pos[0], pos[1])
        if expect_atom:
            raise AnfSyntaxError("product with missing right factor", pos[0], pos[1])
        if not term_is_zero:
            mono = frozenset(term_vars)
            if mono in monomials:
                monomials.discard(mono)
            else:
                monomials.add(mono)
        term_vars = set()
        term_is_zero = False
        term_has_const = False
        term_open = False

    for tok, tline, tcol in tokens:
        last = (tline, tcol)
        if tok == "+":
            close_term((tline, tcol))
            expect_atom = True
        elif tok == "*":
            if not term_open or expect_atom:
                raise AnfSyntaxError("product with missing left factor", tline, tcol)
            if term_has_const:
                raise AnfSyntaxError(
                    "constant term cannot appear inside a product", tline, tcol
                )
            expect_atom = True
        else:
            if term_open and not expect_atom:
                raise AnfSyntaxError(
                    f"missing '+' or '*' before {tok!r}", tline, tcol
                )
            if tok in ("0", "1"):
                if term_open:
                    raise AnfSyntaxError(
                        f"constant {tok} cannot appear inside a product", tline, tcol
                    )
                term_has_const = True
                if tok == "0":
                    term_is_zero = True
            elif tok.startswith("x") and tok[1:].isdigit():
                idx = int(tok[1:])
                if not 1 <= idx <= n:
                    raise AnfSyntaxError(
                        f"variable {tok} outside x1..x{n}", tline, tcol
                    )
                term_vars.add(idx)
            else:
                raise AnfSyntaxError(f"malformed ANF token {tok!r}", tline, tcol)
            term_open = True
            expect_atom = False

    close_term(last)
    return AnfPolynomial(n, frozenset(monomials))


def render_anf(p: AnfPolynomial) -> str:
    """Canonical text form: terms by descending degree, then by variable order."""
    if not p.monomials:
        return "0"
    keyed = sorted(p.monomials, key=lambda m: (-len(m), sorted(m)))
    terms = []
    for m in keyed:
        terms.append("*".join(f"x{i}" for i in sorted(m)) if m else "1")
    return " + ".join(terms)
