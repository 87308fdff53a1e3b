"""Reduced words in the free group F_n.

Generators are ``g1 .. gn`` with aliases ``x = g1`` and ``y = g2``.  The
commutator convention is ``[u, v] = u v u^-1 v^-1`` throughout, so that
``[x^n, y^m] = x^n y^m x^-n y^-m``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Syllable = tuple[int, int]


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[list[int]] = []
    for g, e in syllables:
        if not e:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if not stack[-1][1]:
                stack.pop()
        else:
            stack.append([g, e])
    return tuple((g, e) for g, e in stack)


@dataclass(frozen=True)
class Word:
    n: int
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("number of generators must be positive")
        syl = tuple((int(g), int(e)) for g, e in self.syllables)
        for i, (g, e) in enumerate(syl):
            if not 1 <= g <= self.n:
                raise GeneratorRangeError(f"generator g{g} outside 1..{self.n}")
            if e == 0 or (i and syl[i - 1][0] == g):
                raise ValueError(f"syllables not reduced: {syl}")
        object.__setattr__(self, "syllables", syl)

    @classmethod
    def reduce(cls, n: int, syllables: Iterable[Syllable]) -> "Word":
        return cls(n, _reduce(syllables))

    @classmethod
    def identity(cls, n: int = 2) -> "Word":
        return cls(n, ())

    @classmethod
    def gen(cls, i: int, n: int = 2, power: int = 1) -> "Word":
        return cls.reduce(n, [(i, power)])

    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def letters(self) -> list[Syllable]:
        out = []
        for g, e in self.syllables:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"mismatched generator counts {self.n} and {other.n}")
        return Word.reduce(self.n, self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(self.n, tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        out = Word.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def with_n(self, n: int) -> "Word":
        return Word(n, self.syllables)

    def __str__(self):
        return format_word(self)


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GeneratorRangeError(ValueError):
    pass


# --- text ---------------------------------------------------------------


def _gen_name(g: int, n: int) -> str:
    if n <= 2:
        return "xy"[g - 1]
    return f"g{g}"


def format_word(w: Word) -> str:
    if w.is_identity():
        return "1"
    parts = []
    for g, e in w.syllables:
        name = _gen_name(g, w.n)
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)


_TOK = re.compile(r"\s*(?:(g\d+|x|y)|(-?\d+)|([\^()\[\],]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOK.match(text, pos)
        if not m:
            skip = len(text[pos:]) - len(text[pos:].lstrip())
            raise WordSyntaxError(f"unexpected character {text[pos + skip]!r}", pos + skip)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("gen", m.group(1), start))
        elif m.group(2):
            toks.append(("int", m.group(2), start))
        else:
            toks.append(("op", m.group(3), start))
        pos = m.end()
    return toks


def _gen_index(name: str) -> int:
    if name == "x":
        return 1
    if name == "y":
        return 2
    return int(name[1:])


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse the bracket grammar; ``n`` defaults to max(2, largest index used)."""
    toks = _tokenize(text)
    i = 0
    end = len(text)

    def peek():
        return toks[i] if i < len(toks) else ("eof", "", end)

    def expect(val):
        nonlocal i
        tok = peek()
        if tok[:2] != ("op", val):
            raise WordSyntaxError(f"expected {val!r}, found {tok[1] or 'end of input'!r}", tok[2])
        i += 1

    def word(stop: set) -> list:
        nonlocal i
        out: list = []
        while True:
            tok = peek()
            if tok[0] == "eof" or (tok[0] == "op" and tok[1] in stop):
                return out
            out.extend(factor())

    def factor() -> list:
        nonlocal i
        body = atom()
        if peek()[:2] == ("op", "^"):
            i += 1
            tok = peek()
            if tok[0] != "int":
                raise WordSyntaxError("expected integer exponent", tok[2])
            i += 1
            k = int(tok[1])
            if k < 0:
                body = [(g, -e) for g, e in reversed(body)]
                k = -k
            body = body * k
        return body

    def atom() -> list:
        nonlocal i
        kind, val, pos = peek()
        if kind == "gen":
            i += 1
            return [(_gen_index(val), 1)]
        if kind == "int" and val == "1":
            i += 1
            return []
        if (kind, val) == ("op", "("):
            i += 1
            inner = word({")"})
            expect(")")
            return inner
        if (kind, val) == ("op", "["):
            i += 1
            u = word({","})
            expect(",")
            v = word({"]"})
            expect("]")
            inv = lambda s: [(g, -e) for g, e in reversed(s)]  # noqa: E731
            return u + v + inv(u) + inv(v)
        raise WordSyntaxError(f"unexpected {val or 'end of input'!r}", pos)

    syl = word(set())
    if i != len(toks):
        raise WordSyntaxError(f"unexpected {toks[i][1]!r}", toks[i][2])
    used = max((g for g, _ in syl), default=0)
    if n is None:
        n = max(2, used)
    elif used > n:
        raise GeneratorRangeError(f"generator g{used} used but only {n} generators declared")
    return Word.reduce(n, syl)


# --- algebra ------------------------------------------------------------


def concat(*words: Word) -> Word:
    out = words[0]
    for w in words[1:]:
        out = out * w
    return out


def invert(w: Word) -> Word:
    return w.inverse()


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


def power(w: Word, k: int) -> Word:
    return w ** k


def substitute(w: Word, mapping: Mapping[int, Word], n: int | None = None) -> Word:
    """Replace generator i by mapping[i] (others fixed), reducing after each splice."""
    if n is None:
        n = next(iter(mapping.values())).n if mapping else w.n
    target = n
    out = Word.identity(target)
    for g, e in w.syllables:
        img = mapping.get(g)
        if img is None:
            img = Word.gen(g, target)
        elif img.n != target:
            raise ValueError("substituted words must share a generator count")
        out = out * img ** e
    return out


def word_algebra(op: str, *args):
    ops = {
        "concat": concat,
        "invert": invert,
        "commutator": commutator,
        "power": power,
        "substitute": substitute,
    }
    if op not in ops:
        raise ValueError(f"unknown word operation {op!r}")
    return ops[op](*args)


def exponent_sums(w: Word) -> tuple[int, ...]:
    sums = [0] * w.n
    for g, e in w.syllables:
        sums[g - 1] += e
    return tuple(sums)


def basic_commutator(a: int, b: int) -> Word:
    """w_{a,b} = [x^a, y^b]."""
    return commutator(Word.gen(1, 2, a), Word.gen(2, 2, b))


def engel_word(n: int) -> Word:
    if n < 1:
        raise ValueError("Engel words are indexed from 1")
    x, y = Word.gen(1), Word.gen(2)
    w = commutator(x, y)
    for _ in range(n - 1):
        w = commutator(w, y)
    return w


def swap_generators(w: Word) -> Word:
    if w.n != 2:
        raise ValueError("swap is defined for two-letter words")
    return Word(2, tuple((3 - g, e) for g, e in w.syllables))


def invert_generator(w: Word, i: int) -> Word:
    return Word(w.n, tuple((g, -e if g == i else e) for g, e in w.syllables))


def cyclic_shift(w: Word, k: int = 1) -> Word:
    """Move the first k letters to the end (a conjugate of w)."""
    letters = w.letters()
    if not letters:
        return w
    k %= len(letters)
    return Word.reduce(w.n, letters[k:] + letters[:k])


# --- cyclic structure ---------------------------------------------------


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """(core, c) with w = c core c^-1 and core cyclically reduced.

    The first and last syllables of a core with two or more syllables use
    different generators.
    """
    syl = list(w.syllables)
    conj: list[Syllable] = []
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        (g, e), (_, f) = syl[0], syl[-1]
        if e + f == 0:
            conj.append((g, e))
            syl = syl[1:-1]
        else:
            conj.append((g, -f))
            syl = [(g, e + f)] + syl[1:-1]
            break
    return Word(w.n, tuple(syl)), Word.reduce(w.n, conj)


@dataclass(frozen=True)
class TwoLetterForm:
    """w = T^-1( c * x^a1 y^b1 ... x^ak y^bk * c^-1 ) for the recorded transforms T."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    conjugator: Word = field(default_factory=Word.identity)
    transforms: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.a) != len(self.b) or not self.a:
            raise ValueError("a and b must be nonempty and of equal length")
        if not all(self.a) or not all(self.b):
            raise ValueError("all exponents must be nonzero")

    @property
    def A(self) -> int:
        return sum(self.a)

    @property
    def B(self) -> int:
        return sum(self.b)

    def word(self) -> Word:
        syl = []
        for ai, bi in zip(self.a, self.b):
            syl += [(1, ai), (2, bi)]
        return Word(2, tuple(syl))

    def reconstruct(self) -> Word:
        w = self.conjugator * self.word() * self.conjugator.inverse()
        for t in reversed(self.transforms):
            if t == "swap":
                w = swap_generators(w)
            elif t == "invert":
                w = w.inverse()
            elif t.startswith("invert_g"):
                w = invert_generator(w, int(t[len("invert_g"):]))
        return w


class PurePowerError(ValueError):
    def __init__(self, generator: int, exponent: int):
        super().__init__(f"word is conjugate to g{generator}^{exponent}")
        self.generator = generator
        self.exponent = exponent


def normalize_two_letter(
    w: Word, swap: bool = False, invert: bool = False, invert_gens: Sequence[int] = ()
) -> TwoLetterForm:
    """Alternating form after the optional transforms and a cyclic reduction."""
    if w.n != 2:
        raise ValueError("two-letter form needs n = 2")
    if w.is_identity():
        raise ValueError("identity word has no alternating form")
    record = []
    if swap:
        w = swap_generators(w)
        record.append("swap")
    if invert:
        w = w.inverse()
        record.append("invert")
    for i in invert_gens:
        w = invert_generator(w, i)
        record.append(f"invert_g{i}")
    core, conj = cyclic_reduce(w)
    if len(core.syllables) == 1:
        raise PurePowerError(*core.syllables[0])
    if core.syllables[0][0] == 2:
        first = Word(2, core.syllables[:1])
        core = Word(2, core.syllables[1:] + core.syllables[:1])
        conj = conj * first
        record.append("cyclic_shift")
    elif not conj.is_identity():
        record.append("cyclic_shift")
    syl = core.syllables
    return TwoLetterForm(
        a=tuple(e for _, e in syl[0::2]),
        b=tuple(e for _, e in syl[1::2]),
        conjugator=conj,
        transforms=tuple(record),
    )


def proper_power_root(w: Word) -> tuple[Word, int]:
    """(v, k) with w = v^k, k maximal and v not a proper power."""
    if w.is_identity():
        raise ValueError("the identity is a power of everything")
    core, conj = cyclic_reduce(w)
    syl = core.syllables
    if len(syl) == 1:
        g, m = syl[0]
        root = Word.gen(g, w.n, 1 if m > 0 else -1)
        return conj * root * conj.inverse(), abs(m)
    r = len(syl)
    for d in range(1, r + 1):
        if r % d == 0 and all(syl[i] == syl[i % d] for i in range(r)):
            root = Word(w.n, syl[:d])
            return conj * root * conj.inverse(), r // d
    raise AssertionError("unreachable")
