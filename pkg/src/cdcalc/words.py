"""Letters and words over signed addresses.

A letter is an address (a string over {0, 1}; "" is the root address phi)
together with a sign.  A word is a plain tuple of letters, so concatenation
is tuple addition and the empty word is ().  No free reduction is ever
performed implicitly.

Text format: `eps` for the empty word, otherwise letters joined by dots;
a letter is an optional `-` followed by `e` (the root) or a 01-string,
e.g. `1.e.0` and `-1` for the inverse of the letter at address 1.
"""

from typing import NamedTuple

from .errors import ParseError


class Letter(NamedTuple):
    addr: str
    sign: int

    def inverse(self):
        return Letter(self.addr, -self.sign)


Word = tuple  # tuple of Letter


def pos_word(addresses) -> Word:
    """The positive word made of the given addresses, in order."""
    return tuple(Letter(a, 1) for a in addresses)


def is_positive(w: Word) -> bool:
    return all(l.sign > 0 for l in w)


def positive_addresses(w: Word):
    """The address sequence of a positive word; rejects negative letters."""
    if not is_positive(w):
        raise ValueError(f"expected a positive word, got {render_word(w)}")
    return tuple(l.addr for l in w)


def inverse(w: Word) -> Word:
    """The formal inverse: letters reversed, every sign flipped."""
    return tuple(Letter(l.addr, -l.sign) for l in reversed(w))


def shift(gamma: str, w: Word) -> Word:
    """Prefix `gamma` to every letter's address, keeping signs and length."""
    return tuple(Letter(gamma + l.addr, l.sign) for l in w)


def render_address(a: str) -> str:
    return a if a else "e"


def render_word(w: Word) -> str:
    if not w:
        return "eps"
    return ".".join(("-" if l.sign < 0 else "") + render_address(l.addr) for l in w)


def parse_address(text: str) -> str:
    """Parse a single address: `e` for the root, else a nonempty 01-string."""
    if text == "e":
        return ""
    if text and all(c in "01" for c in text):
        return text
    raise ParseError(f"bad address {text!r}: expected 'e' or a nonempty 01-string", 0)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "eps":
        return ()
    letters = []
    pos = 0
    for chunk in text.split("."):
        body = chunk
        sign = 1
        if body.startswith("-"):
            sign = -1
            body = body[1:]
        if body == "e":
            addr = ""
        elif body and all(c in "01" for c in body):
            addr = body
        else:
            raise ParseError(f"bad letter {chunk!r}", pos)
        letters.append(Letter(addr, sign))
        pos += len(chunk) + 1
    return tuple(letters)
