# coding=utf-8

"""
Small helpers shared by the modules: rational literals, group words and the
key conversions used when rendering reports.
"""

import re
from fractions import Fraction

from ordalab.exceptions import BadInput, InvalidWord


RATIONAL_REGEX = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')
LETTER_REGEX = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)(?:\^([+-]?\d+))?$')
IDENTITY_WORD = 'id'


def camel_to_snake(string):
    """
    Converts a camelCaseString to a snake_case_string.

    >>> camel_to_snake("fooBarBaz")
    'foo_bar_baz'
    """
    return re.sub('([A-Z]+)', r'_\1', string).lower()


def snake_to_camel(value):
    """
    Converts a snake_case_string to a camelCaseString.

    >>> snake_to_camel("check_depth")
    'checkDepth'
    """
    camel = "".join(word.title() for word in value.split("_"))
    return value[:1].lower() + camel[1:]


def parse_rational(value):
    """
    Parse a rational literal of the form "p/q" or "p".

    >>> parse_rational("3/6")
    Fraction(1, 2)
    >>> parse_rational("-4")
    Fraction(-4, 1)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)

    match = RATIONAL_REGEX.match(str(value))
    if not match:
        raise BadInput("Invalid rational %r" % (value,))
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise BadInput("Zero denominator in %r" % (value,))
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value):
    """
    Render an exact rational.

    >>> format_rational(Fraction(6, 4))
    '3/2'
    >>> format_rational(Fraction(-2))
    '-2'
    """
    return str(Fraction(value))


def invert_word(word):
    """
    Return the formal inverse of a word given as (generator, sign) letters.

    >>> invert_word(((0, 1), (1, -1)))
    ((1, 1), (0, -1))
    """
    return tuple((index, -sign) for index, sign in reversed(word))


def free_reduce(word):
    """
    Cancel adjacent inverse letters.

    >>> free_reduce(((0, 1), (1, 1), (1, -1), (0, -1), (1, 1)))
    ((1, 1),)
    """
    stack = []
    for letter in word:
        if stack and stack[-1] == (letter[0], -letter[1]):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def reduced_words(count, max_length):
    """
    Yield all freely reduced words over `count` generators and their
    inverses, shortest first. The empty word comes first.

    >>> len(list(reduced_words(2, 2)))
    17
    """
    letters = [(index, sign) for index in range(count) for sign in (1, -1)]
    level = [()]
    yield ()
    for _ in range(max_length):
        following = []
        for word in level:
            for letter in letters:
                if word and word[-1] == (letter[0], -letter[1]):
                    continue
                extended = word + (letter,)
                following.append(extended)
                yield extended
        level = following


def positive_words(count, max_length):
    """
    Yield all nonempty positive words over `count` generators, shortest first.

    >>> len(list(positive_words(2, 3)))
    14
    """
    level = [()]
    for _ in range(max_length):
        level = [word + ((index, 1),) for word in level for index in range(count)]
        for word in level:
            yield word


def word_maps(gens, max_length, identity, positive=False):
    """
    Yield (word, map) pairs for all words up to `max_length`, computing each
    map incrementally from its prefix. The map of a word is the composite of
    its letters, the rightmost letter acting first.
    """
    inverses = [gen.inverse() for gen in gens]
    level = [((), identity)]
    yield (), identity
    for _ in range(max_length):
        following = []
        for word, value in level:
            for index in range(len(gens)):
                for sign in (1, -1):
                    if positive and sign < 0:
                        continue
                    if word and word[-1] == (index, -sign):
                        continue
                    letter = gens[index] if sign > 0 else inverses[index]
                    item = (word + ((index, sign),), value * letter)
                    following.append(item)
                    yield item
        level = following


def evaluate_word(word, gens, identity):
    """Compose the maps named by a word; the rightmost letter acts first."""
    value = identity
    for index, sign in word:
        value = value * (gens[index] if sign > 0 else gens[index].inverse())
    return value


def format_word(word, names):
    """
    Render a word, collecting runs of one generator into powers.

    >>> format_word(((0, -1), (0, -1), (1, 1)), ['x0', 'x1'])
    'x0^-2 x1'
    >>> format_word((), ['x0'])
    'id'
    """
    if not word:
        return IDENTITY_WORD

    parts = []
    runs = []
    for index, sign in word:
        if runs and runs[-1][0] == index and (runs[-1][1] > 0) == (sign > 0):
            runs[-1][1] += sign
        else:
            runs.append([index, sign])
    for index, exponent in runs:
        parts.append(names[index] if exponent == 1 else '%s^%d' % (names[index], exponent))
    return ' '.join(parts)


def parse_word(text, names):
    """
    Parse a word such as "x0^-2 x1" or "d.d" over the given generator names.

    >>> parse_word("x0^-2 x1", ['x0', 'x1'])
    ((0, -1), (0, -1), (1, 1))
    >>> parse_word("id", ['x0'])
    ()
    """
    letters = []
    for token in re.split(r'[\s.]+', text.strip()):
        if not token or token == IDENTITY_WORD:
            continue
        match = LETTER_REGEX.match(token)
        if not match or match.group(1) not in names:
            raise InvalidWord("Unknown generator in %r (known: %s)" % (token, ', '.join(names)))
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if exponent == 0:
            raise InvalidWord("Zero exponent in %r" % token)
        index = names.index(match.group(1))
        sign = 1 if exponent > 0 else -1
        letters.extend([(index, sign)] * abs(exponent))
    return tuple(letters)
