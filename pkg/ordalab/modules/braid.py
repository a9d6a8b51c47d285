# coding=utf-8

"""
Braid words, handle reduction and the left order of the braid groups.

A word on n strands is a sequence of nonzero integers: i stands for the
Artin generator sigma_i and -i for its inverse. A sigma_i-handle is a
subword sigma_i^e v sigma_i^-e where v has no letter of index i or i - 1.
Reducing handles until none is left yields an empty word or one in which the
lowest generator occurs with a single sign; that sign orders the group.
"""

import logging
import re

from sympy.combinatorics import Permutation

from ordalab.exceptions import BadInput, CertificateViolation, InvalidWord, ResourceLimit
from ordalab.modules import common

log = logging.getLogger(__name__)

LESS = -1
EQUAL = 0
GREATER = 1

DEFAULT_BUDGET = 10 ** 6
STRANDS_REGEX = re.compile(r'^n=(\d+)$')


class BraidWord(object):
    """A word in the Artin generators of the braid group on `strands` strands."""

    def __init__(self, strands, letters=()):
        if strands < 2:
            raise InvalidWord("A braid needs at least 2 strands, got %d" % strands)
        letters = tuple(int(letter) for letter in letters)
        for letter in letters:
            if letter == 0 or abs(letter) > strands - 1:
                raise InvalidWord("Letter %d is not a generator on %d strands" % (letter, strands))
        self.strands = strands
        self.letters = letters

    @classmethod
    def parse(cls, text):
        """
        Parse "n=<strands> <letter> ...".

        >>> BraidWord.parse("n=3 1 2 -1").letters
        (1, 2, -1)
        """
        tokens = text.split()
        match = STRANDS_REGEX.match(tokens[0]) if tokens else None
        if not match:
            raise InvalidWord("A braid word starts with n=<strands>, got %r" % text)
        try:
            letters = [int(token) for token in tokens[1:]]
        except ValueError:
            raise InvalidWord("Braid letters are signed integers, got %r" % text)
        return cls(int(match.group(1)), letters)

    def _same_group(self, other):
        if self.strands != other.strands:
            raise BadInput("Braids on %d and %d strands" % (self.strands, other.strands))

    def __mul__(self, other):
        self._same_group(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.strands, [-letter for letter in reversed(self.letters)])

    def __pow__(self, n):
        word = self if n >= 0 else self.inverse()
        return BraidWord(self.strands, word.letters * abs(n))

    def __len__(self):
        return len(self.letters)

    def is_empty(self):
        return not self.letters

    def __eq__(self, other):
        return isinstance(other, BraidWord) and (self.strands, self.letters) == (other.strands, other.letters)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __repr__(self):
        return '<BraidWord(%s)>' % self

    def __str__(self):
        return ' '.join(['n=%d' % self.strands] + [str(letter) for letter in self.letters])


def generator(strands, index, sign=1):
    return BraidWord(strands, [index * sign])


def _find_handle(letters, start):
    """(left, right) of the handle with the leftmost right end at or after start, or None."""
    for right in range(max(start, 1), len(letters)):
        index = abs(letters[right])
        for left in range(right - 1, -1, -1):
            if abs(letters[left]) in (index, index - 1):
                if letters[left] == -letters[right]:
                    return left, right
                break
    return None


def handle_reduce(word, budget=DEFAULT_BUDGET):
    """
    Reduce handles until none is left, always taking the handle whose right
    end comes first. sigma_i^e v sigma_i^-e becomes v with every
    sigma_{i+1}^d replaced by sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.
    """
    letters = list(word.letters)
    steps = 0
    start = 0
    while True:
        handle = _find_handle(letters, start)
        if handle is None:
            break
        steps += 1
        if steps > budget:
            raise ResourceLimit("Handle reduction exceeded %d steps" % budget)
        left, right = handle
        index, e = abs(letters[left]), 1 if letters[left] > 0 else -1
        middle = []
        for letter in letters[left + 1:right]:
            if abs(letter) == index + 1:
                d = 1 if letter > 0 else -1
                middle.extend([-e * (index + 1), d * index, e * (index + 1)])
            else:
                middle.append(letter)
        letters[left:right + 1] = middle
        start = left
    log.debug("handle reduction of %d letters took %d steps", len(word), steps)
    return BraidWord(word.strands, letters)


def sigma_sign(word):
    """+1 for sigma-positive, -1 for sigma-negative, 0 for the empty word."""
    if not word.letters:
        return 0
    lowest = min(abs(letter) for letter in word.letters)
    signs = set(1 if letter > 0 else -1 for letter in word.letters if abs(letter) == lowest)
    if len(signs) != 1:
        raise CertificateViolation("sigma_%d occurs with both signs in %s" % (lowest, word))
    return signs.pop()


def is_trivial(word, budget=DEFAULT_BUDGET):
    return handle_reduce(word, budget).is_empty()


def braid_compare(u, v, budget=DEFAULT_BUDGET):
    """u < v exactly when u^-1 v reduces to a sigma-positive word."""
    u._same_group(v)
    sign = sigma_sign(handle_reduce(u.inverse() * v, budget))
    if sign == 0:
        return EQUAL
    return LESS if sign > 0 else GREATER


def exponent_sum(word):
    return sum(1 if letter > 0 else -1 for letter in word.letters)


def center_generator(n):
    """(sigma_1 ... sigma_{n-1})^n, which generates the center."""
    if n < 2:
        raise BadInput("The braid group needs n >= 2, got %d" % n)
    return BraidWord(n, list(range(1, n)) * n)


def commutes_with_generators(word, r=1, budget=DEFAULT_BUDGET):
    """Whether word commutes with sigma_i^r for every i."""
    if r < 1:
        raise BadInput("r must be positive, got %d" % r)
    for index in range(1, word.strands):
        power = generator(word.strands, index) ** r
        if not is_trivial(word * power * word.inverse() * power.inverse(), budget):
            log.debug("%s does not commute with sigma_%d^%d", word, index, r)
            return False
    return True


def permutation_projection(word):
    """The permutation of the strand ends, sigma_i swapping positions i and i + 1."""
    image = list(range(word.strands))
    for letter in word.letters:
        i = abs(letter) - 1
        image[i], image[i + 1] = image[i + 1], image[i]
    return Permutation(image)


class BraidModule(common.Module):
    """Braid word problem, order and invariants (`braid ...`)."""

    def reduce(self, word):
        reduced = handle_reduce(word, self.config.budget)
        return self.request('braid reduce', [str(word)], str(reduced),
                            certificate={'sign': sigma_sign(reduced),
                                         'exponent_sum': exponent_sum(reduced),
                                         'permutation': str(permutation_projection(reduced))})

    def compare(self, u, v):
        outcome = braid_compare(u, v, self.config.budget)
        return self.request('braid compare', [str(u), str(v)],
                            {LESS: 'less', EQUAL: 'equal', GREATER: 'greater'}[outcome],
                            certificate={'reduced': str(handle_reduce(u.inverse() * v, self.config.budget))})

    def trivial(self, word):
        return self.request('braid trivial', [str(word)], is_trivial(word, self.config.budget),
                            certificate={'permutation': str(permutation_projection(word)),
                                         'exponent_sum': exponent_sum(word)})

    def expsum(self, word):
        return self.request('braid expsum', [str(word)], exponent_sum(word))

    def center(self, n):
        word = center_generator(n)
        return self.request('braid center', [n], str(word), certificate={'exponent_sum': exponent_sum(word)})

    def commutes(self, word, r=1):
        return self.request('braid commutes', [str(word), r], commutes_with_generators(word, r, self.config.budget))

    def perm(self, word):
        permutation = permutation_projection(word)
        return self.request('braid perm', [str(word)], permutation.array_form,
                            certificate={'cycles': str(permutation)})
