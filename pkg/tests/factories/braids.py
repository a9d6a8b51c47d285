# coding=utf-8

from ordalab.modules.braid import BraidWord


def braid(fake, strands, length):
    """A random braid word on `strands` strands with exactly `length` letters."""
    letters = []
    for _ in range(length):
        letter = fake.random_int(min=1, max=strands - 1)
        letters.append(letter if fake.boolean() else -letter)
    return BraidWord(strands, letters)
