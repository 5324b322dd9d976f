'''
Materialized field embeddings between towers that share a common base.
'''

import logging

import numpy as np

from .construct import primitive_element
from .error import EmbeddingNotFoundError, FieldMismatchError, NotInTowerError
from .field import FieldDesc, FieldElem

class Embedding:
    '''
    Map source -> target fixed by the image of source.gen. Coefficients over
    source.base are carried by base_map, which defaults to lifting through
    the target's own tower.
    '''
    def __init__(self, source: FieldDesc, target: FieldDesc, image: FieldElem, base_map=None):
        target._check(image)
        self.source = source
        self.target = target
        self.image = image
        if base_map is None and source.base is not None and not target.in_tower(source.base):
            raise NotInTowerError(source.base.name, target.name)
        self.base_map = base_map or target.lift

    def __call__(self, x: FieldElem) -> FieldElem:
        if x.field is not self.source:
            raise FieldMismatchError(x.field.name, self.source.name)
        if self.source.base is None:
            return self.target(int(x.value))
        acc = self.target.zero
        for c in reversed(x.value):
            acc = acc * self.image + self.base_map(FieldElem(self.source.base, c))
        return acc

    def is_root(self) -> bool:
        '''The image is a root of the source modulus'''
        if self.source.base is None:
            return True
        acc = self.target.zero
        for c in reversed(self.source.modulus):
            acc = acc * self.image + self.base_map(FieldElem(self.source.base, c))
        return acc.is_zero()

    def verify(self, rng: np.random.Generator, samples: int = 20) -> bool:
        if not self.is_root():
            return False
        for _ in range(samples):
            a = self.source.random_element(rng)
            b = self.source.random_element(rng)
            if self(a + b) != self(a) + self(b) or self(a * b) != self(a) * self(b):
                return False
        return True

    def then(self, other: "Embedding") -> "Embedding":
        '''Composite x -> other(self(x))'''
        if other.source is not self.target:
            raise FieldMismatchError(self.target.name, other.source.name)
        base_map = None if self.source.base is None else (lambda c: other(self.base_map(c)))
        return Embedding(self.source, other.target, other(self.image), base_map=base_map)

    def __repr__(self):
        return "Embedding({} -> {}, gen -> {})".format(self.source.name, self.target.name, self.image)


def find_embedding(source: FieldDesc, target: FieldDesc) -> Embedding:
    '''
    Locate a root of the source modulus in target among the powers of an
    element generating the copy of source* inside target*.
    '''
    if target.in_tower(source):
        return Embedding(source, target, target.lift(source.gen))
    if (target.order - 1) % (source.order - 1) != 0:
        raise EmbeddingNotFoundError(source.name, target.name)
    if source.base is not None and not target.in_tower(source.base):
        raise NotInTowerError(source.base.name, target.name)
    gamma = primitive_element(target)
    h = gamma ** ((target.order - 1) // (source.order - 1))
    candidate = target.one
    for _ in range(source.order - 1):
        emb = Embedding(source, target, candidate)
        if emb.is_root():
            logging.debug("Embedded {} into {} via {}".format(source.name, target.name, candidate))
            return emb
        candidate = candidate * h
    raise EmbeddingNotFoundError(source.name, target.name)
