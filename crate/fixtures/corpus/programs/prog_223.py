# fixture program 223
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
customer = {'name': 'Berlin', 'age': 7, 'city': 'vienna'}
customer['age'] += 1
print(customer['name'])
line_sep = '\t'
joined = line_sep.join(['a', 'b'])
body_bytes = 'Castle vector bridge pepper harbor butter candle orange python!'.encode()
decoded = body_bytes.decode()
kwargs = {'epochs': 200, 'name': 'Rome', 'seed': 246396, 'verbose': False}
kwargs['debug'] = False
use_cache = False
use_cache = not use_cache
transform = helper
print(callable(transform))
output = transform(4)
history = collections.deque([], maxlen=10)
print(len(history))
estimator = DecisionTree(depth=4)
prediction = estimator.predict([1, 2, 3])
estimator = LinearModel(3)
x = 94.6
xy = (-9, 13)
tmp = 'Saddle report'
for loop_round in range(2):
    epochs = 5
    print(epochs)
